#include "newt/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "newt/errors.hpp"

namespace newt {

NewtonDiagram diagram_of_points(std::vector<Point> pts) {
    if (pts.empty()) throw error("diagram of an empty support");
    // Pareto-minimal staircase: for each alpha the least beta, then drop
    // points dominated from the left.
    std::map<long long, long long> min_beta;
    for (auto& [a, b] : pts) {
        auto it = min_beta.find(a);
        if (it == min_beta.end() || b < it->second) min_beta[a] = b;
    }
    std::vector<Point> stair;
    long long best = -1;
    for (auto& [a, b] : min_beta) {
        if (best >= 0 && b >= best) continue;
        stair.emplace_back(a, b);
        best = b;
    }
    // Lower-left convex chain: keep only vertices where the slope strictly
    // increases (towards zero) going right.
    std::vector<Point> hull;
    for (auto& p : stair) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull.back();
            // b is redundant iff it lies on or above segment a-p.
            __int128 cross = static_cast<__int128>(b.first - a.first) * (p.second - a.second) -
                             static_cast<__int128>(p.first - a.first) * (b.second - a.second);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return NewtonDiagram{std::move(hull)};
}

NewtonDiagram diagram(const IdealGens& I) {
    std::vector<Point> pts;
    for (auto& g : I.full_gens())
        for (auto& [m, c] : g.terms()) pts.emplace_back(m.a, m.b);
    return diagram_of_points(std::move(pts));
}

std::vector<Face> faces(const NewtonDiagram& d) {
    std::vector<Face> out;
    for (std::size_t i = 1; i < d.vertices.size(); ++i) {
        const Point o = d.vertices[i - 1];
        const Point e = d.vertices[i];
        long long da = e.first - o.first;
        long long db = o.second - e.second;
        long long g = std::gcd(da, db);
        Face f;
        f.q = da / g;
        f.p = db / g;
        f.N = f.p * o.first + f.q * o.second;
        f.origin = o;
        f.end = e;
        f.delta = g + 1;
        out.push_back(f);
    }
    return out;
}

long long height(const NewtonDiagram& d) {
    return d.vertices.front().second - d.vertices.back().second;
}

InitialDecomposition initial_ideal(const IdealGens& I, const Face& S) {
    auto fs = faces(diagram(I));
    if (std::find(fs.begin(), fs.end(), S) == fs.end()) throw face_mismatch();
    InitialDecomposition out;
    const long long delta = S.delta;
    std::vector<BPoly> G; // per generator, homogeneous of degree delta-1 in (u,v)
    for (auto& g : I.full_gens()) {
        BPoly face_part, Gi;
        for (auto& [m, c] : g.terms()) {
            if (S.p * m.a + S.q * m.b != S.N) continue;
            face_part.add_term(m.a, m.b, c);
            long long j = (m.a - S.origin.first) / S.q;
            Gi.add_term(j, delta - 1 - j, c);
        }
        out.face_parts.push_back(face_part);
        G.push_back(Gi);
    }
    std::vector<BPoly> nonzero;
    for (auto& g : G)
        if (!g.is_zero()) nonzero.push_back(g);
    BPoly common = gcd_many(nonzero);
    long long ua = common.x_content(), vb = common.y_content();
    BPoly core = common.unshift(ua, vb);
    // Make the face polynomial monic in its second variable.
    Rat lead = core.coeff(0, core.deg_y());
    out.F = core * (Rat(1) / lead);
    out.a = S.origin.first + S.q * ua;
    out.b = S.end.second + S.p * vb;
    {
        std::vector<Rat> f1x(out.F.deg_y() + 1, Rat(0));
        for (auto& [m, c] : out.F.terms()) f1x[m.b] = c;
        out.F1X = UPoly(std::move(f1x));
    }
    std::vector<BPoly> ks;
    for (auto& g : nonzero) ks.push_back(g.divide_exact(common).normalized());
    std::sort(ks.begin(), ks.end(), [](const BPoly& x, const BPoly& y) {
        return x.terms() < y.terms();
    });
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    bool principal = true;
    for (auto& k : ks) principal = principal && k.is_constant();
    if (principal) {
        out.k_list = {BPoly(Rat(1))};
        out.d = 0;
    } else {
        out.k_list = std::move(ks);
        auto hom_deg = [](const BPoly& k) {
            long long deg = -1;
            for (auto& [m, c] : k.terms()) {
                if (deg < 0) deg = m.a + m.b;
                if (m.a + m.b != deg) throw cross_check_error("inhomogeneous initial cofactor");
            }
            return deg;
        };
        out.d = hom_deg(out.k_list.front());
        for (auto& k : out.k_list)
            if (hom_deg(k) != out.d) throw cross_check_error("initial ideal cofactor degrees differ");
    }
    return out;
}

bool check_height_formula(const IdealGens& I, bool strict) {
    NewtonDiagram d = diagram(I);
    long long h = height(d);
    long long sum = 0;
    for (auto& S : faces(d)) {
        InitialDecomposition dec = initial_ideal(I, S);
        long long mass = 0;
        if (!dec.F1X.is_constant()) {
            RationalRoots rr = rational_roots(dec.F1X);
            for (auto& [r, m] : rr.roots) mass += m;
            if (!rr.residual.is_constant()) {
                if (strict) throw ground_field_error(rr.residual.to_string());
                mass += rr.residual.degree();
            }
        }
        sum += S.p * (dec.d + mass);
    }
    return h == sum;
}

long long polygon_area2(const NewtonDiagram& d) {
    if (d.vertices.front().first != 0 || d.vertices.back().second != 0) throw unbounded_region();
    long long s = 0;
    for (auto& S : faces(d)) s += S.N * (S.delta - 1);
    return s;
}

long long polygon_area2_anchored(const NewtonDiagram& d, long long N_anchor) {
    if (d.vertices.front().first != N_anchor || d.vertices.back().second != 0)
        throw unbounded_region();
    long long s = 0;
    for (auto& S : faces(d)) s += (S.N - N_anchor * S.p) * (S.delta - 1);
    return s;
}

std::string diagram_to_json(const IdealGens& I) {
    NewtonDiagram d = diagram(I);
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (auto& [a, b] : d.vertices) j["vertices"].push_back({a, b});
    j["faces"] = nlohmann::ordered_json::array();
    for (auto& S : faces(d)) {
        InitialDecomposition dec = initial_ideal(I, S);
        nlohmann::ordered_json jf;
        jf["p"] = S.p;
        jf["q"] = S.q;
        jf["N"] = S.N;
        jf["delta"] = S.delta;
        jf["d"] = dec.d;
        j["faces"].push_back(jf);
    }
    return j.dump();
}

} // namespace newt
