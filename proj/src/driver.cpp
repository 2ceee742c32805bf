#include "newt/driver.hpp"

#include <algorithm>

#include "newt/diagram.hpp"
#include "newt/errors.hpp"

namespace newt {

namespace {

struct Ctx {
    const RunConfig& cfg;
    std::vector<ProcessEntry> entries;
    std::vector<long long> area2_parts;
    // per dicritical entry, keyed by its map sequence: decoration N of the
    // cofactor part as seen by the recursion itself
    std::vector<std::pair<std::vector<NewtonMap>, long long>> dic_N;
};

void assert_height_identity(const IdealGens& I) {
    if (!check_height_formula(I, false))
        throw cross_check_error("face-polynomial height identity on a polygon");
}

std::vector<std::pair<Rat, long long>> face_roots(const InitialDecomposition& dec,
                                                  const RunConfig& cfg) {
    std::vector<std::pair<Rat, long long>> out;
    if (dec.F1X.is_constant()) return out;
    RationalRoots rr = rational_roots(dec.F1X);
    if (!rr.residual.is_constant()) throw ground_field_error(rr.residual.to_string());
    (void)cfg;
    return rr.roots;
}

// Recursion over a finite-codimension, content-free ideal. `xshift` is the
// accumulated x-power of the honest transform (anchors N decorations).
void ideal_drive(const IdealGens& J, long long xshift, std::vector<NewtonMap> maps, Ctx& ctx,
                 long long level) {
    if (level > ctx.cfg.max_depth) throw depth_guard_exceeded(ctx.cfg.max_depth);
    assert_height_identity(J);
    NewtonDiagram dia = diagram(J);
    auto fs = faces(dia);
    if (fs.empty()) throw cross_check_error("finite-codimension recursion met an empty polygon");
    if (dia.vertices.front().first != 0 || dia.vertices.back().second != 0)
        throw cross_check_error("finite-codimension polygon must touch both axes");
    ctx.area2_parts.push_back(polygon_area2(dia));
    for (auto& S : fs) {
        InitialDecomposition dec = initial_ideal(J, S);
        if (dec.d >= 1) {
            ProcessEntry e;
            e.kind = ProcessEntry::Kind::dicritical;
            e.maps = maps;
            e.maps.push_back(make_generic_map(S.p, S.q));
            e.d = dec.d;
            ctx.dic_N.emplace_back(e.maps, S.N + S.p * xshift);
            ctx.entries.push_back(e);
        }
        for (auto& [mu, nu] : face_roots(dec, ctx.cfg)) {
            NewtonMap m = make_map(S.p, S.q, mu);
            auto [n0, J1] = apply_map_ideal(J, m);
            if (J1.content_b() != 0)
                throw cross_check_error("y-content inside the finite-codimension recursion");
            if (height(diagram(J1)) > nu)
                throw cross_check_error("transform height exceeds the root multiplicity");
            std::vector<NewtonMap> next = maps;
            next.push_back(m);
            ideal_drive(J1, S.p * xshift + n0, std::move(next), ctx, level + 1);
        }
    }
}

// Recursion over one squarefree factor of the principal part, carrying its
// exponent. `w` is content-free, squarefree and vanishes at the origin.
void curve_drive(const BPoly& w, long long mult, std::vector<NewtonMap> maps, Ctx& ctx,
                 long long level) {
    if (level > ctx.cfg.max_depth) throw depth_guard_exceeded(ctx.cfg.max_depth);
    IdealGens one({w});
    assert_height_identity(one);
    for (auto& S : faces(diagram(one))) {
        InitialDecomposition dec = initial_ideal(one, S);
        auto roots = face_roots(dec, ctx.cfg);
        if (roots.empty())
            throw cross_check_error("face of a non-unit curve without roots");
        for (auto& [mu, nu] : roots) {
            NewtonMap m = make_map(S.p, S.q, mu);
            auto [k, w1] = apply_map_poly(w, m);
            long long l = w1.y_content();
            std::vector<NewtonMap> next = maps;
            next.push_back(m);
            if (l > 0) {
                if (l != 1)
                    throw cross_check_error("squarefree transform with repeated axis branch");
                ProcessEntry e;
                e.kind = ProcessEntry::Kind::branch;
                e.maps = next;
                e.certificate = BPoly::var_y();
                e.nu = mult;
                ctx.entries.push_back(e);
            }
            BPoly w2 = w1.unshift(0, l);
            if (w2.is_local_unit()) continue;
            if (height(diagram(IdealGens({w1}))) > nu)
                throw cross_check_error("transform height exceeds the root multiplicity");
            if (nu == 1) {
                // Simple root: the transform carries a single branch y + h(x).
                ProcessEntry e;
                e.kind = ProcessEntry::Kind::branch;
                e.maps = next;
                e.certificate = w2;
                e.nu = mult;
                ctx.entries.push_back(e);
            } else {
                curve_drive(w2, mult, next, ctx, level + 1);
            }
        }
    }
}

} // namespace

long long valuation_direct(const BPoly& f, const std::vector<NewtonMap>& prefix, long long face_p,
                           long long face_m) {
    BPoly cur = f;
    long long xpow = 0;
    for (auto& m : prefix) {
        auto [k, nxt] = apply_map_poly(cur, m);
        xpow = m.p * xpow + k;
        cur = nxt;
    }
    return face_p * xpow + generic_x_order(cur, face_p, face_m);
}

AnalysisResult run(const IdealGens& I, const RunConfig& cfg) {
    AnalysisResult res;
    res.a = I.content_a();
    res.b = I.content_b();
    if (I.any_unit_generator()) {
        if (res.a == 0 && res.b == 0) throw trivial_ideal();
        // I = x^a y^b * (1): monomial ideal.
        res.process.x_content = res.a;
        res.process.y_content = res.b;
        res.tree = reconstruct_tree(res.process);
        res.depth = 0;
        return res;
    }
    Ctx ctx{cfg, {}, {}, {}};

    BPoly g = gcd_many(I.gens());
    if (!g.is_constant()) {
        for (auto& [factor, m] : squarefree_decompose(g)) {
            if (factor.is_local_unit()) continue; // unit of Q[[x,y]], no local content
            if (factor == BPoly::var_x() || factor == BPoly::var_y())
                throw cross_check_error("monomial content left inside the generator gcd");
            res.curve_factors.push_back(factor);
            res.curve_mults.push_back(m);
            curve_drive(factor, m, {}, ctx, 1);
        }
    }
    std::vector<BPoly> cof;
    for (auto& f : I.gens()) cof.push_back(f.divide_exact(g));
    IdealGens cofactor(cof);
    bool cof_trivial = cofactor.any_unit_generator();
    if (!cof_trivial) {
        if (cofactor.content_a() != 0 || cofactor.content_b() != 0)
            throw cross_check_error("cofactor of the generator gcd has monomial content");
        res.cofactor_gens = cofactor.gens();
        ideal_drive(cofactor, 0, {}, ctx, 1);
    }
    res.finite_codim = !cof_trivial && res.curve_factors.empty() && res.a == 0 && res.b == 0;

    res.process.x_content = res.a;
    res.process.y_content = res.b;
    res.process.entries = std::move(ctx.entries);
    res.process.sort_canonical();
    res.area2_parts = std::move(ctx.area2_parts);
    res.depth = process_depth(res.process);

    res.tree = reconstruct_tree(res.process);
    if (res.tree.width() != res.depth)
        throw cross_check_error("tree width differs from the recursion depth");
    auto [ok, bad] = check_N_decorations(res.tree);
    if (!ok) throw cross_check_error("decoration identity at vertex " + std::to_string(bad));

    // Independent check of every N decoration: the minimum generator
    // valuation at the vertex (the definition) must reproduce the value the
    // path-product formula assigned.
    for (auto& v : res.tree.vertices) {
        long long direct = -1;
        for (auto& f : I.full_gens()) {
            long long val = valuation_direct(f, v.prefix, v.face_p, v.face_m);
            direct = direct < 0 ? val : std::min(direct, val);
        }
        if (direct != v.N)
            throw cross_check_error("vertex decoration vs direct valuation at vertex " +
                                    std::to_string(v.id));
    }
    // Dicritical decorations, read off the validated tree; in the pure
    // finite-codimension case they must also match the recursion's records.
    for (auto& e : res.process.entries) {
        if (!e.is_dicritical()) continue;
        std::vector<NewtonMap> pre(e.maps.begin(), e.maps.end() - 1);
        int vid = res.tree.find_vertex(pre, e.maps.back().p, e.maps.back().q);
        if (vid < 0) throw cross_check_error("dicritical vertex missing from the tree");
        res.dicritical_N.push_back(res.tree.vertices[vid].N);
        if (res.finite_codim) {
            bool found = false;
            for (auto& [key, n] : ctx.dic_N)
                if (key == e.maps) {
                    found = true;
                    if (n != res.tree.vertices[vid].N)
                        throw cross_check_error("dicritical decoration mismatch");
                }
            if (!found) throw cross_check_error("unrecorded dicritical entry");
        }
    }
    return res;
}

long long depth_of(const IdealGens& I, const RunConfig& cfg) { return run(I, cfg).depth; }

bool is_nondegenerate(const IdealGens& I, const RunConfig& cfg) { return run(I, cfg).depth <= 1; }

bool same_integral_closure(const IdealGens& I, const IdealGens& J, const RunConfig& cfg) {
    return same_process(run(I, cfg).process, run(J, cfg).process);
}

bool nondegenerate_finite_codim_fast(const IdealGens& I) {
    if (I.content_a() != 0 || I.content_b() != 0) throw not_finite_codim();
    if (I.any_unit_generator()) throw not_finite_codim();
    if (!gcd_many(I.gens()).is_constant()) throw not_finite_codim();
    for (auto& S : faces(diagram(I)))
        if (!initial_ideal(I, S).F1X.is_constant()) return false;
    return true;
}

} // namespace newt
