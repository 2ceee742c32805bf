#include "newt/process.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "newt/diagram.hpp"
#include "newt/errors.hpp"
#include "newt/polyops.hpp"

namespace newt {

namespace {

std::string maps_to_string(const std::vector<NewtonMap>& maps) {
    std::string out;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (i) out += ", ";
        out += "sigma" + maps[i].to_string();
    }
    return out;
}

int compare_entries(const ProcessEntry& a, const ProcessEntry& b) {
    int c = compare_map_seq(a.maps, b.maps);
    if (c) return c;
    if (a.kind != b.kind) return a.is_dicritical() ? -1 : 1;
    if (a.is_dicritical()) {
        if (a.d != b.d) return a.d < b.d ? -1 : 1;
        return 0;
    }
    if (a.certificate.terms() != b.certificate.terms())
        return a.certificate.terms() < b.certificate.terms() ? -1 : 1;
    if (a.nu != b.nu) return a.nu < b.nu ? -1 : 1;
    return 0;
}

} // namespace

std::string ProcessEntry::to_string() const {
    std::string out = "(" + maps_to_string(maps) + "; ";
    if (is_dicritical()) {
        out += std::to_string(d);
    } else {
        out += "(" + certificate.to_string() + ")";
        if (nu != 1) out += "^" + std::to_string(nu);
    }
    return out + ")";
}

void NewtonProcess::sort_canonical() {
    std::sort(entries.begin(), entries.end(),
              [](const ProcessEntry& a, const ProcessEntry& b) { return compare_entries(a, b) < 0; });
}

std::string NewtonProcess::to_string() const {
    std::string out = "{";
    bool first = true;
    if (x_content) {
        out += "x^" + std::to_string(x_content);
        first = false;
    }
    if (y_content) {
        if (!first) out += ", ";
        out += "(; y^" + std::to_string(y_content) + ")";
        first = false;
    }
    for (auto& e : entries) {
        if (!first) out += ", ";
        out += e.to_string();
        first = false;
    }
    return out + "}";
}

bool branches_equal(const BPoly& c1, const BPoly& c2) {
    BPoly g = gcd(c1, c2);
    return g.eval(Rat(0), Rat(0)) == 0;
}

namespace {

bool dicritical_match(const ProcessEntry& a, const ProcessEntry& b) {
    if (!a.is_dicritical() || !b.is_dicritical()) return false;
    return a.maps == b.maps; // GENERIC last maps compare by (p,q) only
}

bool branch_match(const ProcessEntry& a, const ProcessEntry& b) {
    if (a.is_dicritical() || b.is_dicritical()) return false;
    return a.maps == b.maps && branches_equal(a.certificate, b.certificate);
}

} // namespace

NewtonProcess merge_processes_tagged(const NewtonProcess& p1, const NewtonProcess& p2,
                                     std::vector<long long>& from_second) {
    NewtonProcess out;
    out.x_content = p1.x_content + p2.x_content;
    out.y_content = p1.y_content + p2.y_content;
    std::vector<long long> tag;
    out.entries = p1.entries;
    tag.assign(out.entries.size(), 0);
    for (auto& e : p2.entries) {
        bool merged = false;
        for (std::size_t i = 0; i < out.entries.size(); ++i) {
            auto& have = out.entries[i];
            if (dicritical_match(have, e)) {
                have.d += e.d;
                tag[i] += e.d;
                merged = true;
                break;
            }
            if (branch_match(have, e)) {
                have.nu += e.nu;
                tag[i] += e.nu;
                merged = true;
                break;
            }
        }
        if (!merged) {
            out.entries.push_back(e);
            tag.push_back(e.is_dicritical() ? e.d : e.nu);
        }
    }
    // Canonical order, keeping tags aligned.
    std::vector<std::size_t> idx(out.entries.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return compare_entries(out.entries[i], out.entries[j]) < 0;
    });
    NewtonProcess sorted;
    sorted.x_content = out.x_content;
    sorted.y_content = out.y_content;
    from_second.clear();
    for (std::size_t i : idx) {
        sorted.entries.push_back(out.entries[i]);
        from_second.push_back(tag[i]);
    }
    return sorted;
}

NewtonProcess merge_processes(const NewtonProcess& p1, const NewtonProcess& p2) {
    std::vector<long long> tag;
    return merge_processes_tagged(p1, p2, tag);
}

bool branch_is_axis(const BPoly& cert) { return cert.y_content() >= 1; }

NewtonMap branch_next_map(const BPoly& cert) {
    if (branch_is_axis(cert)) throw error("axis branch has no further maps");
    // The certificate carries one local branch y + h(x), h != 0: the top face
    // of its polygon runs from (0,1) to (s,0) and its face polynomial is
    // linear, so the next root is rational.
    IdealGens one({cert});
    auto fs = faces(diagram(one));
    if (fs.empty() || fs.front().origin.second != 1)
        throw cross_check_error("branch certificate without Weierstrass degree 1");
    const Face& S = fs.front();
    InitialDecomposition dec = initial_ideal(one, S);
    RationalRoots rr = rational_roots(dec.F1X);
    if (rr.roots.size() != 1 || rr.roots.front().second != 1)
        throw cross_check_error("branch certificate face polynomial is not simple");
    return make_map(S.p, S.q, rr.roots.front().first);
}

BPoly branch_advance(const BPoly& cert, const NewtonMap& m) {
    return apply_map_poly(cert, m).second;
}

namespace {

// Refine entry a (branch, non-axis) until its maps are no shorter than b's,
// requiring agreement along the way. Returns false on divergence.
bool refine_to(ProcessEntry& a, const std::vector<NewtonMap>& target) {
    while (a.maps.size() < target.size()) {
        if (branch_is_axis(a.certificate)) return false;
        NewtonMap next = branch_next_map(a.certificate);
        if (!(next == target[a.maps.size()])) return false;
        a.certificate = branch_advance(a.certificate, next);
        a.maps.push_back(next);
    }
    return true;
}

} // namespace

bool same_process(const NewtonProcess& a, const NewtonProcess& b) {
    if (a.x_content != b.x_content || a.y_content != b.y_content) return false;
    std::vector<ProcessEntry> da, db, ba, bb;
    for (auto& e : a.entries) (e.is_dicritical() ? da : ba).push_back(e);
    for (auto& e : b.entries) (e.is_dicritical() ? db : bb).push_back(e);
    if (da.size() != db.size() || ba.size() != bb.size()) return false;
    auto lt = [](const ProcessEntry& x, const ProcessEntry& y) { return compare_entries(x, y) < 0; };
    std::sort(da.begin(), da.end(), lt);
    std::sort(db.begin(), db.end(), lt);
    for (std::size_t i = 0; i < da.size(); ++i)
        if (!(da[i].maps == db[i].maps) || da[i].d != db[i].d) return false;
    std::vector<bool> used(bb.size(), false);
    for (auto& ea : ba) {
        bool found = false;
        for (std::size_t j = 0; j < bb.size() && !found; ++j) {
            if (used[j]) continue;
            ProcessEntry x = ea, y = bb[j];
            if (x.nu != y.nu) continue;
            if (x.maps.size() < y.maps.size()) {
                if (!refine_to(x, y.maps)) continue;
            } else if (y.maps.size() < x.maps.size()) {
                if (!refine_to(y, x.maps)) continue;
            }
            if (!(x.maps == y.maps)) continue;
            if (!branches_equal(x.certificate, y.certificate)) continue;
            used[j] = true;
            found = true;
        }
        if (!found) return false;
    }
    return true;
}

long long process_depth(const NewtonProcess& p) {
    if (p.entries.empty()) return 0;
    if (p.entries.size() == 1 && !p.entries.front().is_dicritical() && p.y_content == 0) {
        bool all_p1 = true;
        for (auto& m : p.entries.front().maps) all_p1 = all_p1 && m.p == 1;
        if (all_p1) return 0;
    }
    std::size_t d = 0;
    for (auto& e : p.entries) d = std::max(d, e.maps.size());
    return static_cast<long long>(d);
}

// ---------------------------------------------------------------------------
// Zariski factorization
// ---------------------------------------------------------------------------

std::vector<BPoly> simple_ideal_gens(long long p, long long q) {
    // Row beta needs alpha >= ceil((pq - q*beta)/p); a row is a minimal
    // generator iff the row below needs strictly more alpha.
    std::vector<long long> alpha(p + 1, 0);
    for (long long beta = 0; beta <= p; ++beta) {
        long long need = p * q - q * beta;
        alpha[beta] = need <= 0 ? 0 : (need + p - 1) / p;
    }
    std::vector<BPoly> out;
    for (long long beta = p; beta >= 0; --beta)
        if (beta == 0 || alpha[beta] < alpha[beta - 1])
            out.push_back(BPoly::monomial(alpha[beta], beta));
    // Minimal staircase set, printed lex-descending.
    std::sort(out.begin(), out.end(), [](const BPoly& a, const BPoly& b) {
        return b.terms() < a.terms();
    });
    return out;
}

std::vector<FactorDescriptor> zariski_factorization(const NewtonProcess& p) {
    std::vector<FactorDescriptor> out;
    if (p.x_content > 0) {
        FactorDescriptor f;
        f.kind = FactorDescriptor::Kind::monomial_x;
        f.exponent = p.x_content;
        f.gens = {BPoly::var_x()};
        out.push_back(f);
    }
    if (p.y_content > 0) {
        FactorDescriptor f;
        f.kind = FactorDescriptor::Kind::monomial_y;
        f.exponent = p.y_content;
        f.gens = {BPoly::var_y()};
        out.push_back(f);
    }
    for (auto& e : p.entries) {
        FactorDescriptor f;
        f.exponent = e.is_dicritical() ? e.d : e.nu;
        f.maps = e.maps;
        if (e.is_dicritical()) {
            f.kind = FactorDescriptor::Kind::simple_ideal;
            if (e.maps.size() == 1) f.gens = simple_ideal_gens(e.maps[0].p, e.maps[0].q);
        } else {
            f.kind = FactorDescriptor::Kind::curve;
            f.curve_certificate = e.certificate;
        }
        out.push_back(f);
    }
    return out;
}

std::string FactorDescriptor::to_string() const {
    std::string base;
    switch (kind) {
        case Kind::monomial_x: base = "(x)"; break;
        case Kind::monomial_y: base = "(y)"; break;
        case Kind::simple_ideal:
            if (!gens.empty()) {
                base = "(";
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    if (i) base += ",";
                    base += gens[i].to_string();
                }
                base += ")";
            } else {
                base = "simple[" + maps_to_string(maps) + "]";
            }
            break;
        case Kind::curve:
            base = "curve[";
            if (!maps.empty()) base += maps_to_string(maps) + "; ";
            base += curve_certificate.to_string() + "]";
            break;
    }
    if (exponent != 1) base += "^" + std::to_string(exponent);
    return base;
}

std::string factorization_to_string(const std::vector<FactorDescriptor>& fs) {
    if (fs.empty()) return "(1)";
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += " * ";
        out += fs[i].to_string();
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json map_to_json(const NewtonMap& m) {
    nlohmann::ordered_json j;
    j["p"] = m.p;
    j["q"] = m.q;
    j["p_prime"] = m.p_prime;
    j["q_prime"] = m.q_prime;
    j["mu"] = m.generic ? std::string("GENERIC") : rat_to_string(m.mu);
    return j;
}

NewtonMap map_from_json(const nlohmann::json& j) {
    long long p = j.at("p").get<long long>();
    long long q = j.at("q").get<long long>();
    std::string mu = j.at("mu").get<std::string>();
    if (mu == "GENERIC") return make_generic_map(p, q);
    Rat r;
    if (!rat_from_string(mu, r)) throw error("bad rational in process JSON: " + mu);
    return make_map(p, q, r);
}

} // namespace

std::string process_to_json(const NewtonProcess& p) {
    nlohmann::ordered_json j;
    j["x_content"] = p.x_content;
    j["y_content"] = p.y_content;
    j["entries"] = nlohmann::ordered_json::array();
    for (auto& e : p.entries) {
        nlohmann::ordered_json je;
        je["maps"] = nlohmann::ordered_json::array();
        for (auto& m : e.maps) je["maps"].push_back(map_to_json(m));
        nlohmann::ordered_json t;
        if (e.is_dicritical()) {
            t["kind"] = "dicritical";
            t["d"] = e.d;
        } else {
            t["kind"] = "branch";
            t["nu"] = e.nu;
            t["certificate"] = e.certificate.to_string();
        }
        je["terminal"] = t;
        j["entries"].push_back(je);
    }
    return j.dump();
}

NewtonProcess process_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    NewtonProcess p;
    p.x_content = j.at("x_content").get<long long>();
    p.y_content = j.at("y_content").get<long long>();
    for (auto& je : j.at("entries")) {
        ProcessEntry e;
        for (auto& jm : je.at("maps")) e.maps.push_back(map_from_json(jm));
        auto& t = je.at("terminal");
        if (t.at("kind") == "dicritical") {
            e.kind = ProcessEntry::Kind::dicritical;
            e.d = t.at("d").get<long long>();
        } else {
            e.kind = ProcessEntry::Kind::branch;
            e.nu = t.at("nu").get<long long>();
            e.certificate = parse_poly(t.at("certificate").get<std::string>());
        }
        p.entries.push_back(e);
    }
    p.sort_canonical();
    return p;
}

} // namespace newt
