#include "newt/invariants.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "newt/errors.hpp"

namespace newt {

namespace {

void require_finite_codim(const AnalysisResult& an) {
    if (!an.finite_codim) throw not_finite_codim();
}

std::vector<DicriticalInfo> dicritical_rows(const AnalysisResult& an) {
    std::vector<DicriticalInfo> rows;
    std::size_t ni = 0;
    for (auto& e : an.process.entries) {
        if (!e.is_dicritical()) continue;
        DicriticalInfo row;
        row.maps = e.maps;
        row.d = e.d;
        row.N = an.dicritical_N[ni++];
        std::vector<NewtonMap> pre(e.maps.begin(), e.maps.end() - 1);
        row.vertex = an.tree.find_vertex(pre, e.maps.back().p, e.maps.back().q);
        if (row.vertex < 0) throw cross_check_error("dicritical vertex not in tree");
        row.rho = rho0(an.tree, row.vertex);
        for (int cur = row.vertex; cur >= 0; cur = an.tree.vertices[cur].preceding)
            row.chain.insert(row.chain.begin(), cur);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

DicriticalReport rees_valuations(const AnalysisResult& an) {
    require_finite_codim(an);
    return DicriticalReport{dicritical_rows(an)};
}

long long mult_m(const AnalysisResult& an) {
    require_finite_codim(an);
    Int s = 0;
    for (auto& row : dicritical_rows(an)) s += row.rho * make_int(row.d);
    if (!s.fits_slong_p()) throw error("multiplicity overflow");
    return s.get_si();
}

long long hs_multiplicity(const AnalysisResult& an) {
    require_finite_codim(an);
    long long s = 0;
    for (auto& row : dicritical_rows(an)) s += row.N * row.d;
    return s;
}

long long hs_via_areas(const AnalysisResult& an) {
    require_finite_codim(an);
    long long s = 0;
    for (long long a : an.area2_parts) s += a;
    if (s != hs_multiplicity(an))
        throw cross_check_error("area formula disagrees with the dicritical sum");
    return s;
}

long long valuation_Nv(const AnalysisResult& an, const IdealGens&, int vertex_id,
                       const BPoly& f) {
    if (f.is_zero()) throw zero_polynomial();
    const TreeVertex& v = an.tree.vertices.at(vertex_id);

    // Direct route: push f through the maps reaching the vertex's polygon,
    // then take the generic x-order at its face.
    long long direct = valuation_direct(f, v.prefix, v.face_p, v.face_m);

    if (f.is_local_unit()) return direct; // valuation 0, no arrows to sum

    // Combinatorial route: arrows of f in the tree of (f) * I. Skipped when
    // the branch data of f itself leaves Q; the direct route needs no roots.
    AnalysisResult fan;
    try {
        fan = run(IdealGens({f}));
    } catch (const ground_field_error&) {
        return direct;
    }
    std::vector<long long> from_f;
    NewtonProcess merged = merge_processes_tagged(an.process, fan.process, from_f);
    NewtonTree mt = reconstruct_tree_tagged(merged, &from_f);
    int mv = mt.find_vertex(v.prefix, v.face_p, v.face_m);
    if (mv < 0) throw cross_check_error("vertex lost in the merged tree");
    Int comb = 0;
    for (std::size_t i = 0; i < mt.arrows.size(); ++i) {
        const TreeArrow& a = mt.arrows[i];
        long long mult = 0;
        if (a.axis) {
            // Axis arrows: f's own share of the monomial content.
            if (a.attach == TreeArrow::Attach::above && a.at >= 0 &&
                mt.vertices[a.at].prefix.empty())
                mult = fan.a;
            else if (a.attach == TreeArrow::Attach::below && a.at >= 0 &&
                     mt.vertices[a.at].prefix.empty())
                mult = fan.b;
        } else {
            mult = a.second_share;
        }
        if (mult == 0 || a.at < 0) continue;
        comb += rho_arrow(mt, mv, static_cast<int>(i)) * make_int(mult);
    }
    if (!comb.fits_slong_p() || comb.get_si() != direct)
        throw cross_check_error("valuation of f: path-product route " + comb.get_str() +
                                " vs direct route " + std::to_string(direct));
    return direct;
}

long long degree_function(const AnalysisResult& an, const IdealGens& I, const BPoly& f) {
    require_finite_codim(an);
    if (f.is_zero()) throw zero_polynomial();
    if (f.eval(Rat(0), Rat(0)) != 0) throw not_vanishing();
    long long s = 0;
    for (auto& row : dicritical_rows(an)) s += valuation_Nv(an, I, row.vertex, f) * row.d;
    return s;
}

long long j_multiplicity(const AnalysisResult& an, const IdealGens&, const RunConfig& cfg) {
    if (an.finite_codim) return hs_multiplicity(an);
    if (an.cofactor_gens.empty()) return 0; // principal ideal
    IdealGens cof(an.cofactor_gens);
    AnalysisResult can = run(cof, cfg);
    long long j = hs_multiplicity(can);
    auto add_part = [&](const BPoly& f, long long mult) {
        j += mult * degree_function(can, cof, f);
    };
    if (an.a > 0) add_part(BPoly::var_x(), an.a);
    if (an.b > 0) add_part(BPoly::var_y(), an.b);
    for (std::size_t i = 0; i < an.curve_factors.size(); ++i)
        add_part(an.curve_factors[i], an.curve_mults[i]);
    return j;
}

Rat lojasiewicz(const AnalysisResult& an) {
    require_finite_codim(an);
    Rat best(0);
    for (auto& row : dicritical_rows(an)) {
        Rat v = make_rat(make_int(row.N), row.rho);
        if (v > best) best = v;
    }
    return best;
}

namespace {

nlohmann::ordered_json rees_json(const AnalysisResult& an) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& row : dicritical_rows(an)) {
        nlohmann::ordered_json jr;
        jr["maps"] = nlohmann::ordered_json::array();
        for (auto& m : row.maps) {
            nlohmann::ordered_json jm;
            jm["p"] = m.p;
            jm["q"] = m.q;
            jm["mu"] = m.generic ? std::string("GENERIC") : rat_to_string(m.mu);
            jr["maps"].push_back(jm);
        }
        jr["N"] = row.N;
        jr["d"] = row.d;
        if (!row.rho.fits_slong_p()) throw error("rho overflow in report");
        jr["rho"] = row.rho.get_si();
        arr.push_back(jr);
    }
    return arr;
}

} // namespace

std::string invariants_report_json(const AnalysisResult& an, const IdealGens& I,
                                   const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["depth"] = an.depth;
    j["nondegenerate"] = an.depth <= 1;
    if (an.finite_codim) {
        j["mult_m"] = mult_m(an);
        j["e"] = hs_multiplicity(an);
        j["e_area"] = hs_via_areas(an);
        j["j"] = j_multiplicity(an, I, cfg);
        Rat l = lojasiewicz(an);
        if (!l.get_num().fits_slong_p() || !l.get_den().fits_slong_p())
            throw error("exponent overflow in report");
        nlohmann::ordered_json jl;
        jl["num"] = l.get_num().get_si();
        jl["den"] = l.get_den().get_si();
        j["lojasiewicz"] = jl;
        j["rees"] = rees_json(an);
    } else {
        j["mult_m"] = nullptr;
        j["e"] = nullptr;
        j["e_area"] = nullptr;
        j["j"] = j_multiplicity(an, I, cfg);
        j["lojasiewicz"] = nullptr;
        j["rees"] = nlohmann::ordered_json::array();
    }
    return j.dump();
}

std::string invariants_report_text(const AnalysisResult& an, const IdealGens& I,
                                   const RunConfig& cfg) {
    std::ostringstream out;
    out << "content: x^" << an.a << " * y^" << an.b << "\n";
    out << "depth: " << an.depth << "\n";
    out << "nondegenerate: " << (an.depth <= 1 ? "true" : "false") << "\n";
    out << "j: " << j_multiplicity(an, I, cfg) << "\n";
    if (an.finite_codim) {
        out << "mult: " << mult_m(an) << "\n";
        out << "e: " << hs_multiplicity(an) << "\n";
        out << "e_area: " << hs_via_areas(an) << "\n";
        out << "lojasiewicz: " << rat_to_string(lojasiewicz(an)) << "\n";
        out << "rees valuations:\n";
        for (auto& row : dicritical_rows(an)) {
            out << "  maps=[";
            for (std::size_t i = 0; i < row.maps.size(); ++i) {
                if (i) out << ", ";
                out << row.maps[i].to_string();
            }
            out << "] N=" << row.N << " d=" << row.d << " rho=" << row.rho.get_str() << "\n";
        }
    }
    out << "zariski: " << factorization_to_string(zariski_factorization(an.process)) << "\n";
    out << "process: " << an.process.to_string() << "\n";
    return out.str();
}

} // namespace newt
