#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "newt/diagram.hpp"
#include "newt/errors.hpp"
#include "newt/invariants.hpp"
#include "newt/oracle.hpp"

using namespace newt;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IdealGens load_ideal(const std::string& path) { return IdealGens::parse_file_text(slurp(path)); }

struct Options {
    std::string file, file2, poly;
    bool json = false, dot = false, strict = false;
    long long max_depth = 10000;
    std::uint64_t seed = 1;
    RunConfig cfg() const { return RunConfig{max_depth, strict}; }
};

int cmd_polygon(const Options& o) {
    IdealGens I = load_ideal(o.file);
    if (o.json) {
        std::cout << diagram_to_json(I) << "\n";
        return 0;
    }
    NewtonDiagram d = diagram(I);
    std::cout << "vertices:";
    for (auto& [a, b] : d.vertices) std::cout << " (" << a << "," << b << ")";
    std::cout << "\nfaces:\n";
    for (auto& S : faces(d)) {
        InitialDecomposition dec = initial_ideal(I, S);
        std::cout << "  " << S.p << "*a + " << S.q << "*b = " << S.N << "  delta=" << S.delta
                  << "  d=" << dec.d << "  F(1,X)=" << dec.F1X.to_string() << "\n";
    }
    return 0;
}

int cmd_tree(const Options& o) {
    IdealGens I = load_ideal(o.file);
    AnalysisResult a = run(I, o.cfg());
    if (o.dot)
        std::cout << tree_to_dot(a.tree);
    else if (o.json)
        std::cout << tree_to_json(a.tree) << "\n";
    else {
        std::cout << "depth: " << a.depth << "\n";
        for (auto& v : a.tree.vertices)
            std::cout << "  vertex " << v.id << ": (N,d)=(" << v.N << "," << v.d << ") (q,p)=("
                      << v.q << "," << v.p << ") preceding=" << v.preceding << "\n";
        for (auto& ar : a.tree.arrows)
            std::cout << "  arrow at " << ar.at << " mult " << ar.mult
                      << (ar.axis ? " (axis)" : "") << "\n";
    }
    return 0;
}

int cmd_process(const Options& o) {
    IdealGens I = load_ideal(o.file);
    AnalysisResult a = run(I, o.cfg());
    std::cout << (o.json ? process_to_json(a.process) : a.process.to_string()) << "\n";
    return 0;
}

int cmd_invariants(const Options& o) {
    IdealGens I = load_ideal(o.file);
    AnalysisResult a = run(I, o.cfg());
    std::cout << (o.json ? invariants_report_json(a, I, o.cfg())
                         : invariants_report_text(a, I, o.cfg()));
    return 0;
}

int cmd_valuation(const Options& o) {
    IdealGens I = load_ideal(o.file);
    BPoly f = parse_poly(o.poly);
    AnalysisResult a = run(I, o.cfg());
    if (!a.finite_codim) throw not_finite_codim();
    DicriticalReport rep = rees_valuations(a);
    for (auto& row : rep.rows) {
        long long nv = valuation_Nv(a, I, row.vertex, f);
        std::cout << "vertex " << row.vertex << " (N=" << row.N << ",d=" << row.d
                  << "): N_v(f) = " << nv << "\n";
    }
    return 0;
}

int cmd_degree(const Options& o) {
    IdealGens I = load_ideal(o.file);
    BPoly f = parse_poly(o.poly);
    AnalysisResult a = run(I, o.cfg());
    std::cout << degree_function(a, I, f) << "\n";
    return 0;
}

int cmd_closure_eq(const Options& o) {
    IdealGens I = load_ideal(o.file), J = load_ideal(o.file2);
    std::cout << (same_integral_closure(I, J, o.cfg()) ? "EQUAL" : "DIFFERENT") << "\n";
    return 0;
}

int cmd_factor(const Options& o) {
    IdealGens I = load_ideal(o.file);
    AnalysisResult a = run(I, o.cfg());
    std::cout << factorization_to_string(zariski_factorization(a.process)) << "\n";
    return 0;
}

int cmd_gencurve(const Options& o) {
    IdealGens I = load_ideal(o.file);
    AnalysisResult a = run(I, o.cfg());
    bool any_dicritical = false;
    for (auto& e : a.process.entries) any_dicritical = any_dicritical || e.is_dicritical();
    if (!any_dicritical) throw principal_ideal();
    NewtonTree g = generic_curve_tree(a.tree);
    if (o.dot)
        std::cout << tree_to_dot(g);
    else
        std::cout << tree_to_json(g) << "\n";
    return 0;
}

int cmd_check(const Options& o) {
    IdealGens I = load_ideal(o.file);
    RandomSource rnd(o.seed);
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "OK   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };
    AnalysisResult a = run(I, o.cfg());
    report("decoration identity", check_N_decorations(a.tree).first);
    report("height identity per polygon", check_height_formula(I, o.strict));
    if (a.finite_codim) {
        long long e = hs_multiplicity(a);
        report("area formula", hs_via_areas(a) == e);
        report("colength oracle (seed " + std::to_string(o.seed) + ")", e_oracle(I, rnd) == e);
        RandomSource rnd2(o.seed + 1);
        report("order oracle", mult_oracle(I, rnd2) == mult_m(a));
    }
    {
        // product rule against (x, y)
        IdealGens m({BPoly::var_x(), BPoly::var_y()});
        std::vector<BPoly> prod;
        for (auto& f : I.full_gens())
            for (auto& g : m.full_gens()) prod.push_back(f * g);
        AnalysisResult ap = run(IdealGens(prod), o.cfg());
        NewtonProcess merged = merge_processes(a.process, run(m, o.cfg()).process);
        report("product rule with (x,y)", same_process(ap.process, merged));
    }
    return failures ? 4 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Newton-polygon analysis of ideals in Q[x,y]"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c, bool needs_poly = false, bool two_files = false) {
        c->add_option("file", o.file, "ideal file (one generator per line)")->required();
        if (two_files) c->add_option("file2", o.file2, "second ideal file")->required();
        if (needs_poly) c->add_option("poly", o.poly, "polynomial expression")->required();
        c->add_flag("--json", o.json, "JSON output");
        c->add_option("--seed", o.seed, "random seed for oracle draws");
        c->add_option("--max-depth", o.max_depth, "recursion guard");
        c->add_flag("--strict", o.strict, "refuse irrational residual factors everywhere");
        return c;
    };

    auto* polygon = add_common(app.add_subcommand("polygon", "Newton polygon and face data"));
    auto* tree = add_common(app.add_subcommand("tree", "decorated tree"));
    tree->add_flag("--dot", o.dot, "DOT output");
    auto* process = add_common(app.add_subcommand("process", "canonical process"));
    auto* invariants = add_common(app.add_subcommand("invariants", "all invariants"));
    auto* valuation =
        add_common(app.add_subcommand("valuation", "valuations of a polynomial"), true);
    auto* degree = add_common(app.add_subcommand("degree", "degree function value"), true);
    auto* closure =
        add_common(app.add_subcommand("closure-eq", "compare integral closures"), false, true);
    auto* factor = add_common(app.add_subcommand("factor", "closure factorization"));
    auto* gencurve = add_common(app.add_subcommand("gencurve", "generic curve tree"));
    gencurve->add_flag("--dot", o.dot, "DOT output");
    auto* check = add_common(app.add_subcommand("check", "internal cross-check suite"));

    CLI11_PARSE(app, argc, argv);

    try {
        if (polygon->parsed()) return cmd_polygon(o);
        if (tree->parsed()) return cmd_tree(o);
        if (process->parsed()) return cmd_process(o);
        if (invariants->parsed()) return cmd_invariants(o);
        if (valuation->parsed()) return cmd_valuation(o);
        if (degree->parsed()) return cmd_degree(o);
        if (closure->parsed()) return cmd_closure_eq(o);
        if (factor->parsed()) return cmd_factor(o);
        if (gencurve->parsed()) return cmd_gencurve(o);
        if (check->parsed()) return cmd_check(o);
    } catch (const ground_field_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cross_check_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
