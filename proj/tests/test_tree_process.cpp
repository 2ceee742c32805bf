#include <doctest.h>

#include <random>

#include "newt/driver.hpp"
#include "newt/errors.hpp"
#include "newt/invariants.hpp"

using namespace newt;

namespace {

BPoly P(const std::string& s) { return parse_poly(s); }

IdealGens example1() {
    return IdealGens({P("y^4*(y+x)*(y^2-3*x)"), P("((y+x)^3+x^8)*(y^2-3*x)")});
}
IdealGens example2() { return IdealGens({P("x^3*y"), P("x^6+y^4")}); }
IdealGens example3() {
    return IdealGens({P("y^2*((x^2+y^3)^2+x*y^5)*(x^2-y^3)"), P("x^8*y+x^12")});
}
IdealGens example4() {
    return IdealGens({P("(x-y)^2*x^3"), P("(x-y)^2*y^3"), P("(x-y)*x^6")});
}
IdealGens example5a() {
    return IdealGens({P("2*x^4-x^2*y^3+x^5"), P("x*y^5+x^2*y^6"), P("y^7+x*y^6")});
}
IdealGens example5b() { return IdealGens({P("3*x^4-x^2*y^3"), P("x^3*y^2"), P("y^7")}); }
IdealGens example6a() { return IdealGens({P("x^2"), P("x*y^4"), P("y^5")}); }
IdealGens example6b() { return IdealGens({P("x^2"), P("x*y^3"), P("y^5")}); }

} // namespace

TEST_CASE("path products on the two-vertex tree") {
    AnalysisResult a = run(example2());
    REQUIRE(a.tree.vertices.size() == 2);
    int v1 = a.tree.find_vertex({}, 1, 1);
    int v2 = a.tree.find_vertex({}, 1, 3);
    REQUIRE(v1 >= 0);
    REQUIRE(v2 >= 0);
    CHECK(rho_vertices(a.tree, v1, v2) == 1);
    CHECK(rho_vertices(a.tree, v2, v2) == 3);
    CHECK(rho_vertices(a.tree, v1, v1) == 1);
    CHECK(rho0(a.tree, v1) == 1);
    CHECK(rho0(a.tree, v2) == 1);
}

TEST_CASE("rho at a vertex with decorations (2,3)") {
    // the steepest face of the deep example has q=2 above and p=3 below
    AnalysisResult a = run(example3());
    int v = a.tree.find_vertex({}, 3, 2);
    REQUIRE(v >= 0);
    CHECK(rho_vertices(a.tree, v, v) == 6);
}

TEST_CASE("vertex decorations of the worked examples") {
    AnalysisResult a1 = run(example1());
    // first polygon: (5) and (4); second polygon: (7,2) and (9,1)
    int vA = a1.tree.find_vertex({}, 2, 1);
    int vB = a1.tree.find_vertex({}, 1, 1);
    REQUIRE(vA >= 0);
    REQUIRE(vB >= 0);
    CHECK(a1.tree.vertices[vA].N == 5);
    CHECK(a1.tree.vertices[vA].d == 0);
    CHECK(a1.tree.vertices[vB].N == 4);
    std::vector<NewtonMap> pre{make_map(1, 1, Rat(-1))};
    int v2 = a1.tree.find_vertex(pre, 1, 1);
    int v3 = a1.tree.find_vertex(pre, 1, 3);
    REQUIRE(v2 >= 0);
    REQUIRE(v3 >= 0);
    CHECK(a1.tree.vertices[v2].N == 7);
    CHECK(a1.tree.vertices[v2].d == 2);
    CHECK(a1.tree.vertices[v2].q == 2);
    CHECK(a1.tree.vertices[v2].p == 1);
    CHECK(a1.tree.vertices[v3].N == 9);
    CHECK(a1.tree.vertices[v3].d == 1);
    CHECK(a1.tree.vertices[v3].q == 4);
    CHECK(a1.tree.vertices[v3].preceding == vB);
    CHECK(a1.tree.vertices[v3].chain_parent == v2);

    AnalysisResult a4 = run(example4());
    REQUIRE(a4.tree.vertices.size() == 2);
    int u1 = a4.tree.find_vertex({}, 1, 1);
    REQUIRE(u1 >= 0);
    CHECK(a4.tree.vertices[u1].N == 5);
    CHECK(a4.tree.vertices[u1].d == 3);
    std::vector<NewtonMap> pre4{make_map(1, 1, Rat(1))};
    int u2 = a4.tree.find_vertex(pre4, 1, 2);
    REQUIRE(u2 >= 0);
    CHECK(a4.tree.vertices[u2].N == 9);
    CHECK(a4.tree.vertices[u2].d == 1);
    CHECK(a4.tree.vertices[u2].q == 3);
}

TEST_CASE("decoration N values of the deep example") {
    AnalysisResult a3 = run(example3());
    std::vector<long long> Ns;
    for (std::size_t i = 0; i < a3.dicritical_N.size(); ++i) Ns.push_back(a3.dicritical_N[i]);
    std::sort(Ns.begin(), Ns.end());
    CHECK(Ns == std::vector<long long>{10, 14, 26, 52});
}

TEST_CASE("edge relation between glued decorations") {
    for (auto I : {example1(), example3(), example4(), example5a()}) {
        AnalysisResult a = run(I);
        for (auto& v : a.tree.vertices) {
            if (v.preceding < 0) {
                CHECK(v.q == v.pre_glue_m);
            } else {
                const TreeVertex& v0 = a.tree.vertices[v.preceding];
                CHECK(v.q == v0.p * v0.q * v.p + v.pre_glue_m);
            }
        }
    }
}

TEST_CASE("decoration identity holds on produced trees") {
    for (auto I : {example1(), example2(), example3(), example4(), example5a(), example5b()}) {
        AnalysisResult a = run(I);
        auto [ok, bad] = check_N_decorations(a.tree);
        CHECK(ok);
    }
}

TEST_CASE("a tampered tree fails the decoration identity") {
    AnalysisResult a = run(example2());
    NewtonTree t = a.tree;
    t.vertices[0].N += 1;
    auto [ok, bad] = check_N_decorations(t);
    CHECK_FALSE(ok);
    CHECK(bad == t.vertices[0].id);
}

TEST_CASE("generic curve tree adds unit arrows at dicritical vertices") {
    AnalysisResult a3 = run(example3());
    NewtonTree g = generic_curve_tree(a3.tree);
    CHECK(g.vertices.size() == a3.tree.vertices.size());
    long long sum_d = 0;
    for (auto& v : a3.tree.vertices) sum_d += v.d;
    CHECK(g.arrows.size() == a3.tree.arrows.size() + sum_d);
    for (std::size_t i = 0; i < a3.tree.vertices.size(); ++i) {
        CHECK(g.vertices[i].N == a3.tree.vertices[i].N);
        CHECK(g.vertices[i].q == a3.tree.vertices[i].q);
        CHECK(g.vertices[i].p == a3.tree.vertices[i].p);
    }
    // no dicritical vertices: unchanged
    AnalysisResult c = run(IdealGens({P("y^2-x^3")}));
    NewtonTree gc = generic_curve_tree(c.tree);
    CHECK(gc.arrows.size() == c.tree.arrows.size());

    // The curve's own decoration identity: same N values, arrows only
    // (a principal ideal has no dicritical degrees).
    NewtonTree curve = g;
    for (auto& v : curve.vertices) v.d = 0;
    auto [ok, bad] = check_N_decorations(curve);
    CHECK(ok);
}

TEST_CASE("merge rules") {
    AnalysisResult a = run(IdealGens({P("(y-x)^2")}));
    AnalysisResult b = run(IdealGens({P("(y-x)^3")}));
    NewtonProcess m = merge_processes(a.process, b.process);
    REQUIRE(m.entries.size() == 1);
    CHECK(m.entries[0].nu == 5);

    // disjoint keys: plain union
    AnalysisResult c = run(IdealGens({P("y-2*x")}));
    NewtonProcess u = merge_processes(a.process, c.process);
    CHECK(u.entries.size() == 2);

    // neutral element
    NewtonProcess empty;
    NewtonProcess same = merge_processes(a.process, empty);
    CHECK(same_process(same, a.process));

    // dicritical exponents add
    AnalysisResult d1 = run(IdealGens({P("x"), P("y")}));
    NewtonProcess dd = merge_processes(d1.process, d1.process);
    REQUIRE(dd.entries.size() == 1);
    CHECK(dd.entries[0].d == 2);
}

TEST_CASE("branch equality via the certificate gcd") {
    CHECK(branches_equal(P("y-x"), P("y-x")));
    CHECK_FALSE(branches_equal(P("y-x"), P("y+x")));
    CHECK(branches_equal(P("(y-x)*(1+y)"), P("(y-x)*(2+x)")));
    CHECK_FALSE(branches_equal(P("y"), P("y-x")));
    CHECK(branches_equal(P("y*(y+6)"), P("y")));
}

TEST_CASE("same integral closure") {
    CHECK(same_integral_closure(example6a(), example6b()));
    CHECK_FALSE(same_integral_closure(example5a(), example5b()));
    CHECK(same_integral_closure(example5a(), example5a()));
}

TEST_CASE("closure-equal ideals share the single-entry process") {
    AnalysisResult a = run(example6a());
    REQUIRE(a.process.entries.size() == 1);
    const ProcessEntry& e = a.process.entries[0];
    CHECK(e.is_dicritical());
    REQUIRE(e.maps.size() == 1);
    CHECK(e.maps[0].p == 5);
    CHECK(e.maps[0].q == 2);
    CHECK(e.maps[0].generic);
    CHECK(e.d == 1);
}

TEST_CASE("processes of the same tree shape can differ") {
    AnalysisResult a = run(example5a());
    AnalysisResult b = run(example5b());
    CHECK(trees_isomorphic(a.tree, b.tree));
    CHECK_FALSE(same_process(a.process, b.process));
    // first maps differ in the root only; the flat (2,1) entry sorts first
    REQUIRE(a.process.entries.size() == 2);
    REQUIRE(b.process.entries.size() == 2);
    CHECK(a.process.entries[0].maps[0].p == 2);
    CHECK(a.process.entries[0].d == 2);
    CHECK(a.process.entries[1].maps[0].mu == 2);
    CHECK(b.process.entries[1].maps[0].mu == 3);
}

TEST_CASE("zariski factorizations") {
    AnalysisResult a2 = run(example2());
    CHECK(factorization_to_string(zariski_factorization(a2.process)) == "(x,y)^3 * (x^3,y)");

    AnalysisResult a3 = run(example3());
    auto fs = zariski_factorization(a3.process);
    REQUIRE(fs.size() == 4);
    for (auto& f : fs) {
        CHECK(f.kind == FactorDescriptor::Kind::simple_ideal);
        CHECK(f.exponent == 1);
    }
    // the depth-1 factors have explicit generators
    CHECK(fs[2].to_string() == "(x^2,y)");
    CHECK(fs[3].to_string() == "simple[sigma(1,4,-1), sigma(1,2,GENERIC)]");

    AnalysisResult a5 = run(example5a());
    auto f5 = zariski_factorization(a5.process);
    REQUIRE(f5.size() == 2);
    CHECK(f5[0].to_string() == "(x,y^2)^2");
    CHECK(f5[1].to_string() == "simple[sigma(3,2,2), sigma(1,1,GENERIC)]");

    AnalysisResult a6 = run(example6a());
    auto f6 = zariski_factorization(a6.process);
    REQUIRE(f6.size() == 1);
    CHECK(f6[0].to_string() == "(x^2,x*y^3,y^5)");
}

TEST_CASE("reconstruction from the process reproduces the tree") {
    for (auto I : {example1(), example2(), example3(), example4(), example5a()}) {
        AnalysisResult a = run(I);
        NewtonTree t = reconstruct_tree(a.process);
        CHECK(tree_to_json(t) == tree_to_json(a.tree));
    }
}

TEST_CASE("tree and process serialization round trips") {
    AnalysisResult a = run(example1());
    std::string tj = tree_to_json(a.tree);
    CHECK(tree_to_json(tree_from_json(tj)) == tj);
    std::string pj = process_to_json(a.process);
    NewtonProcess p = process_from_json(pj);
    CHECK(same_process(p, a.process));
    CHECK(process_to_json(p) == pj);
}

TEST_CASE("dot output shape") {
    AnalysisResult a2 = run(example2());
    std::string dot = tree_to_dot(a2.tree);
    CHECK(dot.find("(4,3)") != std::string::npos);
    CHECK(dot.find("(6,1)") != std::string::npos);
    CHECK(dot.find("v0 -- v1") != std::string::npos);

    // monomial ideal: one edge connecting two arrows
    AnalysisResult am = run(IdealGens({P("x^4*y^2")}));
    CHECK(am.tree.vertices.empty());
    std::string md = tree_to_dot(am.tree);
    CHECK(md.find("a0 -- a1") != std::string::npos);
    CHECK(md.find("(4)") != std::string::npos);
    CHECK(md.find("(2)") != std::string::npos);
}

TEST_CASE("branch arrows seat correctly among co-traveling entries") {
    // A curve whose branch shares its tangent with deeper ideal structure:
    // the reconstruction must seat the arrow on the branch's own face.
    BPoly w = P("y-x+y^2");
    IdealGens J({P("(x-y)*x^2"), P("(x-y)*y^2+x^6")});
    std::vector<BPoly> prod;
    for (auto& b : J.full_gens()) prod.push_back(w * b);
    IdealGens I(prod);
    AnalysisResult a = run(I);
    REQUIRE(a.tree.vertices.size() == 3);
    bool saw_phantom = false;
    for (auto& v : a.tree.vertices) {
        if (v.phantom) {
            saw_phantom = true;
            CHECK(v.N == 6);
            CHECK(v.q == 2);
            CHECK(v.d == 0);
        }
    }
    CHECK(saw_phantom);
    int deep = a.tree.find_vertex({make_map(1, 1, Rat(1))}, 1, 3);
    REQUIRE(deep >= 0);
    CHECK(a.tree.vertices[deep].N == 8);
    CHECK(a.tree.vertices[deep].q == 4);
    NewtonProcess merged = merge_processes(run(IdealGens({w})).process, run(J).process);
    CHECK(same_process(a.process, merged));

    // two levels of shared tangent
    IdealGens J2({P("(y-x+x^2)*x^3"), P("(y-x+x^2)*y^3+x^9")});
    std::vector<BPoly> prod2;
    for (auto& b : J2.full_gens()) prod2.push_back(w * b);
    AnalysisResult a2 = run(IdealGens(prod2));
    NewtonProcess merged2 = merge_processes(run(IdealGens({w})).process, run(J2).process);
    CHECK(same_process(a2.process, merged2));
}

TEST_CASE("entries with a common prefix share vertices") {
    NewtonProcess p;
    ProcessEntry e;
    e.kind = ProcessEntry::Kind::dicritical;
    e.maps = {make_map(1, 1, Rat(1)), make_map(1, 2, Rat(1)), make_generic_map(1, 1)};
    e.d = 1;
    ProcessEntry other;
    other.kind = ProcessEntry::Kind::dicritical;
    other.maps = {make_map(1, 1, Rat(2)), make_generic_map(2, 1)};
    other.d = 1;
    p.entries = {e, other};
    p.sort_canonical();
    // root vertex shared, three more along e, one more along the other entry
    NewtonTree t = reconstruct_tree(p);
    CHECK(t.vertices.size() == 4);
    auto [ok, bad] = check_N_decorations(t);
    CHECK(ok);
}

TEST_CASE("explicit simple ideals realize the single-entry processes") {
    IdealGens I1({P("x^2-y^3"), P("x^2*y^2"), P("x^3*y")});
    IdealGens I2({P("(x^2+y^3)^2+x*y^5"), P("x*(x^2+y^3)^2"), P("x^4*y^2"), P("y^8"), P("x^5*y")});
    IdealGens I3({P("x^2"), P("y")});
    IdealGens I4({P("x^4+y"), P("x^2*y")});
    auto single = [](const IdealGens& I) {
        AnalysisResult a = run(I);
        REQUIRE(a.process.entries.size() == 1);
        const ProcessEntry& e = a.process.entries[0];
        REQUIRE(e.is_dicritical());
        CHECK(e.d == 1);
        return e.maps;
    };
    auto m1 = single(I1);
    REQUIRE(m1.size() == 2);
    CHECK((m1[0].p == 3 && m1[0].q == 2 && m1[0].mu == 1));
    CHECK((m1[1].p == 1 && m1[1].q == 4 && m1[1].generic));
    auto m2 = single(I2);
    CHECK(m2.size() == 8);
    CHECK(m2[1].mu == make_rat(-1, 9));
    CHECK(m2[6].mu == make_rat(-91, 9565938));
    auto m3 = single(I3);
    CHECK((m3.size() == 1 && m3[0].p == 1 && m3[0].q == 2));
    auto m4 = single(I4);
    REQUIRE(m4.size() == 2);
    CHECK((m4[0].p == 1 && m4[0].q == 4 && m4[0].mu == -1));

    // their product generates an ideal with the same closure as the original
    auto prod = [](const IdealGens& A, const IdealGens& B) {
        std::vector<BPoly> out;
        for (auto& a : A.full_gens())
            for (auto& b : B.full_gens()) out.push_back(a * b);
        return IdealGens(out);
    };
    IdealGens big = prod(prod(I1, I2), prod(I3, I4));
    CHECK(big.gens().size() == 60);
    CHECK(same_integral_closure(big, example3()));

    IdealGens xy({P("x"), P("y")}), x3y({P("x^3"), P("y")});
    CHECK(same_integral_closure(prod(prod(prod(xy, xy), xy), x3y), example2()));

    IdealGens J1({P("2*x^2-y^3"), P("x*y^2"), P("y^4")});
    IdealGens J2({P("x"), P("y^2")});
    CHECK(same_integral_closure(prod(prod(J1, J2), J2), example5a()));
}

TEST_CASE("merge arithmetic on powers and deep chains") {
    auto prod = [](const IdealGens& A, const IdealGens& B) {
        std::vector<BPoly> out;
        for (auto& a : A.full_gens())
            for (auto& b : B.full_gens()) out.push_back(a * b);
        return IdealGens(out);
    };
    {
        IdealGens A({P("(y-x)^2*x")}), B({P("(y-x)^3*y")});
        AnalysisResult ab = run(prod(A, B));
        CHECK(same_process(ab.process, merge_processes(run(A).process, run(B).process)));
        CHECK(ab.process.x_content == 1);
        CHECK(ab.process.y_content == 1);
        for (auto& e : ab.process.entries)
            if (!e.is_dicritical()) CHECK(e.nu == 5);
    }
    {
        IdealGens I2({P("(x^2+y^3)^2+x*y^5"), P("x*(x^2+y^3)^2"), P("x^4*y^2"), P("y^8"),
                      P("x^5*y")});
        AnalysisResult sq = run(prod(I2, I2));
        CHECK(same_process(sq.process, merge_processes(run(I2).process, run(I2).process)));
        REQUIRE(sq.process.entries.size() == 1);
        CHECK(sq.process.entries[0].d == 2);
        CHECK(sq.depth == 8);
    }
}
