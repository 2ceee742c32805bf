#ifndef NEWT_DRIVER_HPP
#define NEWT_DRIVER_HPP

#include <string>
#include <vector>

#include "newt/tree.hpp"

namespace newt {

struct RunConfig {
    long long max_depth = 10000;
    bool strict_field = false;
};

// Everything the recursive analysis produces. Invariants are computed from
// this; nothing downstream reruns the recursion.
struct AnalysisResult {
    long long a = 0, b = 0; // monomial content x^a y^b
    NewtonProcess process;
    NewtonTree tree;
    long long depth = 0;

    // Non-monomial principal part and finite-codimension cofactor.
    std::vector<BPoly> curve_factors; // squarefree, pairwise coprime, vanish at 0
    std::vector<long long> curve_mults;
    std::vector<BPoly> cofactor_gens; // empty when the cofactor is the unit ideal
    bool finite_codim = false;        // the input equals its cofactor part

    // Per dicritical entry (in canonical process order): decoration N of its
    // vertex, recorded directly by the recursion.
    std::vector<long long> dicritical_N;
    // Twice the anchored areas of the successive polygons met by the
    // finite-codimension recursion, in recursion order.
    std::vector<long long> area2_parts;
};

AnalysisResult run(const IdealGens& I, const RunConfig& cfg = {});

long long depth_of(const IdealGens& I, const RunConfig& cfg = {});
bool is_nondegenerate(const IdealGens& I, const RunConfig& cfg = {});

// The canonical process characterizes the integral closure.
bool same_integral_closure(const IdealGens& I, const IdealGens& J, const RunConfig& cfg = {});

// No recursion: true iff every face polynomial of the polygon is constant.
// Requires finite codimension (constant generator gcd, all generators
// vanishing at the origin).
bool nondegenerate_finite_codim_fast(const IdealGens& I);

// Valuation of f at the vertex: x-order of the image of the transform of f
// under the generic map of the vertex's face.
long long valuation_direct(const BPoly& f, const std::vector<NewtonMap>& prefix, long long face_p,
                           long long face_m);

} // namespace newt

#endif
