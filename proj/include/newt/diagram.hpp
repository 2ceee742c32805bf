#ifndef NEWT_DIAGRAM_HPP
#define NEWT_DIAGRAM_HPP

#include <string>
#include <utility>
#include <vector>

#include "newt/ideal.hpp"
#include "newt/polyops.hpp"

namespace newt {

using Point = std::pair<long long, long long>; // (alpha, beta)

// Minimal vertex set of the region conv(support + R_{>=0}^2): the lower-left
// staircase chain, alpha strictly increasing, beta strictly decreasing.
struct NewtonDiagram {
    std::vector<Point> vertices;
    bool operator==(const NewtonDiagram&) const = default;
};

// One compact segment of the polygon. Supporting line p*alpha + q*beta = N
// with gcd(p,q) = 1; delta counts lattice points on the closed segment.
struct Face {
    long long p = 1, q = 1, N = 0;
    Point origin; // upper end (smaller alpha)
    Point end;    // lower end
    long long delta = 2;
    bool operator==(const Face&) const = default;
};

NewtonDiagram diagram_of_points(std::vector<Point> pts);
NewtonDiagram diagram(const IdealGens& I);
std::vector<Face> faces(const NewtonDiagram& d); // top to bottom
long long height(const NewtonDiagram& d);

// ti(I,S) = x^a y^b F(x^q, y^p) (k_1, ..., k_s), with F monic in its second
// variable and not divisible by either, and the k_i coprime of common degree
// d (k_list = [1], d = 0 in the principal case). k's live in the formal
// variables (u,v) = (x^q, y^p).
struct InitialDecomposition {
    long long a = 0, b = 0;
    BPoly F;                        // homogeneous in (u,v)
    UPoly F1X;                      // F(1,X)
    std::vector<BPoly> k_list;      // canonical set
    long long d = 0;
    std::vector<BPoly> face_parts;  // per generator, in (x,y); zero entries kept
};

InitialDecomposition initial_ideal(const IdealGens& I, const Face& S);

// Height identity: h equals sum over faces of p_S*(d_S + root mass of the
// face polynomial). In strict mode a non-constant rootless residual factor
// raises ground_field_error instead of contributing its degree.
bool check_height_formula(const IdealGens& I, bool strict = false);

// Twice the area between the polygon and the axes (requires the chain to
// start on the beta-axis and end on the alpha-axis), and the variant
// anchored on the vertical line {alpha = N_anchor}.
long long polygon_area2(const NewtonDiagram& d);
long long polygon_area2_anchored(const NewtonDiagram& d, long long N_anchor);

std::string diagram_to_json(const IdealGens& I);

} // namespace newt

#endif
