#ifndef NEWT_POLYOPS_HPP
#define NEWT_POLYOPS_HPP

#include <utility>
#include <vector>

#include "newt/bpoly.hpp"

namespace newt {

// Greatest common divisor in Q[x,y], integer-primitive with the coefficient
// of the lex-greatest monomial positive. gcd(f,0) = normalized f.
BPoly gcd(const BPoly& f, const BPoly& g);
BPoly gcd_many(const std::vector<BPoly>& fs);

// f = unit * prod factor^multiplicity, factors squarefree and pairwise
// coprime, one entry per multiplicity, ordered by multiplicity then by
// lex-leading monomial.
std::vector<std::pair<BPoly, long long>> squarefree_decompose(const BPoly& f);

// Sylvester resultant eliminating y, rows of f above rows of g;
// result lives in Q[x].
UPoly resultant_y(const BPoly& f, const BPoly& g);

// All rational roots with multiplicities (ascending) plus the root-free
// residual cofactor.
struct RationalRoots {
    std::vector<std::pair<Rat, long long>> roots;
    UPoly residual;
};
RationalRoots rational_roots(const UPoly& u);

// Helpers shared with other modules.
UPoly upoly_gcd(const UPoly& a, const UPoly& b); // monic
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);

} // namespace newt

#endif
