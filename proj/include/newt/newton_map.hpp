#ifndef NEWT_NEWTON_MAP_HPP
#define NEWT_NEWTON_MAP_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "newt/ideal.hpp"

namespace newt {

// Substitution x -> mu^{q'} x1^p, y -> x1^q (y1 + mu^{p'}) with
// p p' - q q' = 1, p' <= q, q' < p (which pins (p',q') uniquely).
// `generic` marks the symbolic-mu variant used for dicritical terminals.
struct NewtonMap {
    long long p = 1, q = 1;
    long long p_prime = 1, q_prime = 0;
    Rat mu;
    bool generic = false;

    bool operator==(const NewtonMap& o) const {
        return p == o.p && q == o.q && generic == o.generic && (generic || mu == o.mu);
    }
    std::string to_string() const;
};

NewtonMap make_map(long long p, long long q, const Rat& mu);
NewtonMap make_generic_map(long long p, long long q);

// Canonical order: steeper faces (larger p/q) first, then mu ascending with
// GENERIC last. Sequences compare lexicographically, shorter prefix first.
int compare_maps(const NewtonMap& a, const NewtonMap& b);
int compare_map_seq(const std::vector<NewtonMap>& a, const std::vector<NewtonMap>& b);

// f(sigma(x,y)) = x1^k f1 with x1 not dividing f1. Requires a concrete mu.
std::pair<long long, BPoly> apply_map_poly(const BPoly& f, const NewtonMap& m);

// x1-order of the image of f under the map with transcendental mu. No
// cancellation can reach the minimal slice, so this is the minimum of
// p*alpha + q*beta over the support.
long long generic_x_order(const BPoly& f, long long p, long long q);

// sigma(I) with the common x1-power kept in the returned ideal's content.
IdealGens transform_ideal(const IdealGens& I, const NewtonMap& m);

// (N0, I1) with sigma(I) = x1^{N0} * I1 and I1 free of x-content.
std::pair<long long, IdealGens> apply_map_ideal(const IdealGens& I, const NewtonMap& m);

} // namespace newt

#endif
