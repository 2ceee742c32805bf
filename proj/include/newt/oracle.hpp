#ifndef NEWT_ORACLE_HPP
#define NEWT_ORACLE_HPP

#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "newt/ideal.hpp"

namespace newt {

// Deterministic coefficient stream; the same seed reproduces every draw.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), eng_(seed) {}
    std::uint64_t seed() const { return seed_; }

    long long uniform(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }
    // Nonzero integer in [-10^6, 10^6].
    Rat nonzero_coeff() {
        long long v = 0;
        while (v == 0) v = uniform(-1000000, 1000000);
        return Rat(static_cast<long>(v));
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

// Intersection multiplicity at the origin of two coprime curves through it:
// the x-order of the y-resultant after a regularizing shear x -> x + c y,
// repeated with three shears that must agree.
long long intersection_mult(const BPoly& f, const BPoly& g, RandomSource& rnd);

// Colength growth coefficient via generic pairs: minimum over five random
// generator combinations of their intersection multiplicity.
long long e_oracle(const IdealGens& I, RandomSource& rnd);

// Order of a generic element: minimum over five random combinations.
long long mult_oracle(const IdealGens& I, RandomSource& rnd);

// Closure data of a monomial ideal from its staircase: content, one factor
// (p, q, lattice-length) per face, and the colength-growth value.
struct MonomialClosure {
    long long k = 0, l = 0;
    std::vector<std::tuple<long long, long long, long long>> factors; // (p, q, delta_S)
    long long e = 0;
};
MonomialClosure monomial_closure(const IdealGens& I);

} // namespace newt

#endif
