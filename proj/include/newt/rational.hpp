#ifndef NEWT_RATIONAL_HPP
#define NEWT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace newt {

// Exact rationals. mpq_class keeps values reduced once canonicalized; every
// constructor path below canonicalizes so invariants hold everywhere else.
using Int = mpz_class;
using Rat = mpq_class;

inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long long num, long long den = 1) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Parses "a" or "a/b"; returns false on garbage.
inline bool rat_from_string(const std::string& s, Rat& out) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) return false;
    v.canonicalize();
    out = v;
    return true;
}

} // namespace newt

#endif
