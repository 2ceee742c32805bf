#ifndef NEWT_ERRORS_HPP
#define NEWT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace newt {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial / ideal-file text. Carries the byte offset of the
// first offending character.
struct syntax_error : error {
    std::size_t offset;
    syntax_error(const std::string& msg, std::size_t off)
        : error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

struct zero_polynomial : error {
    zero_polynomial() : error("operation undefined for the zero polynomial") {}
};

struct both_constant_in_y : error {
    both_constant_in_y() : error("resultant needs at least one input with positive y-degree") {}
};

struct not_coprime : error {
    not_coprime(long long p, long long q)
        : error("(" + std::to_string(p) + "," + std::to_string(q) + ") is not a coprime pair") {}
};

struct zero_mu : error {
    zero_mu() : error("substitution parameter mu must be nonzero") {}
};

struct face_mismatch : error {
    face_mismatch() : error("face does not belong to the polygon of this ideal") {}
};

struct unbounded_region : error {
    unbounded_region() : error("region between the polygon and the axes is unbounded") {}
};

// A face polynomial has a non-constant factor without rational roots, so the
// recursion cannot continue over Q. The message names the offending factor.
struct ground_field_error : error {
    std::string factor;
    explicit ground_field_error(const std::string& residual)
        : error("irrational face-polynomial root required; residual factor " + residual),
          factor(residual) {}
};

struct trivial_ideal : error {
    trivial_ideal() : error("ideal contains a unit (nonzero constant term in a generator)") {}
};

struct depth_guard_exceeded : error {
    explicit depth_guard_exceeded(long long guard)
        : error("recursion exceeded max_depth guard " + std::to_string(guard)) {}
};

struct not_finite_codim : error {
    not_finite_codim() : error("ideal is not of finite codimension") {}
};

struct principal_ideal : error {
    principal_ideal() : error("operation requires a non-principal ideal") {}
};

struct not_monomial : error {
    not_monomial() : error("operation requires a monomial ideal") {}
};

struct common_factor : error {
    common_factor() : error("inputs share a non-constant common factor") {}
};

struct not_vanishing : error {
    not_vanishing() : error("input does not vanish at the origin") {}
};

struct inconsistent_process : error {
    explicit inconsistent_process(const std::string& why)
        : error("process entries are mutually inconsistent: " + why) {}
};

// Two independent computations of the same quantity disagreed. Always a bug.
struct cross_check_error : error {
    explicit cross_check_error(const std::string& what_failed)
        : error("internal cross-check failed: " + what_failed) {}
};

} // namespace newt

#endif
