#ifndef NEWT_PROCESS_HPP
#define NEWT_PROCESS_HPP

#include <string>
#include <vector>

#include "newt/newton_map.hpp"

namespace newt {

// Terminal of a process entry: a dicritical face of degree d (map sequence
// then ends with a GENERIC map), or a branch with exponent nu, certified by
// a polynomial whose unique local branch through the origin it denotes.
struct ProcessEntry {
    enum class Kind { dicritical, branch };
    std::vector<NewtonMap> maps;
    Kind kind = Kind::dicritical;
    long long d = 0;      // dicritical degree
    BPoly certificate;    // branch
    long long nu = 0;     // branch exponent

    bool is_dicritical() const { return kind == Kind::dicritical; }
    std::string to_string() const;
};

struct NewtonProcess {
    long long x_content = 0;
    long long y_content = 0;
    std::vector<ProcessEntry> entries; // canonical order

    void sort_canonical();
    std::string to_string() const;
};

// The two certificates denote the same local branch iff their gcd vanishes
// at the origin.
bool branches_equal(const BPoly& c1, const BPoly& c2);

// Union with exponent addition on matching keys; contents add.
NewtonProcess merge_processes(const NewtonProcess& p1, const NewtonProcess& p2);

// Same, remembering how much of each resulting entry's exponent came from
// p2 (used by the valuation machinery).
NewtonProcess merge_processes_tagged(const NewtonProcess& p1, const NewtonProcess& p2,
                                     std::vector<long long>& from_second);

// A branch certificate is "axis type" when its branch is y = 0.
bool branch_is_axis(const BPoly& cert);
// Next canonical map of a non-axis certificate (its lowest face is linear
// with a rational root) and the advanced certificate.
NewtonMap branch_next_map(const BPoly& cert);
BPoly branch_advance(const BPoly& cert, const NewtonMap& m);

// Structural process equality, insensitive to how deep each branch entry was
// driven (a branch entry may be written at any refinement depth).
bool same_process(const NewtonProcess& a, const NewtonProcess& b);

// Number of map layers needed: max entry length, except that a lone branch
// with every p = 1 and no y-content is already of the final x^k(y+h)^nu form.
long long process_depth(const NewtonProcess& p);

// Zariski-type factor of the integral closure.
struct FactorDescriptor {
    enum class Kind { monomial_x, monomial_y, simple_ideal, curve };
    Kind kind;
    long long exponent = 1;
    std::vector<NewtonMap> maps;  // simple_ideal
    std::vector<BPoly> gens;      // synthesized generators when available
    BPoly curve_certificate;      // curve

    std::string to_string() const;
};

std::vector<FactorDescriptor> zariski_factorization(const NewtonProcess& p);
std::string factorization_to_string(const std::vector<FactorDescriptor>& fs);

// Minimal monomial generators of the simple integrally closed ideal whose
// polygon is the single face p*alpha + q*beta = p*q.
std::vector<BPoly> simple_ideal_gens(long long p, long long q);

std::string process_to_json(const NewtonProcess& p);
NewtonProcess process_from_json(const std::string& text);

} // namespace newt

#endif
