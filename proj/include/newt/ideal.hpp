#ifndef NEWT_IDEAL_HPP
#define NEWT_IDEAL_HPP

#include <string>
#include <vector>

#include "newt/bpoly.hpp"

namespace newt {

// Generators of a non-trivial ideal of Q[x,y] (viewed inside Q[[x,y]]).
// Construction drops zero polynomials and factors out the common monomial
// content x^a y^b; the stored generators then have monomial content (0,0).
class IdealGens {
  public:
    explicit IdealGens(std::vector<BPoly> raw);
    static IdealGens parse(const std::string& text);      // expression list, ';' or newline separated
    static IdealGens parse_file_text(const std::string&); // '#' comments, blank lines ignored

    const std::vector<BPoly>& gens() const { return gens_; }      // content-free
    long long content_a() const { return a_; }
    long long content_b() const { return b_; }

    std::vector<BPoly> full_gens() const; // content multiplied back in

    bool any_unit_generator() const; // some content-free generator has a nonzero constant term

    std::string to_string() const;

  private:
    std::vector<BPoly> gens_;
    long long a_ = 0, b_ = 0;
};

} // namespace newt

#endif
