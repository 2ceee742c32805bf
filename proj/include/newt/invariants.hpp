#ifndef NEWT_INVARIANTS_HPP
#define NEWT_INVARIANTS_HPP

#include <string>
#include <vector>

#include "newt/driver.hpp"

namespace newt {

// One row per dicritical vertex, canonical tree order.
struct DicriticalInfo {
    std::vector<NewtonMap> maps; // ending with the GENERIC map of the face
    long long N = 0;
    long long d = 0;
    Int rho;                     // min chain product
    std::vector<int> chain;      // vertex ids, outermost first, the vertex last
    int vertex = -1;
};

struct DicriticalReport {
    std::vector<DicriticalInfo> rows;
};

DicriticalReport rees_valuations(const AnalysisResult& an);

// Valuation of f at a tree vertex of `an`, computed both through the merged
// tree of (f) * I (path products over the arrows of f) and by direct
// substitution; the two must agree.
long long valuation_Nv(const AnalysisResult& an, const IdealGens& I, int vertex_id,
                       const BPoly& f);

long long mult_m(const AnalysisResult& an);          // sum rho(v) d_v
long long hs_multiplicity(const AnalysisResult& an); // sum N_v d_v
long long hs_via_areas(const AnalysisResult& an);    // sum of anchored polygon areas
long long degree_function(const AnalysisResult& an, const IdealGens& I, const BPoly& f);
long long j_multiplicity(const AnalysisResult& an, const IdealGens& I, const RunConfig& cfg = {});
Rat lojasiewicz(const AnalysisResult& an);

std::string invariants_report_json(const AnalysisResult& an, const IdealGens& I,
                                   const RunConfig& cfg = {});
std::string invariants_report_text(const AnalysisResult& an, const IdealGens& I,
                                   const RunConfig& cfg = {});

} // namespace newt

#endif
