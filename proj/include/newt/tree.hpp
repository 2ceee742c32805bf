#ifndef NEWT_TREE_HPP
#define NEWT_TREE_HPP

#include <string>
#include <vector>

#include "newt/process.hpp"

namespace newt {

// Decorated tree of the successive polygons. Each vertex carries (N, d) and
// the edge-end decorations (q above, p below). `prefix` is the concrete map
// sequence reaching the vertex's polygon and (face_p, face_m) the local face
// data; pre_glue_m is face_m and q the glued decoration.
struct TreeVertex {
    int id = -1;
    long long N = 0;
    long long d = 0;
    long long q = 1, p = 1;
    long long pre_glue_m = 1;
    int preceding = -1;     // vertex the polygon was glued on, -1 on the first polygon
    int chain_parent = -1;  // vertex directly above in the same polygon
    std::vector<NewtonMap> prefix;
    long long face_p = 1, face_m = 1;
    bool phantom = false;   // inserted to seat a branch arrow, no entry of its own
};

// Arrows: terminal decorations. Axis arrows carry their value both as
// multiplicity and decoration; branch arrows carry a multiplicity only.
struct TreeArrow {
    enum class Attach { above, below, side };
    int at = -1; // vertex id; -1 only when the tree has no vertices
    Attach attach = Attach::side;
    long long mult = 0;
    bool axis = false;
    long long second_share = 0; // exponent share from the second factor of a tagged merge
};

struct NewtonTree {
    std::vector<TreeVertex> vertices;
    std::vector<TreeArrow> arrows;

    int find_vertex(const std::vector<NewtonMap>& prefix, long long face_p, long long face_m) const;
    // Horizontal-edge count from the root to each vertex is |prefix|; the
    // width is the maximal horizontal count over all root-to-leaf paths.
    long long width() const;
};

// Path products of decorations adjacent to tree paths. Node handles:
// vertices by id, arrows by ~index (bit-complement of their position).
Int rho_vertices(const NewtonTree& t, int v, int w);
Int rho_arrow(const NewtonTree& t, int v, int arrow_index);
// min over the preceding-vertex chain of Definition-style products.
Int rho0(const NewtonTree& t, int v);

// Rebuild the decorated tree from a process; N decorations are computed
// from the arrow multiplicities and dicritical degrees.
NewtonTree reconstruct_tree(const NewtonProcess& p);
// Same, propagating per-entry exponent shares (from merge_processes_tagged)
// onto the branch arrows.
NewtonTree reconstruct_tree_tagged(const NewtonProcess& p,
                                   const std::vector<long long>* second_share);

// Verifies N_v == sum over arrows rho*mult + sum over dicriticals rho*d for
// every vertex; on failure returns the first failing vertex id.
std::pair<bool, int> check_N_decorations(const NewtonTree& t);

// Copy with d_v unit arrows added at every dicritical vertex.
NewtonTree generic_curve_tree(const NewtonTree& t);

// Decorated-tree isomorphism (vertex keys, decorations, d, arrows).
bool trees_isomorphic(const NewtonTree& a, const NewtonTree& b);

std::string tree_to_json(const NewtonTree& t);
NewtonTree tree_from_json(const std::string& text);
std::string tree_to_dot(const NewtonTree& t);

} // namespace newt

#endif
