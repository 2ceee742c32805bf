#include "newt/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include <json.hpp>

#include "newt/diagram.hpp"
#include "newt/errors.hpp"

namespace newt {

namespace {

long long checked_ll(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw error(std::string("value overflow in ") + what);
    return v.get_si();
}

struct VertexKey {
    std::vector<NewtonMap> prefix;
    long long face_p, face_m;
    bool operator<(const VertexKey& o) const {
        if (int c = compare_map_seq(prefix, o.prefix)) return c < 0;
        // steeper faces first inside a polygon
        __int128 l = static_cast<__int128>(face_p) * o.face_m;
        __int128 r = static_cast<__int128>(o.face_p) * face_m;
        if (l != r) return l > r;
        return false;
    }
    bool operator==(const VertexKey& o) const {
        return prefix == o.prefix && face_p == o.face_p && face_m == o.face_m;
    }
};

// Face of the single branch carried by a non-axis certificate: (1, s) where
// s is the order of h in y + h(x).
std::pair<long long, long long> branch_face(const BPoly& cert) {
    IdealGens one({cert});
    auto fs = faces(diagram(one));
    if (fs.empty() || fs.front().origin != Point{0, 1})
        throw cross_check_error("branch certificate without Weierstrass degree 1");
    return {fs.front().p, fs.front().q};
}

} // namespace

int NewtonTree::find_vertex(const std::vector<NewtonMap>& prefix, long long face_p,
                            long long face_m) const {
    for (auto& v : vertices)
        if (v.prefix == prefix && v.face_p == face_p && v.face_m == face_m) return v.id;
    return -1;
}

long long NewtonTree::width() const {
    if (vertices.empty()) return 0;
    long long best = 0;
    std::function<long long(int)> lvl = [&](int id) -> long long {
        const TreeVertex& v = vertices[id];
        if (v.preceding < 0) return 0;
        return 1 + lvl(v.preceding);
    };
    for (auto& v : vertices) best = std::max(best, 1 + lvl(v.id));
    return best;
}

// ---------------------------------------------------------------------------
// Path products
// ---------------------------------------------------------------------------

namespace {

struct Adjacency {
    // node ids: vertices [0, V); arrows [V, V+A)
    struct Slot {
        int other;
        bool my_up;   // edge sits in this node's "up" slot (meaningful for vertices)
        bool my_down; // ... "down" slot
    };
    std::vector<std::vector<Slot>> adj;
    int nvert;

    void add_edge(int a, bool a_up, bool a_down, int b, bool b_up, bool b_down) {
        adj[a].push_back({b, a_up, a_down});
        adj[b].push_back({a, b_up, b_down});
    }
};

Adjacency build_adjacency(const NewtonTree& t) {
    Adjacency g;
    g.nvert = static_cast<int>(t.vertices.size());
    g.adj.resize(t.vertices.size() + t.arrows.size());
    // chain edges: child's up slot, parent's down slot
    for (auto& v : t.vertices)
        if (v.chain_parent >= 0) g.add_edge(v.chain_parent, false, true, v.id, true, false);
    // gluing edges: chain top's up slot, plain at the preceding vertex
    for (auto& v : t.vertices)
        if (v.chain_parent < 0 && v.preceding >= 0) g.add_edge(v.preceding, false, false, v.id, true, false);
    for (std::size_t i = 0; i < t.arrows.size(); ++i) {
        const TreeArrow& a = t.arrows[i];
        int an = g.nvert + static_cast<int>(i);
        if (a.at < 0) continue; // vertexless tree; nothing to connect
        switch (a.attach) {
            case TreeArrow::Attach::above: g.add_edge(a.at, true, false, an, false, false); break;
            case TreeArrow::Attach::below: g.add_edge(a.at, false, true, an, false, false); break;
            case TreeArrow::Attach::side: g.add_edge(a.at, false, false, an, false, false); break;
        }
    }
    return g;
}

Int path_product(const NewtonTree& t, const Adjacency& g, int from, int to) {
    if (from == to) {
        const TreeVertex& v = t.vertices[from];
        return make_int(v.q) * make_int(v.p);
    }
    const int n = static_cast<int>(g.adj.size());
    std::vector<int> prev(n, -2);
    std::queue<int> q;
    q.push(from);
    prev[from] = -1;
    while (!q.empty()) {
        int cur = q.front();
        q.pop();
        if (cur == to) break;
        for (auto& s : g.adj[cur])
            if (prev[s.other] == -2) {
                prev[s.other] = cur;
                q.push(s.other);
            }
    }
    if (prev[to] == -2) throw error("disconnected tree");
    std::vector<int> path;
    for (int cur = to; cur != -1; cur = prev[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    Int prod = 1;
    for (std::size_t i = 0; i < path.size(); ++i) {
        int node = path[i];
        if (node >= g.nvert) continue;
        const TreeVertex& v = t.vertices[node];
        bool up_used = false, down_used = false;
        auto mark = [&](int neigh) {
            for (auto& s : g.adj[node])
                if (s.other == neigh) {
                    up_used = up_used || s.my_up;
                    down_used = down_used || s.my_down;
                    return;
                }
        };
        if (i > 0) mark(path[i - 1]);
        if (i + 1 < path.size()) mark(path[i + 1]);
        if (!up_used) prod *= make_int(v.q);
        if (!down_used) prod *= make_int(v.p);
    }
    return prod;
}

} // namespace

Int rho_vertices(const NewtonTree& t, int v, int w) {
    Adjacency g = build_adjacency(t);
    return path_product(t, g, v, w);
}

Int rho_arrow(const NewtonTree& t, int v, int arrow_index) {
    Adjacency g = build_adjacency(t);
    return path_product(t, g, v, g.nvert + arrow_index);
}

Int rho0(const NewtonTree& t, int v) {
    // Chain of preceding vertices {v_i, ..., v_1, v}; the minimum of the two
    // telescoped products  p_i p_{i-1} ... p_1 p  and  q_i p_{i-1} ... p_1 p.
    const TreeVertex& vv = t.vertices[v];
    if (vv.preceding < 0) return make_int(std::min(vv.p, vv.q));
    Int tail = make_int(vv.p);
    int cur = vv.preceding;
    while (t.vertices[cur].preceding >= 0) {
        tail *= make_int(t.vertices[cur].p);
        cur = t.vertices[cur].preceding;
    }
    const TreeVertex& outer = t.vertices[cur];
    Int c1 = tail * make_int(outer.p);
    Int c2 = tail * make_int(outer.q);
    return c1 < c2 ? c1 : c2;
}

// ---------------------------------------------------------------------------
// Reconstruction
// ---------------------------------------------------------------------------

NewtonTree reconstruct_tree_tagged(const NewtonProcess& proc,
                                   const std::vector<long long>* second_share) {
    if (process_depth(proc) == 0) {
        // x^k y^l or x^k (y+h)^nu: a single edge between two arrows.
        NewtonTree t;
        TreeArrow top;
        top.axis = true;
        top.mult = proc.x_content;
        top.attach = TreeArrow::Attach::above;
        TreeArrow bottom;
        bottom.attach = TreeArrow::Attach::below;
        if (proc.entries.empty()) {
            bottom.axis = true;
            bottom.mult = proc.y_content;
        } else {
            bottom.mult = proc.entries.front().nu;
            bottom.second_share =
                second_share && !second_share->empty() ? second_share->front() : 0;
        }
        t.arrows.push_back(top);
        t.arrows.push_back(bottom);
        return t;
    }
    std::vector<ProcessEntry> entries = proc.entries;
    std::vector<long long> share(entries.size(), 0);
    if (second_share) share = *second_share;

    // Refine branch entries until they no longer sit on a polygon another
    // entry walks through: their arrows belong inside those polygons.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            ProcessEntry& e = entries[i];
            if (e.is_dicritical() || branch_is_axis(e.certificate)) continue;
            NewtonMap next = branch_next_map(e.certificate);
            std::vector<NewtonMap> cand = e.maps;
            cand.push_back(next);
            bool trigger = false;
            for (std::size_t j = 0; j < entries.size() && !trigger; ++j) {
                if (j == i) continue;
                const auto& om = entries[j].maps;
                if (om.size() >= cand.size() &&
                    std::equal(cand.begin(), cand.end(), om.begin()))
                    trigger = true;
                if (om == e.maps && !entries[j].is_dicritical() &&
                    !branch_is_axis(entries[j].certificate) &&
                    branch_next_map(entries[j].certificate) == next)
                    trigger = true;
            }
            if (trigger) {
                e.certificate = branch_advance(e.certificate, next);
                e.maps = cand;
                changed = true;
            }
        }
    }

    NewtonTree t;
    std::map<VertexKey, int> index;
    auto ensure_vertex = [&](const VertexKey& k, bool phantom) {
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        TreeVertex v;
        v.id = static_cast<int>(t.vertices.size());
        v.prefix = k.prefix;
        v.face_p = k.face_p;
        v.face_m = k.face_m;
        v.phantom = phantom;
        t.vertices.push_back(v);
        index.emplace(k, v.id);
        return v.id;
    };

    for (auto& e : entries) {
        for (std::size_t i = 0; i < e.maps.size(); ++i) {
            VertexKey k{{e.maps.begin(), e.maps.begin() + i}, e.maps[i].p, e.maps[i].q};
            int id = ensure_vertex(k, false);
            t.vertices[id].phantom = false;
            if (e.is_dicritical() && i + 1 == e.maps.size()) t.vertices[id].d = e.d;
        }
    }

    // Branch arrows (may add phantom vertices first).
    struct PendingArrow {
        VertexKey at;
        TreeArrow::Attach attach;
        long long mult;
        long long share;
    };
    std::vector<PendingArrow> pend;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const ProcessEntry& e = entries[i];
        if (e.is_dicritical()) continue;
        auto chain_members = [&](const std::vector<NewtonMap>& pre) {
            std::vector<int> out;
            for (auto& v : t.vertices)
                if (v.prefix == pre) out.push_back(v.id);
            return out;
        };
        std::vector<int> chain = chain_members(e.maps);
        if (branch_is_axis(e.certificate)) {
            if (chain.empty()) {
                VertexKey k{{e.maps.begin(), e.maps.end() - 1}, e.maps.back().p, e.maps.back().q};
                pend.push_back({k, TreeArrow::Attach::side, e.nu, share[i]});
            } else {
                // bottom of the chain: flattest face
                int bot = chain.front();
                for (int id : chain) {
                    const TreeVertex &a = t.vertices[id], &b = t.vertices[bot];
                    if (static_cast<__int128>(a.face_p) * b.face_m <
                        static_cast<__int128>(b.face_p) * a.face_m)
                        bot = id;
                }
                const TreeVertex& bv = t.vertices[bot];
                pend.push_back({VertexKey{bv.prefix, bv.face_p, bv.face_m},
                                TreeArrow::Attach::below, e.nu, share[i]});
            }
        } else {
            if (chain.empty()) {
                VertexKey k{{e.maps.begin(), e.maps.end() - 1}, e.maps.back().p, e.maps.back().q};
                pend.push_back({k, TreeArrow::Attach::side, e.nu, share[i]});
            } else {
                auto [fp, fm] = branch_face(e.certificate);
                VertexKey k{e.maps, fp, fm};
                bool exists = index.count(k) > 0;
                ensure_vertex(k, !exists);
                pend.push_back({k, TreeArrow::Attach::side, e.nu, share[i]});
            }
        }
    }
    for (auto& pa : pend) {
        TreeArrow a;
        a.at = index.at(pa.at);
        a.attach = pa.attach;
        a.mult = pa.mult;
        a.second_share = pa.share;
        t.arrows.push_back(a);
    }

    // Chain links and decorations, outermost polygons first.
    std::vector<int> order;
    for (auto& [k, id] : index) order.push_back(id);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return t.vertices[x].prefix.size() < t.vertices[y].prefix.size();
    });
    for (int id : order) {
        TreeVertex& v = t.vertices[id];
        // vertex directly above in the same polygon: smallest strictly steeper face
        int above = -1;
        for (auto& w : t.vertices) {
            if (w.id == id || !(w.prefix == v.prefix)) continue;
            __int128 lw = static_cast<__int128>(w.face_p) * v.face_m;
            __int128 lv = static_cast<__int128>(v.face_p) * w.face_m;
            if (lw <= lv) continue; // not steeper
            if (above < 0) {
                above = w.id;
            } else {
                const TreeVertex& ab = t.vertices[above];
                if (static_cast<__int128>(w.face_p) * ab.face_m <
                    static_cast<__int128>(ab.face_p) * w.face_m)
                    above = w.id;
            }
        }
        v.chain_parent = above;
        v.pre_glue_m = v.face_m;
        v.p = v.face_p;
        if (v.prefix.empty()) {
            v.preceding = -1;
            v.q = v.face_m;
        } else {
            VertexKey pk{{v.prefix.begin(), v.prefix.end() - 1}, v.prefix.back().p,
                         v.prefix.back().q};
            auto it = index.find(pk);
            if (it == index.end()) throw inconsistent_process("missing preceding vertex");
            v.preceding = it->second;
            const TreeVertex& v0 = t.vertices[v.preceding];
            v.q = v0.p * v0.q * v.face_p + v.face_m;
        }
    }

    // Root axis arrows.
    {
        TreeArrow top, bottom;
        top.axis = bottom.axis = true;
        top.mult = proc.x_content;
        bottom.mult = proc.y_content;
        top.attach = TreeArrow::Attach::above;
        bottom.attach = TreeArrow::Attach::below;
        int root_top = -1, root_bot = -1;
        for (auto& v : t.vertices) {
            if (!v.prefix.empty()) continue;
            if (v.chain_parent < 0) root_top = v.id;
            bool has_below = false;
            for (auto& w : t.vertices)
                if (w.chain_parent == v.id) has_below = true;
            if (!has_below) root_bot = v.id;
        }
        top.at = root_top;
        bottom.at = root_bot;
        t.arrows.push_back(top);
        t.arrows.push_back(bottom);
    }

    // N decorations from the structure.
    Adjacency g = build_adjacency(t);
    for (auto& v : t.vertices) {
        Int n = 0;
        for (std::size_t i = 0; i < t.arrows.size(); ++i) {
            const TreeArrow& a = t.arrows[i];
            if (a.mult == 0 || a.at < 0) continue;
            n += path_product(t, g, v.id, g.nvert + static_cast<int>(i)) * make_int(a.mult);
        }
        for (auto& w : t.vertices)
            if (w.d > 0) n += path_product(t, g, v.id, w.id) * make_int(w.d);
        v.N = checked_ll(n, "vertex decoration N");
    }
    return t;
}

NewtonTree reconstruct_tree(const NewtonProcess& p) { return reconstruct_tree_tagged(p, nullptr); }

std::pair<bool, int> check_N_decorations(const NewtonTree& t) {
    Adjacency g = build_adjacency(t);
    for (auto& v : t.vertices) {
        Int n = 0;
        for (std::size_t i = 0; i < t.arrows.size(); ++i) {
            const TreeArrow& a = t.arrows[i];
            if (a.mult == 0 || a.at < 0) continue;
            n += path_product(t, g, v.id, g.nvert + static_cast<int>(i)) * make_int(a.mult);
        }
        for (auto& w : t.vertices)
            if (w.d > 0) n += path_product(t, g, v.id, w.id) * make_int(w.d);
        if (n != make_int(v.N)) return {false, v.id};
    }
    return {true, -1};
}

NewtonTree generic_curve_tree(const NewtonTree& t) {
    NewtonTree out = t;
    for (auto& v : out.vertices)
        for (long long i = 0; i < v.d; ++i) {
            TreeArrow a;
            a.at = v.id;
            a.attach = TreeArrow::Attach::side;
            a.mult = 1;
            out.arrows.push_back(a);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism (decorations kept, root values mu forgotten)
// ---------------------------------------------------------------------------

namespace {

std::string chain_signature(const NewtonTree& t, const std::vector<NewtonMap>& prefix);

std::string vertex_signature(const NewtonTree& t, const TreeVertex& v) {
    std::string s = "v(" + std::to_string(v.face_p) + "," + std::to_string(v.face_m) + "," +
                    std::to_string(v.q) + "," + std::to_string(v.p) + "," + std::to_string(v.N) +
                    "," + std::to_string(v.d);
    std::vector<std::string> arrows;
    for (auto& a : t.arrows)
        if (a.at == v.id)
            arrows.push_back("a(" + std::to_string(static_cast<int>(a.attach)) + "," +
                             std::to_string(a.mult) + "," + (a.axis ? "x" : "b") + ")");
    std::sort(arrows.begin(), arrows.end());
    for (auto& a : arrows) s += a;
    // child polygons: entries one map longer, grouped by the full prefix
    std::vector<std::string> kids;
    std::set<std::string> seen;
    for (auto& w : t.vertices) {
        if (w.prefix.size() != v.prefix.size() + 1) continue;
        if (!std::equal(v.prefix.begin(), v.prefix.end(), w.prefix.begin())) continue;
        if (w.prefix.back().p != v.face_p || w.prefix.back().q != v.face_m) continue;
        std::string key;
        for (auto& m : w.prefix) key += m.to_string();
        if (!seen.insert(key).second) continue;
        kids.push_back(chain_signature(t, w.prefix));
    }
    std::sort(kids.begin(), kids.end());
    for (auto& k : kids) s += k;
    return s + ")";
}

std::string chain_signature(const NewtonTree& t, const std::vector<NewtonMap>& prefix) {
    std::vector<const TreeVertex*> chain;
    for (auto& v : t.vertices)
        if (v.prefix == prefix) chain.push_back(&v);
    std::sort(chain.begin(), chain.end(), [](const TreeVertex* a, const TreeVertex* b) {
        return static_cast<__int128>(a->face_p) * b->face_m >
               static_cast<__int128>(b->face_p) * a->face_m;
    });
    std::string s = "[";
    for (auto* v : chain) s += vertex_signature(t, *v);
    return s + "]";
}

} // namespace

bool trees_isomorphic(const NewtonTree& a, const NewtonTree& b) {
    if (a.vertices.empty() || b.vertices.empty()) {
        if (a.vertices.size() != b.vertices.size()) return false;
        auto sig = [](const NewtonTree& t) {
            std::vector<std::string> out;
            for (auto& ar : t.arrows)
                out.push_back(std::to_string(static_cast<int>(ar.attach)) + ":" +
                              std::to_string(ar.mult));
            std::sort(out.begin(), out.end());
            std::string s;
            for (auto& x : out) s += x + ";";
            return s;
        };
        return sig(a) == sig(b);
    }
    return chain_signature(a, {}) == chain_signature(b, {});
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string tree_to_json(const NewtonTree& t) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (auto& v : t.vertices) {
        nlohmann::ordered_json jv;
        jv["id"] = v.id;
        jv["N"] = v.N;
        jv["d"] = v.d;
        jv["q"] = v.q;
        jv["p"] = v.p;
        jv["pre_glue_m"] = v.pre_glue_m;
        jv["preceding"] = v.preceding;
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (auto& v : t.vertices) {
        nlohmann::ordered_json je;
        if (v.chain_parent >= 0) {
            je["from"] = v.chain_parent;
            je["to"] = v.id;
            je["kind"] = "vertical";
        } else if (v.preceding >= 0) {
            je["from"] = v.preceding;
            je["to"] = v.id;
            je["kind"] = "horizontal";
        } else {
            continue;
        }
        j["edges"].push_back(je);
    }
    j["arrows"] = nlohmann::ordered_json::array();
    for (auto& a : t.arrows) {
        nlohmann::ordered_json ja;
        ja["at"] = a.at;
        ja["mult"] = a.mult;
        if (a.axis)
            ja["decoration"] = a.mult;
        else
            ja["decoration"] = nullptr;
        ja["attach"] = a.attach == TreeArrow::Attach::above   ? "above"
                       : a.attach == TreeArrow::Attach::below ? "below"
                                                              : "side";
        j["arrows"].push_back(ja);
    }
    return j.dump();
}

NewtonTree tree_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    NewtonTree t;
    for (auto& jv : j.at("vertices")) {
        TreeVertex v;
        v.id = jv.at("id").get<int>();
        v.N = jv.at("N").get<long long>();
        v.d = jv.at("d").get<long long>();
        v.q = jv.at("q").get<long long>();
        v.p = jv.at("p").get<long long>();
        v.pre_glue_m = jv.at("pre_glue_m").get<long long>();
        v.preceding = jv.at("preceding").get<int>();
        v.face_p = v.p;
        v.face_m = v.pre_glue_m;
        v.chain_parent = -1;
        t.vertices.push_back(v);
    }
    std::sort(t.vertices.begin(), t.vertices.end(),
              [](const TreeVertex& a, const TreeVertex& b) { return a.id < b.id; });
    for (auto& je : j.at("edges"))
        if (je.at("kind") == "vertical")
            t.vertices[je.at("to").get<int>()].chain_parent = je.at("from").get<int>();
    for (auto& ja : j.at("arrows")) {
        TreeArrow a;
        a.at = ja.at("at").get<int>();
        a.mult = ja.at("mult").get<long long>();
        a.axis = !ja.at("decoration").is_null();
        std::string at = ja.at("attach").get<std::string>();
        a.attach = at == "above" ? TreeArrow::Attach::above
                   : at == "below" ? TreeArrow::Attach::below
                                   : TreeArrow::Attach::side;
        t.arrows.push_back(a);
    }
    return t;
}

std::string tree_to_dot(const NewtonTree& t) {
    std::string out = "graph newton_tree {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (auto& v : t.vertices) {
        std::string label = v.d > 0 ? "(" + std::to_string(v.N) + "," + std::to_string(v.d) + ")"
                                    : "(" + std::to_string(v.N) + ")";
        out += "  v" + std::to_string(v.id) + " [label=\"" + label + "\"];\n";
    }
    for (std::size_t i = 0; i < t.arrows.size(); ++i) {
        const TreeArrow& a = t.arrows[i];
        std::string label = a.axis ? "(" + std::to_string(a.mult) + ")" : std::to_string(a.mult);
        out += "  a" + std::to_string(i) + " [shape=rarrow, label=\"" + label + "\"];\n";
    }
    for (auto& v : t.vertices) {
        if (v.chain_parent >= 0) {
            const TreeVertex& u = t.vertices[v.chain_parent];
            out += "  v" + std::to_string(u.id) + " -- v" + std::to_string(v.id) +
                   " [taillabel=\"" + std::to_string(u.p) + "\", headlabel=\"" +
                   std::to_string(v.q) + "\"];\n";
        } else if (v.preceding >= 0) {
            out += "  v" + std::to_string(v.preceding) + " -- v" + std::to_string(v.id) +
                   " [style=dashed, headlabel=\"" + std::to_string(v.q) + "\"];\n";
        }
    }
    for (std::size_t i = 0; i < t.arrows.size(); ++i) {
        const TreeArrow& a = t.arrows[i];
        if (a.at < 0) continue;
        std::string attrs;
        if (a.attach == TreeArrow::Attach::above)
            attrs = " [taillabel=\"" + std::to_string(t.vertices[a.at].q) + "\"]";
        else if (a.attach == TreeArrow::Attach::below)
            attrs = " [taillabel=\"" + std::to_string(t.vertices[a.at].p) + "\"]";
        out += "  v" + std::to_string(a.at) + " -- a" + std::to_string(i) + attrs + ";\n";
    }
    if (t.vertices.empty() && t.arrows.size() >= 2)
        out += "  a0 -- a1;\n";
    out += "}\n";
    return out;
}

} // namespace newt
