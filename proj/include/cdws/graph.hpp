#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cdws/errors.hpp"

namespace cdws {

// Finite undirected graph, no loops, no multiple edges.  Vertices are
// 0..n-1; adjacency is kept as bit masks (n is capped well below 32
// everywhere in this project).
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::uint32_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const SimpleGraph&) const = default;

    // "n; i-j,i-j,..." e.g. "3; 0-1,1-2"; an edgeless graph prints as "n;".
    std::string to_string() const;
    static SimpleGraph parse(const std::string& text);

    nlohmann::json to_json() const;
    static SimpleGraph from_json(const nlohmann::json& j);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint32_t> adj_;
};

// --- isomorphism ----------------------------------------------------------

// Canonical byte string: identical for two (optionally vertex-colored)
// graphs iff they are isomorphic by a color-preserving map.
std::string canonical_code(const SimpleGraph& g, const std::vector<int>& colors = {});

// Relabeling of g realizing the canonical code (colors all equal).
SimpleGraph canonical_label(const SimpleGraph& g, int cap = 10);

// perm[old] = new vertex index.
SimpleGraph apply_permutation(const SimpleGraph& g, const std::vector<int>& perm);

// --- GF(2) linear algebra -------------------------------------------------

// True iff the adjacency matrix over GF(2) has full rank (Gaussian
// elimination).  Always false for odd vertex counts.
bool adjacency_nondegenerate_gf2(const SimpleGraph& g);

// --- 4-term / 2-term operations -------------------------------------------

// Signed combination G - G'_AB - G~_AB + G~'_AB.
struct FourTermElement {
    SimpleGraph g;             // +
    SimpleGraph g_prime;       // -  edge AB deleted
    SimpleGraph g_tilde;       // -  adjacency to A of B's other neighbors switched
    SimpleGraph g_tilde_prime; // +  both
};

FourTermElement four_term_element(const SimpleGraph& g, int a, int b);

// G~_AB alone (no edge deletion).
SimpleGraph two_term_partner(const SimpleGraph& g, int a, int b);

SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2);

// Vertices renumbered 0..|U|-1 in the order given by U.
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& U);

// --- misc -----------------------------------------------------------------

bool is_connected(const SimpleGraph& g);
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

// Glue vertex a of g1 to vertex b of g2 (matroid 1-product on graphs).
SimpleGraph one_vertex_gluing(const SimpleGraph& g1, int a, const SimpleGraph& g2, int b);

// Whitney twist at the vertex pair (a,b): for every vertex in `side`
// (a set of connected components of g minus {a,b}), adjacency to a and
// to b is exchanged.
SimpleGraph whitney_twist_graph(const SimpleGraph& g, int a, int b,
                                const std::vector<int>& side);

// One representative per isomorphism class, in canonical form.
std::vector<SimpleGraph> all_graphs(int n);
std::vector<SimpleGraph> all_connected_graphs(int n);

} // namespace cdws
