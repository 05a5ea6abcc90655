#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cdws/chord.hpp"
#include "cdws/graph.hpp"

namespace cdws {

// A split of a graph: bipartition {V1, V2}, both sides of size >= 2,
// whose cross edges form the complete bipartite graph K(W1, W2) on the
// attachment sets W1 = V1-side endpoints, W2 = V2-side endpoints.
struct Split {
    std::vector<int> v1, v2; // sorted bipartition
    std::vector<int> w1, w2; // sorted attachment sets
};

struct ComponentKind {
    enum Kind { Complete, Star, Prime } kind = Prime;
    int center = -1; // star center, else -1

    std::string name() const;
    bool operator==(const ComponentKind&) const = default;
};

// One node of a decomposition tree.  `orig[v]` is the vertex id in the
// decomposed graph, or -1 when v is a marker.
struct TreeComponent {
    SimpleGraph graph;
    std::vector<int> markers; // vertex indices that are markers
    std::vector<int> orig;    // size = graph.vertex_count()
    ComponentKind kind;
};

// Dashed edge joining marker `marker1` of components[comp1] to marker
// `marker2` of components[comp2].
struct DashedEdge {
    int comp1 = 0, marker1 = 0;
    int comp2 = 0, marker2 = 0;
};

struct DecompositionTree {
    std::vector<TreeComponent> components;
    std::vector<DashedEdge> dashed;

    nlohmann::json to_json() const;
};

// The composition Γ1 ⊠ Γ2 along markers v1, v2: vertices
// (V1 - v1) ⊔ (V2 - v2), internal edges kept, and a cross edge (a, b)
// whenever a ~ v1 and b ~ v2.  Result vertex order: g1's vertices
// except v1, then g2's except v2.
SimpleGraph compose(const SimpleGraph& g1, int v1, const SimpleGraph& g2, int v2);

// All splits by exhaustive bipartition scan.
std::vector<Split> find_splits(const SimpleGraph& g, int cap = 12);

// Canonical split decomposition of a connected graph: split
// recursively until split-free, then merge dashed-adjacent
// Complete-Complete pairs and center-to-leaf Star-Star pairs.
DecompositionTree canonical_decomposition(const SimpleGraph& g, int cap = 12);

ComponentKind classify_component(const SimpleGraph& g);

// Contract every dashed edge via compose; vertices come back in
// original-id order.
SimpleGraph recompose(const DecompositionTree& tree);

// Label-structure fingerprint: equal for two trees iff they agree up to
// component isomorphism and dashed-edge structure.
std::string tree_fingerprint(const DecompositionTree& tree);

// All words over labels 0..n-1 whose interlacement graph equals g with
// the identity vertex correspondence, up to rotation/reflection of the
// circle (labels kept).
std::vector<Word> labeled_realizations(const SimpleGraph& g, int cap = 10);

// Realizations of a decomposition component as chord diagrams with the
// marker chords distinguished by their labels.
std::vector<ChordDiagram> realize_component(const SimpleGraph& g, int cap = 10);

// Cut both circles at their marked chord and glue the four arcs in
// alternating order; the four possible gluings, raw words.  Labels of
// the two inputs must be disjoint apart from nothing: the markers are
// removed.
std::vector<Word> sew_words(const Word& w1, int m1, const Word& w2, int m2);

// Four-way sewing of canonical diagrams along marked chords m1 of d1
// and m2 of d2; results deduplicated by canonical form.
std::vector<ChordDiagram> sew(const ChordDiagram& d1, int m1, const ChordDiagram& d2, int m2);

// All canonical chord diagrams whose intersection graph is isomorphic
// to the connected graph g, via decomposition + four-way sewing.
std::vector<ChordDiagram> enumerate_realizations(const SimpleGraph& g, int cap = 8);

} // namespace cdws
