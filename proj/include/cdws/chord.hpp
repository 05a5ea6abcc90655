#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cdws/graph.hpp"

namespace cdws {

// Raw double occurrence word; labels are arbitrary distinct ints, each
// occurring exactly twice.
using Word = std::vector<int>;

// Chord diagram encoded as a double occurrence word on positions
// 0..2n-1.  The stored representative has labels renumbered 0..n-1 in
// order of first occurrence; rotation/reflection classes are collapsed
// by canonical_form().
class ChordDiagram {
public:
    ChordDiagram() = default; // empty diagram, n = 0
    explicit ChordDiagram(const Word& raw);

    // Letters ("abab") or whitespace-separated integers ("0 1 0 1").
    static ChordDiagram parse(const std::string& text);

    int chord_count() const { return static_cast<int>(word_.size()) / 2; }
    const Word& word() const { return word_; }

    // Lexicographically least representative over all rotations,
    // reflections and relabelings.
    ChordDiagram canonical_form() const;

    std::string to_string() const;
    nlohmann::json to_json() const;
    static ChordDiagram from_json(const nlohmann::json& j);

    auto operator<=>(const ChordDiagram&) const = default;

private:
    Word word_;
};

// Intersection graph of a raw word; vertex i corresponds to the i-th
// smallest label.
SimpleGraph interlacement_graph(const Word& w);

// Vertex i = chord i.
SimpleGraph intersection_graph(const ChordDiagram& d);

// All canonical diagrams with n chords, sorted.
std::vector<ChordDiagram> enumerate_diagrams(int n, int cap = 7);

// Two disjoint cyclic arcs such that every chord touching them lies
// entirely on them.  Empty arcs keep an anchor gap position: rotating a
// share into an empty arc is a genuine mutation.
struct Share {
    int arc1_start = 0, arc1_len = 0;
    int arc2_start = 0, arc2_len = 0;
    std::vector<int> chords; // sorted chord labels on the arcs
};

std::vector<Share> find_shares(const ChordDiagram& d);

// Klein four-group of share symmetries.
enum class MutationSymmetry { Identity, SwapArcs, ReverseArcs, RotateHalfTurn };

ChordDiagram mutate(const ChordDiagram& d, const Share& s, MutationSymmetry m);

// BFS closure of canonical forms under all single mutations.
std::vector<ChordDiagram> mutation_orbit(const ChordDiagram& d, int cap = 7);

// Connected sum: concatenation on disjoint labels.
ChordDiagram product(const ChordDiagram& d1, const ChordDiagram& d2);

// Fuse chord x of d1 with chord z of d2 into a single chord.
ChordDiagram one_product(const ChordDiagram& d1, int x, const ChordDiagram& d2, int z);

// Whitney twist along the pair (c1, c2); requires that deleting both
// chords splits the rest into two complementary blocks.
ChordDiagram whitney_twist(const ChordDiagram& d, int c1, int c2);

// Label-preserving variant on raw words; the result's interlacement
// graph is the graph-level Whitney twist of the input's with the same
// vertex correspondence.
Word whitney_twist_word(const Word& w, int c1, int c2);

// Brute-force circle graph witness.
std::optional<ChordDiagram> realize_graph(const SimpleGraph& g, int cap = 7);

// All canonical diagrams whose intersection graph is isomorphic to g.
std::vector<ChordDiagram> diagrams_with_graph(const SimpleGraph& g, int cap = 7);

} // namespace cdws
