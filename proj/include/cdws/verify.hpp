#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cdws/chord.hpp"
#include "cdws/decomp.hpp"
#include "cdws/poly.hpp"

namespace cdws {

struct VerificationReport {
    std::string check;
    int max_n = 0;
    long classes_checked = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    double elapsed_seconds = 0;

    bool pass() const { return violations.empty() && classes_checked > 0; }
    std::string to_string() const;
    nlohmann::json to_json() const;
};

// Hooks exist so the test suite can inject deliberately broken
// implementations and demonstrate that every checker can fail.
using MutationFn =
    std::function<ChordDiagram(const ChordDiagram&, const Share&, MutationSymmetry)>;
using DiagramEvaluator = std::function<MultiPoly(const ChordDiagram&)>;
using OneProductFn = std::function<ChordDiagram(const ChordDiagram&, int, const ChordDiagram&, int)>;
using DecomposeFn = std::function<DecompositionTree(const SimpleGraph&)>;

// Theorem: two diagrams have the same intersection graph iff related
// by mutations.  Checks every graph class of enumerate(n) is one
// mutation orbit, n <= max_n.
VerificationReport check_mutation_connectivity(int max_n, const MutationFn& mutator = {});

// Theorem: the weight system ("sl2" or "gl11") is constant on
// intersection-graph classes.
VerificationReport check_graph_dependence(const std::string& ws, int max_n,
                                          const DiagramEvaluator& evaluator = {});

// Theorem: sl2 depends only on the graphic matroid: invariance under
// Whitney twists and the 1-product factorization, on both the diagram
// and the graph side.
VerificationReport check_matroid_moves(int max_n, const OneProductFn& one_product_fn = {});

// Canonical decomposition: conditions (i)-(iii), exact recomposition,
// order independence for n >= 6, and agreement of sewing-based
// realization enumeration with brute force for n <= 6.
VerificationReport check_decomposition(int max_n, const DecomposeFn& decompose_fn = {});

} // namespace cdws
