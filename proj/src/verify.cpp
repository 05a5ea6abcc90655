#include "cdws/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "cdws/gl11.hpp"
#include "cdws/sl2.hpp"

namespace cdws {

std::string VerificationReport::to_string() const {
    std::string out = check + " (max_n=" + std::to_string(max_n) + "): " +
                      (pass() ? "PASS" : "FAIL") + ", " + std::to_string(classes_checked) +
                      " classes checked";
    for (const std::string& n : notes)
        out += "\n  note: " + n;
    for (const std::string& v : violations)
        out += "\n  violation: " + v;
    return out;
}

nlohmann::json VerificationReport::to_json() const {
    return {{"check", check},
            {"max_n", max_n},
            {"classes_checked", classes_checked},
            {"violations", violations},
            {"notes", notes},
            {"elapsed_seconds", elapsed_seconds},
            {"status", pass() ? "PASS" : "FAIL"}};
}

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

// Diagrams of size n grouped by intersection-graph class.
std::map<std::string, std::vector<ChordDiagram>> graph_classes(int n) {
    std::map<std::string, std::vector<ChordDiagram>> out;
    for (const ChordDiagram& d : enumerate_diagrams(n))
        out[canonical_code(intersection_graph(d))].push_back(d);
    return out;
}

std::vector<ChordDiagram> orbit_with(const ChordDiagram& d, const MutationFn& mutator) {
    std::set<ChordDiagram> seen{d.canonical_form()};
    std::vector<ChordDiagram> queue{d.canonical_form()};
    while (!queue.empty()) {
        ChordDiagram cur = queue.back();
        queue.pop_back();
        for (const Share& s : find_shares(cur))
            for (MutationSymmetry m : {MutationSymmetry::SwapArcs, MutationSymmetry::ReverseArcs,
                                       MutationSymmetry::RotateHalfTurn}) {
                ChordDiagram next = mutator(cur, s, m).canonical_form();
                if (seen.insert(next).second)
                    queue.push_back(next);
            }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

VerificationReport check_mutation_connectivity(int max_n, const MutationFn& mutator) {
    if (max_n > 6)
        fail("CapExceeded", "mutation connectivity checked up to n = 6");
    Stopwatch timer;
    VerificationReport report{.check = "mutation-connectivity", .max_n = max_n};
    MutationFn mut = mutator ? mutator : [](const ChordDiagram& d, const Share& s,
                                            MutationSymmetry m) { return mutate(d, s, m); };
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& [code, diagrams] : graph_classes(n)) {
            ++report.classes_checked;
            std::vector<ChordDiagram> orbit = orbit_with(diagrams.front(), mut);
            std::set<ChordDiagram> orbit_set(orbit.begin(), orbit.end());
            std::set<ChordDiagram> class_set(diagrams.begin(), diagrams.end());
            if (orbit_set != class_set)
                report.violations.push_back(
                    "n=" + std::to_string(n) + " class of " + diagrams.front().to_string() +
                    ": orbit size " + std::to_string(orbit_set.size()) + " vs class size " +
                    std::to_string(class_set.size()));
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

VerificationReport check_graph_dependence(const std::string& ws, int max_n,
                                          const DiagramEvaluator& evaluator) {
    if (max_n > 6)
        fail("CapExceeded", "graph dependence checked up to n = 6");
    Stopwatch timer;
    VerificationReport report{.check = "graph-dependence-" + ws, .max_n = max_n};
    DiagramEvaluator eval = evaluator;
    if (!eval) {
        if (ws == "sl2")
            eval = [](const ChordDiagram& d) { return sl2_oracle(d); };
        else if (ws == "gl11")
            eval = [](const ChordDiagram& d) { return gl11_on_diagram(d); };
        else
            fail("ParseError", "unknown weight system '" + ws + "'");
    }
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& [code, diagrams] : graph_classes(n)) {
            ++report.classes_checked;
            MultiPoly reference = eval(diagrams.front());
            for (const ChordDiagram& d : diagrams)
                if (!(eval(d) == reference)) {
                    report.violations.push_back("n=" + std::to_string(n) + " diagrams " +
                                                diagrams.front().to_string() + " and " +
                                                d.to_string() + " differ");
                    break;
                }
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

namespace {

// All Whitney twists of g: for every vertex pair {a,b}, every union of
// connected components of g - {a,b} as the swapped side.
std::vector<SimpleGraph> all_whitney_twists(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<SimpleGraph> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (v != a && v != b)
                    rest.push_back(v);
            SimpleGraph cut = induced_subgraph(g, rest);
            auto comps = connected_components(cut);
            if (comps.size() > 12)
                continue;
            for (std::uint32_t mask = 1; mask + 1 < (1u << comps.size()); ++mask) {
                std::vector<int> side;
                for (size_t ci = 0; ci < comps.size(); ++ci)
                    if ((mask >> ci) & 1)
                        for (int v : comps[ci])
                            side.push_back(rest[static_cast<size_t>(v)]);
                out.push_back(whitney_twist_graph(g, a, b, side));
            }
        }
    return out;
}

} // namespace

VerificationReport check_matroid_moves(int max_n, const OneProductFn& one_product_fn) {
    if (max_n > 5)
        fail("CapExceeded", "matroid moves checked up to n = 5");
    Stopwatch timer;
    VerificationReport report{.check = "matroid-moves", .max_n = max_n};
    OneProductFn oneprod = one_product_fn ? one_product_fn
                                          : [](const ChordDiagram& d1, int x,
                                               const ChordDiagram& d2, int z) {
                                                return one_product(d1, x, d2, z);
                                            };

    // sl2 values per intersection-graph class, n <= max_n.
    std::map<std::string, MultiPoly> value_of_class;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& [code, diagrams] : graph_classes(n))
            value_of_class.emplace(code, sl2_oracle(diagrams.front()));

    // Lemma (i): the 1-product factorization on the diagram side.
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n2 <= 3; ++n2)
            for (const ChordDiagram& d1 : enumerate_diagrams(n1))
                for (const ChordDiagram& d2 : enumerate_diagrams(n2)) {
                    MultiPoly rhs = sl2_oracle(d1) * sl2_oracle(d2);
                    for (int x = 0; x < n1; ++x)
                        for (int z = 0; z < n2; ++z) {
                            ++report.classes_checked;
                            MultiPoly lhs =
                                sl2_oracle(oneprod(d1, x, d2, z)) * MultiPoly::var_c();
                            if (!(lhs == rhs))
                                report.violations.push_back(
                                    "1-product " + d1.to_string() + "@" + std::to_string(x) +
                                    " with " + d2.to_string() + "@" + std::to_string(z));
                        }
                }

    // Lemma (ii): Whitney twists on the diagram side.
    for (int n = 2; n <= max_n; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n)) {
            MultiPoly reference = sl2_oracle(d);
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = c1 + 1; c2 < n; ++c2) {
                    ChordDiagram twisted;
                    try {
                        twisted = whitney_twist(d, c1, c2);
                    } catch (const Error& e) {
                        if (e.code() == "PreconditionViolated")
                            continue;
                        throw;
                    }
                    ++report.classes_checked;
                    if (!(sl2_oracle(twisted) == reference))
                        report.violations.push_back("diagram twist " + d.to_string() + " at " +
                                                    std::to_string(c1) + "," +
                                                    std::to_string(c2));
                }
        }

    // Graph-side closure: twists land on classes with the same value.
    long multi_graph_classes = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& [code, diagrams] : graph_classes(n)) {
            SimpleGraph g = intersection_graph(diagrams.front());
            const MultiPoly& reference = value_of_class.at(code);
            std::set<std::string> class_codes{code};
            for (const SimpleGraph& t : all_whitney_twists(g)) {
                std::string tcode = canonical_code(t);
                class_codes.insert(tcode);
                auto it = value_of_class.find(tcode);
                if (it == value_of_class.end())
                    continue; // twist left the realizable world; nothing to compare
                ++report.classes_checked;
                if (!(it->second == reference))
                    report.violations.push_back("graph twist off " + g.to_string());
            }
            if (class_codes.size() > 1)
                ++multi_graph_classes;
        }
    report.notes.push_back(
        multi_graph_classes > 0
            ? std::to_string(multi_graph_classes) +
                  " twist-closed classes contain non-isomorphic graphs with equal sl2 value"
            : "twist closure never left the isomorphism class (vacuous)");

    // Graph-side 1-product: gluing at a vertex factors through values.
    for (int n1 = 2; n1 <= 3; ++n1)
        for (int n2 = 2; n2 <= 3; ++n2) {
            if (n1 + n2 - 1 > max_n)
                continue;
            for (const SimpleGraph& g1 : all_connected_graphs(n1))
                for (const SimpleGraph& g2 : all_connected_graphs(n2)) {
                    auto v1 = value_of_class.find(canonical_code(g1));
                    auto v2 = value_of_class.find(canonical_code(g2));
                    if (v1 == value_of_class.end() || v2 == value_of_class.end())
                        continue;
                    for (int a = 0; a < n1; ++a)
                        for (int b = 0; b < n2; ++b) {
                            SimpleGraph glued = one_vertex_gluing(g1, a, g2, b);
                            auto vg = value_of_class.find(canonical_code(glued));
                            if (vg == value_of_class.end())
                                continue;
                            ++report.classes_checked;
                            if (!(vg->second * MultiPoly::var_c() == v1->second * v2->second))
                                report.violations.push_back("graph 1-product " + g1.to_string() +
                                                            " + " + g2.to_string());
                        }
                }
        }

    report.elapsed_seconds = timer.seconds();
    return report;
}

namespace {

std::string validate_tree(const SimpleGraph& g, const DecompositionTree& tree) {
    // condition (i): every component is complete, a star, or prime
    for (const TreeComponent& tc : tree.components) {
        ComponentKind k;
        try {
            k = classify_component(tc.graph);
        } catch (const Error&) {
            return "condition (i): unclassifiable component in " + g.to_string();
        }
        if (!(k == tc.kind))
            return "condition (i): stored kind disagrees in " + g.to_string();
    }
    // conditions (ii) and (iii) on dashed neighbors
    for (const DashedEdge& d : tree.dashed) {
        const TreeComponent& a = tree.components[static_cast<size_t>(d.comp1)];
        const TreeComponent& b = tree.components[static_cast<size_t>(d.comp2)];
        if (a.kind.kind == ComponentKind::Complete && b.kind.kind == ComponentKind::Complete)
            return "condition (ii): complete neighbors in " + g.to_string();
        if (a.kind.kind == ComponentKind::Star && b.kind.kind == ComponentKind::Star) {
            bool ca = d.marker1 == a.kind.center;
            bool cb = d.marker2 == b.kind.center;
            if (ca != cb)
                return "condition (iii): star center joined to leaf in " + g.to_string();
        }
    }
    // recomposition is exact (original vertex ids are preserved)
    if (!(recompose(tree) == g))
        return "recomposition mismatch for " + g.to_string();
    return "";
}

} // namespace

VerificationReport check_decomposition(int max_n, const DecomposeFn& decompose_fn) {
    if (max_n > 8)
        fail("CapExceeded", "decomposition checked up to n = 8");
    Stopwatch timer;
    VerificationReport report{.check = "decomposition", .max_n = max_n};
    DecomposeFn decomp =
        decompose_fn ? decompose_fn
                     : [](const SimpleGraph& g) { return canonical_decomposition(g); };

    std::mt19937 rng(20260823);
    for (int n = 2; n <= max_n; ++n) {
        for (const SimpleGraph& g : all_connected_graphs(n)) {
            ++report.classes_checked;
            DecompositionTree tree = decomp(g);
            std::string err = validate_tree(g, tree);
            if (!err.empty()) {
                report.violations.push_back(err);
                continue;
            }
            if (n >= 6) {
                std::string reference = tree_fingerprint(tree);
                std::vector<int> perm(static_cast<size_t>(n));
                std::iota(perm.begin(), perm.end(), 0);
                for (int trial = 0; trial < 20; ++trial) {
                    std::shuffle(perm.begin(), perm.end(), rng);
                    DecompositionTree other = decomp(apply_permutation(g, perm));
                    if (tree_fingerprint(other) != reference) {
                        report.violations.push_back("order-dependent decomposition of " +
                                                    g.to_string());
                        break;
                    }
                }
            }
        }
    }

    // sewing-based enumeration vs brute force, n <= 6
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        std::map<std::string, std::set<ChordDiagram>> brute;
        for (const ChordDiagram& d : enumerate_diagrams(n))
            brute[canonical_code(intersection_graph(d))].insert(d);
        for (const SimpleGraph& g : all_connected_graphs(n)) {
            auto it = brute.find(canonical_code(g));
            if (it == brute.end())
                continue; // not a circle graph
            ++report.classes_checked;
            std::vector<ChordDiagram> sewn = enumerate_realizations(g);
            std::set<ChordDiagram> sewn_set(sewn.begin(), sewn.end());
            if (sewn_set != it->second)
                report.violations.push_back("realization sets differ for " + g.to_string() +
                                            " (" + std::to_string(sewn_set.size()) + " vs " +
                                            std::to_string(it->second.size()) + ")");
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

} // namespace cdws
