#include "cdws/graph.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace cdws {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > 31)
        fail("CapExceeded", "vertex count " + std::to_string(n) + " out of range");
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        fail("BadVertex", "vertex " + std::to_string(v) + " out of range");
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v)
        total += degree(v);
    return total / 2;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        fail("BadVertex", "loops are not allowed");
    adj_[static_cast<size_t>(u)] |= 1u << v;
    adj_[static_cast<size_t>(v)] |= 1u << u;
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<size_t>(u)] &= ~(1u << v);
    adj_[static_cast<size_t>(v)] &= ~(1u << u);
}

void SimpleGraph::toggle_edge(int u, int v) {
    if (has_edge(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<size_t>(u)] >> v) & 1u;
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    return __builtin_popcount(adj_[static_cast<size_t>(v)]);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v))
                out.emplace_back(u, v);
    return out;
}

std::string SimpleGraph::to_string() const {
    std::string s = std::to_string(n_) + ";";
    bool first = true;
    for (auto [u, v] : edges()) {
        s += first ? " " : ",";
        s += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return s;
}

SimpleGraph SimpleGraph::parse(const std::string& text) {
    std::istringstream in(text);
    int n = -1;
    if (!(in >> n) || n < 0)
        fail("ParseError", "graph text must start with a vertex count: '" + text + "'");
    SimpleGraph g(n);
    char sep = 0;
    if (!(in >> sep))
        return g; // "n" with no edges
    if (sep != ';')
        fail("ParseError", "expected ';' after vertex count in '" + text + "'");
    std::string rest;
    std::getline(in, rest);
    std::istringstream edges_in(rest);
    std::string item;
    while (std::getline(edges_in, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos)
            continue;
        int u, v;
        char dash;
        std::istringstream e(item);
        if (!(e >> u >> dash >> v) || dash != '-')
            fail("ParseError", "bad edge '" + item + "' in '" + text + "'");
        g.add_edge(u, v);
    }
    return g;
}

nlohmann::json SimpleGraph::to_json() const {
    nlohmann::json e = nlohmann::json::array();
    for (auto [u, v] : edges())
        e.push_back({u, v});
    return {{"n", n_}, {"edges", e}};
}

SimpleGraph SimpleGraph::from_json(const nlohmann::json& j) {
    SimpleGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

// --- canonical labeling ----------------------------------------------------

namespace {

// Iterated neighborhood refinement.  Returns per-vertex cell ids, assigned in
// an isomorphism-invariant order.
std::vector<int> refine_colors(const SimpleGraph& g, const std::vector<int>& initial) {
    const int n = g.vertex_count();
    std::vector<int> color(initial);
    if (color.empty())
        color.assign(static_cast<size_t>(n), 0);

    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<size_t>(v)];
            s.push_back(color[static_cast<size_t>(v)]);
            for (int u = 0; u < n; ++u)
                if (g.has_edge(u, v))
                    s.push_back(color[static_cast<size_t>(u)]);
            std::sort(s.begin() + 1, s.end());
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& s : sig)
            ids.emplace(s, 0);
        int next = 0;
        for (auto& [key, id] : ids)
            id = next++;
        std::vector<int> fresh(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            fresh[static_cast<size_t>(v)] = ids[sig[static_cast<size_t>(v)]];
        if (fresh == color)
            return color;
        color = std::move(fresh);
    }
}

struct CanonSearch {
    const SimpleGraph& g;
    int n;
    std::vector<int> cell;      // refined cell id per vertex
    std::vector<int> pos_cell;  // cell id each canonical position must take
    std::vector<std::uint32_t> rows, best_rows;
    std::vector<int> perm, best_perm; // position -> original vertex
    std::vector<char> used;
    bool have_best = false;

    explicit CanonSearch(const SimpleGraph& graph, const std::vector<int>& colors)
        : g(graph), n(graph.vertex_count()) {
        cell = refine_colors(graph, colors);
        pos_cell = cell;
        std::sort(pos_cell.begin(), pos_cell.end());
        rows.assign(static_cast<size_t>(n), 0);
        perm.assign(static_cast<size_t>(n), -1);
        used.assign(static_cast<size_t>(n), 0);
        search(0, true);
    }

    void search(int t, bool tight) {
        if (t == n) {
            if (!have_best || rows < best_rows) {
                best_rows = rows;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)] || cell[static_cast<size_t>(v)] != pos_cell[static_cast<size_t>(t)])
                continue;
            std::uint32_t row = 0;
            for (int j = 0; j < t; ++j)
                if (g.has_edge(v, perm[static_cast<size_t>(j)]))
                    row |= 1u << j;
            bool next_tight = tight;
            if (tight && have_best) {
                if (row > best_rows[static_cast<size_t>(t)])
                    continue;
                if (row < best_rows[static_cast<size_t>(t)])
                    next_tight = false;
            }
            rows[static_cast<size_t>(t)] = row;
            perm[static_cast<size_t>(t)] = v;
            used[static_cast<size_t>(v)] = 1;
            search(t + 1, next_tight);
            used[static_cast<size_t>(v)] = 0;
        }
    }
};

} // namespace

std::string canonical_code(const SimpleGraph& g, const std::vector<int>& colors) {
    const int n = g.vertex_count();
    if (!colors.empty() && static_cast<int>(colors.size()) != n)
        fail("BadVertex", "color vector size mismatch");
    CanonSearch search(g, colors);

    std::string code;
    code.push_back(static_cast<char>(n));
    for (int t = 0; t < n; ++t) {
        int c = colors.empty() ? 0 : colors[static_cast<size_t>(search.best_perm[static_cast<size_t>(t)])];
        for (int b = 0; b < 4; ++b)
            code.push_back(static_cast<char>((c >> (8 * b)) & 0xff));
    }
    for (int t = 0; t < n; ++t) {
        std::uint32_t row = search.best_rows[static_cast<size_t>(t)];
        for (int b = 0; b < 4; ++b)
            code.push_back(static_cast<char>((row >> (8 * b)) & 0xff));
    }
    return code;
}

SimpleGraph apply_permutation(const SimpleGraph& g, const std::vector<int>& perm) {
    SimpleGraph out(g.vertex_count());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return out;
}

SimpleGraph canonical_label(const SimpleGraph& g, int cap) {
    if (g.vertex_count() > cap)
        fail("CapExceeded", "canonical_label cap " + std::to_string(cap) + " exceeded");
    CanonSearch search(g, {});
    std::vector<int> perm(static_cast<size_t>(g.vertex_count()));
    for (int t = 0; t < g.vertex_count(); ++t)
        perm[static_cast<size_t>(search.best_perm[static_cast<size_t>(t)])] = t;
    return apply_permutation(g, perm);
}

// --- GF(2) -----------------------------------------------------------------

bool adjacency_nondegenerate_gf2(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n % 2 != 0)
        return false;
    std::vector<std::uint32_t> rows(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        rows[static_cast<size_t>(v)] = g.neighbors(v);
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if ((rows[static_cast<size_t>(r)] >> col) & 1u) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return false;
        std::swap(rows[static_cast<size_t>(pivot)], rows[static_cast<size_t>(rank)]);
        for (int r = 0; r < n; ++r)
            if (r != rank && ((rows[static_cast<size_t>(r)] >> col) & 1u))
                rows[static_cast<size_t>(r)] ^= rows[static_cast<size_t>(rank)];
        ++rank;
    }
    return rank == n;
}

// --- 4-term / 2-term --------------------------------------------------------

SimpleGraph two_term_partner(const SimpleGraph& g, int a, int b) {
    if (!g.has_edge(a, b))
        fail("NotAdjacent", "vertices " + std::to_string(a) + "," + std::to_string(b) +
                                " are not adjacent");
    SimpleGraph out = g;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != a && w != b && g.has_edge(b, w))
            out.toggle_edge(a, w);
    return out;
}

FourTermElement four_term_element(const SimpleGraph& g, int a, int b) {
    FourTermElement el;
    el.g = g;
    el.g_tilde = two_term_partner(g, a, b);
    el.g_prime = g;
    el.g_prime.remove_edge(a, b);
    el.g_tilde_prime = el.g_tilde;
    el.g_tilde_prime.remove_edge(a, b);
    return el;
}

SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) {
    SimpleGraph out(g1.vertex_count() + g2.vertex_count());
    for (auto [u, v] : g1.edges())
        out.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        out.add_edge(u + g1.vertex_count(), v + g1.vertex_count());
    return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& U) {
    SimpleGraph out(static_cast<int>(U.size()));
    for (size_t i = 0; i < U.size(); ++i)
        for (size_t j = i + 1; j < U.size(); ++j)
            if (g.has_edge(U[i], U[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

// --- misc --------------------------------------------------------------------

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)])
            continue;
        std::vector<int> comp, stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u = 0; u < n; ++u)
                if (g.has_edge(u, v) && !seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const SimpleGraph& g) {
    return g.vertex_count() == 0 || connected_components(g).size() == 1;
}

SimpleGraph one_vertex_gluing(const SimpleGraph& g1, int a, const SimpleGraph& g2, int b) {
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    if (a < 0 || a >= n1 || b < 0 || b >= n2)
        fail("BadVertex", "gluing vertex out of range");
    // g2's vertices keep their order with b removed and mapped onto a
    std::vector<int> map2(static_cast<size_t>(n2));
    int next = n1;
    for (int v = 0; v < n2; ++v)
        map2[static_cast<size_t>(v)] = (v == b) ? a : next++;
    SimpleGraph out(n1 + n2 - 1);
    for (auto [u, v] : g1.edges())
        out.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        out.add_edge(map2[static_cast<size_t>(u)], map2[static_cast<size_t>(v)]);
    return out;
}

SimpleGraph whitney_twist_graph(const SimpleGraph& g, int a, int b,
                                const std::vector<int>& side) {
    SimpleGraph out = g;
    for (int v : side) {
        if (v == a || v == b)
            fail("BadVertex", "twist side must avoid the identified pair");
        bool to_a = g.has_edge(v, a);
        bool to_b = g.has_edge(v, b);
        if (to_a != to_b) {
            out.toggle_edge(v, a);
            out.toggle_edge(v, b);
        }
    }
    return out;
}

std::vector<SimpleGraph> all_graphs(int n) {
    std::vector<SimpleGraph> level{SimpleGraph(0)};
    for (int k = 1; k <= n; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<SimpleGraph> next;
        for (const auto& h : level) {
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                SimpleGraph g(k);
                for (auto [u, v] : h.edges())
                    g.add_edge(u, v);
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1u)
                        g.add_edge(v, k - 1);
                std::string code = canonical_code(g);
                if (seen.insert(std::move(code)).second)
                    next.push_back(canonical_label(g, k));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<SimpleGraph> all_connected_graphs(int n) {
    std::vector<SimpleGraph> out;
    for (auto& g : all_graphs(n))
        if (is_connected(g))
            out.push_back(std::move(g));
    return out;
}

} // namespace cdws
