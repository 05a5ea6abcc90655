#include "cdws/decomp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

namespace cdws {

std::string ComponentKind::name() const {
    switch (kind) {
    case Complete: return "Complete";
    case Star: return "Star";
    case Prime: return "Prime";
    }
    return "?";
}

SimpleGraph compose(const SimpleGraph& g1, int v1, const SimpleGraph& g2, int v2) {
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    if (v1 < 0 || v1 >= n1 || v2 < 0 || v2 >= n2)
        fail("BadMarker", "marker vertex out of range");

    auto keep = [](int n, int skip) {
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if (v != skip)
                out.push_back(v);
        return out;
    };
    std::vector<int> left = keep(n1, v1);
    std::vector<int> right = keep(n2, v2);

    SimpleGraph g(n1 + n2 - 2);
    for (size_t i = 0; i < left.size(); ++i)
        for (size_t j = i + 1; j < left.size(); ++j)
            if (g1.has_edge(left[i], left[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    for (size_t i = 0; i < right.size(); ++i)
        for (size_t j = i + 1; j < right.size(); ++j)
            if (g2.has_edge(right[i], right[j]))
                g.add_edge(static_cast<int>(n1 - 1 + i), static_cast<int>(n1 - 1 + j));
    for (size_t i = 0; i < left.size(); ++i)
        for (size_t j = 0; j < right.size(); ++j)
            if (g1.has_edge(left[i], v1) && g2.has_edge(v2, right[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(n1 - 1 + j));
    return g;
}

std::vector<Split> find_splits(const SimpleGraph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        fail("CapExceeded", "find_splits cap " + std::to_string(cap) + " exceeded");
    std::vector<Split> out;
    if (n < 4)
        return out;

    // Subsets containing vertex 0 stand in for unordered bipartitions.
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
        int size = std::popcount(mask);
        if (size < 2 || size > n - 2)
            continue;
        Split s;
        std::uint32_t w1 = 0, w2 = 0;
        for (int v = 0; v < n; ++v) {
            bool in1 = (mask >> v) & 1;
            (in1 ? s.v1 : s.v2).push_back(v);
            std::uint32_t cross = g.neighbors(v) & (in1 ? ~mask : mask);
            if (cross)
                (in1 ? w1 : w2) |= 1u << v;
        }
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (!((w1 >> a) & 1))
                continue;
            // cross edges from a must be exactly W2
            if ((g.neighbors(a) & ~mask) != w2)
                ok = false;
        }
        if (!ok)
            continue;
        for (int v = 0; v < n; ++v) {
            if ((w1 >> v) & 1)
                s.w1.push_back(v);
            if ((w2 >> v) & 1)
                s.w2.push_back(v);
        }
        if (s.w1.empty() || s.w2.empty())
            continue; // disconnected bipartition, not a split
        out.push_back(std::move(s));
    }
    return out;
}

ComponentKind classify_component(const SimpleGraph& g) {
    const int n = g.vertex_count();
    bool complete = true;
    for (int u = 0; u < n && complete; ++u)
        for (int v = u + 1; v < n && complete; ++v)
            if (!g.has_edge(u, v))
                complete = false;
    if (complete && n >= 1)
        return {ComponentKind::Complete, -1};

    if (n >= 3) {
        for (int c = 0; c < n; ++c) {
            if (g.degree(c) != n - 1)
                continue;
            bool star = true;
            for (int v = 0; v < n && star; ++v)
                if (v != c && g.degree(v) != 1)
                    star = false;
            if (star)
                return {ComponentKind::Star, c};
        }
        if (is_connected(g) && find_splits(g).empty())
            return {ComponentKind::Prime, -1};
    }
    fail("Unclassifiable", "component is neither complete, star, nor prime");
}

// --- canonical decomposition -------------------------------------------------

namespace {

// Component under construction; label >= 0 is an original vertex id,
// label -(e+1) is the marker of dashed edge e.
struct BuildComp {
    SimpleGraph g;
    std::vector<long> label;
};

SimpleGraph induced_with_marker(const SimpleGraph& g, const std::vector<int>& part,
                                const std::vector<int>& attach) {
    SimpleGraph out(static_cast<int>(part.size()) + 1);
    for (size_t i = 0; i < part.size(); ++i)
        for (size_t j = i + 1; j < part.size(); ++j)
            if (g.has_edge(part[i], part[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    const int marker = static_cast<int>(part.size());
    for (int a : attach) {
        auto it = std::find(part.begin(), part.end(), a);
        out.add_edge(static_cast<int>(it - part.begin()), marker);
    }
    return out;
}

void split_recursively(BuildComp comp, std::vector<BuildComp>& out, long& next_edge) {
    auto splits = find_splits(comp.g);
    if (splits.empty()) {
        out.push_back(std::move(comp));
        return;
    }
    const Split& s = splits.front();
    long e = next_edge++;
    auto make_side = [&](const std::vector<int>& part, const std::vector<int>& attach) {
        BuildComp side;
        side.g = induced_with_marker(comp.g, part, attach);
        for (int v : part)
            side.label.push_back(comp.label[static_cast<size_t>(v)]);
        side.label.push_back(-(e + 1));
        return side;
    };
    split_recursively(make_side(s.v1, s.w1), out, next_edge);
    split_recursively(make_side(s.v2, s.w2), out, next_edge);
}

// Merge comps a and b along their vertices at marker label m.
BuildComp merge_pair(const BuildComp& a, int va, const BuildComp& b, int vb) {
    BuildComp out;
    out.g = compose(a.g, va, b.g, vb);
    for (int v = 0; v < a.g.vertex_count(); ++v)
        if (v != va)
            out.label.push_back(a.label[static_cast<size_t>(v)]);
    for (int v = 0; v < b.g.vertex_count(); ++v)
        if (v != vb)
            out.label.push_back(b.label[static_cast<size_t>(v)]);
    return out;
}

} // namespace

DecompositionTree canonical_decomposition(const SimpleGraph& g, int cap) {
    if (g.vertex_count() > cap)
        fail("CapExceeded", "decomposition cap exceeded");
    if (!is_connected(g))
        fail("Disconnected", "canonical decomposition needs a connected graph");

    BuildComp whole;
    whole.g = g;
    whole.label.resize(static_cast<size_t>(g.vertex_count()));
    std::iota(whole.label.begin(), whole.label.end(), 0L);

    std::vector<BuildComp> comps;
    long next_edge = 0;
    split_recursively(std::move(whole), comps, next_edge);

    // Merge phase: undo splits that violate conditions (ii)/(iii).
    for (bool merged = true; merged;) {
        merged = false;
        for (size_t a = 0; a < comps.size() && !merged; ++a) {
            for (size_t v = 0; v < comps[a].label.size() && !merged; ++v) {
                long lab = comps[a].label[v];
                if (lab >= 0)
                    continue;
                // find the partner component carrying the same marker
                for (size_t b = 0; b < comps.size() && !merged; ++b) {
                    if (b == a)
                        continue;
                    auto it = std::find(comps[b].label.begin(), comps[b].label.end(), lab);
                    if (it == comps[b].label.end())
                        continue;
                    int va = static_cast<int>(v);
                    int vb = static_cast<int>(it - comps[b].label.begin());
                    ComponentKind ka = classify_component(comps[a].g);
                    ComponentKind kb = classify_component(comps[b].g);
                    bool both_complete = ka.kind == ComponentKind::Complete &&
                                         kb.kind == ComponentKind::Complete;
                    bool star_center_leaf = ka.kind == ComponentKind::Star &&
                                            kb.kind == ComponentKind::Star &&
                                            ((va == ka.center) != (vb == kb.center));
                    if (!both_complete && !star_center_leaf)
                        continue;
                    BuildComp joined = merge_pair(comps[a], va, comps[b], vb);
                    comps.erase(comps.begin() + static_cast<long>(std::max(a, b)));
                    comps.erase(comps.begin() + static_cast<long>(std::min(a, b)));
                    comps.push_back(std::move(joined));
                    merged = true;
                }
            }
        }
    }

    DecompositionTree tree;
    std::map<long, std::vector<std::pair<int, int>>> marker_sites;
    for (const BuildComp& c : comps) {
        TreeComponent tc;
        tc.graph = c.g;
        for (size_t v = 0; v < c.label.size(); ++v) {
            if (c.label[v] >= 0) {
                tc.orig.push_back(static_cast<int>(c.label[v]));
            } else {
                tc.orig.push_back(-1);
                tc.markers.push_back(static_cast<int>(v));
                marker_sites[c.label[v]].push_back(
                    {static_cast<int>(tree.components.size()), static_cast<int>(v)});
            }
        }
        tc.kind = classify_component(c.g);
        tree.components.push_back(std::move(tc));
    }
    for (const auto& [lab, sites] : marker_sites)
        tree.dashed.push_back({sites[0].first, sites[0].second, sites[1].first, sites[1].second});
    return tree;
}

SimpleGraph recompose(const DecompositionTree& tree) {
    struct Piece {
        SimpleGraph g;
        std::vector<long> label; // orig id, or -(dashed index + 1)
    };
    std::vector<Piece> pieces;
    for (size_t ci = 0; ci < tree.components.size(); ++ci) {
        Piece p;
        p.g = tree.components[ci].graph;
        p.label.assign(tree.components[ci].orig.begin(), tree.components[ci].orig.end());
        for (size_t e = 0; e < tree.dashed.size(); ++e) {
            const DashedEdge& d = tree.dashed[e];
            if (d.comp1 == static_cast<int>(ci))
                p.label[static_cast<size_t>(d.marker1)] = -(static_cast<long>(e) + 1);
            if (d.comp2 == static_cast<int>(ci))
                p.label[static_cast<size_t>(d.marker2)] = -(static_cast<long>(e) + 1);
        }
        pieces.push_back(std::move(p));
    }

    for (size_t e = 0; e < tree.dashed.size(); ++e) {
        long lab = -(static_cast<long>(e) + 1);
        int ia = -1, ib = -1, va = -1, vb = -1;
        for (size_t i = 0; i < pieces.size(); ++i) {
            auto it = std::find(pieces[i].label.begin(), pieces[i].label.end(), lab);
            if (it == pieces[i].label.end())
                continue;
            if (ia < 0) {
                ia = static_cast<int>(i);
                va = static_cast<int>(it - pieces[i].label.begin());
            } else {
                ib = static_cast<int>(i);
                vb = static_cast<int>(it - pieces[i].label.begin());
            }
        }
        if (ia < 0 || ib < 0)
            fail("BadMarker", "dashed edge " + std::to_string(e) + " has a dangling marker");
        Piece joined;
        joined.g = compose(pieces[static_cast<size_t>(ia)].g, va,
                           pieces[static_cast<size_t>(ib)].g, vb);
        for (size_t v = 0; v < pieces[static_cast<size_t>(ia)].label.size(); ++v)
            if (static_cast<int>(v) != va)
                joined.label.push_back(pieces[static_cast<size_t>(ia)].label[v]);
        for (size_t v = 0; v < pieces[static_cast<size_t>(ib)].label.size(); ++v)
            if (static_cast<int>(v) != vb)
                joined.label.push_back(pieces[static_cast<size_t>(ib)].label[v]);
        pieces.erase(pieces.begin() + std::max(ia, ib));
        pieces.erase(pieces.begin() + std::min(ia, ib));
        pieces.push_back(std::move(joined));
    }
    if (pieces.size() != 1)
        fail("BadMarker", "decomposition tree is not connected");

    // sort vertices back into original-id order
    const Piece& p = pieces.front();
    std::vector<int> perm(p.label.size());
    std::vector<size_t> order(p.label.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return p.label[x] < p.label[y]; });
    for (size_t rank = 0; rank < order.size(); ++rank) {
        if (p.label[order[rank]] < 0)
            fail("BadMarker", "unmatched marker after recomposition");
        perm[order[rank]] = static_cast<int>(rank);
    }
    return apply_permutation(p.g, perm);
}

// --- tree fingerprint ----------------------------------------------------------

namespace {

std::string encode_component(const TreeComponent& tc, int parent_marker,
                             const std::vector<std::pair<std::string, int>>& kids) {
    // kids: (child encoding, marker vertex in tc), pre-sorted by encoding
    std::vector<int> colors(static_cast<size_t>(tc.graph.vertex_count()), 0);
    if (parent_marker >= 0)
        colors[static_cast<size_t>(parent_marker)] = 1;

    // Tied child encodings: any assignment of their colors is valid for
    // some run, so pick the one giving the least component code.
    std::string best_code;
    size_t i = 0;
    std::vector<std::pair<size_t, size_t>> groups;
    while (i < kids.size()) {
        size_t j = i;
        while (j < kids.size() && kids[j].first == kids[i].first)
            ++j;
        groups.push_back({i, j});
        i = j;
    }
    std::function<void(size_t)> assign = [&](size_t gi) {
        if (gi == groups.size()) {
            std::string code = canonical_code(tc.graph, colors);
            if (best_code.empty() || code < best_code)
                best_code = code;
            return;
        }
        auto [lo, hi] = groups[gi];
        std::vector<size_t> idx;
        for (size_t k = lo; k < hi; ++k)
            idx.push_back(k);
        std::sort(idx.begin(), idx.end());
        do {
            for (size_t k = lo; k < hi; ++k)
                colors[static_cast<size_t>(kids[idx[k - lo]].second)] =
                    2 + static_cast<int>(k);
            assign(gi + 1);
        } while (std::next_permutation(idx.begin(), idx.end()));
        for (size_t k = lo; k < hi; ++k)
            colors[static_cast<size_t>(kids[k].second)] = 0;
    };
    assign(0);

    std::string out = best_code + "(";
    for (const auto& [enc, marker] : kids)
        out += enc + ";";
    return out + ")";
}

} // namespace

std::string tree_fingerprint(const DecompositionTree& tree) {
    const size_t nc = tree.components.size();
    // component adjacency with the marker used on each side
    std::vector<std::vector<std::pair<size_t, int>>> adj(nc); // (other comp, my marker)
    for (const DashedEdge& d : tree.dashed) {
        adj[static_cast<size_t>(d.comp1)].push_back({static_cast<size_t>(d.comp2), d.marker1});
        adj[static_cast<size_t>(d.comp2)].push_back({static_cast<size_t>(d.comp1), d.marker2});
    }

    std::function<std::string(size_t, size_t, int)> encode = [&](size_t c, size_t parent,
                                                                 int parent_marker) {
        std::vector<std::pair<std::string, int>> kids;
        for (const auto& [other, my_marker] : adj[c]) {
            if (other == parent)
                continue;
            int child_marker = -1;
            for (const auto& [back, m] : adj[other])
                if (back == c)
                    child_marker = m;
            kids.push_back({encode(other, c, child_marker), my_marker});
        }
        std::sort(kids.begin(), kids.end());
        return encode_component(tree.components[c], parent_marker, kids);
    };

    // centroid(s) by leaf pruning
    std::vector<int> deg(nc);
    for (size_t c = 0; c < nc; ++c)
        deg[c] = static_cast<int>(adj[c].size());
    std::vector<bool> alive(nc, true);
    size_t remaining = nc;
    std::vector<size_t> frontier;
    for (size_t c = 0; c < nc; ++c)
        if (deg[c] <= 1)
            frontier.push_back(c);
    while (remaining > 2) {
        std::vector<size_t> next;
        for (size_t c : frontier) {
            if (!alive[c])
                continue;
            alive[c] = false;
            --remaining;
            for (const auto& [other, m] : adj[c]) {
                (void)m;
                if (alive[other] && --deg[other] == 1)
                    next.push_back(other);
            }
        }
        frontier = std::move(next);
    }

    std::string best;
    for (size_t c = 0; c < nc; ++c) {
        if (!alive[c])
            continue;
        std::string enc = encode(c, c, -1);
        if (best.empty() || enc < best)
            best = enc;
    }
    return best;
}

nlohmann::json DecompositionTree::to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (const TreeComponent& tc : components) {
        nlohmann::json jc = {{"graph", tc.graph.to_json()},
                             {"kind", tc.kind.name()},
                             {"markers", tc.markers}};
        if (tc.kind.kind == ComponentKind::Star)
            jc["center"] = tc.kind.center;
        comps.push_back(std::move(jc));
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const DashedEdge& d : dashed)
        edges.push_back({d.comp1, d.marker1, d.comp2, d.marker2});
    return {{"components", comps}, {"dashed", edges}};
}

// --- realizations ----------------------------------------------------------------

namespace {

// Least rotation/reflection image of a raw word, labels untouched.
Word labeled_canonical(const Word& w) {
    const int len = static_cast<int>(w.size());
    if (len == 0)
        return w;
    Word best = w;
    for (int dir : {1, -1})
        for (int rot = 0; rot < len; ++rot) {
            Word cand(static_cast<size_t>(len));
            for (int i = 0; i < len; ++i)
                cand[static_cast<size_t>(i)] =
                    w[static_cast<size_t>(((rot + dir * i) % len + len) % len)];
            if (cand < best)
                best = std::move(cand);
        }
    return best;
}

} // namespace

std::vector<Word> labeled_realizations(const SimpleGraph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        fail("CapExceeded", "labeled realization cap exceeded");
    if (n == 0)
        return {Word{}};

    // Greedy order maximizing adjacency to already-placed vertices.
    std::vector<int> order;
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)])
                continue;
            int score = 0;
            for (int u : order)
                if (g.has_edge(u, v))
                    ++score;
            score = score * 64 + g.degree(v);
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        order.push_back(best);
        used[static_cast<size_t>(best)] = true;
    }

    const int len = 2 * n;
    Word word(static_cast<size_t>(len), -1);
    std::set<Word> seen;

    auto crossings_ok = [&](int v, int p, int q) {
        for (int u : order) {
            if (u == v)
                break;
            int a = -1, b = -1;
            for (int i = 0; i < len; ++i)
                if (word[static_cast<size_t>(i)] == u) {
                    if (a < 0)
                        a = i;
                    else
                        b = i;
                }
            bool in1 = a > p && a < q;
            bool in2 = b > p && b < q;
            if ((in1 != in2) != g.has_edge(u, v))
                return false;
        }
        return true;
    };

    std::function<void(size_t)> rec_full = [&](size_t k) {
        if (k == order.size()) {
            seen.insert(labeled_canonical(word));
            return;
        }
        int v = order[k];
        int p_hi = k == 0 ? 0 : len - 1;
        for (int p = 0; p <= p_hi; ++p) {
            if (word[static_cast<size_t>(p)] >= 0)
                continue;
            for (int q = p + 1; q < len; ++q) {
                if (word[static_cast<size_t>(q)] >= 0)
                    continue;
                if (!crossings_ok(v, p, q))
                    continue;
                word[static_cast<size_t>(p)] = v;
                word[static_cast<size_t>(q)] = v;
                rec_full(k + 1);
                word[static_cast<size_t>(p)] = -1;
                word[static_cast<size_t>(q)] = -1;
            }
        }
    };
    rec_full(0);
    return {seen.begin(), seen.end()};
}

std::vector<ChordDiagram> realize_component(const SimpleGraph& g, int cap) {
    std::set<ChordDiagram> out;
    for (const Word& w : labeled_realizations(g, cap))
        out.insert(ChordDiagram(w).canonical_form());
    if (out.empty())
        fail("NotRealizable", "component is not a circle graph");
    return {out.begin(), out.end()};
}

std::vector<Word> sew_words(const Word& w1, int m1, const Word& w2, int m2) {
    auto cut = [](const Word& w, int m) {
        int p1 = -1, p2 = -1;
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] == m) {
                if (p1 < 0)
                    p1 = static_cast<int>(i);
                else
                    p2 = static_cast<int>(i);
            }
        if (p2 < 0)
            fail("NoMarkedChord", "marked chord " + std::to_string(m) + " not found");
        const int len = static_cast<int>(w.size());
        Word a1, a2;
        for (int i = (p1 + 1) % len; i != p2; i = (i + 1) % len)
            a1.push_back(w[static_cast<size_t>(i)]);
        for (int i = (p2 + 1) % len; i != p1; i = (i + 1) % len)
            a2.push_back(w[static_cast<size_t>(i)]);
        return std::pair<Word, Word>{a1, a2};
    };
    auto [a1, a2] = cut(w1, m1);
    auto [b1, b2] = cut(w2, m2);
    Word rb1(b1.rbegin(), b1.rend());
    Word rb2(b2.rbegin(), b2.rend());

    std::vector<Word> out;
    for (const auto& [x, y] : std::vector<std::pair<Word, Word>>{
             {b1, b2}, {b2, b1}, {rb1, rb2}, {rb2, rb1}}) {
        Word w = a1;
        w.insert(w.end(), x.begin(), x.end());
        w.insert(w.end(), a2.begin(), a2.end());
        w.insert(w.end(), y.begin(), y.end());
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<ChordDiagram> sew(const ChordDiagram& d1, int m1, const ChordDiagram& d2, int m2) {
    if (m1 < 0 || m1 >= d1.chord_count())
        fail("NoMarkedChord", "marked chord of first factor out of range");
    if (m2 < 0 || m2 >= d2.chord_count())
        fail("NoMarkedChord", "marked chord of second factor out of range");
    Word w2;
    for (int x : d2.word())
        w2.push_back(x + d1.chord_count());
    std::set<ChordDiagram> out;
    for (const Word& w : sew_words(d1.word(), m1, w2, m2 + d1.chord_count()))
        out.insert(ChordDiagram(w).canonical_form());
    return {out.begin(), out.end()};
}

std::vector<ChordDiagram> enumerate_realizations(const SimpleGraph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        fail("CapExceeded", "enumerate_realizations cap exceeded");
    if (!is_connected(g))
        fail("Disconnected", "enumerate_realizations needs a connected graph");
    if (n == 0)
        return {ChordDiagram()};

    DecompositionTree tree = canonical_decomposition(g);

    // Global chord labels: original vertex ids, plus n + e for the two
    // markers of dashed edge e.
    struct Piece {
        std::set<int> comps;
        std::vector<Word> words;
    };
    std::vector<Piece> pieces;
    for (size_t ci = 0; ci < tree.components.size(); ++ci) {
        const TreeComponent& tc = tree.components[ci];
        std::vector<int> global(tc.orig.begin(), tc.orig.end());
        for (size_t e = 0; e < tree.dashed.size(); ++e) {
            const DashedEdge& d = tree.dashed[e];
            if (d.comp1 == static_cast<int>(ci))
                global[static_cast<size_t>(d.marker1)] = n + static_cast<int>(e);
            if (d.comp2 == static_cast<int>(ci))
                global[static_cast<size_t>(d.marker2)] = n + static_cast<int>(e);
        }
        Piece p;
        p.comps.insert(static_cast<int>(ci));
        std::vector<Word> local = labeled_realizations(tc.graph, std::max(cap, 10));
        if (local.empty())
            fail("NotRealizable", "decomposition component is not a circle graph");
        for (const Word& w : local) {
            Word gw;
            for (int v : w)
                gw.push_back(global[static_cast<size_t>(v)]);
            p.words.push_back(gw);
        }
        pieces.push_back(std::move(p));
    }

    for (size_t e = 0; e < tree.dashed.size(); ++e) {
        const int marker = n + static_cast<int>(e);
        int ia = -1, ib = -1;
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (pieces[i].comps.count(tree.dashed[e].comp1))
                ia = static_cast<int>(i);
            if (pieces[i].comps.count(tree.dashed[e].comp2))
                ib = static_cast<int>(i);
        }
        Piece joined;
        joined.comps = pieces[static_cast<size_t>(ia)].comps;
        joined.comps.insert(pieces[static_cast<size_t>(ib)].comps.begin(),
                            pieces[static_cast<size_t>(ib)].comps.end());
        std::set<Word> results;
        for (const Word& wa : pieces[static_cast<size_t>(ia)].words)
            for (const Word& wb : pieces[static_cast<size_t>(ib)].words)
                for (const Word& w : sew_words(wa, marker, wb, marker))
                    results.insert(labeled_canonical(w));
        joined.words.assign(results.begin(), results.end());
        pieces.erase(pieces.begin() + std::max(ia, ib));
        pieces.erase(pieces.begin() + std::min(ia, ib));
        pieces.push_back(std::move(joined));
    }

    std::set<ChordDiagram> out;
    for (const Word& w : pieces.front().words) {
        if (interlacement_graph(w) != g)
            fail("PreconditionViolated", "sewing produced a diagram off the target graph");
        out.insert(ChordDiagram(w).canonical_form());
    }
    return {out.begin(), out.end()};
}

} // namespace cdws
