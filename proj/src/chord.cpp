#include "cdws/chord.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cdws {

namespace {

// Relabel to 0..n-1 in order of first occurrence.
Word normalize_labels(const Word& w) {
    std::map<int, int> ids;
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        auto [it, fresh] = ids.emplace(x, static_cast<int>(ids.size()));
        out.push_back(it->second);
    }
    return out;
}

void validate_double_occurrence(const Word& w) {
    std::map<int, int> count;
    for (int x : w)
        ++count[x];
    for (const auto& [label, c] : count)
        if (c != 2)
            fail("NotDoubleOccurrence",
                 "label " + std::to_string(label) + " occurs " + std::to_string(c) + " times");
}

std::pair<int, int> endpoints_of(const Word& w, int label) {
    int first = -1, second = -1;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] == label) {
            if (first < 0)
                first = static_cast<int>(i);
            else
                second = static_cast<int>(i);
        }
    }
    if (second < 0)
        fail("ChordNotFound", "chord " + std::to_string(label) + " not present");
    return {first, second};
}

bool chords_cross(const Word& w, int a, int b) {
    auto [p1, p2] = endpoints_of(w, a);
    auto [q1, q2] = endpoints_of(w, b);
    bool in1 = p1 < q1 && q1 < p2;
    bool in2 = p1 < q2 && q2 < p2;
    return in1 != in2;
}

// All perfect matchings of 2n points as double occurrence words with
// first-occurrence labels.
void for_each_matching(int n, const std::function<void(const Word&)>& visit) {
    Word word(static_cast<size_t>(2 * n), -1);
    int next_label = 0;
    std::function<void()> rec = [&]() {
        int open = -1;
        for (size_t i = 0; i < word.size(); ++i)
            if (word[i] < 0) {
                open = static_cast<int>(i);
                break;
            }
        if (open < 0) {
            visit(word);
            return;
        }
        word[static_cast<size_t>(open)] = next_label;
        for (size_t j = static_cast<size_t>(open) + 1; j < word.size(); ++j) {
            if (word[j] >= 0)
                continue;
            word[j] = next_label;
            ++next_label;
            rec();
            --next_label;
            word[j] = -1;
        }
        word[static_cast<size_t>(open)] = -1;
    };
    rec();
}

} // namespace

ChordDiagram::ChordDiagram(const Word& raw) {
    validate_double_occurrence(raw);
    word_ = normalize_labels(raw);
}

ChordDiagram ChordDiagram::parse(const std::string& text) {
    Word raw;
    bool numeric = text.find_first_of("0123456789") != std::string::npos;
    if (numeric) {
        std::istringstream in(text);
        int x;
        while (in >> x)
            raw.push_back(x);
        if (!in.eof())
            fail("ParseError", "bad numeric word '" + text + "'");
    } else {
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch)))
                continue;
            if (!std::isalpha(static_cast<unsigned char>(ch)))
                fail("ParseError", std::string("bad character '") + ch + "' in word");
            raw.push_back(std::tolower(static_cast<unsigned char>(ch)) - 'a');
        }
    }
    return ChordDiagram(raw);
}

ChordDiagram ChordDiagram::canonical_form() const {
    const int len = static_cast<int>(word_.size());
    if (len == 0)
        return *this;
    Word best;
    for (int dir : {1, -1}) {
        for (int rot = 0; rot < len; ++rot) {
            Word candidate(static_cast<size_t>(len));
            for (int i = 0; i < len; ++i) {
                int idx = ((rot + dir * i) % len + len) % len;
                candidate[static_cast<size_t>(i)] = word_[static_cast<size_t>(idx)];
            }
            candidate = normalize_labels(candidate);
            if (best.empty() || candidate < best)
                best = std::move(candidate);
        }
    }
    ChordDiagram out;
    out.word_ = std::move(best);
    return out;
}

std::string ChordDiagram::to_string() const {
    if (chord_count() <= 26) {
        std::string s;
        for (int x : word_)
            s.push_back(static_cast<char>('a' + x));
        return s;
    }
    std::string s;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i)
            s += " ";
        s += std::to_string(word_[i]);
    }
    return s;
}

nlohmann::json ChordDiagram::to_json() const {
    return {{"word", word_}};
}

ChordDiagram ChordDiagram::from_json(const nlohmann::json& j) {
    return ChordDiagram(j.at("word").get<Word>());
}

SimpleGraph interlacement_graph(const Word& w) {
    validate_double_occurrence(w);
    std::vector<int> labels;
    for (int x : w)
        labels.push_back(x);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    SimpleGraph g(static_cast<int>(labels.size()));
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            if (chords_cross(w, labels[i], labels[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

SimpleGraph intersection_graph(const ChordDiagram& d) {
    return interlacement_graph(d.word());
}

std::vector<ChordDiagram> enumerate_diagrams(int n, int cap) {
    if (n > cap)
        fail("CapExceeded", "enumerate cap " + std::to_string(cap) + " exceeded");
    std::set<ChordDiagram> seen;
    for_each_matching(n, [&](const Word& w) { seen.insert(ChordDiagram(w).canonical_form()); });
    return {seen.begin(), seen.end()};
}

// --- shares and mutations ---------------------------------------------------

namespace {

// Membership mask for the two arcs; -1 outside.
std::vector<int> arc_membership(int len, const Share& s) {
    std::vector<int> in(static_cast<size_t>(len), -1);
    for (int t = 0; t < s.arc1_len; ++t)
        in[static_cast<size_t>((s.arc1_start + t) % len)] = 0;
    for (int t = 0; t < s.arc2_len; ++t) {
        size_t p = static_cast<size_t>((s.arc2_start + t) % len);
        if (in[p] >= 0)
            fail("NotAShare", "arcs overlap");
        in[p] = 1;
    }
    return in;
}

// Closure property: a chord with one endpoint on the arcs has both there.
bool closed_under_chords(const Word& w, const std::vector<int>& in, std::vector<int>* chords) {
    std::map<int, int> touched;
    for (size_t i = 0; i < w.size(); ++i)
        if (in[i] >= 0)
            ++touched[w[i]];
    for (const auto& [label, c] : touched)
        if (c == 1)
            return false;
    if (chords) {
        chords->clear();
        for (const auto& [label, c] : touched)
            chords->push_back(label);
    }
    return true;
}

// Dedup key: unordered pair of arc descriptors.  A nonempty arc is its
// position set; an empty arc is its anchor gap.
std::vector<int> arc_descriptor(int len, int start, int arc_len) {
    if (arc_len == 0)
        return {-1, start % len};
    std::vector<int> d;
    for (int t = 0; t < arc_len; ++t)
        d.push_back((start + t) % len);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

std::vector<Share> find_shares(const ChordDiagram& d) {
    const int len = 2 * d.chord_count();
    std::vector<Share> out;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;

    auto try_share = [&](int s1, int l1, int s2, int l2) {
        Share sh{s1, l1, s2, l2, {}};
        auto in = arc_membership(len, sh);
        if (!closed_under_chords(d.word(), in, &sh.chords))
            return;
        auto d1 = arc_descriptor(len, s1, l1);
        auto d2 = arc_descriptor(len, s2, l2);
        if (d2 < d1)
            std::swap(d1, d2);
        if (seen.emplace(std::move(d1), std::move(d2)).second)
            out.push_back(std::move(sh));
    };

    if (len == 0) {
        out.push_back(Share{});
        return out;
    }

    // empty share
    try_share(0, 0, 0, 0);
    for (int s1 = 0; s1 < len; ++s1) {
        for (int l1 = 1; l1 <= len; ++l1) {
            if (l1 == len && s1 != 0)
                continue;
            // empty second arc anchored at any gap outside arc1
            for (int off = 0; off <= len - l1; ++off)
                try_share(s1, l1, (s1 + l1 + off) % len, 0);
            // nonempty second arc inside the complement
            for (int off = 0; off < len - l1; ++off)
                for (int l2 = 1; l2 <= len - l1 - off; ++l2)
                    try_share(s1, l1, (s1 + l1 + off) % len, l2);
        }
    }
    return out;
}

ChordDiagram mutate(const ChordDiagram& d, const Share& s, MutationSymmetry m) {
    const int len = 2 * d.chord_count();
    if (len == 0)
        return d;

    auto in = arc_membership(len, s);
    std::vector<int> chords;
    if (!closed_under_chords(d.word(), in, &chords) || chords != s.chords)
        fail("NotAShare", "arc pair is not a share of the diagram");

    // Block offsets measured from arc1_start; an empty arc anchored at the
    // far end of the complement wraps to offset len.
    int base = s.arc1_len == 0 && s.arc2_len == 0 ? 0 : s.arc1_start;
    int d2 = ((s.arc2_start - base) % len + len) % len;
    if (d2 < s.arc1_len || (d2 == 0 && s.arc2_len == 0 && s.arc1_len > 0))
        d2 = len; // anchor immediately before arc1
    if (d2 + s.arc2_len > len)
        fail("NotAShare", "arcs are not in cyclic order");

    const Word& w = d.word();
    Word u, v, gap_a, gap_b;
    for (int t = 0; t < len; ++t) {
        int x = w[static_cast<size_t>((base + t) % len)];
        if (t < s.arc1_len)
            u.push_back(x);
        else if (t < d2)
            gap_a.push_back(x);
        else if (t < d2 + s.arc2_len)
            v.push_back(x);
        else
            gap_b.push_back(x);
    }

    Word ru(u.rbegin(), u.rend());
    Word rv(v.rbegin(), v.rend());
    Word first, second;
    switch (m) {
    case MutationSymmetry::Identity:       first = u;  second = v;  break;
    case MutationSymmetry::SwapArcs:       first = v;  second = u;  break;
    case MutationSymmetry::ReverseArcs:    first = ru; second = rv; break;
    case MutationSymmetry::RotateHalfTurn: first = rv; second = ru; break;
    }

    Word result;
    result.insert(result.end(), first.begin(), first.end());
    result.insert(result.end(), gap_a.begin(), gap_a.end());
    result.insert(result.end(), second.begin(), second.end());
    result.insert(result.end(), gap_b.begin(), gap_b.end());
    return ChordDiagram(result);
}

std::vector<ChordDiagram> mutation_orbit(const ChordDiagram& d, int cap) {
    if (d.chord_count() > cap)
        fail("CapExceeded", "mutation_orbit cap exceeded");
    std::set<ChordDiagram> seen{d.canonical_form()};
    std::vector<ChordDiagram> queue{d.canonical_form()};
    while (!queue.empty()) {
        ChordDiagram cur = queue.back();
        queue.pop_back();
        for (const Share& s : find_shares(cur)) {
            for (MutationSymmetry m : {MutationSymmetry::SwapArcs, MutationSymmetry::ReverseArcs,
                                       MutationSymmetry::RotateHalfTurn}) {
                ChordDiagram next = mutate(cur, s, m).canonical_form();
                if (seen.insert(next).second)
                    queue.push_back(next);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// --- products and twists ------------------------------------------------------

ChordDiagram product(const ChordDiagram& d1, const ChordDiagram& d2) {
    Word w = d1.word();
    for (int x : d2.word())
        w.push_back(x + d1.chord_count());
    return ChordDiagram(w);
}

ChordDiagram one_product(const ChordDiagram& d1, int x, const ChordDiagram& d2, int z) {
    if (d1.chord_count() == 0 || d2.chord_count() == 0)
        fail("EmptyDiagram", "one_product needs nonempty factors");
    if (x < 0 || x >= d1.chord_count() || z < 0 || z >= d2.chord_count())
        fail("ChordNotFound", "distinguished chord missing");

    const Word& w1 = d1.word();
    const Word& w2 = d2.word();
    auto [p1, p2] = endpoints_of(w1, x);
    auto [q1, q2] = endpoints_of(w2, z);
    (void)p1;
    (void)q2;

    // Rotate d1 to end at x's second endpoint, d2 to start at z's first;
    // drop the now-adjacent pair and fuse the survivors.
    Word out;
    const int len1 = static_cast<int>(w1.size());
    const int len2 = static_cast<int>(w2.size());
    const int offset = d1.chord_count(); // shift for d2 labels
    for (int t = 1; t < len1; ++t)
        out.push_back(w1[static_cast<size_t>((p2 + t) % len1)]);
    for (int t = 1; t < len2; ++t) {
        int label = w2[static_cast<size_t>((q1 + t) % len2)];
        out.push_back(label == z ? x : label + offset);
    }
    return ChordDiagram(out);
}

Word whitney_twist_word(const Word& w, int c1, int c2) {
    validate_double_occurrence(w);
    const int len = static_cast<int>(w.size());
    if (c1 == c2)
        fail("PreconditionViolated", "need two distinct chords");
    endpoints_of(w, c1);
    endpoints_of(w, c2);

    for (int s = 0; s < len; ++s) {
        for (int l = 1; l < len; ++l) {
            std::map<int, int> inside;
            for (int t = 0; t < l; ++t)
                ++inside[w[static_cast<size_t>((s + t) % len)]];
            if (inside.count(c1) == 0 || inside[c1] != 1)
                continue;
            if (inside.count(c2) == 0 || inside[c2] != 1)
                continue;
            bool ok = true;
            for (const auto& [label, cnt] : inside)
                if (label != c1 && label != c2 && cnt == 1) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;

            // reflect the block, then exchange the in-block endpoints of c1, c2
            Word out = w;
            for (int t = 0; t < l; ++t)
                out[static_cast<size_t>((s + t) % len)] =
                    w[static_cast<size_t>((s + l - 1 - t) % len)];
            int i1 = -1, i2 = -1;
            for (int t = 0; t < l; ++t) {
                size_t p = static_cast<size_t>((s + t) % len);
                if (out[p] == c1)
                    i1 = static_cast<int>(p);
                if (out[p] == c2)
                    i2 = static_cast<int>(p);
            }
            std::swap(out[static_cast<size_t>(i1)], out[static_cast<size_t>(i2)]);
            return out;
        }
    }
    fail("PreconditionViolated", "chords do not split the diagram into two blocks");
}

ChordDiagram whitney_twist(const ChordDiagram& d, int c1, int c2) {
    return ChordDiagram(whitney_twist_word(d.word(), c1, c2));
}

// --- realizability -------------------------------------------------------------

std::optional<ChordDiagram> realize_graph(const SimpleGraph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        fail("CapExceeded", "realize cap exceeded");
    std::string target = canonical_code(g);
    std::optional<ChordDiagram> found;
    for_each_matching(n, [&](const Word& w) {
        if (found)
            return;
        SimpleGraph ig = interlacement_graph(w);
        if (ig.edge_count() != g.edge_count())
            return;
        if (canonical_code(ig) == target)
            found = ChordDiagram(w).canonical_form();
    });
    return found;
}

std::vector<ChordDiagram> diagrams_with_graph(const SimpleGraph& g, int cap) {
    std::string target = canonical_code(g);
    std::vector<ChordDiagram> out;
    for (const ChordDiagram& d : enumerate_diagrams(g.vertex_count(), cap))
        if (canonical_code(intersection_graph(d)) == target)
            out.push_back(d);
    return out;
}

} // namespace cdws
