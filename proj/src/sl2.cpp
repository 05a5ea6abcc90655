#include "cdws/sl2.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace cdws {

namespace {

// Dual-basis pair assigned to a chord: which element sits at the first
// endpoint.  The partner at the second endpoint is fixed by duality,
// and the pair's normalization factor is folded into the path weight
// (2 for the E/F pairs, 1 for H/H; a global 1/8^n is divided out at
// the end).
enum class PairChoice { EF, FE, HH };

// Row-vector action of the basis elements on the irrep of highest
// weight m with basis v_0..v_m:
//   E: k -> k+1, coefficient (k+1)(m-k)
//   F: k -> k-1, coefficient 1
//   H: k -> k,   coefficient m-2k
// Returns false when the image vanishes.
bool row_apply(char elem, int m, int& k, mpz_class& scalar) {
    switch (elem) {
    case 'E':
        if (k == m)
            return false;
        scalar *= mpz_class(k + 1) * (m - k);
        ++k;
        return true;
    case 'F':
        if (k == 0)
            return false;
        --k;
        return true;
    default: // 'H'
        if (m == 2 * k)
            return false;
        scalar *= m - 2 * k;
        return true;
    }
}

char partner(PairChoice c) {
    switch (c) {
    case PairChoice::EF: return 'F';
    case PairChoice::FE: return 'E';
    default: return 'H';
    }
}

char leader(PairChoice c) {
    switch (c) {
    case PairChoice::EF: return 'E';
    case PairChoice::FE: return 'F';
    default: return 'H';
    }
}

} // namespace

Rational sl2_irrep_value(const Word& w, int m) {
    const int n = static_cast<int>(w.size()) / 2;
    std::vector<int> first_pos(static_cast<size_t>(n), -1);
    std::vector<bool> is_first(w.size(), false);
    for (size_t i = 0; i < w.size(); ++i) {
        if (first_pos[static_cast<size_t>(w[i])] < 0) {
            first_pos[static_cast<size_t>(w[i])] = static_cast<int>(i);
            is_first[i] = true;
        }
    }

    mpz_class trace = 0;
    std::vector<PairChoice> choice(static_cast<size_t>(n), PairChoice::HH);

    for (int start = 0; start <= m; ++start) {
        std::function<void(size_t, int, const mpz_class&)> walk = [&](size_t pos, int k,
                                                                      const mpz_class& scalar) {
            if (pos == w.size()) {
                if (k == start)
                    trace += scalar;
                return;
            }
            int chord = w[pos];
            if (is_first[pos]) {
                for (PairChoice c : {PairChoice::EF, PairChoice::FE, PairChoice::HH}) {
                    int k2 = k;
                    mpz_class s2 = scalar;
                    if (c != PairChoice::HH)
                        s2 *= 2; // E/F pairs carry 1/4 = 2/8
                    if (!row_apply(leader(c), m, k2, s2))
                        continue;
                    choice[static_cast<size_t>(chord)] = c;
                    walk(pos + 1, k2, s2);
                }
            } else {
                int k2 = k;
                mpz_class s2 = scalar;
                if (row_apply(partner(choice[static_cast<size_t>(chord)]), m, k2, s2))
                    walk(pos + 1, k2, s2);
            }
        };
        walk(0, start, 1);
    }

    mpz_class denom = m + 1;
    for (int i = 0; i < n; ++i)
        denom *= 8;
    Rational value(trace, denom);
    value.canonicalize();
    return value;
}

MultiPoly sl2_oracle(const ChordDiagram& d, int cap) {
    const int n = d.chord_count();
    if (n > cap)
        fail("CapExceeded", "sl2 oracle cap " + std::to_string(cap) + " exceeded");
    std::vector<std::pair<Rational, Rational>> points;
    for (int m = 1; m <= n + 1; ++m) {
        Rational casimir(static_cast<long>(m) * (m + 2), 8);
        casimir.canonicalize();
        points.push_back({casimir, sl2_irrep_value(d.word(), m)});
    }
    return interpolate_in_c(points, static_cast<unsigned>(n));
}

// --- recurrence evaluation ----------------------------------------------------

namespace {

int crossing_count(const Word& w) {
    SimpleGraph g = interlacement_graph(w);
    return g.edge_count();
}

// Chords crossed by `chord` in w.
std::vector<int> crossed_by(const Word& w, int chord) {
    SimpleGraph g = interlacement_graph(w);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != chord && g.has_edge(chord, v))
            out.push_back(v);
    return out;
}

Word delete_chord(const Word& w, int chord) {
    Word out;
    for (int x : w)
        if (x != chord)
            out.push_back(x);
    return out;
}

// Remove the endpoints at positions i and j and fuse chords a and b
// (their remaining endpoints become one new chord).
Word fuse(const Word& w, size_t i, size_t j, int a, int b) {
    const int fresh = *std::max_element(w.begin(), w.end()) + 1;
    Word out;
    for (size_t p = 0; p < w.size(); ++p) {
        if (p == i || p == j)
            continue;
        int x = w[p];
        out.push_back(x == a || x == b ? fresh : x);
    }
    return out;
}

struct Measure {
    int n;
    int crossings;
    Word canon;
    auto operator<=>(const Measure&) const = default;
};

Measure measure_of(const Word& w) {
    ChordDiagram d(w);
    return {d.chord_count(), crossing_count(w), d.canonical_form().word()};
}

struct SixTerm {
    Word d2, d3, d4; // same size, full coefficient +1, +1, -1
    Word d5, d6;     // one chord fewer, coefficients -1/2, +1/2
};

// Rewrite the window at positions i, i+1, i+2 (cyclic) holding
// endpoints of three distinct chords x, y, z:
//   w(xyz) = w(xzy) + w(yzx) - w(zyx) - 1/2 w(D5) + 1/2 w(D6)
// where D5 fuses x and z (dropping the window endpoints, keeping y's)
// and D6 fuses x and y (keeping z's).
SixTerm six_term_at(const Word& w, size_t i) {
    const size_t len = w.size();
    size_t i1 = (i + 1) % len, i2 = (i + 2) % len;
    int x = w[i], y = w[i1], z = w[i2];

    SixTerm t;
    t.d2 = w;
    std::swap(t.d2[i1], t.d2[i2]); // (x, z, y)
    t.d3 = w;
    t.d3[i] = y;
    t.d3[i1] = z;
    t.d3[i2] = x;
    t.d4 = w;
    t.d4[i] = z;
    t.d4[i1] = y;
    t.d4[i2] = x;
    t.d5 = fuse(w, i, i2, x, z);
    t.d6 = fuse(w, i, i1, x, y);
    return t;
}

class RecurrenceEngine {
public:
    MultiPoly evaluate(const ChordDiagram& d) {
        ChordDiagram canon = d.canonical_form();
        auto it = memo_.find(canon);
        if (it != memo_.end())
            return it->second;
        MultiPoly value = compute(canon);
        memo_.emplace(std::move(canon), value);
        return value;
    }

private:
    MultiPoly compute(const ChordDiagram& d) {
        const Word& w = d.word();
        const int n = d.chord_count();
        if (n == 0)
            return MultiPoly::constant(1);

        for (int chord = 0; chord < n; ++chord) {
            std::vector<int> crossed = crossed_by(w, chord);
            if (crossed.empty())
                return MultiPoly::var_c() * evaluate(ChordDiagram(delete_chord(w, chord)));
            if (crossed.size() == 1)
                return (MultiPoly::var_c() - MultiPoly::constant(rational(1, 2))) *
                       evaluate(ChordDiagram(delete_chord(w, chord)));
        }

        // No isolated chords, no leaves: every window of three
        // consecutive endpoints holds three distinct chords.  Pick a
        // window whose three rewrites all strictly decrease
        // (n, crossings, canonical word).
        Measure here = measure_of(w);
        for (size_t i = 0; i < w.size(); ++i) {
            SixTerm t = six_term_at(w, i);
            if (measure_of(t.d2) < here && measure_of(t.d3) < here && measure_of(t.d4) < here) {
                MultiPoly half = MultiPoly::constant(rational(1, 2));
                return evaluate(ChordDiagram(t.d2)) + evaluate(ChordDiagram(t.d3)) -
                       evaluate(ChordDiagram(t.d4)) - half * evaluate(ChordDiagram(t.d5)) +
                       half * evaluate(ChordDiagram(t.d6));
            }
        }
        fail("ReductionStuck", "no strictly decreasing six-term window in " + d.to_string());
    }

    std::map<ChordDiagram, MultiPoly> memo_;
};

} // namespace

MultiPoly sl2_recurrence(const ChordDiagram& d, int cap) {
    if (d.chord_count() > cap)
        fail("CapExceeded", "sl2 recurrence cap exceeded");
    RecurrenceEngine engine;
    return engine.evaluate(d);
}

std::map<ChordDiagram, MultiPoly> sl2_memo_evaluate(const std::vector<ChordDiagram>& batch,
                                                    int cap) {
    RecurrenceEngine engine;
    std::map<ChordDiagram, MultiPoly> out;
    for (const ChordDiagram& d : batch) {
        if (d.chord_count() > cap)
            fail("CapExceeded", "sl2 batch cap exceeded");
        out.emplace(d.canonical_form(), engine.evaluate(d));
    }
    return out;
}

} // namespace cdws
