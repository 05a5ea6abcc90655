#pragma once

#include <map>
#include <vector>

#include "cdws/chord.hpp"
#include "cdws/poly.hpp"

namespace cdws {

// Universal sl(2) weight system, as a polynomial in the Casimir c
// (Killing-form normalization: the single-chord diagram maps to c, a
// leaf contributes a factor c - 1/2).

// Representation-theoretic evaluation: exact traces over the
// irreducible representations of highest weight m = 1..n+1 followed by
// interpolation in c at the Casimir eigenvalues m(m+2)/8.
MultiPoly sl2_oracle(const ChordDiagram& d, int cap = 7);

// Trace of the chord-insertion element over the irrep of highest
// weight m, divided by the dimension m+1 (the scalar by which the
// element acts).  Exposed for the cutting-point-independence check.
Rational sl2_irrep_value(const Word& w, int m);

// Recurrence evaluation: isolated chord -> factor c, leaf ->
// factor c - 1/2, otherwise a six-term relation rewriting a window of
// three consecutive endpoints of pairwise crossing chords.
MultiPoly sl2_recurrence(const ChordDiagram& d, int cap = 7);

// Batch evaluation of the recurrence with memoization on canonical
// forms.
std::map<ChordDiagram, MultiPoly> sl2_memo_evaluate(const std::vector<ChordDiagram>& batch,
                                                    int cap = 7);

} // namespace cdws
