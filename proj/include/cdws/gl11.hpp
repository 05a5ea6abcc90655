#pragma once

#include "cdws/chord.hpp"
#include "cdws/graph.hpp"
#include "cdws/poly.hpp"

namespace cdws {

// Conway graph invariant: (-y)^{n/2} when the GF(2) adjacency matrix
// is nondegenerate, 0 otherwise.
MultiPoly conway_graph_invariant(const SimpleGraph& g);

// Framed Conway graph invariant: the inverse deframing transform
//   sum over vertex subsets U with nondegenerate G_U of
//   c^{n-|U|} (-y)^{|U|/2}.
MultiPoly framed_conway(const SimpleGraph& g);

// Deframing transform sum_U (-c)^{n-|U|} framed_conway(G_U); equals
// the Conway graph invariant.
MultiPoly deframe(const SimpleGraph& g);

// The gl(1|1) universal weight system: the framed Conway invariant of
// the intersection graph.
MultiPoly gl11_on_diagram(const ChordDiagram& d, int cap = 12);

} // namespace cdws
