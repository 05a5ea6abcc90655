#include "cdws/gl11.hpp"

namespace cdws {

namespace {

MultiPoly minus_y_pow(int half) {
    MultiPoly p = MultiPoly::constant(1);
    for (int i = 0; i < half; ++i)
        p *= -MultiPoly::var_y();
    return p;
}

std::vector<int> subset_vertices(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1)
            out.push_back(v);
    return out;
}

} // namespace

MultiPoly conway_graph_invariant(const SimpleGraph& g) {
    if (!adjacency_nondegenerate_gf2(g))
        return MultiPoly();
    return minus_y_pow(g.vertex_count() / 2);
}

MultiPoly framed_conway(const SimpleGraph& g) {
    const int n = g.vertex_count();
    MultiPoly out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        SimpleGraph sub = induced_subgraph(g, subset_vertices(mask, n));
        if (!adjacency_nondegenerate_gf2(sub))
            continue;
        int k = std::popcount(mask);
        out += MultiPoly::monomial(static_cast<unsigned>(n - k), 0, 1) * minus_y_pow(k / 2);
    }
    return out;
}

MultiPoly deframe(const SimpleGraph& g) {
    const int n = g.vertex_count();
    MultiPoly out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        SimpleGraph sub = induced_subgraph(g, subset_vertices(mask, n));
        int k = std::popcount(mask);
        MultiPoly sign_c = MultiPoly::constant(1);
        for (int i = 0; i < n - k; ++i)
            sign_c *= -MultiPoly::var_c();
        out += sign_c * framed_conway(sub);
    }
    return out;
}

MultiPoly gl11_on_diagram(const ChordDiagram& d, int cap) {
    if (d.chord_count() > cap)
        fail("CapExceeded", "gl11 cap exceeded");
    return framed_conway(intersection_graph(d));
}

} // namespace cdws
