#include "clv/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "clv/errors.hpp"

namespace clv {

std::vector<std::string> validate_graph(const OrientedTrivalentGraph& g) {
    std::vector<std::string> out;
    if (g.vertex_count < 0) {
        out.push_back("negative vertex count");
        return out;
    }
    if (g.incidence.size() % 2 != 0)
        out.push_back("odd number of half-edges (pairing must be a perfect matching)");
    if (static_cast<int>(g.cyclic_order.size()) != g.vertex_count)
        out.push_back("cyclic_order must list exactly one triple per vertex");

    std::vector<std::vector<int>> at_vertex(g.vertex_count);
    for (int h = 0; h < g.half_edge_count(); ++h) {
        int v = g.incidence[h];
        if (v < 0 || v >= g.vertex_count)
            out.push_back("half-edge " + std::to_string(h) + " incident to out-of-range vertex " +
                          std::to_string(v));
        else
            at_vertex[v].push_back(h);
    }
    for (int v = 0; v < g.vertex_count && v < static_cast<int>(at_vertex.size()); ++v)
        if (at_vertex[v].size() != 3)
            out.push_back("valence violation at vertex " + std::to_string(v) + " (degree " +
                          std::to_string(at_vertex[v].size()) + ")");

    for (int v = 0; v < std::min<int>(g.vertex_count, g.cyclic_order.size()); ++v) {
        std::array<int, 3> t = g.cyclic_order[v];
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) {
            out.push_back("cyclic order at vertex " + std::to_string(v) + " repeats a half-edge");
            continue;
        }
        std::vector<int> expect = v < static_cast<int>(at_vertex.size()) ? at_vertex[v]
                                                                         : std::vector<int>{};
        std::sort(expect.begin(), expect.end());
        if (!std::equal(t.begin(), t.end(), expect.begin(), expect.end()))
            out.push_back("order/incidence mismatch at vertex " + std::to_string(v));
    }
    return out;
}

OrientedTrivalentGraph reverse_vertex_order(const OrientedTrivalentGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count)
        throw invalid_input("reverse_vertex_order: vertex " + std::to_string(v) + " out of range");
    OrientedTrivalentGraph out = g;
    std::swap(out.cyclic_order[v][0], out.cyclic_order[v][2]);
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int component_count(int node_count, const std::vector<std::pair<int, int>>& edges) {
    UnionFind uf(node_count);
    for (const auto& [a, b] : edges) uf.unite(a, b);
    int n = 0;
    for (int v = 0; v < node_count; ++v)
        if (uf.find(v) == v) ++n;
    return n;
}

static std::vector<std::pair<int, int>> edge_pairs(const OrientedTrivalentGraph& g) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        out.emplace_back(g.incidence[2 * e], g.incidence[2 * e + 1]);
    return out;
}

int component_count(const OrientedTrivalentGraph& g) {
    return component_count(g.vertex_count, edge_pairs(g));
}

bool edge_is_separating(int node_count, const std::vector<std::pair<int, int>>& edges, int e) {
    if (e < 0 || e >= static_cast<int>(edges.size()))
        throw invalid_input("edge_is_separating: edge " + std::to_string(e) + " out of range");
    std::vector<std::pair<int, int>> rest;
    rest.reserve(edges.size() - 1);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (i != e) rest.push_back(edges[i]);
    return component_count(node_count, rest) > component_count(node_count, edges);
}

bool edge_is_separating(const OrientedTrivalentGraph& g, int e) {
    return edge_is_separating(g.vertex_count, edge_pairs(g), e);
}

IhxTriple apply_ihx_at(const OrientedTrivalentGraph& g, int e, int attachment_choice) {
    if (e < 0 || e >= g.edge_count())
        throw invalid_input("apply_ihx_at: edge " + std::to_string(e) + " out of range");
    if (g.edge_is_loop(e))
        throw invalid_input("apply_ihx_at: edge " + std::to_string(e) + " is a loop");

    const int hu = 2 * e, hv = 2 * e + 1;
    const int u = g.incidence[hu], v = g.incidence[hv];

    // Rotate each triple so the half-edge of e comes first.
    auto outer = [&](int vertex, int anchor) -> std::array<int, 2> {
        const std::array<int, 3>& t = g.cyclic_order[vertex];
        for (int i = 0; i < 3; ++i)
            if (t[i] == anchor) return {t[(i + 1) % 3], t[(i + 2) % 3]};
        throw invalid_input("apply_ihx_at: cyclic order at vertex " + std::to_string(vertex) +
                            " does not contain the edge half-edge");
    };
    auto [a, b] = outer(u, hu);
    auto [c, d] = outer(v, hv);

    // Builds the fragment u:(hu,p,q) v:(hv,r,s), moving half-edge incidences
    // as needed.  A moved half-edge whose partner already sits at the target
    // vertex turns its edge into a loop.
    auto rewire = [&](int p, int q, int r, int s) {
        OrientedTrivalentGraph out = g;
        for (int h : {p, q}) out.incidence[h] = u;
        for (int h : {r, s}) out.incidence[h] = v;
        out.cyclic_order[u] = {hu, p, q};
        out.cyclic_order[v] = {hv, r, s};
        return out;
    };

    IhxTriple t;
    t.i = g;
    if (attachment_choice == 0) {
        t.h = rewire(a, c, b, d);
        t.x = rewire(b, c, a, d);
    } else {
        // H and X roles exchanged.  I = H - X = (-X) - (-H), so the swapped
        // presentation carries one orientation reversal at u on each graph.
        t.h = rewire(c, b, a, d);
        t.x = rewire(c, a, b, d);
    }
    t.h_has_loop = t.h.has_loop();
    t.x_has_loop = t.x.has_loop();
    return t;
}

} // namespace clv
