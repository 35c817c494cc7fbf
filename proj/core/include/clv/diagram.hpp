#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace clv {

/*
 * Vertex-oriented trivalent multigraph in half-edge form.
 *
 * Edge e owns the two half-edges 2e and 2e+1; `incidence` maps each half-edge
 * to its vertex, and `cyclic_order[v]` lists the three half-edges at v up to
 * cyclic rotation.  Loops (both half-edges at one vertex) are representable;
 * they are rejected only where a generator of the graded diagram space is
 * required.
 */
struct OrientedTrivalentGraph {
    int vertex_count = 0;
    std::vector<int> incidence;                     // half-edge -> vertex
    std::vector<std::array<int, 3>> cyclic_order;   // per vertex

    int edge_count() const { return static_cast<int>(incidence.size()) / 2; }
    int half_edge_count() const { return static_cast<int>(incidence.size()); }

    bool edge_is_loop(int e) const { return incidence[2 * e] == incidence[2 * e + 1]; }
    bool has_loop() const {
        for (int e = 0; e < edge_count(); ++e)
            if (edge_is_loop(e)) return true;
        return false;
    }

    bool operator==(const OrientedTrivalentGraph&) const = default;
};

// Structural invariant check.  Violations are data, not failures; an empty
// list means the graph is well-formed.
std::vector<std::string> validate_graph(const OrientedTrivalentGraph& g);

// Returns g with the cyclic triple at v reversed (the AS move on a generator).
OrientedTrivalentGraph reverse_vertex_order(const OrientedTrivalentGraph& g, int v);

// Number of connected components of an arbitrary node/edge incidence list.
// Shared by diagrams and clovers.
int component_count(int node_count, const std::vector<std::pair<int, int>>& edges);

int component_count(const OrientedTrivalentGraph& g);

// True iff deleting edge e increases the number of connected components.
bool edge_is_separating(const OrientedTrivalentGraph& g, int e);
bool edge_is_separating(int node_count, const std::vector<std::pair<int, int>>& edges, int e);

/*
 * Local IHX surgery at an internal edge e with distinct endpoints u, v.
 *
 * Writing the triples as u:(e,a,b) and v:(e,c,d) (rotated so e's half-edge
 * comes first), the three fragments are
 *
 *     I = u:(e,a,b) v:(e,c,d)      (the input)
 *     H = u:(e,a,c) v:(e,b,d)
 *     X = u:(e,b,c) v:(e,a,d)
 *
 * which satisfy I = H - X in the quotient.  attachment_choice 1 swaps which
 * rewiring plays the H role; both choices generate the same relation row.
 * H or X may acquire loops (when an outer half-edge's partner sits at u or v);
 * the triple is returned with the loops flagged and consumers decide.
 */
struct IhxTriple {
    OrientedTrivalentGraph i, h, x;
    bool h_has_loop = false;
    bool x_has_loop = false;
};

IhxTriple apply_ihx_at(const OrientedTrivalentGraph& g, int e, int attachment_choice = 0);

} // namespace clv
