#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "clv/lattice.hpp"

namespace clv {

/*
 * Abstract clover: a trivalent graph with univalent leaves, in the same
 * half-edge convention as OrientedTrivalentGraph.  Nodes 0..internal_count-1
 * are internal trivalent vertices (each with a cyclic triple), nodes
 * internal_count..internal_count+leaf_count-1 are leaves holding exactly one
 * edge-end.  Each edge carries a half-twist parity; the embedding data of
 * the leaves is the symmetric integer leaf_linking matrix, whose diagonal
 * holds the framings.  The degree is the number of internal vertices and
 * every connected component must have degree at least one.
 */
struct CloverExpression {
    int internal_count = 0;
    int leaf_count = 0;
    std::vector<int> incidence;                       // half-edge -> node
    std::vector<std::array<int, 3>> cyclic_order;     // per internal vertex
    std::vector<int> twist;                           // per edge, 0 or 1
    std::vector<std::vector<long long>> leaf_linking; // leaf_count x leaf_count

    int edge_count() const { return static_cast<int>(incidence.size()) / 2; }
    int node_count() const { return internal_count + leaf_count; }
    bool node_is_leaf(int n) const { return n >= internal_count; }
    int leaf_node(int leaf) const { return internal_count + leaf; }

    // The unique half-edge at a leaf, and the internal vertex its stem meets.
    int leaf_half_edge(int leaf) const;
    int stem_vertex(int leaf) const;

    bool operator==(const CloverExpression&) const = default;
};

std::vector<std::string> validate_clover(const CloverExpression& c);

int degree(const CloverExpression& c);

int component_count(const CloverExpression& c);

bool edge_is_separating(const CloverExpression& c, int e);

/*
 * Replaces an untwisted internal edge by two fresh Hopf-linked leaves
 * (mutual linking +1, all other data zero).  The class changes by the
 * returned sign: -1 when the edge separates its component, +1 otherwise.
 */
std::pair<CloverExpression, int> cut_edge(const CloverExpression& c, int e);

/*
 * Inverse of cut_edge: fuses a Hopf pair (lk = +-1, all other linkings and
 * both framings zero, untwisted stems) into one internal untwisted edge.
 * Sign = (-1 if the leaves lay in different components) * sign(lk); a
 * negative Hopf pair glues as a positive one composed with one half-twist.
 * cut_edge followed by glue_leaves on the new pair restores the clover
 * exactly, with sign product +1.
 */
std::pair<CloverExpression, int> glue_leaves(const CloverExpression& c, int l1, int l2);

/*
 * Splits leaf l into two daughters carried by separate output clovers.
 * row1/row2 must sum to l's off-diagonal row, and frame1 + frame2 +
 * 2*mutual must equal l's framing (mutual = the linking the daughters would
 * have with each other).  reduce is additive across the split.
 */
std::pair<CloverExpression, CloverExpression> split_leaf(
    const CloverExpression& c, int l,
    const std::vector<long long>& row1, long long frame1,
    const std::vector<long long>& row2, long long frame2, long long mutual);

// Adds half twists to an edge; only the parity is kept.
CloverExpression twist_edge(const CloverExpression& c, int e, long long half_twists);

// Clover-level IHX surgery at an internal edge, same fragment convention as
// apply_ihx_at; returns (I, H, X) with I = input.
std::array<CloverExpression, 3> ihx_triple(const CloverExpression& c, int e);

/*
 * Graded class of the clover in the degree-n diagram space over Z[1/2],
 * n = degree(c): the multilinear expansion over perfect matchings of the
 * leaf set.  A matching weighs each pair (l,m) by lk(l,m); its term is the
 * trivalent graph obtained by gluing every pair, signed by
 *
 *     (-1)^(components before - components after)   (separation sign)
 *   * (-1)^(sum of twist parities)
 *   * the AS sign of canonicalization,
 *
 * with the linking signs folded into the weights.  Glued graphs with loops
 * and torsion-flagged classes vanish over Z[1/2] and are dropped.  Framings
 * never enter: a leaf left to its framing alone is a special or trivial
 * leaf and contributes zero.  Odd degree forces an odd leaf count, so the
 * result is the zero vector.
 */
DiagramVector reduce(const CloverExpression& c);

} // namespace clv
