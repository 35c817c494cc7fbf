#pragma once

#include <iosfwd>
#include <string>

#include "clv/clover.hpp"

namespace clv {

/*
 * Clover text format (.clv), line-oriented UTF-8, '#' starts a comment:
 *
 *   clover
 *   vertices N            # internal vertices
 *   edges M
 *   edge e : u v          # endpoint: integer = internal vertex, Lk = leaf k,
 *                         #           _ = leaf bound by a later 'leaf' line
 *   order v : h h h       # cyclic triple at internal vertex v
 *   leaf L : h            # leaf id and its single edge-end (half-edge id)
 *   twist e : t           # integer, stored mod 2 (default 0)
 *   lk Li Lj : c          # symmetric linking entry (default 0)
 *   frame Li : f          # leaf framing, the diagonal entry (default 0)
 *   end
 *
 * Leaf ids must cover 0..K-1.  'leaf' lines are optional when every leaf
 * endpoint is written as Lk on its edge line, and are checked for agreement
 * when both are present.  Printing emits both forms.
 */
std::string print_clv(const CloverExpression& c);
CloverExpression parse_clv(std::istream& in);
CloverExpression parse_clv(const std::string& text);

/*
 * DiagramVector text: "0" for the zero vector, else one line per class
 * ("coefficient hash", coefficients printed as p or p/2^m) followed by a
 * catalog of the referenced diagrams, each introduced by a "# diagram hash"
 * comment and given in .dg format.
 */
std::string print_diagram_vector(const DiagramVector& v);

} // namespace clv
