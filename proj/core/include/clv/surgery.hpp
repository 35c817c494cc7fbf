#pragma once

#include <string>
#include <vector>

#include "clv/clover.hpp"
#include "clv/linalg.hpp"

namespace clv {

/*
 * Framed link as a planar-diagram code.  A crossing lists its four arc
 * labels counterclockwise starting at the incoming under-strand, so for
 * X a b c d the under-strand runs a -> c and the over-strand occupies b, d;
 * the crossing is positive exactly when the over-strand runs b -> d.
 * Components are cyclically ordered arc sequences; crossing-free components
 * carry no arcs and an explicit unknot record.  Framings are explicit
 * integers per component, never diagram writhe.
 */
struct Crossing {
    int a, b, c, d;
};

struct FramedLinkDiagram {
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> components; // arc labels in traversal order; empty = unknot
    std::vector<long long> framings;          // one per component

    int component_count() const { return static_cast<int>(components.size()); }
};

std::vector<std::string> validate_pd(const FramedLinkDiagram& d);

/*
 * The surgery link of a clover, by template substitution: each internal
 * vertex becomes a Borromean triple of 0-framed circles (one per slot of
 * its cyclic order), each edge a Hopf clasp between the circles at its two
 * slots (a leaf is its own circle at its stem's far end), with one extra
 * writhe-free clasp marking an odd twist parity.  Off-diagonal leaf-linking
 * entries become |lk| signed clasps between the leaf circles, diagonal
 * entries become the leaf framings.  Components are emitted vertex by
 * vertex (three rings each, slot order), then leaf by leaf, so the count is
 * 3 * degree + leaves.
 */
FramedLinkDiagram compile_surgery_link(const CloverExpression& c);

struct LinkingMatrix {
    IntMatrix entries; // symmetric; diagonal = framings
};

// Off-diagonal (i,j) = half the sum of crossing signs between components i
// and j; an odd sum means the diagram is malformed.  Diagonal = framings.
LinkingMatrix linking_matrix(const FramedLinkDiagram& d);

struct UnimodularityCertificate {
    Int determinant;
    bool unimodular = false; // |det| = 1, the homology-preservation shadow
};

UnimodularityCertificate unimodularity_certificate(const FramedLinkDiagram& d);

/*
 * PD text format (.pd), line-oriented UTF-8, '#' starts a comment:
 *
 *   components N
 *   X a b c d
 *   comp i : a1 a2 ...
 *   unknot i
 *   framing i f
 *
 * Every component has either a comp line or an unknot line, and a framing
 * line (framing 0 may be omitted on input; printing always emits it).
 */
std::string print_pd(const FramedLinkDiagram& d);
FramedLinkDiagram parse_pd(std::istream& in);
FramedLinkDiagram parse_pd(const std::string& text);

} // namespace clv
