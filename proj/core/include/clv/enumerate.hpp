#pragma once

#include <functional>
#include <vector>

#include "clv/canonical.hpp"

namespace clv {

// One signed-isomorphism class of loopless vertex-oriented trivalent graphs.
struct CanonicalDiagram {
    OrientedTrivalentGraph graph;
    DiagramKey key;
    bool torsion_flag = false;
};

inline constexpr int default_degree_bound = 5;

/*
 * All canonical loopless diagrams with 2k vertices, one representative per
 * signed-isomorphism class, sorted by encoding.  Not-necessarily-connected
 * classes are included unless connected_only is set; the empty diagram is
 * the unique class at k = 0 under either flag.  Results are memoized per
 * degree.  Throws resource_limit when k exceeds the bound (the search grows
 * double-factorially).
 */
std::vector<CanonicalDiagram> enumerate_diagrams(int k, bool connected_only,
                                                 int degree_bound = default_degree_bound);

namespace detail {

// Labeled loopless candidates behind enumerate_diagrams, before isomorphism
// deduplication.  Exposed so the test suite can replay the class list
// through an independent path.
void for_each_candidate(int vertex_count,
                        const std::function<void(const OrientedTrivalentGraph&)>& emit);

} // namespace detail

} // namespace clv
