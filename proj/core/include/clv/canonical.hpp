#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clv/diagram.hpp"

namespace clv {

/*
 * Total order on labeled diagrams: a graph is encoded as
 *
 *   [vertex_count, edge_count,
 *    (a,b) per edge with a <= b, edges sorted ascending,
 *    per-vertex cyclic triple rotated so its least half-edge comes first]
 *
 * with half-edges numbered 2e, 2e+1 and the even half-edge placed at the
 * smaller endpoint.  The canonical form of a diagram is the minimum encoding
 * over all vertex/edge relabelings; each vertex triple is additionally
 * minimized over its dihedral orbit, which folds the AS relation into the
 * form.  Rotations keep the sign, reflections flip it, so the sign of the
 * input relative to the canonical representative is the reflection parity of
 * the optimal relabeling.  When relabelings of both parities reach the
 * minimum the class carries an orientation-reversing automorphism and equals
 * its own negative (2-torsion under AS); the sign is then reported as +1.
 */
using DiagramKey = std::vector<std::int32_t>;

struct SignedClass {
    OrientedTrivalentGraph canonical;
    int sign = 1;
    bool torsion_flag = false;
    DiagramKey key;
};

SignedClass canonicalize(const OrientedTrivalentGraph& g);

// Rebuilds the labeled graph an encoding describes.
OrientedTrivalentGraph decode_key(const DiagramKey& key);

// Stable content hash of an encoding, used by the diagram-vector text format.
std::uint64_t key_hash(const DiagramKey& key);
std::string key_hash_hex(const DiagramKey& key);

} // namespace clv
