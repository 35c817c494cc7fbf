#pragma once

#include <map>
#include <string>
#include <vector>

#include "clv/dyadic.hpp"
#include "clv/enumerate.hpp"
#include "clv/linalg.hpp"

namespace clv {

enum class Ring { Z, ZHalf };

enum class RowTag { AsTorsion, Ihx };

/*
 * Integer presentation of the degree-k diagram space: columns are the
 * canonical loopless generators of that degree, rows span the relation
 * subgroup.  AS is already folded into the generators by signed
 * canonicalization, so its only residue is one row 2*e_D per generator D
 * whose class equals its own negative.  IHX contributes one row
 * [G_I] - [G_H] + [G_X] per (generator, edge, attachment choice) whose three
 * diagrams are all loopless, pushed through signed canonicalization
 * (coefficients merge when members of a triple coincide as signed classes).
 * Duplicate and zero rows are dropped.
 */
struct RelationMatrix {
    int degree = 0;
    std::vector<CanonicalDiagram> generators; // column basis, sorted by key
    IntMatrix rows;                           // one relation per row
    std::vector<RowTag> tags;                 // per row
};

RelationMatrix build_relation_matrix(int k, int degree_bound = default_degree_bound);

struct AbelianGroupStructure {
    int free_rank = 0;
    std::vector<Int> torsion; // invariant factors >= 2, each dividing the next

    // "Z^r (+) Z/d1 (+) Z/d2 ...", or "0" for the trivial group.
    std::string str() const;
};

AbelianGroupStructure group_structure(int k, Ring ring, int degree_bound = default_degree_bound);

// Finitely supported sum of canonical diagram classes with Z[1/2]
// coefficients.  Keys carry a fixed degree; torsion-flagged classes are
// never stored (they vanish once 2 is invertible).
using DiagramVector = std::map<DiagramKey, Dyadic>;

// Drops zero coefficients in place.
void prune(DiagramVector& v);

// dst += s * src, pruning zeros.
void add_scaled(DiagramVector& dst, const DiagramVector& src, const Dyadic& s);

/*
 * Coordinates of v in a fixed basis of the free part of the degree-k space
 * over Z[1/2]: relation rows map to zero, torsion classes (2-power or odd)
 * project away.  Linear, deterministic across runs.
 */
std::vector<Dyadic> reduce_to_basis(const DiagramVector& v, int k,
                                    int degree_bound = default_degree_bound);

// Dimension of the free part over Z[1/2] at degree k (length of the
// coordinate vectors above).
int basis_rank(int k, int degree_bound = default_degree_bound);

} // namespace clv
