#include "clv/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "clv/errors.hpp"

namespace clv {

RelationMatrix build_relation_matrix(int k, int degree_bound) {
    RelationMatrix rm;
    rm.degree = k;
    rm.generators = enumerate_diagrams(k, false, degree_bound);

    std::map<DiagramKey, int> column;
    for (int c = 0; c < static_cast<int>(rm.generators.size()); ++c)
        column.emplace(rm.generators[c].key, c);
    const int cols = static_cast<int>(rm.generators.size());

    std::vector<std::vector<long>> rows;
    std::vector<RowTag> tags;
    std::set<std::vector<long>> seen;
    auto push_row = [&](std::vector<long> row, RowTag tag) {
        if (std::all_of(row.begin(), row.end(), [](long x) { return x == 0; })) return;
        if (!seen.insert(row).second) return;
        rows.push_back(std::move(row));
        tags.push_back(tag);
    };

    for (int c = 0; c < cols; ++c) {
        if (!rm.generators[c].torsion_flag) continue;
        std::vector<long> row(cols, 0);
        row[c] = 2;
        push_row(std::move(row), RowTag::AsTorsion);
    }

    for (int c = 0; c < cols; ++c) {
        const OrientedTrivalentGraph& g = rm.generators[c].graph;
        for (int e = 0; e < g.edge_count(); ++e) {
            for (int choice = 0; choice < 2; ++choice) {
                IhxTriple t = apply_ihx_at(g, e, choice);
                if (t.h_has_loop || t.x_has_loop) continue;
                std::vector<long> row(cols, 0);
                row[c] += 1;
                SignedClass h = canonicalize(t.h);
                SignedClass x = canonicalize(t.x);
                row[column.at(h.key)] -= h.sign;
                row[column.at(x.key)] += x.sign;
                push_row(std::move(row), RowTag::Ihx);
            }
        }
    }

    rm.rows = IntMatrix(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < rm.rows.rows(); ++r)
        for (int c = 0; c < cols; ++c) rm.rows.at(r, c) = rows[r][c];
    rm.tags = std::move(tags);
    return rm;
}

namespace {

// SNF presentation of the degree-k quotient, memoized: relations enter as
// the columns of B = rows^T, so coker(B) is the diagram space and the rows
// of U with zero diagonal entry in D = U B V give the free coordinates.
struct QuotientData {
    RelationMatrix relations;
    SnfResult snf;               // of relations.rows transposed
    std::vector<int> free_rows;  // indices i with D(i,i) = 0 (or i >= rank)
    std::map<DiagramKey, int> column;
};

const QuotientData& quotient_data(int k, int degree_bound) {
    static std::mutex mu;
    static std::map<int, QuotientData> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    QuotientData qd;
    qd.relations = build_relation_matrix(k, degree_bound);
    qd.snf = smith_normal_form(qd.relations.rows.transposed());
    const int cols = static_cast<int>(qd.relations.generators.size());
    for (int i = 0; i < cols; ++i)
        if (i >= qd.snf.rank) qd.free_rows.push_back(i);
    for (int c = 0; c < cols; ++c) qd.column.emplace(qd.relations.generators[c].key, c);
    return cache.emplace(k, std::move(qd)).first->second;
}

} // namespace

std::string AbelianGroupStructure::str() const {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " (+) ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

AbelianGroupStructure group_structure(int k, Ring ring, int degree_bound) {
    const QuotientData& qd = quotient_data(k, degree_bound);
    AbelianGroupStructure out;
    out.free_rank = static_cast<int>(qd.relations.generators.size()) - qd.snf.rank;
    for (const Int& d : qd.snf.invariant_factors) {
        Int t = d;
        if (ring == Ring::ZHalf)
            while (t % 2 == 0) t /= 2; // 2 is a unit, strip it
        if (t > 1) out.torsion.push_back(t);
    }
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

void prune(DiagramVector& v) {
    for (auto it = v.begin(); it != v.end();)
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
}

void add_scaled(DiagramVector& dst, const DiagramVector& src, const Dyadic& s) {
    for (const auto& [key, coeff] : src) dst[key] += coeff * s;
    prune(dst);
}

std::vector<Dyadic> reduce_to_basis(const DiagramVector& v, int k, int degree_bound) {
    const QuotientData& qd = quotient_data(k, degree_bound);
    std::vector<Dyadic> x(qd.relations.generators.size());
    for (const auto& [key, coeff] : v) {
        if (key.size() < 1 || key[0] != 2 * k)
            throw invalid_input("reduce_to_basis: vector is not supported in degree " +
                                std::to_string(k));
        auto it = qd.column.find(key);
        if (it == qd.column.end())
            throw invalid_input("reduce_to_basis: unknown canonical diagram in input vector");
        x[it->second] = coeff;
    }
    std::vector<Dyadic> out;
    out.reserve(qd.free_rows.size());
    for (int i : qd.free_rows) {
        Dyadic acc;
        for (int c = 0; c < static_cast<int>(x.size()); ++c) {
            if (x[c].is_zero()) continue;
            const Int& u = qd.snf.u.at(i, c);
            if (u == 0) continue;
            acc += x[c] * Dyadic(u);
        }
        out.push_back(acc);
    }
    return out;
}

int basis_rank(int k, int degree_bound) {
    const QuotientData& qd = quotient_data(k, degree_bound);
    return static_cast<int>(qd.free_rows.size());
}

} // namespace clv
