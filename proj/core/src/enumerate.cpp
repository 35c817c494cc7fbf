#include "clv/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "clv/errors.hpp"

namespace clv {

namespace {

using Mult = std::vector<std::vector<int>>;

/*
 * Exact multigraph isomorphism for the deduplication of generated
 * candidates: iterated refinement of vertex colors by neighbor-color
 * multisets, then color-respecting backtracking.  Canonicalization decides
 * the same question through the encoding minimum, but at 10+ vertices one
 * full canonical search per candidate dominates the enumeration; this test
 * resolves the common case (candidate is isomorphic to a known
 * representative) in microseconds, and the canonical form is then computed
 * once per class.
 */
std::vector<long long> refine_colors(const Mult& m) {
    const int n = static_cast<int>(m.size());
    std::vector<long long> color(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<long long>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<long long> nb;
            for (int u = 0; u < n; ++u)
                if (m[v][u] != 0) nb.push_back(color[u] * 8 + m[v][u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        // ranks follow signature order, so equal partitions of isomorphic
        // graphs receive identical color values
        std::map<std::vector<long long>, long long> palette;
        for (int v = 0; v < n; ++v) palette[sig[v]] = 0;
        long long rank = 0;
        for (auto& [s, id] : palette) id = rank++;
        std::vector<long long> next(n);
        for (int v = 0; v < n; ++v) next[v] = palette[sig[v]];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool isomorphic_mult(const Mult& a, const Mult& b) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) return false;
    auto ca = refine_colors(a), cb = refine_colors(b);
    {
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
    }
    std::vector<int> image(n, -1), used(n, 0);
    auto extend = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || cb[w] != ca[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = a[v][u] == b[w][image[u]];
            if (ok && a[v][v] == b[w][w]) {
                image[v] = w;
                used[w] = 1;
                if (self(self, v + 1)) return true;
                used[w] = 0;
                image[v] = -1;
            }
        }
        return false;
    };
    return extend(extend, 0);
}

// Cheap invariant for bucketing candidates before the exact test.
std::vector<long long> bucket_invariant(const Mult& m) {
    auto colors = refine_colors(m);
    std::sort(colors.begin(), colors.end());
    std::vector<long long> inv = colors;
    long long tri = 0;
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) tri += static_cast<long long>(m[i][j]) * m[j][k] * m[k][i];
    inv.push_back(tri);
    return inv;
}

// Builds a labeled graph from a loopless multiplicity assignment; the cyclic
// order at each vertex is the ascending triple of its half-edges (the
// orientation class is chosen by canonicalization afterwards).
OrientedTrivalentGraph graph_from_mult(int vcount, const std::vector<std::vector<int>>& mult) {
    OrientedTrivalentGraph g;
    g.vertex_count = vcount;
    for (int i = 0; i < vcount; ++i)
        for (int j = i + 1; j < vcount; ++j)
            for (int c = 0; c < mult[i][j]; ++c) {
                g.incidence.push_back(i);
                g.incidence.push_back(j);
            }
    g.cyclic_order.resize(vcount);
    std::vector<int> filled(vcount, 0);
    for (int h = 0; h < g.half_edge_count(); ++h) {
        int v = g.incidence[h];
        g.cyclic_order[v][filled[v]++] = h;
    }
    return g;
}

/*
 * Candidate generation: symmetric multiplicity matrices with zero diagonal
 * and all row sums 3, filled cell by cell in row-major order of the upper
 * triangle.  Three safe symmetry cuts keep the candidate count small without
 * losing any isomorphism class (every class has a labeling satisfying all):
 * row 0 is non-increasing, mult(0,1) is the global maximum multiplicity, and
 * adjacent labels with equal column prefixes are lexicographically ordered.
 */
void generate_candidates(int vcount, const std::function<void(const Mult&)>& emit) {
    if (vcount == 0) {
        emit(Mult{});
        return;
    }
    Mult mult(vcount, std::vector<int>(vcount, 0));
    std::vector<int> rem(vcount, 3);

    // Discards assignments where swapping two adjacent labels >= 2 with
    // identical column prefixes would lex-decrease the matrix; every class
    // keeps a representative, and the row-0 cuts are preserved because the
    // equal prefix pins row 0 at both columns.
    auto locally_canonical = [&]() {
        for (int v = 3; v < vcount; ++v) {
            bool prefix_equal = true;
            for (int j = 0; j < v - 1 && prefix_equal; ++j)
                prefix_equal = mult[j][v - 1] == mult[j][v];
            if (!prefix_equal) continue;
            for (int j = 0; j < vcount; ++j) {
                if (j == v - 1 || j == v) continue;
                if (mult[v - 1][j] != mult[v][j]) {
                    if (mult[v - 1][j] < mult[v][j]) return false;
                    break;
                }
            }
        }
        return true;
    };

    auto fill = [&](auto&& self, int i, int j) -> void {
        if (i == vcount) {
            if (locally_canonical()) emit(mult);
            return;
        }
        if (j == vcount) {
            if (rem[i] != 0) return;
            self(self, i + 1, i + 2);
            return;
        }
        int cap = std::min(rem[i], rem[j]);
        if (i == 0 && j > 1) cap = std::min(cap, mult[0][j - 1]); // row 0 non-increasing
        if (i > 0) cap = std::min(cap, mult[0][1]);               // (0,1) carries the max
        // Row i must still be able to reach zero with the remaining cells.
        int tail = 0;
        for (int t = j + 1; t < vcount; ++t) tail += rem[t];
        for (int m = cap; m >= 0; --m) {
            if (rem[i] - m > tail) continue;
            mult[i][j] = mult[j][i] = m;
            rem[i] -= m;
            rem[j] -= m;
            self(self, i, j + 1);
            rem[i] += m;
            rem[j] += m;
            mult[i][j] = mult[j][i] = 0;
        }
    };
    fill(fill, 0, 1);
}

const std::vector<CanonicalDiagram>& all_classes(int k) {
    static std::mutex mu;
    static std::map<int, std::vector<CanonicalDiagram>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    // Candidates are deduplicated by the exact isomorphism test within cheap
    // invariant buckets; the canonical form is computed once per new class.
    std::map<std::vector<long long>, std::vector<Mult>> buckets;
    std::map<DiagramKey, CanonicalDiagram> classes;
    generate_candidates(2 * k, [&](const Mult& m) {
        auto& bucket = buckets[bucket_invariant(m)];
        for (const Mult& rep : bucket)
            if (isomorphic_mult(rep, m)) return;
        bucket.push_back(m);
        SignedClass sc = canonicalize(graph_from_mult(2 * k, m));
        classes.emplace(sc.key, CanonicalDiagram{sc.canonical, sc.key, sc.torsion_flag});
    });
    std::vector<CanonicalDiagram> out;
    out.reserve(classes.size());
    for (auto& [key, d] : classes) out.push_back(std::move(d));
    return cache.emplace(k, std::move(out)).first->second;
}

} // namespace

namespace detail {

void for_each_candidate(int vertex_count,
                        const std::function<void(const OrientedTrivalentGraph&)>& emit) {
    generate_candidates(vertex_count, [&](const Mult& m) {
        emit(graph_from_mult(vertex_count, m));
    });
}

} // namespace detail

std::vector<CanonicalDiagram> enumerate_diagrams(int k, bool connected_only, int degree_bound) {
    if (k < 0) throw invalid_input("enumerate_diagrams: negative degree");
    if (k > degree_bound)
        throw resource_limit("enumerate_diagrams: degree " + std::to_string(k) +
                             " exceeds bound " + std::to_string(degree_bound));
    const auto& all = all_classes(k);
    if (!connected_only || k == 0) return all;
    std::vector<CanonicalDiagram> out;
    for (const auto& d : all)
        if (component_count(d.graph) == 1) out.push_back(d);
    return out;
}

} // namespace clv
