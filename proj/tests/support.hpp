#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "clv/canonical.hpp"
#include "clv/clover.hpp"

/*
 * Shared fixtures and independent oracles.  The oracles deliberately avoid
 * the canonical-encoding machinery: isomorphism and automorphism checks run
 * over raw vertex permutations and edge bijections, and class counting runs
 * over exhaustive half-edge matchings.
 */
namespace support {

inline clv::OrientedTrivalentGraph theta_graph() {
    clv::OrientedTrivalentGraph g;
    g.vertex_count = 2;
    g.incidence = {0, 1, 0, 1, 0, 1};
    g.cyclic_order = {{{0, 2, 4}}, {{1, 3, 5}}};
    return g;
}

// Two theta blocks, one edge of each subdivided, joined at the subdivision
// points: 6 vertices, loopless, and edge 4 is the separating bridge.
inline clv::OrientedTrivalentGraph bridged_thetas() {
    clv::OrientedTrivalentGraph g;
    g.vertex_count = 6;
    g.incidence = {0, 1,  // e0
                   0, 1,  // e1
                   0, 2,  // e2
                   1, 2,  // e3
                   2, 5,  // e4: the bridge
                   3, 4,  // e5
                   3, 4,  // e6
                   3, 5,  // e7
                   4, 5}; // e8
    g.cyclic_order = {{{0, 2, 4}},  {{1, 3, 6}},   {{5, 7, 8}},
                      {{10, 12, 14}}, {{11, 13, 16}}, {{9, 15, 17}}};
    return g;
}

inline clv::CloverExpression y_clover() {
    clv::CloverExpression c;
    c.internal_count = 1;
    c.leaf_count = 3;
    c.incidence = {0, 1, 0, 2, 0, 3};
    c.cyclic_order = {{{0, 2, 4}}};
    c.twist.assign(3, 0);
    c.leaf_linking.assign(3, std::vector<long long>(3, 0));
    return c;
}

inline clv::CloverExpression theta_clover() {
    clv::CloverExpression c;
    c.internal_count = 2;
    c.incidence = {0, 1, 0, 1, 0, 1};
    c.cyclic_order = {{{0, 2, 4}}, {{1, 3, 5}}};
    c.twist.assign(3, 0);
    return c;
}

// Middle edge e0, leaves l0,l1 at vertex 0 and l2,l3 at vertex 1, with
// lk(l0,l2) = lk(l1,l3) = 1: the degree-2 benchmark clover.
inline clv::CloverExpression h_clover() {
    clv::CloverExpression c;
    c.internal_count = 2;
    c.leaf_count = 4;
    c.incidence = {0, 1, 0, c.leaf_node(0), 0, c.leaf_node(1),
                   1, c.leaf_node(2), 1, c.leaf_node(3)};
    c.cyclic_order = {{{0, 2, 4}}, {{1, 6, 8}}};
    c.twist.assign(5, 0);
    c.leaf_linking.assign(4, std::vector<long long>(4, 0));
    c.leaf_linking[0][2] = c.leaf_linking[2][0] = 1;
    c.leaf_linking[1][3] = c.leaf_linking[3][1] = 1;
    return c;
}

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

inline std::vector<std::vector<int>> multiplicity_matrix(const clv::OrientedTrivalentGraph& g) {
    std::vector<std::vector<int>> m(g.vertex_count, std::vector<int>(g.vertex_count, 0));
    for (int e = 0; e < g.edge_count(); ++e) {
        int u = g.incidence[2 * e], v = g.incidence[2 * e + 1];
        m[u][v]++;
        if (u != v) m[v][u]++;
    }
    return m;
}

// Unoriented multigraph isomorphism by exhaustive vertex permutation.
inline bool brute_force_isomorphic(const clv::OrientedTrivalentGraph& a,
                                   const clv::OrientedTrivalentGraph& b) {
    if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count()) return false;
    auto ma = multiplicity_matrix(a), mb = multiplicity_matrix(b);
    std::vector<int> p(a.vertex_count);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.vertex_count && ok; ++u)
            for (int v = u; v < a.vertex_count && ok; ++v)
                ok = ma[u][v] == mb[p[u]][p[v]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return a.vertex_count == 0;
}

/*
 * Exhaustive automorphism audit: every vertex permutation preserving the
 * multiplicity matrix, refined over every edge bijection (and both half-edge
 * identifications of each loop).  For each automorphism the per-vertex effect
 * on the cyclic order is a rotation or a reflection; the parity of the
 * reflection count is what AS sees.  Returns the automorphism count and the
 * set of parities realized.
 */
struct AutomorphismAudit {
    long long count = 0;
    bool even_parity = false;
    bool odd_parity = false;
};

inline AutomorphismAudit automorphism_audit(const clv::OrientedTrivalentGraph& g) {
    AutomorphismAudit audit;
    const int V = g.vertex_count;
    auto mult = multiplicity_matrix(g);

    // Edges grouped by unordered endpoint pair.
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (int e = 0; e < g.edge_count(); ++e) {
        int u = g.incidence[2 * e], v = g.incidence[2 * e + 1];
        classes[std::minmax(u, v)].push_back(e);
    }

    std::vector<int> p(V);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool graph_auto = true;
        for (int u = 0; u < V && graph_auto; ++u)
            for (int v = u; v < V && graph_auto; ++v)
                graph_auto = mult[u][v] == mult[p[u]][p[v]];
        if (!graph_auto) continue;

        // half-edge map for a fixed correspondence of parallel edges
        std::vector<int> hmap(g.half_edge_count(), -1);
        std::function<void(std::map<std::pair<int, int>, std::vector<int>>::iterator)> descend =
            [&](auto it) {
                if (it == classes.end()) {
                    int parity = 0;
                    for (int v = 0; v < V; ++v) {
                        const auto& t = g.cyclic_order[v];
                        std::array<int, 3> image = {hmap[t[0]], hmap[t[1]], hmap[t[2]]};
                        const auto& target = g.cyclic_order[p[v]];
                        bool rotation = false, reflection = false;
                        for (int r = 0; r < 3; ++r) {
                            if (image == std::array<int, 3>{target[r % 3], target[(r + 1) % 3],
                                                            target[(r + 2) % 3]})
                                rotation = true;
                            if (image == std::array<int, 3>{target[(r + 2) % 3], target[(r + 1) % 3],
                                                            target[r % 3]})
                                reflection = true;
                        }
                        if (!rotation && !reflection) return; // not orientation-compatible: impossible
                        if (reflection && !rotation) parity ^= 1;
                    }
                    ++audit.count;
                    (parity == 0 ? audit.even_parity : audit.odd_parity) = true;
                    return;
                }
                auto [pair, edges] = *it;
                auto next = std::next(it);
                std::pair<int, int> image_pair = std::minmax(p[pair.first], p[pair.second]);
                std::vector<int> targets = classes.at(image_pair);
                std::sort(targets.begin(), targets.end());
                do {
                    // loops admit two half-edge identifications each
                    int nloops = pair.first == pair.second ? static_cast<int>(edges.size()) : 0;
                    for (int mask = 0; mask < (1 << std::max(nloops, 0)); ++mask) {
                        for (std::size_t i = 0; i < edges.size(); ++i) {
                            int e = edges[i], f = targets[i];
                            bool swap_halves;
                            if (pair.first == pair.second) {
                                swap_halves = (mask >> i) & 1;
                            } else {
                                // the half of e at pair.first must land at p[pair.first]
                                int src_at_first = g.incidence[2 * e] == pair.first ? 2 * e : 2 * e + 1;
                                int dst_at_pfirst =
                                    g.incidence[2 * f] == p[pair.first] ? 2 * f : 2 * f + 1;
                                hmap[src_at_first] = dst_at_pfirst;
                                hmap[src_at_first ^ 1] = dst_at_pfirst ^ 1;
                                continue;
                            }
                            hmap[2 * e] = swap_halves ? 2 * f + 1 : 2 * f;
                            hmap[2 * e + 1] = swap_halves ? 2 * f : 2 * f + 1;
                        }
                        descend(next);
                        if (pair.first != pair.second) break; // no mask loop for non-loop classes
                    }
                } while (std::next_permutation(targets.begin(), targets.end()));
            };
        descend(classes.begin());
    } while (std::next_permutation(p.begin(), p.end()));
    return audit;
}

/*
 * Matching oracle: every fixed-point-free perfect matching of the 6k
 * half-edges of 2k predeclared vertices (vertex of half-edge h is h/3),
 * loopless ones only, bucketed by brute-force isomorphism.  Returns one
 * representative per class.
 */
inline std::vector<clv::OrientedTrivalentGraph> matching_classes(int k) {
    const int V = 2 * k, H = 6 * k;
    std::vector<clv::OrientedTrivalentGraph> reps;
    std::vector<int> partner(H, -1);

    std::function<void()> match = [&]() {
        int a = -1;
        for (int h = 0; h < H; ++h)
            if (partner[h] < 0) {
                a = h;
                break;
            }
        if (a < 0) {
            clv::OrientedTrivalentGraph g;
            g.vertex_count = V;
            for (int h = 0; h < H; ++h)
                if (partner[h] > h) {
                    g.incidence.push_back(h / 3);
                    g.incidence.push_back(partner[h] / 3);
                }
            g.cyclic_order.resize(V);
            std::vector<int> filled(V, 0);
            for (int hh = 0; hh < H; ++hh) {
                int v = g.incidence[hh];
                g.cyclic_order[v][filled[v]++] = hh;
            }
            for (const auto& r : reps)
                if (brute_force_isomorphic(r, g)) return;
            reps.push_back(std::move(g));
            return;
        }
        for (int b = a + 1; b < H; ++b) {
            if (partner[b] >= 0 || b / 3 == a / 3) continue; // loopless
            partner[a] = b;
            partner[b] = a;
            match();
            partner[a] = partner[b] = -1;
        }
    };
    if (k == 0) {
        reps.push_back(clv::OrientedTrivalentGraph{});
        return reps;
    }
    match();
    return reps;
}

/*
 * so(3) weight system: assign an index in {0,1,2} to every edge and value
 * each vertex by the Levi-Civita epsilon of its cyclic triple of edge
 * indices.  The total contraction is invariant under isomorphism, flips its
 * sign under AS (epsilon is totally antisymmetric), satisfies IHX (the
 * Jacobi identity of the cross product), and kills loops (repeated index).
 * It is an oracle for orientation-sign conventions that is completely
 * independent of the canonical-encoding machinery.
 */
inline long long so3_weight(const clv::OrientedTrivalentGraph& g) {
    const int E = g.edge_count();
    if (g.vertex_count == 0) return 1;
    std::vector<int> idx(E, 0);
    auto eps = [](int a, int b, int c) -> int {
        if (a == b || b == c || a == c) return 0;
        // parity of the permutation (a,b,c) of {0,1,2}
        return (b == (a + 1) % 3) ? 1 : -1;
    };
    long long total = 0;
    while (true) {
        long long term = 1;
        for (int v = 0; v < g.vertex_count && term != 0; ++v) {
            const auto& t = g.cyclic_order[v];
            term *= eps(idx[t[0] / 2], idx[t[1] / 2], idx[t[2] / 2]);
        }
        total += term;
        int p = 0;
        while (p < E && idx[p] == 2) idx[p++] = 0;
        if (p == E) break;
        ++idx[p];
    }
    return total;
}

// Uniformly random relabeling of vertices, edge indices, edge orientations,
// and cyclic rotations; the signed class is untouched.
inline clv::OrientedTrivalentGraph random_relabel(const clv::OrientedTrivalentGraph& g,
                                                  std::mt19937_64& rng) {
    const int V = g.vertex_count, E = g.edge_count();
    std::vector<int> vp(V), ep(E);
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(ep.begin(), ep.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(ep.begin(), ep.end(), rng);

    std::vector<int> hmap(2 * E);
    for (int e = 0; e < E; ++e) {
        bool flip = rng() & 1;
        hmap[2 * e] = 2 * ep[e] + (flip ? 1 : 0);
        hmap[2 * e + 1] = 2 * ep[e] + (flip ? 0 : 1);
    }
    clv::OrientedTrivalentGraph out;
    out.vertex_count = V;
    out.incidence.resize(2 * E);
    for (int h = 0; h < 2 * E; ++h) out.incidence[hmap[h]] = vp[g.incidence[h]];
    out.cyclic_order.resize(V);
    for (int v = 0; v < V; ++v) {
        int rot = static_cast<int>(rng() % 3);
        for (int s = 0; s < 3; ++s)
            out.cyclic_order[vp[v]][s] = hmap[g.cyclic_order[v][(s + rot) % 3]];
    }
    return out;
}

/*
 * Random clover: a random loopless pairing of some internal slots (the rest
 * become leaves), sparse leaf linkings in [-2,2], framings in {-1,0,1}, and
 * optional random twists.
 */
inline clv::CloverExpression random_clover(std::mt19937_64& rng, int degree,
                                           bool with_twists = true) {
    clv::CloverExpression c;
    c.internal_count = degree;
    std::vector<int> slots(3 * degree); // slot s belongs to vertex s/3
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);

    std::vector<std::pair<int, int>> internal_edges;
    std::vector<int> leaf_slots;
    for (std::size_t i = 0; i < slots.size();) {
        if (i + 1 < slots.size() && slots[i] / 3 != slots[i + 1] / 3 && rng() % 2 == 0) {
            internal_edges.emplace_back(slots[i], slots[i + 1]);
            i += 2;
        } else {
            leaf_slots.push_back(slots[i]);
            i += 1;
        }
    }
    c.leaf_count = static_cast<int>(leaf_slots.size());

    std::vector<std::array<int, 3>> triple(degree, {-1, -1, -1});
    auto place = [&](int slot, int half) { triple[slot / 3][slot % 3] = half; };
    for (const auto& [s1, s2] : internal_edges) {
        int e = c.edge_count();
        c.incidence.push_back(s1 / 3);
        c.incidence.push_back(s2 / 3);
        place(s1, 2 * e);
        place(s2, 2 * e + 1);
    }
    for (std::size_t l = 0; l < leaf_slots.size(); ++l) {
        int e = c.edge_count();
        c.incidence.push_back(leaf_slots[l] / 3);
        c.incidence.push_back(c.leaf_node(static_cast<int>(l)));
        place(leaf_slots[l], 2 * e);
    }
    c.cyclic_order = triple;
    c.twist.assign(c.edge_count(), 0);
    if (with_twists)
        for (int e = 0; e < c.edge_count(); ++e) c.twist[e] = rng() % 4 == 0 ? 1 : 0;

    c.leaf_linking.assign(c.leaf_count, std::vector<long long>(c.leaf_count, 0));
    for (int i = 0; i < c.leaf_count; ++i) {
        c.leaf_linking[i][i] = static_cast<long long>(rng() % 3) - 1;
        for (int j = i + 1; j < c.leaf_count; ++j) {
            long long v = rng() % 2 == 0 ? 0 : static_cast<long long>(rng() % 5) - 2;
            c.leaf_linking[i][j] = c.leaf_linking[j][i] = v;
        }
    }
    return c;
}

inline bool vectors_equal(const clv::DiagramVector& a, const clv::DiagramVector& b) {
    return a == b;
}

inline clv::DiagramVector scaled(const clv::DiagramVector& v, long s) {
    clv::DiagramVector out;
    clv::add_scaled(out, v, clv::Dyadic(s));
    return out;
}

} // namespace support
