#include "clv/clover.hpp"

#include <algorithm>
#include <functional>

#include "clv/errors.hpp"

namespace clv {

namespace {

std::vector<std::pair<int, int>> edge_pairs(const CloverExpression& c) {
    std::vector<std::pair<int, int>> out;
    out.reserve(c.edge_count());
    for (int e = 0; e < c.edge_count(); ++e)
        out.emplace_back(c.incidence[2 * e], c.incidence[2 * e + 1]);
    return out;
}

void replace_in_triple(std::array<int, 3>& t, int from, int to) {
    for (int& h : t)
        if (h == from) {
            h = to;
            return;
        }
    throw invalid_input("internal error: half-edge not present in cyclic triple");
}

} // namespace

int CloverExpression::leaf_half_edge(int leaf) const {
    int node = leaf_node(leaf);
    for (int h = 0; h < static_cast<int>(incidence.size()); ++h)
        if (incidence[h] == node) return h;
    throw invalid_input("leaf " + std::to_string(leaf) + " has no edge-end");
}

int CloverExpression::stem_vertex(int leaf) const {
    int other = incidence[leaf_half_edge(leaf) ^ 1];
    if (node_is_leaf(other))
        throw invalid_input("leaf " + std::to_string(leaf) + " is joined to another leaf");
    return other;
}

std::vector<std::string> validate_clover(const CloverExpression& c) {
    std::vector<std::string> out;
    if (c.internal_count < 0 || c.leaf_count < 0) {
        out.push_back("negative node count");
        return out;
    }
    if (c.incidence.size() % 2 != 0)
        out.push_back("odd number of half-edges");

    std::vector<std::vector<int>> at_node(c.node_count());
    for (int h = 0; h < static_cast<int>(c.incidence.size()); ++h) {
        int n = c.incidence[h];
        if (n < 0 || n >= c.node_count())
            out.push_back("half-edge " + std::to_string(h) + " incident to out-of-range node");
        else
            at_node[n].push_back(h);
    }
    if (static_cast<int>(c.cyclic_order.size()) != c.internal_count)
        out.push_back("cyclic_order must list one triple per internal vertex");
    for (int v = 0; v < c.internal_count && v < static_cast<int>(at_node.size()); ++v) {
        if (at_node[v].size() != 3) {
            out.push_back("valence violation at internal vertex " + std::to_string(v));
            continue;
        }
        if (v >= static_cast<int>(c.cyclic_order.size())) continue;
        std::array<int, 3> t = c.cyclic_order[v];
        std::sort(t.begin(), t.end());
        std::vector<int> expect = at_node[v];
        std::sort(expect.begin(), expect.end());
        if (t[0] == t[1] || t[1] == t[2] ||
            !std::equal(t.begin(), t.end(), expect.begin(), expect.end()))
            out.push_back("order/incidence mismatch at internal vertex " + std::to_string(v));
    }
    for (int l = 0; l < c.leaf_count; ++l)
        if (at_node[c.leaf_node(l)].size() != 1)
            out.push_back("leaf " + std::to_string(l) + " must hold exactly one edge-end");

    if (static_cast<int>(c.twist.size()) != c.edge_count())
        out.push_back("twist list must have one parity per edge");
    for (std::size_t e = 0; e < c.twist.size(); ++e)
        if (c.twist[e] != 0 && c.twist[e] != 1)
            out.push_back("twist of edge " + std::to_string(e) + " must be 0 or 1");

    if (static_cast<int>(c.leaf_linking.size()) != c.leaf_count)
        out.push_back("leaf_linking must be a leaf x leaf matrix");
    else
        for (int i = 0; i < c.leaf_count; ++i) {
            if (static_cast<int>(c.leaf_linking[i].size()) != c.leaf_count) {
                out.push_back("leaf_linking row " + std::to_string(i) + " has wrong length");
                continue;
            }
            for (int j = 0; j < i; ++j)
                if (c.leaf_linking[i][j] != c.leaf_linking[j][i])
                    out.push_back("leaf_linking asymmetry at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
        }

    // Every component needs an internal vertex (degree >= 1).
    if (out.empty()) {
        auto pairs = edge_pairs(c);
        std::vector<int> comp(c.node_count(), -1);
        int ncomp = 0;
        for (int start = 0; start < c.node_count(); ++start) {
            if (comp[start] >= 0) continue;
            std::vector<int> stack{start};
            comp[start] = ncomp;
            while (!stack.empty()) {
                int n = stack.back();
                stack.pop_back();
                for (const auto& [a, b] : pairs) {
                    int other = a == n ? b : b == n ? a : -1;
                    if (other >= 0 && comp[other] < 0) {
                        comp[other] = ncomp;
                        stack.push_back(other);
                    }
                }
            }
            ++ncomp;
        }
        std::vector<bool> has_internal(ncomp, false);
        for (int v = 0; v < c.internal_count; ++v) has_internal[comp[v]] = true;
        for (int k = 0; k < ncomp; ++k)
            if (!has_internal[k]) {
                out.push_back("degree-0 component (no internal vertex)");
                break;
            }
    }
    return out;
}

int degree(const CloverExpression& c) { return c.internal_count; }

int component_count(const CloverExpression& c) {
    return component_count(c.node_count(), edge_pairs(c));
}

bool edge_is_separating(const CloverExpression& c, int e) {
    return edge_is_separating(c.node_count(), edge_pairs(c), e);
}

std::pair<CloverExpression, int> cut_edge(const CloverExpression& c, int e) {
    if (e < 0 || e >= c.edge_count())
        throw invalid_input("cut_edge: edge " + std::to_string(e) + " out of range");
    int u = c.incidence[2 * e], v = c.incidence[2 * e + 1];
    if (c.node_is_leaf(u) || c.node_is_leaf(v))
        throw invalid_input("cut_edge: edge " + std::to_string(e) + " is incident to a leaf");
    if (c.twist[e] != 0)
        throw invalid_input("cut_edge: edge " + std::to_string(e) +
                            " is twisted; push the half twist off first");

    int sign = edge_is_separating(c, e) ? -1 : 1;

    CloverExpression out = c;
    out.leaf_count += 2;
    const int l1 = out.leaf_count - 2, l2 = out.leaf_count - 1;
    // Leaf node ids sit above the internal block, so existing ids are stable.
    const int n1 = out.leaf_node(l1), n2 = out.leaf_node(l2);

    // Edge e keeps its slot at u and now ends at the first new leaf; a fresh
    // edge E takes over the slot at v and ends at the second.
    const int E = out.edge_count();
    out.incidence[2 * e + 1] = n1;
    out.incidence.push_back(v);
    out.incidence.push_back(n2);
    out.twist.push_back(0);
    replace_in_triple(out.cyclic_order[v], 2 * e + 1, 2 * E);

    for (auto& row : out.leaf_linking) row.insert(row.end(), {0, 0});
    out.leaf_linking.emplace_back(out.leaf_count, 0);
    out.leaf_linking.emplace_back(out.leaf_count, 0);
    out.leaf_linking[l1][l2] = out.leaf_linking[l2][l1] = 1;
    return {std::move(out), sign};
}

std::pair<CloverExpression, int> glue_leaves(const CloverExpression& c, int l1, int l2) {
    if (l1 < 0 || l1 >= c.leaf_count || l2 < 0 || l2 >= c.leaf_count || l1 == l2)
        throw invalid_input("glue_leaves: bad leaf pair");
    long long lk = c.leaf_linking[l1][l2];
    if (lk != 1 && lk != -1)
        throw invalid_input("glue_leaves: leaves are not a Hopf pair (lk must be +-1)");
    for (int l : {l1, l2}) {
        if (c.leaf_linking[l][l] != 0)
            throw invalid_input("glue_leaves: leaf " + std::to_string(l) +
                                " of a Hopf pair must be 0-framed");
        for (int m = 0; m < c.leaf_count; ++m)
            if (m != l1 && m != l2 && c.leaf_linking[l][m] != 0)
                throw invalid_input("glue_leaves: leaf " + std::to_string(l) +
                                    " of a Hopf pair must not link other leaves");
    }

    const int h1 = c.leaf_half_edge(l1), h2 = c.leaf_half_edge(l2);
    const int e1 = h1 / 2, e2 = h2 / 2;
    if (c.twist[e1] != 0 || c.twist[e2] != 0)
        throw invalid_input("glue_leaves: Hopf-pair stems must be untwisted");
    const int v2 = c.stem_vertex(l2);

    // Components of the two leaves before fusing.
    auto pairs = edge_pairs(c);
    const int before = component_count(c.node_count(), pairs);
    {
        auto joined = pairs;
        joined.emplace_back(c.leaf_node(l1), c.leaf_node(l2));
        int after = component_count(c.node_count(), joined);
        // after < before exactly when the leaves lay in different components
        int sign = (after < before ? -1 : 1) * static_cast<int>(lk);

        CloverExpression out = c;
        // Stem e1 swallows stem e2: its leaf half moves to v2's slot.
        out.incidence[h1] = v2;
        replace_in_triple(out.cyclic_order[v2], h2 ^ 1, h1);

        // Drop edge e2 and the two leaf nodes, compacting indices.
        CloverExpression rebuilt;
        rebuilt.internal_count = out.internal_count;
        rebuilt.leaf_count = out.leaf_count - 2;
        std::vector<int> leaf_map(out.leaf_count, -1);
        for (int l = 0, next = 0; l < out.leaf_count; ++l)
            if (l != l1 && l != l2) leaf_map[l] = next++;
        std::vector<int> half_map(out.incidence.size(), -1);
        for (int e = 0, ne = 0; e < out.edge_count(); ++e) {
            if (e == e2) continue;
            half_map[2 * e] = 2 * ne;
            half_map[2 * e + 1] = 2 * ne + 1;
            for (int s = 0; s < 2; ++s) {
                int n = out.incidence[2 * e + s];
                if (out.node_is_leaf(n)) n = rebuilt.internal_count + leaf_map[n - out.internal_count];
                rebuilt.incidence.push_back(n);
            }
            rebuilt.twist.push_back(out.twist[e]);
            ++ne;
        }
        rebuilt.cyclic_order = out.cyclic_order;
        for (auto& t : rebuilt.cyclic_order)
            for (int& h : t) h = half_map[h];
        rebuilt.leaf_linking.assign(rebuilt.leaf_count,
                                    std::vector<long long>(rebuilt.leaf_count, 0));
        for (int i = 0; i < out.leaf_count; ++i)
            for (int j = 0; j < out.leaf_count; ++j)
                if (leaf_map[i] >= 0 && leaf_map[j] >= 0)
                    rebuilt.leaf_linking[leaf_map[i]][leaf_map[j]] = out.leaf_linking[i][j];
        return {std::move(rebuilt), sign};
    }
}

std::pair<CloverExpression, CloverExpression> split_leaf(
    const CloverExpression& c, int l,
    const std::vector<long long>& row1, long long frame1,
    const std::vector<long long>& row2, long long frame2, long long mutual) {
    if (l < 0 || l >= c.leaf_count) throw invalid_input("split_leaf: leaf out of range");
    if (static_cast<int>(row1.size()) != c.leaf_count ||
        static_cast<int>(row2.size()) != c.leaf_count)
        throw invalid_input("split_leaf: rows must span the leaf set");
    for (int m = 0; m < c.leaf_count; ++m) {
        long long want = m == l ? 0 : c.leaf_linking[l][m];
        if (row1[m] + row2[m] != want)
            throw invalid_input("split_leaf: rows do not sum to the original row");
    }
    if (frame1 + frame2 + 2 * mutual != c.leaf_linking[l][l])
        throw invalid_input("split_leaf: framing split must satisfy f = f' + f'' + 2*lk(l',l'')");

    auto daughter = [&](const std::vector<long long>& row, long long frame) {
        CloverExpression out = c;
        for (int m = 0; m < c.leaf_count; ++m) {
            long long x = m == l ? frame : row[m];
            out.leaf_linking[l][m] = x;
            out.leaf_linking[m][l] = x;
        }
        return out;
    };
    return {daughter(row1, frame1), daughter(row2, frame2)};
}

CloverExpression twist_edge(const CloverExpression& c, int e, long long half_twists) {
    if (e < 0 || e >= c.edge_count())
        throw invalid_input("twist_edge: edge " + std::to_string(e) + " out of range");
    CloverExpression out = c;
    out.twist[e] = (out.twist[e] + (half_twists % 2 + 2)) % 2;
    return out;
}

std::array<CloverExpression, 3> ihx_triple(const CloverExpression& c, int e) {
    if (e < 0 || e >= c.edge_count())
        throw invalid_input("ihx_triple: edge " + std::to_string(e) + " out of range");
    const int hu = 2 * e, hv = 2 * e + 1;
    const int u = c.incidence[hu], v = c.incidence[hv];
    if (c.node_is_leaf(u) || c.node_is_leaf(v))
        throw invalid_input("ihx_triple: edge must join two internal vertices");
    if (u == v) throw invalid_input("ihx_triple: edge is a loop");

    auto outer = [&](int vertex, int anchor) -> std::array<int, 2> {
        const auto& t = c.cyclic_order[vertex];
        for (int i = 0; i < 3; ++i)
            if (t[i] == anchor) return {t[(i + 1) % 3], t[(i + 2) % 3]};
        throw invalid_input("ihx_triple: inconsistent cyclic order");
    };
    auto [a, b] = outer(u, hu);
    auto [cc, d] = outer(v, hv);

    auto rewire = [&](int p, int q, int r, int s) {
        CloverExpression out = c;
        for (int h : {p, q}) out.incidence[h] = u;
        for (int h : {r, s}) out.incidence[h] = v;
        out.cyclic_order[u] = {hu, p, q};
        out.cyclic_order[v] = {hv, r, s};
        return out;
    };
    return {c, rewire(a, cc, b, d), rewire(b, cc, a, d)};
}

DiagramVector reduce(const CloverExpression& c) {
    {
        auto viol = validate_clover(c);
        if (!viol.empty()) throw invalid_input("reduce: invalid clover: " + viol.front());
    }

    // A trivial leaf (zero row, zero framing) kills its component's bracket.
    for (int l = 0; l < c.leaf_count; ++l) {
        bool all_zero = true;
        for (int m = 0; m < c.leaf_count && all_zero; ++m)
            all_zero = c.leaf_linking[l][m] == 0;
        if (all_zero) return {};
    }
    if (c.leaf_count % 2 != 0) return {};

    int twist_parity = 0;
    for (int t : c.twist) twist_parity ^= t;
    const int comps_before = component_count(c);

    // Stems: half-edge of each leaf's edge at its internal vertex.
    std::vector<int> stem_half(c.leaf_count);
    for (int l = 0; l < c.leaf_count; ++l) stem_half[l] = c.leaf_half_edge(l) ^ 1;

    DiagramVector acc;
    std::vector<int> partner(c.leaf_count, -1);
    std::vector<std::pair<int, int>> matching;

    std::function<void(Int)> expand = [&](Int weight) {
        int a = -1;
        for (int l = 0; l < c.leaf_count; ++l)
            if (partner[l] < 0) {
                a = l;
                break;
            }
        if (a < 0) {
            // Complete matching: glue every pair into a trivalent graph.
            OrientedTrivalentGraph glued;
            glued.vertex_count = c.internal_count;
            std::vector<int> half_map(c.incidence.size(), -1);
            for (int e = 0; e < c.edge_count(); ++e) {
                int x = c.incidence[2 * e], y = c.incidence[2 * e + 1];
                if (c.node_is_leaf(x) || c.node_is_leaf(y)) continue;
                half_map[2 * e] = glued.half_edge_count();
                glued.incidence.push_back(x);
                half_map[2 * e + 1] = glued.half_edge_count();
                glued.incidence.push_back(y);
            }
            for (const auto& [l, m] : matching) {
                half_map[stem_half[l]] = glued.half_edge_count();
                glued.incidence.push_back(c.incidence[stem_half[l]]);
                half_map[stem_half[m]] = glued.half_edge_count();
                glued.incidence.push_back(c.incidence[stem_half[m]]);
            }
            glued.cyclic_order.resize(c.internal_count);
            for (int v = 0; v < c.internal_count; ++v)
                for (int s = 0; s < 3; ++s)
                    glued.cyclic_order[v][s] = half_map[c.cyclic_order[v][s]];

            if (glued.has_loop()) return; // zero over Z[1/2]
            int comps_after = component_count(glued);
            SignedClass sc = canonicalize(glued);
            if (sc.torsion_flag) return; // 2-torsion class
            int sign = sc.sign;
            if (((comps_before - comps_after) & 1) != 0) sign = -sign;
            if (twist_parity) sign = -sign;
            acc[sc.key] += Dyadic(weight * sign);
            return;
        }
        for (int b = a + 1; b < c.leaf_count; ++b) {
            if (partner[b] >= 0 || c.leaf_linking[a][b] == 0) continue;
            partner[a] = b;
            partner[b] = a;
            matching.emplace_back(a, b);
            expand(weight * Int(static_cast<long>(c.leaf_linking[a][b])));
            matching.pop_back();
            partner[a] = partner[b] = -1;
        }
    };
    expand(Int(1));
    prune(acc);
    return acc;
}

} // namespace clv
