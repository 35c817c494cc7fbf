#include "clv/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "clv/errors.hpp"

namespace clv {

namespace {

// Lexicographically least dihedral variant of a 3-element sequence.  Entries
// are distinct, so the minimum is unique; `reflected` reports whether it came
// from the reversed cyclic order.
std::array<std::int32_t, 3> dihedral_min(const std::array<int, 3>& t, bool& reflected) {
    std::array<std::int32_t, 3> best{};
    bool first = true;
    for (int r = 0; r < 3; ++r) {
        std::array<std::int32_t, 3> rot = {static_cast<std::int32_t>(t[r % 3]),
                                           static_cast<std::int32_t>(t[(r + 1) % 3]),
                                           static_cast<std::int32_t>(t[(r + 2) % 3])};
        std::array<std::int32_t, 3> rev = {static_cast<std::int32_t>(t[(r + 2) % 3]),
                                           static_cast<std::int32_t>(t[(r + 1) % 3]),
                                           static_cast<std::int32_t>(t[r % 3])};
        if (first || rot < best) { best = rot; reflected = false; first = false; }
        if (rev < best) { best = rev; reflected = true; }
    }
    return best;
}

struct Cell {
    int i, j;               // new labels, i <= j; i == j is a loop cell
    std::vector<int> orig;  // original edge indices between p[i] and p[j]
    int base;               // first new edge index of the cell
};

} // namespace

SignedClass canonicalize(const OrientedTrivalentGraph& g) {
    {
        auto viol = validate_graph(g);
        if (!viol.empty())
            throw invalid_input("canonicalize: invalid graph: " + viol.front());
    }

    const int V = g.vertex_count;
    const int E = g.edge_count();

    // Multiplicity matrix; diagonal counts loops (once per loop).
    std::vector<std::vector<int>> mult(V, std::vector<int>(V, 0));
    // Original edges per unordered vertex pair, for assignment enumeration.
    std::vector<std::vector<std::vector<int>>> between(V, std::vector<std::vector<int>>(V));
    for (int e = 0; e < E; ++e) {
        int u = g.incidence[2 * e], v = g.incidence[2 * e + 1];
        if (u > v) std::swap(u, v);
        mult[u][v]++;
        if (u != v) mult[v][u]++;
        between[u][v].push_back(e);
    }

    DiagramKey best;
    std::vector<std::int32_t> best_edge_part;
    bool seen_even = false, seen_odd = false;

    std::vector<std::int32_t> edge_part;
    edge_part.reserve(2 * E);
    DiagramKey key;
    key.reserve(2 + 2 * E + 3 * V);
    std::vector<int> f(2 * E); // old half-edge -> new half-edge

    std::vector<int> p(V);
    std::iota(p.begin(), p.end(), 0);

    // In a loopless graph the minimal edge list opens with (0,1) repeated
    // mult(p0,p1) times, so only maximal-multiplicity pairs can lead it.
    // Other prefixes are skipped wholesale: sorting the tail descending makes
    // next_permutation advance the first two slots.
    bool loopless = true;
    for (int v = 0; v < V; ++v) loopless = loopless && mult[v][v] == 0;
    int max_mult = 0;
    for (int u = 0; u < V; ++u)
        for (int v = u + 1; v < V; ++v) max_mult = std::max(max_mult, mult[u][v]);

    do {
        if (loopless && V >= 2 &&
            mult[std::min(p[0], p[1])][std::max(p[0], p[1])] != max_mult) {
            std::sort(p.begin() + 2, p.end(), std::greater<int>());
            continue;
        }
        // Edge part of the encoding under p (pairs in sorted order), compared
        // against the incumbent on the fly; most permutations lose within the
        // first few cells and are abandoned cheaply.
        edge_part.clear();
        int cmp = best.empty() ? -1 : 0; // -1 strictly smaller, 0 tied so far
        for (int i = 0; i < V && cmp <= 0; ++i) {
            int oi = p[i];
            for (int j = i; j < V; ++j) {
                int oj = p[j];
                int m = (i == j) ? mult[oi][oi] : mult[std::min(oi, oj)][std::max(oi, oj)];
                for (int c = 0; c < m; ++c) {
                    if (cmp == 0) {
                        std::size_t pos = edge_part.size();
                        std::int32_t bi = best_edge_part[pos], bj = best_edge_part[pos + 1];
                        if (i != bi || j != bj) cmp = std::pair(i, j) < std::pair(bi, bj) ? -1 : 1;
                    }
                    edge_part.push_back(i);
                    edge_part.push_back(j);
                }
                if (cmp > 0) break;
            }
        }
        if (cmp > 0) continue;

        // Group the original edges into cells in sorted-pair order.
        std::vector<Cell> cells;
        int next_edge = 0;
        for (int i = 0; i < V; ++i)
            for (int j = i; j < V; ++j) {
                int oi = std::min(p[i], p[j]), oj = std::max(p[i], p[j]);
                const auto& lst = between[oi][oj];
                if (lst.empty()) continue;
                cells.push_back(Cell{i, j, lst, next_edge});
                next_edge += static_cast<int>(lst.size());
            }

        // Enumerate edge-index assignments (orders within parallel classes,
        // orientations of loops) and keep the minimal full encoding.
        auto try_assignment = [&]() {
            key.clear();
            key.push_back(V);
            key.push_back(E);
            key.insert(key.end(), edge_part.begin(), edge_part.end());
            int parity = 0;
            for (int w = 0; w < V; ++w) {
                const auto& t = g.cyclic_order[p[w]];
                std::array<int, 3> seq = {f[t[0]], f[t[1]], f[t[2]]};
                bool refl = false;
                auto m = dihedral_min(seq, refl);
                parity ^= refl ? 1 : 0;
                key.insert(key.end(), m.begin(), m.end());
            }
            if (best.empty() || key < best) {
                best = key;
                best_edge_part.assign(edge_part.begin(), edge_part.end());
                seen_even = parity == 0;
                seen_odd = parity == 1;
            } else if (key == best) {
                (parity == 0 ? seen_even : seen_odd) = true;
            }
        };

        // Recursive branch over cells: permutations of each parallel class,
        // and for loop cells the two half-edge orientations per loop.
        auto assign_cell = [&](auto&& self, std::size_t ci) -> void {
            if (ci == cells.size()) {
                try_assignment();
                return;
            }
            Cell cell = cells[ci];
            std::sort(cell.orig.begin(), cell.orig.end());
            const bool loop_cell = cell.i == cell.j;
            do {
                const int s = static_cast<int>(cell.orig.size());
                const int masks = loop_cell ? (1 << s) : 1;
                for (int mask = 0; mask < masks; ++mask) {
                    for (int t = 0; t < s; ++t) {
                        int o = cell.orig[t];
                        int ne = cell.base + t;
                        if (loop_cell) {
                            bool swap_halves = (mask >> t) & 1;
                            f[2 * o] = 2 * ne + (swap_halves ? 1 : 0);
                            f[2 * o + 1] = 2 * ne + (swap_halves ? 0 : 1);
                        } else {
                            // Even half-edge at the smaller new endpoint.
                            int old_small = p[cell.i];
                            bool first_at_small = g.incidence[2 * o] == old_small;
                            f[2 * o] = 2 * ne + (first_at_small ? 0 : 1);
                            f[2 * o + 1] = 2 * ne + (first_at_small ? 1 : 0);
                        }
                    }
                    self(self, ci + 1);
                }
            } while (std::next_permutation(cell.orig.begin(), cell.orig.end()));
        };
        assign_cell(assign_cell, 0);
    } while (std::next_permutation(p.begin(), p.end()));

    SignedClass out;
    out.key = best;
    out.canonical = decode_key(best);
    out.torsion_flag = seen_even && seen_odd;
    out.sign = out.torsion_flag ? 1 : (seen_odd ? -1 : 1);
    return out;
}

OrientedTrivalentGraph decode_key(const DiagramKey& key) {
    if (key.size() < 2) throw invalid_input("decode_key: truncated encoding");
    OrientedTrivalentGraph g;
    g.vertex_count = key[0];
    const int E = key[1];
    if (static_cast<int>(key.size()) != 2 + 2 * E + 3 * g.vertex_count)
        throw invalid_input("decode_key: encoding length mismatch");
    g.incidence.resize(2 * E);
    for (int e = 0; e < E; ++e) {
        g.incidence[2 * e] = key[2 + 2 * e];
        g.incidence[2 * e + 1] = key[2 + 2 * e + 1];
    }
    g.cyclic_order.resize(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v)
        for (int s = 0; s < 3; ++s)
            g.cyclic_order[v][s] = key[2 + 2 * E + 3 * v + s];
    return g;
}

std::uint64_t key_hash(const DiagramKey& key) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::int32_t x : key) {
        auto u = static_cast<std::uint32_t>(x);
        for (int b = 0; b < 4; ++b) {
            h ^= (u >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

std::string key_hash_hex(const DiagramKey& key) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = key_hash(key);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

} // namespace clv
