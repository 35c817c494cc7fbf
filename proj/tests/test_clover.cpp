#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clv/clover.hpp"
#include "clv/errors.hpp"
#include "support.hpp"

using namespace clv;

namespace {

// Hand-expansion oracle for the H benchmark: one leaf matching survives,
// both gluings stay inside one component, no twists, and the glued theta
// carries the aligned orientations, so the class is exactly +theta.
DiagramVector expected_h_reduction(long multiplicity) {
    DiagramVector v;
    v[canonicalize(support::theta_graph()).key] = Dyadic(multiplicity);
    return v;
}

} // namespace

TEST_CASE("validate_clover: fixtures and violations") {
    CHECK(validate_clover(support::y_clover()).empty());
    CHECK(validate_clover(support::theta_clover()).empty());
    CHECK(validate_clover(support::h_clover()).empty());
    CHECK(validate_clover(CloverExpression{}).empty()); // the empty clover

    // isolated leaf pair = degree-0 component
    CloverExpression bad;
    bad.internal_count = 1;
    bad.leaf_count = 5;
    bad.incidence = {0, 1, 0, 2, 0, 3, 4, 5};
    bad.cyclic_order = {{{0, 2, 4}}};
    bad.twist.assign(4, 0);
    bad.leaf_linking.assign(5, std::vector<long long>(5, 0));
    auto v = validate_clover(bad);
    bool found = false;
    for (const auto& msg : v) found |= msg.find("degree-0 component") != std::string::npos;
    CHECK(found);

    // asymmetric linking matrix
    auto asym = support::h_clover();
    asym.leaf_linking[0][2] = 2; // [2][0] still 1
    v = validate_clover(asym);
    found = false;
    for (const auto& msg : v) found |= msg.find("asymmetry") != std::string::npos;
    CHECK(found);
}

TEST_CASE("degree counts internal vertices and adds over unions") {
    CHECK(degree(support::y_clover()) == 1);
    CHECK(degree(support::h_clover()) == 2);

    // disjoint union of Y and theta
    CloverExpression u;
    u.internal_count = 3;
    u.leaf_count = 3;
    u.incidence = {0, 1, 0, 1, 0, 1, 2, 3, 2, 4, 2, 5};
    u.cyclic_order = {{{0, 2, 4}}, {{1, 3, 5}}, {{6, 8, 10}}};
    u.twist.assign(6, 0);
    u.leaf_linking.assign(3, std::vector<long long>(3, 0));
    REQUIRE(validate_clover(u).empty());
    CHECK(degree(u) == 3);
    CHECK(component_count(u) == 2);
}

TEST_CASE("cut_edge: theta edges never separate, H middle edge does") {
    auto theta = support::theta_clover();
    for (int e = 0; e < 3; ++e) {
        auto [cut, sign] = cut_edge(theta, e);
        CHECK(sign == 1);
        CHECK(cut.leaf_count == 2);
        CHECK(cut.leaf_linking[0][1] == 1);
        CHECK(degree(cut) == 2);
        REQUIRE(validate_clover(cut).empty());
    }
    auto h = support::h_clover();
    auto [cut, sign] = cut_edge(h, 0);
    CHECK(sign == -1); // two Y pieces joined only by the middle edge
    CHECK(component_count(cut) == 2);

    CHECK_THROWS_AS(cut_edge(h, 1), invalid_input); // stem edge
    auto twisted = twist_edge(theta, 0, 1);
    CHECK_THROWS_AS(cut_edge(twisted, 0), invalid_input);
}

TEST_CASE("glue_leaves: Hopf pair checks and the separating sign read in reverse") {
    auto h = support::h_clover();
    CHECK_THROWS_AS(glue_leaves(h, 0, 1), invalid_input); // lk = 0, not a Hopf pair

    // two disjoint Ys with one unit linking between a leaf of each
    CloverExpression yy;
    yy.internal_count = 2;
    yy.leaf_count = 6;
    yy.incidence = {0, 2, 0, 3, 0, 4, 1, 5, 1, 6, 1, 7};
    yy.cyclic_order = {{{0, 2, 4}}, {{6, 8, 10}}};
    yy.twist.assign(6, 0);
    yy.leaf_linking.assign(6, std::vector<long long>(6, 0));
    yy.leaf_linking[0][3] = yy.leaf_linking[3][0] = 1;
    REQUIRE(validate_clover(yy).empty());
    auto [glued, sign] = glue_leaves(yy, 0, 3);
    CHECK(sign == -1);
    CHECK(component_count(glued) == 1);
    CHECK(glued.leaf_count == 4);
    CHECK(degree(glued) == 2);
    REQUIRE(validate_clover(glued).empty());
}

TEST_CASE("cut then glue restores the clover exactly with sign product +1") {
    std::mt19937_64 rng(31337);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 50; ++trial) {
        auto c = support::random_clover(rng, 1 + static_cast<int>(rng() % 4));
        if (!validate_clover(c).empty()) continue;
        for (int e = 0; e < c.edge_count(); ++e) {
            if (c.twist[e] != 0) continue;
            int u = c.incidence[2 * e], v = c.incidence[2 * e + 1];
            if (c.node_is_leaf(u) || c.node_is_leaf(v)) continue;
            auto [cut, s1] = cut_edge(c, e);
            auto [back, s2] = glue_leaves(cut, cut.leaf_count - 2, cut.leaf_count - 1);
            CHECK(back == c);
            CHECK(s1 * s2 == 1);
            ++tested;
        }
    }
    CHECK(tested >= 50);
}

TEST_CASE("reduce: Y-graph vanishes (odd leaf count)") {
    auto v = reduce(support::y_clover());
    CHECK(v.empty());
}

TEST_CASE("reduce: H benchmark gives +theta; doubling one linking doubles it") {
    CHECK(reduce(support::h_clover()) == expected_h_reduction(1));
    auto h2 = support::h_clover();
    h2.leaf_linking[0][2] = h2.leaf_linking[2][0] = 2;
    CHECK(reduce(h2) == expected_h_reduction(2));
}

TEST_CASE("reduce: leafless clovers map to their own diagram class") {
    auto theta = support::theta_clover();
    CHECK(reduce(theta) == expected_h_reduction(1));
}

TEST_CASE("reduce: trivial leaf, looped edge, and special leaf all vanish") {
    auto h = support::h_clover();
    h.leaf_linking[1][3] = h.leaf_linking[3][1] = 0; // leaf 1 now has a zero row
    CHECK(reduce(h).empty());

    // looped untwisted edge: glue two leaves of one Y vertex
    CloverExpression loop;
    loop.internal_count = 2;
    loop.leaf_count = 2;
    loop.incidence = {0, 0, 0, 1, 1, 2, 1, 3};
    loop.cyclic_order = {{{0, 1, 2}}, {{3, 4, 6}}};
    loop.twist.assign(4, 0);
    loop.leaf_linking.assign(2, std::vector<long long>(2, 0));
    loop.leaf_linking[0][1] = loop.leaf_linking[1][0] = 1;
    REQUIRE(validate_clover(loop).empty());
    CHECK(reduce(loop).empty());

    // special leaf: framing +-1, zero row; the only matching weight is zero
    auto special = support::h_clover();
    special.leaf_linking[0][2] = special.leaf_linking[2][0] = 0;
    special.leaf_linking[0][0] = 1;
    CHECK(reduce(special).empty());
}

TEST_CASE("reduce: cut/glue consistency across the random corpus") {
    std::mt19937_64 rng(55);
    int tested = 0;
    for (int trial = 0; trial < 400 && tested < 50; ++trial) {
        auto c = support::random_clover(rng, 1 + static_cast<int>(rng() % 3));
        if (!validate_clover(c).empty()) continue;
        auto base = reduce(c);
        for (int e = 0; e < c.edge_count(); ++e) {
            if (c.twist[e] != 0) continue;
            int u = c.incidence[2 * e], v = c.incidence[2 * e + 1];
            if (c.node_is_leaf(u) || c.node_is_leaf(v)) continue;
            auto [cut, sign] = cut_edge(c, e);
            CHECK(reduce(cut) == support::scaled(base, sign));
            ++tested;
        }
    }
    CHECK(tested >= 50);
}

TEST_CASE("twist_edge: parity arithmetic and reduce signs") {
    auto theta = support::theta_clover();
    CHECK(twist_edge(theta, 0, 2) == theta);
    CHECK(twist_edge(theta, 0, -1) == twist_edge(theta, 0, 1));
    auto base = reduce(theta);
    CHECK(reduce(twist_edge(theta, 0, 1)) == support::scaled(base, -1));
    CHECK(reduce(twist_edge(theta, 0, 2)) == base);
    CHECK(reduce(twist_edge(twist_edge(theta, 0, 1), 1, 1)) == base);
}

TEST_CASE("split_leaf: integer splits, additivity, special-leaf split") {
    auto h = support::h_clover();
    auto row = [&](std::initializer_list<long long> v) { return std::vector<long long>(v); };

    // split leaf 0 (row: lk to leaf 2 = 1) into 1 = 1 + 0
    auto [a, b] = split_leaf(h, 0, row({0, 0, 1, 0}), 0, row({0, 0, 0, 0}), 0, 0);
    DiagramVector sum = reduce(a);
    add_scaled(sum, reduce(b), Dyadic(1));
    CHECK(sum == reduce(h));

    // framing 0 = (+1) + (-1) with mutual linking 0: both halves are special
    auto trivial = support::y_clover();
    auto [s1, s2] = split_leaf(trivial, 0, row({0, 0, 0}), 1, row({0, 0, 0}), -1, 0);
    CHECK(reduce(s1).empty());
    CHECK(reduce(s2).empty());

    CHECK_THROWS_AS(split_leaf(h, 0, row({0, 0, 1, 0}), 0, row({0, 0, 1, 0}), 0, 0),
                    invalid_input); // rows do not sum
    CHECK_THROWS_AS(split_leaf(h, 0, row({0, 0, 1, 0}), 1, row({0, 0, 0, 0}), 0, 0),
                    invalid_input); // framing split violates f = f' + f'' + 2x
}

TEST_CASE("reduce is additive under random splits (multilinearity)") {
    std::mt19937_64 rng(777);
    int tested = 0;
    for (int trial = 0; trial < 300 && tested < 20; ++trial) {
        auto c = support::random_clover(rng, 2 + 2 * static_cast<int>(rng() % 2), false);
        if (!validate_clover(c).empty() || c.leaf_count == 0) continue;
        int l = static_cast<int>(rng() % c.leaf_count);
        std::vector<long long> r1(c.leaf_count, 0), r2(c.leaf_count, 0);
        for (int m = 0; m < c.leaf_count; ++m) {
            if (m == l) continue;
            long long split = static_cast<long long>(rng() % 5) - 2;
            r1[m] = split;
            r2[m] = c.leaf_linking[l][m] - split;
        }
        long long x = static_cast<long long>(rng() % 3) - 1;
        long long f1 = static_cast<long long>(rng() % 3) - 1;
        long long f2 = c.leaf_linking[l][l] - f1 - 2 * x;
        auto [a, b] = split_leaf(c, l, r1, f1, r2, f2, x);
        DiagramVector sum = reduce(a);
        add_scaled(sum, reduce(b), Dyadic(1));
        CHECK(sum == reduce(c));
        ++tested;
    }
    CHECK(tested >= 20);
}

TEST_CASE("reduce: odd degree always vanishes, grading always matches") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 60; ++trial) {
        auto c = support::random_clover(rng, 1 + static_cast<int>(rng() % 4));
        if (!validate_clover(c).empty()) continue;
        auto v = reduce(c);
        if (degree(c) % 2 == 1) CHECK(v.empty());
        for (const auto& [key, coeff] : v) {
            CHECK(key[0] == degree(c));
            CHECK_FALSE(coeff.is_zero());
        }
    }
}

TEST_CASE("reduce: reversing one internal vertex negates the class") {
    std::mt19937_64 rng(4040);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 25; ++trial) {
        auto c = support::random_clover(rng, 2 + 2 * static_cast<int>(rng() % 2));
        if (!validate_clover(c).empty()) continue;
        auto base = reduce(c);
        int v = static_cast<int>(rng() % c.internal_count);
        auto flipped = c;
        std::swap(flipped.cyclic_order[v][0], flipped.cyclic_order[v][2]);
        CHECK(reduce(flipped) == support::scaled(base, -1));
        ++tested;
    }
    CHECK(tested >= 25);
}

TEST_CASE("ihx_triple: clover-level relation holds in the quotient") {
    std::mt19937_64 rng(606);
    int tested = 0;
    for (int trial = 0; trial < 500 && tested < 10; ++trial) {
        int deg = 2 + 2 * static_cast<int>(rng() % 2);
        auto c = support::random_clover(rng, deg);
        if (!validate_clover(c).empty()) continue;
        int candidate = -1;
        for (int e = 0; e < c.edge_count(); ++e) {
            int u = c.incidence[2 * e], v = c.incidence[2 * e + 1];
            if (!c.node_is_leaf(u) && !c.node_is_leaf(v) && u != v) {
                candidate = e;
                break;
            }
        }
        if (candidate < 0) continue;
        auto [gi, gh, gx] = ihx_triple(c, candidate);
        DiagramVector alt = reduce(gi);
        add_scaled(alt, reduce(gh), Dyadic(-1));
        add_scaled(alt, reduce(gx), Dyadic(1));
        for (const Dyadic& x : reduce_to_basis(alt, deg / 2)) CHECK(x.is_zero());
        ++tested;
    }
    CHECK(tested >= 10);
}

namespace {

/*
 * Independent reduction oracle assembled from the public operations alone:
 * split any leaf with two or more unit linkings until every leaf carries at
 * most one, discard clovers with an unmatched leaf (trivial or special), and
 * glue the resulting Hopf pairing one pair at a time, collecting the gluing
 * signs.  The leafless remainder contributes its own canonical class with
 * the twist parity sign.  Requires all off-diagonal entries in {-1,0,1}.
 */
DiagramVector oracle_reduce(const CloverExpression& c) {
    // split at the first leaf with at least two nonzero linkings
    for (int l = 0; l < c.leaf_count; ++l) {
        std::vector<int> partners;
        for (int m = 0; m < c.leaf_count; ++m)
            if (m != l && c.leaf_linking[l][m] != 0) partners.push_back(m);
        if (partners.size() < 2) continue;
        std::vector<long long> r1(c.leaf_count, 0), r2(c.leaf_count, 0);
        r1[partners[0]] = c.leaf_linking[l][partners[0]];
        for (std::size_t t = 1; t < partners.size(); ++t)
            r2[partners[t]] = c.leaf_linking[l][partners[t]];
        auto [a, b] = split_leaf(c, l, r1, 0, r2, c.leaf_linking[l][l], 0);
        DiagramVector out = oracle_reduce(a);
        add_scaled(out, oracle_reduce(b), Dyadic(1));
        return out;
    }
    // base case: at most one partner per leaf
    std::vector<int> partner(c.leaf_count, -1);
    for (int l = 0; l < c.leaf_count; ++l)
        for (int m = 0; m < c.leaf_count; ++m)
            if (m != l && c.leaf_linking[l][m] != 0) partner[l] = m;
    for (int l = 0; l < c.leaf_count; ++l)
        if (partner[l] < 0) return {}; // trivial or special leaf
    CloverExpression cur = c;
    // zero the framings: a framed leaf of a Hopf pair splits into the pair
    // leaf plus a special leaf, and the special half vanishes
    for (int l = 0; l < cur.leaf_count; ++l) {
        if (cur.leaf_linking[l][l] == 0) continue;
        std::vector<long long> keep(cur.leaf_count, 0), rest(cur.leaf_count, 0);
        keep[partner[l]] = cur.leaf_linking[l][partner[l]];
        auto [a, b] = split_leaf(cur, l, keep, 0, rest, cur.leaf_linking[l][l], 0);
        cur = a; // oracle_reduce(b) = 0: its leaf l has an empty row
    }
    int sign = 1;
    std::vector<int> where(cur.leaf_count);
    std::iota(where.begin(), where.end(), 0);
    for (int l = 0; l < c.leaf_count; ++l) {
        if (partner[l] < l) continue; // already glued
        const int wa = where[l], wb = where[partner[l]];
        auto [next, s] = glue_leaves(cur, wa, wb);
        sign *= s;
        for (int t = 0; t < c.leaf_count; ++t) where[t] -= (where[t] > wa) + (where[t] > wb);
        cur = std::move(next);
    }
    // leafless: its class is its own internal graph up to twists and AS
    DiagramVector out = reduce(cur);
    return support::scaled(out, sign);
}

} // namespace

TEST_CASE("reduce agrees with the split-and-glue oracle on unit matrices") {
    std::mt19937_64 rng(24680);
    int tested = 0;
    for (int trial = 0; trial < 400 && tested < 30; ++trial) {
        auto c = support::random_clover(rng, 1 + static_cast<int>(rng() % 4));
        if (!validate_clover(c).empty()) continue;
        // glue_leaves wants untwisted stems; internal twists stay
        for (int e = 0; e < c.edge_count(); ++e)
            if (c.node_is_leaf(c.incidence[2 * e]) || c.node_is_leaf(c.incidence[2 * e + 1]))
                c.twist[e] = 0;
        // unit entries, at most two partners per leaf (the oracle's split
        // recursion branches once per kept partner)
        for (int i = 0; i < c.leaf_count; ++i)
            for (int j = i + 1; j < c.leaf_count; ++j) {
                long long v = std::clamp<long long>(c.leaf_linking[i][j], -1, 1);
                c.leaf_linking[i][j] = c.leaf_linking[j][i] = v;
            }
        for (int i = 0; i < c.leaf_count; ++i) {
            int partners = 0;
            for (int j = 0; j < c.leaf_count; ++j) {
                if (j == i || c.leaf_linking[i][j] == 0) continue;
                if (++partners > 2) c.leaf_linking[i][j] = c.leaf_linking[j][i] = 0;
            }
        }
        CHECK(oracle_reduce(c) == reduce(c));
        ++tested;
    }
    CHECK(tested >= 30);
}

TEST_CASE("reduce factorizes over disjoint unions") {
    // cross linkings vanish in a disjoint union, so matchings factor and the
    // separation signs add; the class of the union is the pairwise union of
    // classes with multiplied coefficients
    std::mt19937_64 rng(1122);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 10; ++trial) {
        auto a = support::random_clover(rng, 1 + static_cast<int>(rng() % 2));
        auto b = support::random_clover(rng, 1 + static_cast<int>(rng() % 2));
        if (!validate_clover(a).empty() || !validate_clover(b).empty()) continue;

        CloverExpression u;
        u.internal_count = a.internal_count + b.internal_count;
        u.leaf_count = a.leaf_count + b.leaf_count;
        auto remap = [&](const CloverExpression& src, int vshift, int lshift, int hshift) {
            for (std::size_t h = 0; h < src.incidence.size(); ++h) {
                int n = src.incidence[h];
                u.incidence.push_back(src.node_is_leaf(n)
                                          ? u.internal_count + lshift + (n - src.internal_count)
                                          : vshift + n);
            }
            for (const auto& t : src.cyclic_order)
                u.cyclic_order.push_back({t[0] + hshift, t[1] + hshift, t[2] + hshift});
            u.twist.insert(u.twist.end(), src.twist.begin(), src.twist.end());
        };
        remap(a, 0, 0, 0);
        remap(b, a.internal_count, a.leaf_count, 2 * a.edge_count());
        u.leaf_linking.assign(u.leaf_count, std::vector<long long>(u.leaf_count, 0));
        for (int i = 0; i < a.leaf_count; ++i)
            for (int j = 0; j < a.leaf_count; ++j) u.leaf_linking[i][j] = a.leaf_linking[i][j];
        for (int i = 0; i < b.leaf_count; ++i)
            for (int j = 0; j < b.leaf_count; ++j)
                u.leaf_linking[a.leaf_count + i][a.leaf_count + j] = b.leaf_linking[i][j];
        REQUIRE(validate_clover(u).empty());

        DiagramVector expect;
        for (const auto& [ka, ca] : reduce(a))
            for (const auto& [kb, cb] : reduce(b)) {
                // disjoint union of canonical diagrams, re-canonicalized
                OrientedTrivalentGraph ga = decode_key(ka), gb = decode_key(kb);
                OrientedTrivalentGraph g;
                g.vertex_count = ga.vertex_count + gb.vertex_count;
                g.incidence = ga.incidence;
                for (int n : gb.incidence) g.incidence.push_back(ga.vertex_count + n);
                g.cyclic_order = ga.cyclic_order;
                for (const auto& t : gb.cyclic_order)
                    g.cyclic_order.push_back({t[0] + ga.half_edge_count(),
                                              t[1] + ga.half_edge_count(),
                                              t[2] + ga.half_edge_count()});
                auto sc = canonicalize(g);
                if (sc.torsion_flag) continue;
                expect[sc.key] += ca * cb * Dyadic(sc.sign);
            }
        prune(expect);
        CHECK(reduce(u) == expect);
        ++tested;
    }
    CHECK(tested >= 10);
}

TEST_CASE("negative Hopf pair glues with the extra -1 of the half-twist rule") {
    // two disjoint Ys linked through one leaf pair, lk = +1 vs lk = -1
    auto make = [&](long long lk) {
        CloverExpression yy;
        yy.internal_count = 2;
        yy.leaf_count = 6;
        yy.incidence = {0, 2, 0, 3, 0, 4, 1, 5, 1, 6, 1, 7};
        yy.cyclic_order = {{{0, 2, 4}}, {{6, 8, 10}}};
        yy.twist.assign(6, 0);
        yy.leaf_linking.assign(6, std::vector<long long>(6, 0));
        yy.leaf_linking[0][3] = yy.leaf_linking[3][0] = lk;
        // give the remaining leaves a matching so reductions are nonzero
        yy.leaf_linking[1][4] = yy.leaf_linking[4][1] = 1;
        yy.leaf_linking[2][5] = yy.leaf_linking[5][2] = 1;
        return yy;
    };
    auto plus = make(1), minus = make(-1);
    auto [glued_plus, sign_plus] = glue_leaves(plus, 0, 3);
    auto [glued_minus, sign_minus] = glue_leaves(minus, 0, 3);
    CHECK(glued_plus == glued_minus); // the splice itself is identical
    CHECK(sign_minus == -sign_plus);
    // oracle: reduce must commute with gluing under both signs
    CHECK(reduce(glued_plus) == support::scaled(reduce(plus), sign_plus));
    CHECK(reduce(glued_minus) == support::scaled(reduce(minus), sign_minus));
    CHECK_FALSE(reduce(glued_plus).empty());
    CHECK(reduce(minus) == support::scaled(reduce(plus), -1));
}

TEST_CASE("matching terms are order independent: sequential gluing, 5 random orders") {
    // Corpus restricted to clovers whose leaf matrix is a disjoint Hopf
    // pairing, so the unique matching can also be glued pair by pair with
    // glue_leaves; the product of gluing signs must reproduce the closed-form
    // separation sign for every gluing order.
    std::mt19937_64 rng(9090);
    int tested = 0;
    for (int trial = 0; trial < 400 && tested < 8; ++trial) {
        auto c = support::random_clover(rng, 2 + 2 * static_cast<int>(rng() % 2), false);
        if (!validate_clover(c).empty()) continue;
        if (c.leaf_count == 0 || c.leaf_count % 2 != 0) continue;
        // overwrite the linking data with a perfect Hopf pairing
        for (auto& row : c.leaf_linking) std::fill(row.begin(), row.end(), 0);
        std::vector<int> perm(c.leaf_count);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i + 1 < c.leaf_count; i += 2) {
            int a = perm[i], b = perm[i + 1];
            long long s = rng() % 2 ? 1 : -1;
            c.leaf_linking[a][b] = c.leaf_linking[b][a] = s;
            pairs.emplace_back(a, b);
        }
        auto direct = reduce(c);
        for (int order = 0; order < 5; ++order) {
            auto sequence = pairs;
            std::shuffle(sequence.begin(), sequence.end(), rng);
            CloverExpression cur = c;
            int sign = 1;
            // leaf indices shift as glue_leaves compacts; track them
            std::vector<int> where(c.leaf_count);
            std::iota(where.begin(), where.end(), 0);
            for (auto [a, b] : sequence) {
                const int wa = where[a], wb = where[b];
                auto [next, s] = glue_leaves(cur, wa, wb);
                sign *= s;
                for (int l = 0; l < c.leaf_count; ++l)
                    where[l] -= (where[l] > wa) + (where[l] > wb);
                cur = std::move(next);
            }
            // cur is leafless: its reduction is its own internal class
            CHECK(support::scaled(reduce(cur), sign) == direct);
        }
        ++tested;
    }
    CHECK(tested >= 8);
}

TEST_CASE("matching term is independent of gluing order") {
    // The closed-form separation sign makes each matching term order-free;
    // gluing the Hopf pairs of a cut sequence one at a time must agree.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        auto c = support::random_clover(rng, 2, false);
        if (!validate_clover(c).empty()) continue;
        auto direct = reduce(c);
        // glue in a random order via cut/glue roundtrips: cut twice, reglue
        // in both orders; reductions must match after sign bookkeeping.
        std::vector<int> internal_edges;
        for (int e = 0; e < c.edge_count(); ++e)
            if (!c.node_is_leaf(c.incidence[2 * e]) && !c.node_is_leaf(c.incidence[2 * e + 1]) &&
                c.twist[e] == 0)
                internal_edges.push_back(e);
        if (internal_edges.size() < 2) continue;
        int e1 = internal_edges[0];
        auto [cut1, s1] = cut_edge(c, e1);
        // the second edge keeps its index under cut_edge's construction
        int e2 = internal_edges[1];
        auto [cut2, s2] = cut_edge(cut1, e2);
        auto [glueA, sA] = glue_leaves(cut2, cut2.leaf_count - 4, cut2.leaf_count - 3);
        auto [glueAB, sAB] = glue_leaves(glueA, glueA.leaf_count - 2, glueA.leaf_count - 1);
        CHECK(support::scaled(reduce(glueAB), s1 * s2 * sA * sAB) == direct);
        auto [glueB, sB] = glue_leaves(cut2, cut2.leaf_count - 2, cut2.leaf_count - 1);
        auto [glueBA, sBA] = glue_leaves(glueB, glueB.leaf_count - 2, glueB.leaf_count - 1);
        CHECK(support::scaled(reduce(glueBA), s1 * s2 * sB * sBA) == direct);
    }
}
