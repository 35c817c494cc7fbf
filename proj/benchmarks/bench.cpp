#include <benchmark/benchmark.h>

#include <random>

#include "clv/clover.hpp"
#include "clv/enumerate.hpp"
#include "clv/lattice.hpp"
#include "clv/surgery.hpp"

namespace {

clv::OrientedTrivalentGraph k33() {
    clv::OrientedTrivalentGraph g;
    g.vertex_count = 6;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) {
            g.incidence.push_back(i);
            g.incidence.push_back(j);
        }
    g.cyclic_order.resize(6);
    std::vector<int> filled(6, 0);
    for (int h = 0; h < g.half_edge_count(); ++h)
        g.cyclic_order[g.incidence[h]][filled[g.incidence[h]]++] = h;
    return g;
}

clv::CloverExpression h_clover() {
    clv::CloverExpression c;
    c.internal_count = 2;
    c.leaf_count = 4;
    c.incidence = {0, 1, 0, 2, 0, 3, 1, 4, 1, 5};
    c.cyclic_order = {{{0, 2, 4}}, {{1, 6, 8}}};
    c.twist.assign(5, 0);
    c.leaf_linking.assign(4, std::vector<long long>(4, 0));
    c.leaf_linking[0][2] = c.leaf_linking[2][0] = 1;
    c.leaf_linking[1][3] = c.leaf_linking[3][1] = 1;
    return c;
}

// Degree 4, eight leaves, dense linking: a heavy reduce workload.
clv::CloverExpression dense_clover() {
    clv::CloverExpression c;
    c.internal_count = 4;
    c.leaf_count = 8;
    c.incidence = {0, 1, 2, 3};
    for (int v = 0; v < 4; ++v)
        for (int s = 0; s < 2; ++s) {
            c.incidence.push_back(v);
            c.incidence.push_back(c.leaf_node(2 * v + s));
        }
    c.cyclic_order = {{{0, 4, 6}}, {{1, 8, 10}}, {{2, 12, 14}}, {{3, 16, 18}}};
    c.twist.assign(c.edge_count(), 0);
    c.leaf_linking.assign(8, std::vector<long long>(8, 0));
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            c.leaf_linking[i][j] = c.leaf_linking[j][i] = ((i + j) % 3) - 1;
    return c;
}

void BM_canonicalize_k33(benchmark::State& state) {
    auto g = k33();
    for (auto _ : state) benchmark::DoNotOptimize(clv::canonicalize(g));
}
BENCHMARK(BM_canonicalize_k33);

void BM_enumerate(benchmark::State& state) {
    // enumeration is memoized per degree, so this measures the warm path
    for (auto _ : state)
        benchmark::DoNotOptimize(clv::enumerate_diagrams(static_cast<int>(state.range(0)), false));
}
BENCHMARK(BM_enumerate)->Arg(2)->Arg(3);

void BM_relation_matrix_k3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(clv::build_relation_matrix(3));
}
BENCHMARK(BM_relation_matrix_k3);

void BM_snf_relations_k3(benchmark::State& state) {
    auto rm = clv::build_relation_matrix(3);
    for (auto _ : state) benchmark::DoNotOptimize(clv::smith_normal_form(rm.rows));
}
BENCHMARK(BM_snf_relations_k3);

void BM_reduce_h(benchmark::State& state) {
    auto c = h_clover();
    for (auto _ : state) benchmark::DoNotOptimize(clv::reduce(c));
}
BENCHMARK(BM_reduce_h);

void BM_reduce_dense_degree4(benchmark::State& state) {
    auto c = dense_clover();
    for (auto _ : state) benchmark::DoNotOptimize(clv::reduce(c));
}
BENCHMARK(BM_reduce_dense_degree4);

void BM_compile_and_certify(benchmark::State& state) {
    auto c = dense_clover();
    for (auto _ : state) {
        auto link = clv::compile_surgery_link(c);
        benchmark::DoNotOptimize(clv::unimodularity_certificate(link));
    }
}
BENCHMARK(BM_compile_and_certify);

} // namespace

BENCHMARK_MAIN();
