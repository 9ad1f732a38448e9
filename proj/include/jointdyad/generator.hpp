#pragma once

#include <cstdint>
#include <string>

#include "jointdyad/graph.hpp"
#include "jointdyad/model.hpp"
#include "jointdyad/rng.hpp"

namespace jointdyad {

// Planted-structure benchmark: equal-size blocks with a Dirichlet-mixed
// overlap fraction, assortative affinity p1 = <k> K / N on the diagonal
// and p2 = ratio * p1 off it, global sparsity solved through zeta.
struct BenchmarkConfig {
    NodeId n_nodes = 0;
    int k = 1;
    double avg_degree = 0.0; // target <k> = 2 E[M] / N
    double eta = 1.0;
    double overlap_fraction = 0.2;
    double dirichlet_alpha = 0.1;
    double assortativity_ratio = 0.1; // p2 / p1
    std::uint64_t seed = 0;

    double target_edges() const { return n_nodes * avg_degree / 2.0; }
    void validate() const;
};

struct PlantedInstance {
    DirectedBinaryGraph graph;
    ModelParams true_params; // zeta already folded into w
    double zeta = 1.0;
    double expected_edges = 0.0;
};

// Planted memberships (u_i = v_i) and the assortative affinity; overlap
// nodes are chosen uniformly over all nodes.
ModelParams synthesize_params(const BenchmarkConfig& config, RngStream& rng);

// Solves sum_{i != j} E[A_ij](zeta * lambda) = target_edges for zeta > 0 by
// bisection on a geometrically grown bracket; residual tolerance 1e-8
// relative. Throws if the target is unreachable (all rates zero).
double solve_zeta(const ModelParams& params, double target_edges);

// Draws every unordered dyad independently from its four-cell table via
// inverse CDF in state order (00, 01, 10, 11). Each dyad consumes one
// uniform keyed by (seed, i, j), so the result is reproducible and
// independent of traversal order.
DirectedBinaryGraph sample_graph(const ModelParams& params, std::uint64_t seed);

PlantedInstance generate_benchmark(const BenchmarkConfig& config);

// Manifest fields recorded with each generated instance.
std::string instance_manifest_json(const BenchmarkConfig& config,
                                   const PlantedInstance& instance);

} // namespace jointdyad
