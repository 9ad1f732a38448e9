#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jointdyad/graph.hpp"
#include "jointdyad/mask.hpp"
#include "jointdyad/matrix.hpp"

namespace jointdyad {

// Latent parameters of the joint-dyad model. The community rate
//   lambda_ij = sum_{k,q} u_ik v_jq w_kq
// and the pair-interaction eta define, per unordered dyad {i, j}, the
// bivariate Bernoulli table
//   (p00, p01, p10, p11) = (1, lambda_ji, lambda_ij, eta lambda_ij lambda_ji) / Z
// with Z = lambda_ij + lambda_ji + eta lambda_ij lambda_ji + 1.
// eta = 1 makes the two directions independent.
struct ModelParams {
    Matrix u;     // N x K out-going memberships, entries >= 0
    Matrix v;     // N x K in-coming memberships, entries >= 0
    Matrix w;     // K x K affinity, entries >= 0
    double eta = 1.0;
    std::vector<std::string> node_labels; // optional, index -> external id

    NodeId n_nodes() const { return static_cast<NodeId>(u.rows()); }
    int n_communities() const { return static_cast<int>(u.cols()); }

    // Checks dimension consistency, nonnegativity and eta > 0.
    void validate() const;
};

struct DyadDistribution {
    double p00, p01, p10, p11;
    double z;
};

struct DyadMoments {
    double mean_ij, mean_ji;
    double var_ij, var_ji;
    double cov;
};

double lambda_rate(const ModelParams& params, NodeId i, NodeId j);

// Four cell probabilities of one dyad. Throws on non-finite input; if the
// normalizer overflows, the cells are renormalized by factoring out the
// largest term (z saturates at infinity in that case).
DyadDistribution dyad_distribution(double lambda_ij, double lambda_ji, double eta);

// E[A_ij] = (lambda_ij + eta lambda_ij lambda_ji) / Z.
double marginal_mean(double lambda_ij, double lambda_ji, double eta);

// E[A_ij | A_ji = a_ji] = eta^a_ji lambda_ij / (eta^a_ji lambda_ij + 1).
double conditional_mean(double lambda_ij, double eta, int a_ji);

// Means, variances and the covariance of one dyad; cov carries the exact
// factor (eta - 1), so independence gives 0 with no cancellation error.
DyadMoments dyad_moments(double lambda_ij, double lambda_ji, double eta);

// Full-data log-likelihood; sums over unordered dyads not held out by
// `mask`. Returns -infinity when an observed edge has zero rate.
double log_likelihood(const DirectedBinaryGraph& g, const ModelParams& params,
                      const TrainMask* mask = nullptr);

// d/d eta of the log-likelihood over ordered pairs:
//   (1 / 2 eta) sum A_ij A_ji - (1/2) sum lambda_ij lambda_ji / Z_ij.
double eta_gradient(const DirectedBinaryGraph& g, const ModelParams& params);

// JSON document {"N", "K", "eta", "u", "v", "w", "node_labels"}; matrices
// as row-major nested arrays. The reader validates via ModelParams::validate.
void save_params(const ModelParams& params, std::ostream& out);
void save_params_file(const ModelParams& params, const std::string& path);
ModelParams load_params(std::istream& in);
ModelParams load_params_file(const std::string& path);

// Rate cache: row i holds u_i^T w, so lambda_ij is a K-term dot product
// with v_j. Shared by inference, the generator and the evaluators.
Matrix lambda_row_cache(const ModelParams& params);
double lambda_from_cache(const Matrix& cache, const Matrix& v, NodeId i, NodeId j);

} // namespace jointdyad
