#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jointdyad/graph.hpp"
#include "jointdyad/mask.hpp"
#include "jointdyad/model.hpp"
#include "jointdyad/rng.hpp"

namespace jointdyad {

// eta can reach exactly 0 when the training data has no reciprocated
// edges; the floor keeps log(eta) finite while meaning "no interaction".
inline constexpr double kEtaFloor = 1e-12;

// Raised when an observed edge ends up with zero rate, which makes the
// responsibilities undefined.
class degeneracy_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Variational weights rho_{ijkq}, one K x K simplex per observed
// (unmasked) edge: rho = u_ik v_jq w_kq / lambda_ij.
struct Responsibilities {
    std::vector<Edge> edges;
    std::vector<double> rho; // edges.size() * k * k, row-major (k, q)
    int k = 0;

    std::span<const double> cell(std::size_t e) const {
        const std::size_t kk = static_cast<std::size_t>(k) * k;
        return {rho.data() + e * kk, kk};
    }
};

struct FitConfig {
    int k = 1;
    int max_iter = 1000;
    double tol = 1e-4;    // absolute log-likelihood change per check window
    int check_every = 10;
    int n_restarts = 10;
    std::uint64_t seed = 0;
    std::optional<double> eta_fixed; // pin eta (eta_fixed = 1: independent-dyad ablation)
    double init_scale = 1.0;
    int threads = 1; // restart-level parallelism; results independent of the value

    void validate() const;
};

struct FitResult {
    ModelParams params;
    double final_loglik = 0.0;
    std::vector<double> loglik_trace; // L(theta_0), then one entry per iteration
    int iterations = 0;
    int restart_index = 0;
    bool converged = false;
    std::size_t detached_entries = 0; // membership cells zeroed on 0/0 updates
    std::size_t monotonicity_violations = 0; // trace decreases beyond 1e-8
};

// u, v ~ U(0, init_scale) i.i.d.; w diagonal U(0, init_scale) with
// off-diagonal entries damped by 0.1; eta ~ U(0.5, 5) unless pinned.
// Draw order is fixed, so the result is fully determined by the stream.
ModelParams initialize(const FitConfig& config, NodeId n_nodes, RngStream& rng);

Responsibilities e_step(const DirectedBinaryGraph& g, const ModelParams& params,
                        const TrainMask* mask = nullptr);

// One M-step: u, v, w, eta updated in that order, each block seeing the
// freshest previous blocks and the incoming eta in its denominators; the
// eta update evaluates its fixed-point right-hand side once.
ModelParams m_step(const DirectedBinaryGraph& g, const ModelParams& params,
                   const Responsibilities& rho, const TrainMask* mask = nullptr);

// Best-of-n_restarts EM fit. Masked dyads are excluded from every E-step,
// M-step and log-likelihood sum. Throws degeneracy_error only if every
// restart degenerates.
FitResult fit(const DirectedBinaryGraph& g, const FitConfig& config,
              const TrainMask* mask = nullptr);

std::string fit_result_to_json(const FitResult& result);

} // namespace jointdyad
