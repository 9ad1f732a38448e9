#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jointdyad/evaluation.hpp"
#include "jointdyad/graph.hpp"
#include "jointdyad/inference.hpp"
#include "jointdyad/mask.hpp"

namespace jointdyad {

// Symmetric cross-validation mask: every unordered dyad belongs to exactly
// one fold, so both ordered entries (A_ij, A_ji) are hidden together.
struct DyadMask {
    NodeId n_nodes = 0;
    int n_folds = 0;
    std::vector<std::uint8_t> fold; // dyad-indexed, sizes differ by at most 1

    int fold_of(NodeId i, NodeId j) const {
        return fold[TrainMask::dyad_index(n_nodes, i, j)];
    }
    TrainMask heldout_mask(int test_fold) const;
    std::vector<Dyad> fold_dyads(int test_fold) const;
};

DyadMask make_mask(NodeId n_nodes, int n_folds, std::uint64_t seed);

struct PredictionReport {
    std::optional<double> auc; // absent for single-class test sets
    double log_loss = 0.0;
    double l1_loss = 0.0;
    std::string score_kind; // "marginal" | "conditional"
};

struct FoldReport {
    int fold = 0;
    PredictionReport marginal;
    PredictionReport conditional;
    JointClassificationReport joint_excluded; // accuracy over nonempty dyads
    JointClassificationReport joint_full;     // all four labels
    double train_loglik = 0.0;
};

struct AggregateStat {
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation
    int n = 0;
};

struct CVReport {
    int k = 0;
    int n_folds = 0;
    std::uint64_t seed = 0;
    std::vector<FoldReport> folds;
    std::map<std::string, AggregateStat> aggregate;
};

// Per fold: fit on the remaining dyads (fold seed derived from
// (seed, fold)), then score both ordered entries of every held-out dyad
// with the marginal mean, the conditional mean given the observed opposite
// entry, and the joint-label argmax.
CVReport run_cv(const DirectedBinaryGraph& g, const FitConfig& fit_config,
                int n_folds, std::uint64_t seed);

std::string cv_report_to_json(const CVReport& report);
// Flat rows (fold, score_kind, metric, value); fold -1 holds aggregates.
void write_cv_report_csv(const CVReport& report, std::ostream& out);

} // namespace jointdyad
