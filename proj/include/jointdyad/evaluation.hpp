#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jointdyad/graph.hpp"
#include "jointdyad/model.hpp"

namespace jointdyad {

// Unordered pair i < j.
struct Dyad {
    NodeId i = 0;
    NodeId j = 0;
    friend bool operator==(const Dyad&, const Dyad&) = default;
};

// Dyad labels in cumulative state order: (A_ij, A_ji) with i < j.
enum JointLabel : int {
    kLabelNone = 0,    // (0,0)
    kLabelReverse = 1, // (0,1)
    kLabelForward = 2, // (1,0)
    kLabelMutual = 3,  // (1,1)
};

struct CommunityRecoveryReport {
    double cosine_similarity = 0.0;
    std::vector<int> permutation; // inferred column for each true column
    bool greedy = false;          // true when K > 10 skipped the exact search
};

// Mean over nodes of the averaged row cosines of u and v, maximized over a
// single column permutation applied to both inferred matrices. Zero rows
// contribute cosine 0. Exact permutation search up to K = 10, greedy
// matching beyond.
CommunityRecoveryReport cosine_similarity(const Matrix& true_u, const Matrix& true_v,
                                          const Matrix& inferred_u, const Matrix& inferred_v);

// Rank AUC with ties counted 1/2 (Mann-Whitney normalization). Empty when
// labels are single-class.
std::optional<double> auc(std::span<const double> scores, std::span<const int> labels);

struct Losses {
    double log_loss = 0.0;
    double l1_loss = 0.0;
};

// Mean binary cross-entropy (probabilities clipped to [1e-12, 1 - 1e-12]
// before logs) and mean absolute error over the evaluated entries.
Losses losses(std::span<const double> probabilities, std::span<const int> labels);

struct JointClassificationReport {
    double accuracy = 0.0;
    std::array<std::array<std::size_t, 4>, 4> confusion{}; // [true][predicted]
    std::array<double, 4> precision{}; // diagonal over row sum
    std::array<double, 4> recall{};    // diagonal over column sum
    double rp_baseline = 0.0;          // uniform over admissible labels
    double mrf_baseline = 0.0;         // always predict the modal training label
    int mrf_label = 0;
    std::size_t n_evaluated = 0;
    bool exclude_empty = false;
};

// Predicts each dyad's label as the argmax cell of its four-cell table.
// With exclude_empty set, dyads whose true label is (0,0) are dropped and
// the argmax runs over {01, 10, 11}. Baselines use the label frequencies
// of `train_dyads` (defaults to the evaluation set itself).
JointClassificationReport joint_classify(const DirectedBinaryGraph& g,
                                         const ModelParams& params,
                                         std::span<const Dyad> eval_dyads,
                                         bool exclude_empty,
                                         std::span<const Dyad> train_dyads = {});

enum class Aggregation { mean, max, product };
Aggregation aggregation_from_string(const std::string& name);

// Directed overlapping modularity with belonging coefficients built from
// the row-normalized memberships through the chosen aggregation. The
// uniform single-community assignment scores exactly 0.
double overlapping_modularity(const DirectedBinaryGraph& g, const Matrix& memberships,
                              Aggregation aggregation);

struct SampleComparison {
    struct Row {
        std::string statistic;
        double observed = 0.0;
        double mean = 0.0;
        double stddev = 0.0;
    };
    GraphStats observed;
    std::vector<GraphStats> samples; // isolated nodes dropped per sample
    std::vector<Row> rows() const;
};

// Draws n_samples graphs from `params` (per-sample seeds derived from
// `seed`) and compares their statistics against the observed graph.
SampleComparison compare_samples(const DirectedBinaryGraph& observed,
                                 const ModelParams& params, int n_samples,
                                 std::uint64_t seed);

void write_sample_comparison_csv(const SampleComparison& cmp, std::ostream& out);
std::string sample_comparison_to_json(const SampleComparison& cmp);

std::string community_recovery_to_json(const CommunityRecoveryReport& report);
std::string joint_classification_to_json(const JointClassificationReport& report);

// True label of dyad {i, j} in the observed graph.
int observed_label(const DirectedBinaryGraph& g, Dyad d);

// All unordered dyads of an N-node graph in lexicographic order.
std::vector<Dyad> all_dyads(NodeId n_nodes);

} // namespace jointdyad
