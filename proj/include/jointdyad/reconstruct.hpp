#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jointdyad/evaluation.hpp"
#include "jointdyad/graph.hpp"
#include "jointdyad/model.hpp"

namespace jointdyad {

// Full-graph reconstruction: every ordered off-diagonal entry scored with
// the marginal and the conditional mean, every dyad classified by its
// joint-label argmax, losses computed against the observed graph.
struct ReconstructionReport {
    // Ordered entries (i, j), i != j, row-major with the diagonal skipped;
    // entry_index(n, i, j) gives the position.
    std::vector<double> marginal_scores;
    std::vector<double> conditional_scores;
    Losses marginal_losses;
    Losses conditional_losses;
    JointClassificationReport joint; // 4-label mode over all dyads
    double threshold = 0.2;

    struct ExportRow {
        NodeId source = 0;
        NodeId target = 0;
        double marginal = 0.0;
        double conditional = 0.0;
        int joint_label = 0;
    };
    // Entries whose marginal or conditional score exceeds the threshold.
    std::vector<ExportRow> exported;

    static std::size_t entry_index(NodeId n, NodeId i, NodeId j) {
        return static_cast<std::size_t>(i) * (n - 1) +
               static_cast<std::size_t>(j > i ? j - 1 : j);
    }
};

ReconstructionReport reconstruct(const DirectedBinaryGraph& g, const ModelParams& params,
                                 double threshold = 0.2);

std::string reconstruction_to_json(const ReconstructionReport& report);
// Rows (source, target, marginal_score, conditional_score, joint_label)
// using original node labels.
void write_reconstruction_csv(const ReconstructionReport& report,
                              const DirectedBinaryGraph& g, std::ostream& out);

} // namespace jointdyad
