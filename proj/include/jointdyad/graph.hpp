#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace jointdyad {

using NodeId = std::int32_t;

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable sparse directed binary graph: no self-loops, no duplicate
// edges, adjacency stored as CSR with sorted neighbor lists. Safe for
// shared read access once constructed.
class DirectedBinaryGraph {
public:
    DirectedBinaryGraph() = default;

    // Collapses duplicate edges; throws on self-loops or out-of-range
    // indices. `labels`, when given, maps index -> external id.
    static DirectedBinaryGraph from_edges(NodeId n_nodes, std::vector<Edge> edges,
                                          std::vector<std::string> labels = {});

    NodeId n_nodes() const { return n_nodes_; }
    std::size_t n_edges() const { return edges_.size(); }

    bool has_edge(NodeId i, NodeId j) const;
    std::span<const NodeId> out_neighbors(NodeId i) const;
    std::span<const Edge> edges() const { return edges_; } // sorted by (src, dst)

    std::size_t out_degree(NodeId i) const { return row_ptr_[i + 1] - row_ptr_[i]; }
    std::size_t in_degree(NodeId i) const { return in_degree_[i]; }
    std::size_t total_degree(NodeId i) const { return out_degree(i) + in_degree(i); }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(NodeId i) const; // stringified index when unlabeled

    // Copy with every zero-degree node removed; labels follow the nodes.
    DirectedBinaryGraph without_isolated_nodes() const;

private:
    NodeId n_nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> row_ptr_;
    std::vector<NodeId> col_idx_;
    std::vector<std::size_t> in_degree_;
    std::vector<std::string> labels_;
};

struct GraphStats {
    NodeId n_nodes = 0;
    std::size_t n_edges = 0;
    double avg_degree = 0.0; // 2M/N, in- plus out-degree
    double reciprocity = 0.0;
    double clustering = 0.0;
};

struct ParsedGraph {
    DirectedBinaryGraph graph;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

// Parses "source target" lines; '#' starts a comment line, blank lines are
// skipped. Labels map to dense indices in first-appearance order. With
// directed=false every line inserts both directions.
ParsedGraph parse_edge_list(std::istream& in, bool directed = true);
ParsedGraph parse_edge_list_file(const std::string& path, bool directed = true);

// One "source target" line per edge using original labels.
void write_edge_list(const DirectedBinaryGraph& g, std::ostream& out);
void write_edge_list_file(const DirectedBinaryGraph& g, const std::string& path);

// Fraction of ordered edges whose reverse edge exists; 0 for an empty graph.
double reciprocity(const DirectedBinaryGraph& g);

// Mean local clustering of the undirected projection (edge if either
// direction exists); nodes with fewer than two neighbors contribute 0.
double average_clustering(const DirectedBinaryGraph& g);

GraphStats graph_stats(const DirectedBinaryGraph& g);

} // namespace jointdyad
