#include "jointdyad/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace jointdyad {

DirectedBinaryGraph DirectedBinaryGraph::from_edges(NodeId n_nodes, std::vector<Edge> edges,
                                                    std::vector<std::string> labels) {
    if (n_nodes < 0) throw std::invalid_argument("negative node count");
    if (!labels.empty() && static_cast<NodeId>(labels.size()) != n_nodes)
        throw std::invalid_argument("label count does not match node count");
    for (const Edge& e : edges) {
        if (e.src < 0 || e.dst < 0 || e.src >= n_nodes || e.dst >= n_nodes)
            throw std::out_of_range("edge index out of range");
        if (e.src == e.dst) throw std::invalid_argument("self-loop rejected");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    DirectedBinaryGraph g;
    g.n_nodes_ = n_nodes;
    g.labels_ = std::move(labels);
    g.edges_ = std::move(edges);
    g.row_ptr_.assign(static_cast<std::size_t>(n_nodes) + 1, 0);
    g.col_idx_.reserve(g.edges_.size());
    g.in_degree_.assign(static_cast<std::size_t>(n_nodes), 0);
    for (const Edge& e : g.edges_) {
        ++g.row_ptr_[static_cast<std::size_t>(e.src) + 1];
        ++g.in_degree_[static_cast<std::size_t>(e.dst)];
        g.col_idx_.push_back(e.dst);
    }
    for (std::size_t i = 1; i < g.row_ptr_.size(); ++i) g.row_ptr_[i] += g.row_ptr_[i - 1];
    return g;
}

bool DirectedBinaryGraph::has_edge(NodeId i, NodeId j) const {
    const auto nbrs = out_neighbors(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::span<const NodeId> DirectedBinaryGraph::out_neighbors(NodeId i) const {
    const std::size_t lo = row_ptr_[i];
    return {col_idx_.data() + lo, row_ptr_[static_cast<std::size_t>(i) + 1] - lo};
}

std::string DirectedBinaryGraph::label(NodeId i) const {
    if (i < 0 || i >= n_nodes_) throw std::out_of_range("node index");
    return labels_.empty() ? std::to_string(i) : labels_[static_cast<std::size_t>(i)];
}

DirectedBinaryGraph DirectedBinaryGraph::without_isolated_nodes() const {
    std::vector<NodeId> remap(static_cast<std::size_t>(n_nodes_), -1);
    std::vector<std::string> kept_labels;
    NodeId next = 0;
    for (NodeId i = 0; i < n_nodes_; ++i) {
        if (total_degree(i) == 0) continue;
        remap[static_cast<std::size_t>(i)] = next++;
        if (!labels_.empty()) kept_labels.push_back(labels_[static_cast<std::size_t>(i)]);
    }
    std::vector<Edge> remapped;
    remapped.reserve(edges_.size());
    for (const Edge& e : edges_)
        remapped.push_back({remap[static_cast<std::size_t>(e.src)],
                            remap[static_cast<std::size_t>(e.dst)]});
    return from_edges(next, std::move(remapped), std::move(kept_labels));
}

ParsedGraph parse_edge_list(std::istream& in, bool directed) {
    std::unordered_map<std::string, NodeId> index_of;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    ParsedGraph result;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = index_of.try_emplace(token, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };
    auto add = [&](NodeId a, NodeId b) {
        if (a == b) {
            ++result.self_loops_dropped;
            return;
        }
        const std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
            static_cast<std::uint32_t>(b);
        if (!seen.insert(key).second) {
            ++result.duplicates_collapsed;
            return;
        }
        edges.push_back({a, b});
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string src, dst, extra;
        if (!(fields >> src)) continue; // blank line
        if (src[0] == '#') continue;
        if (!(fields >> dst) || (fields >> extra))
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected two tokens");
        const NodeId a = intern(src);
        const NodeId b = intern(dst);
        add(a, b);
        if (!directed) add(b, a);
    }
    if (labels.empty()) throw std::runtime_error("edge list is empty");

    result.graph = DirectedBinaryGraph::from_edges(static_cast<NodeId>(labels.size()),
                                                   std::move(edges), std::move(labels));
    return result;
}

ParsedGraph parse_edge_list_file(const std::string& path, bool directed) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return parse_edge_list(in, directed);
}

void write_edge_list(const DirectedBinaryGraph& g, std::ostream& out) {
    for (const Edge& e : g.edges())
        out << g.label(e.src) << ' ' << g.label(e.dst) << '\n';
}

void write_edge_list_file(const DirectedBinaryGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    write_edge_list(g, out);
}

double reciprocity(const DirectedBinaryGraph& g) {
    if (g.n_edges() == 0) return 0.0;
    std::size_t mutual = 0;
    for (const Edge& e : g.edges())
        if (g.has_edge(e.dst, e.src)) ++mutual;
    return static_cast<double>(mutual) / static_cast<double>(g.n_edges());
}

double average_clustering(const DirectedBinaryGraph& g) {
    const NodeId n = g.n_nodes();
    if (n == 0) return 0.0;

    // Undirected projection with sorted neighbor lists.
    std::vector<std::vector<NodeId>> nbrs(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        nbrs[static_cast<std::size_t>(e.src)].push_back(e.dst);
        nbrs[static_cast<std::size_t>(e.dst)].push_back(e.src);
    }
    for (auto& list : nbrs) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    auto connected = [&](NodeId a, NodeId b) {
        const auto& list = nbrs[static_cast<std::size_t>(a)];
        return std::binary_search(list.begin(), list.end(), b);
    };

    double total = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        const auto& list = nbrs[static_cast<std::size_t>(i)];
        const std::size_t d = list.size();
        if (d < 2) continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b)
                if (connected(list[a], list[b])) ++links;
        total += 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
    }
    return total / static_cast<double>(n);
}

GraphStats graph_stats(const DirectedBinaryGraph& g) {
    GraphStats s;
    s.n_nodes = g.n_nodes();
    s.n_edges = g.n_edges();
    s.avg_degree = g.n_nodes() == 0
                       ? 0.0
                       : 2.0 * static_cast<double>(g.n_edges()) / g.n_nodes();
    s.reciprocity = reciprocity(g);
    s.clustering = average_clustering(g);
    return s;
}

} // namespace jointdyad
