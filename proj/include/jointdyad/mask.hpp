#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "jointdyad/graph.hpp"

namespace jointdyad {

// Set of held-out unordered dyads {i, j}. Both ordered entries of a
// held-out dyad are hidden from every likelihood and inference sum.
class TrainMask {
public:
    TrainMask() = default;
    explicit TrainMask(NodeId n_nodes)
        : n_(n_nodes), held_(n_dyads(n_nodes), 0) {}

    NodeId n_nodes() const { return n_; }
    std::size_t n_held_out() const { return count_; }

    void hold_out(NodeId i, NodeId j) {
        auto& cell = held_[dyad_index(n_, i, j)];
        if (!cell) ++count_;
        cell = 1;
    }

    bool held_out(NodeId i, NodeId j) const {
        return held_[dyad_index(n_, i, j)] != 0;
    }

    static std::size_t n_dyads(NodeId n) {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }

    // Index of {i, j} (order-free) in the lexicographic i<j enumeration.
    static std::size_t dyad_index(NodeId n, NodeId i, NodeId j) {
        if (i == j || i < 0 || j < 0 || i >= n || j >= n)
            throw std::out_of_range("invalid dyad");
        if (i > j) std::swap(i, j);
        const auto ui = static_cast<std::size_t>(i);
        return ui * (2 * static_cast<std::size_t>(n) - ui - 1) / 2 +
               static_cast<std::size_t>(j - i) - 1;
    }

private:
    NodeId n_ = 0;
    std::vector<std::uint8_t> held_;
    std::size_t count_ = 0;
};

} // namespace jointdyad
