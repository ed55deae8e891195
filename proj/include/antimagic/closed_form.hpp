#pragma once

#include "antimagic/graph.hpp"
#include "antimagic/primes.hpp"

#include <cstdint>
#include <memory>
#include <optional>

namespace antimagic {

/// Vertices of a perfect binary tree of level l: 2^(l+1) - 1.
/// Throws OverflowError for l >= 63.
std::uint64_t num_vertices(std::uint32_t l);

/// Edges of a perfect binary tree of level l: 2^(l+1) - 2.
std::uint64_t num_edges(std::uint32_t l);

/// 1-based positions, in the canonical bottom-up edge order, of the edges
/// touching a non-leaf vertex. The root has no parent edge.
struct IncidentEdges {
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    std::optional<std::uint64_t> parent;

    friend bool operator==(const IncidentEdges&, const IncidentEdges&) = default;
};

/// For the root (k = l): (e_l - 1, e_l). For 1 <= k < l, with
/// S(j) = sum_{i=0}^{j-1} 2^(l-i): children (2n-1 + S(k-1), 2n + S(k-1)),
/// parent S(k) + n. Throws InvalidArgument for k == 0 or a bad address.
IncidentEdges incident_edge_indices(const TreeAddress& addr);

/// Tree level plus a prime table long enough to label all of its edges.
/// The table is shared so one sieve can serve many levels.
class TreeFormulaContext {
public:
    /// Throws InvalidArgument if primes->count() < num_edges(level).
    TreeFormulaContext(std::uint32_t level, std::shared_ptr<const PrimeTable> primes);
    /// Sieves exactly num_edges(level) primes.
    explicit TreeFormulaContext(std::uint32_t level);

    std::uint32_t level() const noexcept { return level_; }
    const PrimeTable& primes() const noexcept { return *primes_; }
    Prime prime(std::uint64_t index) const { return primes_->at(index); }

private:
    std::uint32_t level_;
    std::shared_ptr<const PrimeTable> primes_;
};

/// Weight of the vertex at `addr` under ordered labeling, from index
/// arithmetic alone. Leaves (k = 0) weigh the n-th prime; the root sums its
/// two child edges; every other vertex sums two child edges and its parent
/// edge. A level-0 tree has no edges, so its lone vertex weighs 0.
std::uint64_t node_value(const TreeFormulaContext& ctx, const TreeAddress& addr);

/// Root weight P(e_l - 1) + P(e_l), l >= 1.
std::uint64_t root_value(const TreeFormulaContext& ctx);

/// Parent-of-leaves weight P(2n-1) + P(2n) + P(2^l + n), l >= 2.
std::uint64_t second_to_last_value(const TreeFormulaContext& ctx, std::uint64_t n);

} // namespace antimagic
