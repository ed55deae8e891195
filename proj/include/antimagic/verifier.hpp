#pragma once

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace antimagic {

using Weight = std::uint64_t;

inline constexpr std::size_t kDefaultMaxCollisionGroups = 100;

/// Vertices sharing one weight. Ids are internal and ascending.
struct CollisionGroup {
    Weight weight = 0;
    std::vector<VertexId> vertices;

    friend bool operator==(const CollisionGroup&, const CollisionGroup&) = default;
};

struct WeightReport {
    std::vector<Weight> weights;
    bool antimagic = true;
    /// Groups ordered by weight; at most the configured cap are stored.
    std::vector<CollisionGroup> collisions;
    /// Exact number of colliding weight values, even when `collisions` is capped.
    std::size_t collision_group_count = 0;
    Weight max_weight = 0;

    friend bool operator==(const WeightReport&, const WeightReport&) = default;
};

/// Exact weight of every vertex: the sum of its incident edge labels.
/// Throws MismatchError if the labeling was built for another graph and
/// OverflowError if a sum would wrap.
WeightReport vertex_weights(const Graph& graph, const EdgeLabeling& labeling,
                            std::size_t max_collision_groups = kDefaultMaxCollisionGroups);

/// Groups equal weights. Exposed separately so callers holding raw weights
/// (e.g. the census) share one collision rule.
WeightReport summarize_weights(std::vector<Weight> weights,
                               std::size_t max_collision_groups = kDefaultMaxCollisionGroups);

struct Verdict {
    bool antimagic = true;
    std::vector<CollisionGroup> collisions;
};

Verdict check_antimagic(const WeightReport& report);

enum class ViolationKind { length_mismatch, duplicate, non_prime, not_consecutive, not_first_primes };

std::string_view violation_name(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    /// 1-based label position; 0 when the violation is not positional.
    std::size_t position = 0;
    std::string detail;
};

struct ValidityReport {
    std::vector<Violation> violations;
    bool valid() const noexcept { return violations.empty(); }
};

/// Checks length, distinctness and primality of every label, and the mode
/// contract: ordered labels must be 2, 3, 5, ... without gaps; arbitrary
/// labels must be a permutation of the first e primes. Never throws on bad
/// labels; each problem becomes a Violation.
ValidityReport validate_labeling(const Graph& graph, const EdgeLabeling& labeling);

/// Outcome of the pairwise audit of internal (non-leaf, non-root) vertices
/// of an ordered perfect binary tree.
struct InternalTripleAudit {
    std::uint32_t level = 0;
    std::size_t vertices = 0;
    std::size_t pairs_checked = 0;
    /// Pairs with equal sums of their three incident labels.
    std::size_t equal_sum_pairs = 0;
    /// Pairs whose sorted label triples share more than one prime.
    std::size_t shared_label_violations = 0;
    /// Per k = 1..l-1: whether the sum of the two smaller labels strictly
    /// increases left to right within that level.
    std::vector<bool> smaller_pair_increasing;

    bool holds() const noexcept { return equal_sum_pairs == 0 && shared_label_violations == 0; }
};

/// Exhaustive O(V^2) audit; intended for l <= 10 or so.
/// Throws InvalidArgument unless `graph` is a perfect binary tree.
InternalTripleAudit audit_internal_triples(const Graph& graph, const EdgeLabeling& labeling);

/// True iff, for each level k >= 1, weights strictly increase with position n.
bool weights_increase_within_levels(const Graph& graph, const WeightReport& report);

} // namespace antimagic
