#pragma once

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/verifier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace antimagic {

/// Result of ordered-labeling one member of a family.
struct SweepEntry {
    GraphDescriptor descriptor;
    /// Set when the graph was built and labeled; empty if `error` is set.
    std::optional<bool> antimagic;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<CollisionGroup> collisions;
    std::size_t collision_group_count = 0;
    /// Failure to build or label (capacity, edgeless graph, bad parameter).
    std::string error;
};

/// Builds, ordered-labels and verifies each graph. A failing entry records
/// its error and the sweep moves on.
std::vector<SweepEntry> sweep_ordered(const std::vector<GraphDescriptor>& graphs);

/// Descriptors for `family` with its main parameter running over [first, last].
/// The main parameter is level (pbt), n (complete, ladder, wheel), d
/// (hypercube), b (bipartite, a = `fixed`), last_count (cbt, levels =
/// `fixed`) or right (double-star, left = `fixed`).
std::vector<GraphDescriptor> family_range(Family family, std::uint64_t first, std::uint64_t last,
                                          std::uint64_t fixed = 0);

inline constexpr std::size_t kMaxExhaustiveEdges = 8;
inline constexpr std::size_t kDefaultMaxCounterexamples = 10;

enum class CensusMode { exhaustive, sampled };

struct CensusOptions {
    CensusMode mode = CensusMode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t sample_size = 0;
    std::size_t max_counterexamples = kDefaultMaxCounterexamples;
    /// Worker threads; results are identical for every value >= 1.
    unsigned threads = 1;
};

struct Counterexample {
    /// Zero-based index in the enumeration (lexicographic rank for
    /// exhaustive runs, sample number for sampled runs).
    std::uint64_t index = 0;
    std::vector<Prime> labels;
    std::vector<CollisionGroup> collisions;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CensusResult {
    GraphDescriptor descriptor;
    CensusMode mode = CensusMode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t sample_size = 0;
    std::uint64_t total_labelings_tested = 0;
    std::uint64_t antimagic_count = 0;
    /// Earliest counterexamples in enumeration order, capped.
    std::vector<Counterexample> counterexamples;

    friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

/// Counts antimagic assignments among permutations of the first e primes.
///
/// Exhaustive mode walks all e! permutations in lexicographic order of the
/// label sequence, so index 0 is the ordered labeling; it requires e <= 8.
/// Sampled mode draws sample_size labelings; sample i uses label_arbitrary
/// with a seed derived from (seed, i). Throws CapacityError for an
/// exhaustive run on too many edges, UnlabelableError on an edgeless graph.
CensusResult permutation_census(const Graph& graph, const CensusOptions& options);

/// Seed of sample i in a sampled census (splitmix64 of seed + i).
std::uint64_t census_sample_seed(std::uint64_t seed, std::uint64_t index);

} // namespace antimagic
