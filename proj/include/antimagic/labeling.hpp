#pragma once

#include "antimagic/graph.hpp"
#include "antimagic/primes.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace antimagic {

enum class LabelMode { ordered, arbitrary, explicit_ };

std::string_view mode_name(LabelMode mode);
std::optional<LabelMode> parse_mode(std::string_view name);

/// Prime labels for a graph's edges: labels()[i] belongs to canonical edge i.
///
/// The constructor only records data; label_ordered / label_arbitrary /
/// label_explicit are the validating factories. validate_labeling checks an
/// arbitrary instance (e.g. one read back from JSON).
class EdgeLabeling {
public:
    EdgeLabeling(std::uint64_t graph_fingerprint, std::vector<Prime> labels, LabelMode mode,
                 std::uint64_t seed = 0)
        : graph_fingerprint_(graph_fingerprint), labels_(std::move(labels)), mode_(mode), seed_(seed) {}

    std::uint64_t graph_fingerprint() const noexcept { return graph_fingerprint_; }
    std::span<const Prime> labels() const noexcept { return labels_; }
    Prime label(EdgeIndex i) const { return labels_.at(i); }
    std::size_t size() const noexcept { return labels_.size(); }
    LabelMode mode() const noexcept { return mode_; }
    /// Shuffle seed; meaningful only in arbitrary mode.
    std::uint64_t seed() const noexcept { return seed_; }

    bool belongs_to(const Graph& g) const noexcept {
        return graph_fingerprint_ == g.fingerprint() && labels_.size() == g.edge_count();
    }

    friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;

private:
    std::uint64_t graph_fingerprint_;
    std::vector<Prime> labels_;
    LabelMode mode_;
    std::uint64_t seed_;
};

/// Edge i gets the i-th prime. Throws UnlabelableError on an edgeless graph.
EdgeLabeling label_ordered(const Graph& graph);
/// Same, reusing an existing table (must hold >= edge_count primes).
EdgeLabeling label_ordered(const Graph& graph, const PrimeTable& primes);

/// A seeded permutation of the first e primes.
///
/// Shuffle: std::mt19937_64 seeded with `seed`, then Fisher-Yates from the
/// last position down; position i swaps with j drawn uniformly from [0, i]
/// by rejection sampling on the raw 64-bit output (no std distributions, so
/// results match across standard libraries).
EdgeLabeling label_arbitrary(const Graph& graph, std::uint64_t seed);

/// Labels exactly as given. Throws LabelLengthError, DuplicateLabelError or
/// NonPrimeLabelError (checked in that order).
EdgeLabeling label_explicit(const Graph& graph, std::vector<Prime> assignment);

/// The shuffle used by label_arbitrary, applied in place.
void seeded_shuffle(std::span<Prime> values, std::uint64_t seed);

} // namespace antimagic
