#include "antimagic/labeling.hpp"

#include "antimagic/errors.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

namespace antimagic {

namespace {

void require_edges(const Graph& graph) {
    if (graph.edge_count() == 0) {
        throw UnlabelableError(graph.descriptor().to_string() + " has no edges to label");
    }
}

// Uniform draw from [0, bound] with rejection on the top of the 64-bit range.
std::uint64_t draw_inclusive(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t range = bound + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % range;
}

} // namespace

std::string_view mode_name(LabelMode mode) {
    switch (mode) {
    case LabelMode::ordered: return "ordered";
    case LabelMode::arbitrary: return "arbitrary";
    case LabelMode::explicit_: return "explicit";
    }
    return "unknown";
}

std::optional<LabelMode> parse_mode(std::string_view name) {
    if (name == "ordered") return LabelMode::ordered;
    if (name == "arbitrary") return LabelMode::arbitrary;
    if (name == "explicit") return LabelMode::explicit_;
    return std::nullopt;
}

EdgeLabeling label_ordered(const Graph& graph, const PrimeTable& primes) {
    require_edges(graph);
    const std::size_t e = graph.edge_count();
    if (primes.count() < e) {
        throw InvalidArgument("prime table holds " + std::to_string(primes.count()) + " primes, " +
                              std::to_string(e) + " needed");
    }
    auto first = primes.values().first(e);
    return EdgeLabeling(graph.fingerprint(), std::vector<Prime>(first.begin(), first.end()),
                        LabelMode::ordered);
}

EdgeLabeling label_ordered(const Graph& graph) {
    require_edges(graph);
    return label_ordered(graph, first_m_primes(graph.edge_count()));
}

void seeded_shuffle(std::span<Prime> values, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = values.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(draw_inclusive(rng, i - 1));
        std::swap(values[i - 1], values[j]);
    }
}

EdgeLabeling label_arbitrary(const Graph& graph, std::uint64_t seed) {
    require_edges(graph);
    const PrimeTable table = first_m_primes(graph.edge_count());
    std::vector<Prime> labels(table.values().begin(), table.values().end());
    seeded_shuffle(labels, seed);
    return EdgeLabeling(graph.fingerprint(), std::move(labels), LabelMode::arbitrary, seed);
}

EdgeLabeling label_explicit(const Graph& graph, std::vector<Prime> assignment) {
    if (assignment.size() != graph.edge_count()) {
        throw LabelLengthError("assignment has " + std::to_string(assignment.size()) +
                               " labels, graph has " + std::to_string(graph.edge_count()) + " edges");
    }
    std::unordered_set<Prime> seen;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (!seen.insert(assignment[i]).second) {
            throw DuplicateLabelError("label " + std::to_string(assignment[i]) + " repeated at position " +
                                      std::to_string(i + 1));
        }
    }
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (!is_prime(assignment[i])) {
            throw NonPrimeLabelError("label " + std::to_string(assignment[i]) + " at position " +
                                     std::to_string(i + 1) + " is not prime");
        }
    }
    return EdgeLabeling(graph.fingerprint(), std::move(assignment), LabelMode::explicit_);
}

} // namespace antimagic
