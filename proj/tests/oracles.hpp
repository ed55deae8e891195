#pragma once

// Independent reference computations for the test suites. Nothing here may
// call into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline bool divides_none(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t i = 2; i * i <= n; ++i) {
        if (n % i == 0) return false;
    }
    return true;
}

/// First m primes by trial division of every candidate.
inline std::vector<std::uint64_t> trial_division_primes(std::size_t m) {
    std::vector<std::uint64_t> out;
    out.reserve(m);
    for (std::uint64_t n = 0; out.size() < m; ++n) {
        if (divides_none(n)) out.push_back(n);
    }
    return out;
}

/// Same result, dividing only by primes found so far; fast enough for 1e5.
inline std::vector<std::uint64_t> incremental_trial_division_primes(std::size_t m) {
    std::vector<std::uint64_t> out;
    out.reserve(m);
    for (std::uint64_t n = 2; out.size() < m; ++n) {
        bool prime = true;
        for (std::uint64_t p : out) {
            if (p * p > n) break;
            if (n % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.push_back(n);
    }
    return out;
}

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Vertex weights by scanning every edge for every vertex.
inline std::vector<std::uint64_t> scan_weights(std::size_t vertices, const EdgeList& edges,
                                               const std::vector<std::uint64_t>& labels) {
    std::vector<std::uint64_t> w(vertices, 0);
    for (std::uint32_t v = 0; v < vertices; ++v) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].first == v || edges[i].second == v) w[v] += labels[i];
        }
    }
    return w;
}

inline bool all_distinct(std::vector<std::uint64_t> w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) return false;
        }
    }
    return true;
}

/// Counts antimagic assignments over all permutations of `labels`, using
/// Heap's algorithm (a different enumeration order from lexicographic).
inline std::uint64_t heap_census(std::size_t vertices, const EdgeList& edges, std::vector<std::uint64_t> labels) {
    const std::size_t n = labels.size();
    std::vector<std::size_t> c(n, 0);
    std::uint64_t count = all_distinct(scan_weights(vertices, edges, labels)) ? 1 : 0;
    std::size_t i = 1;
    while (i < n) {
        if (c[i] < i) {
            std::swap(labels[i % 2 == 0 ? 0 : c[i]], labels[i]);
            if (all_distinct(scan_weights(vertices, edges, labels))) ++count;
            ++c[i];
            i = 1;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    return count;
}

/// Perfect binary tree of level l built recursively by heap numbering
/// (node i has children 2i+1, 2i+2); returns, per vertex, the weight under
/// the bottom-up, left-to-right prime labeling.
inline std::vector<std::uint64_t> tree_weights(unsigned l, const std::vector<std::uint64_t>& primes) {
    const std::size_t vertices = (std::size_t{1} << (l + 1)) - 1;
    std::vector<std::uint64_t> w(vertices, 0);
    std::size_t next = 0;
    for (unsigned depth = l; depth >= 1; --depth) {
        const std::size_t first = (std::size_t{1} << depth) - 1;
        for (std::size_t j = 0; j < (std::size_t{1} << depth); ++j) {
            const std::size_t child = first + j;
            const std::uint64_t label = primes.at(next++);
            w[child] += label;
            w[(child - 1) / 2] += label;
        }
    }
    return w;
}

} // namespace oracle
