#include "antimagic/verifier.hpp"

#include "antimagic/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace antimagic {

WeightReport summarize_weights(std::vector<Weight> weights, std::size_t max_collision_groups) {
    WeightReport report;
    report.weights = std::move(weights);
    const auto& w = report.weights;
    if (!w.empty()) report.max_weight = *std::max_element(w.begin(), w.end());

    std::vector<VertexId> order(w.size());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return w[a] != w[b] ? w[a] < w[b] : a < b;
    });
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i + 1;
        while (j < order.size() && w[order[j]] == w[order[i]]) ++j;
        if (j - i >= 2) {
            ++report.collision_group_count;
            if (report.collisions.size() < max_collision_groups) {
                report.collisions.push_back({w[order[i]], {order.begin() + static_cast<std::ptrdiff_t>(i),
                                                           order.begin() + static_cast<std::ptrdiff_t>(j)}});
            }
        }
        i = j;
    }
    report.antimagic = report.collision_group_count == 0;
    return report;
}

WeightReport vertex_weights(const Graph& graph, const EdgeLabeling& labeling, std::size_t max_collision_groups) {
    if (!labeling.belongs_to(graph)) {
        throw MismatchError("labeling does not belong to " + graph.descriptor().to_string());
    }
    std::vector<Weight> weights(graph.vertex_count(), 0);
    const auto edges = graph.edges();
    const auto labels = labeling.labels();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (VertexId v : {edges[i].u, edges[i].v}) {
            if (__builtin_add_overflow(weights[v], labels[i], &weights[v])) {
                throw OverflowError("weight of vertex " + std::to_string(v) + " overflows 64 bits");
            }
        }
    }
    return summarize_weights(std::move(weights), max_collision_groups);
}

Verdict check_antimagic(const WeightReport& report) {
    return Verdict{report.antimagic, report.collisions};
}

std::string_view violation_name(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::length_mismatch: return "length_mismatch";
    case ViolationKind::duplicate: return "duplicate";
    case ViolationKind::non_prime: return "non_prime";
    case ViolationKind::not_consecutive: return "not_consecutive";
    case ViolationKind::not_first_primes: return "not_first_primes";
    }
    return "unknown";
}

ValidityReport validate_labeling(const Graph& graph, const EdgeLabeling& labeling) {
    ValidityReport report;
    auto add = [&](ViolationKind kind, std::size_t pos, std::string detail) {
        report.violations.push_back({kind, pos, std::move(detail)});
    };
    const auto labels = labeling.labels();
    if (labels.size() != graph.edge_count()) {
        add(ViolationKind::length_mismatch, 0,
            std::to_string(labels.size()) + " labels for " + std::to_string(graph.edge_count()) + " edges");
    }
    std::unordered_map<Prime, std::size_t> first_seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = first_seen.emplace(labels[i], i + 1);
        if (!fresh) {
            add(ViolationKind::duplicate, i + 1,
                std::to_string(labels[i]) + " already used at position " + std::to_string(it->second));
        }
        if (!is_prime(labels[i])) add(ViolationKind::non_prime, i + 1, std::to_string(labels[i]) + " is not prime");
    }

    if (labeling.mode() == LabelMode::explicit_ || labels.empty()) return report;
    const PrimeTable expected = first_m_primes(labels.size());
    if (labeling.mode() == LabelMode::ordered) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] != expected.at(i + 1)) {
                add(ViolationKind::not_consecutive, i + 1,
                    "expected " + std::to_string(expected.at(i + 1)) + ", found " + std::to_string(labels[i]));
                break;
            }
        }
    } else {
        std::vector<Prime> sorted(labels.begin(), labels.end());
        std::sort(sorted.begin(), sorted.end());
        if (!std::equal(sorted.begin(), sorted.end(), expected.values().begin())) {
            add(ViolationKind::not_first_primes, 0,
                "labels are not a permutation of the first " + std::to_string(labels.size()) + " primes");
        }
    }
    return report;
}

InternalTripleAudit audit_internal_triples(const Graph& graph, const EdgeLabeling& labeling) {
    if (graph.family() != Family::perfect_binary_tree) {
        throw InvalidArgument("internal triple audit needs a perfect binary tree");
    }
    if (!labeling.belongs_to(graph)) throw MismatchError("labeling does not belong to graph");
    const auto l = static_cast<std::uint32_t>(graph.descriptor().param("level"));

    InternalTripleAudit audit;
    audit.level = l;
    struct Node {
        std::array<Prime, 3> labels;
        Weight sum;
    };
    std::vector<Node> nodes;
    for (std::uint32_t k = 1; k < l; ++k) {
        bool increasing = true;
        Weight previous_pair = 0;
        for (std::uint64_t n = 1; n <= (std::uint64_t{1} << (l - k)); ++n) {
            const VertexId v = tree_vertex({l, k, n});
            const auto inc = graph.incident(v);
            Node node{};
            for (std::size_t i = 0; i < 3; ++i) node.labels[i] = labeling.label(inc[i]);
            std::sort(node.labels.begin(), node.labels.end());
            node.sum = node.labels[0] + node.labels[1] + node.labels[2];
            const Weight pair = node.labels[0] + node.labels[1];
            if (n > 1 && pair <= previous_pair) increasing = false;
            previous_pair = pair;
            nodes.push_back(node);
        }
        audit.smaller_pair_increasing.push_back(increasing);
    }
    audit.vertices = nodes.size();
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            ++audit.pairs_checked;
            if (nodes[a].sum == nodes[b].sum) ++audit.equal_sum_pairs;
            std::size_t shared = 0;
            for (Prime x : nodes[a].labels) {
                shared += static_cast<std::size_t>(
                    std::count(nodes[b].labels.begin(), nodes[b].labels.end(), x));
            }
            if (shared > 1) ++audit.shared_label_violations;
        }
    }
    return audit;
}

bool weights_increase_within_levels(const Graph& graph, const WeightReport& report) {
    if (graph.family() != Family::perfect_binary_tree) {
        throw InvalidArgument("level monotonicity is defined for perfect binary trees");
    }
    const auto l = static_cast<std::uint32_t>(graph.descriptor().param("level"));
    for (std::uint32_t k = 1; k <= l; ++k) {
        const std::uint64_t width = std::uint64_t{1} << (l - k);
        for (std::uint64_t n = 1; n < width; ++n) {
            if (report.weights[tree_vertex({l, k, n})] >= report.weights[tree_vertex({l, k, n + 1})]) return false;
        }
    }
    return true;
}

} // namespace antimagic
