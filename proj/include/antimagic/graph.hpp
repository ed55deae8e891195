#pragma once

#include "antimagic/primes.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antimagic {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

enum class Family {
    perfect_binary_tree,
    complete,
    bipartite,
    ladder,
    wheel,
    hypercube,
    complete_binary_tree,
    double_star,
};

/// Short CLI / serialization name: pbt, complete, bipartite, ladder, wheel,
/// hypercube, cbt, double-star.
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Family tag plus its named integer parameters (e.g. {"level": 3}).
struct GraphDescriptor {
    Family family = Family::perfect_binary_tree;
    std::map<std::string, std::uint64_t> params;

    std::uint64_t param(const std::string& key) const;
    std::string to_string() const;

    friend bool operator==(const GraphDescriptor&, const GraphDescriptor&) = default;
};

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Coordinates inside a perfect binary tree of level l: k counts levels from
/// the bottom (0 = leaves, l = root) and n is the 1-based left-to-right
/// position within that level.
struct TreeAddress {
    std::uint32_t l = 0;
    std::uint32_t k = 0;
    std::uint64_t n = 1;

    bool valid() const noexcept;

    friend bool operator==(const TreeAddress&, const TreeAddress&) = default;
};

/// Level-order vertex id of a perfect-binary-tree address.
/// Throws InvalidArgument for an invalid address.
VertexId tree_vertex(const TreeAddress& addr);
/// Inverse of tree_vertex for a tree of level l.
TreeAddress tree_address(std::uint32_t l, VertexId v);

/// Immutable simple undirected graph. The order of edges() is the canonical
/// edge order of the family that produced it; edge i receives the i-th prime
/// under ordered labeling.
class Graph {
public:
    /// Validates: endpoints in range, no self-loops, no duplicate edges.
    /// Throws InvalidArgument on violation, CapacityError above cap.
    Graph(GraphDescriptor descriptor, std::size_t vertex_count, std::vector<Edge> edges,
          std::size_t cap = kDefaultPrimeCap);

    const GraphDescriptor& descriptor() const noexcept { return descriptor_; }
    Family family() const noexcept { return descriptor_.family; }
    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

    /// Indices of the edges incident to v, ascending.
    std::span<const EdgeIndex> incident(VertexId v) const;
    std::size_t degree(VertexId v) const { return incident(v).size(); }

    /// Hash of vertex count and edge sequence; ties a labeling to its graph.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    /// Offset added to internal ids when reporting them (1 for complete
    /// graphs, whose vertices are numbered 1..n; 0 otherwise).
    VertexId id_base() const noexcept { return descriptor_.family == Family::complete ? 1 : 0; }

    /// Tree address of v; only for perfect binary trees.
    std::optional<TreeAddress> address_of(VertexId v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.descriptor_ == b.descriptor_ && a.vertex_count_ == b.vertex_count_ &&
               a.edges_ == b.edges_;
    }

private:
    GraphDescriptor descriptor_;
    std::size_t vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<EdgeIndex> incidence_;
    std::uint64_t fingerprint_ = 0;
};

/// Perfect binary tree of level l (all leaves at depth l). Vertices are in
/// level order (root 0); edges run bottom level first, left to right within
/// each level, each edge stored as (parent, child).
Graph perfect_binary_tree(std::uint32_t l, std::size_t cap = kDefaultPrimeCap);

/// K_n, vertices 1..n externally (0..n-1 internally), edges in lexicographic
/// (i, j), i < j order.
Graph complete_graph(std::uint32_t n);

/// K_{a,b}: part U = 0..a-1, part V = a..a+b-1; edges U-major, V ascending.
Graph complete_bipartite(std::uint32_t a, std::uint32_t b);

/// P_2 x P_n ladder. Vertex (i, rail) for i in 1..n is id rail*n + i-1.
/// Edge order: bottom rail, top rail, then rungs, each left to right.
Graph ladder(std::uint32_t n);

/// Wheel with n rim vertices 0..n-1 and hub n. Rim cycle (0,1)..(n-1,0)
/// first, then spokes (hub, i) in rim order.
Graph wheel(std::uint32_t n);

/// Q_d on vertices 0..2^d-1; edges sorted by (min, max) endpoint label.
Graph hypercube(std::uint32_t d);

/// Perfect tree of depth levels-1 plus last_level_count leaves at depth
/// `levels`, packed from the left. Level-order ids, edges bottom-up and left
/// to right as for perfect trees.
Graph complete_binary_tree(std::uint32_t levels, std::uint64_t last_level_count);

/// Two adjacent centres 0 and 1 with `left` and `right` pendant leaves.
/// Edge order: centre-0 leaves, the bridge (0,1), centre-1 leaves. With
/// (2, 2) and labels [11,5,2,13,3] both centres weigh 18.
Graph double_star(std::uint32_t left, std::uint32_t right);

/// Builds the graph a descriptor names. Throws InvalidArgument on missing
/// or out-of-range parameters.
Graph build_graph(const GraphDescriptor& descriptor);

} // namespace antimagic
