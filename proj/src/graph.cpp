#include "antimagic/graph.hpp"

#include "antimagic/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

namespace antimagic {

namespace {

struct FamilyNameEntry {
    Family family;
    std::string_view name;
};

constexpr std::array<FamilyNameEntry, 8> kFamilyNames{{
    {Family::perfect_binary_tree, "pbt"},
    {Family::complete, "complete"},
    {Family::bipartite, "bipartite"},
    {Family::ladder, "ladder"},
    {Family::wheel, "wheel"},
    {Family::hypercube, "hypercube"},
    {Family::complete_binary_tree, "cbt"},
    {Family::double_star, "double-star"},
}};

// FNV-1a over 64-bit words.
struct Fnv {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    void add(std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    }
};

GraphDescriptor describe(Family f, std::initializer_list<std::pair<const std::string, std::uint64_t>> p) {
    return GraphDescriptor{f, std::map<std::string, std::uint64_t>(p)};
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

} // namespace

std::string_view family_name(Family family) {
    for (const auto& e : kFamilyNames) {
        if (e.family == family) return e.name;
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& e : kFamilyNames) {
        if (e.name == name) return e.family;
    }
    return std::nullopt;
}

std::uint64_t GraphDescriptor::param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) {
        throw InvalidArgument("family " + std::string(family_name(family)) +
                              " requires parameter '" + key + "'");
    }
    return it->second;
}

std::string GraphDescriptor::to_string() const {
    std::string s(family_name(family));
    s += '(';
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) s += ", ";
        first = false;
        s += k + "=" + std::to_string(v);
    }
    s += ')';
    return s;
}

bool TreeAddress::valid() const noexcept {
    if (l >= 62 || k > l) return false;
    return n >= 1 && n <= (std::uint64_t{1} << (l - k));
}

VertexId tree_vertex(const TreeAddress& addr) {
    if (!addr.valid()) {
        throw InvalidArgument("invalid tree address (l=" + std::to_string(addr.l) +
                              ", k=" + std::to_string(addr.k) + ", n=" + std::to_string(addr.n) + ")");
    }
    const std::uint32_t depth = addr.l - addr.k;
    return static_cast<VertexId>((std::uint64_t{1} << depth) - 1 + (addr.n - 1));
}

TreeAddress tree_address(std::uint32_t l, VertexId v) {
    const std::uint64_t one_based = std::uint64_t{v} + 1;
    const auto depth = static_cast<std::uint32_t>(std::bit_width(one_based) - 1);
    if (depth > l) {
        throw InvalidArgument("vertex " + std::to_string(v) + " outside tree of level " + std::to_string(l));
    }
    return TreeAddress{l, l - depth, one_based - (std::uint64_t{1} << depth) + 1};
}

Graph::Graph(GraphDescriptor descriptor, std::size_t vertex_count, std::vector<Edge> edges,
             std::size_t cap)
    : descriptor_(std::move(descriptor)), vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (edges_.size() > cap || vertex_count_ > cap) {
        throw CapacityError(descriptor_.to_string() + " exceeds the size cap of " + std::to_string(cap));
    }
    require(vertex_count_ >= 1, "graph needs at least one vertex");

    std::vector<std::pair<VertexId, VertexId>> keys;
    keys.reserve(edges_.size());
    offsets_.assign(vertex_count_ + 1, 0);
    for (const Edge& e : edges_) {
        require(e.u < vertex_count_ && e.v < vertex_count_, "edge endpoint out of range");
        require(e.u != e.v, "self-loop at vertex " + std::to_string(e.u));
        keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    std::sort(keys.begin(), keys.end());
    require(std::adjacent_find(keys.begin(), keys.end()) == keys.end(), "duplicate edge");

    for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];
    incidence_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        incidence_[fill[edges_[i].u]++] = i;
        incidence_[fill[edges_[i].v]++] = i;
    }

    Fnv fnv;
    fnv.add(vertex_count_);
    fnv.add(edges_.size());
    for (const Edge& e : edges_) fnv.add((std::uint64_t{e.u} << 32) | e.v);
    fingerprint_ = fnv.h;
}

std::span<const EdgeIndex> Graph::incident(VertexId v) const {
    if (v >= vertex_count_) throw IndexError("vertex " + std::to_string(v) + " out of range");
    return std::span<const EdgeIndex>(incidence_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::optional<TreeAddress> Graph::address_of(VertexId v) const {
    if (descriptor_.family != Family::perfect_binary_tree) return std::nullopt;
    return tree_address(static_cast<std::uint32_t>(descriptor_.param("level")), v);
}

Graph perfect_binary_tree(std::uint32_t l, std::size_t cap) {
    if (l >= 62 || (std::uint64_t{1} << (l + 1)) > cap) {
        throw CapacityError("perfect binary tree of level " + std::to_string(l) +
                            " exceeds the size cap of " + std::to_string(cap));
    }
    const std::uint64_t vertices = (std::uint64_t{1} << (l + 1)) - 1;
    std::vector<Edge> edges;
    edges.reserve(vertices - 1);
    for (std::uint32_t depth = l; depth >= 1; --depth) {
        const std::uint64_t first = (std::uint64_t{1} << depth) - 1;
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << depth); ++j) {
            const auto child = static_cast<VertexId>(first + j);
            edges.push_back({(child - 1) / 2, child});
        }
    }
    return Graph(describe(Family::perfect_binary_tree, {{"level", l}}), vertices, std::move(edges), cap);
}

Graph complete_graph(std::uint32_t n) {
    require(n >= 2, "complete graph needs n >= 2");
    if (std::uint64_t{n} * (n - 1) / 2 > kDefaultPrimeCap) {
        throw CapacityError("complete graph K_" + std::to_string(n) + " exceeds the size cap");
    }
    std::vector<Edge> edges;
    edges.reserve(std::size_t{n} * (n - 1) / 2);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return Graph(describe(Family::complete, {{"n", n}}), n, std::move(edges));
}

Graph complete_bipartite(std::uint32_t a, std::uint32_t b) {
    require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
    if (std::uint64_t{a} * b > kDefaultPrimeCap) {
        throw CapacityError("complete bipartite graph exceeds the size cap");
    }
    std::vector<Edge> edges;
    edges.reserve(std::size_t{a} * b);
    for (VertexId u = 0; u < a; ++u) {
        for (VertexId v = 0; v < b; ++v) edges.push_back({u, a + v});
    }
    return Graph(describe(Family::bipartite, {{"a", a}, {"b", b}}), std::size_t{a} + b, std::move(edges));
}

Graph ladder(std::uint32_t n) {
    require(n >= 1, "ladder needs n >= 1");
    if (n > kDefaultPrimeCap / 3) throw CapacityError("ladder exceeds the size cap");
    std::vector<Edge> edges;
    edges.reserve(3 * std::size_t{n} - 2);
    for (VertexId rail = 0; rail < 2; ++rail) {
        for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({rail * n + i, rail * n + i + 1});
    }
    for (VertexId i = 0; i < n; ++i) edges.push_back({i, n + i});
    return Graph(describe(Family::ladder, {{"n", n}}), 2 * std::size_t{n}, std::move(edges));
}

Graph wheel(std::uint32_t n) {
    require(n >= 3, "wheel needs at least 3 rim vertices");
    if (n > kDefaultPrimeCap / 2) throw CapacityError("wheel exceeds the size cap");
    std::vector<Edge> edges;
    edges.reserve(2 * std::size_t{n});
    for (VertexId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    for (VertexId i = 0; i < n; ++i) edges.push_back({n, i});
    return Graph(describe(Family::wheel, {{"n", n}}), std::size_t{n} + 1, std::move(edges));
}

Graph hypercube(std::uint32_t d) {
    require(d >= 1 && d <= 24, "hypercube dimension must be in 1..24");
    const VertexId count = VertexId{1} << d;
    std::vector<Edge> edges;
    edges.reserve(std::size_t{d} << (d - 1));
    for (VertexId u = 0; u < count; ++u) {
        // Neighbours above u in ascending order: set each clear bit, low to high.
        for (std::uint32_t bit = 0; bit < d; ++bit) {
            if ((u & (VertexId{1} << bit)) == 0) edges.push_back({u, u | (VertexId{1} << bit)});
        }
    }
    return Graph(describe(Family::hypercube, {{"d", d}}), count, std::move(edges));
}

Graph complete_binary_tree(std::uint32_t levels, std::uint64_t last_level_count) {
    require(levels >= 1 && levels < 26, "complete binary tree needs 1 <= levels < 26");
    const std::uint64_t width = std::uint64_t{1} << levels;
    require(last_level_count >= 1 && last_level_count <= width,
            "last_level_count must be in 1.." + std::to_string(width));
    std::vector<Edge> edges;
    edges.reserve(width - 2 + last_level_count);
    auto add_level = [&](std::uint32_t depth, std::uint64_t count) {
        const std::uint64_t first = (std::uint64_t{1} << depth) - 1;
        for (std::uint64_t j = 0; j < count; ++j) {
            const auto child = static_cast<VertexId>(first + j);
            edges.push_back({(child - 1) / 2, child});
        }
    };
    add_level(levels, last_level_count);
    for (std::uint32_t depth = levels - 1; depth >= 1; --depth) add_level(depth, std::uint64_t{1} << depth);
    return Graph(describe(Family::complete_binary_tree, {{"levels", levels}, {"last_count", last_level_count}}),
                 width - 1 + last_level_count, std::move(edges));
}

Graph double_star(std::uint32_t left, std::uint32_t right) {
    if (std::uint64_t{left} + right + 1 > kDefaultPrimeCap) throw CapacityError("double star exceeds the size cap");
    std::vector<Edge> edges;
    edges.reserve(std::size_t{left} + right + 1);
    VertexId next = 2;
    for (std::uint32_t i = 0; i < left; ++i) edges.push_back({0, next++});
    edges.push_back({0, 1});
    for (std::uint32_t i = 0; i < right; ++i) edges.push_back({1, next++});
    return Graph(describe(Family::double_star, {{"left", left}, {"right", right}}), next, std::move(edges));
}

Graph build_graph(const GraphDescriptor& d) {
    auto u32 = [&](const char* key) {
        const std::uint64_t v = d.param(key);
        require(v <= 0xffffffffULL, std::string("parameter ") + key + " too large");
        return static_cast<std::uint32_t>(v);
    };
    switch (d.family) {
    case Family::perfect_binary_tree: return perfect_binary_tree(u32("level"));
    case Family::complete: return complete_graph(u32("n"));
    case Family::bipartite: return complete_bipartite(u32("a"), u32("b"));
    case Family::ladder: return ladder(u32("n"));
    case Family::wheel: return wheel(u32("n"));
    case Family::hypercube: return hypercube(u32("d"));
    case Family::complete_binary_tree: return complete_binary_tree(u32("levels"), d.param("last_count"));
    case Family::double_star: return double_star(u32("left"), u32("right"));
    }
    throw InvalidArgument("unknown family");
}

} // namespace antimagic
