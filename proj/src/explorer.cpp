#include "antimagic/explorer.hpp"

#include "antimagic/errors.hpp"

#include <algorithm>
#include <thread>

namespace antimagic {

namespace {

// Per-worker scratch so the inner loop does not allocate.
class WeightScratch {
public:
    explicit WeightScratch(const Graph& graph) : graph_(graph), weights_(graph.vertex_count()), sorted_(weights_) {}

    const std::vector<Weight>& compute(std::span<const Prime> labels) {
        std::fill(weights_.begin(), weights_.end(), 0);
        const auto edges = graph_.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            weights_[edges[i].u] += labels[i];
            weights_[edges[i].v] += labels[i];
        }
        return weights_;
    }

    bool distinct() {
        sorted_ = weights_;
        std::sort(sorted_.begin(), sorted_.end());
        return std::adjacent_find(sorted_.begin(), sorted_.end()) == sorted_.end();
    }

private:
    const Graph& graph_;
    std::vector<Weight> weights_;
    std::vector<Weight> sorted_;
};

struct ShardResult {
    std::uint64_t tested = 0;
    std::uint64_t antimagic = 0;
    std::vector<Counterexample> counterexamples;
};

void record(ShardResult& shard, WeightScratch& scratch, std::span<const Prime> labels, std::uint64_t index,
            std::size_t max_counterexamples) {
    ++shard.tested;
    scratch.compute(labels);
    if (scratch.distinct()) {
        ++shard.antimagic;
        return;
    }
    if (shard.counterexamples.size() < max_counterexamples) {
        WeightReport report = summarize_weights(scratch.compute(labels));
        shard.counterexamples.push_back({index, {labels.begin(), labels.end()}, std::move(report.collisions)});
    }
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// Runs job(i) for i in [0, count) on up to `threads` workers; job writes only
// to its own slot.
template <typename Job>
void run_sharded(std::size_t count, unsigned threads, Job job) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) job(i);
        });
    }
}

} // namespace

std::uint64_t census_sample_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<SweepEntry> sweep_ordered(const std::vector<GraphDescriptor>& graphs) {
    std::vector<SweepEntry> out;
    out.reserve(graphs.size());
    for (const GraphDescriptor& d : graphs) {
        SweepEntry entry;
        entry.descriptor = d;
        try {
            const Graph g = build_graph(d);
            entry.vertex_count = g.vertex_count();
            entry.edge_count = g.edge_count();
            const WeightReport report = vertex_weights(g, label_ordered(g));
            entry.antimagic = report.antimagic;
            entry.collisions = report.collisions;
            entry.collision_group_count = report.collision_group_count;
        } catch (const Error& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<GraphDescriptor> family_range(Family family, std::uint64_t first, std::uint64_t last,
                                          std::uint64_t fixed) {
    std::vector<GraphDescriptor> out;
    for (std::uint64_t x = first; x <= last; ++x) {
        GraphDescriptor d{family, {}};
        switch (family) {
        case Family::perfect_binary_tree: d.params = {{"level", x}}; break;
        case Family::complete:
        case Family::ladder:
        case Family::wheel: d.params = {{"n", x}}; break;
        case Family::hypercube: d.params = {{"d", x}}; break;
        case Family::bipartite: d.params = {{"a", fixed}, {"b", x}}; break;
        case Family::complete_binary_tree: d.params = {{"levels", fixed}, {"last_count", x}}; break;
        case Family::double_star: d.params = {{"left", fixed}, {"right", x}}; break;
        }
        out.push_back(std::move(d));
    }
    return out;
}

CensusResult permutation_census(const Graph& graph, const CensusOptions& options) {
    const std::size_t e = graph.edge_count();
    if (e == 0) throw UnlabelableError(graph.descriptor().to_string() + " has no edges to label");

    CensusResult result;
    result.descriptor = graph.descriptor();
    result.mode = options.mode;

    std::vector<ShardResult> shards;
    if (options.mode == CensusMode::exhaustive) {
        if (e > kMaxExhaustiveEdges) {
            throw CapacityError("exhaustive census allows at most " + std::to_string(kMaxExhaustiveEdges) +
                                " edges, graph has " + std::to_string(e));
        }
        const PrimeTable table = first_m_primes(e);
        const std::vector<Prime> sorted(table.values().begin(), table.values().end());
        const std::uint64_t per_shard = factorial(e - 1);
        // Shard s holds the permutations starting with the s-th smallest
        // prime, i.e. lexicographic ranks [s * (e-1)!, (s+1) * (e-1)!).
        shards.resize(e);
        run_sharded(e, options.threads, [&](std::size_t s) {
            WeightScratch scratch(graph);
            std::vector<Prime> perm;
            perm.push_back(sorted[s]);
            for (std::size_t i = 0; i < e; ++i) {
                if (i != s) perm.push_back(sorted[i]);
            }
            std::uint64_t rank = s * per_shard;
            do {
                record(shards[s], scratch, perm, rank++, options.max_counterexamples);
            } while (std::next_permutation(perm.begin() + 1, perm.end()));
        });
    } else {
        if (options.sample_size == 0) throw InvalidArgument("sampled census needs sample_size >= 1");
        result.seed = options.seed;
        result.sample_size = options.sample_size;
        const PrimeTable table = first_m_primes(e);
        const std::size_t chunks = std::max(1u, options.threads);
        const std::uint64_t chunk_len = (options.sample_size + chunks - 1) / chunks;
        shards.resize(chunks);
        run_sharded(chunks, options.threads, [&](std::size_t c) {
            WeightScratch scratch(graph);
            std::vector<Prime> labels;
            const std::uint64_t begin = c * chunk_len;
            const std::uint64_t end = std::min(options.sample_size, begin + chunk_len);
            for (std::uint64_t i = begin; i < end; ++i) {
                labels.assign(table.values().begin(), table.values().end());
                seeded_shuffle(labels, census_sample_seed(options.seed, i));
                record(shards[c], scratch, labels, i, options.max_counterexamples);
            }
        });
    }

    for (ShardResult& shard : shards) {
        result.total_labelings_tested += shard.tested;
        result.antimagic_count += shard.antimagic;
        for (Counterexample& c : shard.counterexamples) {
            if (result.counterexamples.size() >= options.max_counterexamples) break;
            result.counterexamples.push_back(std::move(c));
        }
    }
    return result;
}

} // namespace antimagic
