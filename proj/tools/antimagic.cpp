#include "antimagic/closed_form.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/explorer.hpp"
#include "antimagic/reporting.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace antimagic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCollision = 2;

struct FamilyArgs {
    std::string family;
    std::optional<std::uint64_t> level, n, a, b, d, last_count, left, right;
};

struct LabelArgs {
    std::string mode = "ordered";
    std::uint64_t seed = 0;
    std::vector<Prime> labels;
};

struct OutputArgs {
    std::string format = "json";
    std::string out;
};

void add_family_options(CLI::App& cmd, FamilyArgs& f, bool family_required) {
    auto* opt = cmd.add_option("--family", f.family,
                               "pbt|complete|bipartite|ladder|wheel|hypercube|cbt|double-star");
    if (family_required) opt->required();
    cmd.add_option("--level", f.level, "tree level (pbt), or number of levels (cbt)");
    cmd.add_option("--n", f.n, "vertex parameter (complete, ladder, wheel)");
    cmd.add_option("--a", f.a, "left side (bipartite)");
    cmd.add_option("--b", f.b, "right side (bipartite)");
    cmd.add_option("--d", f.d, "dimension (hypercube)");
    cmd.add_option("--last-count", f.last_count, "vertices on the last level (cbt)");
    cmd.add_option("--left", f.left, "leaves on centre 0 (double-star)");
    cmd.add_option("--right", f.right, "leaves on centre 1 (double-star)");
}

void add_label_options(CLI::App& cmd, LabelArgs& l) {
    cmd.add_option("--mode", l.mode, "ordered|arbitrary|explicit");
    cmd.add_option("--seed", l.seed, "shuffle seed for arbitrary mode");
    cmd.add_option("--labels", l.labels, "comma-separated primes in edge order (explicit mode)")->delimiter(',');
}

void add_output_options(CLI::App& cmd, OutputArgs& o) {
    cmd.add_option("--format", o.format, "json|dot|csv");
    cmd.add_option("--out", o.out, "write to PATH instead of stdout");
}

Family family_of(const std::string& name) {
    const auto f = parse_family(name);
    if (!f) throw InvalidArgument("unknown family '" + name + "'");
    return *f;
}

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag, Family family) {
    if (!v) throw InvalidArgument(std::string(flag) + " is required for " + std::string(family_name(family)));
    return *v;
}

GraphDescriptor descriptor_of(const FamilyArgs& f) {
    const Family family = family_of(f.family);
    GraphDescriptor d{family, {}};
    switch (family) {
    case Family::perfect_binary_tree: d.params["level"] = need(f.level, "--level", family); break;
    case Family::complete:
    case Family::ladder:
    case Family::wheel: d.params["n"] = need(f.n, "--n", family); break;
    case Family::bipartite:
        d.params["a"] = need(f.a, "--a", family);
        d.params["b"] = need(f.b, "--b", family);
        break;
    case Family::hypercube: d.params["d"] = need(f.d, "--d", family); break;
    case Family::complete_binary_tree:
        d.params["levels"] = need(f.level, "--level", family);
        d.params["last_count"] = need(f.last_count, "--last-count", family);
        break;
    case Family::double_star:
        d.params["left"] = need(f.left, "--left", family);
        d.params["right"] = need(f.right, "--right", family);
        break;
    }
    return d;
}

EdgeLabeling make_labeling(const Graph& g, const LabelArgs& l) {
    const auto mode = parse_mode(l.mode);
    if (!mode) throw InvalidArgument("unknown mode '" + l.mode + "'");
    if (*mode != LabelMode::explicit_ && !l.labels.empty()) {
        throw InvalidArgument("--labels requires --mode explicit");
    }
    switch (*mode) {
    case LabelMode::ordered: return label_ordered(g);
    case LabelMode::arbitrary: return label_arbitrary(g, l.seed);
    case LabelMode::explicit_: break;
    }
    if (l.labels.empty()) throw InvalidArgument("--mode explicit requires --labels");
    return label_explicit(g, l.labels);
}

Format format_of(const std::string& name) {
    const auto f = parse_format(name);
    if (!f) throw UnsupportedFormatError("unknown format '" + name + "'");
    return *f;
}

void emit(const OutputArgs& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw Error("cannot open " + o.out + " for writing");
    file << text;
    if (!file) throw Error("failed writing " + o.out);
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path);
    std::ostringstream s;
    s << file.rdbuf();
    return s.str();
}

int report(const Graph& g, const EdgeLabeling& l, const OutputArgs& o) {
    const WeightReport r = vertex_weights(g, l);
    emit(o, export_artifact(ReportRef{g, r, &l}, format_of(o.format)));
    return r.antimagic ? kExitOk : kExitCollision;
}

std::string formula_text(std::uint32_t level, std::optional<std::uint32_t> k, std::optional<std::uint64_t> n) {
    std::ostringstream s;
    s << "level: " << level << "\nvertices: " << num_vertices(level) << "\nedges: " << num_edges(level) << "\n";
    if (level == 0) {
        s << "root: 0\n";
        return s.str();
    }
    const TreeFormulaContext ctx(level);
    s << "root: " << root_value(ctx) << "\n";
    if (!k) return s.str();
    const TreeAddress addr{level, *k, n.value_or(1)};
    s << "address: (" << addr.l << ", " << addr.k << ", " << addr.n << ")\n";
    s << "node_value: " << node_value(ctx, addr) << "\n";
    if (addr.k > 0) {
        const IncidentEdges e = incident_edge_indices(addr);
        s << "incident_edges: " << e.left << " " << e.right;
        if (e.parent) s << " " << *e.parent;
        s << "\n";
    }
    return s.str();
}

CensusMode census_mode_of(const std::string& name) {
    if (name == "exhaustive") return CensusMode::exhaustive;
    if (name == "sampled") return CensusMode::sampled;
    throw InvalidArgument("unknown census mode '" + name + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime antimagic labelings: build, verify, explore"};
    app.require_subcommand(1);

    FamilyArgs fam;
    LabelArgs lab;
    OutputArgs out;

    auto* label_cmd = app.add_subcommand("label", "Label a graph and print it (json, dot)");
    add_family_options(*label_cmd, fam, true);
    add_label_options(*label_cmd, lab);
    add_output_options(*label_cmd, out);

    std::string input;
    auto* verify_cmd = app.add_subcommand("verify", "Label a graph and check vertex-weight distinctness");
    add_family_options(*verify_cmd, fam, false);
    add_label_options(*verify_cmd, lab);
    add_output_options(*verify_cmd, out);
    verify_cmd->add_option("--input", input, "graph or labeled-graph JSON written by `label`");

    std::uint32_t f_level = 0;
    std::optional<std::uint32_t> f_k;
    std::optional<std::uint64_t> f_n;
    auto* formula_cmd = app.add_subcommand("formula", "Closed-form weights of a perfect binary tree");
    formula_cmd->add_option("--level", f_level, "tree level l")->required();
    formula_cmd->add_option("--k", f_k, "levels above the leaves (0 = leaves, l = root)");
    formula_cmd->add_option("--n", f_n, "1-based position within the level");
    formula_cmd->add_option("--out", out.out, "write to PATH instead of stdout");

    std::uint32_t max_level = kDefaultMaxTableLevel;
    bool high_memory = false;
    auto* table_cmd = app.add_subcommand("table", "Recompute the tree weight table and list errata");
    table_cmd->add_option("--max-level", max_level, "last level to compute");
    table_cmd->add_flag("--high-memory", high_memory, "allow levels up to 24");
    add_output_options(*table_cmd, out);

    std::optional<std::uint64_t> from, to;
    std::string census;
    std::uint64_t samples = 0;
    std::size_t max_counterexamples = kDefaultMaxCounterexamples;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto* explore_cmd = app.add_subcommand("explore", "Sweep a family under ordered labeling, or run a census");
    add_family_options(*explore_cmd, fam, true);
    add_output_options(*explore_cmd, out);
    explore_cmd->add_option("--from", from, "first value of the family's main parameter");
    explore_cmd->add_option("--to", to, "last value of the family's main parameter");
    explore_cmd->add_option("--census", census, "exhaustive|sampled: census of one graph instead of a sweep");
    explore_cmd->add_option("--samples", samples, "labelings drawn by a sampled census");
    explore_cmd->add_option("--seed", lab.seed, "sampled census seed");
    explore_cmd->add_option("--max-counterexamples", max_counterexamples, "counterexamples kept");
    explore_cmd->add_option("--threads", threads, "census worker threads");

    auto* demo_cmd = app.add_subcommand("demo-collision", "Two degree-3 vertices labeled {11,5,2} and {13,3,2}");
    add_output_options(*demo_cmd, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*label_cmd) {
            const Graph g = build_graph(descriptor_of(fam));
            const EdgeLabeling l = make_labeling(g, lab);
            emit(out, export_artifact(LabeledGraphRef{g, l}, format_of(out.format)));
            return kExitOk;
        }
        if (*verify_cmd) {
            if (!input.empty()) {
                if (!fam.family.empty()) throw InvalidArgument("--input and --family are exclusive");
                LabeledGraph lg = parse_graph_json(read_file(input));
                const bool relabel = verify_cmd->count("--mode") > 0 || !lab.labels.empty();
                if (lg.labeling && !relabel) return report(lg.graph, *lg.labeling, out);
                return report(lg.graph, make_labeling(lg.graph, lab), out);
            }
            if (fam.family.empty()) throw InvalidArgument("verify needs --family or --input");
            const Graph g = build_graph(descriptor_of(fam));
            return report(g, make_labeling(g, lab), out);
        }
        if (*formula_cmd) {
            if (f_n && !f_k) throw InvalidArgument("--n requires --k");
            emit(out, formula_text(f_level, f_k, f_n));
            return kExitOk;
        }
        if (*table_cmd) {
            const auto rows = reproduce_table(max_level, {.high_memory = high_memory});
            emit(out, export_artifact(std::cref(rows), format_of(out.format)));
            return kExitOk;
        }
        if (*explore_cmd) {
            if (!census.empty()) {
                if (from || to) throw InvalidArgument("--census works on one graph; drop --from/--to");
                CensusOptions opts;
                opts.mode = census_mode_of(census);
                opts.seed = lab.seed;
                opts.sample_size = samples;
                opts.max_counterexamples = max_counterexamples;
                opts.threads = threads;
                const CensusResult c = permutation_census(build_graph(descriptor_of(fam)), opts);
                emit(out, export_artifact(std::cref(c), format_of(out.format)));
                return kExitOk;
            }
            if (!from || !to) throw InvalidArgument("explore needs --from and --to, or --census");
            const Family family = family_of(fam.family);
            std::uint64_t fixed = 0;
            if (family == Family::bipartite) fixed = need(fam.a, "--a", family);
            if (family == Family::complete_binary_tree) fixed = need(fam.level, "--level", family);
            if (family == Family::double_star) fixed = need(fam.left, "--left", family);
            const auto entries = sweep_ordered(family_range(family, *from, *to, fixed));
            emit(out, export_artifact(std::cref(entries), format_of(out.format)));
            return kExitOk;
        }
        if (*demo_cmd) {
            const Graph g = double_star(2, 2);
            return report(g, label_explicit(g, {11, 5, 2, 13, 3}), out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
