#include "antimagic/reporting.hpp"

#include "antimagic/closed_form.hpp"
#include "antimagic/errors.hpp"

#include "json.hpp"

#include <memory>
#include <sstream>

namespace antimagic {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Weight table
// ---------------------------------------------------------------------------

const std::array<std::string_view, kTableColumns> kTableColumnNames{
    "Level, l", "w1, l-1", "w2, l-1", "w3, l-1", "w1, l-2",
    "w2, l-2",  "w3, l-2", "w1, l-3", "Root value", "No. of Nodes",
};

std::string_view value_column_name(std::size_t c) { return kTableColumnNames.at(c + 1); }

namespace {

// (d, J) of the seven vertex columns: J-th leftmost vertex at k = d.
constexpr std::array<std::pair<std::uint32_t, std::uint64_t>, 7> kVertexColumns{{
    {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1},
}};
constexpr std::size_t kRootColumn = 7;
constexpr std::size_t kNodesColumn = 8;

constexpr std::optional<std::uint64_t> _ = std::nullopt;

TableCells row(std::initializer_list<std::optional<std::uint64_t>> cells) {
    TableCells out{};
    std::size_t i = 0;
    for (const auto& c : cells) out[i++] = c;
    return out;
}

std::optional<TreeAddress> column_address(std::uint32_t l, std::size_t column) {
    if (column == kRootColumn) return TreeAddress{l, l, 1};
    const auto [d, j] = kVertexColumns[column];
    if (d >= l) return std::nullopt;
    if (j > (std::uint64_t{1} << (l - d))) return std::nullopt;
    return TreeAddress{l, d, j};
}

CellStatus compare(const std::optional<std::uint64_t>& computed, const std::optional<std::uint64_t>& published) {
    if (computed && published) return *computed == *published ? CellStatus::match : CellStatus::mismatch;
    if (computed) return CellStatus::computed_only;
    if (published) return CellStatus::published_only;
    return CellStatus::absent;
}

} // namespace

std::string_view cell_status_name(CellStatus status) {
    switch (status) {
    case CellStatus::match: return "match";
    case CellStatus::mismatch: return "erratum";
    case CellStatus::absent: return "absent";
    case CellStatus::computed_only: return "computed-only";
    case CellStatus::published_only: return "published-only";
    }
    return "unknown";
}

const std::vector<TableCells>& published_table() {
    // w1..w3 at l-1, w1..w3 at l-2, w1 at l-3, root value, node count.
    static const std::vector<TableCells> table{
        row({_, _, _, _, _, _, _, 2, 1}),
        row({_, _, _, _, _, _, _, 5, 3}),
        row({16, 25, _, _, _, _, _, 24, 7}),
        row({28, 41, 55, 93, 111, _, _, 84, 15}),
        row({64, 73, 91, 217, 239, 255, 307, 222, 31}),
        row({142, 151, 173, 503, 529, 553, 725, 576, 63}),
        row({318, 329, 355, 1139, 1189, 1219, 1647, 1392, 127}),
        row({732, 745, 763, 2631, 2663, 2695, 3779, 3216, 255}),
        row({1626, 1639, 1661, 5907, 5957, 6001, 8491, 7280, 511}),
        row({3678, 3689, 3715, 13201, 13245, 13271, 18685, 16240, 1023}),
        row({8172, 8183, 8203, 29249, 29287, 29347, 41177, 35676, 2047}),
        row({17886, 17903, 17927, 63955, 64013, 64043, 89871, 77712, 4095}),
        row({38896, 38915, 38941, 138755, 138839, 138863, 194431, 267970, 8191}),
        row({84052, 84065, 84083, 299643, 299681, 299737, 418823, 360964, 16383}),
        row({180516, 180545, 180563, 642763, 642817, 642857, 896883, 772098, 32767}),
        row({386122, 386131, 386153, 1372939, 1372987, 1373043, 1911961, 1643124, 65535}),
        row({821652, 821663, 821687, 2919047, 2919091, 2919267, 4058611, 3485014, 131071}),
        row({1742544, 1742575, 1742603, 6184563, 6184641, 6184689, 8586745, 7362108, 262143}),
        row({3681154, 3681163, 3681215, 13056451, 13056553, 13056643, 18107685, 15508020, 524287}),
        row({7754086, 7754125, 7754143, 27481693, 27481769, 27481885, 38069135, 32580032, 1048575}),
        row({16290078, 16290101, 16290143, 57697399, 57697481, 57697523, 79843061, 68272008, 2097151}),
        row({34136064, 34136089, 34136107, 120840189, 120840259, 120840355, 167071827, 142757070, 4194303}),
        row({71378608, 71378633, 71378665, 252538565, 252538645, 252538709, 348849659, 297896236, 8388607}),
        row({148948146, 148948169, 148948195, 526748179, 526748251, 526748303, 727091047, 620496456, 16777215}),
        row({310248256, 310248355, 310248371, 1096697093, 1096697219, 1096697297, 1512761729, 1290310356,
             33554431}),
    };
    return table;
}

bool TableRow::all_match() const {
    for (std::size_t c = 0; c < kValueColumns; ++c) {
        if (status[c] != CellStatus::match && status[c] != CellStatus::absent) return false;
    }
    return true;
}

std::vector<TableRow> reproduce_table(std::uint32_t max_level, const TableOptions& options) {
    const std::uint32_t cap = options.high_memory ? kHighMemoryMaxTableLevel : kDefaultMaxTableLevel;
    if (max_level > cap) {
        throw CapacityError("table level " + std::to_string(max_level) + " exceeds cap " + std::to_string(cap) +
                            (options.high_memory ? "" : " (use high-memory mode for up to 24)"));
    }
    auto primes = std::make_shared<const PrimeTable>(first_m_primes(num_edges(max_level)));
    const auto& published = published_table();

    std::vector<TableRow> rows;
    for (std::uint32_t l = 0; l <= max_level; ++l) {
        TableRow r;
        r.level = l;
        const TreeFormulaContext ctx(l, primes);
        for (std::size_t c = 0; c <= kRootColumn; ++c) {
            if (auto addr = column_address(l, c)) r.computed[c] = node_value(ctx, *addr);
        }
        r.computed[kNodesColumn] = num_vertices(l);
        if (l < published.size()) r.published = published[l];
        for (std::size_t c = 0; c < kValueColumns; ++c) r.status[c] = compare(r.computed[c], r.published[c]);

        if (l <= options.oracle_max_level) {
            r.oracle_checked = true;
            const Graph g = perfect_binary_tree(l);
            std::vector<Weight> direct(g.vertex_count(), 0);
            if (g.edge_count() > 0) direct = vertex_weights(g, label_ordered(g, *primes)).weights;
            bool agrees = r.computed[kNodesColumn] == g.vertex_count();
            for (std::size_t c = 0; c <= kRootColumn; ++c) {
                if (auto addr = column_address(l, c)) agrees = agrees && direct[tree_vertex(*addr)] == r.computed[c];
            }
            r.oracle_agrees = agrees;
        }
        rows.push_back(r);
    }
    return rows;
}

std::vector<Erratum> table_errata(const std::vector<TableRow>& rows) {
    std::vector<Erratum> out;
    for (const TableRow& r : rows) {
        for (std::size_t c = 0; c < kValueColumns; ++c) {
            if (r.status[c] == CellStatus::match || r.status[c] == CellStatus::absent) continue;
            out.push_back({r.level, value_column_name(c), r.published[c], r.computed[c], r.status[c]});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::optional<Format> parse_format(std::string_view name) {
    if (name == "json") return Format::json;
    if (name == "dot") return Format::dot;
    if (name == "csv") return Format::csv;
    return std::nullopt;
}

namespace {

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

ojson params_json(const GraphDescriptor& d) {
    ojson p = ojson::object();
    for (const auto& [k, v] : d.params) p[k] = v;
    return p;
}

ojson collisions_json(const Graph& g, const std::vector<CollisionGroup>& groups) {
    ojson arr = ojson::array();
    for (const auto& group : groups) {
        ojson ids = ojson::array();
        for (VertexId v : group.vertices) ids.push_back(v + g.id_base());
        arr.push_back({{"weight", group.weight}, {"vertices", ids}});
    }
    return arr;
}

ojson graph_json(const Graph& g, const EdgeLabeling* labeling, const WeightReport* report) {
    ojson j;
    j["family"] = family_name(g.family());
    j["params"] = params_json(g.descriptor());
    j["id_base"] = g.id_base();
    j["vertex_count"] = g.vertex_count();
    ojson vertices = ojson::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ojson vj;
        vj["id"] = v + g.id_base();
        if (auto a = g.address_of(v)) vj["address"] = {{"l", a->l}, {"k", a->k}, {"n", a->n}};
        if (report) vj["weight"] = report->weights[v];
        vertices.push_back(std::move(vj));
    }
    j["vertices"] = std::move(vertices);
    ojson edges = ojson::array();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        ojson ej;
        ej["u"] = g.edges()[i].u + g.id_base();
        ej["v"] = g.edges()[i].v + g.id_base();
        ej["order_index"] = i + 1;
        if (labeling) ej["label"] = labeling->labels()[i];
        edges.push_back(std::move(ej));
    }
    j["edges"] = std::move(edges);
    if (labeling) {
        j["mode"] = mode_name(labeling->mode());
        if (labeling->mode() == LabelMode::arbitrary) j["seed"] = labeling->seed();
    }
    if (report) {
        j["antimagic"] = report->antimagic;
        j["collisions"] = collisions_json(g, report->collisions);
        j["collision_group_count"] = report->collision_group_count;
        j["max_weight"] = report->max_weight;
    }
    return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

std::string graph_dot(const Graph& g, const EdgeLabeling* labeling) {
    std::ostringstream os;
    os << "graph \"" << g.descriptor().to_string() << "\" {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) os << "  " << v + g.id_base() << ";\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        os << "  " << e.u + g.id_base() << " -- " << e.v + g.id_base();
        if (labeling) os << " [label=" << labeling->labels()[i] << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string cell_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

ojson cell_json(const std::optional<std::uint64_t>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    for (std::string_view name : kTableColumnNames) os << csv_field(name) << ',';
    for (std::size_t c = 0; c < kValueColumns; ++c) os << csv_field(std::string(value_column_name(c)) + " status") << ',';
    os << "oracle\n";
    for (const TableRow& r : rows) {
        os << r.level << ',';
        for (std::size_t c = 0; c < kValueColumns; ++c) os << cell_text(r.computed[c]) << ',';
        for (std::size_t c = 0; c < kValueColumns; ++c) os << cell_status_name(r.status[c]) << ',';
        os << (r.oracle_checked ? (r.oracle_agrees ? "agrees" : "disagrees") : "-") << '\n';
    }
    return os.str();
}

ojson table_json(const std::vector<TableRow>& rows) {
    ojson arr = ojson::array();
    for (const TableRow& r : rows) {
        ojson cells = ojson::array();
        for (std::size_t c = 0; c < kValueColumns; ++c) {
            cells.push_back({{"column", value_column_name(c)},
                             {"computed", cell_json(r.computed[c])},
                             {"published", cell_json(r.published[c])},
                             {"status", cell_status_name(r.status[c])}});
        }
        ojson rj{{"level", r.level}, {"cells", std::move(cells)}};
        rj["oracle"] = r.oracle_checked ? ojson(r.oracle_agrees) : ojson(nullptr);
        arr.push_back(std::move(rj));
    }
    ojson errata = ojson::array();
    for (const Erratum& e : table_errata(rows)) {
        errata.push_back({{"level", e.level},
                          {"column", e.column},
                          {"published", cell_json(e.published)},
                          {"computed", cell_json(e.computed)},
                          {"status", cell_status_name(e.status)}});
    }
    return ojson{{"rows", std::move(arr)}, {"errata", std::move(errata)}};
}

std::string labels_text(const std::vector<Prime>& labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? " " : "") + std::to_string(labels[i]);
    return s;
}

std::string collisions_text(const std::vector<CollisionGroup>& groups, VertexId base) {
    std::string s;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(groups[i].weight) + ":";
        for (std::size_t j = 0; j < groups[i].vertices.size(); ++j) {
            s += (j ? " " : "") + std::to_string(groups[i].vertices[j] + base);
        }
    }
    return s;
}

VertexId base_of(const GraphDescriptor& d) { return d.family == Family::complete ? 1 : 0; }

std::string_view census_mode_name(CensusMode m) { return m == CensusMode::exhaustive ? "exhaustive" : "sampled"; }

ojson census_json(const CensusResult& c) {
    ojson j;
    j["family"] = family_name(c.descriptor.family);
    j["params"] = params_json(c.descriptor);
    j["mode"] = census_mode_name(c.mode);
    if (c.mode == CensusMode::sampled) {
        j["seed"] = c.seed;
        j["sample_size"] = c.sample_size;
    }
    j["total_labelings_tested"] = c.total_labelings_tested;
    j["antimagic_count"] = c.antimagic_count;
    ojson cex = ojson::array();
    const VertexId base = base_of(c.descriptor);
    for (const Counterexample& x : c.counterexamples) {
        ojson groups = ojson::array();
        for (const auto& g : x.collisions) {
            ojson ids = ojson::array();
            for (VertexId v : g.vertices) ids.push_back(v + base);
            groups.push_back({{"weight", g.weight}, {"vertices", ids}});
        }
        cex.push_back({{"index", x.index}, {"labels", x.labels}, {"collisions", std::move(groups)}});
    }
    j["counterexamples"] = std::move(cex);
    return j;
}

std::string census_csv(const CensusResult& c) {
    std::ostringstream os;
    os << "graph,mode,seed,sample_size,total_labelings_tested,antimagic_count,counterexample_index,labels,collisions\n";
    const std::string head = csv_field(c.descriptor.to_string()) + "," + std::string(census_mode_name(c.mode)) + "," +
                             std::to_string(c.seed) + "," + std::to_string(c.sample_size) + "," +
                             std::to_string(c.total_labelings_tested) + "," + std::to_string(c.antimagic_count) + ",";
    if (c.counterexamples.empty()) os << head << ",,\n";
    for (const Counterexample& x : c.counterexamples) {
        os << head << x.index << ',' << csv_field(labels_text(x.labels)) << ','
           << csv_field(collisions_text(x.collisions, base_of(c.descriptor))) << '\n';
    }
    return os.str();
}

std::string sweep_csv(const std::vector<SweepEntry>& entries) {
    std::ostringstream os;
    os << "graph,vertices,edges,antimagic,collision_groups,collisions,error\n";
    for (const SweepEntry& e : entries) {
        os << csv_field(e.descriptor.to_string()) << ',' << e.vertex_count << ',' << e.edge_count << ','
           << (e.antimagic ? (*e.antimagic ? "true" : "false") : "-") << ',' << e.collision_group_count << ','
           << csv_field(collisions_text(e.collisions, base_of(e.descriptor))) << ',' << csv_field(e.error) << '\n';
    }
    return os.str();
}

ojson sweep_json(const std::vector<SweepEntry>& entries) {
    ojson arr = ojson::array();
    for (const SweepEntry& e : entries) {
        ojson j;
        j["family"] = family_name(e.descriptor.family);
        j["params"] = params_json(e.descriptor);
        j["vertex_count"] = e.vertex_count;
        j["edge_count"] = e.edge_count;
        j["antimagic"] = e.antimagic ? ojson(*e.antimagic) : ojson(nullptr);
        ojson groups = ojson::array();
        for (const auto& g : e.collisions) {
            ojson ids = ojson::array();
            for (VertexId v : g.vertices) ids.push_back(v + base_of(e.descriptor));
            groups.push_back({{"weight", g.weight}, {"vertices", ids}});
        }
        j["collisions"] = std::move(groups);
        j["collision_group_count"] = e.collision_group_count;
        if (!e.error.empty()) j["error"] = e.error;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string report_csv(const Graph& g, const WeightReport& r) {
    std::ostringstream os;
    os << "vertex,address,weight\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        os << v + g.id_base() << ',';
        if (auto a = g.address_of(v)) os << csv_field("(" + std::to_string(a->k) + "," + std::to_string(a->n) + ")");
        os << ',' << r.weights[v] << '\n';
    }
    return os.str();
}

[[noreturn]] void unsupported(std::string_view artifact, Format f) {
    static constexpr std::array<std::string_view, 3> names{"json", "dot", "csv"};
    throw UnsupportedFormatError(std::string(names[static_cast<std::size_t>(f)]) + " is not supported for " +
                                 std::string(artifact));
}

} // namespace

std::string export_artifact(const Artifact& artifact, Format format) {
    struct Visitor {
        Format f;
        std::string operator()(std::reference_wrapper<const Graph> g) const {
            if (f == Format::json) return dump(graph_json(g, nullptr, nullptr));
            if (f == Format::dot) return graph_dot(g, nullptr);
            unsupported("a graph", f);
        }
        std::string operator()(const LabeledGraphRef& x) const {
            if (!x.labeling.belongs_to(x.graph)) throw MismatchError("labeling does not belong to graph");
            if (f == Format::json) return dump(graph_json(x.graph, &x.labeling, nullptr));
            if (f == Format::dot) return graph_dot(x.graph, &x.labeling);
            unsupported("a labeled graph", f);
        }
        std::string operator()(const ReportRef& x) const {
            if (f == Format::json) return dump(graph_json(x.graph, x.labeling, &x.report));
            if (f == Format::csv) return report_csv(x.graph, x.report);
            unsupported("a weight report", f);
        }
        std::string operator()(std::reference_wrapper<const CensusResult> c) const {
            if (f == Format::json) return dump(census_json(c));
            if (f == Format::csv) return census_csv(c);
            unsupported("a census result", f);
        }
        std::string operator()(std::reference_wrapper<const std::vector<TableRow>> rows) const {
            if (f == Format::json) return dump(table_json(rows));
            if (f == Format::csv) return table_csv(rows);
            unsupported("a table", f);
        }
        std::string operator()(std::reference_wrapper<const std::vector<SweepEntry>> entries) const {
            if (f == Format::json) return dump(sweep_json(entries));
            if (f == Format::csv) return sweep_csv(entries);
            unsupported("a sweep", f);
        }
    };
    return std::visit(Visitor{format}, artifact);
}

LabeledGraph parse_graph_json(std::string_view text) {
    try {
        const ojson j = ojson::parse(text);
        const auto family = parse_family(j.at("family").get<std::string>());
        if (!family) throw ParseError("unknown family '" + j.at("family").get<std::string>() + "'");
        GraphDescriptor d{*family, {}};
        for (const auto& [k, v] : j.at("params").items()) d.params[k] = v.get<std::uint64_t>();
        const Graph expected = build_graph(d);
        const auto base = j.at("id_base").get<VertexId>();
        const auto vertex_count = j.at("vertex_count").get<std::size_t>();

        const auto& ej = j.at("edges");
        std::vector<Edge> edges(ej.size());
        std::vector<Prime> labels;
        const bool labeled = !ej.empty() && ej.front().contains("label");
        if (labeled) labels.resize(ej.size());
        for (const auto& e : ej) {
            const auto idx = e.at("order_index").get<std::size_t>();
            if (idx < 1 || idx > edges.size()) throw ParseError("order_index " + std::to_string(idx) + " out of range");
            edges[idx - 1] = {e.at("u").get<VertexId>() - base, e.at("v").get<VertexId>() - base};
            if (labeled) labels[idx - 1] = e.at("label").get<Prime>();
        }
        Graph g(d, vertex_count, std::move(edges));
        if (!(g == expected)) throw ParseError("edge list does not match " + d.to_string());

        std::optional<EdgeLabeling> labeling;
        if (labeled) {
            const auto mode = parse_mode(j.value("mode", std::string("explicit")));
            if (!mode) throw ParseError("unknown labeling mode");
            labeling.emplace(g.fingerprint(), std::move(labels), *mode, j.value("seed", std::uint64_t{0}));
        }
        return LabeledGraph{std::move(g), std::move(labeling)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed graph JSON: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what());
    }
}

} // namespace antimagic
