#include "antimagic/closed_form.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/reporting.hpp"

#include "doctest.h"
#include "json.hpp"

#include <sstream>

using namespace antimagic;

namespace {

using Cells = std::vector<std::optional<std::uint64_t>>;

Cells computed_of(const TableRow& r) { return {r.computed.begin(), r.computed.end()}; }

constexpr std::optional<std::uint64_t> none = std::nullopt;

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST_CASE("table rows 2..5 match the published values cell for cell") {
    const auto rows = reproduce_table(5);
    REQUIRE(rows.size() == 6);
    CHECK(computed_of(rows[2]) == Cells{16, 25, none, none, none, none, none, 24, 7});
    CHECK(computed_of(rows[3]) == Cells{28, 41, 55, 93, 111, none, none, 84, 15});
    CHECK(computed_of(rows[4]) == Cells{64, 73, 91, 217, 239, 255, 307, 222, 31});
    CHECK(computed_of(rows[5]) == Cells{142, 151, 173, 503, 529, 553, 725, 576, 63});
    for (std::uint32_t l = 1; l <= 5; ++l) {
        CAPTURE(l);
        CHECK(rows[l].all_match());
        CHECK(rows[l].oracle_checked);
        CHECK(rows[l].oracle_agrees);
    }
    CHECK(rows[1].computed[7] == 5);
}

TEST_CASE("errata up to level 20") {
    const auto rows = reproduce_table(20);
    const auto errata = table_errata(rows);
    REQUIRE(errata.size() == 2);

    // The lone vertex of a level-0 tree has no incident edges.
    CHECK(errata[0].level == 0);
    CHECK(errata[0].column == "Root value");
    CHECK(errata[0].published == 2);
    CHECK(errata[0].computed == 0);

    // Level-12 root: the closed form and the direct sum agree on 167970.
    CHECK(errata[1].level == 12);
    CHECK(errata[1].column == "Root value");
    CHECK(errata[1].published == 267970);
    CHECK(errata[1].computed == 167970);
    CHECK(rows[12].oracle_agrees);
    const PrimeTable p = first_m_primes(num_edges(12));
    CHECK(*errata[1].computed == p.at(8189) + p.at(8190));

    for (std::uint32_t l = 0; l <= 12; ++l) CHECK(rows[l].oracle_agrees);
    for (std::uint32_t l = 13; l <= 20; ++l) CHECK_FALSE(rows[l].oracle_checked);
}

TEST_CASE("table level caps") {
    CHECK_THROWS_AS(reproduce_table(21), CapacityError);
    CHECK_THROWS_AS(reproduce_table(25, {.high_memory = true}), CapacityError);
}

TEST_CASE("published table fixture shape") {
    const auto& t = published_table();
    REQUIRE(t.size() == 25);
    for (std::uint32_t l = 0; l < t.size(); ++l) CHECK(t[l][8] == (std::uint64_t{1} << (l + 1)) - 1);
}

TEST_CASE("table CSV uses the published headers") {
    const auto rows = reproduce_table(3);
    const std::string csv = export_artifact(std::cref(rows), Format::csv);
    CHECK(first_line(csv) ==
          "\"Level, l\",\"w1, l-1\",\"w2, l-1\",\"w3, l-1\",\"w1, l-2\",\"w2, l-2\",\"w3, l-2\",\"w1, l-3\","
          "Root value,No. of Nodes,\"w1, l-1 status\",\"w2, l-1 status\",\"w3, l-1 status\",\"w1, l-2 status\","
          "\"w2, l-2 status\",\"w3, l-2 status\",\"w1, l-3 status\",Root value status,No. of Nodes status,oracle");
    CHECK(csv.find("\n2,16,25,-,-,-,-,-,24,7,match,match,absent,") != std::string::npos);

    const auto j = nlohmann::json::parse(export_artifact(std::cref(rows), Format::json));
    CHECK(j["rows"].size() == 4);
    CHECK(j["errata"].size() == 1);
}

TEST_CASE("graph and labeling JSON round trip") {
    std::vector<Graph> graphs{perfect_binary_tree(3), complete_graph(5),  complete_bipartite(2, 3),
                              ladder(4),              wheel(6),           hypercube(3),
                              complete_binary_tree(3, 5), double_star(2, 2), perfect_binary_tree(0)};
    for (const Graph& g : graphs) {
        CAPTURE(g.descriptor().to_string());
        const std::string text = export_artifact(std::cref(g), Format::json);
        const LabeledGraph back = parse_graph_json(text);
        CHECK(back.graph == g);
        CHECK_FALSE(back.labeling.has_value());
        CHECK(export_artifact(std::cref(back.graph), Format::json) == text);
        if (g.edge_count() == 0) continue;

        for (const EdgeLabeling& l : {label_ordered(g), label_arbitrary(g, 17)}) {
            const std::string lt = export_artifact(LabeledGraphRef{g, l}, Format::json);
            const LabeledGraph lb = parse_graph_json(lt);
            CHECK(lb.graph == g);
            REQUIRE(lb.labeling.has_value());
            CHECK(*lb.labeling == l);
        }
    }
    const Graph star = double_star(2, 2);
    const EdgeLabeling ex = label_explicit(star, {11, 5, 2, 13, 3});
    CHECK(*parse_graph_json(export_artifact(LabeledGraphRef{star, ex}, Format::json)).labeling == ex);
}

TEST_CASE("graph JSON must describe a generated family member") {
    auto j = nlohmann::json::parse(export_artifact(std::cref(static_cast<const Graph&>(wheel(4))), Format::json));
    j["edges"][0]["v"] = 2;
    CHECK_THROWS_AS(parse_graph_json(j.dump()), ParseError);
    CHECK_THROWS_AS(parse_graph_json("{not json"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"family":"petersen","params":{}})"), ParseError);
}

TEST_CASE("weight report JSON schema") {
    const Graph g = complete_graph(4);
    const EdgeLabeling l = label_ordered(g);
    const WeightReport r = vertex_weights(g, l);
    const auto j = nlohmann::json::parse(export_artifact(ReportRef{g, r, &l}, Format::json));
    CHECK(j["family"] == "complete");
    CHECK(j["params"]["n"] == 4);
    CHECK(j["antimagic"] == true);
    CHECK(j["collisions"].empty());
    REQUIRE(j["vertices"].size() == 4);
    CHECK(j["vertices"][0]["id"] == 1); // complete graphs report 1-based ids
    CHECK(j["vertices"][3]["weight"] == 29);
    CHECK(j["edges"][5]["order_index"] == 6);
    CHECK(j["edges"][5]["label"] == 13);
    CHECK(j["edges"][5]["u"] == 3);
    CHECK(j["edges"][5]["v"] == 4);

    const Graph star = double_star(2, 2);
    const WeightReport bad = vertex_weights(star, label_explicit(star, {11, 5, 2, 13, 3}));
    const auto jb = nlohmann::json::parse(export_artifact(ReportRef{star, bad}, Format::json));
    CHECK(jb["antimagic"] == false);
    CHECK(jb["collisions"][0]["weight"] == 18);
    CHECK(jb["collisions"][0]["vertices"] == nlohmann::json::array({0, 1}));

    const Graph t = perfect_binary_tree(1);
    const auto jt = nlohmann::json::parse(export_artifact(std::cref(t), Format::json));
    CHECK(jt["vertices"][0]["address"]["k"] == 1);
    CHECK(jt["vertices"][2]["address"]["n"] == 2);
}

TEST_CASE("DOT export") {
    const Graph g = perfect_binary_tree(1);
    const EdgeLabeling l = label_ordered(g);
    CHECK(export_artifact(LabeledGraphRef{g, l}, Format::dot) ==
          "graph \"pbt(level=1)\" {\n  0;\n  1;\n  2;\n  0 -- 1 [label=2];\n  0 -- 2 [label=3];\n}\n");
    CHECK(export_artifact(std::cref(g), Format::dot).find("label") == std::string::npos);
}

TEST_CASE("unsupported format pairs") {
    const Graph g = complete_graph(3);
    const WeightReport r = vertex_weights(g, label_ordered(g));
    CHECK_THROWS_AS(export_artifact(std::cref(g), Format::csv), UnsupportedFormatError);
    CHECK_THROWS_AS(export_artifact(ReportRef{g, r}, Format::dot), UnsupportedFormatError);
    const auto rows = reproduce_table(2);
    CHECK_THROWS_AS(export_artifact(std::cref(rows), Format::dot), UnsupportedFormatError);
    const CensusResult c = permutation_census(g, {});
    CHECK_THROWS_AS(export_artifact(std::cref(c), Format::dot), UnsupportedFormatError);
}

TEST_CASE("census and sweep exports are stable") {
    const CensusResult c = permutation_census(complete_bipartite(2, 3), {});
    const std::string csv = export_artifact(std::cref(c), Format::csv);
    CHECK(csv == export_artifact(std::cref(c), Format::csv));
    CHECK(first_line(csv) ==
          "graph,mode,seed,sample_size,total_labelings_tested,antimagic_count,counterexample_index,labels,collisions");
    std::istringstream lines(csv);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 1 + c.counterexamples.size());

    const auto j = nlohmann::json::parse(export_artifact(std::cref(c), Format::json));
    CHECK(j["total_labelings_tested"] == 720);
    CHECK(j["antimagic_count"] == 456);

    const auto sweep = sweep_ordered(family_range(Family::ladder, 1, 5));
    const std::string s = export_artifact(std::cref(sweep), Format::csv);
    CHECK(s.find("\nladder(n=4),8,10,false,") != std::string::npos);
    CHECK(nlohmann::json::parse(export_artifact(std::cref(sweep), Format::json)).size() == 5);
}
