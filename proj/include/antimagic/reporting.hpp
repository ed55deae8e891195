#pragma once

#include "antimagic/explorer.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/verifier.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace antimagic {

// ---------------------------------------------------------------------------
// Perfect-binary-tree weight table
// ---------------------------------------------------------------------------

/// Column headers of the published weight table, in order. wJ at level
/// (l - d) is the J-th leftmost vertex d levels above the leaves (k = d,
/// n = J). Every column after "Level, l" is a value column.
inline constexpr std::size_t kTableColumns = 10;
inline constexpr std::size_t kValueColumns = kTableColumns - 1;
extern const std::array<std::string_view, kTableColumns> kTableColumnNames;

/// Header of value column c (0-based, i.e. skipping the level column).
std::string_view value_column_name(std::size_t c);

inline constexpr std::uint32_t kDefaultMaxTableLevel = 20;
inline constexpr std::uint32_t kHighMemoryMaxTableLevel = 24;
inline constexpr std::uint32_t kOracleCrossCheckLevel = 12;

using TableCells = std::array<std::optional<std::uint64_t>, kValueColumns>;

enum class CellStatus {
    match,          // both present and equal
    mismatch,       // both present, values differ: suspected erratum
    absent,         // undefined at this level and blank in the published row
    computed_only,  // we have a value, the published row is blank
    published_only, // the published row has a value the tree cannot define
};

std::string_view cell_status_name(CellStatus status);

/// The published rows for levels 0..24, blanks as nullopt.
const std::vector<TableCells>& published_table();

struct TableRow {
    std::uint32_t level = 0;
    TableCells computed{};
    TableCells published{};
    std::array<CellStatus, kValueColumns> status{};
    /// Whether the computed cells were re-derived by building the tree and
    /// summing incident labels, and if so whether they agreed.
    bool oracle_checked = false;
    bool oracle_agrees = false;

    bool all_match() const;
};

struct Erratum {
    std::uint32_t level = 0;
    std::string_view column;
    std::optional<std::uint64_t> published;
    std::optional<std::uint64_t> computed;
    CellStatus status = CellStatus::mismatch;
};

struct TableOptions {
    bool high_memory = false;
    /// Levels up to this bound are cross-checked by direct summation.
    std::uint32_t oracle_max_level = kOracleCrossCheckLevel;
};

/// Rows for levels 0..max_level computed from the closed-form vertex
/// weights, compared cell by cell with the published values. Published
/// values are never copied into `computed`. Throws CapacityError when
/// max_level exceeds 20 (24 with high_memory).
std::vector<TableRow> reproduce_table(std::uint32_t max_level, const TableOptions& options = {});

/// Every cell whose status is mismatch, computed_only or published_only.
std::vector<Erratum> table_errata(const std::vector<TableRow>& rows);

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

enum class Format { json, dot, csv };

std::optional<Format> parse_format(std::string_view name);

struct LabeledGraphRef {
    const Graph& graph;
    const EdgeLabeling& labeling;
};

struct ReportRef {
    const Graph& graph;
    const WeightReport& report;
    /// Optional: includes edge labels in the output when present.
    const EdgeLabeling* labeling = nullptr;
};

using Artifact = std::variant<std::reference_wrapper<const Graph>, LabeledGraphRef, ReportRef,
                              std::reference_wrapper<const CensusResult>,
                              std::reference_wrapper<const std::vector<TableRow>>,
                              std::reference_wrapper<const std::vector<SweepEntry>>>;

/// Serializes an artifact. Supported pairs:
///   graph, labeled graph   json, dot
///   weight report          json, csv
///   census, table, sweep   json, csv
/// Anything else throws UnsupportedFormatError. Output is byte-stable.
std::string export_artifact(const Artifact& artifact, Format format);

struct LabeledGraph {
    Graph graph;
    std::optional<EdgeLabeling> labeling;
};

/// Reads the JSON written for a graph or labeled graph. The edge list must
/// be exactly the one its family and params generate. Throws ParseError.
LabeledGraph parse_graph_json(std::string_view text);

} // namespace antimagic
