#pragma once

#include "bandsep/graph.hpp"
#include "bandsep/tree_decomposition.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bandsep {

/// PACE graph format: comment lines start with 'c', header "p tw <n> <m>",
/// then m lines "<u> <v>" with 1-based ids. Throws ParseError with the line
/// number on malformed input, ids out of range, self-loops or duplicate edges.
Graph parse_gr(std::string_view text);

/// Canonical: header, then edges (u < v) in ascending order.
std::string write_gr(const Graph& g);

/// PACE tree-decomposition format: "s td <#bags> <max bag size> <n>", bag
/// lines "b <i> <v...>", then tree edges "<i> <j>". Bags are numbered from 1.
std::string write_td(const TreeDecomposition& td, int n);

/// Parses a .td for graph g. Rejects unknown vertices and a header whose n
/// differs from g. Does not check decomposition validity.
TreeDecomposition parse_td(std::string_view text, const Graph& g);

/// One 1-based vertex id per line, in position order.
std::string write_ordering(const Labelling& sigma);
Labelling parse_ordering(std::string_view text, int n);

enum class EntryKind { kExact, kUpper, kLower, kFormula };
std::string_view entry_kind_name(EntryKind k);

enum class VerdictStatus { kPass, kFail, kConsistent, kNotEvaluated };
std::string_view verdict_status_name(VerdictStatus s);

struct ReportEntry {
  std::string name;
  std::string value;
  EntryKind kind = EntryKind::kExact;
  /// Certificate reference or oracle tag; required for kExact.
  std::string certificate;
  std::vector<std::pair<std::string, std::string>> extra;
};

struct ReportVerdict {
  std::string name;
  VerdictStatus status = VerdictStatus::kNotEvaluated;
  std::string detail;
};

struct ReportDocument {
  int n = 0;
  std::size_t m = 0;
  int max_degree = 0;
  std::vector<ReportEntry> entries;
  std::vector<ReportVerdict> verdicts;
};

/// Indented key-value tree. Entries and verdicts are emitted sorted by name.
/// Throws PreconditionError if an exact entry lacks a certificate.
std::string write_report(const ReportDocument& report);

/// Writes to a temporary sibling and renames over `path`.
void write_file_atomic(const std::string& path, std::string_view contents);
std::string read_file(const std::string& path);

}  // namespace bandsep
