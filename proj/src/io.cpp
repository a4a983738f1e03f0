#include "bandsep/io.hpp"

#include "bandsep/error.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

namespace bandsep {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

/// Calls fn(line_number, tokens) for every non-blank line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto end = text.find('\n');
    const auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    auto toks = tokens(line);
    if (!toks.empty()) fn(line_no, toks);
  }
}

long long to_int(std::string_view tok, std::size_t line, const char* what) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

Vertex to_vertex(std::string_view tok, std::size_t line, int n) {
  const auto id = to_int(tok, line, "vertex id");
  if (id < 1 || id > n) throw ParseError(line, "vertex id " + std::string(tok) + " out of range 1.." + std::to_string(n));
  return static_cast<Vertex>(id - 1);
}

}  // namespace

Graph parse_gr(std::string_view text) {
  std::optional<int> n;
  long long m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    last_line = line;
    if (t[0] == "c") return;
    if (!n) {
      if (t.size() != 4 || t[0] != "p" || t[1] != "tw") throw ParseError(line, "expected header 'p tw <n> <m>'");
      const auto nn = to_int(t[2], line, "n");
      m = to_int(t[3], line, "m");
      if (nn < 0 || m < 0 || nn > (1 << 30)) throw ParseError(line, "invalid header counts");
      n = static_cast<int>(nn);
      return;
    }
    if (t.size() != 2) throw ParseError(line, "expected edge '<u> <v>'");
    Vertex u = to_vertex(t[0], line, *n);
    Vertex v = to_vertex(t[1], line, *n);
    if (u == v) throw ParseError(line, "self-loop at vertex " + std::string(t[0]));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw ParseError(line, "duplicate edge");
    if (static_cast<long long>(edges.size()) == m) throw ParseError(line, "more edges than declared");
    edges.emplace_back(u, v);
  });
  if (!n) throw ParseError(last_line + 1, "missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(last_line + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(*n, edges);
}

std::string write_gr(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string write_td(const TreeDecomposition& td, int n) {
  auto canon = td;
  canon.canonicalize();
  std::size_t max_bag = 0;
  for (const auto& bag : canon.bags) max_bag = std::max(max_bag, bag.size());
  std::ostringstream out;
  out << "s td " << canon.bags.size() << ' ' << max_bag << ' ' << n << '\n';
  for (std::size_t i = 0; i < canon.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : canon.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [a, b] : canon.edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

TreeDecomposition parse_td(std::string_view text, const Graph& g) {
  const int n = g.num_vertices();
  bool header = false;
  long long bag_count = 0;
  long long max_bag = 0;
  std::vector<std::optional<VertexSet>> bags;
  TreeDecomposition td;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    last_line = line;
    if (t[0] == "c") return;
    if (!header) {
      if (t.size() != 5 || t[0] != "s" || t[1] != "td") throw ParseError(line, "expected header 's td <bags> <max bag> <n>'");
      bag_count = to_int(t[2], line, "bag count");
      max_bag = to_int(t[3], line, "max bag size");
      if (to_int(t[4], line, "n") != n) throw ParseError(line, "header n differs from the graph");
      if (bag_count < 0 || bag_count > (1 << 30)) throw ParseError(line, "invalid bag count");
      bags.resize(static_cast<std::size_t>(bag_count));
      header = true;
      return;
    }
    if (t[0] == "b") {
      if (t.size() < 2) throw ParseError(line, "bag line without id");
      const auto id = to_int(t[1], line, "bag id");
      if (id < 1 || id > bag_count) throw ParseError(line, "bag id out of range");
      auto& slot = bags[static_cast<std::size_t>(id - 1)];
      if (slot) throw ParseError(line, "bag declared twice");
      VertexSet bag;
      for (std::size_t k = 2; k < t.size(); ++k) bag.push_back(to_vertex(t[k], line, n));
      const auto size = bag.size();
      bag = make_vertex_set(std::move(bag));
      if (bag.size() != size) throw ParseError(line, "repeated vertex in bag");
      if (static_cast<long long>(bag.size()) > max_bag) throw ParseError(line, "bag larger than declared maximum");
      slot = std::move(bag);
      return;
    }
    if (t.size() != 2) throw ParseError(line, "expected tree edge '<i> <j>'");
    const auto a = to_int(t[0], line, "bag id");
    const auto b = to_int(t[1], line, "bag id");
    if (a < 1 || a > bag_count || b < 1 || b > bag_count) throw ParseError(line, "tree edge references unknown bag");
    td.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  });
  if (!header) throw ParseError(last_line + 1, "missing header");
  std::size_t largest = 0;
  for (auto& slot : bags) {
    if (!slot) throw ParseError(last_line + 1, "bag missing");
    largest = std::max(largest, slot->size());
    td.bags.push_back(std::move(*slot));
  }
  if (static_cast<long long>(largest) != max_bag && bag_count > 0) {
    throw ParseError(1, "declared max bag size differs from the bags");
  }
  td.canonicalize();
  return td;
}

std::string write_ordering(const Labelling& sigma) {
  std::string out;
  for (Vertex v : sigma.order()) {
    out += std::to_string(v + 1);
    out += '\n';
  }
  return out;
}

Labelling parse_ordering(std::string_view text, int n) {
  std::vector<Vertex> order;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    last_line = line;
    if (t.size() != 1) throw ParseError(line, "expected one vertex id per line");
    const Vertex v = to_vertex(t[0], line, n);
    if (used[static_cast<std::size_t>(v)]) throw ParseError(line, "vertex listed twice");
    used[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
  });
  if (static_cast<int>(order.size()) != n) {
    throw ParseError(last_line + 1, "expected " + std::to_string(n) + " ids, found " + std::to_string(order.size()));
  }
  return Labelling::from_order(std::move(order));
}

std::string_view entry_kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::kExact: return "exact";
    case EntryKind::kUpper: return "upper";
    case EntryKind::kLower: return "lower";
    case EntryKind::kFormula: return "formula";
  }
  return "unknown";
}

std::string_view verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kPass: return "pass";
    case VerdictStatus::kFail: return "fail";
    case VerdictStatus::kConsistent: return "consistent";
    case VerdictStatus::kNotEvaluated: return "not-evaluated";
  }
  return "unknown";
}

std::string write_report(const ReportDocument& report) {
  std::ostringstream out;
  out << "graph\n  n: " << report.n << "\n  m: " << report.m << "\n  max_degree: " << report.max_degree << '\n';

  auto entries = report.entries;
  std::stable_sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  if (!entries.empty()) out << "entries\n";
  for (const auto& e : entries) {
    if (e.kind == EntryKind::kExact && e.certificate.empty()) {
      throw PreconditionError("write_report: exact entry '" + e.name + "' has no certificate");
    }
    out << "  " << e.name << "\n    value: " << e.value << "\n    kind: " << entry_kind_name(e.kind) << '\n';
    if (!e.certificate.empty()) out << "    certificate: " << e.certificate << '\n';
    for (const auto& [k, v] : e.extra) out << "    " << k << ": " << v << '\n';
  }

  auto verdicts = report.verdicts;
  std::stable_sort(verdicts.begin(), verdicts.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  if (!verdicts.empty()) out << "verdicts\n";
  for (const auto& v : verdicts) {
    out << "  " << v.name << "\n    status: " << verdict_status_name(v.status) << '\n';
    if (!v.detail.empty()) out << "    detail: " << v.detail << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename onto " + path + ": " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace bandsep
