#include "bandsep/error.hpp"
#include "bandsep/generators.hpp"
#include "bandsep/io.hpp"
#include "bandsep/oracles.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace bandsep;

TEST(ParseGr, Examples) {
  EXPECT_EQ(parse_gr("p tw 3 2\n1 2\n2 3\n"), generate(Family::kPath, {.n = 3}));
  const auto two = parse_gr("c two isolated vertices\np tw 2 0\n");
  EXPECT_EQ(two.num_vertices(), 2);
  EXPECT_EQ(two.num_edges(), 0u);
}

TEST(ParseGr, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_gr(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("p tw 2 1\n1 1\n"), 2u);
  EXPECT_EQ(line_of("p tw 3 2\n1 2\n2 1\n"), 3u);
  EXPECT_EQ(line_of("c header next\np tw 3 1\n1 4\n"), 3u);
  EXPECT_EQ(line_of("p td 3 1\n"), 1u);
  EXPECT_EQ(line_of("p tw 3 x\n"), 1u);
  EXPECT_THROW(parse_gr("p tw 3 2\n1 2\n"), ParseError);
  EXPECT_THROW(parse_gr(""), ParseError);
}

TEST(WriteTd, TrivialDecompositionOfTriangle) {
  const TreeDecomposition td{{{0, 1, 2}}, {}};
  EXPECT_EQ(write_td(td, 3), "s td 1 3 3\nb 1 1 2 3\n");
}

TEST(ParseTd, RejectsUnknownVertices) {
  const auto g = generate(Family::kPath, {.n = 5});
  EXPECT_THROW(parse_td("s td 1 2 5\nb 1 1 9\n", g), ParseError);
  EXPECT_THROW(parse_td("s td 1 2 4\nb 1 1 2\n", g), ParseError);
  EXPECT_THROW(parse_td("s td 2 2 5\nb 1 1 2\n1 3\n", g), ParseError);
}

TEST(ParseTd, ParsesEdgesAndComments) {
  const auto g = generate(Family::kPath, {.n = 3});
  const auto td = parse_td("c path\ns td 2 2 3\nb 2 2 3\nb 1 1 2\n2 1\n", g);
  EXPECT_EQ(td.bags, (std::vector<VertexSet>{{0, 1}, {1, 2}}));
  EXPECT_EQ(td.edges, (std::vector<std::pair<int, int>>{{0, 1}}));
}

TEST(Ordering, WriteAndParse) {
  EXPECT_EQ(write_ordering(Labelling::identity(3)), "1\n2\n3\n");
  EXPECT_EQ(parse_ordering("1\n2\n3", 3), Labelling::identity(3));
  EXPECT_EQ(parse_ordering("3\n1\n2\n", 3), Labelling::from_order({2, 0, 1}));
  EXPECT_THROW(parse_ordering("1\n1\n2\n", 3), ParseError);
  EXPECT_THROW(parse_ordering("1\n2\n", 3), ParseError);
}

TEST(RoundTrip, CorpusGraphsAndDecompositions) {
  for (const auto& [name, g] : corpus::small()) {
    const auto text = write_gr(g);
    EXPECT_EQ(parse_gr(text), g) << name;
    EXPECT_EQ(write_gr(parse_gr(text)), text) << name;
    if (g.num_vertices() <= 10) {
      auto td = exact_treewidth(g).witness;
      td.canonicalize();
      const auto td_text = write_td(td, g.num_vertices());
      EXPECT_EQ(parse_td(td_text, g), td) << name;
    }
  }
}

TEST(WriteReport, MetadataOnlyAndStable) {
  ReportDocument doc;
  EXPECT_EQ(write_report(doc), "graph\n  n: 0\n  m: 0\n  max_degree: 0\n");
  doc.entries.push_back({"zeta", "1", EntryKind::kUpper, "labelling", {}});
  doc.entries.push_back({"alpha", "2", EntryKind::kExact, "oracle", {{"witness", "{1}"}}});
  doc.verdicts.push_back({"x <= y", VerdictStatus::kConsistent, "[1, 2] vs [2, 3]"});
  const auto text = write_report(doc);
  EXPECT_EQ(text, write_report(doc));
  EXPECT_LT(text.find("alpha"), text.find("zeta"));
  EXPECT_NE(text.find("status: consistent"), std::string::npos);
}

TEST(WriteReport, ExactEntryNeedsCertificate) {
  ReportDocument doc;
  doc.entries.push_back({"bandwidth", "3", EntryKind::kExact, "", {}});
  EXPECT_THROW(write_report(doc), PreconditionError);
}

TEST(Files, AtomicWriteReplacesContents) {
  const auto dir = std::filesystem::temp_directory_path() / "bandsep_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "g.gr").string();
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  EXPECT_EQ(read_file(path), "second");
  EXPECT_THROW(read_file((dir / "missing").string()), Error);
  std::filesystem::remove_all(dir);
}
