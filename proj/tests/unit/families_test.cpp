#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "qpoly/errors.hpp"
#include "qpoly/families/builders.hpp"
#include "qpoly/families/corpus.hpp"
#include "qpoly/families/io.hpp"
#include "qpoly/graphs/analysis.hpp"

namespace {

using namespace qpoly;
using namespace qpoly::families;
using exact::Rational;
namespace fs = std::filesystem;

TEST(Designs, FanoPairsOnce) {
  const auto f = fano();
  EXPECT_EQ(f.v, 7);
  EXPECT_EQ(f.blocks.size(), 7u);
  for (int x = 0; x < 7; ++x)
    for (int y = x + 1; y < 7; ++y) {
      int count = 0;
      for (const auto& b : f.blocks)
        count += std::count(b.begin(), b.end(), x) && std::count(b.begin(), b.end(), y);
      EXPECT_EQ(count, 1);
    }
  EXPECT_NO_THROW(validate_design(f));
  EXPECT_NO_THROW(validate_design(biplane_11()));
}

TEST(Designs, BrokenDesignRejected) {
  auto f = fano();
  f.blocks[0][0] = f.blocks[0][1];
  EXPECT_THROW(validate_design(f), SemanticError);
}

TEST(Builders, HeawoodIsFanoIncidence) {
  const auto h = incidence_graph(fano());
  EXPECT_EQ(h.order(), 14);
  EXPECT_EQ(h.regular_degree(), 3);
  EXPECT_TRUE(graphs::isomorphic(h, heawood()));
  EXPECT_FALSE(graphs::isomorphic(h, generalized_petersen(7, 2)));
}

TEST(Builders, Arrays) {
  EXPECT_EQ(graphs::intersection_array(icosahedron()), graphs::make_array({5, 2, 1}, {1, 2, 5}));
  EXPECT_EQ(graphs::intersection_array(johnson(6, 3)), graphs::make_array({9, 4, 1}, {1, 4, 9}));
  EXPECT_EQ(graphs::intersection_array(hamming(3, 3)), graphs::make_array({6, 4, 2}, {1, 2, 3}));
  EXPECT_EQ(graphs::intersection_array(dodecahedron()), graphs::make_array({3, 2, 1, 1, 1}, {1, 1, 1, 2, 3}));
}

TEST(Builders, InvalidParameters) {
  EXPECT_THROW(johnson(3, 5), DomainError);
  EXPECT_THROW(cycle(2), DomainError);
  EXPECT_THROW(graph_by_name("no_such_graph"), DomainError);
}

TEST(Builders, NamedGraphsValid) {
  for (const auto& name : graph_names()) {
    if (name.find('<') != std::string::npos) continue;
    const auto g = graph_by_name(name);
    EXPECT_TRUE(g.is_connected()) << name;
  }
}

TEST(Io, KreinRoundTrip) {
  const KreinArray k{15, {15, Rational(21, 2), 1}, {1, Rational(3, 2), 15}};
  EXPECT_EQ(parse_json_krein(emit_json_krein(k)), k);
}

TEST(Io, KreinMalformedRationalNamesField) {
  try {
    parse_json_krein(R"({"type":"krein_array","class":3,"m":"6","b_star":["6","?","1"],"c_star":["1","2","6"]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "b_star[1]");
  }
}

TEST(Io, KreinShapeChecked) {
  EXPECT_THROW(parse_json_krein(R"({"type":"krein_array","class":3,"m":"6","b_star":["6","1"],"c_star":["1","2","6"]})"),
               SemanticError);
  EXPECT_THROW(parse_json_krein(R"({"type":"krein_array","class":3,"m":"6","b_star":["5","1","1"],"c_star":["1","2","6"]})"),
               SemanticError);
  EXPECT_THROW(parse_json_krein(R"({"type":"relations","class":3})"), ParseError);
  EXPECT_THROW(parse_json_krein("{"), ParseError);
}

TEST(Io, SchemeRelationsMustPartition) {
  // Pair (0,1) listed twice and (1,0) missing.
  const char* bad = R"({"type":"relations","n":2,"relations":[[[0,0],[1,1]],[[0,1],[0,1]]]})";
  try {
    parse_json_scheme(bad);
    FAIL();
  } catch (const SemanticError& e) {
    EXPECT_EQ(e.clause(), "partition");
  }
}

TEST(Io, SchemeRoundTrip) {
  const auto s = schemes::scheme_from_graph(heawood());
  const auto t = parse_json_scheme(emit_json_scheme(s));
  EXPECT_EQ(t.relation, s.relation);
  EXPECT_EQ(t.p, s.p);
}

TEST(Io, SystemRoundTrip) {
  const auto s = graphs::intersection_array(icosahedron()).system();
  const auto t = parse_json_system(emit_json_system(s));
  EXPECT_EQ(emit_json_system(t), emit_json_system(s));
  EXPECT_THROW(parse_json_system(R"({"kappa":"2","alpha":["0"],"beta":[],"gamma":[]})"), SemanticError);
}

TEST(Io, Sniffing) {
  EXPECT_EQ(sniff_json(R"({"type":"relations"})"), Format::json_scheme);
  EXPECT_EQ(sniff_json(R"({"type":"krein_array"})"), Format::json_krein);
  EXPECT_EQ(sniff_json(R"({"kappa":"1"})"), Format::json_system);
  EXPECT_EQ(sniff_json(R"({"n":2,"edges":[]})"), Format::json_graph);
  EXPECT_EQ(parse_format("graph6"), Format::graph6);
  EXPECT_THROW(parse_format("sparse6"), DomainError);
}

TEST(Io, Fnv) {
  EXPECT_EQ(fnv1a64(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64("a"), "af63dc4c8601ec8c");
}

TEST(Corpus, RoundTripEveryEntry) {
  for (const auto& e : corpus()) {
    const Object o = e.build();
    const std::string text = emit(o, e.format);
    EXPECT_EQ(emit(load_text(text, e.format), e.format), text) << e.name;
  }
}

TEST(Corpus, ShippedManifestMatches) {
  const auto checks = verify_corpus(QPOLY_CORPUS_DIR);
  EXPECT_EQ(checks.size(), corpus().size());
  for (const auto& c : checks) {
    EXPECT_TRUE(c.file_matches) << c.name;
    EXPECT_TRUE(c.builder_matches) << c.name;
  }
}

TEST(Corpus, ShippedGraphsLoad) {
  const auto g = std::get<graphs::Graph>(load(fs::path(QPOLY_CORPUS_DIR) / "petersen.g6", Format::graph6));
  EXPECT_EQ(g, petersen());
  EXPECT_THROW(load(fs::path(QPOLY_CORPUS_DIR) / "missing.g6", Format::graph6), ParseError);
}

TEST(Corpus, WriteThenVerifyDetectsTampering) {
  const fs::path dir = fs::temp_directory_path() / "qpoly_corpus_test";
  fs::remove_all(dir);
  write_corpus(dir);
  for (const auto& c : verify_corpus(dir)) EXPECT_TRUE(c.file_matches && c.builder_matches) << c.name;
  std::ofstream(dir / "c5.g6", std::ios::binary) << "Dh_";
  bool flagged = false;
  for (const auto& c : verify_corpus(dir))
    if (c.name == "c5") flagged = !c.file_matches;
  EXPECT_TRUE(flagged);
  fs::remove_all(dir);
}

TEST(Corpus, UnknownEntry) { EXPECT_THROW(corpus_entry("nothing"), DomainError); }

}  // namespace
