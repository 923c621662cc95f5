#include "qpoly/families/corpus.hpp"

#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>

#include "qpoly/errors.hpp"
#include "qpoly/families/builders.hpp"
#include "qpoly/graphs/analysis.hpp"

namespace qpoly::families {

using exact::Rational;

std::string CorpusEntry::file_name() const {
  switch (format) {
    case Format::graph6: return name + ".g6";
    case Format::json_graph: return name + ".graph.json";
    case Format::json_scheme: return name + ".json";
    case Format::json_krein: return name + ".krein.json";
    case Format::json_system: return name + ".json";
  }
  return name;
}

namespace {

CorpusEntry graph(const std::string& family) {
  return {family, Format::graph6, [family] { return Object(graph_by_name(family)); }};
}

CorpusEntry scheme(const std::string& family) {
  return {family + "_scheme", Format::json_scheme, [family] { return Object(schemes::scheme_from_graph(graph_by_name(family))); }};
}

CorpusEntry krein(const std::string& name, std::vector<Rational> b, std::vector<Rational> c) {
  return {name, Format::json_krein, [b, c] { return Object(KreinArray{b[0], b, c}); }};
}

CorpusEntry system(const std::string& family) {
  return {family + "_quotient", Format::json_system,
          [family] { return Object(graphs::intersection_array(graph_by_name(family)).system()); }};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read " + p.string(), ParseError::npos, "path");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> e;
    for (const char* g : {"petersen", "c5", "c6", "k3_3", "heawood", "icosahedron", "cube", "biplane11", "h4_2", "h3_3",
                          "j6_2", "j6_3", "dodecahedron", "line_petersen"})
      e.push_back(graph(g));
    for (const char* s : {"petersen", "c5", "k3_3", "j6_2", "heawood", "cube", "icosahedron", "biplane11", "h3_3", "j6_3",
                          "line_petersen"})
      e.push_back(scheme(s));
    e.push_back(krein("cameron_goethals_2", {15, Rational(21, 2), 1}, {1, Rational(3, 2), 15}));
    e.push_back(krein("cameron_goethals_3", {63, Rational(465, 8), 1}, {1, Rational(15, 8), 63}));
    e.push_back(krein("cube_dual", {3, 2, 1}, {1, 2, 3}));
    e.push_back(krein("h3_3_dual", {6, 4, 2}, {1, 2, 3}));
    e.push_back(krein("perturbed_b2_4", {7, 5, 4}, {1, 1, 7}));
    for (const char* s : {"c5", "petersen", "heawood", "icosahedron", "cube", "h4_2"}) e.push_back(system(s));
    return e;
  }();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw DomainError("no corpus entry named " + name);
}

void write_corpus(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json manifest = nlohmann::json::array();
  for (const auto& e : corpus()) {
    const std::string bytes = emit(e.build(), e.format);
    std::ofstream(dir / e.file_name(), std::ios::binary) << bytes;
    manifest.push_back({{"name", e.name}, {"format", format_name(e.format)}, {"file", e.file_name()}, {"fnv1a64", fnv1a64(bytes)}});
  }
  std::ofstream(dir / "manifest.json", std::ios::binary) << manifest.dump(2) << "\n";
}

std::vector<ManifestCheck> verify_corpus(const std::filesystem::path& dir) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed manifest: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0, "manifest");
  }
  std::vector<ManifestCheck> out;
  for (const auto& m : manifest) {
    ManifestCheck c;
    c.name = m.at("name").get<std::string>();
    c.expected = m.at("fnv1a64").get<std::string>();
    const auto& e = corpus_entry(c.name);
    const std::string bytes = read_file(dir / m.at("file").get<std::string>());
    c.actual = fnv1a64(bytes);
    c.file_matches = c.actual == c.expected;
    c.builder_matches = fnv1a64(emit(e.build(), e.format)) == c.expected;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qpoly::families
