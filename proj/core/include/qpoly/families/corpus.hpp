#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "qpoly/families/io.hpp"

namespace qpoly::families {

struct CorpusEntry {
  std::string name;
  Format format;
  std::function<Object()> build;
  std::string file_name() const;
};

/// The shipped corpus in a fixed order.
const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

struct ManifestCheck {
  std::string name;
  bool file_matches = false;   // file bytes hash to the manifest value
  bool builder_matches = false;  // builder output hashes to the manifest value
  std::string expected, actual;
};

/// Writes every entry plus manifest.json into `dir`.
void write_corpus(const std::filesystem::path& dir);
/// Compares the files in `dir` and the builders against manifest.json.
std::vector<ManifestCheck> verify_corpus(const std::filesystem::path& dir);

}  // namespace qpoly::families
