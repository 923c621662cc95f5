#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qpoly/exact/rational.hpp"
#include "qpoly/graphs/graph.hpp"
#include "qpoly/schemes/scheme.hpp"
#include "qpoly/tridiag/system.hpp"

namespace qpoly::families {

enum class Format { graph6, json_graph, json_scheme, json_krein, json_system };

Format parse_format(std::string_view name);
std::string format_name(Format f);

/// Parameter-level class-D scheme: b*_0..b*_{D-1} (b*_0 = m) and c*_1..c*_D.
struct KreinArray {
  exact::Rational m;
  std::vector<exact::Rational> b_star;
  std::vector<exact::Rational> c_star;
  int d() const { return static_cast<int>(b_star.size()); }
  friend bool operator==(const KreinArray&, const KreinArray&) = default;
};

/// {"type": "krein_array", "class": D, "m": "p/q", "b_star": [...], "c_star": [...]}
KreinArray parse_json_krein(std::string_view text);
std::string emit_json_krein(const KreinArray& k);

/// {"type": "relations", "n": N, "relations": [[[x, y], ...], ...]} listing
/// R_0..R_D as ordered pairs.
schemes::AssociationScheme parse_json_scheme(std::string_view text);
std::string emit_json_scheme(const schemes::AssociationScheme& s);

/// {"kappa": "p/q", "alpha": [...], "beta": [...], "gamma": [...]} with
/// alpha_0..alpha_D, beta_0..beta_{D-1}, gamma_1..gamma_D.
tridiag::TridiagonalSystem parse_json_system(std::string_view text);
std::string emit_json_system(const tridiag::TridiagonalSystem& s);

using Object = std::variant<graphs::Graph, schemes::AssociationScheme, KreinArray, tridiag::TridiagonalSystem>;

Object load_text(std::string_view text, Format f);
/// Throws ParseError when the file cannot be read.
Object load(const std::filesystem::path& path, Format f);
/// JSON input whose format is decided by its "type" field ("relations",
/// "krein_array"), "kappa" for systems, graph otherwise.
Format sniff_json(std::string_view text);
std::string emit(const Object& o, Format f);

/// FNV-1a 64-bit hash, rendered as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

}  // namespace qpoly::families
