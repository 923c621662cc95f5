#include "qpoly/families/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qpoly/errors.hpp"

namespace qpoly::families {

using exact::Rational;
using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "graph6") return Format::graph6;
  if (name == "json_graph") return Format::json_graph;
  if (name == "json_scheme") return Format::json_scheme;
  if (name == "json_krein") return Format::json_krein;
  if (name == "json_system") return Format::json_system;
  throw DomainError("unknown format: " + std::string(name));
}

std::string format_name(Format f) {
  switch (f) {
    case Format::graph6: return "graph6";
    case Format::json_graph: return "json_graph";
    case Format::json_scheme: return "json_scheme";
    case Format::json_krein: return "json_krein";
    case Format::json_system: return "json_system";
  }
  return "";
}

namespace {

json parse_object(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object", 0);
  return j;
}

const json& field(const json& j, const std::string& name) {
  if (!j.contains(name)) throw ParseError("missing field", ParseError::npos, name);
  return j.at(name);
}

Rational rational_field(const json& v, const std::string& name) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ParseError("expected a rational string", ParseError::npos, name);
  try {
    return exact::parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(std::string("malformed rational: ") + e.what(), ParseError::npos, name);
  }
}

std::vector<Rational> rational_list(const json& j, const std::string& name) {
  const json& a = field(j, name);
  if (!a.is_array()) throw ParseError("expected an array", ParseError::npos, name);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_field(a[i], name + "[" + std::to_string(i) + "]"));
  return out;
}

json rational_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(exact::to_string(q));
  return a;
}

json real_array(const std::vector<exact::Real>& v, std::size_t from, std::size_t to) {
  json a = json::array();
  for (std::size_t i = from; i < to; ++i) {
    auto q = v[i].as_rational();
    if (!q) throw DomainError("only rational systems serialize to JSON");
    a.push_back(exact::to_string(*q));
  }
  return a;
}

}  // namespace

KreinArray parse_json_krein(std::string_view text) {
  json j = parse_object(text);
  const json& type = field(j, "type");
  if (!type.is_string() || type.get<std::string>() != "krein_array")
    throw ParseError("type must be \"krein_array\"", ParseError::npos, "type");
  const json& cls = field(j, "class");
  if (!cls.is_number_integer()) throw ParseError("class must be an integer", ParseError::npos, "class");
  KreinArray k;
  k.m = rational_field(field(j, "m"), "m");
  k.b_star = rational_list(j, "b_star");
  k.c_star = rational_list(j, "c_star");
  const auto d = cls.get<long long>();
  if (d < 2) throw SemanticError("class must be at least 2", "class");
  if (k.b_star.size() != static_cast<std::size_t>(d) || k.c_star.size() != static_cast<std::size_t>(d))
    throw SemanticError("b_star and c_star must each have `class` entries", "shape");
  if (k.b_star[0] != k.m) throw SemanticError("b_star[0] must equal m", "kappa");
  if (k.c_star[0] != 1) throw SemanticError("c_star[0] must equal 1", "gamma1");
  return k;
}

std::string emit_json_krein(const KreinArray& k) {
  json j;
  j["type"] = "krein_array";
  j["class"] = k.d();
  j["m"] = exact::to_string(k.m);
  j["b_star"] = rational_array(k.b_star);
  j["c_star"] = rational_array(k.c_star);
  return j.dump();
}

schemes::AssociationScheme parse_json_scheme(std::string_view text) {
  json j = parse_object(text);
  const json& type = field(j, "type");
  if (!type.is_string() || type.get<std::string>() != "relations")
    throw ParseError("type must be \"relations\"", ParseError::npos, "type");
  const json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 2000)
    throw ParseError("n must be an integer in [1, 2000]", ParseError::npos, "n");
  const json& rels = field(j, "relations");
  if (!rels.is_array()) throw ParseError("expected an array", ParseError::npos, "relations");
  std::vector<std::vector<std::pair<int, int>>> pairs;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string name = "relations[" + std::to_string(i) + "]";
    if (!rels[i].is_array()) throw ParseError("expected an array of pairs", ParseError::npos, name);
    pairs.emplace_back();
    for (std::size_t t = 0; t < rels[i].size(); ++t) {
      const json& p = rels[i][t];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        throw ParseError("pair must be two integers", ParseError::npos, name + "[" + std::to_string(t) + "]");
      pairs.back().emplace_back(p[0].get<int>(), p[1].get<int>());
    }
  }
  return schemes::scheme_from_pairs(n.get<int>(), pairs);
}

std::string emit_json_scheme(const schemes::AssociationScheme& s) {
  if (!s.has_points()) throw DomainError("scheme has no point set");
  json j;
  j["type"] = "relations";
  j["n"] = s.n;
  json rels = json::array();
  for (int i = 0; i <= s.d; ++i) {
    json r = json::array();
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y)
        if (s.rel(x, y) == i) r.push_back({x, y});
    rels.push_back(std::move(r));
  }
  j["relations"] = std::move(rels);
  return j.dump();
}

tridiag::TridiagonalSystem parse_json_system(std::string_view text) {
  json j = parse_object(text);
  const Rational kappa = rational_field(field(j, "kappa"), "kappa");
  auto conv = [](const std::vector<Rational>& v) { return std::vector<exact::Real>(v.begin(), v.end()); };
  auto alpha = rational_list(j, "alpha");
  auto beta = rational_list(j, "beta");
  auto gamma = rational_list(j, "gamma");
  if (alpha.size() < 3 || beta.size() + 1 != alpha.size() || gamma.size() + 1 != alpha.size())
    throw SemanticError("need alpha_0..alpha_D, beta_0..beta_{D-1}, gamma_1..gamma_D with D >= 2", "shape");
  return tridiag::TridiagonalSystem::from_arrays(kappa, conv(alpha), conv(beta), conv(gamma));
}

std::string emit_json_system(const tridiag::TridiagonalSystem& s) {
  json j;
  auto k = s.kappa.as_rational();
  if (!k) throw DomainError("only rational systems serialize to JSON");
  const auto d = static_cast<std::size_t>(s.diameter());
  j["kappa"] = exact::to_string(*k);
  j["alpha"] = real_array(s.alpha, 0, d + 1);
  j["beta"] = real_array(s.beta, 0, d);
  j["gamma"] = real_array(s.gamma, 1, d + 1);
  return j.dump();
}

Format sniff_json(std::string_view text) {
  json j = parse_object(text);
  if (j.contains("type") && j["type"].is_string()) {
    const auto t = j["type"].get<std::string>();
    if (t == "relations") return Format::json_scheme;
    if (t == "krein_array") return Format::json_krein;
    throw ParseError("unknown type \"" + t + "\"", ParseError::npos, "type");
  }
  if (j.contains("kappa")) return Format::json_system;
  return Format::json_graph;
}

Object load_text(std::string_view text, Format f) {
  switch (f) {
    case Format::graph6: return graphs::parse_graph6(text);
    case Format::json_graph: return graphs::parse_json_graph(text);
    case Format::json_scheme: return parse_json_scheme(text);
    case Format::json_krein: return parse_json_krein(text);
    case Format::json_system: return parse_json_system(text);
  }
  throw DomainError("unknown format");
}

Object load(const std::filesystem::path& path, Format f) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string(), ParseError::npos, "path");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_text(text, f);
}

std::string emit(const Object& o, Format f) {
  switch (f) {
    case Format::graph6: return graphs::emit_graph6(std::get<graphs::Graph>(o)) + "\n";
    case Format::json_graph: return graphs::emit_json_graph(std::get<graphs::Graph>(o)) + "\n";
    case Format::json_scheme: return emit_json_scheme(std::get<schemes::AssociationScheme>(o)) + "\n";
    case Format::json_krein: return emit_json_krein(std::get<KreinArray>(o)) + "\n";
    case Format::json_system: return emit_json_system(std::get<tridiag::TridiagonalSystem>(o)) + "\n";
  }
  throw DomainError("unknown format");
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qpoly::families
