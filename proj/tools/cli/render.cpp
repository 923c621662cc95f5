#include <sstream>

#include "cli/app.hpp"

namespace qpoly::cli {

namespace {

bool is_algebraic(const Json& j) { return j.is_object() && j.contains("poly") && j.contains("interval") && j.contains("approx"); }

std::string poly_text(const Json& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    std::string c = coeffs[i].get<std::string>();
    if (c == "0") continue;
    const bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (i == 0 || c != "1") out += c + (i > 0 ? "*" : "");
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string scalar(const Json& j) {
  if (is_algebraic(j))
    return "~" + j["approx"].get<std::string>() + " (root of " + poly_text(j["poly"]) + " in [" + j["interval"][0].get<std::string>() +
           ", " + j["interval"][1].get<std::string>() + "])";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object() || is_algebraic(j);
  for (const auto& x : j)
    if (x.is_array() || (x.is_object() && !is_algebraic(x))) return false;
  return true;
}

std::string inline_array(const Json& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
  return s + "]";
}

void emit(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object() && !is_algebraic(j)) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (flat(v)) {
        os << pad << it.key() << ": ";
        os << (v.is_array() ? inline_array(v) : scalar(v)) << "\n";
      } else {
        os << pad << it.key() << ":\n";
        emit(os, v, indent + 2);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& x : j) {
      if (flat(x)) {
        os << pad << "- " << (x.is_array() ? inline_array(x) : scalar(x)) << "\n";
      } else {
        os << pad << "-\n";
        emit(os, x, indent + 2);
      }
    }
    return;
  }
  os << pad << scalar(j) << "\n";
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  emit(os, j, 0);
  return os.str();
}

}  // namespace qpoly::cli
