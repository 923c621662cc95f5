#include "qpoly/graphs/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include <nlohmann/json.hpp>

#include "qpoly/errors.hpp"

namespace qpoly::graphs {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw SemanticError("negative vertex count", "order");
  adj_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw SemanticError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v), "vertex_range");
    if (u == v) throw SemanticError("loop at vertex " + std::to_string(u), "simple_loop");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw SemanticError("repeated edge", "simple_multi");
  }
  edges_ = edges.size();
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::distances(int x) const {
  std::vector<int> d(adj_.size(), -1);
  std::deque<int> q{x};
  d[static_cast<std::size_t>(x)] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : neighbors(u)) {
      if (d[static_cast<std::size_t>(v)] < 0) {
        d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
        q.push_back(v);
      }
    }
  }
  return d;
}

bool Graph::is_connected() const {
  if (adj_.empty()) return false;
  auto d = distances(0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::optional<int> Graph::regular_degree() const {
  if (adj_.empty()) return std::nullopt;
  const int k = degree(0);
  for (int v = 1; v < order(); ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

bool Graph::is_complete() const {
  auto k = regular_degree();
  return k && *k == order() - 1;
}

bool Graph::is_bipartite() const {
  std::vector<int> colour(adj_.size(), -1);
  for (int s = 0; s < order(); ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : neighbors(u)) {
        auto& cv = colour[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          q.push_back(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// graph6 ---------------------------------------------------------------

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int byte_value(std::string_view s, std::size_t pos, std::size_t base) {
  if (pos >= s.size()) throw ParseError("truncated graph6 data", base + pos, "graph6");
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("byte out of graph6 range 63..126", base + pos, "graph6");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 input", base, "graph6");
  if (text.front() == ':' || text.front() == ';' || text.front() == '&')
    throw ParseError("sparse6/digraph6 input is not graph6", base, "graph6");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::uint64_t>(byte_value(text, 0, base));
    pos = 1;
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_value(text, i, base));
    pos = 8;
    if (n <= 258047) throw ParseError("non-canonical graph6 size field", base, "graph6");
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_value(text, i, base));
    pos = 4;
    if (n <= 62) throw ParseError("non-canonical graph6 size field", base, "graph6");
  }
  if (n > 100000) throw ParseError("graph6 order too large", base, "graph6");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("truncated graph6 edge data", base + text.size(), "graph6");
  if (text.size() - pos > bytes) throw ParseError("trailing bytes after graph6 data", base + pos + bytes, "graph6");

  std::vector<std::pair<int, int>> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int v = byte_value(text, pos + k / 6, base);
      if ((v >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (k % 6 != 0) {
    const int v = byte_value(text, pos + k / 6, base);
    if ((v & ((1 << (6 - k % 6)) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", base + pos + k / 6, "graph6");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

// JSON ----------------------------------------------------------------

Graph parse_json_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw ParseError("graph JSON must be an object", 0);
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field", ParseError::npos, "n");
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing array field", ParseError::npos, "edges");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > 100000) throw ParseError("vertex count out of range", ParseError::npos, "n");
  std::vector<std::pair<int, int>> edges;
  std::size_t idx = 0;
  for (const auto& e : j["edges"]) {
    const std::string field = "edges[" + std::to_string(idx++) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge must be a pair of integers", ParseError::npos, field);
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_json_graph(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

// Isomorphism ------------------------------------------------------------

namespace {

// Joint colour refinement of two graphs to a stable partition. Colours are
// ranks in a shared key table, so they are comparable across the graphs.
void refine(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
  using Sig = std::pair<int, std::vector<int>>;
  auto signatures = [](const Graph& g, const std::vector<int>& c) {
    std::vector<Sig> sig(c.size());
    for (int v = 0; v < g.order(); ++v) {
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(c[static_cast<std::size_t>(u)]);
      std::sort(nb.begin(), nb.end());
      sig[static_cast<std::size_t>(v)] = {c[static_cast<std::size_t>(v)], std::move(nb)};
    }
    return sig;
  };
  auto classes = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> all(x);
    all.insert(all.end(), y.begin(), y.end());
    std::sort(all.begin(), all.end());
    return std::unique(all.begin(), all.end()) - all.begin();
  };
  while (true) {
    auto sa = signatures(a, ca);
    auto sb = signatures(b, cb);
    std::vector<Sig> keys(sa);
    keys.insert(keys.end(), sb.begin(), sb.end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    auto rank = [&](const Sig& s) { return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), s) - keys.begin()); };
    std::vector<int> na(ca.size()), nb(cb.size());
    for (std::size_t v = 0; v < ca.size(); ++v) na[v] = rank(sa[v]);
    for (std::size_t v = 0; v < cb.size(); ++v) nb[v] = rank(sb[v]);
    const bool stable = classes(na, nb) == classes(ca, cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) return;
  }
}

bool extend(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb) {
  refine(a, b, ca, cb);
  std::vector<int> ha(ca), hb(cb);
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  const int n = a.order();
  // Smallest non-singleton class.
  std::map<int, int> count;
  for (int c : ca) ++count[c];
  int target = -1, best = n + 1;
  for (auto [c, k] : count)
    if (k > 1 && k < best) {
      best = k;
      target = c;
    }
  if (target < 0) {
    std::vector<int> map_(static_cast<std::size_t>(n));
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(cb[static_cast<std::size_t>(v)])] = v;
    for (int v = 0; v < n; ++v) map_[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(ca[static_cast<std::size_t>(v)])];
    for (auto [u, v] : a.edges())
      if (!b.has_edge(map_[static_cast<std::size_t>(u)], map_[static_cast<std::size_t>(v)])) return false;
    return a.size() == b.size();
  }
  const int fresh = -1;
  int va = -1;
  for (int v = 0; v < n; ++v)
    if (ca[static_cast<std::size_t>(v)] == target) {
      va = v;
      break;
    }
  std::vector<int> na = ca;
  na[static_cast<std::size_t>(va)] = fresh;
  for (int vb = 0; vb < n; ++vb) {
    if (cb[static_cast<std::size_t>(vb)] != target) continue;
    std::vector<int> nb = cb;
    nb[static_cast<std::size_t>(vb)] = fresh;
    if (extend(a, b, na, nb)) return true;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.order() == 0) return true;
  std::vector<int> ca(static_cast<std::size_t>(a.order())), cb(static_cast<std::size_t>(b.order()));
  for (int v = 0; v < a.order(); ++v) ca[static_cast<std::size_t>(v)] = a.degree(v);
  for (int v = 0; v < b.order(); ++v) cb[static_cast<std::size_t>(v)] = b.degree(v);
  return extend(a, b, ca, cb);
}

// Random regular graphs -----------------------------------------------------

Graph random_regular(int n, int k, std::uint64_t seed) {
  if (n <= 0 || k < 0 || k >= n || (static_cast<long>(n) * k) % 2 != 0)
    throw DomainError("no k-regular graph with these parameters");
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t m) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
    while (true) {
      std::uint64_t v = rng();
      if (v < limit) return v % m;
    }
  };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(k), v);
    for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[below(i)]);
    std::vector<std::pair<int, int>> edges;
    bool simple = true;
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < points.size(); i += 2) {
      int u = points[i], v = points[i + 1];
      if (u == v || seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
        simple = false;
        break;
      }
      seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    Graph g(n, edges);
    if (g.is_connected()) return g;
  }
  throw DomainError("random_regular: no simple connected pairing found");
}

}  // namespace qpoly::graphs
