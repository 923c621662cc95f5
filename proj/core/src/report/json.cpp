#include "qpoly/report/json.hpp"

namespace qpoly::report {

Json exact(const exact::Rational& q) { return exact::to_string(q); }

Json exact(const exact::AlgebraicReal& a) {
  if (a.is_rational()) return exact(a.rational_value());
  Json coeffs = Json::array();
  const auto prim = a.poly().primitive();
  for (const auto& c : prim.coeffs()) coeffs.push_back(exact::to_string(c));
  const auto fine = a.refined_bits(48);
  const exact::Rational mid = (fine.lo() + fine.hi()) / 2;
  return Json{{"poly", coeffs}, {"interval", {exact::to_string(a.lo()), exact::to_string(a.hi())}},
              {"approx", exact::to_decimal(mid, 10)}};
}

Json exact(const exact::Real& r) {
  if (auto q = r.as_rational()) return exact(*q);
  return exact(r.to_algebraic());
}

Json exact(const exact::Expr& e) { return exact(e.value()); }

Json to_json(const exact::RationalPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(exact::to_string(c));
  return a;
}

namespace {

template <class T>
Json exact_list(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(exact(x));
  return a;
}

}  // namespace

Json to_json(const tridiag::ValidationReport& r) { return Json{{"valid", r.valid}, {"violations", r.violations}}; }

Json to_json(const tridiag::Inequality& i) {
  return Json{{"lhs", exact(i.lhs)}, {"rhs", exact(i.rhs)}, {"relation", i.relation}, {"holds", i.holds}, {"equality", i.equality}};
}

Json to_json(const tridiag::Part1Result& r) {
  Json j = to_json(r.ineq);
  j["consistent"] = r.consistent;
  return j;
}

Json to_json(const tridiag::Part2Result& r) {
  Json branches = Json::array();
  for (const auto& b : r.branches) {
    Json j = to_json(b.ineq);
    j["branch"] = b.branch;
    branches.push_back(std::move(j));
  }
  return Json{{"comparison", r.comparison}, {"branches", branches}, {"consistent", r.consistent}};
}

Json to_json(const tridiag::SpectrumReport& r) {
  Json j{{"eigenvalues", exact_list(r.eigenvalues)}};
  if (!r.f_polys.empty()) {
    Json f = Json::array();
    for (const auto& p : r.f_polys) f.push_back(to_json(p));
    j["f_polys"] = f;
  }
  return j;
}

Json to_json(const graphs::RegularityReport& r) {
  Json j{{"connected", r.connected},
         {"bipartite", r.bipartite},
         {"distance_regularised", r.distance_regularised},
         {"distance_regular", r.distance_regular},
         {"strongly_regular", r.strongly_regular},
         {"distance_biregular", r.distance_biregular},
         {"diameter", r.diameter}};
  j["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  j["regular"] = r.degree.has_value();
  Json around = Json::array();
  for (bool b : r.distance_regular_around) around.push_back(b);
  j["distance_regular_around"] = around;
  return j;
}

Json to_json(const graphs::GraphSpectrum& s) {
  return Json{{"charpoly", to_json(s.charpoly)}, {"eigenvalues", exact_list(s.eigenvalues)}, {"multiplicities", s.multiplicities}};
}

Json to_json(const graphs::KpyReport& r) {
  Json v = Json::array();
  for (const auto& b : r.vertices)
    v.push_back(Json{{"vertex", b.vertex}, {"lhs", exact(b.lhs)}, {"rhs", exact(b.rhs)}, {"holds", b.holds}, {"equality", b.equality}});
  return Json{{"vertices", v},
              {"all_hold", r.all_hold},
              {"equality_everywhere", r.equality_everywhere},
              {"strongly_regular", r.strongly_regular},
              {"consistent", r.consistent}};
}

Json to_json(const graphs::IntersectionArray& a) {
  return Json{{"array", a.to_string()}, {"b", exact_list(std::vector<exact::Rational>(a.b.begin(), a.b.end()))},
              {"c", exact_list(std::vector<exact::Rational>(a.c.begin(), a.c.end()))},
              {"a", exact_list(std::vector<exact::Rational>(a.a.begin(), a.a.end()))}, {"diameter", a.diameter()}};
}

Json to_json(const graphs::FundamentalBound& b) {
  return Json{{"lhs", exact(b.lhs)},       {"rhs", exact(b.rhs)},         {"relation", ">="},
              {"holds", b.holds},          {"equality", b.equality},      {"bipartite", b.bipartite},
              {"tight", b.tight},          {"a1", exact(b.a1)},           {"b1", exact(b.b1)},
              {"k", exact(b.k)}};
}

Json to_json(const schemes::SchemeReport& r) { return Json{{"valid", r.valid}, {"violations", r.violations}}; }

Json to_json(const schemes::EigenData& e) {
  auto matrix = [](const exact::Matrix<exact::Real>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(exact(m(i, j)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return Json{{"n", e.n}, {"class", e.d}, {"P", matrix(e.P)}, {"Q", matrix(e.Q)}, {"multiplicities", exact_list(e.m)},
              {"valencies", exact_list(e.k)}};
}

Json to_json(const schemes::KreinReport& r) {
  return Json{{"nonnegative", r.nonnegative}, {"symmetric", r.symmetric}, {"identity_row", r.identity_row}, {"violations", r.violations}};
}

Json to_json(const schemes::QPolyStructure& q) {
  Json j{{"m", exact(q.m)},
         {"a_star", exact_list(q.a_star)},
         {"b_star", exact_list(q.b_star)},
         {"c_star", exact_list(q.c_star)},
         {"dual_eigenvalues", exact_list(q.dual_eigenvalues)}};
  if (!q.from_parameters()) {
    j["ordering"] = q.ordering;
    j["dual_by_relation"] = exact_list(q.dual_by_relation);
    j["relation_order_descending"] = q.relation_order_descending;
  }
  return j;
}

Json to_json(const schemes::Thm41Result& r) {
  Json j{{"part1", to_json(r.part1)}};
  j["part2"] = r.part2 ? to_json(*r.part2) : Json(nullptr);
  return j;
}

Json to_json(const schemes::DualBound& b) {
  return Json{{"lhs", exact(b.lhs)},           {"rhs", exact(b.rhs)},         {"relation", ">="},
              {"holds", b.holds},              {"equality", b.equality},      {"q_bipartite", b.q_bipartite},
              {"dual_tight", b.dual_tight}};
}

Json to_json(const schemes::AuditReport& r) {
  Json recs = Json::array();
  for (const auto& a : r.records) {
    Json j{{"name", a.name}, {"lhs", exact(a.lhs)}, {"rhs", exact(a.rhs)}, {"relation", a.relation}, {"pass", a.pass}};
    if (!a.note.empty()) j["note"] = a.note;
    recs.push_back(std::move(j));
  }
  return Json{{"records", recs},
              {"all_pass", r.all_pass},
              {"b2star_is_1", r.b2star_is_1},
              {"b1star_eq_c2star", r.b1star_eq_c2star},
              {"q_antipodal", r.q_antipodal},
              {"a3_finding", r.a3_finding}};
}

Json to_json(const schemes::Thm51Result& r) {
  Json ords = Json::array();
  for (const auto& o : r.orderings) {
    Json j{{"ordering", o.ordering}, {"dual_bound", to_json(o.bound)}};
    j["audit"] = o.audit ? to_json(*o.audit) : Json(nullptr);
    ords.push_back(std::move(j));
  }
  Json j{{"dual_tight", r.dual_tight}, {"orderings", ords}, {"consistent", r.consistent}};
  j["incidence_relation"] = r.incidence_relation ? Json(*r.incidence_relation) : Json(nullptr);
  j["design"] = r.design ? Json(*r.design) : Json(nullptr);
  return j;
}

}  // namespace qpoly::report
