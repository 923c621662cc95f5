#pragma once

#include <nlohmann/json.hpp>

#include "qpoly/exact/algebraic_real.hpp"
#include "qpoly/exact/expr.hpp"
#include "qpoly/exact/real.hpp"
#include "qpoly/graphs/analysis.hpp"
#include "qpoly/schemes/qpoly.hpp"
#include "qpoly/tridiag/system.hpp"

namespace qpoly::report {

using Json = nlohmann::json;

/// Rationals as "p/q" strings; irrationals as
/// {"poly": [c_0, ..., c_n], "interval": [lo, hi], "approx": "..."}.
Json exact(const exact::Rational& q);
Json exact(const exact::AlgebraicReal& a);
Json exact(const exact::Real& r);
Json exact(const exact::Expr& e);

Json to_json(const exact::RationalPoly& p);
Json to_json(const tridiag::ValidationReport& r);
Json to_json(const tridiag::Inequality& i);
Json to_json(const tridiag::Part1Result& r);
Json to_json(const tridiag::Part2Result& r);
Json to_json(const tridiag::SpectrumReport& r);

Json to_json(const graphs::RegularityReport& r);
Json to_json(const graphs::GraphSpectrum& s);
Json to_json(const graphs::KpyReport& r);
Json to_json(const graphs::IntersectionArray& a);
Json to_json(const graphs::FundamentalBound& b);

Json to_json(const schemes::SchemeReport& r);
Json to_json(const schemes::EigenData& e);
Json to_json(const schemes::KreinReport& r);
Json to_json(const schemes::QPolyStructure& q);
Json to_json(const schemes::Thm41Result& r);
Json to_json(const schemes::DualBound& b);
Json to_json(const schemes::AuditReport& r);
Json to_json(const schemes::Thm51Result& r);

}  // namespace qpoly::report
