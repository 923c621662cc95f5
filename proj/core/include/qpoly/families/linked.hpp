#pragma once

#include "qpoly/exact/matrix.hpp"
#include "qpoly/exact/real.hpp"

namespace qpoly::families {

/// Linked system of l+1 copies of a symmetric 2-(v,k,lambda) design,
/// known only at parameter level. eps = +1 or -1 fixes the sign pattern.
struct LinkedSystem {
  long l = 0;
  long v = 0;
  long k = 0;
  long lambda = 0;
  int eps = 1;
};

/// The Cameron-Goethals family for t >= 1: v = 2^{2t}, k = 2^{2t-1} - 2^{t-1},
/// lambda = 2^{2t-2} - 2^{t-1}, l = 2^{2t-1} - 1.
LinkedSystem cameron_goethals(int t);

/// First eigenmatrix with columns R_0..R_3 of valencies
/// 1, lk, l(v-k), v-1 and multiplicities 1, l, v-1, l(v-1).
/// Throws DomainError on inadmissible parameters.
exact::Matrix<exact::Real> linked_system_eigenmatrix(const LinkedSystem& p);

}  // namespace qpoly::families
