#include "iwahori/linalg.hpp"

#include <cstdlib>
#include <utility>

namespace iwahori {

Rational determinant(RationalMatrix m) {
  const Eigen::Index n = m.rows();
  Rational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && is_zero(m(pivot, col)))
      ++pivot;
    if (pivot == n)
      return Rational(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col)))
        continue;
      const Rational f = m(r, col) / m(col, col);
      m.row(r) -= f * m.row(col);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& input) {
  const Eigen::Index n = input.rows();
  RationalMatrix a = input;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && is_zero(a(pivot, col)))
      ++pivot;
    if (pivot == n)
      return std::nullopt;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational p = a(col, col);
    a.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col)))
        continue;
      const Rational f = a(r, col);
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

std::optional<IntMatrix> integral_inverse(const IntMatrix& m) {
  auto inv = inverse(m.cast<Rational>());
  if (!inv || !is_integral(*inv))
    return std::nullopt;
  return to_integer(*inv);
}

namespace {

// Smallest nonzero |entry| in the trailing block, preferring (t, t) on ties.
bool find_pivot(const IntMatrix& a, Eigen::Index t, Eigen::Index& pr, Eigen::Index& pc) {
  Int best = 0;
  if (a(t, t) != 0) {
    best = std::abs(a(t, t));
    pr = pc = t;
  }
  for (Eigen::Index j = t; j < a.cols(); ++j)
    for (Eigen::Index i = t; i < a.rows(); ++i) {
      const Int v = std::abs(a(i, j));
      if (v != 0 && (best == 0 || v < best)) {
        best = v;
        pr = i;
        pc = j;
      }
    }
  return best != 0;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const Eigen::Index m = a.rows(), n = a.cols();
  IntMatrix left = IntMatrix::Identity(m, m);
  IntMatrix right = IntMatrix::Identity(n, n);
  const Eigen::Index steps = std::min(m, n);

  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      Eigen::Index pr = t, pc = t;
      if (!find_pivot(a, t, pr, pc))
        break;
      if (pr != t) {
        a.row(pr).swap(a.row(t));
        left.row(pr).swap(left.row(t));
      }
      if (pc != t) {
        a.col(pc).swap(a.col(t));
        right.col(pc).swap(right.col(t));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (a(i, t) == 0)
          continue;
        const Int q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        left.row(i) -= q * left.row(t);
        if (a(i, t) != 0)
          clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (a(t, j) == 0)
          continue;
        const Int q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        right.col(j) -= q * right.col(t);
        if (a(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;
      // Divisibility of the remaining block by the pivot.
      Eigen::Index bad_row = -1;
      for (Eigen::Index j = t + 1; j < n && bad_row < 0; ++j)
        for (Eigen::Index i = t + 1; i < m; ++i)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0)
        break;
      a.row(t) += a.row(bad_row);
      left.row(t) += left.row(bad_row);
    }
    if (a(t, t) < 0) {
      a.row(t) *= -1;
      left.row(t) *= -1;
    }
  }

  SmithForm out;
  out.left = std::move(left);
  out.right = std::move(right);
  out.diagonal.resize(steps);
  for (Eigen::Index t = 0; t < steps; ++t)
    out.diagonal(t) = a(t, t);
  return out;
}

}  // namespace iwahori
