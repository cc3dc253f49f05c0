// Exact linear algebra over Z and Q for small dense matrices.

#ifndef IWAHORI_LINALG_HPP_
#define IWAHORI_LINALG_HPP_

#include <optional>

#include "iwahori/core.hpp"

namespace iwahori {

Rational determinant(RationalMatrix m);

inline Rational determinant(const IntMatrix& m) {
  return determinant(RationalMatrix(m.cast<Rational>()));
}

// Gauss-Jordan inverse; std::nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Inverse of a unimodular integer matrix; std::nullopt otherwise.
std::optional<IntMatrix> integral_inverse(const IntMatrix& m);

// left * input * right == diag(diagonal) (padded with zeros when
// rectangular), left and right unimodular, each nonzero diagonal entry
// positive and dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  IntVector diagonal;
};

SmithForm smith_normal_form(const IntMatrix& input);

}  // namespace iwahori

#endif  // IWAHORI_LINALG_HPP_
