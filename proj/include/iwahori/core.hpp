// Scalar and dense-type vocabulary shared by every module.
//
// Everything is exact: integer matrices for lattice data and Weyl group
// elements, boost::rational for points of the apartment. Eigen is used as a
// container/expression layer only; no decomposition that needs sqrt or
// pivoting tolerances is ever called on these types.

#ifndef IWAHORI_CORE_HPP_
#define IWAHORI_CORE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/rational.hpp>
#include <Eigen/Core>

namespace iwahori {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Int>;
using IntMatrix = Matrix<Int>;
using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

// Roots carry coordinates over the simple roots.
using RootVector = IntVector;
// Points of V' carry coordinates over the fundamental coweights, so the
// pairing with a root is a plain dot product.
template <typename Scalar>
using CoweightVector = Vector<Scalar>;

inline std::vector<Int> to_std(const IntVector& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

inline IntVector from_std(const std::vector<Int>& v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

// boost 1.74's mixed rational/integer operator== recurses forever under
// C++20 rewritten comparisons; compare through these instead.
inline bool is_zero(const Rational& q) { return q.numerator() == 0; }
inline int sign(const Rational& q) { return q.numerator() > 0 ? 1 : (q.numerator() < 0 ? -1 : 0); }

// Least non-negative residue.
inline Int mod_floor(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

template <typename Derived>
std::size_t hash_combine_range(std::size_t seed, const Eigen::DenseBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      seed ^= std::hash<Int>{}(m(i, j)) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j).denominator() != 1)
        return false;
  return true;
}

template <typename Derived>
IntMatrix to_integer(const Eigen::MatrixBase<Derived>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      out(i, j) = m(i, j).numerator();
  return out;
}

}  // namespace iwahori

namespace Eigen {

template <>
struct NumTraits<iwahori::Rational> : GenericNumTraits<iwahori::Rational> {
  typedef iwahori::Rational Real;
  typedef iwahori::Rational NonInteger;
  typedef iwahori::Rational Literal;
  typedef iwahori::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen

#endif  // IWAHORI_CORE_HPP_
