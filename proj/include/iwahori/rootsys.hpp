// Finite reduced irreducible root systems in exact integer coordinates.
//
// Conventions (Bourbaki numbering of simple roots):
//   * a root is stored over the simple roots alpha_1..alpha_r;
//   * a point of V' is stored over the fundamental coweights, so
//     alpha_j(x) = x_j and the pairing is a dot product;
//   * cartan_matrix()(i, j) = <alpha_i^vee, alpha_j>, hence row i of the
//     Cartan matrix is the simple coroot alpha_i^vee in coweight coordinates.
// Simple reflections are numbered 1..r throughout the library; index 0 is
// reserved for the affine reflection s_0.

#ifndef IWAHORI_ROOTSYS_HPP_
#define IWAHORI_ROOTSYS_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iwahori/core.hpp"

namespace iwahori {

struct CartanType {
  char family = 'A';  // one of A..G
  int rank = 1;

  // Throws InvalidCartanType for an unknown family or a rank the family
  // does not admit.
  static CartanType make(char family, int rank);
  // Case-insensitive, e.g. "A2", "g2", "E8".
  static CartanType parse(std::string_view text);

  std::string name() const;
  auto operator<=>(const CartanType&) const = default;
};

struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;  // each > 1, each dividing the next

  Int order() const;
  bool trivial() const { return invariant_factors.empty(); }
  std::string to_string() const;
};

class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  const IntMatrix& cartan_matrix() const { return cartan_; }
  // Inner products of simple roots for a W-invariant form.
  const IntMatrix& simple_root_products() const { return gram_; }

  // Sorted by height, then lexicographically.
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  std::vector<RootVector> roots() const;
  const RootVector& highest_root() const { return highest_; }
  RootVector two_rho() const;

  RootVector simple_root(int i) const;          // 1 <= i <= rank
  IntVector simple_coroot(int i) const;          // coweight coordinates
  IntVector coroot(const RootVector& root) const;  // throws if not a root
  bool is_root(const RootVector& v) const;

  // Columns are the simple coroots: a Z-basis of Q^vee in coweight coords.
  IntMatrix coroot_lattice_basis() const { return cartan_.transpose(); }

  // Average of the vertices of the base alcove {alpha_j > 0, theta < 1}.
  RationalVector alcove_barycenter() const;

  // |W_0| = r! * (prod of highest root coefficients) * |P^vee / Q^vee|.
  std::size_t weyl_group_order() const;

  Int inner_product(const RootVector& a, const RootVector& b) const {
    return a.dot(gram_ * b);
  }

 private:
  CartanType type_;
  IntMatrix gram_;
  IntMatrix cartan_;
  std::vector<RootVector> positive_;
  std::set<std::vector<Int>> root_set_;
  RootVector highest_;
};

RootSystem build_root_system(CartanType type);

inline bool is_positive_root(const RootVector& a) {
  return (a.array() >= 0).all() && (a.array() != 0).any();
}

inline Int height(const RootVector& a) { return a.sum(); }

// alpha(x) for a root and a point of V' (any scalar type).
template <typename Derived>
typename Derived::Scalar pairing(const RootVector& root, const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (root.size() != x.size())
    throw std::invalid_argument("pairing: rank mismatch");
  Scalar sum(0);
  for (Eigen::Index j = 0; j < root.size(); ++j)
    sum += Scalar(root(j)) * x(j);
  return sum;
}

// x - alpha(x) alpha^vee.
template <typename Derived>
Vector<typename Derived::Scalar> reflect(const RootSystem& rs, const RootVector& root,
                                         const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const IntVector coroot = rs.coroot(root);
  const Scalar value = pairing(root, x);
  Vector<Scalar> out = x;
  for (Eigen::Index j = 0; j < out.size(); ++j)
    out(j) -= value * Scalar(coroot(j));
  return out;
}

// An element of W_0 stored by its (unimodular) matrix on coweight
// coordinates together with the inverse matrix. W_0 acts faithfully on V',
// so the matrix is a canonical form.
class FiniteWeylElement {
 public:
  FiniteWeylElement() = default;
  FiniteWeylElement(IntMatrix matrix, IntMatrix inverse)
      : matrix_(std::move(matrix)), inverse_(std::move(inverse)) {}

  static FiniteWeylElement identity(int rank);
  static FiniteWeylElement reflection(const RootSystem& rs, const RootVector& root);

  int rank() const { return static_cast<int>(matrix_.rows()); }
  const IntMatrix& matrix() const { return matrix_; }
  const IntMatrix& inverse_matrix() const { return inverse_; }
  bool is_identity() const { return matrix_ == IntMatrix::Identity(rank(), rank()); }

  // w(alpha) and w^{-1}(alpha), as functions on V'.
  RootVector act_on_root(const RootVector& a) const { return inverse_.transpose() * a; }
  RootVector inverse_act_on_root(const RootVector& a) const { return matrix_.transpose() * a; }

  template <typename Derived>
  Vector<typename Derived::Scalar> act(const Eigen::MatrixBase<Derived>& x) const {
    return matrix_.cast<typename Derived::Scalar>() * x;
  }

  // Column j is w(alpha_{j+1}) in simple-root coordinates.
  IntMatrix simple_root_images() const { return inverse_.transpose(); }

  FiniteWeylElement inverse() const { return FiniteWeylElement(inverse_, matrix_); }

  friend FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b) {
    return FiniteWeylElement(a.matrix_ * b.matrix_, b.inverse_ * a.inverse_);
  }
  friend bool operator==(const FiniteWeylElement& a, const FiniteWeylElement& b) {
    return a.matrix_.rows() == b.matrix_.rows() && a.matrix_ == b.matrix_;
  }

  std::size_t hash() const { return hash_combine_range(0, matrix_); }

 private:
  IntMatrix matrix_;
  IntMatrix inverse_;
};

// Number of positive roots sent to negative roots.
int length(const RootSystem& rs, const FiniteWeylElement& w);

// Reduced word (indices 1..r) found by repeatedly stripping the smallest
// right descent.
std::vector<int> reduced_word(const RootSystem& rs, const FiniteWeylElement& w);
FiniteWeylElement finite_from_word(const RootSystem& rs, const std::vector<int>& word);

// BFS closure over the simple reflections, in BFS order from the identity.
// Throws InputError if rank > max_rank, CapExceeded past cap elements.
std::vector<FiniteWeylElement> enumerate_finite_weyl(const RootSystem& rs, int max_rank = 8,
                                                     std::size_t cap = 1'000'000);

// P^vee / Q^vee via the Smith form of the Cartan matrix.
FiniteAbelianGroup fundamental_group(const RootSystem& rs);

struct FiniteWeylHash {
  std::size_t operator()(const FiniteWeylElement& w) const { return w.hash(); }
};

}  // namespace iwahori

#endif  // IWAHORI_ROOTSYS_HPP_
