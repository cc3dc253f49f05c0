// The extended affine (Iwahori-Weyl) group Lambda x| W_0 of a GroupDatum.
//
// An element is stored in semidirect normal form (torsion, translation,
// finite part) and acts on V' by p -> translation + finite(p); torsion acts
// trivially. The base alcove is C = {alpha_j > 0, theta < 1} and the
// special vertex is the origin. Generators are numbered 0..r: s_i for i >= 1
// is the reflection in alpha_i = 0, s_0 the reflection in theta = 1.

#ifndef IWAHORI_GROUP_HPP_
#define IWAHORI_GROUP_HPP_

#include <cstddef>
#include <vector>

#include "iwahori/core.hpp"
#include "iwahori/datum.hpp"
#include "iwahori/rootsys.hpp"

namespace iwahori {

struct ExtAffineElement {
  IntVector torsion;      // reduced modulo the torsion invariant factors
  IntVector translation;  // lattice point, in coweight coordinates
  FiniteWeylElement finite;

  friend bool operator==(const ExtAffineElement& a, const ExtAffineElement& b) {
    return a.torsion.size() == b.torsion.size() && a.torsion == b.torsion &&
           a.translation.size() == b.translation.size() && a.translation == b.translation &&
           a.finite == b.finite;
  }
};

struct ElementHash {
  std::size_t operator()(const ExtAffineElement& x) const {
    std::size_t h = hash_combine_range(x.finite.hash(), x.translation);
    return hash_combine_range(h, x.torsion);
  }
};

// The affine function y -> root(y) + level.
struct AffineRoot {
  RootVector root;
  Int level = 0;

  // Positive on the base alcove.
  bool is_positive() const { return level > 0 || (level == 0 && is_positive_root(root)); }

  template <typename Derived>
  typename Derived::Scalar operator()(const Eigen::MatrixBase<Derived>& p) const {
    return pairing(root, p) + typename Derived::Scalar(level);
  }

  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.level == b.level && a.root == b.root;
  }
};

// Image in W~ / W_a = (Lambda / Q^vee) + torsion.
struct KottwitzClass {
  IntVector free_part;     // residues modulo the nontrivial invariant factors
  IntVector torsion_part;

  friend bool operator==(const KottwitzClass& a, const KottwitzClass& b) {
    return a.free_part == b.free_part && a.torsion_part == b.torsion_part;
  }
};

// x = s_{word[0]} ... s_{word[n-1]} * omega with length(omega) == 0.
struct WordFactorization {
  std::vector<int> word;
  ExtAffineElement omega;
};

class IwahoriWeylGroup {
 public:
  explicit IwahoriWeylGroup(GroupDatum datum);

  const GroupDatum& datum() const { return datum_; }
  const RootSystem& root_system() const { return datum_.root_system(); }
  int rank() const { return datum_.rank(); }
  int num_generators() const { return rank() + 1; }

  ExtAffineElement identity() const;
  const ExtAffineElement& generator(int i) const;
  const std::vector<AffineRoot>& simple_affine_roots() const { return simple_affine_roots_; }

  // Translation by a lattice point given in coweight coordinates.
  ExtAffineElement translation(const IntVector& coweight) const;
  ExtAffineElement lattice_translation(const IntVector& lattice_coords) const {
    return translation(datum_.from_lattice_coordinates(lattice_coords));
  }
  ExtAffineElement torsion_element(const IntVector& t) const;
  ExtAffineElement finite_element(const FiniteWeylElement& w) const;
  // The element with the given coordinates; validates lattice membership.
  ExtAffineElement make_element(const IntVector& torsion, const IntVector& coweight,
                                const FiniteWeylElement& w) const;

  ExtAffineElement multiply(const ExtAffineElement& x, const ExtAffineElement& y) const;
  ExtAffineElement invert(const ExtAffineElement& x) const;
  ExtAffineElement conjugate(const ExtAffineElement& g, const ExtAffineElement& x) const {
    return multiply(multiply(g, x), invert(g));
  }

  template <typename Derived>
  Vector<typename Derived::Scalar> act_on_point(const ExtAffineElement& x,
                                                const Eigen::MatrixBase<Derived>& p) const {
    using Scalar = typename Derived::Scalar;
    if (p.size() != rank())
      throw std::invalid_argument("act_on_point: rank mismatch");
    return x.translation.cast<Scalar>() + x.finite.act(p);
  }

  // (x . a)(p) = a(x^{-1} p).
  AffineRoot act_on_affine_root(const ExtAffineElement& x, const AffineRoot& a) const;

  // Iwahori-Matsumoto inversion count.
  Int length(const ExtAffineElement& x) const;

  bool is_left_descent(const ExtAffineElement& x, int i) const;
  bool is_right_descent(const ExtAffineElement& x, int i) const;

  // Greedy left descents, smallest index first.
  WordFactorization reduced_word(const ExtAffineElement& x) const;
  ExtAffineElement from_word(const std::vector<int>& word, const ExtAffineElement& omega) const;
  ExtAffineElement from_word(const std::vector<int>& word) const {
    return from_word(word, identity());
  }

  KottwitzClass kottwitz_class(const ExtAffineElement& x) const;
  // Invariant factors of Lambda / Q^vee (entries > 1 only).
  const std::vector<Int>& lattice_quotient_factors() const { return quotient_factors_; }
  // Mixed radix over lattice_quotient_factors() then the torsion factors.
  std::size_t class_index(const KottwitzClass& k) const;
  std::size_t num_classes() const { return omega_.size(); }

  // omega_group()[k] is the length-0 element of Kottwitz class index k.
  const std::vector<ExtAffineElement>& omega_group() const { return omega_; }
  std::size_t omega_index(const ExtAffineElement& x) const {
    return class_index(kottwitz_class(x));
  }

  FiniteWeylElement project_to_finite(const ExtAffineElement& x) const { return x.finite; }
  // Elements (0, 0, w) fixing the origin, one per element of W_0.
  std::vector<ExtAffineElement> special_vertex_subgroup() const;

  // Drops the torsion coordinate; the result lives in torsion_free().
  ExtAffineElement quotient_mod_torsion(const ExtAffineElement& x) const;
  GroupDatum torsion_free_datum() const { return datum_.without_torsion(); }

  // Elements grouped by length, shell k holding length k, each shell in a
  // deterministic order. Throws CapExceeded when more than cap elements
  // would be produced.
  std::vector<std::vector<ExtAffineElement>> enumerate_ball(int max_len,
                                                            std::size_t cap = 2'000'000,
                                                            bool parallel = false) const;

  bool same_group(const ExtAffineElement& x) const;

 private:
  void check(const ExtAffineElement& x) const;
  ExtAffineElement make_unchecked(IntVector torsion, IntVector coweight, FiniteWeylElement w) const;

  GroupDatum datum_;
  std::vector<ExtAffineElement> generators_;
  std::vector<AffineRoot> simple_affine_roots_;
  std::vector<RootVector> positive_roots_;
  // Kottwitz map data: lattice coordinates mu -> (left * mu) mod factors.
  IntMatrix quotient_left_;
  IntMatrix quotient_left_inverse_;
  std::vector<Eigen::Index> quotient_rows_;
  std::vector<Int> quotient_factors_;
  std::vector<ExtAffineElement> omega_;
};

}  // namespace iwahori

#endif  // IWAHORI_GROUP_HPP_
