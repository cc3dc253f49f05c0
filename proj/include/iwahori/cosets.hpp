// Parabolic subgroups, double cosets with minimal representatives, Bruhat
// order, and diagram automorphisms with the descent check on double cosets.

#ifndef IWAHORI_COSETS_HPP_
#define IWAHORI_COSETS_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "iwahori/group.hpp"

namespace iwahori {

inline constexpr std::size_t kParabolicCap = 1'000'000;

class ParabolicSubgroup {
 public:
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<ExtAffineElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const ExtAffineElement& x) const { return index_.count(x) > 0; }
  bool has_generator(int i) const;

 private:
  friend ParabolicSubgroup parabolic(const IwahoriWeylGroup&, std::vector<int>, std::size_t);
  std::vector<int> generators_;
  std::vector<ExtAffineElement> elements_;
  std::unordered_map<ExtAffineElement, std::size_t, ElementHash> index_;
};

// BFS closure of {s_j : j in J}. Throws NotFinite for the full generating
// set or when the closure passes cap.
ParabolicSubgroup parabolic(const IwahoriWeylGroup& g, std::vector<int> generators,
                            std::size_t cap = kParabolicCap);

// x = left * minimal * right with minimal the shortest element of
// <J> x <J'>, and left * minimal the shortest element of left * minimal * <J'>.
struct DoubleCosetFactorization {
  ExtAffineElement left;
  ExtAffineElement minimal;
  ExtAffineElement right;
};

DoubleCosetFactorization min_double_rep(const IwahoriWeylGroup& g, const ExtAffineElement& x,
                                        const ParabolicSubgroup& left,
                                        const ParabolicSubgroup& right);

// Bruhat order: equal Omega-components and x_a <= y_a in the Coxeter order.
bool bruhat_leq(const IwahoriWeylGroup& g, const ExtAffineElement& x, const ExtAffineElement& y);
// Same, deciding x_a <= y_a along the given reduced word of y_a.
bool bruhat_leq_along(const IwahoriWeylGroup& g, const ExtAffineElement& x,
                      const ExtAffineElement& y, const std::vector<int>& y_word);

struct DoubleCosetRep {
  ExtAffineElement x0;
  std::vector<int> word;  // canonical reduced word of x0
  std::size_t omega = 0;  // Kottwitz class index of x0
  Int length = 0;
  std::size_t size_in_ball = 0;
  bool truncated = false;  // the coset reaches beyond the ball

  nlohmann::json to_json() const;
};

// One representative per double coset meeting {length <= max_len}, sorted
// by (length, word, omega).
std::vector<DoubleCosetRep> enumerate_double_cosets(const IwahoriWeylGroup& g,
                                                    const ParabolicSubgroup& left,
                                                    const ParabolicSubgroup& right, int max_len,
                                                    std::size_t cap = 2'000'000);
// Same, over an already enumerated ball (shells indexed by length).
std::vector<DoubleCosetRep> enumerate_double_cosets(
    const IwahoriWeylGroup& g, const ParabolicSubgroup& left, const ParabolicSubgroup& right,
    const std::vector<std::vector<ExtAffineElement>>& shells);

// Number of elements of <J> x0 <J'>.
std::size_t double_coset_size(const IwahoriWeylGroup& g, const ExtAffineElement& x0,
                              const ParabolicSubgroup& left, const ParabolicSubgroup& right);

// An automorphism of the affine Dynkin diagram realized as conjugation by
// the affine map p -> linear * p + offset of V' that permutes the walls of
// the base alcove, together with an automorphism of the torsion group.
class DiagramAutomorphism {
 public:
  const std::vector<int>& permutation() const { return permutation_; }
  int operator()(int i) const { return permutation_.at(static_cast<std::size_t>(i)); }
  const IntMatrix& linear() const { return linear_; }
  const IntMatrix& linear_inverse() const { return linear_inverse_; }
  const IntVector& offset() const { return offset_; }
  const IntMatrix& torsion_matrix() const { return torsion_; }

  // sigma(J) as a sorted index list.
  std::vector<int> image(const std::vector<int>& indices) const;
  bool stabilizes(const std::vector<int>& indices) const;

 private:
  friend DiagramAutomorphism make_diagram_automorphism(const IwahoriWeylGroup&, std::vector<int>,
                                                       std::optional<IntMatrix>,
                                                       std::optional<IntMatrix>);
  std::vector<int> permutation_;
  IntMatrix linear_;
  IntMatrix linear_inverse_;
  IntVector offset_;
  IntMatrix torsion_;
};

// Derives the affine map from the permutation and validates it against the
// datum. `lattice`, when given, must equal the induced action on lattice
// coordinates; `torsion` defaults to the identity. Throws SigmaIncompatible.
DiagramAutomorphism make_diagram_automorphism(const IwahoriWeylGroup& g,
                                              std::vector<int> permutation,
                                              std::optional<IntMatrix> lattice = std::nullopt,
                                              std::optional<IntMatrix> torsion = std::nullopt);

// {"permutation": [...], "lattice": [[...]]?, "torsion": [[...]]?}
DiagramAutomorphism parse_sigma_json(const IwahoriWeylGroup& g, const nlohmann::json& j);

ExtAffineElement apply_sigma(const IwahoriWeylGroup& g, const DiagramAutomorphism& sigma,
                             const ExtAffineElement& x);

// sigma(<J> x0 <J'>) == <J> x0 <J'>; requires sigma(J) == J, sigma(J') == J'.
bool is_sigma_stable_coset(const IwahoriWeylGroup& g, const DiagramAutomorphism& sigma,
                           const DoubleCosetRep& rep, const ParabolicSubgroup& left,
                           const ParabolicSubgroup& right);

struct DescentReport {
  std::size_t cosets = 0;
  std::size_t stable_cosets = 0;
  std::size_t fixed_representatives = 0;
  std::size_t fixed_elements = 0;  // sigma-fixed elements of the ball
  std::vector<std::string> counterexamples;

  bool ok() const {
    return counterexamples.empty() && stable_cosets == fixed_representatives;
  }
  nlohmann::json to_json() const;
};

// Checks, on the ball of radius max_len, that every sigma-stable double
// coset has a sigma-fixed minimal representative, that stable cosets and
// fixed representatives correspond one-to-one, and that every sigma-fixed
// element factors through sigma-fixed parabolic elements (injectivity of
// the map from sigma-fixed double cosets). Throws InputError unless sigma
// stabilizes both index sets.
DescentReport descent_check(const IwahoriWeylGroup& g, const DiagramAutomorphism& sigma,
                            const ParabolicSubgroup& left, const ParabolicSubgroup& right,
                            int max_len, std::size_t cap = 2'000'000);

}  // namespace iwahori

#endif  // IWAHORI_COSETS_HPP_
