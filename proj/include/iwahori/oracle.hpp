// Brute-force reference implementations, used only to cross-check the
// engine. Nothing here calls IwahoriWeylGroup::length, reduced_word or the
// descent tests; the group law and generators are the only shared pieces.

#ifndef IWAHORI_ORACLE_HPP_
#define IWAHORI_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "iwahori/cosets.hpp"
#include "iwahori/group.hpp"

namespace iwahori::oracle {

// p -> linear * p + offset on V' (coweight coordinates).
struct AffineMap {
  RationalMatrix linear;
  RationalVector offset;

  RationalVector apply(const RationalVector& p) const { return linear * p + offset; }

  friend AffineMap compose(const AffineMap& f, const AffineMap& g) {
    return AffineMap{f.linear * g.linear, f.linear * g.offset + f.offset};
  }
  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.linear == b.linear && a.offset == b.offset;
  }
};

struct AffineMapHash {
  std::size_t operator()(const AffineMap& f) const;
};

// Forgets the torsion part.
AffineMap to_affine_map(const IwahoriWeylGroup& g, const ExtAffineElement& x);

// Number of affine root hyperplanes separating the base alcove from x(C),
// counted level by level on the barycenter.
Int length_by_hyperplanes(const IwahoriWeylGroup& g, const ExtAffineElement& x);

// x(C) == C, tested on the barycenter.
bool fixes_base_alcove(const IwahoriWeylGroup& g, const ExtAffineElement& x);

// x lies in Q^vee x| W_0 with trivial torsion.
bool in_affine_weyl(const IwahoriWeylGroup& g, const ExtAffineElement& x);

// Length-0 elements by search over minuscule translations, W_0 and torsion.
// Throws CapExceeded when |W_0| is above cap.
std::vector<ExtAffineElement> omega_by_search(const IwahoriWeylGroup& g,
                                              std::size_t cap = 100'000);

struct Shell {
  Int length = 0;
  std::vector<ExtAffineElement> elements;
};

// Word-metric layers: shell 0 is Omega, shell k+1 the new elements of
// shell k * S~. Throws CapExceeded past cap elements.
std::vector<Shell> bfs_enumerate(const IwahoriWeylGroup& g, int max_len,
                                 std::size_t cap = 2'000'000);

struct Partition {
  std::vector<std::vector<std::size_t>> classes;  // indices into the ball
  std::vector<bool> truncated;  // some generator move leaves the ball
};

// Union-find over ball under x -> s_j x (j in J) and x -> x s_j (j in J').
Partition double_coset_partition(const IwahoriWeylGroup& g, const std::vector<int>& left,
                                 const std::vector<int>& right,
                                 const std::vector<ExtAffineElement>& ball);

// Every reduced word of the W_a part of x (length from hyperplane counts).
std::vector<std::vector<int>> all_reduced_words(const IwahoriWeylGroup& g,
                                                const ExtAffineElement& x,
                                                std::size_t limit = 100'000);

// Subword criterion over a given reduced word of y_a; Omega parts compared
// via in_affine_weyl(x y^{-1}).
bool bruhat_leq_subword(const IwahoriWeylGroup& g, const ExtAffineElement& x,
                        const ExtAffineElement& y, const std::vector<int>& y_word);

struct OrbitMinimum {
  ExtAffineElement minimal;
  Int length = 0;
  std::size_t minimizers = 0;  // elements of minimal length in the orbit
  std::size_t orbit_size = 0;
};

// Full scan of <J> x <J'>.
OrbitMinimum double_coset_minimum(const IwahoriWeylGroup& g, const ExtAffineElement& x,
                                  const ParabolicSubgroup& left, const ParabolicSubgroup& right);

}  // namespace iwahori::oracle

#endif  // IWAHORI_ORACLE_HPP_
