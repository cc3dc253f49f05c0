#include "iwahori/cosets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "iwahori/errors.hpp"
#include "iwahori/linalg.hpp"

namespace iwahori {

namespace {

std::string word_string(const std::vector<int>& word) {
  std::string s = "[";
  for (std::size_t k = 0; k < word.size(); ++k)
    s += (k ? "," : "") + std::to_string(word[k]);
  return s + "]";
}

// Strips left descents in J and right descents in J' until none remain.
ExtAffineElement reduce_to_minimal(const IwahoriWeylGroup& g, ExtAffineElement x,
                                   const ParabolicSubgroup& left,
                                   const ParabolicSubgroup& right) {
  for (;;) {
    bool moved = false;
    for (int i : left.generators())
      if (g.is_left_descent(x, i)) {
        x = g.multiply(g.generator(i), x);
        moved = true;
        break;
      }
    if (moved)
      continue;
    for (int j : right.generators())
      if (g.is_right_descent(x, j)) {
        x = g.multiply(x, g.generator(j));
        moved = true;
        break;
      }
    if (!moved)
      return x;
  }
}

ExtAffineElement reduce_right(const IwahoriWeylGroup& g, ExtAffineElement x,
                              const ParabolicSubgroup& right) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int j : right.generators())
      if (g.is_right_descent(x, j)) {
        x = g.multiply(x, g.generator(j));
        moved = true;
        break;
      }
  }
  return x;
}

}  // namespace

bool ParabolicSubgroup::has_generator(int i) const {
  return std::binary_search(generators_.begin(), generators_.end(), i);
}

ParabolicSubgroup parabolic(const IwahoriWeylGroup& g, std::vector<int> generators,
                            std::size_t cap) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (int i : generators)
    if (i < 0 || i > g.rank())
      throw InputError("parabolic generator " + std::to_string(i) + " out of range 0.." +
                       std::to_string(g.rank()));
  if (static_cast<int>(generators.size()) == g.num_generators())
    throw NotFinite("the full set of affine simple reflections generates an infinite group");

  ParabolicSubgroup p;
  p.generators_ = std::move(generators);
  p.elements_.push_back(g.identity());
  p.index_.emplace(p.elements_.front(), 0);
  for (std::size_t k = 0; k < p.elements_.size(); ++k) {
    for (int i : p.generators_) {
      ExtAffineElement next = g.multiply(p.elements_[k], g.generator(i));
      if (p.index_.count(next))
        continue;
      if (p.elements_.size() >= cap)
        throw NotFinite("parabolic closure exceeds " + std::to_string(cap) + " elements");
      p.index_.emplace(next, p.elements_.size());
      p.elements_.push_back(std::move(next));
    }
  }
  return p;
}

DoubleCosetFactorization min_double_rep(const IwahoriWeylGroup& g, const ExtAffineElement& x,
                                        const ParabolicSubgroup& left,
                                        const ParabolicSubgroup& right) {
  const ExtAffineElement y = reduce_right(g, x, right);
  const ExtAffineElement x0 = reduce_to_minimal(g, y, left, right);
  DoubleCosetFactorization f{g.multiply(y, g.invert(x0)), x0, g.multiply(g.invert(y), x)};
  if (!left.contains(f.left) || !right.contains(f.right))
    throw InternalInvariantError("double coset factorization left the parabolic subgroups");
  return f;
}

bool bruhat_leq_along(const IwahoriWeylGroup& g, const ExtAffineElement& x,
                      const ExtAffineElement& y, const std::vector<int>& y_word) {
  const WordFactorization fx = g.reduced_word(x);
  const WordFactorization fy = g.reduced_word(y);
  if (static_cast<Int>(y_word.size()) != g.length(y) ||
      !(g.multiply(g.from_word(y_word), fy.omega) == y))
    throw InputError("bruhat_leq: " + word_string(y_word) + " is not a reduced word of y");
  if (!(fx.omega == fy.omega))
    return false;
  // x <= s y' (s y' reduced)  iff  min(x, s x) <= y'.
  ExtAffineElement cur = g.from_word(fx.word);
  for (int s : y_word)
    if (g.is_left_descent(cur, s))
      cur = g.multiply(g.generator(s), cur);
  return cur == g.identity();
}

bool bruhat_leq(const IwahoriWeylGroup& g, const ExtAffineElement& x, const ExtAffineElement& y) {
  return bruhat_leq_along(g, x, y, g.reduced_word(y).word);
}

nlohmann::json DoubleCosetRep::to_json() const {
  return {{"x0_word", word},
          {"omega", omega},
          {"length", length},
          {"coset_size_in_ball", size_in_ball},
          {"truncated", truncated}};
}

std::size_t double_coset_size(const IwahoriWeylGroup& g, const ExtAffineElement& x0,
                              const ParabolicSubgroup& left, const ParabolicSubgroup& right) {
  // |W_J| |W_J'| / |W_J  cap  x0 W_J' x0^{-1}|
  const ExtAffineElement x0_inv = g.invert(x0);
  std::size_t stabilizer = 0;
  for (const ExtAffineElement& b : right.elements())
    if (left.contains(g.multiply(g.multiply(x0, b), x0_inv)))
      ++stabilizer;
  return left.size() * right.size() / stabilizer;
}

std::vector<DoubleCosetRep> enumerate_double_cosets(
    const IwahoriWeylGroup& g, const ParabolicSubgroup& left, const ParabolicSubgroup& right,
    const std::vector<std::vector<ExtAffineElement>>& shells) {
  std::unordered_map<ExtAffineElement, std::size_t, ElementHash> slot;
  std::vector<DoubleCosetRep> reps;
  for (const auto& shell : shells)
    for (const ExtAffineElement& x : shell) {
      ExtAffineElement x0 = reduce_to_minimal(g, x, left, right);
      auto [it, inserted] = slot.emplace(x0, reps.size());
      if (inserted) {
        DoubleCosetRep rep;
        rep.x0 = std::move(x0);
        reps.push_back(std::move(rep));
      }
      ++reps[it->second].size_in_ball;
    }
  for (DoubleCosetRep& rep : reps) {
    rep.word = g.reduced_word(rep.x0).word;
    rep.omega = g.omega_index(rep.x0);
    rep.length = static_cast<Int>(rep.word.size());
    rep.truncated = rep.size_in_ball < double_coset_size(g, rep.x0, left, right);
  }
  std::sort(reps.begin(), reps.end(), [](const DoubleCosetRep& a, const DoubleCosetRep& b) {
    if (a.length != b.length)
      return a.length < b.length;
    if (a.word != b.word)
      return a.word < b.word;
    return a.omega < b.omega;
  });
  return reps;
}

std::vector<DoubleCosetRep> enumerate_double_cosets(const IwahoriWeylGroup& g,
                                                    const ParabolicSubgroup& left,
                                                    const ParabolicSubgroup& right, int max_len,
                                                    std::size_t cap) {
  return enumerate_double_cosets(g, left, right, g.enumerate_ball(max_len, cap));
}

std::vector<int> DiagramAutomorphism::image(const std::vector<int>& indices) const {
  std::vector<int> out;
  for (int i : indices)
    out.push_back((*this)(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool DiagramAutomorphism::stabilizes(const std::vector<int>& indices) const {
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  return image(indices) == sorted;
}

ExtAffineElement apply_sigma(const IwahoriWeylGroup& g, const DiagramAutomorphism& sigma,
                             const ExtAffineElement& x) {
  if (!g.same_group(x))
    throw std::invalid_argument("apply_sigma: element does not belong to this datum");
  // sigma x sigma^{-1}: p -> L lambda + c - w'c + w' p, with w' = L w L^{-1}.
  const IntMatrix w = sigma.linear() * x.finite.matrix() * sigma.linear_inverse();
  const IntMatrix w_inv = sigma.linear() * x.finite.inverse_matrix() * sigma.linear_inverse();
  IntVector translation = sigma.linear() * x.translation + sigma.offset() - w * sigma.offset();
  IntVector torsion = sigma.torsion_matrix() * x.torsion;
  return g.make_element(torsion, translation, FiniteWeylElement(w, w_inv));
}

DiagramAutomorphism make_diagram_automorphism(const IwahoriWeylGroup& g,
                                              std::vector<int> permutation,
                                              std::optional<IntMatrix> lattice,
                                              std::optional<IntMatrix> torsion) {
  const int r = g.rank();
  const RootSystem& rs = g.root_system();
  if (static_cast<int>(permutation.size()) != r + 1)
    throw SigmaIncompatible("sigma permutation must have " + std::to_string(r + 1) + " entries");
  {
    std::vector<int> sorted = permutation;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i <= r; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i)
        throw SigmaIncompatible("sigma is not a permutation of 0.." + std::to_string(r));
  }
  auto gradient = [&](int node) -> RootVector {
    return node == 0 ? RootVector(-rs.highest_root()) : rs.simple_root(node);
  };

  // Linear part on root coordinates: alpha_i -> gradient of a_{sigma(i)}.
  IntMatrix on_roots(r, r);
  for (int i = 1; i <= r; ++i)
    on_roots.col(i - 1) = gradient(permutation[static_cast<std::size_t>(i)]);
  if (!(on_roots * gradient(0) == gradient(permutation[0])))
    throw SigmaIncompatible("sigma does not preserve the affine Dynkin diagram");
  const auto on_roots_inv = integral_inverse(on_roots);
  if (!on_roots_inv)
    throw SigmaIncompatible("sigma does not induce an automorphism of the root lattice");

  DiagramAutomorphism sigma;
  sigma.permutation_ = std::move(permutation);
  sigma.linear_ = on_roots_inv->transpose();
  sigma.linear_inverse_ = on_roots.transpose();
  sigma.offset_ = IntVector::Zero(r);
  if (sigma.permutation_[0] != 0)
    sigma.offset_(sigma.permutation_[0] - 1) = 1;

  const GroupDatum& d = g.datum();
  const IntMatrix basis = d.lattice_basis();
  IntMatrix on_lattice(r, r);
  for (int j = 0; j < r; ++j) {
    const IntVector image = sigma.linear_ * basis.col(j);
    const IntVector preimage = sigma.linear_inverse_ * basis.col(j);
    if (!d.lattice_contains(image) || !d.lattice_contains(preimage))
      throw SigmaIncompatible("sigma does not preserve the translation lattice");
    on_lattice.col(j) = d.to_lattice_coordinates(image);
  }
  if (lattice && !(lattice->rows() == r && lattice->cols() == r && *lattice == on_lattice))
    throw SigmaIncompatible("given lattice matrix does not match the action of sigma");

  const int m = d.torsion_rank();
  sigma.torsion_ = torsion ? *torsion : IntMatrix::Identity(m, m);
  if (sigma.torsion_.rows() != m || sigma.torsion_.cols() != m)
    throw SigmaIncompatible("torsion matrix has the wrong size");
  const auto& factors = d.torsion_factors();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (mod_floor(sigma.torsion_(a, b) * factors[static_cast<std::size_t>(b)],
                    factors[static_cast<std::size_t>(a)]) != 0)
        throw SigmaIncompatible("torsion matrix is not well defined modulo the torsion orders");
  {
    std::set<Int> images;
    for (Int k = 0; k < d.torsion_order(); ++k)
      images.insert(d.torsion_index(d.reduce_torsion(sigma.torsion_ * d.torsion_from_index(k))));
    if (static_cast<Int>(images.size()) != d.torsion_order())
      throw SigmaIncompatible("torsion matrix is not an automorphism");
  }

  for (int i = 0; i <= r; ++i)
    if (!(apply_sigma(g, sigma, g.generator(i)) == g.generator(sigma(i))))
      throw SigmaIncompatible("sigma does not map s_" + std::to_string(i) + " to s_" +
                              std::to_string(sigma(i)));
  std::unordered_set<ExtAffineElement, ElementHash> omega(g.omega_group().begin(),
                                                         g.omega_group().end());
  for (const ExtAffineElement& w : g.omega_group())
    if (!omega.count(apply_sigma(g, sigma, w)))
      throw SigmaIncompatible("sigma does not preserve Omega");
  return sigma;
}

DiagramAutomorphism parse_sigma_json(const IwahoriWeylGroup& g, const nlohmann::json& j) {
  if (!j.is_object())
    throw SigmaIncompatible("sigma must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "permutation" && it.key() != "lattice" && it.key() != "torsion")
      throw SigmaIncompatible("unknown key '" + it.key() + "' in sigma");
  if (!j.contains("permutation") || !j["permutation"].is_array())
    throw SigmaIncompatible("sigma needs a 'permutation' array");
  auto read_matrix = [](const nlohmann::json& mj) {
    if (!mj.is_array())
      throw SigmaIncompatible("sigma matrices must be arrays of rows");
    const auto rows = static_cast<Eigen::Index>(mj.size());
    IntMatrix m(rows, rows);
    for (Eigen::Index a = 0; a < rows; ++a) {
      const auto& row = mj[static_cast<std::size_t>(a)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows)
        throw SigmaIncompatible("sigma matrices must be square");
      for (Eigen::Index b = 0; b < rows; ++b) {
        if (!row[static_cast<std::size_t>(b)].is_number_integer())
          throw SigmaIncompatible("sigma matrix entries must be integers");
        m(a, b) = row[static_cast<std::size_t>(b)].get<Int>();
      }
    }
    return m;
  };
  std::vector<int> perm;
  for (const auto& v : j["permutation"]) {
    if (!v.is_number_integer())
      throw SigmaIncompatible("permutation entries must be integers");
    perm.push_back(v.get<int>());
  }
  std::optional<IntMatrix> lattice, torsion;
  if (j.contains("lattice"))
    lattice = read_matrix(j["lattice"]);
  if (j.contains("torsion"))
    torsion = read_matrix(j["torsion"]);
  return make_diagram_automorphism(g, std::move(perm), lattice, torsion);
}

bool is_sigma_stable_coset(const IwahoriWeylGroup& g, const DiagramAutomorphism& sigma,
                           const DoubleCosetRep& rep, const ParabolicSubgroup& left,
                           const ParabolicSubgroup& right) {
  if (!sigma.stabilizes(left.generators()) || !sigma.stabilizes(right.generators()))
    throw InputError("sigma does not stabilize the parabolic index sets");
  // Same double coset iff same minimal element.
  return reduce_to_minimal(g, apply_sigma(g, sigma, rep.x0), left, right) == rep.x0;
}

nlohmann::json DescentReport::to_json() const {
  return {{"cosets", cosets},
          {"stable_cosets", stable_cosets},
          {"fixed_representatives", fixed_representatives},
          {"fixed_elements", fixed_elements},
          {"counterexamples", counterexamples},
          {"ok", ok()}};
}

DescentReport descent_check(const IwahoriWeylGroup& g, const DiagramAutomorphism& sigma,
                            const ParabolicSubgroup& left, const ParabolicSubgroup& right,
                            int max_len, std::size_t cap) {
  if (!sigma.stabilizes(left.generators()) || !sigma.stabilizes(right.generators()))
    throw InputError("sigma does not stabilize the parabolic index sets");
  const auto shells = g.enumerate_ball(max_len, cap);
  const auto reps = enumerate_double_cosets(g, left, right, shells);

  DescentReport report;
  report.cosets = reps.size();
  std::unordered_set<ExtAffineElement, ElementHash> fixed_reps;
  for (const DoubleCosetRep& rep : reps) {
    const bool stable = is_sigma_stable_coset(g, sigma, rep, left, right);
    const bool fixed = apply_sigma(g, sigma, rep.x0) == rep.x0;
    report.stable_cosets += stable ? 1 : 0;
    if (fixed) {
      ++report.fixed_representatives;
      fixed_reps.insert(rep.x0);
    }
    if (stable != fixed)
      report.counterexamples.push_back("coset of " + word_string(rep.word) + " omega " +
                                       std::to_string(rep.omega) +
                                       (stable ? ": stable but minimal element not fixed"
                                               : ": minimal element fixed but coset not stable"));
  }
  if (fixed_reps.size() != report.fixed_representatives)
    report.counterexamples.push_back("two stable cosets share a fixed minimal element");

  for (const auto& shell : shells)
    for (const ExtAffineElement& x : shell) {
      if (!(apply_sigma(g, sigma, x) == x))
        continue;
      ++report.fixed_elements;
      const DoubleCosetFactorization f = min_double_rep(g, x, left, right);
      if (!fixed_reps.count(f.minimal) || !(apply_sigma(g, sigma, f.left) == f.left) ||
          !(apply_sigma(g, sigma, f.right) == f.right))
        report.counterexamples.push_back("fixed element " + word_string(g.reduced_word(x).word) +
                                         " does not factor through fixed elements");
    }
  return report;
}

}  // namespace iwahori
