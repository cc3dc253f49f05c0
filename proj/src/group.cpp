#include "iwahori/group.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <unordered_set>

#include "iwahori/errors.hpp"
#include "iwahori/linalg.hpp"

namespace iwahori {

IwahoriWeylGroup::IwahoriWeylGroup(GroupDatum datum) : datum_(std::move(datum)) {
  const RootSystem& rs = root_system();
  const int r = rank();
  positive_roots_ = rs.positive_roots();

  const RootVector& theta = rs.highest_root();
  generators_.push_back(make_unchecked(IntVector::Zero(datum_.torsion_rank()), rs.coroot(theta),
                                       FiniteWeylElement::reflection(rs, theta)));
  simple_affine_roots_.push_back(AffineRoot{-theta, 1});
  for (int i = 1; i <= r; ++i) {
    generators_.push_back(make_unchecked(IntVector::Zero(datum_.torsion_rank()),
                                         IntVector::Zero(r),
                                         FiniteWeylElement::reflection(rs, rs.simple_root(i))));
    simple_affine_roots_.push_back(AffineRoot{rs.simple_root(i), 0});
  }

  // Q^vee over the lattice basis; its Smith form describes Lambda / Q^vee.
  IntMatrix q(r, r);
  for (int i = 1; i <= r; ++i)
    q.col(i - 1) = datum_.to_lattice_coordinates(rs.simple_coroot(i));
  const SmithForm snf = smith_normal_form(q);
  quotient_left_ = snf.left;
  quotient_left_inverse_ = *integral_inverse(snf.left);
  for (Eigen::Index i = 0; i < snf.diagonal.size(); ++i)
    if (snf.diagonal(i) > 1) {
      quotient_rows_.push_back(i);
      quotient_factors_.push_back(snf.diagonal(i));
    }

  std::size_t classes = static_cast<std::size_t>(datum_.torsion_order());
  for (Int d : quotient_factors_)
    classes *= static_cast<std::size_t>(d);
  const FiniteWeylElement e = FiniteWeylElement::identity(r);
  for (std::size_t k = 0; k < classes; ++k) {
    std::size_t rest = k;
    const auto torsion_count = static_cast<std::size_t>(datum_.torsion_order());
    const IntVector t = datum_.torsion_from_index(static_cast<Int>(rest % torsion_count));
    rest /= torsion_count;
    IntVector residues = IntVector::Zero(r);
    for (std::size_t f = quotient_factors_.size(); f-- > 0;) {
      const auto d = static_cast<std::size_t>(quotient_factors_[f]);
      residues(quotient_rows_[f]) = static_cast<Int>(rest % d);
      rest /= d;
    }
    const IntVector mu = quotient_left_inverse_ * residues;
    const ExtAffineElement x = make_unchecked(t, datum_.from_lattice_coordinates(mu), e);
    ExtAffineElement omega = reduced_word(x).omega;
    if (class_index(kottwitz_class(omega)) != k)
      throw InternalInvariantError("Omega representative landed in the wrong class");
    omega_.push_back(std::move(omega));
  }
}

ExtAffineElement IwahoriWeylGroup::make_unchecked(IntVector torsion, IntVector coweight,
                                                  FiniteWeylElement w) const {
  return ExtAffineElement{std::move(torsion), std::move(coweight), std::move(w)};
}

ExtAffineElement IwahoriWeylGroup::identity() const {
  return make_unchecked(IntVector::Zero(datum_.torsion_rank()), IntVector::Zero(rank()),
                        FiniteWeylElement::identity(rank()));
}

const ExtAffineElement& IwahoriWeylGroup::generator(int i) const {
  if (i < 0 || i > rank())
    throw InputError("generator index " + std::to_string(i) + " out of range 0.." +
                     std::to_string(rank()));
  return generators_[static_cast<std::size_t>(i)];
}

ExtAffineElement IwahoriWeylGroup::translation(const IntVector& coweight) const {
  if (!datum_.lattice_contains(coweight))
    throw InputError("translation is not in the lattice");
  return make_unchecked(IntVector::Zero(datum_.torsion_rank()), coweight,
                        FiniteWeylElement::identity(rank()));
}

ExtAffineElement IwahoriWeylGroup::torsion_element(const IntVector& t) const {
  return make_unchecked(datum_.reduce_torsion(t), IntVector::Zero(rank()),
                        FiniteWeylElement::identity(rank()));
}

ExtAffineElement IwahoriWeylGroup::finite_element(const FiniteWeylElement& w) const {
  if (w.rank() != rank())
    throw std::invalid_argument("finite element has wrong rank");
  return make_unchecked(IntVector::Zero(datum_.torsion_rank()), IntVector::Zero(rank()), w);
}

ExtAffineElement IwahoriWeylGroup::make_element(const IntVector& torsion,
                                                const IntVector& coweight,
                                                const FiniteWeylElement& w) const {
  if (w.rank() != rank())
    throw std::invalid_argument("finite element has wrong rank");
  if (!datum_.lattice_contains(coweight))
    throw InputError("translation is not in the lattice");
  return make_unchecked(datum_.reduce_torsion(torsion), coweight, w);
}

bool IwahoriWeylGroup::same_group(const ExtAffineElement& x) const {
  return x.translation.size() == rank() && x.torsion.size() == datum_.torsion_rank() &&
         x.finite.rank() == rank();
}

void IwahoriWeylGroup::check(const ExtAffineElement& x) const {
  if (!same_group(x))
    throw std::invalid_argument("element does not belong to this group datum");
}

ExtAffineElement IwahoriWeylGroup::multiply(const ExtAffineElement& x,
                                            const ExtAffineElement& y) const {
  check(x);
  check(y);
  IntVector t = x.torsion + y.torsion;
  for (int i = 0; i < datum_.torsion_rank(); ++i)
    t(i) = mod_floor(t(i), datum_.torsion_factors()[static_cast<std::size_t>(i)]);
  return make_unchecked(std::move(t), x.translation + x.finite.matrix() * y.translation,
                        x.finite * y.finite);
}

ExtAffineElement IwahoriWeylGroup::invert(const ExtAffineElement& x) const {
  check(x);
  IntVector t = -x.torsion;
  for (int i = 0; i < datum_.torsion_rank(); ++i)
    t(i) = mod_floor(t(i), datum_.torsion_factors()[static_cast<std::size_t>(i)]);
  return make_unchecked(std::move(t), -(x.finite.inverse_matrix() * x.translation),
                        x.finite.inverse());
}

AffineRoot IwahoriWeylGroup::act_on_affine_root(const ExtAffineElement& x,
                                                const AffineRoot& a) const {
  check(x);
  if (!root_system().is_root(a.root))
    throw std::invalid_argument("act_on_affine_root: not a root");
  const RootVector image = x.finite.act_on_root(a.root);
  return AffineRoot{image, a.level - image.dot(x.translation)};
}

Int IwahoriWeylGroup::length(const ExtAffineElement& x) const {
  check(x);
  Int total = 0;
  for (const RootVector& alpha : positive_roots_) {
    const Int value = alpha.dot(x.translation);
    if (is_positive_root(x.finite.inverse_act_on_root(alpha)))
      total += value < 0 ? -value : value;
    else
      total += value - 1 < 0 ? 1 - value : value - 1;
  }
  return total;
}

bool IwahoriWeylGroup::is_left_descent(const ExtAffineElement& x, int i) const {
  // s_i x < x  iff  x^{-1} . a_i is negative, where
  // x^{-1} . (alpha, k) = (w^{-1} alpha, k + <alpha, lambda>).
  const AffineRoot& a = simple_affine_roots_.at(static_cast<std::size_t>(i));
  const AffineRoot pulled{x.finite.inverse_act_on_root(a.root), a.level + a.root.dot(x.translation)};
  return !pulled.is_positive();
}

bool IwahoriWeylGroup::is_right_descent(const ExtAffineElement& x, int i) const {
  const AffineRoot& a = simple_affine_roots_.at(static_cast<std::size_t>(i));
  return !act_on_affine_root(x, a).is_positive();
}

WordFactorization IwahoriWeylGroup::reduced_word(const ExtAffineElement& x) const {
  check(x);
  WordFactorization out;
  ExtAffineElement cur = x;
  for (;;) {
    int descent = -1;
    for (int i = 0; i <= rank(); ++i)
      if (is_left_descent(cur, i)) {
        descent = i;
        break;
      }
    if (descent < 0)
      break;
    out.word.push_back(descent);
    cur = multiply(generators_[static_cast<std::size_t>(descent)], cur);
  }
  out.omega = std::move(cur);
  return out;
}

ExtAffineElement IwahoriWeylGroup::from_word(const std::vector<int>& word,
                                             const ExtAffineElement& omega) const {
  check(omega);
  if (length(omega) != 0)
    throw InputError("from_word: omega must have length 0");
  ExtAffineElement x = identity();
  for (int i : word)
    x = multiply(x, generator(i));
  return multiply(x, omega);
}

KottwitzClass IwahoriWeylGroup::kottwitz_class(const ExtAffineElement& x) const {
  check(x);
  const IntVector image = quotient_left_ * datum_.to_lattice_coordinates(x.translation);
  KottwitzClass k;
  k.free_part.resize(static_cast<Eigen::Index>(quotient_factors_.size()));
  for (std::size_t f = 0; f < quotient_factors_.size(); ++f)
    k.free_part(static_cast<Eigen::Index>(f)) = mod_floor(image(quotient_rows_[f]), quotient_factors_[f]);
  k.torsion_part = x.torsion;
  return k;
}

std::size_t IwahoriWeylGroup::class_index(const KottwitzClass& k) const {
  std::size_t index = 0;
  for (std::size_t f = 0; f < quotient_factors_.size(); ++f)
    index = index * static_cast<std::size_t>(quotient_factors_[f]) +
            static_cast<std::size_t>(k.free_part(static_cast<Eigen::Index>(f)));
  return index * static_cast<std::size_t>(datum_.torsion_order()) +
         static_cast<std::size_t>(datum_.torsion_index(k.torsion_part));
}

std::vector<ExtAffineElement> IwahoriWeylGroup::special_vertex_subgroup() const {
  std::vector<ExtAffineElement> out;
  for (const FiniteWeylElement& w : enumerate_finite_weyl(root_system()))
    out.push_back(finite_element(w));
  return out;
}

ExtAffineElement IwahoriWeylGroup::quotient_mod_torsion(const ExtAffineElement& x) const {
  check(x);
  return ExtAffineElement{IntVector(0), x.translation, x.finite};
}

std::vector<std::vector<ExtAffineElement>> IwahoriWeylGroup::enumerate_ball(int max_len,
                                                                            std::size_t cap,
                                                                            bool parallel) const {
  if (max_len < 0)
    throw InputError("max_len must be non-negative");
  std::vector<std::vector<ExtAffineElement>> shells;
  shells.push_back(omega_);
  std::size_t total = omega_.size();
  if (total > cap)
    throw CapExceeded("ball exceeds cap of " + std::to_string(cap) + " elements");

  // Ascending left multiplications of one slice of a shell, in order.
  auto expand = [this](const std::vector<ExtAffineElement>& shell, std::size_t begin,
                       std::size_t end) {
    std::vector<ExtAffineElement> out;
    for (std::size_t k = begin; k < end; ++k)
      for (int i = 0; i <= rank(); ++i)
        if (!is_left_descent(shell[k], i))
          out.push_back(multiply(generators_[static_cast<std::size_t>(i)], shell[k]));
    return out;
  };

  for (int len = 1; len <= max_len; ++len) {
    const auto& prev = shells.back();
    std::vector<std::vector<ExtAffineElement>> pieces;
    const std::size_t workers =
        parallel ? std::max<std::size_t>(1, std::thread::hardware_concurrency()) : 1;
    if (workers == 1 || prev.size() < 64) {
      pieces.push_back(expand(prev, 0, prev.size()));
    } else {
      std::vector<std::future<std::vector<ExtAffineElement>>> futures;
      const std::size_t chunk = (prev.size() + workers - 1) / workers;
      for (std::size_t b = 0; b < prev.size(); b += chunk)
        futures.push_back(std::async(std::launch::async, expand, std::cref(prev), b,
                                     std::min(prev.size(), b + chunk)));
      for (auto& f : futures)
        pieces.push_back(f.get());
    }
    std::vector<ExtAffineElement> shell;
    std::unordered_set<ExtAffineElement, ElementHash> seen;
    for (auto& piece : pieces)
      for (auto& y : piece)
        if (seen.insert(y).second) {
          if (++total > cap)
            throw CapExceeded("ball exceeds cap of " + std::to_string(cap) + " elements");
          shell.push_back(std::move(y));
        }
    shells.push_back(std::move(shell));
  }
  return shells;
}

}  // namespace iwahori
