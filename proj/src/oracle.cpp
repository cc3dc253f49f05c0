#include "iwahori/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "iwahori/errors.hpp"
#include "iwahori/linalg.hpp"

namespace iwahori::oracle {

namespace {

Rational evaluate(const RootVector& root, const RationalVector& p) {
  Rational s(0);
  for (Eigen::Index j = 0; j < p.size(); ++j)
    s += Rational(root(j)) * p(j);
  return s;
}

bool in_base_alcove(const RootSystem& rs, const RationalVector& p) {
  for (Eigen::Index j = 0; j < p.size(); ++j)
    if (sign(p(j)) <= 0)
      return false;
  return evaluate(rs.highest_root(), p) < Rational(1);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a)
      a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// The unique omega with x * omega^{-1} in W_a.
ExtAffineElement omega_part(const IwahoriWeylGroup& g, const ExtAffineElement& x,
                            const std::vector<ExtAffineElement>& omegas) {
  for (const ExtAffineElement& w : omegas)
    if (in_affine_weyl(g, g.multiply(x, g.invert(w))))
      return w;
  throw InternalInvariantError("element lies in no W_a coset of Omega");
}

}  // namespace

std::size_t AffineMapHash::operator()(const AffineMap& f) const {
  std::size_t h = 0;
  auto mix = [&h](const Rational& q) {
    h ^= std::hash<Int>{}(q.numerator() * 31 + q.denominator()) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  };
  for (Eigen::Index i = 0; i < f.linear.size(); ++i)
    mix(f.linear.data()[i]);
  for (Eigen::Index i = 0; i < f.offset.size(); ++i)
    mix(f.offset(i));
  return h;
}

AffineMap to_affine_map(const IwahoriWeylGroup& g, const ExtAffineElement& x) {
  if (!g.same_group(x))
    throw std::invalid_argument("to_affine_map: element does not belong to this datum");
  return AffineMap{x.finite.matrix().cast<Rational>(), x.translation.cast<Rational>()};
}

Int length_by_hyperplanes(const IwahoriWeylGroup& g, const ExtAffineElement& x) {
  const RootSystem& rs = g.root_system();
  const RationalVector b = rs.alcove_barycenter();
  const RationalVector xb = to_affine_map(g, x).apply(b);
  Int bound = 0;
  for (const RootVector& a : rs.positive_roots())
    bound = std::max(bound, std::abs(static_cast<Int>(a.dot(x.translation))));
  bound += 1;
  Int walls = 0;
  for (const RootVector& a : rs.positive_roots()) {
    const Rational at_b = evaluate(a, b);
    const Rational at_xb = evaluate(a, xb);
    for (Int k = -bound; k <= bound; ++k)
      if (sign(at_b + Rational(k)) != sign(at_xb + Rational(k)))
        ++walls;
  }
  return walls;
}

bool fixes_base_alcove(const IwahoriWeylGroup& g, const ExtAffineElement& x) {
  const RootSystem& rs = g.root_system();
  return in_base_alcove(rs, to_affine_map(g, x).apply(rs.alcove_barycenter()));
}

bool in_affine_weyl(const IwahoriWeylGroup& g, const ExtAffineElement& x) {
  if (!x.torsion.isZero())
    return false;
  const auto inv = inverse(g.root_system().coroot_lattice_basis().cast<Rational>());
  return is_integral(RationalVector(*inv * x.translation.cast<Rational>()));
}

std::vector<ExtAffineElement> omega_by_search(const IwahoriWeylGroup& g, std::size_t cap) {
  const RootSystem& rs = g.root_system();
  if (rs.weyl_group_order() > cap)
    throw CapExceeded("finite Weyl group of order " + std::to_string(rs.weyl_group_order()) +
                      " exceeds the search cap");
  const std::vector<FiniteWeylElement> finite = enumerate_finite_weyl(rs);
  const int r = g.rank();
  const GroupDatum& d = g.datum();
  std::vector<ExtAffineElement> out;
  for (Int mask = 0; mask < (Int(1) << r); ++mask) {
    IntVector lambda(r);
    for (int j = 0; j < r; ++j)
      lambda(j) = (mask >> j) & 1;
    if (!d.lattice_contains(lambda))
      continue;
    for (const FiniteWeylElement& w : finite)
      for (Int t = 0; t < d.torsion_order(); ++t) {
        ExtAffineElement x = g.make_element(d.torsion_from_index(t), lambda, w);
        if (fixes_base_alcove(g, x))
          out.push_back(std::move(x));
      }
  }
  return out;
}

std::vector<Shell> bfs_enumerate(const IwahoriWeylGroup& g, int max_len, std::size_t cap) {
  std::unordered_set<ExtAffineElement, ElementHash> seen;
  std::vector<Shell> shells;
  Shell first;
  for (ExtAffineElement& w : omega_by_search(g)) {
    seen.insert(w);
    first.elements.push_back(std::move(w));
  }
  shells.push_back(std::move(first));
  for (int k = 1; k <= max_len; ++k) {
    Shell next;
    next.length = k;
    for (const ExtAffineElement& x : shells.back().elements)
      for (int i = 0; i < g.num_generators(); ++i) {
        ExtAffineElement y = g.multiply(x, g.generator(i));
        if (seen.count(y))
          continue;
        if (seen.size() >= cap)
          throw CapExceeded("BFS enumeration exceeds " + std::to_string(cap) + " elements");
        seen.insert(y);
        next.elements.push_back(std::move(y));
      }
    shells.push_back(std::move(next));
  }
  return shells;
}

Partition double_coset_partition(const IwahoriWeylGroup& g, const std::vector<int>& left,
                                 const std::vector<int>& right,
                                 const std::vector<ExtAffineElement>& ball) {
  std::unordered_map<ExtAffineElement, std::size_t, ElementHash> index;
  for (std::size_t k = 0; k < ball.size(); ++k)
    index.emplace(ball[k], k);
  UnionFind uf(ball.size());
  std::vector<bool> leaks(ball.size(), false);
  auto link = [&](std::size_t k, const ExtAffineElement& y) {
    auto it = index.find(y);
    if (it == index.end())
      leaks[k] = true;
    else
      uf.unite(k, it->second);
  };
  for (std::size_t k = 0; k < ball.size(); ++k) {
    for (int i : left)
      link(k, g.multiply(g.generator(i), ball[k]));
    for (int j : right)
      link(k, g.multiply(ball[k], g.generator(j)));
  }
  std::map<std::size_t, std::size_t> slot;
  Partition p;
  for (std::size_t k = 0; k < ball.size(); ++k) {
    auto [it, inserted] = slot.emplace(uf.find(k), p.classes.size());
    if (inserted) {
      p.classes.emplace_back();
      p.truncated.push_back(false);
    }
    p.classes[it->second].push_back(k);
    if (leaks[k])
      p.truncated[it->second] = true;
  }
  return p;
}

std::vector<std::vector<int>> all_reduced_words(const IwahoriWeylGroup& g,
                                                const ExtAffineElement& x, std::size_t limit) {
  const ExtAffineElement xa = g.multiply(x, g.invert(omega_part(g, x, omega_by_search(g))));
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  // Peel off s_i from the left whenever it lowers the hyperplane count.
  auto extend = [&](auto&& self, const ExtAffineElement& rest, Int len) -> void {
    if (len == 0) {
      out.push_back(prefix);
      if (out.size() > limit)
        throw CapExceeded("too many reduced words");
      return;
    }
    for (int i = 0; i < g.num_generators(); ++i) {
      const ExtAffineElement shorter = g.multiply(g.generator(i), rest);
      if (length_by_hyperplanes(g, shorter) != len - 1)
        continue;
      prefix.push_back(i);
      self(self, shorter, len - 1);
      prefix.pop_back();
    }
  };
  extend(extend, xa, length_by_hyperplanes(g, xa));
  return out;
}

bool bruhat_leq_subword(const IwahoriWeylGroup& g, const ExtAffineElement& x,
                        const ExtAffineElement& y, const std::vector<int>& y_word) {
  ExtAffineElement ya = g.identity();
  for (int s : y_word)
    ya = g.multiply(ya, g.generator(s));
  const ExtAffineElement omega = g.multiply(g.invert(ya), y);
  const ExtAffineElement xa = g.multiply(x, g.invert(omega));
  if (!in_affine_weyl(g, xa))
    return false;
  const std::size_t n = y_word.size();
  if (n > 20)
    throw CapExceeded("subword scan over more than 2^20 subwords");
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    ExtAffineElement p = g.identity();
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1)
        p = g.multiply(p, g.generator(y_word[k]));
    if (p == xa)
      return true;
  }
  return false;
}

OrbitMinimum double_coset_minimum(const IwahoriWeylGroup& g, const ExtAffineElement& x,
                                  const ParabolicSubgroup& left, const ParabolicSubgroup& right) {
  std::unordered_set<ExtAffineElement, ElementHash> orbit;
  for (const ExtAffineElement& a : left.elements())
    for (const ExtAffineElement& b : right.elements())
      orbit.insert(g.multiply(g.multiply(a, x), b));
  OrbitMinimum m;
  m.orbit_size = orbit.size();
  m.length = -1;
  for (const ExtAffineElement& y : orbit) {
    const Int len = length_by_hyperplanes(g, y);
    if (m.length < 0 || len < m.length) {
      m.length = len;
      m.minimal = y;
      m.minimizers = 1;
    } else if (len == m.length) {
      ++m.minimizers;
    }
  }
  return m;
}

}  // namespace iwahori::oracle
