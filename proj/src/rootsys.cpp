#include "iwahori/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <unordered_set>

#include "iwahori/errors.hpp"
#include "iwahori/linalg.hpp"

namespace iwahori {

CartanType CartanType::make(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default:
      throw InvalidCartanType(std::string("unknown Cartan family '") + family + "'");
  }
  if (!ok)
    throw InvalidCartanType("invalid rank " + std::to_string(rank) + " for family " + family);
  return CartanType{family, rank};
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2)
    throw InvalidCartanType("malformed Cartan type '" + std::string(text) + "'");
  int rank = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc() || ptr != last)
    throw InvalidCartanType("malformed Cartan type '" + std::string(text) + "'");
  return make(text[0], rank);
}

std::string CartanType::name() const { return family + std::to_string(rank); }

Int FiniteAbelianGroup::order() const {
  Int n = 1;
  for (Int d : invariant_factors)
    n *= d;
  return n;
}

std::string FiniteAbelianGroup::to_string() const {
  if (invariant_factors.empty())
    return "trivial";
  std::string out;
  for (Int d : invariant_factors) {
    if (!out.empty())
      out += " x ";
    out += "Z/" + std::to_string(d);
  }
  return out;
}

namespace {

IntMatrix simple_root_gram(const CartanType& t) {
  const int n = t.rank;
  IntMatrix g = IntMatrix::Zero(n, n);
  auto link = [&](int i, int j, Int value) {  // 1-based nodes
    g(i - 1, j - 1) = value;
    g(j - 1, i - 1) = value;
  };
  switch (t.family) {
    case 'A':
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':  // alpha_n short
      for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 2;
      g(n - 1, n - 1) = 1;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':  // alpha_n long
      for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 2;
      g(n - 1, n - 1) = 4;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case 'D':
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case 'E':
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long
      g(0, 0) = g(1, 1) = 4;
      g(2, 2) = g(3, 3) = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case 'G':  // alpha_1 short
      g(0, 0) = 2;
      g(1, 1) = 6;
      link(1, 2, -3);
      break;
  }
  return g;
}

}  // namespace

RootSystem::RootSystem(CartanType type) : type_(CartanType::make(type.family, type.rank)) {
  const int n = rank();
  gram_ = simple_root_gram(type_);
  cartan_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cartan_(i, j) = 2 * gram_(i, j) / gram_(i, i);

  // Saturate the simple roots under simple reflections, keeping positives.
  std::deque<RootVector> queue;
  for (int i = 1; i <= n; ++i) {
    RootVector a = simple_root(i);
    root_set_.insert(to_std(a));
    positive_.push_back(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVector beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const Int c = cartan_.row(i).dot(beta);  // <alpha_i^vee, beta>
      RootVector image = beta;
      image(i) -= c;
      if (!is_positive_root(image))
        continue;
      if (root_set_.insert(to_std(image)).second) {
        positive_.push_back(image);
        queue.push_back(image);
      }
    }
  }
  std::sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
    if (height(a) != height(b))
      return height(a) < height(b);
    return to_std(a) < to_std(b);
  });
  for (const RootVector& a : positive_)
    root_set_.insert(to_std(-a));
  highest_ = positive_.back();
}

RootSystem build_root_system(CartanType type) { return RootSystem(type); }

std::vector<RootVector> RootSystem::roots() const {
  std::vector<RootVector> out = positive_;
  for (const RootVector& a : positive_)
    out.push_back(-a);
  return out;
}

RootVector RootSystem::two_rho() const {
  RootVector sum = RootVector::Zero(rank());
  for (const RootVector& a : positive_)
    sum += a;
  return sum;
}

RootVector RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank())
    throw std::out_of_range("simple root index out of range");
  RootVector a = RootVector::Zero(rank());
  a(i - 1) = 1;
  return a;
}

IntVector RootSystem::simple_coroot(int i) const {
  if (i < 1 || i > rank())
    throw std::out_of_range("simple coroot index out of range");
  return cartan_.row(i - 1).transpose();
}

bool RootSystem::is_root(const RootVector& v) const {
  return v.size() == rank() && root_set_.count(to_std(v)) > 0;
}

IntVector RootSystem::coroot(const RootVector& root) const {
  if (!is_root(root))
    throw std::invalid_argument("coroot: vector is not a root");
  // <beta^vee, alpha_j> = 2 (beta, alpha_j) / (beta, beta)
  const IntVector products = gram_ * root;
  const Int norm = root.dot(products);
  IntVector out(rank());
  for (int j = 0; j < rank(); ++j)
    out(j) = 2 * products(j) / norm;
  return out;
}

RationalVector RootSystem::alcove_barycenter() const {
  RationalVector b(rank());
  for (int j = 0; j < rank(); ++j)
    b(j) = Rational(1, highest_(j) * (rank() + 1));
  return b;
}

std::size_t RootSystem::weyl_group_order() const {
  std::size_t order = 1;
  for (int k = 2; k <= rank(); ++k)
    order *= static_cast<std::size_t>(k);
  for (int j = 0; j < rank(); ++j)
    order *= static_cast<std::size_t>(highest_(j));
  return order * static_cast<std::size_t>(fundamental_group(*this).order());
}

FiniteWeylElement FiniteWeylElement::identity(int rank) {
  return FiniteWeylElement(IntMatrix::Identity(rank, rank), IntMatrix::Identity(rank, rank));
}

FiniteWeylElement FiniteWeylElement::reflection(const RootSystem& rs, const RootVector& root) {
  const IntVector coroot = rs.coroot(root);
  IntMatrix m = IntMatrix::Identity(rs.rank(), rs.rank()) - coroot * root.transpose();
  return FiniteWeylElement(m, m);
}

int length(const RootSystem& rs, const FiniteWeylElement& w) {
  int count = 0;
  for (const RootVector& a : rs.positive_roots())
    if (!is_positive_root(w.act_on_root(a)))
      ++count;
  return count;
}

std::vector<int> reduced_word(const RootSystem& rs, const FiniteWeylElement& w) {
  std::vector<int> word;
  FiniteWeylElement cur = w;
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= rs.rank(); ++i)
      if (!is_positive_root(cur.act_on_root(rs.simple_root(i)))) {
        descent = i;
        break;
      }
    if (descent == 0)
      break;
    word.push_back(descent);
    cur = cur * FiniteWeylElement::reflection(rs, rs.simple_root(descent));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

FiniteWeylElement finite_from_word(const RootSystem& rs, const std::vector<int>& word) {
  FiniteWeylElement w = FiniteWeylElement::identity(rs.rank());
  for (int i : word) {
    if (i < 1 || i > rs.rank())
      throw InputError("finite word index " + std::to_string(i) + " out of range");
    w = w * FiniteWeylElement::reflection(rs, rs.simple_root(i));
  }
  return w;
}

std::vector<FiniteWeylElement> enumerate_finite_weyl(const RootSystem& rs, int max_rank,
                                                     std::size_t cap) {
  if (rs.rank() > max_rank)
    throw InputError("rank " + std::to_string(rs.rank()) + " exceeds enumeration bound " +
                     std::to_string(max_rank));
  std::vector<FiniteWeylElement> gens;
  for (int i = 1; i <= rs.rank(); ++i)
    gens.push_back(FiniteWeylElement::reflection(rs, rs.simple_root(i)));

  std::vector<FiniteWeylElement> out{FiniteWeylElement::identity(rs.rank())};
  std::unordered_set<FiniteWeylElement, FiniteWeylHash> seen(out.begin(), out.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const FiniteWeylElement& s : gens) {
      FiniteWeylElement next = out[k] * s;
      if (seen.insert(next).second) {
        if (out.size() >= cap)
          throw CapExceeded("finite Weyl group exceeds cap of " + std::to_string(cap));
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

FiniteAbelianGroup fundamental_group(const RootSystem& rs) {
  const SmithForm snf = smith_normal_form(rs.cartan_matrix());
  FiniteAbelianGroup g;
  for (Eigen::Index i = 0; i < snf.diagonal.size(); ++i)
    if (snf.diagonal(i) > 1)
      g.invariant_factors.push_back(snf.diagonal(i));
  return g;
}

}  // namespace iwahori
