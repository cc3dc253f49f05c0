#include <random>
#include <set>

#include "doctest.h"

#include "iwahori/errors.hpp"
#include "iwahori/linalg.hpp"
#include "iwahori/rootsys.hpp"

using namespace iwahori;

namespace {

RootVector rv(std::initializer_list<Int> xs) { return from_std(std::vector<Int>(xs)); }

// Orbit of the simple roots under simple reflections, using only the Gram
// matrix: s_i(b) = b - 2 (b, a_i) / (a_i, a_i) a_i.
std::set<std::vector<Int>> reflection_closure(const RootSystem& rs) {
  const IntMatrix& gram = rs.simple_root_products();
  const int r = rs.rank();
  std::set<std::vector<Int>> seen;
  std::vector<RootVector> todo;
  for (int i = 0; i < r; ++i) {
    RootVector e = RootVector::Zero(r);
    e(i) = 1;
    todo.push_back(e);
  }
  while (!todo.empty()) {
    RootVector b = todo.back();
    todo.pop_back();
    if (!seen.insert(to_std(b)).second)
      continue;
    for (int i = 0; i < r; ++i) {
      const Int num = 2 * (gram.row(i) * b)(0);
      REQUIRE(num % gram(i, i) == 0);
      RootVector c = b;
      c(i) -= num / gram(i, i);
      todo.push_back(c);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("cartan types parse case-insensitively and enforce rank limits") {
  CHECK(CartanType::parse("g2").name() == "G2");
  CHECK(CartanType::parse("E8").rank == 8);
  CHECK_THROWS_AS(CartanType::parse("B1"), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("D2"), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("E9"), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("F3"), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("H3"), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("A 2"), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse(""), InvalidCartanType);
}

TEST_CASE("A1 and A2 basics") {
  const RootSystem a1 = build_root_system(CartanType::parse("A1"));
  CHECK(a1.positive_roots().size() == 1);
  CHECK(a1.highest_root() == rv({1}));
  CHECK(a1.cartan_matrix() == (IntMatrix(1, 1) << 2).finished());

  const RootSystem a2 = build_root_system(CartanType::parse("A2"));
  CHECK(a2.highest_root() == rv({1, 1}));
  CHECK(a2.two_rho() == rv({2, 2}));
  CHECK(pairing(a2.highest_root(), a2.simple_coroot(1)) == 1);
}

TEST_CASE("positive roots match an independent reflection closure") {
  const std::vector<std::pair<std::string, std::size_t>> counts = {
      {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},  {"B3", 9},  {"B4", 16},
      {"C2", 4},  {"C3", 9},  {"C4", 16}, {"D4", 12}, {"G2", 6},  {"F4", 24}, {"E6", 36},
      {"E7", 63}, {"E8", 120}};
  for (const auto& [name, n] : counts) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(CartanType::parse(name));
    CHECK(rs.positive_roots().size() == n);
    const auto closure = reflection_closure(rs);
    CHECK(closure.size() == 2 * n);
    for (const RootVector& a : rs.positive_roots()) {
      CHECK(closure.count(to_std(a)) == 1);
      CHECK(rs.is_root(-a));
      CHECK(!rs.is_root(2 * a));
      // theta dominates every positive root coefficientwise
      CHECK(((rs.highest_root() - a).array() >= 0).all());
    }
  }
}

TEST_CASE("Cartan matrix is the coroot pairing") {
  for (const char* name : {"A3", "B3", "C3", "D5", "G2", "F4", "E6"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(CartanType::parse(name));
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = 1; j <= rs.rank(); ++j)
        CHECK(pairing(rs.simple_root(j), rs.simple_coroot(i)) == rs.cartan_matrix()(i - 1, j - 1));
  }
}

TEST_CASE("pairing and reflection examples") {
  const RootSystem a2 = build_root_system(CartanType::parse("A2"));
  const IntVector w1 = (IntVector(2) << 1, 0).finished();
  CHECK(pairing(a2.simple_root(1), w1) == 1);
  CHECK(pairing(a2.simple_root(1), IntVector::Zero(2)) == 0);
  CHECK(reflect(a2, a2.simple_root(1), w1) == w1 - a2.simple_coroot(1));
  const IntVector cor = a2.simple_coroot(1);
  CHECK(reflect(a2, a2.simple_root(1), cor) == -cor);
  const IntVector fixed = (IntVector(2) << 0, 3).finished();
  CHECK(reflect(a2, a2.simple_root(1), fixed) == fixed);
  CHECK_THROWS(reflect(a2, rv({1, -1}), w1));
}

TEST_CASE("reflections are involutions on random rational points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Int> num(-50, 50), den(1, 9);
  for (const char* name : {"A3", "B3", "C4", "G2", "F4"}) {
    const RootSystem rs = build_root_system(CartanType::parse(name));
    for (const RootVector& a : rs.positive_roots())
      for (int k = 0; k < 100; ++k) {
        RationalVector p(rs.rank());
        for (int j = 0; j < rs.rank(); ++j)
          p(j) = Rational(num(rng), den(rng));
        CHECK(reflect(rs, a, reflect(rs, a, p)) == p);
      }
  }
}

TEST_CASE("finite Weyl group enumeration") {
  CHECK(enumerate_finite_weyl(build_root_system(CartanType::parse("A1"))).size() == 2);
  CHECK(enumerate_finite_weyl(build_root_system(CartanType::parse("A2"))).size() == 6);
  CHECK(enumerate_finite_weyl(build_root_system(CartanType::parse("B2"))).size() == 8);
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(CartanType::parse(name));
    const auto all = enumerate_finite_weyl(rs);
    CHECK(all.size() == rs.weyl_group_order());
    std::size_t max_len = 0;
    for (const auto& w : all) {
      const auto word = reduced_word(rs, w);
      CHECK(static_cast<int>(word.size()) == length(rs, w));
      CHECK(finite_from_word(rs, word) == w);
      max_len = std::max(max_len, word.size());
    }
    CHECK(max_len == rs.positive_roots().size());
  }
  CHECK(build_root_system(CartanType::parse("E8")).weyl_group_order() == 696729600);
  CHECK_THROWS_AS(enumerate_finite_weyl(build_root_system(CartanType::parse("A9"))), InputError);
  CHECK_THROWS_AS(enumerate_finite_weyl(build_root_system(CartanType::parse("E8")), 8, 1000),
                  CapExceeded);
}

TEST_CASE("fundamental group") {
  CHECK(fundamental_group(build_root_system(CartanType::parse("A2"))).to_string() == "Z/3");
  CHECK(fundamental_group(build_root_system(CartanType::parse("B2"))).to_string() == "Z/2");
  CHECK(fundamental_group(build_root_system(CartanType::parse("G2"))).trivial());
  CHECK(fundamental_group(build_root_system(CartanType::parse("D4"))).to_string() == "Z/2 x Z/2");
  for (const char* name : {"A1", "A4", "B3", "C4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    CAPTURE(name);
    const RootSystem rs = build_root_system(CartanType::parse(name));
    const Rational det = determinant(rs.cartan_matrix());
    CHECK(fundamental_group(rs).order() == det.numerator());
  }
}

TEST_CASE("Smith normal form reproduces its input") {
  const IntMatrix a = (IntMatrix(3, 3) << 2, 4, 4, -6, 6, 12, 10, -4, -16).finished();
  const SmithForm s = smith_normal_form(a);
  IntMatrix d = IntMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i)
    d(i, i) = s.diagonal(i);
  CHECK(s.left * a * s.right == d);
  CHECK(s.diagonal == (IntVector(3) << 2, 6, 12).finished());
  CHECK(integral_inverse(s.left).has_value());
  CHECK(integral_inverse(s.right).has_value());
}
