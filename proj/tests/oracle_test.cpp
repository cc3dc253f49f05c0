#include "doctest.h"

#include "iwahori/errors.hpp"
#include "iwahori/oracle.hpp"

using namespace iwahori;

namespace {

IwahoriWeylGroup make(const char* type, bool coweight = false) {
  const CartanType t = CartanType::parse(type);
  return IwahoriWeylGroup(coweight ? GroupDatum::coweight(t) : GroupDatum::coroot(t));
}

}  // namespace

TEST_CASE("affine maps") {
  const IwahoriWeylGroup g = make("A1");
  const oracle::AffineMap id = oracle::to_affine_map(g, g.identity());
  CHECK(id.linear == RationalMatrix::Identity(1, 1));
  CHECK(id.offset == RationalVector::Zero(1));
  const oracle::AffineMap s1 = oracle::to_affine_map(g, g.generator(1));
  CHECK(s1.linear == RationalMatrix::Constant(1, 1, Rational(-1)));
  CHECK(s1.offset == RationalVector::Zero(1));
  const IntVector lambda = (IntVector(1) << 2).finished();
  const oracle::AffineMap t = oracle::to_affine_map(g, g.translation(lambda));
  CHECK(t.linear == RationalMatrix::Identity(1, 1));
  CHECK(t.offset == lambda.cast<Rational>());
  CHECK(compose(t, s1).apply(RationalVector::Constant(1, Rational(1, 3))) ==
        RationalVector::Constant(1, Rational(5, 3)));
}

TEST_CASE("hyperplane counts") {
  const IwahoriWeylGroup g = make("A1");
  CHECK(oracle::length_by_hyperplanes(g, g.identity()) == 0);
  CHECK(oracle::length_by_hyperplanes(g, g.generator(0)) == 1);
  const IntVector two = 2 * g.root_system().simple_coroot(1);
  CHECK(oracle::length_by_hyperplanes(g, g.translation(two)) == 4);
  const IwahoriWeylGroup g2 = make("G2");
  // Longest element of W_0 crosses every root hyperplane once.
  const auto finite = enumerate_finite_weyl(g2.root_system());
  Int longest = 0;
  for (const auto& w : finite)
    longest = std::max(longest, oracle::length_by_hyperplanes(g2, g2.finite_element(w)));
  CHECK(longest == 6);
}

TEST_CASE("BFS shells") {
  const auto a2 = oracle::bfs_enumerate(make("A2"), 3);
  REQUIRE(a2.size() == 4);
  CHECK(a2[0].elements.size() == 1);
  const IwahoriWeylGroup a1 = make("A1");
  const auto shells = oracle::bfs_enumerate(a1, 10);
  CHECK(shells[1].elements.size() == 2);
  CHECK((shells[1].elements[0] == a1.generator(0) || shells[1].elements[1] == a1.generator(0)));
  for (std::size_t k = 1; k < shells.size(); ++k)
    CHECK(shells[k].elements.size() == 2);
  CHECK(oracle::bfs_enumerate(make("A3", true), 0)[0].elements.size() == 4);
  CHECK_THROWS_AS(oracle::bfs_enumerate(make("A3"), 10, 50), CapExceeded);
}

TEST_CASE("partition") {
  const IwahoriWeylGroup g = make("A2");
  std::vector<ExtAffineElement> ball;
  for (const auto& s : oracle::bfs_enumerate(g, 4))
    ball.insert(ball.end(), s.elements.begin(), s.elements.end());
  const auto singletons = oracle::double_coset_partition(g, {}, {}, ball);
  CHECK(singletons.classes.size() == ball.size());
  const auto one = oracle::double_coset_partition(g, {1, 2}, {0}, {g.identity()});
  CHECK(one.classes.size() == 1);
  CHECK(one.truncated[0]);
  const auto finite = oracle::double_coset_partition(g, {1, 2}, {1, 2}, ball);
  std::size_t total = 0;
  for (const auto& c : finite.classes)
    total += c.size();
  CHECK(total == ball.size());
  CHECK(!finite.truncated[0]);  // W_0 itself fits in the ball
  CHECK(finite.classes[0].size() == 6);
}

TEST_CASE("reduced words and subwords") {
  const IwahoriWeylGroup g = make("A2");
  const ExtAffineElement w0 = g.from_word({1, 2, 1});
  const auto words = oracle::all_reduced_words(g, w0);
  CHECK(words.size() == 2);
  CHECK(oracle::bruhat_leq_subword(g, g.generator(2), w0, {1, 2, 1}));
  CHECK(!oracle::bruhat_leq_subword(g, g.generator(0), w0, {1, 2, 1}));
  CHECK(oracle::all_reduced_words(g, g.identity()) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("omega search and alcove test") {
  const IwahoriWeylGroup g = make("C3", true);
  const auto found = oracle::omega_by_search(g);
  CHECK(found.size() == 2);
  for (const ExtAffineElement& w : found) {
    CHECK(oracle::fixes_base_alcove(g, w));
    CHECK(oracle::length_by_hyperplanes(g, w) == 0);
  }
  CHECK(!oracle::fixes_base_alcove(g, g.generator(0)));
  CHECK(oracle::in_affine_weyl(g, g.generator(0)));
  CHECK(!oracle::in_affine_weyl(g, g.translation((IntVector(3) << 0, 0, 1).finished())));
  CHECK_THROWS_AS(oracle::omega_by_search(make("E8")), CapExceeded);
}
