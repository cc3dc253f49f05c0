#include <algorithm>

#include "doctest.h"

#include "iwahori/cosets.hpp"
#include "iwahori/errors.hpp"
#include "iwahori/oracle.hpp"

using namespace iwahori;

namespace {

IwahoriWeylGroup make(const char* type, bool coweight = false) {
  const CartanType t = CartanType::parse(type);
  return IwahoriWeylGroup(coweight ? GroupDatum::coweight(t) : GroupDatum::coroot(t));
}

std::vector<ExtAffineElement> ball(const IwahoriWeylGroup& g, int max_len) {
  std::vector<ExtAffineElement> out;
  for (const auto& shell : g.enumerate_ball(max_len))
    out.insert(out.end(), shell.begin(), shell.end());
  return out;
}

}  // namespace

TEST_CASE("parabolic subgroups") {
  const IwahoriWeylGroup a2 = make("A2");
  CHECK(parabolic(a2, {}).size() == 1);
  CHECK(parabolic(a2, {1, 2}).size() == 6);
  CHECK(parabolic(a2, {0, 1}).size() == 6);
  CHECK(parabolic(make("C2"), {0, 2}).size() == 4);
  CHECK(parabolic(make("G2"), {1, 2}).size() == 12);
  CHECK(parabolic(make("F4"), {1, 2, 3, 4}).size() == 1152);
  CHECK(parabolic(make("F4"), {0, 1, 2, 3}).size() == 384);
  CHECK_THROWS_AS(parabolic(make("A1"), {0, 1}), NotFinite);
  CHECK_THROWS_AS(parabolic(a2, {0, 1, 2}), NotFinite);
  CHECK_THROWS_AS(parabolic(a2, {3}), InputError);
  CHECK_THROWS_AS(parabolic(make("E8"), {1, 2, 3, 4, 5, 6, 7, 8}, 1000), NotFinite);
}

TEST_CASE("min_double_rep basics") {
  const IwahoriWeylGroup g = make("C2");
  const ParabolicSubgroup fin = parabolic(g, {1, 2});
  const ParabolicSubgroup none = parabolic(g, {});
  for (const ExtAffineElement& x : fin.elements()) {
    const DoubleCosetFactorization f = min_double_rep(g, x, fin, none);
    CHECK(f.left == x);
    CHECK(f.minimal == g.identity());
    CHECK(f.right == g.identity());
  }
  const ExtAffineElement s0 = g.generator(0);
  const DoubleCosetFactorization f = min_double_rep(g, s0, fin, fin);
  CHECK(f.left == g.identity());
  CHECK(f.minimal == s0);
  CHECK(f.right == g.identity());
}

TEST_CASE("C2 translation by the first simple coroot") {
  const IwahoriWeylGroup g = make("C2");
  const ParabolicSubgroup fin = parabolic(g, {1, 2});
  const ExtAffineElement x = g.translation(g.root_system().simple_coroot(1));
  const oracle::OrbitMinimum m = oracle::double_coset_minimum(g, x, fin, fin);
  CHECK(m.minimizers == 1);
  const DoubleCosetFactorization f = min_double_rep(g, x, fin, fin);
  CHECK(f.minimal == m.minimal);
  CHECK(g.multiply(g.multiply(f.left, f.minimal), f.right) == x);
  CHECK(fin.contains(f.left));
  CHECK(fin.contains(f.right));
  CHECK(g.length(f.minimal) == m.length);
}

TEST_CASE("Bruhat order in A1") {
  const IwahoriWeylGroup g = make("A1");
  const ExtAffineElement s0 = g.generator(0), s1 = g.generator(1);
  CHECK(bruhat_leq(g, s1, g.multiply(s0, s1)));
  CHECK(!bruhat_leq(g, s0, s1));
  CHECK(bruhat_leq(g, g.identity(), g.multiply(s0, s1)));
  CHECK(bruhat_leq(g, s0, s0));
  CHECK_THROWS_AS(bruhat_leq_along(g, s1, g.multiply(s0, s1), {1, 0}), InputError);
  CHECK_THROWS_AS(bruhat_leq_along(g, s1, g.multiply(s0, s1), {0, 1, 1, 1}), InputError);
  // Different Omega components never compare.
  const IwahoriWeylGroup h = make("A1", true);
  const ExtAffineElement w = h.omega_group()[1];
  CHECK(!bruhat_leq(h, h.identity(), w));
  CHECK(bruhat_leq(h, w, h.multiply(h.generator(0), w)));
}

TEST_CASE("Bruhat order agrees with the subword scan over every reduced word") {
  const IwahoriWeylGroup g = make("A2", true);
  const auto elements = ball(g, 4);
  for (const ExtAffineElement& y : elements) {
    const auto words = oracle::all_reduced_words(g, y);
    for (const ExtAffineElement& x : elements) {
      const bool expected = oracle::bruhat_leq_subword(g, x, y, words.front());
      CHECK(bruhat_leq(g, x, y) == expected);
      for (const auto& w : words)
        CHECK(bruhat_leq_along(g, x, y, w) == expected);
    }
  }
}

TEST_CASE("double coset enumeration") {
  const IwahoriWeylGroup g = make("A2");
  const ParabolicSubgroup none = parabolic(g, {});
  const ParabolicSubgroup fin = parabolic(g, {1, 2});
  CHECK(enumerate_double_cosets(g, none, none, 4).size() == ball(g, 4).size());
  const IwahoriWeylGroup h = make("A2", true);
  CHECK(enumerate_double_cosets(h, parabolic(h, {1}), parabolic(h, {2}), 0).size() == 3);

  const auto reps = enumerate_double_cosets(g, fin, fin, 0);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].x0 == g.identity());
  CHECK(reps[0].size_in_ball == 1);
  CHECK(reps[0].truncated);

  const auto full = enumerate_double_cosets(g, fin, fin, 6);
  const auto p = oracle::double_coset_partition(g, {1, 2}, {1, 2}, ball(g, 6));
  CHECK(full.size() == p.classes.size());
  CHECK(std::is_sorted(full.begin(), full.end(), [](const auto& a, const auto& b) {
    return std::tie(a.length, a.word) < std::tie(b.length, b.word);
  }));
  CHECK(double_coset_size(g, g.identity(), fin, fin) == 6);
  const auto j = full.front().to_json();
  CHECK(j.contains("x0_word"));
  CHECK(j.contains("omega"));
  CHECK(j.contains("length"));
  CHECK(j.contains("coset_size_in_ball"));
  CHECK_THROWS_AS(enumerate_double_cosets(g, fin, parabolic(g, {0}), 30, 100), CapExceeded);
}

TEST_CASE("diagram automorphisms of A3") {
  const IwahoriWeylGroup g = make("A3", true);
  const DiagramAutomorphism flip = make_diagram_automorphism(g, {0, 3, 2, 1});
  CHECK(apply_sigma(g, flip, g.generator(1)) == g.generator(3));
  CHECK(apply_sigma(g, flip, g.generator(0)) == g.generator(0));
  const DiagramAutomorphism id = make_diagram_automorphism(g, {0, 1, 2, 3});
  const DiagramAutomorphism rot = make_diagram_automorphism(g, {1, 2, 3, 0});
  for (const ExtAffineElement& x : ball(g, 5)) {
    CHECK(apply_sigma(g, id, x) == x);
    CHECK(g.length(apply_sigma(g, flip, x)) == g.length(x));
    CHECK(g.length(apply_sigma(g, rot, x)) == g.length(x));
    ExtAffineElement y = x;
    for (int k = 0; k < 4; ++k)
      y = apply_sigma(g, rot, y);
    CHECK(y == x);
  }
  // The rotation also makes sense on the coroot lattice.
  const IwahoriWeylGroup q = make("A3");
  const DiagramAutomorphism qrot = make_diagram_automorphism(q, {1, 2, 3, 0});
  CHECK(apply_sigma(q, qrot, q.generator(3)) == q.generator(0));
}

TEST_CASE("conjugation by Omega is a diagram automorphism") {
  for (const char* type : {"A3", "C3", "D4", "B3"}) {
    CAPTURE(type);
    const IwahoriWeylGroup g = make(type, true);
    for (const ExtAffineElement& w : g.omega_group()) {
      std::vector<int> perm;
      for (int i = 0; i <= g.rank(); ++i)
        for (int j = 0; j <= g.rank(); ++j)
          if (g.conjugate(w, g.generator(i)) == g.generator(j))
            perm.push_back(j);
      REQUIRE(static_cast<int>(perm.size()) == g.num_generators());
      const DiagramAutomorphism sigma = make_diagram_automorphism(g, perm);
      for (const ExtAffineElement& x : ball(g, 4))
        CHECK(apply_sigma(g, sigma, x) == g.conjugate(w, x));
    }
  }
}

TEST_CASE("incompatible sigmas are rejected") {
  const IwahoriWeylGroup c2 = make("C2");
  CHECK_THROWS_AS(make_diagram_automorphism(c2, {1, 0, 2}), SigmaIncompatible);
  CHECK_THROWS_AS(make_diagram_automorphism(c2, {0, 1}), SigmaIncompatible);
  CHECK_THROWS_AS(make_diagram_automorphism(c2, {0, 0, 2}), SigmaIncompatible);
  CHECK_NOTHROW(make_diagram_automorphism(c2, {2, 1, 0}));
  // Triality on a lattice that only contains one minuscule coweight class.
  const IwahoriWeylGroup d4(validate_datum(parse_datum_json_text(
      R"({"cartan_type": "D4", "lattice": {"basis": [[1,0,0,0],[2,-1,0,0],[-1,2,-1,-1],[0,-1,2,0]]}})")));
  CHECK_THROWS_AS(make_diagram_automorphism(d4, {0, 3, 2, 4, 1}), SigmaIncompatible);
  CHECK_NOTHROW(make_diagram_automorphism(d4, {0, 1, 2, 4, 3}));
  // An explicit lattice matrix must agree with the derived one.
  const IwahoriWeylGroup a3 = make("A3", true);
  const IntMatrix swap = (IntMatrix(3, 3) << 0, 0, 1, 0, 1, 0, 1, 0, 0).finished();
  CHECK_NOTHROW(make_diagram_automorphism(a3, {0, 3, 2, 1}, swap));
  CHECK_THROWS_AS(make_diagram_automorphism(a3, {0, 3, 2, 1}, IntMatrix::Identity(3, 3)),
                  SigmaIncompatible);
  CHECK_THROWS_AS(parse_sigma_json(a3, nlohmann::json::parse(R"({"permutation": [0,3,2,1], "x": 1})")),
                  SigmaIncompatible);
  CHECK_NOTHROW(parse_sigma_json(
      a3, nlohmann::json::parse(R"({"permutation": [0,3,2,1], "lattice": [[0,0,1],[0,1,0],[1,0,0]]})")));
}

TEST_CASE("torsion automorphisms") {
  const IwahoriWeylGroup g(GroupDatum::coweight(CartanType::parse("A1"), {3}));
  const IntMatrix neg = (IntMatrix(1, 1) << 2).finished();
  const DiagramAutomorphism sigma = make_diagram_automorphism(g, {0, 1}, std::nullopt, neg);
  const ExtAffineElement t = g.torsion_element((IntVector(1) << 1).finished());
  CHECK(apply_sigma(g, sigma, t) == g.multiply(t, t));
  CHECK_THROWS_AS(make_diagram_automorphism(g, {0, 1}, std::nullopt,
                                            (IntMatrix(1, 1) << 3).finished()),
                  SigmaIncompatible);
}

TEST_CASE("descent check") {
  const IwahoriWeylGroup g = make("A3");
  const DiagramAutomorphism id = make_diagram_automorphism(g, {0, 1, 2, 3});
  const ParabolicSubgroup fin = parabolic(g, {1, 2, 3});
  const DescentReport trivial = descent_check(g, id, fin, fin, 4);
  CHECK(trivial.ok());
  CHECK(trivial.stable_cosets == trivial.cosets);
  CHECK(trivial.fixed_representatives == trivial.cosets);

  const DiagramAutomorphism flip = make_diagram_automorphism(g, {0, 3, 2, 1});
  for (const std::vector<int>& J : {std::vector<int>{1, 2, 3}, {0, 1, 3}, {0, 2}}) {
    const ParabolicSubgroup p = parabolic(g, J);
    const DescentReport r = descent_check(g, flip, p, p, 6);
    CHECK(r.ok());
    CHECK(r.counterexamples.empty());
    CHECK(r.stable_cosets < r.cosets);
  }
  CHECK_THROWS_AS(descent_check(g, flip, parabolic(g, {1}), fin, 3), InputError);
  CHECK(flip.image({1, 2}) == std::vector<int>{2, 3});
}

TEST_CASE("min_double_rep is sigma-equivariant") {
  const IwahoriWeylGroup g = make("A3", true);
  const DiagramAutomorphism flip = make_diagram_automorphism(g, {0, 3, 2, 1});
  const std::vector<int> J = {1}, Jp = {0, 2, 3};
  const ParabolicSubgroup left = parabolic(g, J), right = parabolic(g, Jp);
  const ParabolicSubgroup sleft = parabolic(g, flip.image(J));
  const ParabolicSubgroup sright = parabolic(g, flip.image(Jp));
  for (const ExtAffineElement& x : ball(g, 5)) {
    const ExtAffineElement x0 = min_double_rep(g, x, left, right).minimal;
    const ExtAffineElement sx = apply_sigma(g, flip, x);
    CHECK(min_double_rep(g, sx, sleft, sright).minimal == apply_sigma(g, flip, x0));
  }
}
