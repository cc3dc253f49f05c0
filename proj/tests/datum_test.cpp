#include "doctest.h"

#include "iwahori/datum.hpp"
#include "iwahori/errors.hpp"
#include "iwahori/group.hpp"

using namespace iwahori;

namespace {

DatumErrorKind kind_of(const std::string& json) {
  try {
    validate_datum(parse_datum_json_text(json));
  } catch (const DatumError& e) {
    return e.kind();
  }
  FAIL("datum unexpectedly valid: " << json);
  return DatumErrorKind::Malformed;
}

GroupDatum parse(const std::string& json) { return validate_datum(parse_datum_json_text(json)); }

}  // namespace

TEST_CASE("presets") {
  const GroupDatum co = parse(R"({"cartan_type": "A2", "lattice": "coroot"})");
  CHECK(IwahoriWeylGroup(co).lattice_quotient_factors().empty());
  const GroupDatum cw = parse(R"({"cartan_type": "a2", "lattice": "coweight"})");
  CHECK(IwahoriWeylGroup(cw).lattice_quotient_factors() == std::vector<Int>{3});
  CHECK(cw.lattice_basis() == IntMatrix::Identity(2, 2));
  CHECK(co.lattice_basis() == co.root_system().coroot_lattice_basis());
}

TEST_CASE("explicit lattices") {
  // D4: Q^vee plus one fundamental coweight gives an index-2 overlattice.
  const GroupDatum d = parse(
      R"({"cartan_type": "D4", "lattice": {"basis": [[1,0,0,0],[2,-1,0,0],[-1,2,-1,-1],[0,-1,2,0]]}})");
  CHECK(IwahoriWeylGroup(d).lattice_quotient_factors() == std::vector<Int>{2});
  const GroupDatum t = parse(
      R"({"cartan_type": "A1", "lattice": {"basis": [[1]], "torsion": [2], "torsion_action": "trivial"}})");
  CHECK(t.torsion_order() == 2);
  CHECK(t.without_torsion().torsion_rank() == 0);
  // Round trip through the JSON form.
  CHECK(parse(t.to_json().dump()).lattice_basis() == t.lattice_basis());
}

TEST_CASE("validation errors") {
  CHECK(kind_of(R"({"cartan_type": "A2", "lattice": {"basis": [[10,-5],[-5,10]]}})") ==
        DatumErrorKind::LatticeTooSmall);
  CHECK(kind_of(R"({"cartan_type": "A1", "lattice": {"basis": [["1/2"]]}})") ==
        DatumErrorKind::LatticeTooLarge);
  CHECK(kind_of(R"({"cartan_type": "A2", "lattice": {"basis": [[1,0],[2,0]]}})") ==
        DatumErrorKind::NotInjective);
  CHECK(kind_of(R"({"cartan_type": "A2", "lattice": {"basis": [[1,0],[0,1],[1,1]]}})") ==
        DatumErrorKind::NotInjective);
  CHECK(kind_of(R"({"cartan_type": "A2", "lattice": {"basis": [[1,0]]}})") ==
        DatumErrorKind::LatticeTooSmall);
  CHECK(kind_of(R"({"cartan_type": "A2", "lattice": {"basis": [[1,0,0],[0,1,0]]}})") ==
        DatumErrorKind::Malformed);
  CHECK(kind_of(R"({"cartan_type": "A1", "lattice": {"basis": [[1]], "torsion": [1]}})") ==
        DatumErrorKind::Malformed);
  CHECK(kind_of(R"({"cartan_type": "A1", "lattice": {"basis": [[1]], "torsion": [3],
                    "torsion_action": [[[2]]]}})") == DatumErrorKind::ActionNotCompatible);
  CHECK(kind_of(R"({"cartan_type": "A1", "lattice": "coroot", "extra": 1})") ==
        DatumErrorKind::Malformed);
  CHECK(kind_of(R"({"cartan_type": "A1", "lattice": {"basis": [[1]], "bogus": 0}})") ==
        DatumErrorKind::Malformed);
  CHECK(kind_of(R"({"cartan_type": "A1", "lattice": "weird"})") == DatumErrorKind::Malformed);
  CHECK(kind_of(R"({"cartan_type": "A1")") == DatumErrorKind::Malformed);
  CHECK_THROWS_AS(parse(R"({"cartan_type": "Q7", "lattice": "coroot"})"), InvalidCartanType);
}

TEST_CASE("an action that is the identity modulo the torsion order is accepted") {
  const GroupDatum d = parse(
      R"({"cartan_type": "A1", "lattice": {"basis": [[2]], "torsion": [3], "torsion_action": [[[4]]]}})");
  CHECK(d.torsion_order() == 3);
}

TEST_CASE("lattice coordinates") {
  const GroupDatum co = GroupDatum::coroot(CartanType::parse("A2"));
  const IntVector coroot1 = co.root_system().simple_coroot(1);
  CHECK(co.to_lattice_coordinates(coroot1) == (IntVector(2) << 1, 0).finished());
  CHECK(!co.lattice_contains((IntVector(2) << 1, 0).finished()));
  CHECK_THROWS_AS(co.to_lattice_coordinates((IntVector(2) << 1, 0).finished()), InputError);
  const GroupDatum t = GroupDatum::coweight(CartanType::parse("A1"), {2, 4});
  for (Int k = 0; k < t.torsion_order(); ++k)
    CHECK(t.torsion_index(t.torsion_from_index(k)) == k);
  CHECK(t.reduce_torsion((IntVector(2) << -1, 9).finished()) == (IntVector(2) << 1, 1).finished());
}
