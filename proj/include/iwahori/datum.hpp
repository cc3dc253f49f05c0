// A root system together with a translation lattice Q^vee <= L <= P^vee and
// an optional finite torsion group: the input that determines the group.

#ifndef IWAHORI_DATUM_HPP_
#define IWAHORI_DATUM_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "iwahori/core.hpp"
#include "iwahori/rootsys.hpp"

namespace iwahori {

// Unvalidated lattice description. Basis vectors are in fundamental-coweight
// coordinates and may be rational, so that a lattice outside P^vee can be
// stated (and rejected).
struct LatticeSpec {
  std::vector<std::vector<Rational>> basis;
  std::vector<Int> torsion;
  // One matrix per simple reflection s_1..s_r acting on torsion coordinates.
  std::optional<std::vector<IntMatrix>> torsion_action;
};

struct RawDatum {
  std::string cartan_type;
  std::variant<std::string, LatticeSpec> lattice;  // preset name or explicit
};

class GroupDatum {
 public:
  static GroupDatum coroot(CartanType type, std::vector<Int> torsion = {});
  static GroupDatum coweight(CartanType type, std::vector<Int> torsion = {});

  const RootSystem& root_system() const { return *root_system_; }
  int rank() const { return root_system_->rank(); }

  // Columns are the lattice basis in coweight coordinates.
  const IntMatrix& lattice_basis() const { return basis_; }
  const std::vector<Int>& torsion_factors() const { return torsion_; }
  int torsion_rank() const { return static_cast<int>(torsion_.size()); }
  Int torsion_order() const;

  bool lattice_contains(const IntVector& coweight) const;
  // Coordinates of a lattice point over lattice_basis(); throws InputError
  // when the point is not in the lattice.
  IntVector to_lattice_coordinates(const IntVector& coweight) const;
  IntVector from_lattice_coordinates(const IntVector& coords) const { return basis_ * coords; }

  IntVector reduce_torsion(IntVector t) const;
  // Mixed-radix index <-> torsion coordinates.
  IntVector torsion_from_index(Int index) const;
  Int torsion_index(const IntVector& t) const;

  GroupDatum without_torsion() const;

  // Round-trips through parse_datum_json/validate_datum.
  nlohmann::json to_json() const;

  bool same_shape(const GroupDatum& other) const {
    return rank() == other.rank() && torsion_ == other.torsion_;
  }

 private:
  friend GroupDatum validate_datum(const RawDatum& raw);
  GroupDatum() = default;

  std::shared_ptr<const RootSystem> root_system_;
  IntMatrix basis_;
  RationalMatrix basis_inverse_;
  std::vector<Int> torsion_;
};

// Throws DatumError (or InvalidCartanType) describing the first violated
// condition.
GroupDatum validate_datum(const RawDatum& raw);

// Strict: unknown keys and wrong types are rejected with DatumError.
RawDatum parse_datum_json(const nlohmann::json& j);
RawDatum parse_datum_json_text(std::string_view text);

}  // namespace iwahori

#endif  // IWAHORI_DATUM_HPP_
