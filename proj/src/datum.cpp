#include "iwahori/datum.hpp"

#include <charconv>

#include "iwahori/errors.hpp"
#include "iwahori/linalg.hpp"

namespace iwahori {

namespace {

[[noreturn]] void fail(DatumErrorKind kind, const std::string& what) {
  throw DatumError(kind, what);
}

Int parse_int(std::string_view s) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(DatumErrorKind::Malformed, "bad integer '" + std::string(s) + "'");
  return v;
}

Rational parse_rational(const nlohmann::json& j) {
  if (j.is_number_integer())
    return Rational(j.get<Int>());
  if (!j.is_string())
    fail(DatumErrorKind::Malformed, "basis entries must be integers or \"p/q\" strings");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos)
    return Rational(parse_int(s));
  const Int den = parse_int(std::string_view(s).substr(slash + 1));
  if (den == 0)
    fail(DatumErrorKind::Malformed, "zero denominator in '" + s + "'");
  return Rational(parse_int(std::string_view(s).substr(0, slash)), den);
}

void reject_unknown_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      known = known || it.key() == k;
    if (!known)
      fail(DatumErrorKind::Malformed, std::string("unknown key '") + it.key() + "' in " + where);
  }
}

IntMatrix parse_int_matrix(const nlohmann::json& j) {
  if (!j.is_array())
    fail(DatumErrorKind::Malformed, "torsion_action matrices must be arrays of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  IntMatrix m(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows)
      fail(DatumErrorKind::Malformed, "torsion_action matrices must be square");
    for (Eigen::Index k = 0; k < rows; ++k) {
      if (!row[static_cast<std::size_t>(k)].is_number_integer())
        fail(DatumErrorKind::Malformed, "torsion_action entries must be integers");
      m(i, k) = row[static_cast<std::size_t>(k)].get<Int>();
    }
  }
  return m;
}

}  // namespace

Int GroupDatum::torsion_order() const {
  Int n = 1;
  for (Int d : torsion_)
    n *= d;
  return n;
}

bool GroupDatum::lattice_contains(const IntVector& coweight) const {
  if (coweight.size() != rank())
    return false;
  return is_integral(basis_inverse_ * coweight.cast<Rational>());
}

IntVector GroupDatum::to_lattice_coordinates(const IntVector& coweight) const {
  if (coweight.size() != rank())
    throw InputError("translation has wrong rank");
  const RationalVector c = basis_inverse_ * coweight.cast<Rational>();
  if (!is_integral(c))
    throw InputError("translation is not in the lattice");
  return to_integer(c);
}

IntVector GroupDatum::reduce_torsion(IntVector t) const {
  if (t.size() != torsion_rank())
    throw InputError("torsion vector has wrong size");
  for (int i = 0; i < torsion_rank(); ++i)
    t(i) = mod_floor(t(i), torsion_[static_cast<std::size_t>(i)]);
  return t;
}

IntVector GroupDatum::torsion_from_index(Int index) const {
  if (index < 0 || index >= torsion_order())
    throw InputError("torsion index " + std::to_string(index) + " out of range");
  IntVector t(torsion_rank());
  for (int i = torsion_rank() - 1; i >= 0; --i) {
    t(i) = index % torsion_[static_cast<std::size_t>(i)];
    index /= torsion_[static_cast<std::size_t>(i)];
  }
  return t;
}

Int GroupDatum::torsion_index(const IntVector& t) const {
  Int index = 0;
  for (int i = 0; i < torsion_rank(); ++i)
    index = index * torsion_[static_cast<std::size_t>(i)] + t(i);
  return index;
}

GroupDatum GroupDatum::without_torsion() const {
  GroupDatum d = *this;
  d.torsion_.clear();
  return d;
}

nlohmann::json GroupDatum::to_json() const {
  nlohmann::json basis = nlohmann::json::array();
  for (int j = 0; j < rank(); ++j)
    basis.push_back(to_std(basis_.col(j)));
  return {{"cartan_type", root_system_->type().name()},
          {"lattice", {{"basis", basis}, {"torsion", torsion_}}}};
}

GroupDatum GroupDatum::coroot(CartanType type, std::vector<Int> torsion) {
  LatticeSpec spec;
  const RootSystem rs(type);
  for (int i = 1; i <= rs.rank(); ++i) {
    std::vector<Rational> v;
    for (Int x : to_std(rs.simple_coroot(i)))
      v.emplace_back(x);
    spec.basis.push_back(v);
  }
  spec.torsion = std::move(torsion);
  return validate_datum(RawDatum{type.name(), spec});
}

GroupDatum GroupDatum::coweight(CartanType type, std::vector<Int> torsion) {
  LatticeSpec spec;
  for (int i = 0; i < type.rank; ++i) {
    std::vector<Rational> v(static_cast<std::size_t>(type.rank), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    spec.basis.push_back(v);
  }
  spec.torsion = std::move(torsion);
  return validate_datum(RawDatum{type.name(), spec});
}

GroupDatum validate_datum(const RawDatum& raw) {
  const CartanType type = CartanType::parse(raw.cartan_type);
  if (const auto* preset = std::get_if<std::string>(&raw.lattice)) {
    if (*preset == "coroot")
      return GroupDatum::coroot(type);
    if (*preset == "coweight")
      return GroupDatum::coweight(type);
    fail(DatumErrorKind::Malformed, "unknown lattice preset '" + *preset + "'");
  }
  const LatticeSpec& spec = std::get<LatticeSpec>(raw.lattice);

  GroupDatum d;
  d.root_system_ = std::make_shared<const RootSystem>(type);
  const int r = type.rank;
  const RootSystem& rs = *d.root_system_;

  for (const auto& v : spec.basis)
    if (static_cast<int>(v.size()) != r)
      fail(DatumErrorKind::Malformed, "basis vectors must have " + std::to_string(r) +
                                          " coweight coordinates");
  if (static_cast<int>(spec.basis.size()) > r)
    fail(DatumErrorKind::NotInjective, "more basis vectors than the rank");
  if (static_cast<int>(spec.basis.size()) < r)
    fail(DatumErrorKind::LatticeTooSmall, "fewer basis vectors than the rank cannot contain Q^vee");

  RationalMatrix basis(r, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      basis(i, j) = spec.basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  auto inv = inverse(basis);
  if (!inv)
    fail(DatumErrorKind::NotInjective, "basis vectors are linearly dependent");

  const RationalMatrix coroots_in_basis = *inv * rs.coroot_lattice_basis().cast<Rational>();
  if (!is_integral(coroots_in_basis))
    fail(DatumErrorKind::LatticeTooSmall, "the coroot lattice is not contained in the lattice");
  if (!is_integral(basis))
    fail(DatumErrorKind::LatticeTooLarge, "the lattice is not contained in the coweight lattice");

  for (int i = 1; i <= r; ++i) {
    const FiniteWeylElement s = FiniteWeylElement::reflection(rs, rs.simple_root(i));
    if (!is_integral(RationalMatrix(*inv * s.matrix().cast<Rational>() * basis)))
      fail(DatumErrorKind::ActionNotCompatible, "W_0 does not preserve the lattice");
  }

  for (Int n : spec.torsion)
    if (n < 2)
      fail(DatumErrorKind::Malformed, "torsion invariant factors must be >= 2");
  const auto m = static_cast<Eigen::Index>(spec.torsion.size());
  if (spec.torsion_action) {
    if (static_cast<int>(spec.torsion_action->size()) != r)
      fail(DatumErrorKind::Malformed, "torsion_action needs one matrix per simple reflection");
    // Only the trivial action is compatible: (1 - w) must land in Q^vee,
    // which has no torsion, or W_a would not be normal.
    for (const IntMatrix& t : *spec.torsion_action) {
      if (t.rows() != m)
        fail(DatumErrorKind::Malformed, "torsion_action matrices must match the torsion rank");
      for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = 0; b < m; ++b)
          if (mod_floor(t(a, b) - (a == b ? 1 : 0), spec.torsion[static_cast<std::size_t>(a)]) != 0)
            fail(DatumErrorKind::ActionNotCompatible,
                 "W_0 must act trivially on torsion for W_a to be normal");
    }
  }

  d.basis_ = to_integer(basis);
  d.basis_inverse_ = *inv;
  d.torsion_ = spec.torsion;
  return d;
}

RawDatum parse_datum_json(const nlohmann::json& j) {
  if (!j.is_object())
    fail(DatumErrorKind::Malformed, "datum must be a JSON object");
  reject_unknown_keys(j, {"cartan_type", "lattice"}, "datum");
  if (!j.contains("cartan_type") || !j["cartan_type"].is_string())
    fail(DatumErrorKind::Malformed, "missing string 'cartan_type'");
  if (!j.contains("lattice"))
    fail(DatumErrorKind::Malformed, "missing 'lattice'");

  RawDatum raw;
  raw.cartan_type = j["cartan_type"].get<std::string>();
  const auto& lat = j["lattice"];
  if (lat.is_string()) {
    raw.lattice = lat.get<std::string>();
    return raw;
  }
  if (!lat.is_object())
    fail(DatumErrorKind::Malformed, "'lattice' must be a preset name or an object");
  reject_unknown_keys(lat, {"basis", "torsion", "torsion_action"}, "lattice");

  LatticeSpec spec;
  if (!lat.contains("basis") || !lat["basis"].is_array())
    fail(DatumErrorKind::Malformed, "lattice object needs a 'basis' array");
  for (const auto& v : lat["basis"]) {
    if (!v.is_array())
      fail(DatumErrorKind::Malformed, "basis vectors must be arrays");
    std::vector<Rational> vec;
    for (const auto& x : v)
      vec.push_back(parse_rational(x));
    spec.basis.push_back(std::move(vec));
  }
  if (lat.contains("torsion")) {
    if (!lat["torsion"].is_array())
      fail(DatumErrorKind::Malformed, "'torsion' must be an array of integers");
    for (const auto& x : lat["torsion"]) {
      if (!x.is_number_integer())
        fail(DatumErrorKind::Malformed, "'torsion' must be an array of integers");
      spec.torsion.push_back(x.get<Int>());
    }
  }
  if (lat.contains("torsion_action")) {
    const auto& act = lat["torsion_action"];
    if (act.is_string()) {
      if (act.get<std::string>() != "trivial")
        fail(DatumErrorKind::Malformed, "torsion_action must be \"trivial\" or a matrix list");
    } else if (act.is_array()) {
      std::vector<IntMatrix> mats;
      for (const auto& mj : act)
        mats.push_back(parse_int_matrix(mj));
      spec.torsion_action = std::move(mats);
    } else {
      fail(DatumErrorKind::Malformed, "torsion_action must be \"trivial\" or a matrix list");
    }
  }
  raw.lattice = std::move(spec);
  return raw;
}

RawDatum parse_datum_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(DatumErrorKind::Malformed, std::string("invalid JSON: ") + e.what());
  }
  return parse_datum_json(j);
}

}  // namespace iwahori
