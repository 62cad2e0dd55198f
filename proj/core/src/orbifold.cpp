#include "maxsym/orbifold.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxsym {

std::string Amalgam::name() const {
  return g1.name() + " *_" + h.name() + " " + g2.name();
}

Rational chi_orb(const Amalgam& a) {
  return Rational::reciprocal(a.g1.order()) + Rational::reciprocal(a.g2.order()) -
         Rational::reciprocal(a.h.order());
}

namespace {

Amalgam reversing(CatalogueGroup g1, int n, CatalogueGroup g2) {
  return {g1, CatalogueGroup::zbar(n), g2, OrientationClass::OrientationReversingFamily};
}

Amalgam preserving(CatalogueGroup g1, int n, CatalogueGroup g2) {
  return {g1, CatalogueGroup::cyclic(n), g2, OrientationClass::OrientationPreservingFamily};
}

// The second factor of the minimal amalgam with parameter n.
CatalogueGroup extended_partner(int n) {
  switch (n) {
    case 2: return CatalogueGroup::dbar(3);
    case 3: return CatalogueGroup::abar4();
    case 4: return CatalogueGroup::sbar4();
    case 5: return CatalogueGroup::abar5();
  }
  throw std::invalid_argument("minimal amalgam parameter must be 2..5");
}

CatalogueGroup rotation_partner(int n) {
  switch (n) {
    case 2: return CatalogueGroup::dihedral(3);
    case 3: return CatalogueGroup::a4();
    case 4: return CatalogueGroup::s4();
    case 5: return CatalogueGroup::a5();
  }
  throw std::invalid_argument("minimal amalgam parameter must be 2..5");
}

}  // namespace

std::vector<Amalgam> minimal_amalgams(bool include_orientation_preserving) {
  std::vector<Amalgam> out;
  for (int n = 2; n <= 5; ++n) out.push_back(reversing(CatalogueGroup::dbar(n), n, extended_partner(n)));
  for (int n = 2; n <= 5; ++n) out.push_back(reversing(CatalogueGroup::d2star(n), n, extended_partner(n)));
  if (include_orientation_preserving)
    for (int n = 2; n <= 5; ++n) out.push_back(preserving(CatalogueGroup::dihedral(n), n, rotation_partner(n)));
  return out;
}

namespace {

// Curated admissibility rule (docs/admissibility.md): a catalogue group G
// accepts the edge group Zbar_n along a 2-disk suborbifold of its boundary
// exactly when the boundary 2-orbifold of D3/G has a dihedral corner of
// order n.  Corner orders: Dbar_m -> {2, m}; D2*m -> {m}; Abar4 -> {2,3};
// Sbar4 -> {2,3,4}; Abar5 -> {2,3,5}.
bool admits_corner(const CatalogueGroup& g, int n) {
  switch (g.kind) {
    case CatalogueKind::Dbar: return n == 2 || n == g.parameter;
    case CatalogueKind::D2star: return n == g.parameter;
    case CatalogueKind::Abar4: return n == 2 || n == 3;
    case CatalogueKind::Sbar4: return n >= 2 && n <= 4;
    case CatalogueKind::Abar5: return n == 2 || n == 3 || n == 5;
    default: return false;
  }
}

}  // namespace

std::vector<std::pair<Amalgam, Rational>> search_minimal(int max_n) {
  if (max_n < 2) throw std::invalid_argument("search_minimal: max_n must be >= 2");

  // The dihedral co-parameter window stretches to at least 5 so that every
  // family containing one of the eight minimal amalgams is inside the
  // searched table even for small max_n.
  const int partner_cap = std::max(max_n, 5);

  std::vector<std::pair<Amalgam, Rational>> found;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<CatalogueGroup> firsts = {CatalogueGroup::dbar(n), CatalogueGroup::d2star(n)};
    std::vector<CatalogueGroup> seconds;
    for (int m = 2; m <= partner_cap; ++m)
      if (admits_corner(CatalogueGroup::dbar(m), n)) seconds.push_back(CatalogueGroup::dbar(m));
    for (CatalogueGroup g : {CatalogueGroup::abar4(), CatalogueGroup::sbar4(), CatalogueGroup::abar5()})
      if (admits_corner(g, n)) seconds.push_back(g);

    for (const CatalogueGroup& g1 : firsts)
      for (const CatalogueGroup& g2 : seconds) {
        Amalgam a = reversing(g1, n, g2);
        Rational chi = chi_orb(a);
        if (chi < Rational(0)) found.emplace_back(a, chi);
      }
  }

  std::sort(found.begin(), found.end(), [](const auto& lhs, const auto& rhs) {
    if (lhs.second != rhs.second) return lhs.second > rhs.second;
    if (lhs.first.h != rhs.first.h) return lhs.first.h < rhs.first.h;
    if (lhs.first.g1 != rhs.first.g1) return lhs.first.g1 < rhs.first.g1;
    return lhs.first.g2 < rhs.first.g2;
  });

  const Rational minimum(-1, 24);
  std::vector<Amalgam> at_minimum;
  for (const auto& [a, chi] : found) {
    if (chi > minimum) throw std::logic_error("search_minimal: admissible amalgam in (-1/24, 0): " + a.name());
    if (chi == minimum) at_minimum.push_back(a);
  }
  const auto expected = minimal_amalgams();
  auto matches_octet = [&] {
    if (max_n >= 5) {
      if (at_minimum.size() != expected.size()) return false;
      for (const Amalgam& a : at_minimum)
        if (std::find(expected.begin(), expected.end(), a) == expected.end()) return false;
      return true;
    }
    // truncated search: everything at the minimum must still be one of the eight
    return std::all_of(at_minimum.begin(), at_minimum.end(), [&](const Amalgam& a) {
      return std::find(expected.begin(), expected.end(), a) != expected.end();
    });
  };
  if (!matches_octet())
    throw std::logic_error("search_minimal: chi = -1/24 set does not match the eight minimal amalgams");
  return found;
}

std::optional<std::int64_t> genus_from_order(std::int64_t order, const Rational& chi) {
  if (order < 1) throw std::invalid_argument("genus_from_order: order must be positive");
  if (!(chi < Rational(0))) throw std::invalid_argument("genus_from_order: chi must be negative");
  // 1 - chi * order, integral exactly when den(chi) divides num(chi) * order
  std::int64_t scaled = chi.num() * order;
  if (scaled % chi.den() != 0) return std::nullopt;
  return 1 - scaled / chi.den();
}

MinimalOrbifoldType::Boundary MinimalOrbifoldType::boundary() const {
  return family == OrbifoldFamily::H ? Boundary::Square2223 : Boundary::Disk2_23;
}

std::string MinimalOrbifoldType::name() const {
  return (family == OrbifoldFamily::H ? "H" : "Ht") + std::to_string(n);
}

MinimalOrbifoldType MinimalOrbifoldType::make(OrbifoldFamily family, int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("MinimalOrbifoldType: n must be in 2..5");
  return {family, n};
}

std::optional<MinimalOrbifoldType> MinimalOrbifoldType::parse(std::string_view text) {
  OrbifoldFamily family;
  std::string_view digits;
  if (text.starts_with("Ht")) {
    family = OrbifoldFamily::Ht;
    digits = text.substr(2);
  } else if (text.starts_with("H")) {
    family = OrbifoldFamily::H;
    digits = text.substr(1);
  } else {
    return std::nullopt;
  }
  if (digits.size() != 1 || digits[0] < '2' || digits[0] > '5') return std::nullopt;
  return make(family, digits[0] - '0');
}

Amalgam amalgam_for(const MinimalOrbifoldType& type) {
  CatalogueGroup g1 = type.family == OrbifoldFamily::H ? CatalogueGroup::dbar(type.n)
                                                       : CatalogueGroup::d2star(type.n);
  return reversing(g1, type.n, extended_partner(type.n));
}

std::string ClassificationOutcome::name() const {
  switch (kind) {
    case Kind::TypeMismatch: return "TypeMismatch";
    case Kind::BadOrbifold: return "BadOrbifold(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case Kind::Double:
      return std::string("Double(") + (family == OrbifoldFamily::H ? "H" : "Ht") + "," + std::to_string(n) + ")";
    case Kind::CoxeterQuotient: return "CoxeterQuotient(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case Kind::TwistedCoxeterQuotient:
      return "TwistedCoxeterQuotient(" + std::to_string(n) + "," + std::to_string(m) + ")";
  }
  throw std::logic_error("ClassificationOutcome: bad kind");
}

ClassificationOutcome classify_gluing(const GluingSpec& spec) {
  ClassificationOutcome out;
  if (spec.left.family != spec.right.family) {
    out.kind = ClassificationOutcome::Kind::TypeMismatch;
    return out;
  }
  out.family = spec.left.family;
  out.n = spec.left.n;
  out.m = spec.right.n;
  if (spec.map == BoundaryMap::Identity) {
    out.kind = spec.left.n == spec.right.n ? ClassificationOutcome::Kind::Double
                                           : ClassificationOutcome::Kind::BadOrbifold;
    return out;
  }
  out.kind = spec.left.family == OrbifoldFamily::H ? ClassificationOutcome::Kind::CoxeterQuotient
                                                   : ClassificationOutcome::Kind::TwistedCoxeterQuotient;
  return out;
}

std::optional<LabeledTetrahedron> quotient_tetrahedron(const ClassificationOutcome& outcome) {
  switch (outcome.kind) {
    case ClassificationOutcome::Kind::CoxeterQuotient:
      return LabeledTetrahedron(outcome.n, outcome.m, 2, 2, 2, 3);
    case ClassificationOutcome::Kind::TwistedCoxeterQuotient:
      return LabeledTetrahedron(outcome.n, outcome.m, 3, 3, 2, 2);
    default:
      return std::nullopt;
  }
}

}  // namespace maxsym
