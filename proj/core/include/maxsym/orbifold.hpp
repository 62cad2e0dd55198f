#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxsym/catalogue.hpp"
#include "maxsym/rational.hpp"
#include "maxsym/tetra.hpp"

namespace maxsym {

enum class OrientationClass { OrientationReversingFamily, OrientationPreservingFamily };

// A free product with amalgamation G1 *_H G2 of catalogue groups, the
// orbifold fundamental group of a handlebody orbifold made of two 3-disk
// orbifolds joined along a 2-disk suborbifold with group H.
struct Amalgam {
  CatalogueGroup g1;
  CatalogueGroup h;  // extended cyclic (Zbar) or cyclic (Z)
  CatalogueGroup g2;
  OrientationClass orientation_class = OrientationClass::OrientationReversingFamily;

  std::string name() const;  // "Dbar5 *_Zbar5 Abar5", "D2*5 *_Zbar5 Abar5", ...

  bool operator==(const Amalgam&) const = default;
};

// Orbifold Euler characteristic 1/|G1| + 1/|G2| - 1/|H|, exact.  This is the
// multiplicative convention chi(V)/|G| = (1-g)/|G|, the sign that makes the
// minimal amalgams come out at -1/24 (see docs/conventions.md).
Rational chi_orb(const Amalgam& a);

// The eight minimal handlebody orbifolds as amalgams, in the fixed order
// Dbar_n side first (H2..H5) then D2*n side (Ht2..Ht5); with the flag, the
// four orientation-preserving ones (chi -1/12) follow.
std::vector<Amalgam> minimal_amalgams(bool include_orientation_preserving = false);

// All table-admissible amalgams with parameter <= max_n and chi < 0, sorted
// by chi descending (ties in a fixed deterministic order).  Verifies that
// exactly the eight minimal amalgams reach chi = -1/24 and that no entry
// lands in (-1/24, 0); throws std::logic_error otherwise.  Completeness is
// relative to the curated admissibility table (docs/admissibility.md).
std::vector<std::pair<Amalgam, Rational>> search_minimal(int max_n);

// g with chi * order = 1 - g, or nullopt when that is not an integer.
std::optional<std::int64_t> genus_from_order(std::int64_t order, const Rational& chi);

enum class OrbifoldFamily { H, Ht };

// One of the eight minimal handlebody orbifolds H2..H5 (boundary the square
// orbifold D2([2,2,2,3])) or Ht2..Ht5 (boundary the disk D2(2,[2,3])).
struct MinimalOrbifoldType {
  OrbifoldFamily family = OrbifoldFamily::H;
  int n = 2;  // 2..5

  enum class Boundary { Square2223, Disk2_23 };
  Boundary boundary() const;
  std::string name() const;  // "H5", "Ht5"

  static MinimalOrbifoldType make(OrbifoldFamily family, int n);
  static std::optional<MinimalOrbifoldType> parse(std::string_view text);

  bool operator==(const MinimalOrbifoldType&) const = default;
};

Amalgam amalgam_for(const MinimalOrbifoldType& type);

enum class BoundaryMap { Identity, Reflection };

struct GluingSpec {
  MinimalOrbifoldType left;
  MinimalOrbifoldType right;
  BoundaryMap map = BoundaryMap::Identity;
};

struct ClassificationOutcome {
  enum class Kind { TypeMismatch, BadOrbifold, Double, CoxeterQuotient, TwistedCoxeterQuotient };

  Kind kind = Kind::TypeMismatch;
  OrbifoldFamily family = OrbifoldFamily::H;  // Double only
  int n = 0;
  int m = 0;

  std::string name() const;  // "Double(H,5)", "BadOrbifold(4,5)", "TypeMismatch", ...

  bool operator==(const ClassificationOutcome&) const = default;
};

// The boundary-identification case analysis: mixed families never match;
// the identity map doubles when n = m and produces a bad 2-orbifold
// otherwise; the reflection map produces the Coxeter quotient (family H)
// or the twisted Coxeter quotient (family Ht).
ClassificationOutcome classify_gluing(const GluingSpec& spec);

// CoxeterQuotient(n,m) -> C(n,m;2,2;2,3); TwistedCoxeterQuotient(n,m) ->
// C(n,m;3,3;2,2); other outcomes have no tetrahedral quotient.
std::optional<LabeledTetrahedron> quotient_tetrahedron(const ClassificationOutcome& outcome);

}  // namespace maxsym
