#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxsym {

// The finite groups acting on the 2-sphere / 3-disk that occur as vertex
// groups and edge groups of the minimal handlebody orbifolds, plus their
// orientation-preserving counterparts.  Orders are closed-form.
enum class CatalogueKind {
  Zbar,    // extended cyclic, order 2n (dihedral presentation)
  Dbar,    // extended dihedral [2,2,n], order 4n
  Abar4,   // extended tetrahedral [2,3,3], order 24
  Sbar4,   // extended octahedral [2,3,4], order 48
  Abar5,   // extended dodecahedral [2,3,5], order 120
  D2star,  // mixed dihedral D2*n, order 4n, index two in Dbar(2n)
  Z,       // cyclic, order n
  D,       // dihedral (2,2,n), order 2n
  A4,      // tetrahedral (2,3,3), order 12
  S4,      // octahedral (2,3,4), order 24
  A5       // dodecahedral (2,3,5), order 60
};

struct CatalogueGroup {
  CatalogueKind kind = CatalogueKind::Z;
  int parameter = 0;  // n for the parameterized kinds, 0 otherwise

  std::int64_t order() const;
  bool parameterized() const;
  std::string name() const;  // ASCII form: "Dbar5", "Zbar5", "D2*5", "Abar4", "A5", ...

  bool operator==(const CatalogueGroup&) const = default;
  auto operator<=>(const CatalogueGroup&) const = default;

  static CatalogueGroup zbar(int n);
  static CatalogueGroup dbar(int n);
  static CatalogueGroup d2star(int n);
  static CatalogueGroup abar4() { return {CatalogueKind::Abar4, 0}; }
  static CatalogueGroup sbar4() { return {CatalogueKind::Sbar4, 0}; }
  static CatalogueGroup abar5() { return {CatalogueKind::Abar5, 0}; }
  static CatalogueGroup cyclic(int n);
  static CatalogueGroup dihedral(int n);
  static CatalogueGroup a4() { return {CatalogueKind::A4, 0}; }
  static CatalogueGroup s4() { return {CatalogueKind::S4, 0}; }
  static CatalogueGroup a5() { return {CatalogueKind::A5, 0}; }
};

}  // namespace maxsym
