#include "maxsym/catalogue.hpp"

namespace maxsym {

namespace {

CatalogueGroup make(CatalogueKind kind, int n) {
  if (n < 2) throw std::invalid_argument("CatalogueGroup: parameter must be >= 2");
  return {kind, n};
}

}  // namespace

CatalogueGroup CatalogueGroup::zbar(int n) { return make(CatalogueKind::Zbar, n); }
CatalogueGroup CatalogueGroup::dbar(int n) { return make(CatalogueKind::Dbar, n); }
CatalogueGroup CatalogueGroup::d2star(int n) { return make(CatalogueKind::D2star, n); }
CatalogueGroup CatalogueGroup::cyclic(int n) { return make(CatalogueKind::Z, n); }
CatalogueGroup CatalogueGroup::dihedral(int n) { return make(CatalogueKind::D, n); }

bool CatalogueGroup::parameterized() const {
  switch (kind) {
    case CatalogueKind::Zbar:
    case CatalogueKind::Dbar:
    case CatalogueKind::D2star:
    case CatalogueKind::Z:
    case CatalogueKind::D:
      return true;
    default:
      return false;
  }
}

std::int64_t CatalogueGroup::order() const {
  std::int64_t n = parameter;
  switch (kind) {
    case CatalogueKind::Zbar: return 2 * n;
    case CatalogueKind::Dbar: return 4 * n;
    case CatalogueKind::Abar4: return 24;
    case CatalogueKind::Sbar4: return 48;
    case CatalogueKind::Abar5: return 120;
    case CatalogueKind::D2star: return 4 * n;
    case CatalogueKind::Z: return n;
    case CatalogueKind::D: return 2 * n;
    case CatalogueKind::A4: return 12;
    case CatalogueKind::S4: return 24;
    case CatalogueKind::A5: return 60;
  }
  throw std::logic_error("CatalogueGroup: bad kind");
}

std::string CatalogueGroup::name() const {
  switch (kind) {
    case CatalogueKind::Zbar: return "Zbar" + std::to_string(parameter);
    case CatalogueKind::Dbar: return "Dbar" + std::to_string(parameter);
    case CatalogueKind::Abar4: return "Abar4";
    case CatalogueKind::Sbar4: return "Sbar4";
    case CatalogueKind::Abar5: return "Abar5";
    case CatalogueKind::D2star: return "D2*" + std::to_string(parameter);
    case CatalogueKind::Z: return "Z" + std::to_string(parameter);
    case CatalogueKind::D: return "D" + std::to_string(parameter);
    case CatalogueKind::A4: return "A4";
    case CatalogueKind::S4: return "S4";
    case CatalogueKind::A5: return "A5";
  }
  throw std::logic_error("CatalogueGroup: bad kind");
}

}  // namespace maxsym
