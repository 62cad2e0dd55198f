#include "maxsym/orbifold.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <doctest.h>

#include "maxsym/coset.hpp"
#include "maxsym/presentation.hpp"
#include "maxsym/rational.hpp"

using namespace maxsym;

TEST_CASE("rational arithmetic stays reduced") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -24) == Rational(-1, 24));
  CHECK((Rational(1, 8) + Rational(1, 12) - Rational(1, 4)) == Rational(-1, 24));
  CHECK(Rational(-1, 24).str() == "-1/24");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-1, 24) < Rational(-1, 48));
  CHECK(Rational(-1, 12) < Rational(-1, 24));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("chi of the named amalgams") {
  Amalgam squares{CatalogueGroup::dbar(2), CatalogueGroup::zbar(2), CatalogueGroup::dbar(3),
                  OrientationClass::OrientationReversingFamily};
  CHECK(chi_orb(squares) == Rational(-1, 24));

  Amalgam mixed{CatalogueGroup::d2star(5), CatalogueGroup::zbar(5), CatalogueGroup::abar5(),
                OrientationClass::OrientationReversingFamily};
  CHECK(chi_orb(mixed) == Rational(-1, 24));

  Amalgam preserving{CatalogueGroup::dihedral(5), CatalogueGroup::cyclic(5), CatalogueGroup::a5(),
                     OrientationClass::OrientationPreservingFamily};
  CHECK(chi_orb(preserving) == Rational(-1, 12));
}

TEST_CASE("the eight minimal amalgams") {
  auto eight = minimal_amalgams();
  REQUIRE(eight.size() == 8);
  std::set<std::string> names;
  for (const auto& a : eight) {
    CHECK(chi_orb(a) == Rational(-1, 24));
    CHECK(a.orientation_class == OrientationClass::OrientationReversingFamily);
    names.insert(a.name());
  }
  CHECK(names == std::set<std::string>{
                     "Dbar2 *_Zbar2 Dbar3", "Dbar3 *_Zbar3 Abar4", "Dbar4 *_Zbar4 Sbar4",
                     "Dbar5 *_Zbar5 Abar5", "D2*2 *_Zbar2 Dbar3", "D2*3 *_Zbar3 Abar4",
                     "D2*4 *_Zbar4 Sbar4", "D2*5 *_Zbar5 Abar5"});
}

TEST_CASE("the orientation-preserving flag adds the four rotation amalgams") {
  auto twelve = minimal_amalgams(true);
  REQUIRE(twelve.size() == 12);
  for (size_t i = 8; i < 12; ++i) {
    CHECK(chi_orb(twelve[i]) == Rational(-1, 12));
    CHECK(twelve[i].orientation_class == OrientationClass::OrientationPreservingFamily);
  }
  CHECK(twelve[9].name() == "D3 *_Z3 A4");
}

TEST_CASE("amalgams map onto the minimal orbifold types in order") {
  auto eight = minimal_amalgams();
  for (int n = 2; n <= 5; ++n) {
    auto h = MinimalOrbifoldType::make(OrbifoldFamily::H, n);
    CHECK(amalgam_for(h) == eight[n - 2]);
    CHECK(h.boundary() == MinimalOrbifoldType::Boundary::Square2223);
    auto ht = MinimalOrbifoldType::make(OrbifoldFamily::Ht, n);
    CHECK(amalgam_for(ht) == eight[n + 2]);
    CHECK(ht.boundary() == MinimalOrbifoldType::Boundary::Disk2_23);
  }
}

TEST_CASE("search confirms the minimality gap") {
  auto found = search_minimal(100);
  REQUIRE(!found.empty());
  // sorted descending, top of the list is the octet at -1/24
  for (size_t i = 0; i + 1 < found.size(); ++i) CHECK(found[i].second >= found[i + 1].second);
  std::set<std::string> top;
  for (size_t i = 0; i < found.size() && found[i].second == Rational(-1, 24); ++i)
    top.insert(found[i].first.name());
  CHECK(top.size() == 8);
  for (const auto& [a, chi] : found) {
    CHECK(chi < Rational(0));
    CHECK(chi <= Rational(-1, 24));
  }
}

TEST_CASE("search at the smallest bound finds the two parameter-2 members") {
  auto found = search_minimal(2);
  auto eight = minimal_amalgams();
  int members = 0;
  for (const auto& [a, chi] : found)
    if (std::find(eight.begin(), eight.end(), a) != eight.end()) {
      ++members;
      CHECK(a.h == CatalogueGroup::zbar(2));
      CHECK(chi == Rational(-1, 24));
    }
  CHECK(members == 2);
}

TEST_CASE("genus arithmetic") {
  CHECK(genus_from_order(14400, Rational(-1, 24)) == 601);
  CHECK(genus_from_order(240, Rational(-1, 24)) == 11);
  CHECK(genus_from_order(480, Rational(-1, 48)) == 11);
  CHECK(genus_from_order(25, Rational(-1, 24)) == std::nullopt);
  CHECK_THROWS_AS(genus_from_order(24, Rational(1, 24)), std::invalid_argument);
  CHECK_THROWS_AS(genus_from_order(0, Rational(-1, 24)), std::invalid_argument);
}

TEST_CASE("24 divides the order of every spherical quotient group") {
  // untwisted spherical C(n,m;2,2;2,3) and the spherical twisted groups
  const std::vector<std::pair<int, int>> spherical = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}};
  for (auto [n, m] : spherical) {
    auto r = group_order(coxeter_presentation(LabeledTetrahedron(n, m, 2, 2, 2, 3)));
    REQUIRE(r.completed());
    CHECK(genus_from_order(r.index, Rational(-1, 24)).has_value());
  }
  for (int m = 2; m <= 4; ++m) {
    auto r = group_order(twisted_presentation(LabeledTetrahedron(2, m, 3, 3, 2, 2), {Twist::Tau}));
    REQUIRE(r.completed());
    CHECK(genus_from_order(r.index, Rational(-1, 24)).has_value());
  }
  const std::vector<Presentation> equal_parameter = {
      twisted_presentation(LabeledTetrahedron(2, 2, 2, 2, 2, 3), {Twist::Mu}),
      twisted_presentation(LabeledTetrahedron(3, 3, 2, 2, 2, 3), {Twist::Mu}),
      twisted_presentation(LabeledTetrahedron(2, 2, 3, 3, 2, 2), {Twist::Tau, Twist::Mu})};
  for (const auto& p : equal_parameter) {
    auto r = group_order(p);
    REQUIRE(r.completed());
    CHECK(genus_from_order(r.index, Rational(-1, 24)).has_value());
  }
}

TEST_CASE("gluing spot cases") {
  auto h5 = MinimalOrbifoldType::make(OrbifoldFamily::H, 5);
  auto h4 = MinimalOrbifoldType::make(OrbifoldFamily::H, 4);
  auto ht3 = MinimalOrbifoldType::make(OrbifoldFamily::Ht, 3);
  auto ht4 = MinimalOrbifoldType::make(OrbifoldFamily::Ht, 4);

  CHECK(classify_gluing({h5, h5, BoundaryMap::Identity}).name() == "Double(H,5)");
  CHECK(classify_gluing({h4, h5, BoundaryMap::Identity}).name() == "BadOrbifold(4,5)");
  CHECK(classify_gluing({h4, ht4, BoundaryMap::Identity}).name() == "TypeMismatch");
  CHECK(classify_gluing({h4, ht4, BoundaryMap::Reflection}).name() == "TypeMismatch");
  CHECK(classify_gluing({ht3, ht4, BoundaryMap::Reflection}).name() == "TwistedCoxeterQuotient(3,4)");
  CHECK(classify_gluing({h4, h5, BoundaryMap::Reflection}).name() == "CoxeterQuotient(4,5)");
}

TEST_CASE("gluing outcome counts over the whole domain") {
  std::map<ClassificationOutcome::Kind, int> counts;
  int total = 0;
  for (OrbifoldFamily lf : {OrbifoldFamily::H, OrbifoldFamily::Ht})
    for (int ln = 2; ln <= 5; ++ln)
      for (OrbifoldFamily rf : {OrbifoldFamily::H, OrbifoldFamily::Ht})
        for (int rn = 2; rn <= 5; ++rn)
          for (BoundaryMap map : {BoundaryMap::Identity, BoundaryMap::Reflection}) {
            GluingSpec spec{MinimalOrbifoldType::make(lf, ln), MinimalOrbifoldType::make(rf, rn), map};
            ++counts[classify_gluing(spec).kind];
            ++total;
          }
  CHECK(total == 128);
  CHECK(counts[ClassificationOutcome::Kind::TypeMismatch] == 64);
  CHECK(counts[ClassificationOutcome::Kind::Double] == 8);
  CHECK(counts[ClassificationOutcome::Kind::BadOrbifold] == 24);
  CHECK(counts[ClassificationOutcome::Kind::CoxeterQuotient] == 16);
  CHECK(counts[ClassificationOutcome::Kind::TwistedCoxeterQuotient] == 16);
}

TEST_CASE("quotient tetrahedra of the reflection outcomes") {
  ClassificationOutcome cox{ClassificationOutcome::Kind::CoxeterQuotient, OrbifoldFamily::H, 4, 5};
  auto t = quotient_tetrahedron(cox);
  REQUIRE(t.has_value());
  CHECK(*t == LabeledTetrahedron(4, 5, 2, 2, 2, 3));
  CHECK(classify_geometry(*t) == GeometryClass::Hyperbolic);

  ClassificationOutcome twisted{ClassificationOutcome::Kind::TwistedCoxeterQuotient, OrbifoldFamily::Ht, 2, 4};
  auto tt = quotient_tetrahedron(twisted);
  REQUIRE(tt.has_value());
  CHECK(*tt == LabeledTetrahedron(2, 4, 3, 3, 2, 2));
  CHECK(classify_geometry(*tt) == GeometryClass::Spherical);

  ClassificationOutcome dbl{ClassificationOutcome::Kind::Double, OrbifoldFamily::H, 3, 3};
  CHECK(quotient_tetrahedron(dbl) == std::nullopt);
}

TEST_CASE("quotient chains reproduce the published genera") {
  const std::map<std::pair<int, int>, std::int64_t> untwisted = {
      {{2, 2}, 2}, {{2, 3}, 3}, {{2, 4}, 5}, {{2, 5}, 11}, {{3, 3}, 6}, {{3, 4}, 17}, {{3, 5}, 601}};
  for (const auto& [nm, genus] : untwisted) {
    ClassificationOutcome outcome{ClassificationOutcome::Kind::CoxeterQuotient, OrbifoldFamily::H, nm.first,
                                  nm.second};
    auto t = quotient_tetrahedron(outcome);
    REQUIRE(t.has_value());
    auto r = group_order(coxeter_presentation(*t));
    REQUIRE(r.completed());
    CHECK(genus_from_order(r.index, Rational(-1, 24)) == genus);
  }
  const std::map<std::pair<int, int>, std::int64_t> twisted = {{{2, 2}, 4}, {{2, 3}, 11}, {{2, 4}, 97}};
  for (const auto& [nm, genus] : twisted) {
    ClassificationOutcome outcome{ClassificationOutcome::Kind::TwistedCoxeterQuotient, OrbifoldFamily::Ht,
                                  nm.first, nm.second};
    auto t = quotient_tetrahedron(outcome);
    REQUIRE(t.has_value());
    auto r = group_order(twisted_presentation(*t, {Twist::Tau}));
    REQUIRE(r.completed());
    CHECK(genus_from_order(r.index, Rational(-1, 24)) == genus);
  }
}

TEST_CASE("minimal orbifold parsing") {
  CHECK(MinimalOrbifoldType::parse("H2") == MinimalOrbifoldType::make(OrbifoldFamily::H, 2));
  CHECK(MinimalOrbifoldType::parse("Ht5") == MinimalOrbifoldType::make(OrbifoldFamily::Ht, 5));
  CHECK(MinimalOrbifoldType::parse("H6") == std::nullopt);
  CHECK(MinimalOrbifoldType::parse("X2") == std::nullopt);
  CHECK(MinimalOrbifoldType::parse("Ht") == std::nullopt);
  CHECK(MinimalOrbifoldType::make(OrbifoldFamily::H, 3).name() == "H3");
  CHECK(MinimalOrbifoldType::make(OrbifoldFamily::Ht, 4).name() == "Ht4");
  CHECK_THROWS_AS(MinimalOrbifoldType::make(OrbifoldFamily::H, 6), std::invalid_argument);
}
