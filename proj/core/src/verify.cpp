#include "maxsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "maxsym/coset.hpp"
#include "maxsym/orbifold.hpp"
#include "maxsym/presentation.hpp"
#include "maxsym/rational.hpp"
#include "maxsym/tetra.hpp"

namespace maxsym {

int VerificationReport::failed() const {
  int n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

namespace {

struct Check {
  std::string id;
  std::string anchor;
  std::string expected;
  std::function<std::string()> compute;
};

std::string order_and_genus(const EnumerationResult& r, const Rational& chi) {
  if (!r.completed()) return "exceeded at budget " + std::to_string(r.budget);
  auto g = genus_from_order(r.index, chi);
  return "order " + std::to_string(r.index) + ", genus " + (g ? std::to_string(*g) : "non-integral");
}

LabeledTetrahedron base_tetrahedron(int n, int m) { return LabeledTetrahedron(n, m, 2, 2, 2, 3); }
LabeledTetrahedron tau_tetrahedron(int n, int m) { return LabeledTetrahedron(n, m, 3, 3, 2, 2); }

std::vector<Check> build_checks(const VerifyOptions& options) {
  std::vector<Check> checks;
  const std::int64_t finite = options.finite_budget;
  const std::int64_t infinite = options.infinite_budget;

  auto add = [&checks](std::string id, std::string anchor, std::string expected,
                       std::function<std::string()> compute) {
    checks.push_back({std::move(id), std::move(anchor), std::move(expected), std::move(compute)});
  };

  // Geometry tables.
  struct GeometryRow {
    int n, m;
    const char* cls;
  };
  const std::vector<GeometryRow> base_rows = {
      {2, 2, "Spherical"}, {2, 3, "Spherical"}, {2, 4, "Spherical"}, {2, 5, "Spherical"},
      {3, 3, "Spherical"}, {3, 4, "Spherical"}, {3, 5, "Spherical"}, {4, 4, "Euclidean"},
      {4, 5, "Hyperbolic"}, {5, 5, "Hyperbolic"}};
  for (const auto& row : base_rows)
    add("geometry/base/C(" + std::to_string(row.n) + "," + std::to_string(row.m) + ")",
        "geometry table for the tetrahedra C(n,m;2,2;2,3)", row.cls,
        [row] { return std::string(to_string(classify_geometry(base_tetrahedron(row.n, row.m)))); });

  const std::vector<GeometryRow> tau_rows = {
      {2, 2, "Spherical"}, {2, 3, "Spherical"}, {2, 4, "Spherical"}, {3, 3, "Euclidean"},
      {2, 5, "Hyperbolic"}, {3, 4, "Hyperbolic"}, {3, 5, "Hyperbolic"}, {4, 4, "Hyperbolic"},
      {4, 5, "Hyperbolic"}, {5, 5, "Hyperbolic"}};
  for (const auto& row : tau_rows)
    add("geometry/tau/Ctau(" + std::to_string(row.n) + "," + std::to_string(row.m) + ")",
        "geometry table for the twisted groups Ctau(n,m) over C(n,m;3,3;2,2)", row.cls,
        [row] { return std::string(to_string(classify_geometry(tau_tetrahedron(row.n, row.m)))); });

  const std::vector<GeometryRow> mu_rows = {
      {2, 2, "Spherical"}, {3, 3, "Spherical"}, {4, 4, "Euclidean"}, {5, 5, "Hyperbolic"}};
  for (const auto& row : mu_rows)
    add("geometry/mu/Cmu(" + std::to_string(row.n) + "," + std::to_string(row.n) + ")",
        "geometry assignments for the twisted groups Cmu(n,n)", row.cls,
        [row] { return std::string(to_string(classify_geometry(base_tetrahedron(row.n, row.n)))); });

  const std::vector<GeometryRow> taumu_rows = {
      {2, 2, "Spherical"}, {3, 3, "Euclidean"}, {4, 4, "Hyperbolic"}, {5, 5, "Hyperbolic"}};
  for (const auto& row : taumu_rows)
    add("geometry/taumu/Ctaumu(" + std::to_string(row.n) + "," + std::to_string(row.n) + ")",
        "geometry assignments for the doubly twisted groups Ctaumu(n,n)", row.cls,
        [row] { return std::string(to_string(classify_geometry(tau_tetrahedron(row.n, row.n)))); });

  // Orders and genera through the coset enumerator.
  struct GenusRow {
    int n, m;
    std::int64_t order;
    std::int64_t genus;
  };
  const std::vector<GenusRow> untwisted = {{2, 2, 24, 2},  {2, 3, 48, 3},   {2, 4, 96, 5},  {2, 5, 240, 11},
                                           {3, 3, 120, 6}, {3, 4, 384, 17}, {3, 5, 14400, 601}};
  for (const auto& row : untwisted)
    add("order/untwisted/C(" + std::to_string(row.n) + "," + std::to_string(row.m) + ")",
        "untwisted genera 2, 3, 5, 11, 6, 17, 601 on the 3-sphere",
        "order " + std::to_string(row.order) + ", genus " + std::to_string(row.genus), [row, finite] {
          return order_and_genus(group_order(coxeter_presentation(base_tetrahedron(row.n, row.m)), finite),
                                 Rational(-1, 24));
        });

  const std::vector<GenusRow> twisted = {{2, 2, 72, 4}, {2, 3, 240, 11}, {2, 4, 2304, 97}};
  for (const auto& row : twisted)
    add("order/tau/Ctau(" + std::to_string(row.n) + "," + std::to_string(row.m) + ")",
        "twisted genera 4, 11, 97 on the 3-sphere",
        "order " + std::to_string(row.order) + ", genus " + std::to_string(row.genus), [row, finite] {
          return order_and_genus(
              group_order(twisted_presentation(tau_tetrahedron(row.n, row.m), {Twist::Tau}), finite),
              Rational(-1, 24));
        });

  const std::vector<GenusRow> half_turn = {{2, 2, 48, 2}, {3, 3, 240, 6}};
  for (const auto& row : half_turn)
    add("order/mu/Cmu(" + std::to_string(row.n) + "," + std::to_string(row.n) + ")",
        "genera 2, 4 and 6 for actions of order 48(g-1) on the 3-sphere",
        "order " + std::to_string(row.order) + ", genus " + std::to_string(row.genus), [row, finite] {
          return order_and_genus(
              group_order(twisted_presentation(base_tetrahedron(row.n, row.n), {Twist::Mu}), finite),
              Rational(-1, 48));
        });
  add("order/taumu/Ctaumu(2,2)", "genera 2, 4 and 6 for actions of order 48(g-1) on the 3-sphere",
      "order 144, genus 4", [finite] {
        return order_and_genus(
            group_order(twisted_presentation(tau_tetrahedron(2, 2), {Twist::Tau, Twist::Mu}), finite),
            Rational(-1, 48));
      });

  // Subgroup indices of the reflection subgroup in the twisted groups.
  for (int m = 2; m <= 4; ++m)
    add("index/tau/Ctau(2," + std::to_string(m) + ")",
        "the twisted group contains the Coxeter group as a subgroup of index two", "index 2", [m, finite] {
          Presentation p = twisted_presentation(tau_tetrahedron(2, m), {Twist::Tau});
          auto r = subgroup_index(p, subgroup_words(p, SubgroupSelector::reflection_subgroup()), finite);
          return r.completed() ? "index " + std::to_string(r.index) : "exceeded";
        });
  add("index/taumu/Ctaumu(2,2)",
      "the doubly twisted group contains the Coxeter group as a subgroup of index 4", "index 4", [finite] {
        Presentation p = twisted_presentation(tau_tetrahedron(2, 2), {Twist::Tau, Twist::Mu});
        auto r = subgroup_index(p, subgroup_words(p, SubgroupSelector::reflection_subgroup()), finite);
        return r.completed() ? "index " + std::to_string(r.index) : "exceeded";
      });

  // Euler characteristics of the minimal amalgams.
  for (const Amalgam& a : minimal_amalgams())
    add("chi/minimal/" + a.name(), "the eight minimal handlebody orbifolds have chi_orb = -1/24", "-1/24",
        [a] { return chi_orb(a).str(); });
  {
    auto all = minimal_amalgams(true);
    for (size_t i = 8; i < all.size(); ++i) {
      const Amalgam a = all[i];
      add("chi/orientation-preserving/" + a.name(),
          "the four orientation-preserving minimal orbifolds have chi_orb = -1/12", "-1/12",
          [a] { return chi_orb(a).str(); });
    }
  }
  add("chi/minimality-gap", "-1/24 is the largest chi_orb below zero among admissible amalgams",
      "0 in (-1/24,0); 8 at -1/24", [] {
        auto found = search_minimal(100);
        int gap = 0, at_min = 0;
        for (const auto& [a, chi] : found) {
          if (chi > Rational(-1, 24)) ++gap;
          if (chi == Rational(-1, 24)) ++at_min;
        }
        return std::to_string(gap) + " in (-1/24,0); " + std::to_string(at_min) + " at -1/24";
      });

  // Genus arithmetic of the genus-11 hyperbolic example.
  add("genus/240-at--1-24", "240 = 24(g-1) for the genus-11 hyperbolic manifold", "genus 11", [] {
    auto g = genus_from_order(240, Rational(-1, 24));
    return g ? "genus " + std::to_string(*g) : "non-integral";
  });
  add("genus/480-at--1-48", "480 = 48(g-1) for the genus-11 hyperbolic manifold", "genus 11", [] {
    auto g = genus_from_order(480, Rational(-1, 48));
    return g ? "genus " + std::to_string(*g) : "non-integral";
  });

  // Gluing case analysis.
  add("gluing/outcome-counts", "boundary identification case analysis over the eight minimal orbifolds",
      "TypeMismatch 64, Double 8, BadOrbifold 24, CoxeterQuotient 16, TwistedCoxeterQuotient 16", [] {
        int counts[5] = {0, 0, 0, 0, 0};
        for (OrbifoldFamily lf : {OrbifoldFamily::H, OrbifoldFamily::Ht})
          for (int ln = 2; ln <= 5; ++ln)
            for (OrbifoldFamily rf : {OrbifoldFamily::H, OrbifoldFamily::Ht})
              for (int rn = 2; rn <= 5; ++rn)
                for (BoundaryMap map : {BoundaryMap::Identity, BoundaryMap::Reflection}) {
                  GluingSpec spec{MinimalOrbifoldType::make(lf, ln), MinimalOrbifoldType::make(rf, rn), map};
                  ++counts[static_cast<int>(classify_gluing(spec).kind)];
                }
        return "TypeMismatch " + std::to_string(counts[0]) + ", Double " + std::to_string(counts[2]) +
               ", BadOrbifold " + std::to_string(counts[1]) + ", CoxeterQuotient " + std::to_string(counts[3]) +
               ", TwistedCoxeterQuotient " + std::to_string(counts[4]);
      });
  struct GlueRow {
    const char* id;
    const char* left;
    const char* right;
    BoundaryMap map;
    const char* outcome;
  };
  const std::vector<GlueRow> glue_rows = {
      {"gluing/spot/H5-H5-id", "H5", "H5", BoundaryMap::Identity, "Double(H,5)"},
      {"gluing/spot/H4-H5-id", "H4", "H5", BoundaryMap::Identity, "BadOrbifold(4,5)"},
      {"gluing/spot/H2-Ht2-id", "H2", "Ht2", BoundaryMap::Identity, "TypeMismatch"},
      {"gluing/spot/H4-H5-refl", "H4", "H5", BoundaryMap::Reflection, "CoxeterQuotient(4,5)"},
      {"gluing/spot/Ht3-Ht4-refl", "Ht3", "Ht4", BoundaryMap::Reflection, "TwistedCoxeterQuotient(3,4)"}};
  for (const auto& row : glue_rows)
    add(row.id, "boundary identification case analysis over the eight minimal orbifolds", row.outcome, [row] {
      GluingSpec spec{*MinimalOrbifoldType::parse(row.left), *MinimalOrbifoldType::parse(row.right), row.map};
      return classify_gluing(spec).name();
    });

  // Catalogue group orders through the enumerator.
  for (CatalogueGroup g : {CatalogueGroup::abar5(), CatalogueGroup::sbar4(), CatalogueGroup::abar4(),
                           CatalogueGroup::dbar(3), CatalogueGroup::d2star(5), CatalogueGroup::a5()})
    add("catalogue/order/" + g.name(), "orders of the spherical catalogue groups",
        std::to_string(g.order()), [g, finite] {
          auto r = group_order(catalogue_presentation(g), finite);
          return r.completed() ? std::to_string(r.index) : "exceeded";
        });

  // Consistency: the Euclidean and hyperbolic tetrahedral groups exhaust any
  // budget (not an infiniteness proof; the certificate is the geometry).
  for (const auto& row : base_rows)
    if (std::string_view(row.cls) != "Spherical")
      add("infinite/base/C(" + std::to_string(row.n) + "," + std::to_string(row.m) + ")",
          "Euclidean and hyperbolic tetrahedral Coxeter groups are infinite",
          "exceeded at budget " + std::to_string(infinite), [row, infinite] {
            auto r = group_order(coxeter_presentation(base_tetrahedron(row.n, row.m)), infinite);
            return r.completed() ? "order " + std::to_string(r.index)
                                 : "exceeded at budget " + std::to_string(r.budget);
          });
  for (const auto& row : tau_rows)
    if (std::string_view(row.cls) != "Spherical")
      add("infinite/tau/C(" + std::to_string(row.n) + "," + std::to_string(row.m) + ";3,3;2,2)",
          "Euclidean and hyperbolic tetrahedral Coxeter groups are infinite",
          "exceeded at budget " + std::to_string(infinite), [row, infinite] {
            auto r = group_order(coxeter_presentation(tau_tetrahedron(row.n, row.m)), infinite);
            return r.completed() ? "order " + std::to_string(r.index)
                                 : "exceeded at budget " + std::to_string(r.budget);
          });

  return checks;
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
  std::vector<Check> checks = build_checks(options);
  std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  for (size_t i = 1; i < checks.size(); ++i)
    if (checks[i].id == checks[i - 1].id) throw std::logic_error("run_verification: duplicate check id " + checks[i].id);

  VerificationReport report;
  report.checks.reserve(checks.size());
  for (const Check& check : checks) {
    CheckRecord record;
    record.id = check.id;
    record.anchor = check.anchor;
    record.expected = check.expected;
    if (auto it = options.expected_overrides.find(check.id); it != options.expected_overrides.end())
      record.expected = it->second;
    auto start = std::chrono::steady_clock::now();
    try {
      record.computed = check.compute();
    } catch (const std::exception& e) {
      record.computed = std::string("error: ") + e.what();
    }
    record.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    record.pass = record.expected == record.computed;
    report.checks.push_back(std::move(record));
  }
  return report;
}

std::string render_text(const VerificationReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.id;
    if (!c.pass) {
      out += "  expected [" + c.expected + "] computed [" + c.computed + "]";
    }
    out += '\n';
  }
  out += std::to_string(report.checks.size() - report.failed()) + "/" + std::to_string(report.checks.size()) +
         " checks passed\n";
  return out;
}

std::string render_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["report"] = "verify-paper";
  doc["total"] = report.checks.size();
  doc["failed"] = report.failed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["id"] = c.id;
    entry["anchor"] = c.anchor;
    entry["expected"] = c.expected;
    entry["computed"] = c.computed;
    entry["pass"] = c.pass;
    entry["elapsed_ms"] = c.elapsed_ms;
    doc["checks"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string render_csv(const VerificationReport& report) {
  std::string out = "id,anchor,expected,computed,pass,elapsed_ms\n";
  for (const auto& c : report.checks) {
    out += csv_field(c.id) + "," + csv_field(c.anchor) + "," + csv_field(c.expected) + "," +
           csv_field(c.computed) + "," + (c.pass ? "true" : "false") + "," + std::to_string(c.elapsed_ms) +
           "\n";
  }
  return out;
}

}  // namespace maxsym
