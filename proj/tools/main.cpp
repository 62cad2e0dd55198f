// maxsym: exact computations around tetrahedral Coxeter groups, their
// twisted extensions, and the minimal handlebody orbifolds.
//
// Subcommands:
//   classify        geometry class of a labeled tetrahedron
//   order           group order and genus for C / Ctau / Cmu / Ctaumu
//   glue            boundary-identification case analysis
//   enumerate       all Coxeter labelings up to a label bound
//   amalgams        the minimal amalgams and their Euler characteristics
//   search-minimal  scan the admissibility table for chi < 0
//   verify-paper    re-derive every published numeric claim
//
// Exit codes: 0 success, 1 verification failure, 2 usage, 3 budget exceeded.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxsym/coset.hpp"
#include "maxsym/orbifold.hpp"
#include "maxsym/presentation.hpp"
#include "maxsym/rational.hpp"
#include "maxsym/tetra.hpp"
#include "maxsym/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_labels(const std::string& csv) {
  std::vector<int> labels;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string item = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      labels.push_back(value);
    } catch (const std::exception&) {
      throw UsageError("malformed label '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (labels.size() != 6) throw UsageError("expected six comma-separated labels");
  return labels;
}

maxsym::LabeledTetrahedron tetrahedron_from(const std::string& csv) {
  auto l = parse_labels(csv);
  try {
    return maxsym::LabeledTetrahedron(l[0], l[1], l[2], l[3], l[4], l[5]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::int64_t default_budget() {
  if (const char* env = std::getenv("MAXSYM_COSET_BUDGET")) {
    try {
      std::int64_t value = std::stoll(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
    }
    throw UsageError("MAXSYM_COSET_BUDGET must be a positive integer");
  }
  return maxsym::kDefaultCosetBudget;
}

std::string format_minor(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

int cmd_classify(const std::string& labels_csv, const std::string& format) {
  auto t = tetrahedron_from(labels_csv);
  auto cls = maxsym::classify_geometry(t);
  auto minors = maxsym::leading_minors(maxsym::gram_matrix(t));
  auto triples = t.vertex_triples();

  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["labels"] = labels_csv;
    doc["tetrahedron"] = t.name();
    doc["class"] = std::string(maxsym::to_string(cls));
    doc["vertex_triples"] = nlohmann::ordered_json::array();
    for (const auto& v : triples) doc["vertex_triples"].push_back({v[0], v[1], v[2]});
    doc["leading_minors"] = {minors[0], minors[1], minors[2], minors[3]};
    std::printf("%s\n", doc.dump(2).c_str());
    return kExitOk;
  }

  std::printf("%s\n", std::string(maxsym::to_string(cls)).c_str());
  std::printf("tetrahedron: %s\n", t.name().c_str());
  std::printf("vertex triples:");
  for (const auto& v : triples) std::printf(" (%d,%d,%d)", v[0], v[1], v[2]);
  std::printf("\n");
  std::printf("leading minors:");
  for (double m : minors) std::printf(" %s", format_minor(m).c_str());
  std::printf("\n");
  return kExitOk;
}

int cmd_order_family(const std::string& family, int n, int m, std::int64_t budget) {
  using maxsym::Twist;
  maxsym::Presentation presentation;
  maxsym::LabeledTetrahedron t(2, 2, 2, 2, 2, 2);
  std::int64_t genus_factor = 24;

  try {
    if (family == "C") {
      t = maxsym::LabeledTetrahedron(n, m, 2, 2, 2, 3);
      presentation = maxsym::coxeter_presentation(t);
    } else if (family == "Ctau") {
      t = maxsym::LabeledTetrahedron(n, m, 3, 3, 2, 2);
      presentation = maxsym::twisted_presentation(t, {Twist::Tau});
    } else if (family == "Cmu") {
      t = maxsym::LabeledTetrahedron(n, m, 2, 2, 2, 3);
      presentation = maxsym::twisted_presentation(t, {Twist::Mu});
      genus_factor = 48;
    } else if (family == "Ctaumu") {
      t = maxsym::LabeledTetrahedron(n, m, 3, 3, 2, 2);
      presentation = maxsym::twisted_presentation(t, {Twist::Tau, Twist::Mu});
      genus_factor = 48;
    } else {
      throw UsageError("family must be one of C, Ctau, Cmu, Ctaumu");
    }
  } catch (const maxsym::TwistUnavailable& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  auto result = maxsym::group_order(presentation, budget);
  if (!result.completed()) {
    std::printf("exceeded (budget %lld); geometry certificate: %s\n",
                static_cast<long long>(result.budget),
                std::string(maxsym::to_string(maxsym::classify_geometry(t))).c_str());
    return kExitBudget;
  }
  auto genus = maxsym::genus_from_order(result.index, maxsym::Rational(-1, genus_factor));
  std::string genus_text = genus ? std::to_string(*genus) : "non-integral";
  if (genus_factor == 48)
    std::printf("%lld (genus %s at 48(g-1))\n", static_cast<long long>(result.index), genus_text.c_str());
  else
    std::printf("%lld (genus %s)\n", static_cast<long long>(result.index), genus_text.c_str());
  return kExitOk;
}

int cmd_order_labels(const std::string& labels_csv, const std::vector<std::string>& twist_names,
                     std::int64_t budget) {
  auto t = tetrahedron_from(labels_csv);
  std::vector<maxsym::Twist> twists;
  for (const auto& name : twist_names) {
    if (name == "tau")
      twists.push_back(maxsym::Twist::Tau);
    else if (name == "mu")
      twists.push_back(maxsym::Twist::Mu);
    else
      throw UsageError("twist must be tau or mu");
  }
  maxsym::Presentation presentation;
  try {
    presentation = twists.empty() ? maxsym::coxeter_presentation(t) : maxsym::twisted_presentation(t, twists);
  } catch (const maxsym::TwistUnavailable& e) {
    throw UsageError(e.what());
  }
  std::printf("presentation: %s\n", maxsym::print_presentation(presentation).c_str());
  auto result = maxsym::group_order(presentation, budget);
  if (!result.completed()) {
    std::printf("exceeded (budget %lld); geometry certificate: %s\n",
                static_cast<long long>(result.budget),
                std::string(maxsym::to_string(maxsym::classify_geometry(t))).c_str());
    return kExitBudget;
  }
  std::printf("order: %lld\n", static_cast<long long>(result.index));
  return kExitOk;
}

int cmd_glue(const std::string& left, const std::string& right, const std::string& map) {
  auto lhs = maxsym::MinimalOrbifoldType::parse(left);
  auto rhs = maxsym::MinimalOrbifoldType::parse(right);
  if (!lhs || !rhs) throw UsageError("orbifold must be one of H2..H5, Ht2..Ht5");
  maxsym::BoundaryMap bmap;
  if (map == "id")
    bmap = maxsym::BoundaryMap::Identity;
  else if (map == "refl")
    bmap = maxsym::BoundaryMap::Reflection;
  else
    throw UsageError("map must be id or refl");

  auto outcome = maxsym::classify_gluing({*lhs, *rhs, bmap});
  std::printf("%s\n", outcome.name().c_str());
  if (auto t = maxsym::quotient_tetrahedron(outcome)) {
    std::printf("quotient: %s\n", t->name().c_str());
    std::printf("geometry: %s\n", std::string(maxsym::to_string(maxsym::classify_geometry(*t))).c_str());
  }
  return kExitOk;
}

int cmd_enumerate(int max_label) {
  if (max_label < 2) throw UsageError("max label must be >= 2");
  for (const auto& [t, cls] : maxsym::enumerate_tetrahedra(max_label)) {
    auto tuple = t.tuple();
    std::printf("%d,%d,%d,%d,%d,%d %s\n", tuple[0], tuple[1], tuple[2], tuple[3], tuple[4], tuple[5],
                std::string(maxsym::to_string(cls)).c_str());
  }
  return kExitOk;
}

int cmd_amalgams(bool include_orientation_preserving) {
  for (const auto& a : maxsym::minimal_amalgams(include_orientation_preserving))
    std::printf("%s chi=%s\n", a.name().c_str(), maxsym::chi_orb(a).str().c_str());
  return kExitOk;
}

int cmd_search_minimal(int max_n) {
  if (max_n < 2) throw UsageError("max n must be >= 2");
  for (const auto& [a, chi] : maxsym::search_minimal(max_n))
    std::printf("%s chi=%s\n", a.name().c_str(), chi.str().c_str());
  std::printf("minimality is relative to the curated admissibility table (docs/admissibility.md)\n");
  return kExitOk;
}

int cmd_verify_paper(const std::string& format) {
  maxsym::VerificationReport report = maxsym::run_verification();
  if (format == "json")
    std::fputs(maxsym::render_json(report).c_str(), stdout);
  else if (format == "csv")
    std::fputs(maxsym::render_csv(report).c_str(), stdout);
  else
    std::fputs(maxsym::render_text(report).c_str(), stdout);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for tetrahedral Coxeter groups and minimal handlebody orbifolds"};
  app.require_subcommand(1);

  std::string labels, format = "text";
  auto* classify = app.add_subcommand("classify", "geometry class of a labeled tetrahedron");
  classify->add_option("--labels", labels, "six labels n,m,a,b,c,d (each >= 2)")->required();
  classify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  std::string family;
  int n = 0, m = 0;
  std::int64_t budget = 0;
  std::vector<std::string> twist_names;
  std::string order_labels;
  auto* order = app.add_subcommand("order", "group order and genus");
  order->add_option("--family", family, "C|Ctau|Cmu|Ctaumu");
  order->add_option("--n", n, "first parameter");
  order->add_option("--m", m, "second parameter");
  order->add_option("--labels", order_labels, "six labels for a raw Coxeter presentation");
  order->add_option("--twists", twist_names, "twists for --labels mode: tau, mu")->delimiter(',');
  order->add_option("--budget", budget, "coset budget (default MAXSYM_COSET_BUDGET or 1000000)");

  std::string left, right, map;
  auto* glue = app.add_subcommand("glue", "classify a boundary identification");
  glue->add_option("--left", left, "H2..H5 or Ht2..Ht5")->required();
  glue->add_option("--right", right, "H2..H5 or Ht2..Ht5")->required();
  glue->add_option("--map", map, "id|refl")->required();

  int max_label = 0;
  auto* enumerate = app.add_subcommand("enumerate", "all Coxeter labelings up to a bound");
  enumerate->add_option("--max-label", max_label, "label bound")->required();

  bool orientation_preserving = false;
  auto* amalgams = app.add_subcommand("amalgams", "minimal amalgams and chi_orb");
  amalgams->add_flag("--orientation-preserving", orientation_preserving,
                     "include the four orientation-preserving amalgams");

  int max_n = 0;
  auto* search = app.add_subcommand("search-minimal", "scan the admissibility table for chi < 0");
  search->add_option("--max-n", max_n, "parameter bound")->required();

  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify-paper", "re-derive every published numeric claim");
  verify->add_option("--format", verify_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(labels, format);
    if (order->parsed()) {
      std::int64_t b = budget >= 1 ? budget : default_budget();
      if (!order_labels.empty()) {
        if (!family.empty()) throw UsageError("--labels and --family are mutually exclusive");
        return cmd_order_labels(order_labels, twist_names, b);
      }
      if (family.empty()) throw UsageError("order needs --family with --n/--m, or --labels");
      if (n < 2 || m < 2) throw UsageError("--n and --m must be >= 2");
      if ((family == "Cmu" || family == "Ctaumu") && n != m)
        throw UsageError(family + " requires n = m");
      return cmd_order_family(family, n, m, b);
    }
    if (glue->parsed()) return cmd_glue(left, right, map);
    if (enumerate->parsed()) return cmd_enumerate(max_label);
    if (amalgams->parsed()) return cmd_amalgams(orientation_preserving);
    if (search->parsed()) return cmd_search_minimal(max_n);
    if (verify->parsed()) return cmd_verify_paper(verify_format);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
