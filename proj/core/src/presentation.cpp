#include "maxsym/presentation.hpp"

#include <algorithm>
#include <cctype>

namespace maxsym {

namespace {

Word free_reduce(Word w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word power(const Word& base, int exponent) {
  Word out;
  if (exponent == 0) return out;
  Word unit = base;
  if (exponent < 0) {
    unit.clear();
    for (auto it = base.rbegin(); it != base.rend(); ++it) unit.push_back({it->generator, -it->exponent});
  }
  int count = exponent < 0 ? -exponent : exponent;
  for (int i = 0; i < count; ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

Word pair_relator(int g, int h, int exponent) {
  return power({{g, 1}, {h, 1}}, exponent);
}

}  // namespace

void Presentation::validate() const {
  for (const auto& name : generator_names)
    if (name.empty()) throw std::invalid_argument("Presentation: empty generator name");
  for (const Word& rel : relators) {
    if (rel.empty()) throw std::invalid_argument("Presentation: empty relator");
    for (const Letter& l : rel) {
      if (l.generator < 0 || l.generator >= generator_count())
        throw std::invalid_argument("Presentation: relator letter out of range");
      if (l.exponent != 1 && l.exponent != -1)
        throw std::invalid_argument("Presentation: letter exponent must be +1 or -1");
    }
    if (free_reduce(rel).empty())
      throw std::invalid_argument("Presentation: relator freely reduces to the empty word");
  }
}

VertexPermutation twist_permutation(Twist t) {
  return t == Twist::Tau ? VertexPermutation::tau() : VertexPermutation::mu();
}

Presentation coxeter_presentation(const LabeledTetrahedron& t) {
  Presentation p;
  p.generator_names = {"r1", "r2", "r3", "r4"};
  for (int i = 0; i < 4; ++i) p.relators.push_back(power({{i, 1}}, 2));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      int k = 0, l = 0;
      for (int v = 1; v <= 4; ++v) {
        if (v == i || v == j) continue;
        (k == 0 ? k : l) = v;
      }
      p.relators.push_back(pair_relator(i - 1, j - 1, t.label(k, l)));
    }
  p.validate();
  return p;
}

Presentation twisted_presentation(const LabeledTetrahedron& t, const std::vector<Twist>& twists) {
  if (twists.empty()) throw std::invalid_argument("twisted_presentation: twist set must be nonempty");
  bool want_tau = false, want_mu = false;
  for (Twist tw : twists) (tw == Twist::Tau ? want_tau : want_mu) = true;

  const auto automorphisms = label_automorphisms(t);
  auto available = [&](const VertexPermutation& p) {
    return std::find(automorphisms.begin(), automorphisms.end(), p) != automorphisms.end();
  };

  Presentation p = coxeter_presentation(t);
  std::vector<int> twist_gens;
  for (Twist tw : {Twist::Tau, Twist::Mu}) {
    if (tw == Twist::Tau && !want_tau) continue;
    if (tw == Twist::Mu && !want_mu) continue;
    const VertexPermutation perm = twist_permutation(tw);
    if (!available(perm))
      throw TwistUnavailable("twist does not preserve the labels of " + t.name());
    int g = p.generator_count();
    p.generator_names.push_back(tw == Twist::Tau ? "t" : "u");
    twist_gens.push_back(g);
    p.relators.push_back(power({{g, 1}}, 2));
    for (int i = 1; i <= 4; ++i)
      p.relators.push_back({{g, 1}, {i - 1, 1}, {g, 1}, {perm.image(i) - 1, -1}});
  }
  if (twist_gens.size() == 2)
    p.relators.push_back(power({{twist_gens[0], 1}, {twist_gens[1], 1}}, 2));
  p.validate();
  return p;
}

Presentation catalogue_presentation(const CatalogueGroup& g) {
  auto extended_triangle = [](int p, int q, int r) {
    Presentation out;
    out.generator_names = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i) out.relators.push_back(power({{i, 1}}, 2));
    out.relators.push_back(pair_relator(0, 1, p));
    out.relators.push_back(pair_relator(1, 2, q));
    out.relators.push_back(pair_relator(0, 2, r));
    return out;
  };
  auto triangle = [](int p, int q, int r) {
    Presentation out;
    out.generator_names = {"x", "y"};
    out.relators.push_back(power({{0, 1}}, p));
    out.relators.push_back(power({{1, 1}}, q));
    out.relators.push_back(pair_relator(0, 1, r));
    return out;
  };
  auto dihedral_of_order = [](int two_n) {
    Presentation out;
    out.generator_names = {"a", "b"};
    out.relators.push_back(power({{0, 1}}, 2));
    out.relators.push_back(power({{1, 1}}, 2));
    out.relators.push_back(pair_relator(0, 1, two_n / 2));
    return out;
  };

  Presentation p;
  switch (g.kind) {
    case CatalogueKind::Dbar: p = extended_triangle(2, 2, g.parameter); break;
    case CatalogueKind::Abar4: p = extended_triangle(2, 3, 3); break;
    case CatalogueKind::Sbar4: p = extended_triangle(2, 3, 4); break;
    case CatalogueKind::Abar5: p = extended_triangle(2, 3, 5); break;
    // Zbar(n) is abstractly dihedral of order 2n; D2*n abstractly dihedral
    // of order 4n.  Their distinct sphere actions play no role in the order
    // and Euler-characteristic arithmetic this library does.
    case CatalogueKind::Zbar: p = dihedral_of_order(2 * g.parameter); break;
    case CatalogueKind::D2star: p = dihedral_of_order(4 * g.parameter); break;
    case CatalogueKind::D: p = triangle(2, 2, g.parameter); break;
    case CatalogueKind::A4: p = triangle(2, 3, 3); break;
    case CatalogueKind::S4: p = triangle(2, 3, 4); break;
    case CatalogueKind::A5: p = triangle(2, 3, 5); break;
    case CatalogueKind::Z: {
      p.generator_names = {"g"};
      p.relators.push_back(power({{0, 1}}, g.parameter));
      break;
    }
  }
  p.validate();
  return p;
}

std::vector<Word> subgroup_words(const Presentation& p, const SubgroupSelector& which) {
  switch (which.kind) {
    case SubgroupSelector::Kind::ReflectionSubgroup: {
      if (p.generator_count() < 4)
        throw UnknownSelector("ReflectionSubgroup needs the four reflection generators");
      std::vector<Word> words;
      for (int i = 0; i < 4; ++i) words.push_back({{i, 1}});
      return words;
    }
    case SubgroupSelector::Kind::VertexStabilizer: {
      if (p.generator_count() != 4)
        throw UnknownSelector("VertexStabilizer applies to a plain Coxeter presentation");
      if (which.vertex < 1 || which.vertex > 4)
        throw UnknownSelector("VertexStabilizer vertex must be in 1..4");
      std::vector<Word> words;
      for (int i = 0; i < 4; ++i)
        if (i + 1 != which.vertex) words.push_back({{i, 1}});
      return words;
    }
  }
  throw UnknownSelector("unknown subgroup selector");
}

// ---------------------------------------------------------------------------
// Text form.

namespace {

// Renders a word compactly: the maximal repetition w = u^k prints as
// "u^k" (single letter) or "(u ...)^k"; letters with exponent -1 carry ^-1.
std::string render_word(const Word& w, const std::vector<std::string>& names) {
  auto render_letters = [&](const Word& letters) {
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
      if (i > 0) out += ' ';
      out += names[letters[i].generator];
      if (letters[i].exponent < 0) out += "^-1";
    }
    return out;
  };

  size_t n = w.size();
  size_t period = n;
  for (size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (size_t i = d; i < n && repeats; ++i) repeats = w[i] == w[i - d];
    if (repeats) {
      period = d;
      break;
    }
  }
  size_t count = n / period;
  if (count == 1) return render_letters(w);
  Word unit(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(period));
  if (period == 1 && unit[0].exponent > 0)
    return names[unit[0].generator] + "^" + std::to_string(count);
  return "(" + render_letters(unit) + ")^" + std::to_string(count);
}

struct Parser {
  std::string_view text;
  size_t pos = 0;
  const std::vector<std::string>* names = nullptr;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse_presentation: " + what + " at offset " + std::to_string(pos));
  }

  std::string name() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start || std::isdigit(static_cast<unsigned char>(text[start]))) fail("expected generator name");
    return std::string(text.substr(start, pos - start));
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }

  int generator_index(const std::string& n) {
    for (size_t i = 0; i < names->size(); ++i)
      if ((*names)[i] == n) return static_cast<int>(i);
    fail("unknown generator '" + n + "'");
  }

  Word factor() {
    Word base;
    if (peek() == '(') {
      ++pos;
      base = word();
      if (peek() != ')') fail("expected ')'");
      ++pos;
    } else {
      base.push_back({generator_index(name()), 1});
    }
    if (peek() == '^') {
      ++pos;
      int e = integer();
      if (e == 0) fail("zero exponent");
      return power(base, e);
    }
    return base;
  }

  Word word() {
    Word out;
    while (true) {
      Word f = factor();
      out.insert(out.end(), f.begin(), f.end());
      char c = peek();
      if (c == '\0' || c == '/' || c == ')') return out;
    }
  }
};

}  // namespace

std::string print_presentation(const Presentation& p) {
  std::string out;
  for (int i = 0; i < p.generator_count(); ++i) {
    if (i > 0) out += ',';
    out += p.generator_names[i];
  }
  out += " | ";
  for (size_t i = 0; i < p.relators.size(); ++i) {
    if (i > 0) out += '/';
    out += render_word(p.relators[i], p.generator_names);
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  size_t bar = text.find('|');
  Presentation p;

  Parser gens{bar == std::string_view::npos ? text : text.substr(0, bar)};
  while (!gens.eof()) {
    p.generator_names.push_back(gens.name());
    if (gens.peek() == ',')
      ++gens.pos;
    else if (!gens.eof())
      gens.fail("expected ','");
  }
  if (p.generator_names.empty())
    throw std::invalid_argument("parse_presentation: no generators");

  if (bar != std::string_view::npos) {
    Parser rels{text.substr(bar + 1)};
    rels.names = &p.generator_names;
    while (!rels.eof()) {
      p.relators.push_back(rels.word());
      if (rels.peek() == '/')
        ++rels.pos;
      else if (!rels.eof())
        rels.fail("expected '/'");
    }
  }
  p.validate();
  return p;
}

}  // namespace maxsym
