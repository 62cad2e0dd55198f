#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxsym/catalogue.hpp"
#include "maxsym/tetra.hpp"

namespace maxsym {

// One letter of a word: a generator index with an explicit exponent of +1
// or -1.  Exponents stay explicit even though most generators here are
// involutions; the enumeration engine is generic over presentations.
struct Letter {
  std::int32_t generator = 0;
  std::int32_t exponent = 1;

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  int generator_count() const { return static_cast<int>(generator_names.size()); }

  // Throws std::invalid_argument on out-of-range generator indices, empty
  // relators, or relators that freely reduce to the empty word.
  void validate() const;

  bool operator==(const Presentation&) const = default;
};

struct TwistUnavailable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownSelector : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Twist { Tau, Mu };

VertexPermutation twist_permutation(Twist t);

// Four involutive generators r1..r4, where ri is the reflection in the face
// opposite vertex i; (ri rj)^p with p the label of the edge on the
// complementary vertex pair.
Presentation coxeter_presentation(const LabeledTetrahedron& t);

// Extends the Coxeter presentation by one involution per requested twist
// ("t" for tau, "u" for mu), with conjugation relators permuting the
// reflections as the twist permutes the vertices; with both twists present
// the two new involutions commute.  Throws TwistUnavailable when a twist
// does not preserve the labels.
Presentation twisted_presentation(const LabeledTetrahedron& t, const std::vector<Twist>& twists);

Presentation catalogue_presentation(const CatalogueGroup& g);

struct SubgroupSelector {
  enum class Kind { ReflectionSubgroup, VertexStabilizer };
  Kind kind = Kind::ReflectionSubgroup;
  int vertex = 0;  // 1..4 for VertexStabilizer

  static SubgroupSelector reflection_subgroup() { return {Kind::ReflectionSubgroup, 0}; }
  static SubgroupSelector vertex_stabilizer(int vertex) { return {Kind::VertexStabilizer, vertex}; }
};

// ReflectionSubgroup: the words {r1},..,{r4} (presentation must have the
// four reflection generators first).  VertexStabilizer(i): the three
// reflections fixing vertex i, i.e. {rj : j != i}, on a plain Coxeter
// presentation.  Throws UnknownSelector otherwise.
std::vector<Word> subgroup_words(const Presentation& p, const SubgroupSelector& which);

// Text form "r1,r2,r3,r4 | r1^2/(r1 r2)^5/...": comma-separated generator
// names, then '/'-separated relator words.  parse(print(p)) == p.
// Grammar in docs/presentation-format.md.
std::string print_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);

}  // namespace maxsym
