#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maxsym {

enum class GeometryClass { Spherical, Euclidean, Hyperbolic, NotCoxeter };

std::string_view to_string(GeometryClass c);

// Sylvester threshold for the leading-principal-minor signs.  On the bounded
// label domain every nonzero minor is far above this band and the Euclidean
// determinants sit at ~1e-16, so double precision decides the class exactly.
inline constexpr double kClassifyEpsilon = 1e-9;

// A permutation of the vertices {1,2,3,4} of the reference tetrahedron.
// Rotations of the tetrahedron correspond to the even permutations.
class VertexPermutation {
 public:
  VertexPermutation();  // identity
  static VertexPermutation from_images(const std::array<int, 4>& images);

  int image(int vertex) const;  // vertex in 1..4
  bool is_even() const;
  VertexPermutation inverse() const;
  // Composition: (a.then(b)).image(v) == b.image(a.image(v)).
  VertexPermutation then(const VertexPermutation& next) const;

  static VertexPermutation identity() { return {}; }
  static VertexPermutation tau();    // (1 2)(3 4)
  static VertexPermutation mu();     // (1 4)(2 3)
  static VertexPermutation taumu();  // (1 3)(2 4)

  static const std::vector<VertexPermutation>& rotations();  // the 12 even ones
  static const std::vector<VertexPermutation>& all();        // all 24

  bool operator==(const VertexPermutation&) const = default;
  auto operator<=>(const VertexPermutation&) const = default;

 private:
  std::array<int, 4> images_;  // images_[v-1] = image of vertex v
};

// Six edge labels on the fixed tetrahedron with vertices {1,2,3,4}.
// C(n,m;a,b;c,d) maps to (m12,m34)=(n,m), (m13,m24)=(a,b), (m14,m23)=(c,d);
// opposite edge pairs are (12,34), (13,24), (14,23).
struct LabeledTetrahedron {
  int m12, m34, m13, m24, m14, m23;

  LabeledTetrahedron(int n, int m, int a, int b, int c, int d);

  int label(int i, int j) const;  // 1 <= i,j <= 4, i != j
  std::array<int, 6> tuple() const { return {m12, m34, m13, m24, m14, m23}; }

  // Vertex v meets the three edges through v; triples in the fixed order
  // (m12,m13,m14), (m12,m23,m24), (m13,m23,m34), (m14,m24,m34).
  std::array<std::array<int, 3>, 4> vertex_triples() const;

  std::string name() const;  // "C(n,m;a,b;c,d)"

  bool operator==(const LabeledTetrahedron&) const = default;
  auto operator<=>(const LabeledTetrahedron&) const = default;
};

// Pushforward of labels: the edge {p(i), p(j)} of the result carries m_ij.
LabeledTetrahedron relabel(const LabeledTetrahedron& t, const VertexPermutation& p);

// Lexicographically minimal tuple over all 24 vertex relabelings.
LabeledTetrahedron canonical(const LabeledTetrahedron& t);

// True iff every vertex triple (a,b,c) satisfies 1/a + 1/b + 1/c > 1,
// decided in exact integer arithmetic.
bool is_coxeter(const LabeledTetrahedron& t);

// Gram matrix of the four face reflections: entry (i,i) = 1 and entry
// (i,j) = -cos(pi/m_kl) for {k,l} = {1,2,3,4} \ {i,j}.
std::array<std::array<double, 4>, 4> gram_matrix(const LabeledTetrahedron& t);

// Leading principal minors of orders 1..4.
std::array<double, 4> leading_minors(const std::array<std::array<double, 4>, 4>& m);

GeometryClass classify_geometry(const LabeledTetrahedron& t);

// All even permutations p with m_{p(i)p(j)} = m_{ij}; contains the identity.
std::vector<VertexPermutation> label_automorphisms(const LabeledTetrahedron& t);

// All canonical Coxeter labelings with labels <= max_label, sorted, with
// their geometry class.  Enumeration is always bounded: (2,2,k) vertices
// admit arbitrarily large labels.
std::vector<std::pair<LabeledTetrahedron, GeometryClass>> enumerate_tetrahedra(int max_label);

}  // namespace maxsym
