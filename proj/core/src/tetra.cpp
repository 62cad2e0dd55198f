#include "maxsym/tetra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <stdexcept>

namespace maxsym {

std::string_view to_string(GeometryClass c) {
  switch (c) {
    case GeometryClass::Spherical: return "Spherical";
    case GeometryClass::Euclidean: return "Euclidean";
    case GeometryClass::Hyperbolic: return "Hyperbolic";
    case GeometryClass::NotCoxeter: return "NotCoxeter";
  }
  throw std::logic_error("GeometryClass: bad value");
}

VertexPermutation::VertexPermutation() : images_{1, 2, 3, 4} {}

VertexPermutation VertexPermutation::from_images(const std::array<int, 4>& images) {
  std::array<bool, 4> seen{};
  for (int v : images) {
    if (v < 1 || v > 4 || seen[v - 1]) throw std::invalid_argument("VertexPermutation: not a permutation of 1..4");
    seen[v - 1] = true;
  }
  VertexPermutation p;
  p.images_ = images;
  return p;
}

int VertexPermutation::image(int vertex) const { return images_[vertex - 1]; }

bool VertexPermutation::is_even() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions % 2 == 0;
}

VertexPermutation VertexPermutation::inverse() const {
  std::array<int, 4> inv{};
  for (int v = 1; v <= 4; ++v) inv[images_[v - 1] - 1] = v;
  return from_images(inv);
}

VertexPermutation VertexPermutation::then(const VertexPermutation& next) const {
  std::array<int, 4> composed{};
  for (int v = 1; v <= 4; ++v) composed[v - 1] = next.image(image(v));
  return from_images(composed);
}

VertexPermutation VertexPermutation::tau() { return from_images({2, 1, 4, 3}); }
VertexPermutation VertexPermutation::mu() { return from_images({4, 3, 2, 1}); }
VertexPermutation VertexPermutation::taumu() { return from_images({3, 4, 1, 2}); }

const std::vector<VertexPermutation>& VertexPermutation::all() {
  static const std::vector<VertexPermutation> perms = [] {
    std::vector<VertexPermutation> out;
    std::array<int, 4> images{1, 2, 3, 4};
    do {
      out.push_back(from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }();
  return perms;
}

const std::vector<VertexPermutation>& VertexPermutation::rotations() {
  static const std::vector<VertexPermutation> perms = [] {
    std::vector<VertexPermutation> out;
    for (const auto& p : all())
      if (p.is_even()) out.push_back(p);
    return out;
  }();
  return perms;
}

LabeledTetrahedron::LabeledTetrahedron(int n, int m, int a, int b, int c, int d)
    : m12(n), m34(m), m13(a), m24(b), m14(c), m23(d) {
  for (int label : tuple())
    if (label < 2) throw std::invalid_argument("LabeledTetrahedron: every label must be >= 2");
}

int LabeledTetrahedron::label(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 2) return m12;
  if (i == 1 && j == 3) return m13;
  if (i == 1 && j == 4) return m14;
  if (i == 2 && j == 3) return m23;
  if (i == 2 && j == 4) return m24;
  if (i == 3 && j == 4) return m34;
  throw std::invalid_argument("LabeledTetrahedron: bad edge");
}

std::array<std::array<int, 3>, 4> LabeledTetrahedron::vertex_triples() const {
  return {{{m12, m13, m14}, {m12, m23, m24}, {m13, m23, m34}, {m14, m24, m34}}};
}

std::string LabeledTetrahedron::name() const {
  return "C(" + std::to_string(m12) + "," + std::to_string(m34) + ";" + std::to_string(m13) + "," +
         std::to_string(m24) + ";" + std::to_string(m14) + "," + std::to_string(m23) + ")";
}

LabeledTetrahedron relabel(const LabeledTetrahedron& t, const VertexPermutation& p) {
  const VertexPermutation inv = p.inverse();
  auto pulled = [&](int i, int j) { return t.label(inv.image(i), inv.image(j)); };
  return LabeledTetrahedron(pulled(1, 2), pulled(3, 4), pulled(1, 3), pulled(2, 4), pulled(1, 4), pulled(2, 3));
}

LabeledTetrahedron canonical(const LabeledTetrahedron& t) {
  LabeledTetrahedron best = t;
  for (const auto& p : VertexPermutation::all()) {
    LabeledTetrahedron candidate = relabel(t, p);
    if (candidate.tuple() < best.tuple()) best = candidate;
  }
  return best;
}

bool is_coxeter(const LabeledTetrahedron& t) {
  for (const auto& [a, b, c] : t.vertex_triples()) {
    // 1/a + 1/b + 1/c > 1  <=>  bc + ac + ab > abc
    std::int64_t la = a, lb = b, lc = c;
    if (lb * lc + la * lc + la * lb <= la * lb * lc) return false;
  }
  return true;
}

std::array<std::array<double, 4>, 4> gram_matrix(const LabeledTetrahedron& t) {
  std::array<std::array<double, 4>, 4> g{};
  for (int i = 1; i <= 4; ++i) {
    g[i - 1][i - 1] = 1.0;
    for (int j = i + 1; j <= 4; ++j) {
      // faces i and j meet along the edge on the complementary vertex pair
      int k = 0, l = 0;
      for (int v = 1; v <= 4; ++v) {
        if (v == i || v == j) continue;
        (k == 0 ? k : l) = v;
      }
      double entry = -std::cos(std::numbers::pi / t.label(k, l));
      g[i - 1][j - 1] = entry;
      g[j - 1][i - 1] = entry;
    }
  }
  return g;
}

namespace {

double det3(const std::array<std::array<double, 4>, 4>& m, int r0, int r1, int r2) {
  return m[r0][r0] * (m[r1][r1] * m[r2][r2] - m[r1][r2] * m[r2][r1]) -
         m[r0][r1] * (m[r1][r0] * m[r2][r2] - m[r1][r2] * m[r2][r0]) +
         m[r0][r2] * (m[r1][r0] * m[r2][r1] - m[r1][r1] * m[r2][r0]);
}

double minor3_deleting(const std::array<std::array<double, 4>, 4>& m, int row, int col) {
  std::array<int, 3> rows{}, cols{};
  int ri = 0, ci = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != row) rows[ri++] = i;
    if (i != col) cols[ci++] = i;
  }
  double d = 0.0;
  // 3x3 determinant over the selected rows/cols
  d += m[rows[0]][cols[0]] * (m[rows[1]][cols[1]] * m[rows[2]][cols[2]] - m[rows[1]][cols[2]] * m[rows[2]][cols[1]]);
  d -= m[rows[0]][cols[1]] * (m[rows[1]][cols[0]] * m[rows[2]][cols[2]] - m[rows[1]][cols[2]] * m[rows[2]][cols[0]]);
  d += m[rows[0]][cols[2]] * (m[rows[1]][cols[0]] * m[rows[2]][cols[1]] - m[rows[1]][cols[1]] * m[rows[2]][cols[0]]);
  return d;
}

}  // namespace

std::array<double, 4> leading_minors(const std::array<std::array<double, 4>, 4>& m) {
  std::array<double, 4> minors{};
  minors[0] = m[0][0];
  minors[1] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  minors[2] = det3(m, 0, 1, 2);
  double det4 = 0.0;
  for (int col = 0; col < 4; ++col) {
    double cofactor = minor3_deleting(m, 0, col);
    det4 += ((col % 2 == 0) ? 1.0 : -1.0) * m[0][col] * cofactor;
  }
  minors[3] = det4;
  return minors;
}

GeometryClass classify_geometry(const LabeledTetrahedron& t) {
  if (!is_coxeter(t)) return GeometryClass::NotCoxeter;
  const auto minors = leading_minors(gram_matrix(t));
  const bool head_positive =
      minors[0] > kClassifyEpsilon && minors[1] > kClassifyEpsilon && minors[2] > kClassifyEpsilon;
  if (head_positive && minors[3] > kClassifyEpsilon) return GeometryClass::Spherical;
  if (head_positive && std::abs(minors[3]) <= kClassifyEpsilon) return GeometryClass::Euclidean;
  if (head_positive && minors[3] < -kClassifyEpsilon) return GeometryClass::Hyperbolic;
  throw std::logic_error("classify_geometry: minor signs match no geometry for " + t.name());
}

std::vector<VertexPermutation> label_automorphisms(const LabeledTetrahedron& t) {
  std::vector<VertexPermutation> out;
  for (const auto& p : VertexPermutation::rotations()) {
    bool preserves = true;
    for (int i = 1; i <= 4 && preserves; ++i)
      for (int j = i + 1; j <= 4 && preserves; ++j)
        preserves = t.label(p.image(i), p.image(j)) == t.label(i, j);
    if (preserves) out.push_back(p);
  }
  return out;
}

std::vector<std::pair<LabeledTetrahedron, GeometryClass>> enumerate_tetrahedra(int max_label) {
  if (max_label < 2) throw std::invalid_argument("enumerate_tetrahedra: max_label must be >= 2");
  std::set<LabeledTetrahedron> seen;
  std::array<int, 6> labels{};
  for (labels[0] = 2; labels[0] <= max_label; ++labels[0])
    for (labels[1] = 2; labels[1] <= max_label; ++labels[1])
      for (labels[2] = 2; labels[2] <= max_label; ++labels[2])
        for (labels[3] = 2; labels[3] <= max_label; ++labels[3])
          for (labels[4] = 2; labels[4] <= max_label; ++labels[4])
            for (labels[5] = 2; labels[5] <= max_label; ++labels[5]) {
              LabeledTetrahedron t(labels[0], labels[1], labels[2], labels[3], labels[4], labels[5]);
              if (!is_coxeter(t)) continue;
              seen.insert(canonical(t));
            }
  std::vector<std::pair<LabeledTetrahedron, GeometryClass>> out;
  out.reserve(seen.size());
  for (const auto& t : seen) out.emplace_back(t, classify_geometry(t));
  return out;
}

}  // namespace maxsym
