#pragma once

#include "dplane/chamber_complex.hpp"
#include "dplane/numeric.hpp"
#include "dplane/orientation.hpp"

#include <variant>
#include <vector>

namespace dplane {

struct ChamberClass {
  int chamber;
  friend bool operator==(const ChamberClass&, const ChamberClass&) = default;
};
struct VertexClass {
  int vertex;
  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};
using BasisElement = std::variant<ChamberClass, VertexClass>;

/// Basis of second homology: vanishing cycles over the bounded chambers in
/// ascending id order, then the exceptional curves over the vertices.
struct BasisIndex {
  std::vector<BasisElement> elements;

  static BasisIndex of(const ChamberComplex& cc);
  std::size_t size() const { return elements.size(); }
  const BasisElement& operator[](std::size_t i) const { return elements[i]; }
};

struct GramMatrix {
  IntMatrix entries;
  BasisIndex basis;
};

Integer gram_entry(const ChamberComplex& cc, const OrientationAssignment& oa, const BasisElement& i,
                   const BasisElement& j);

GramMatrix gram_matrix(const ChamberComplex& cc, const OrientationAssignment& oa);

/// Re-expresses every reversed vanishing cycle through
/// [S(C,-g)] = sum_{P in Vert(C)} [D_P] - [S(C,g)] and returns T G T^t.
GramMatrix gram_via_flip_oracle(const ChamberComplex& cc, const GramMatrix& standard_gram,
                                const OrientationAssignment& oa);

}  // namespace dplane
