#include "dplane/gram.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dplane {

BasisIndex BasisIndex::of(const ChamberComplex& cc) {
  BasisIndex b;
  for (int c : cc.bounded_chamber_ids()) b.elements.emplace_back(ChamberClass{c});
  for (std::size_t v = 0; v < cc.vertices().size(); ++v) b.elements.emplace_back(VertexClass{int(v)});
  return b;
}

namespace {

bool has_vertex(const Chamber& c, int v) {
  return std::binary_search(c.vertices.begin(), c.vertices.end(), v);
}

Integer chamber_pair(const ChamberComplex& cc, const OrientationAssignment& oa, int c1, int c2) {
  if (c1 == c2) return -2;
  const PairClass pc = cc.classify_pair(c1, c2);
  if (std::holds_alternative<Disjoint>(pc)) return 0;
  if (std::holds_alternative<SharedEdge>(pc)) return -1;
  return coherent(pc, oa[std::size_t(c1)], oa[std::size_t(c2)]) ? 0 : -1;
}

}  // namespace

Integer gram_entry(const ChamberComplex& cc, const OrientationAssignment& oa, const BasisElement& i,
                   const BasisElement& j) {
  if (oa.size() != cc.bounded_count())
    throw std::invalid_argument("orientation assignment does not cover the bounded chambers");
  if (const auto* ci = std::get_if<ChamberClass>(&i)) {
    if (const auto* cj = std::get_if<ChamberClass>(&j)) return chamber_pair(cc, oa, ci->chamber, cj->chamber);
    // Independent of the orientation, by the reversal relation.
    return has_vertex(cc.chamber(ci->chamber), std::get<VertexClass>(j).vertex) ? -1 : 0;
  }
  const int p = std::get<VertexClass>(i).vertex;
  if (const auto* cj = std::get_if<ChamberClass>(&j)) return has_vertex(cc.chamber(cj->chamber), p) ? -1 : 0;
  // Exceptional curves over distinct vertices are disjoint.
  return p == std::get<VertexClass>(j).vertex ? -2 : 0;
}

GramMatrix gram_matrix(const ChamberComplex& cc, const OrientationAssignment& oa) {
  GramMatrix g{IntMatrix(), BasisIndex::of(cc)};
  const Eigen::Index n = static_cast<Eigen::Index>(g.basis.size());
  g.entries = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      Integer v = gram_entry(cc, oa, g.basis[std::size_t(i)], g.basis[std::size_t(j)]);
      g.entries(i, j) = v;
      g.entries(j, i) = v;
    }
  return g;
}

GramMatrix gram_via_flip_oracle(const ChamberComplex& cc, const GramMatrix& standard_gram,
                                const OrientationAssignment& oa) {
  const std::size_t n_bounded = cc.bounded_count();
  const Eigen::Index n = standard_gram.entries.rows();
  if (oa.size() != n_bounded || static_cast<std::size_t>(n) != n_bounded + cc.vertices().size())
    throw std::invalid_argument("orientation/gram size mismatch");

  // Sparse rows of the base change T.
  std::vector<std::vector<std::pair<Eigen::Index, int>>> t(static_cast<std::size_t>(n));
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    if (ur < n_bounded && oa[ur] == -1) {
      t[ur].emplace_back(r, -1);
      for (int q : cc.chamber(int(ur)).vertices)
        t[ur].emplace_back(static_cast<Eigen::Index>(n_bounded) + q, 1);
    } else {
      t[ur].emplace_back(r, 1);
    }
  }

  const IntMatrix& g = standard_gram.entries;
  IntMatrix tg = IntMatrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (const auto& [k, coeff] : t[std::size_t(r)]) tg.row(r) += Integer(coeff) * g.row(k);

  GramMatrix out{IntMatrix::Zero(n, n), standard_gram.basis};
  for (Eigen::Index s = 0; s < n; ++s)
    for (const auto& [l, coeff] : t[std::size_t(s)]) out.entries.col(s) += Integer(coeff) * tg.col(l);
  return out;
}

}  // namespace dplane
