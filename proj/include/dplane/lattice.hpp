#pragma once

// Exact integer lattice algebra over dense Eigen matrices: fraction-free
// determinant and rank, Sylvester inertia by symmetric congruence, Smith normal
// form, and saturated kernels with unimodular completion.
//
// All routines are templated on the scalar; dplane::Integer (GMP) is the
// intended instantiation and gets fused multiply/exact-division fast paths.

#include "dplane/numeric.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dplane {

class SingularMatrix : public std::invalid_argument {
 public:
  SingularMatrix() : std::invalid_argument("singular matrix") {}
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

namespace detail {

using Index = Eigen::Index;

template <typename S>
bool is_zero(const S& v) {
  return v == 0;
}
inline bool is_zero(const Integer& v) { return v.is_zero(); }

template <typename S>
S abs_value(const S& v) {
  return v < 0 ? S(-v) : v;
}

template <typename S>
int cmp_abs(const S& a, const S& b) {
  const S x = abs_value(a), y = abs_value(b);
  return (x > y) - (x < y);
}
inline int cmp_abs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.backend().data(), b.backend().data());
}

// r -= a * b
template <typename S>
void submul(S& r, const S& a, const S& b) {
  r -= a * b;
}
inline void submul(Integer& r, const Integer& a, const Integer& b) {
  mpz_submul(r.backend().data(), a.backend().data(), b.backend().data());
}

// r += a * b
template <typename S>
void addmul(S& r, const S& a, const S& b) {
  r += a * b;
}
inline void addmul(Integer& r, const Integer& a, const Integer& b) {
  mpz_addmul(r.backend().data(), a.backend().data(), b.backend().data());
}

// r = (p * r - a * b) / d, exact. `tmp` is scratch space.
template <typename S>
void bareiss_step(S& r, const S& p, const S& a, const S& b, const S& d, S& tmp) {
  tmp = p * r;
  tmp -= a * b;
  if (tmp % d != 0) throw std::logic_error("inexact fraction-free division");
  r = tmp / d;
}
inline void bareiss_step(Integer& r, const Integer& p, const Integer& a, const Integer& b, const Integer& d,
                         Integer& tmp) {
  mpz_mul(tmp.backend().data(), p.backend().data(), r.backend().data());
  mpz_submul(tmp.backend().data(), a.backend().data(), b.backend().data());
  mpz_divexact(r.backend().data(), tmp.backend().data(), d.backend().data());
}

// Truncating quotient.
template <typename S>
S quotient(const S& a, const S& b) {
  return a / b;
}

template <typename S>
S gcd_value(S a, S b) {
  a = abs_value(a);
  b = abs_value(b);
  while (!is_zero(b)) {
    S r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Returns g = gcd(a, b) >= 0 with s*a + t*b = g.
template <typename S>
S extended_gcd(const S& a, const S& b, S& s, S& t) {
  S r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!is_zero(r1)) {
    S q = r0 / r1;
    S r2 = r0 - q * r1;
    S s2 = s0 - q * s1;
    S t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return r0;
}

template <typename S>
void swap_rows(Matrix<S>& m, Index a, Index b) {
  if (a == b) return;
  for (Index j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

template <typename S>
void swap_cols(Matrix<S>& m, Index a, Index b) {
  if (a == b) return;
  for (Index i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
template <typename S>
void row_submul(Matrix<S>& m, Index dst, const S& q, Index src) {
  for (Index j = 0; j < m.cols(); ++j)
    if (!is_zero(m(src, j))) submul(m(dst, j), q, m(src, j));
}

// col_dst -= q * col_src
template <typename S>
void col_submul(Matrix<S>& m, Index dst, const S& q, Index src) {
  for (Index i = 0; i < m.rows(); ++i)
    if (!is_zero(m(i, src))) submul(m(i, dst), q, m(i, src));
}

template <typename S>
Matrix<S> identity(Index n) {
  Matrix<S> m = Matrix<S>::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  using detail::Index;
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Index n = a.rows();
  Scalar prev = 1, tmp;
  int sign = 1;
  for (Index k = 0; k < n; ++k) {
    Index p = -1;
    for (Index i = k; i < n; ++i)
      if (!detail::is_zero(a(i, k)) && (p < 0 || detail::cmp_abs(a(i, k), a(p, k)) < 0)) p = i;
    if (p < 0) return Scalar(0);
    if (p != k) {
      detail::swap_rows(a, p, k);
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) detail::bareiss_step(a(i, j), a(k, k), a(i, k), a(k, j), prev, tmp);
    prev = a(k, k);
  }
  if (n == 0) return Scalar(1);
  return sign > 0 ? prev : Scalar(-prev);
}

/// Rank by fraction-free elimination.
template <typename Scalar>
std::size_t rank(Matrix<Scalar> a) {
  using detail::Index;
  const Index m = a.rows(), n = a.cols();
  Scalar prev = 1, tmp;
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = -1;
    for (Index i = r; i < m; ++i)
      if (!detail::is_zero(a(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    detail::swap_rows(a, p, r);
    for (Index i = r + 1; i < m; ++i)
      for (Index j = c + 1; j < n; ++j) detail::bareiss_step(a(i, j), a(r, c), a(i, c), a(r, j), prev, tmp);
    for (Index i = r + 1; i < m; ++i) a(i, c) = 0;
    prev = a(r, c);
    ++r;
  }
  return static_cast<std::size_t>(r);
}

/// Sylvester inertia of a non-degenerate symmetric matrix, computed by exact
/// symmetric congruence (LDL^t with diagonal pivoting) carried out
/// fraction-free. When every remaining diagonal entry vanishes, the congruence
/// row_i += row_j, col_i += col_j creates the pivot 2*a_ij.
/// Throws SingularMatrix when the matrix is degenerate.
template <typename Scalar>
Inertia inertia(const Matrix<Scalar>& g) {
  using detail::Index;
  if (g.rows() != g.cols()) throw std::invalid_argument("inertia of a non-square matrix");
  const Index n = g.rows();
  // Upper-triangular storage addressed through a logical permutation.
  Matrix<Scalar> a = g;
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) perm[std::size_t(i)] = i;
  auto at = [&](Index i, Index j) -> Scalar& {
    Index pi = perm[std::size_t(i)], pj = perm[std::size_t(j)];
    return pi <= pj ? a(pi, pj) : a(pj, pi);
  };

  Inertia result;
  Scalar prev = 1, tmp;
  for (Index k = 0; k < n; ++k) {
    Index p = -1;
    for (Index i = k; i < n; ++i)
      if (!detail::is_zero(at(i, i)) && (p < 0 || detail::cmp_abs(at(i, i), at(p, p)) < 0)) p = i;
    if (p < 0) {
      Index bi = -1, bj = -1;
      for (Index i = k; i < n && bi < 0; ++i)
        for (Index j = i + 1; j < n; ++j)
          if (!detail::is_zero(at(i, j))) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) throw SingularMatrix();
      // Diagonal entries at bi and bj are zero, so the new (bi, bi) is 2*a_ij.
      Scalar aij = at(bi, bj);
      for (Index l = k; l < n; ++l)
        if (l != bi) at(bi, l) += at(bj, l);
      at(bi, bi) = aij + aij;
      p = bi;
    }
    std::swap(perm[std::size_t(p)], perm[std::size_t(k)]);

    const Scalar pivot = at(k, k);
    const int d_sign = detail::is_zero(prev) ? 0 : (pivot < 0) == (prev < 0) ? 1 : -1;
    (d_sign > 0 ? result.positive : result.negative) += 1;

    for (Index i = k + 1; i < n; ++i) {
      const Scalar& aik = at(k, i);
      for (Index j = i; j < n; ++j) {
        Scalar& aij = at(i, j);
        if (detail::is_zero(aij) && (detail::is_zero(aik) || detail::is_zero(at(k, j)))) continue;
        detail::bareiss_step(aij, pivot, aik, at(k, j), prev, tmp);
      }
    }
    prev = pivot;
  }
  return result;
}

template <typename Scalar>
struct SmithForm {
  /// min(rows, cols) entries, non-negative, each dividing the next nonzero
  /// one; zeros trail.
  std::vector<Scalar> diagonal;
  /// When requested: left * M * right = diag(diagonal), both unimodular.
  Matrix<Scalar> left;
  Matrix<Scalar> right;
  bool has_transforms = false;

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const Scalar& d) { return !detail::is_zero(d); }));
  }
};

/// Smith normal form by pivoting on an entry of minimal magnitude (ties broken
/// by fewest fill-in candidates, then position). Deterministic.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& m, bool with_transforms = false) {
  using detail::Index;
  Matrix<Scalar> a = m;
  const Index rows = a.rows(), cols = a.cols(), steps = std::min(rows, cols);
  SmithForm<Scalar> out;
  out.has_transforms = with_transforms;
  if (with_transforms) {
    out.left = detail::identity<Scalar>(rows);
    out.right = detail::identity<Scalar>(cols);
  }
  auto row_op = [&](Index dst, const Scalar& q, Index src) {
    detail::row_submul(a, dst, q, src);
    if (with_transforms) detail::row_submul(out.left, dst, q, src);
  };
  auto col_op = [&](Index dst, const Scalar& q, Index src) {
    detail::col_submul(a, dst, q, src);
    if (with_transforms) detail::col_submul(out.right, dst, q, src);
  };
  auto row_swap = [&](Index x, Index y) {
    detail::swap_rows(a, x, y);
    if (with_transforms) detail::swap_rows(out.left, x, y);
  };
  auto col_swap = [&](Index x, Index y) {
    detail::swap_cols(a, x, y);
    if (with_transforms) detail::swap_cols(out.right, x, y);
  };

  std::vector<Index> row_count(static_cast<std::size_t>(rows)), col_count(static_cast<std::size_t>(cols));
  Index t = 0;
  for (; t < steps; ++t) {
    std::fill(row_count.begin(), row_count.end(), 0);
    std::fill(col_count.begin(), col_count.end(), 0);
    bool any = false;
    for (Index j = t; j < cols; ++j)
      for (Index i = t; i < rows; ++i)
        if (!detail::is_zero(a(i, j))) {
          ++row_count[std::size_t(i)];
          ++col_count[std::size_t(j)];
          any = true;
        }
    if (!any) break;
    Index pi = -1, pj = -1;
    Index best_fill = 0;
    for (Index j = t; j < cols; ++j)
      for (Index i = t; i < rows; ++i) {
        if (detail::is_zero(a(i, j))) continue;
        const Index fill = (row_count[std::size_t(i)] - 1) * (col_count[std::size_t(j)] - 1);
        if (pi >= 0) {
          const int c = detail::cmp_abs(a(i, j), a(pi, pj));
          if (c > 0 || (c == 0 && fill >= best_fill)) continue;
        }
        pi = i;
        pj = j;
        best_fill = fill;
      }
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (detail::is_zero(a(i, t))) continue;
        const Scalar q = detail::quotient(a(i, t), a(t, t));
        if (!detail::is_zero(q)) row_op(i, q, t);
        if (!detail::is_zero(a(i, t))) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (detail::is_zero(a(t, j))) continue;
        const Scalar q = detail::quotient(a(t, j), a(t, t));
        if (!detail::is_zero(q)) col_op(j, q, t);
        if (!detail::is_zero(a(t, j))) clean = false;
      }
      if (clean) break;
      // A smaller remainder appeared in row or column t; make it the pivot.
      Index bi = t, bj = t;
      for (Index i = t + 1; i < rows; ++i)
        if (!detail::is_zero(a(i, t)) && detail::cmp_abs(a(i, t), a(bi, bj)) < 0) {
          bi = i;
          bj = t;
        }
      for (Index j = t + 1; j < cols; ++j)
        if (!detail::is_zero(a(t, j)) && detail::cmp_abs(a(t, j), a(bi, bj)) < 0) {
          bi = t;
          bj = j;
        }
      row_swap(t, bi);
      col_swap(t, bj);
    }
    if (a(t, t) < 0) {
      for (Index j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      if (with_transforms)
        for (Index j = 0; j < rows; ++j) out.left(t, j) = -out.left(t, j);
    }
  }

  std::vector<Scalar> d(static_cast<std::size_t>(steps), Scalar(0));
  for (Index i = 0; i < t; ++i) d[std::size_t(i)] = a(i, i);

  // Enforce the divisibility chain: diag(x, y) ~ diag(gcd, lcm) through
  // [[s, t], [-y/g, x/g]] * diag(x, y) * [[1, -t*y/g], [1, s*x/g]].
  for (Index i = 0; i < t; ++i)
    for (Index j = i + 1; j < t; ++j) {
      Scalar& x = d[std::size_t(i)];
      Scalar& y = d[std::size_t(j)];
      if (detail::is_zero(y % x)) continue;
      Scalar s, u;
      const Scalar g = detail::extended_gcd(x, y, s, u);
      const Scalar xg = x / g, yg = y / g;
      if (with_transforms) {
        for (Index c = 0; c < rows; ++c) {
          const Scalar ri = out.left(i, c), rj = out.left(j, c);
          out.left(i, c) = s * ri + u * rj;
          out.left(j, c) = xg * rj - yg * ri;
        }
        for (Index r = 0; r < cols; ++r) {
          const Scalar ci = out.right(r, i), cj = out.right(r, j);
          out.right(r, i) = ci + cj;
          out.right(r, j) = s * xg * cj - u * yg * ci;
        }
      }
      y = x * yg;
      x = g;
    }
  out.diagonal = std::move(d);
  return out;
}

template <typename Scalar>
struct KernelSplit {
  /// Rows: a basis of the saturated integer kernel {x : G x = 0}.
  Matrix<Scalar> kernel;
  /// Rows completing `kernel` to a unimodular basis of Z^n.
  Matrix<Scalar> complement;
};

/// Saturated kernel of a symmetric integer matrix and a unimodular completion.
/// The rational null space is obtained by fraction-free Gauss-Jordan
/// elimination and cleared to primitive integer vectors; a column Hermite
/// reduction of those vectors, tracked through its inverse, yields a
/// unimodular matrix whose leading rows span the saturation.
template <typename Scalar>
KernelSplit<Scalar> kernel_saturation(const Matrix<Scalar>& g) {
  using detail::Index;
  if (g.rows() != g.cols()) throw std::invalid_argument("kernel of a non-square Gram matrix");
  const Index n = g.rows();

  // Fraction-free reduced row echelon form.
  Matrix<Scalar> a = g;
  std::vector<Index> pivot_cols;
  Scalar prev = 1, tmp;
  Index r = 0;
  for (Index c = 0; c < n && r < n; ++c) {
    Index p = -1;
    for (Index i = r; i < n; ++i)
      if (!detail::is_zero(a(i, c)) && (p < 0 || detail::cmp_abs(a(i, c), a(p, c)) < 0)) p = i;
    if (p < 0) continue;
    detail::swap_rows(a, p, r);
    const Scalar pivot = a(r, c);
    for (Index i = 0; i < n; ++i) {
      if (i == r) continue;
      const Scalar aic = a(i, c);
      for (Index j = 0; j < n; ++j) {
        if (j == c) continue;
        if (detail::is_zero(a(i, j)) && (detail::is_zero(aic) || detail::is_zero(a(r, j)))) continue;
        detail::bareiss_step(a(i, j), pivot, aic, a(r, j), prev, tmp);
      }
      a(i, c) = 0;
    }
    prev = pivot;
    pivot_cols.push_back(c);
    ++r;
  }
  // Every pivot row now carries `prev` on its pivot column.
  const Index rank_g = r;
  const Index k = n - rank_g;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : pivot_cols) is_pivot[std::size_t(c)] = true;

  Matrix<Scalar> basis = Matrix<Scalar>::Zero(k, n);
  Index row = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[std::size_t(f)]) continue;
    basis(row, f) = prev;
    for (Index i = 0; i < rank_g; ++i) basis(row, pivot_cols[std::size_t(i)]) = -a(i, f);
    Scalar content = 0;
    for (Index j = 0; j < n; ++j) content = detail::gcd_value(content, basis(row, j));
    for (Index j = 0; j < n; ++j) basis(row, j) /= content;
    ++row;
  }

  // Column Hermite reduction basis * W = [H | 0]; track inv = W^{-1}.
  Matrix<Scalar> inv = detail::identity<Scalar>(n);
  for (Index i = 0; i < k; ++i) {
    for (;;) {
      Index best = -1;
      for (Index j = i; j < n; ++j)
        if (!detail::is_zero(basis(i, j)) && (best < 0 || detail::cmp_abs(basis(i, j), basis(i, best)) < 0))
          best = j;
      if (best < 0) throw std::logic_error("kernel vectors are dependent");
      detail::swap_cols(basis, i, best);
      detail::swap_rows(inv, i, best);
      bool done = true;
      for (Index j = i + 1; j < n; ++j) {
        if (detail::is_zero(basis(i, j))) continue;
        const Scalar q = detail::quotient(basis(i, j), basis(i, i));
        // col_j -= q col_i  <=>  row_i += q row_j on the inverse
        detail::col_submul(basis, j, q, i);
        for (Index c = 0; c < n; ++c)
          if (!detail::is_zero(inv(j, c))) detail::addmul(inv(i, c), q, inv(j, c));
        if (!detail::is_zero(basis(i, j))) done = false;
      }
      if (done) break;
    }
  }

  KernelSplit<Scalar> out;
  out.kernel = inv.topRows(k);
  out.complement = inv.bottomRows(n - k);
  return out;
}

/// B G B^t, skipping zero entries of B.
template <typename Scalar>
Matrix<Scalar> congruent_block(const Matrix<Scalar>& b, const Matrix<Scalar>& g) {
  using detail::Index;
  const Index m = b.rows(), n = b.cols();
  Matrix<Scalar> bg = Matrix<Scalar>::Zero(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index k = 0; k < n; ++k) {
      if (detail::is_zero(b(i, k))) continue;
      for (Index j = 0; j < n; ++j)
        if (!detail::is_zero(g(k, j))) detail::addmul(bg(i, j), b(i, k), g(k, j));
    }
  Matrix<Scalar> out = Matrix<Scalar>::Zero(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < n; ++k)
        if (!detail::is_zero(b(j, k)) && !detail::is_zero(bg(i, k))) detail::addmul(out(i, j), bg(i, k), b(j, k));
  return out;
}

/// Finite abelian group given by invariant factors d1 | d2 | ... (each >= 2).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Any list of cyclic orders; unit factors are dropped and the rest brought
  /// into invariant-factor form.
  static AbelianGroup from_cyclic_orders(std::vector<Integer> orders);
  /// (Z/m)^count
  static AbelianGroup elementary(const Integer& m, std::size_t count);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool trivial() const { return factors_.empty(); }
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

/// Whether `a` is isomorphic to a quotient of a subgroup of `b`.
bool is_subquotient(const AbelianGroup& a, const AbelianGroup& b);

/// Invariant factors of the Smith form of a non-degenerate matrix with unit
/// factors dropped. Throws SingularMatrix on degenerate input.
AbelianGroup discriminant_group(const IntMatrix& g_nondeg);

struct LatticeInvariants {
  std::size_t ambient_rank = 0;
  std::size_t kernel_rank = 0;
  std::size_t nondeg_rank = 0;
  Inertia signature;
  AbelianGroup disc;
  Integer det_abs = 1;
  std::vector<Integer> invariant_factors;  // Smith diagonal of the quotient Gram
};

/// Gram matrix of the non-degenerate quotient Z^n / Ker, in the basis given by
/// the unimodular completion of the saturated kernel.
IntMatrix quotient_gram(const IntMatrix& gram);

/// Full pipeline: saturated kernel, quotient Gram, inertia, Smith form and an
/// independent fraction-free determinant reconciled with the Smith diagonal.
LatticeInvariants lattice_invariants(const IntMatrix& gram);

}  // namespace dplane
