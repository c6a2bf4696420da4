#include "dplane/lattice.hpp"

#include <map>

namespace dplane {

AbelianGroup AbelianGroup::from_cyclic_orders(std::vector<Integer> orders) {
  std::vector<Integer> d;
  for (auto& o : orders) {
    Integer v = abs(o);
    if (v == 0) throw std::invalid_argument("infinite cyclic factor in a finite group");
    if (v > 1) d.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      d[j] = d[i] / g * d[j];
      d[i] = g;
    }
  AbelianGroup group;
  for (auto& v : d)
    if (v > 1) group.factors_.push_back(std::move(v));
  return group;
}

AbelianGroup AbelianGroup::elementary(const Integer& m, std::size_t count) {
  return from_cyclic_orders(std::vector<Integer>(count, m));
}

Integer AbelianGroup::order() const {
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!s.empty()) s += " x ";
    if (j - i > 1)
      s += "(Z/" + factors_[i].str() + ")^" + std::to_string(j - i);
    else
      s += "Z/" + factors_[i].str();
    i = j;
  }
  return s;
}

namespace {

// prime -> exponent
std::map<Integer, unsigned> factorize(Integer n) {
  std::map<Integer, unsigned> f;
  for (Integer p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

unsigned valuation(Integer n, const Integer& p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

bool is_subquotient(const AbelianGroup& a, const AbelianGroup& b) {
  std::map<Integer, unsigned> primes;
  for (const auto& d : a.invariant_factors())
    for (const auto& [p, e] : factorize(d)) primes[p] = std::max(primes[p], e);

  for (const auto& [p, max_e] : primes) {
    std::vector<unsigned> va, vb;
    for (const auto& d : a.invariant_factors()) va.push_back(valuation(d, p));
    for (const auto& d : b.invariant_factors()) vb.push_back(valuation(d, p));
    for (unsigned k = 1; k <= max_e; ++k) {
      auto at_least = [k](const std::vector<unsigned>& v) {
        return std::count_if(v.begin(), v.end(), [k](unsigned e) { return e >= k; });
      };
      if (at_least(va) > at_least(vb)) return false;
    }
  }
  return true;
}

AbelianGroup discriminant_group(const IntMatrix& g_nondeg) {
  if (g_nondeg.rows() != g_nondeg.cols()) throw std::invalid_argument("discriminant group of a non-square matrix");
  const auto snf = smith_normal_form(g_nondeg);
  if (snf.rank() != static_cast<std::size_t>(g_nondeg.rows())) throw SingularMatrix();
  return AbelianGroup::from_cyclic_orders(snf.diagonal);
}

IntMatrix quotient_gram(const IntMatrix& gram) {
  const auto split = kernel_saturation(gram);
  return congruent_block(split.complement, gram);
}

LatticeInvariants lattice_invariants(const IntMatrix& gram) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("Gram matrix must be square");
  if (gram != gram.transpose()) throw std::invalid_argument("Gram matrix must be symmetric");

  const auto split = kernel_saturation(gram);
  for (Eigen::Index r = 0; r < split.kernel.rows(); ++r) {
    const IntVector image = gram * split.kernel.row(r).transpose();
    for (Eigen::Index i = 0; i < image.size(); ++i)
      if (image(i) != 0) throw std::logic_error("kernel vector is not annihilated");
  }
  const IntMatrix q = congruent_block(split.complement, gram);

  LatticeInvariants inv;
  inv.ambient_rank = static_cast<std::size_t>(gram.rows());
  inv.kernel_rank = static_cast<std::size_t>(split.kernel.rows());
  inv.nondeg_rank = static_cast<std::size_t>(q.rows());
  inv.signature = inertia(q);

  const auto snf = smith_normal_form(q);
  if (snf.rank() != inv.nondeg_rank) throw std::logic_error("quotient Gram matrix is degenerate");
  inv.invariant_factors = snf.diagonal;
  inv.disc = AbelianGroup::from_cyclic_orders(snf.diagonal);

  inv.det_abs = abs(determinant(q));
  Integer product = 1;
  for (const auto& d : snf.diagonal) product *= d;
  if (product != inv.det_abs) throw std::logic_error("Smith diagonal does not reproduce |det|");
  return inv;
}

}  // namespace dplane
