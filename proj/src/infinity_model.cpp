#include "dplane/infinity_model.hpp"

#include <sstream>
#include <stdexcept>

namespace dplane {

namespace {

void require_lines(long long n) {
  if (n < 3) throw std::out_of_range("need N >= 3 lines");
}

void require_range(long long n, long long p) {
  require_lines(n);
  if (p < 0 || 2 * p > n) throw std::out_of_range("need 0 <= 2p <= N");
}

long long completed(long long n) { return n % 2 == 1 ? n + 1 : n; }

}  // namespace

Counts counts(long long n, long long p) {
  require_range(n, p);
  return {(n - 1) * (n - 2) / 2 - p, n * (n - 1) / 2 - p};
}

RankSignature ambient(long long n) {
  require_lines(n);
  const long long t = completed(n);  // even, so every quarter below is exact
  return {t * t - 3 * t + 4, {t * t / 4 - 3 * t / 2 + 3, 3 * t * t / 4 - 3 * t / 2 + 1}};
}

InfinityLattice h_infinity(long long n, long long p) {
  require_range(n, p);
  InfinityLattice h;
  if (n % 2 == 1) {
    h.rank = 1 + n + 2 * p;
    h.disc = AbelianGroup::elementary(2, static_cast<std::size_t>(n - 1));
  } else if (n != 2 * p) {
    h.rank = 1 + p;
    h.disc = AbelianGroup::elementary(2, static_cast<std::size_t>(p + 1));
  } else {
    h.rank = 2 + p;
    std::vector<Integer> orders(static_cast<std::size_t>(p - 1), Integer(2));
    orders.emplace_back(2 * (p - 1));
    h.disc = AbelianGroup::from_cyclic_orders(std::move(orders));
  }
  h.signature = {1, h.rank - 1};
  return h;
}

RankSignature predicted_perp(long long n, long long p) {
  const RankSignature amb = ambient(n);
  const InfinityLattice inf = h_infinity(n, p);
  return {amb.rank - inf.rank,
          {amb.signature.positive - inf.signature.positive, amb.signature.negative - inf.signature.negative}};
}

Prediction predict(long long n, long long p) {
  Prediction pr;
  pr.lines = n;
  pr.parallel_pairs = p;
  pr.completed_lines = completed(n);
  pr.counts = counts(n, p);
  pr.ambient = ambient(n);
  pr.infinity = h_infinity(n, p);
  pr.perp = predicted_perp(n, p);
  return pr;
}

CheckReport cross_check(const LatticeInvariants& computed, const Prediction& pred) {
  const long long expected_rank = pred.counts.bounded_chambers + pred.counts.nodes;
  if (static_cast<long long>(computed.ambient_rank) != expected_rank)
    throw std::invalid_argument("computed invariants do not belong to N = " + std::to_string(pred.lines) +
                                ", p = " + std::to_string(pred.parallel_pairs));
  CheckReport rep;
  const Signature sig{static_cast<long long>(computed.signature.positive),
                      static_cast<long long>(computed.signature.negative)};
  rep.rank_signature_match =
      static_cast<long long>(computed.nondeg_rank) == pred.perp.rank && sig == pred.perp.signature;
  rep.subquotient = is_subquotient(computed.disc, pred.infinity.disc);
  rep.disc_isomorphic = computed.disc == pred.infinity.disc;

  std::ostringstream os;
  os << "rank " << computed.nondeg_rank << " vs " << pred.perp.rank << "; signature (" << sig.positive << ", "
     << sig.negative << ") vs (" << pred.perp.signature.positive << ", " << pred.perp.signature.negative
     << "); disc " << computed.disc.to_string() << " vs " << pred.infinity.disc.to_string();
  rep.detail = os.str();
  return rep;
}

}  // namespace dplane
