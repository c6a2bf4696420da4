#pragma once

#include "dplane/lattice.hpp"

#include <string>

namespace dplane {

struct Signature {
  long long positive = 0;
  long long negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Counts {
  long long bounded_chambers = 0;
  long long nodes = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct RankSignature {
  long long rank = 0;
  Signature signature;
  friend bool operator==(const RankSignature&, const RankSignature&) = default;
};

struct InfinityLattice {
  long long rank = 0;
  Signature signature;
  AbelianGroup disc;
};

/// Closed-form data for N lines with p parallel pairs, every parallel class
/// of size at most two.
struct Prediction {
  long long lines = 0;
  long long parallel_pairs = 0;
  long long completed_lines = 0;  // N + 1 for odd N, N for even N
  Counts counts;
  RankSignature ambient;          // unimodular second homology of the compactification
  InfinityLattice infinity;       // sublattice spanned by curves at infinity
  RankSignature perp;             // its orthogonal complement
};

/// Requires N >= 3 and 0 <= 2p <= N; throws std::out_of_range otherwise.
Counts counts(long long n, long long p);
RankSignature ambient(long long n);
InfinityLattice h_infinity(long long n, long long p);
RankSignature predicted_perp(long long n, long long p);
Prediction predict(long long n, long long p);

struct CheckReport {
  bool rank_signature_match = false;  // quotient rank and signature equal the prediction
  bool subquotient = false;           // disc(quotient) is a sub-quotient of disc(H_inf)
  bool disc_isomorphic = false;       // observation only
  std::string detail;

  bool passed() const { return rank_signature_match && subquotient; }
};

/// Compares invariants computed from the standard Gram matrix against the
/// closed forms. Throws std::invalid_argument when the computed ambient rank
/// is not the predicted |bounded chambers| + |nodes|, i.e. (N, p) mismatch.
CheckReport cross_check(const LatticeInvariants& computed, const Prediction& pred);

}  // namespace dplane
