// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "dplane/generator.hpp"
#include "dplane/gram.hpp"
#include "dplane/infinity_model.hpp"
#include "dplane/lattice.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace dplane;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Instance {
  int criterion;
  long long n;
  long long p;
  LatticeInvariants inv;
};

std::vector<Instance> g_instances;

struct Run {
  ChamberComplex cc;
  GramMatrix gram;
  LatticeInvariants inv;
  double seconds;
};

Run run_pipeline(const Arrangement& arr, int criterion, long long p) {
  const auto t0 = Clock::now();
  Run r;
  r.cc = ChamberComplex::build(arr);
  r.gram = gram_matrix(r.cc, OrientationAssignment::standard(r.cc.bounded_count()));
  r.inv = lattice_invariants(r.gram.entries);
  r.seconds = seconds_since(t0);
  g_instances.push_back({criterion, static_cast<long long>(arr.size()), p, r.inv});
  return r;
}

Arrangement generate(int n, int p, std::uint64_t seed) {
  GenSpec spec;
  spec.lines = n;
  spec.parallel_pairs = p;
  spec.seed = seed;
  return random_arrangement(spec);
}

std::string sig(const Inertia& s) { return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")"; }

std::string profile_text(const std::map<std::size_t, std::size_t>& profile) {
  std::string s;
  for (const auto& [n, c] : profile) s += (s.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(c);
  return "{" + s + "}";
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

using Criterion = std::function<void(Verdict&)>;

void c1_triangle(Verdict& v) {
  const auto t0 = Clock::now();
  const Run r = run_pipeline(fixture::triangle(), 1, 0);
  const IntMatrix expected =
      oracle::from_rows({{-2, -1, -1, -1}, {-1, -2, 0, 0}, {-1, 0, -2, 0}, {-1, 0, 0, -2}});
  const auto perp = predicted_perp(3, 0);
  const auto hinf = h_infinity(3, 0);
  const double elapsed = seconds_since(t0);
  v.require(r.gram.entries == expected, "Gram matrix differs from the expected 4x4");
  v.require(oracle::leibniz_det(r.gram.entries) == 4, "cofactor determinant is not 4");
  v.require(r.inv.ambient_rank == 4 && r.inv.kernel_rank == 0, "rank/kernel");
  v.require(r.inv.signature == Inertia{0, 4}, "signature " + sig(r.inv.signature));
  v.require(r.inv.disc == AbelianGroup::elementary(2, 2), "disc " + r.inv.disc.to_string());
  v.require(r.inv.det_abs == 4, "det " + r.inv.det_abs.str());
  v.require(perp == RankSignature{4, {0, 4}} && static_cast<long long>(r.inv.nondeg_rank) == perp.rank &&
                static_cast<long long>(r.inv.signature.positive) == perp.signature.positive &&
                static_cast<long long>(r.inv.signature.negative) == perp.signature.negative,
            "predicted_perp(3,0) mismatch");
  v.require(hinf.disc == r.inv.disc, "disc(H_inf) = " + hinf.disc.to_string());
  v.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  v.detail << "rank 4, kernel 0, signature " << sig(r.inv.signature) << ", disc " << r.inv.disc.to_string()
           << ", det " << r.inv.det_abs << ", " << std::fixed << std::setprecision(3) << elapsed << " s";
}

const std::set<std::array<std::size_t, 4>> kSixLineTable = {
    {4, 4, 2, 0}, {4, 5, 1, 0}, {4, 5, 0, 1}, {4, 6, 0, 0}, {5, 3, 2, 0}, {5, 4, 1, 0},
    {5, 4, 0, 1}, {6, 2, 2, 0}, {6, 3, 1, 0}, {6, 3, 0, 1}, {7, 0, 3, 0}};

bool in_table(const std::map<std::size_t, std::size_t>& profile) {
  std::array<std::size_t, 4> row{};
  for (const auto& [n, c] : profile) {
    if (n < 3 || n > 6) return false;
    row[n - 3] = c;
  }
  return kSixLineTable.count(row) == 1;
}

void c2_six_generic(Verdict& v) {
  std::set<std::map<std::size_t, std::size_t>> profiles;
  int instances = 0;
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 400 && (instances < 20 || profiles.size() < 3); ++seed) {
    const Run r = run_pipeline(generate(6, 0, seed), 2, 0);
    ++instances;
    worst = std::max(worst, r.seconds);
    const auto prof = r.cc.ngon_profile();
    profiles.insert(prof);
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    v.require(r.inv.ambient_rank == 25, tag + "rank " + std::to_string(r.inv.ambient_rank));
    v.require(r.inv.kernel_rank == 4, tag + "kernel " + std::to_string(r.inv.kernel_rank));
    v.require(r.inv.nondeg_rank == 21, tag + "quotient " + std::to_string(r.inv.nondeg_rank));
    v.require(r.inv.signature == Inertia{2, 19}, tag + "signature " + sig(r.inv.signature));
    v.require(r.inv.disc == AbelianGroup::from_cyclic_orders({2}), tag + "disc " + r.inv.disc.to_string());
    v.require(in_table(prof), tag + "profile " + profile_text(prof) + " not in the table");
    v.require(r.seconds < 5.0, tag + "runtime " + std::to_string(r.seconds));
  }
  v.require(instances >= 20, "fewer than 20 instances");
  v.require(profiles.size() >= 3, "fewer than 3 distinct profiles");
  v.detail << instances << " instances, " << profiles.size() << " profiles:";
  for (const auto& p : profiles) v.detail << ' ' << profile_text(p);
  v.detail << "; rank 25, kernel 4, quotient 21, signature (2,19), disc Z/2; max " << std::fixed
           << std::setprecision(3) << worst << " s";
}

void c3_six_pairs(Verdict& v) {
  std::set<std::map<std::size_t, std::size_t>> profiles;
  const AbelianGroup expected = AbelianGroup::from_cyclic_orders({2, 2, 4});
  double worst = 0;
  const int instances = 20;
  for (std::uint64_t seed = 1; seed <= instances; ++seed) {
    const Run r = run_pipeline(generate(6, 3, seed), 3, 3);
    worst = std::max(worst, r.seconds);
    profiles.insert(r.cc.ngon_profile());
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    v.require(r.inv.nondeg_rank == 17, tag + "quotient " + std::to_string(r.inv.nondeg_rank));
    v.require(r.inv.signature == Inertia{2, 15}, tag + "signature " + sig(r.inv.signature));
    v.require(r.inv.disc == expected, tag + "disc " + r.inv.disc.to_string());
    v.require(r.seconds < 5.0, tag + "runtime " + std::to_string(r.seconds));
  }
  v.detail << instances << " instances across " << profiles.size()
           << " profiles; quotient 17, signature (2,15), disc " << expected.to_string() << "; max " << std::fixed
           << std::setprecision(3) << worst << " s";
}

void c4_large(Verdict& v) {
  const Run r = run_pipeline(generate(24, 10, 42), 4, 10);
  v.require(r.inv.ambient_rank == 509, "rank " + std::to_string(r.inv.ambient_rank));
  v.require(r.inv.nondeg_rank == 497, "quotient " + std::to_string(r.inv.nondeg_rank));
  v.require(r.inv.signature == Inertia{110, 387}, "signature " + sig(r.inv.signature));
  v.require(r.inv.disc == AbelianGroup::elementary(2, 11), "disc " + r.inv.disc.to_string());
  v.require(r.seconds < 600.0, "runtime " + std::to_string(r.seconds));
  v.detail << "|Ch_b| " << r.cc.bounded_count() << ", nodes " << r.cc.vertices().size() << ", rank "
           << r.inv.ambient_rank << ", kernel " << r.inv.kernel_rank << ", quotient " << r.inv.nondeg_rank
           << ", signature " << sig(r.inv.signature) << ", disc " << r.inv.disc.to_string() << "; " << std::fixed
           << std::setprecision(2) << r.seconds << " s";
}

void c5_odd(Verdict& v) {
  int trials = 0;
  for (int n : {3, 5, 7, 9})
    for (int t = 0; t < 10; ++t) {
      const int p = t % (n / 2 + 1);
      const auto seed = static_cast<std::uint64_t>(1000 * n + t);
      const Run r = run_pipeline(generate(n, p, seed), 5, p);
      ++trials;
      v.require(r.inv.kernel_rank == 0, "N=" + std::to_string(n) + " p=" + std::to_string(p) + " seed " +
                                            std::to_string(seed) + ": kernel " + std::to_string(r.inv.kernel_rank));
    }
  v.detail << trials << " trials over N in {3,5,7,9}, p cycling through 0..floor(N/2); kernel rank 0 throughout";
}

void c6_oracle(Verdict& v) {
  std::size_t exhaustive = 0;
  std::vector<Arrangement> small = {fixture::triangle(), generate(4, 0, 1), generate(5, 0, 2), generate(5, 2, 3),
                                    generate(6, 3, 4), generate(6, 0, 5)};
  for (const auto& arr : small) {
    const auto cc = ChamberComplex::build(arr);
    const auto nb = cc.bounded_count();
    if (nb > 10) continue;
    const auto standard = gram_matrix(cc, OrientationAssignment::standard(nb));
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nb); ++mask) {
      const auto oa = OrientationAssignment::from_mask(nb, mask);
      v.require(gram_matrix(cc, oa).entries == gram_via_flip_oracle(cc, standard, oa).entries,
                "N=" + std::to_string(arr.size()) + " mask " + std::to_string(mask));
      ++exhaustive;
    }
  }
  const auto cc = ChamberComplex::build(generate(9, 2, 6));
  const auto nb = cc.bounded_count();
  const auto standard = gram_matrix(cc, OrientationAssignment::standard(nb));
  std::mt19937_64 rng(2024);
  const int random_trials = 1000;
  for (int t = 0; t < random_trials; ++t) {
    const auto oa = OrientationAssignment::random(nb, rng);
    v.require(gram_matrix(cc, oa).entries == gram_via_flip_oracle(cc, standard, oa).entries,
              "random trial " + std::to_string(t));
  }
  v.detail << exhaustive << " exhaustive assignments over " << small.size() << " complexes with |Ch_b| <= 10; "
           << random_trials << " random assignments with |Ch_b| = " << nb;
}

void c7_counts(Verdict& v) {
  int checked = 0;
  for (int n = 3; n <= 16; ++n)
    for (int p = 0; 2 * p <= n; ++p)
      for (std::uint64_t s = 0; s < 3; ++s) {
        const auto cc = ChamberComplex::build(generate(n, p, 7919 * static_cast<std::uint64_t>(n) + 31 * p + s));
        const auto expect = counts(n, p);
        v.require(static_cast<long long>(cc.bounded_count()) == expect.bounded_chambers &&
                      static_cast<long long>(cc.vertices().size()) == expect.nodes,
                  "N=" + std::to_string(n) + " p=" + std::to_string(p));
        ++checked;
      }
  for (const auto& inst : g_instances) {
    const auto expect = counts(inst.n, inst.p);
    v.require(static_cast<long long>(inst.inv.ambient_rank) == expect.bounded_chambers + expect.nodes,
              "criterion " + std::to_string(inst.criterion) + " instance N=" + std::to_string(inst.n));
    ++checked;
  }
  v.detail << checked << " arrangements (sweep N=3..16, every p, 3 seeds each, plus every instance above)";
}

void c8_algebra(Verdict& v) {
  std::mt19937_64 rng(8);
  const auto cc = ChamberComplex::build(generate(6, 0, 11));
  const IntMatrix six = gram_matrix(cc, OrientationAssignment::standard(cc.bounded_count())).entries;
  const IntMatrix tri = oracle::from_rows({{-2, -1, -1, -1}, {-1, -2, 0, 0}, {-1, 0, -2, 0}, {-1, 0, 0, -2}});
  int transforms = 0;
  for (const IntMatrix* g : {&tri, &six}) {
    const auto base = lattice_invariants(*g);
    for (int t = 0; t < 100; ++t) {
      const IntMatrix u = oracle::random_unimodular(g->rows(), rng, 40);
      if (abs(determinant<Integer>(u)) != 1) {
        v.require(false, "generated transform is not unimodular");
        continue;
      }
      const auto moved = lattice_invariants((u * *g * u.transpose()).eval());
      v.require(moved.signature == base.signature, "signature changed under congruence");
      v.require(moved.disc == base.disc, "disc changed under congruence");
      v.require(moved.kernel_rank == base.kernel_rank, "kernel rank changed under congruence");
      g_instances.push_back({8, 0, 0, moved});
      ++transforms;
    }
  }
  for (const auto& inst : g_instances) {
    v.require(inst.inv.disc.order() == inst.inv.det_abs, "|disc| != |det|");
    const auto& f = inst.inv.invariant_factors;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) v.require(f[i + 1] % f[i] == 0, "Smith diagonal not a chain");
    const auto& d = inst.inv.disc.invariant_factors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) v.require(d[i + 1] % d[i] == 0, "disc factors not a chain");
  }
  v.detail << transforms << " unimodular congruences (triangle and a 25x25 six-line Gram); " << g_instances.size()
           << " quotients audited for |disc| = |det| and divisibility chains";
}

void c9_subquotient(Verdict& v) {
  int valid = 0, iso = 0, iso_expected = 0, iso_held = 0;
  for (const auto& inst : g_instances) {
    if (inst.n < 3) continue;
    const auto hinf = h_infinity(inst.n, inst.p);
    ++valid;
    const bool sq = is_subquotient(inst.inv.disc, hinf.disc);
    const bool same = inst.inv.disc == hinf.disc;
    v.require(sq, "N=" + std::to_string(inst.n) + " p=" + std::to_string(inst.p) + ": " + inst.inv.disc.to_string() +
                      " is not a sub-quotient of " + hinf.disc.to_string());
    iso += same;
    if (inst.criterion <= 4) {
      ++iso_expected;
      iso_held += same;
      v.require(same, "criterion " + std::to_string(inst.criterion) + " instance: disc " + inst.inv.disc.to_string() +
                          " vs disc(H_inf) " + hinf.disc.to_string());
    }
  }
  v.detail << valid << " instances satisfy the sub-quotient law; isomorphic to disc(H_inf) on " << iso << "/" << valid
           << " (criteria 1-4 instances: " << iso_held << "/" << iso_expected << ")";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"1 triangle fixture", c1_triangle},
      {"2 six lines, no parallels", c2_six_generic},
      {"3 six lines, three parallel pairs", c3_six_pairs},
      {"4 twenty-four lines, ten parallel pairs", c4_large},
      {"5 odd N non-degeneracy", c5_odd},
      {"6 orientation reversal oracle", c6_oracle},
      {"7 count identities", c7_counts},
      {"8 lattice algebra properties", c8_algebra},
      {"9 sub-quotient law", c9_subquotient},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    const auto t0 = Clock::now();
    try {
      fn(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << v.detail.str() << " [" << std::fixed
              << std::setprecision(2) << elapsed << " s]\n";
    for (const auto& f : v.failures) std::cout << "      " << f << "\n";
    std::cout.flush();
    failed += !v.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : std::string("all criteria passed\n"));
  return failed ? 1 : 0;
}
