#include "dplane/generator.hpp"

#include <random>
#include <set>
#include <string>

namespace dplane {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  long long between(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(rng_() % span);
  }

  Rational rational(long long bound) {
    return make_rational(Integer(between(-bound, bound)), Integer(between(1, bound)));
  }

 private:
  std::mt19937_64 rng_;
};

// Normal direction (a, b) of a random slope class; one class in eight is vertical.
std::pair<Rational, Rational> draw_direction(Draw& d, long long bound) {
  if (d.between(0, 7) == 0) return {Rational(1), Rational(0)};
  return {d.rational(bound), Rational(-1)};
}

}  // namespace

Arrangement random_arrangement(const GenSpec& spec) {
  if (spec.lines < 3 || spec.parallel_pairs < 0 || 2 * spec.parallel_pairs > spec.lines)
    throw std::invalid_argument("need N >= 3 and 0 <= 2p <= N");
  if (spec.coefficient_bound < 1) throw std::invalid_argument("coefficient bound must be positive");

  Draw d(spec.seed);
  const long long bound = spec.coefficient_bound;
  int budget = spec.retry_budget;
  auto spend = [&] {
    if (--budget < 0)
      throw GenerationFailed("retry budget exhausted for N = " + std::to_string(spec.lines) +
                             ", p = " + std::to_string(spec.parallel_pairs) +
                             ", bound = " + std::to_string(spec.coefficient_bound));
  };

  // Slope classes: p doubled, then N - 2p single.
  const int n_classes = spec.lines - spec.parallel_pairs;
  std::vector<std::pair<Rational, Rational>> directions;
  std::set<std::string> seen;
  while (static_cast<int>(directions.size()) < n_classes) {
    spend();
    auto dir = draw_direction(d, bound);
    const Line probe(dir.first, dir.second, 0);
    if (seen.insert(to_string(probe.a()) + "," + to_string(probe.b())).second) directions.push_back(dir);
  }

  Arrangement arr;
  std::vector<Point> nodes;
  auto add_line = [&](const std::pair<Rational, Rational>& dir) {
    for (;;) {
      spend();
      Line cand(dir.first, dir.second, d.rational(bound * bound));
      bool ok = true;
      for (const Line& l : arr.lines())
        if (l.same_locus(cand)) ok = false;
      for (const Point& p : nodes)
        if (ok && side(cand, p) == 0) ok = false;
      if (!ok) continue;
      for (const Line& l : arr.lines())
        if (auto p = intersect(l, cand)) nodes.push_back(*p);
      arr.add(std::move(cand));
      return;
    }
  };
  for (int k = 0; k < n_classes; ++k) {
    add_line(directions[std::size_t(k)]);
    if (k < spec.parallel_pairs) add_line(directions[std::size_t(k)]);
  }

  const ValidationReport rep = validate(arr);
  if (!rep.nodal || rep.parallel_pairs != spec.parallel_pairs || !rep.parallel_condition)
    throw GenerationFailed("generated arrangement failed validation");
  return arr;
}

}  // namespace dplane
