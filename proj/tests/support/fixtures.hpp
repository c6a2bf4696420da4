#pragma once

#include "dplane/generator.hpp"
#include "dplane/geometry.hpp"

#include <initializer_list>

namespace fixture {

using dplane::Arrangement;
using dplane::Line;
using dplane::Rational;

inline Line line(long long a, long long b, long long c) { return Line(Rational(a), Rational(b), Rational(c)); }

inline Arrangement lines(std::initializer_list<std::array<long long, 3>> coeffs) {
  Arrangement arr;
  for (const auto& c : coeffs) arr.add(line(c[0], c[1], c[2]));
  return arr;
}

// y = 0, x = 0, x + y - 1 = 0
inline Arrangement triangle() { return lines({{0, 1, 0}, {1, 0, 0}, {1, 1, -1}}); }

inline Arrangement generated(int n, int p, std::uint64_t seed) {
  dplane::GenSpec spec;
  spec.lines = n;
  spec.parallel_pairs = p;
  spec.seed = seed;
  return dplane::random_arrangement(spec);
}

inline dplane::Point pt(long long x_num, long long x_den, long long y_num, long long y_den) {
  return {dplane::make_rational(x_num, x_den), dplane::make_rational(y_num, y_den)};
}

}  // namespace fixture
