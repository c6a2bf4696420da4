#include "dplane/generator.hpp"
#include "dplane/io.hpp"

#include <doctest.h>

using namespace dplane;

namespace {

Arrangement gen(int n, int p, std::uint64_t seed, int bound = 64) {
  GenSpec spec;
  spec.lines = n;
  spec.parallel_pairs = p;
  spec.seed = seed;
  spec.coefficient_bound = bound;
  return random_arrangement(spec);
}

}  // namespace

TEST_CASE("generator examples") {
  const auto tri = validate(gen(3, 0, 1));
  CHECK(tri.lines == 3);
  CHECK(tri.nodal);
  CHECK(tri.parallel_pairs == 0);

  const auto six = validate(gen(6, 3, 7));
  CHECK(six.nodal);
  CHECK(six.parallel_pairs == 3);
  CHECK(six.largest_parallel_class == 2);
  CHECK(six.parallel_condition);

  const auto big = validate(gen(24, 10, 42));
  CHECK(big.lines == 24);
  CHECK(big.nodal);
  CHECK(big.parallel_pairs == 10);
  CHECK(big.parallel_condition);
}

TEST_CASE("generator is deterministic per seed") {
  CHECK(gen(8, 3, 5) == gen(8, 3, 5));
  CHECK_FALSE(gen(8, 3, 5) == gen(8, 3, 6));
}

TEST_CASE("generated arrangements are lattice ready and round-trip") {
  for (int n = 3; n <= 12; ++n)
    for (int p = 0; 2 * p <= n; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      const auto arr = gen(n, p, static_cast<std::uint64_t>(31 * n + p));
      const auto v = validate(arr);
      CHECK(v.lattice_ready());
      CHECK(v.parallel_pairs == p);
      CHECK(parse_arrangement(serialize_arrangement(arr)) == arr);
    }
}

TEST_CASE("generator errors") {
  CHECK_THROWS_AS(gen(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen(5, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen(5, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen(5, 0, 1, 0), std::invalid_argument);
  GenSpec tight;
  tight.lines = 24;
  tight.parallel_pairs = 0;
  tight.coefficient_bound = 1;
  tight.retry_budget = 50;
  CHECK_THROWS_AS(random_arrangement(tight), GenerationFailed);
}
