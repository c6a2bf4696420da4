#pragma once

#include "dplane/geometry.hpp"

#include <cstdint>
#include <stdexcept>

namespace dplane {

struct GenSpec {
  int lines = 3;
  int parallel_pairs = 0;
  std::uint64_t seed = 1;
  int coefficient_bound = 64;  // bound on numerators and denominators
  int retry_budget = 10000;
};

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random nodal arrangement with exactly `parallel_pairs` parallel pairs and
/// every parallel class of size at most two. Draws come from std::mt19937_64
/// seeded with `seed` and reduced modulo the range (no std distributions), so
/// a fixed spec yields the same arrangement on every platform. Every result
/// has passed validate().
Arrangement random_arrangement(const GenSpec& spec);

}  // namespace dplane
