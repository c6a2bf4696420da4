#pragma once

#include "dplane/chamber_complex.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace dplane {

/// One sign per bounded chamber, relative to the standard orientation:
/// +1 keeps the standard orientation, -1 reverses it.
class OrientationAssignment {
 public:
  static OrientationAssignment standard(std::size_t bounded_count) {
    return OrientationAssignment(std::vector<int>(bounded_count, 1));
  }
  /// Bit k of `mask` set means chamber k is reversed.
  static OrientationAssignment from_mask(std::size_t bounded_count, std::uint64_t mask);
  static OrientationAssignment random(std::size_t bounded_count, std::mt19937_64& rng);

  explicit OrientationAssignment(std::vector<int> signs);

  std::size_t size() const { return eps_.size(); }
  int operator[](std::size_t chamber) const { return eps_.at(chamber); }
  const std::vector<int>& signs() const { return eps_; }
  bool is_standard() const;

  friend bool operator==(const OrientationAssignment&, const OrientationAssignment&) = default;

 private:
  std::vector<int> eps_;
};

/// Sign of the defining polynomial (product of the normalized linear forms)
/// on the open chamber.
int chamber_sign(const Arrangement& arr, const Chamber& c);

/// Coherence of two orientations of chambers that meet in a single vertex.
/// Throws std::invalid_argument("coherence undefined") for other pair classes.
bool coherent(const PairClass& pc, int eps1, int eps2);

}  // namespace dplane
