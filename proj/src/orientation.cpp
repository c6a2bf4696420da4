#include "dplane/orientation.hpp"

#include <algorithm>
#include <stdexcept>

namespace dplane {

OrientationAssignment::OrientationAssignment(std::vector<int> signs) : eps_(std::move(signs)) {
  for (int s : eps_)
    if (s != 1 && s != -1) throw std::invalid_argument("orientation signs must be +1 or -1");
}

OrientationAssignment OrientationAssignment::from_mask(std::size_t bounded_count, std::uint64_t mask) {
  if (bounded_count > 64) throw std::invalid_argument("mask covers at most 64 chambers");
  std::vector<int> s(bounded_count, 1);
  for (std::size_t k = 0; k < bounded_count; ++k)
    if ((mask >> k) & 1U) s[k] = -1;
  return OrientationAssignment(std::move(s));
}

OrientationAssignment OrientationAssignment::random(std::size_t bounded_count, std::mt19937_64& rng) {
  std::vector<int> s(bounded_count);
  for (auto& v : s) v = (rng() & 1U) ? -1 : 1;
  return OrientationAssignment(std::move(s));
}

bool OrientationAssignment::is_standard() const {
  return std::all_of(eps_.begin(), eps_.end(), [](int s) { return s == 1; });
}

int chamber_sign(const Arrangement& arr, const Chamber& c) {
  if (!c.bounded) throw std::invalid_argument("chamber sign is only used for bounded chambers");
  if (c.sign_vector.size() != arr.size()) throw std::invalid_argument("sign vector does not match arrangement");
  int s = 1;
  for (int e : c.sign_vector) {
    if (e == 0) throw std::logic_error("interior point lies on a line");
    s *= e;
  }
  return s;
}

bool coherent(const PairClass& pc, int eps1, int eps2) {
  if (!std::holds_alternative<MeetAtPoint>(pc)) throw std::invalid_argument("coherence undefined");
  // The standard pair is coherent; reversing one orientation swaps its
  // capping hemisphere at the common vertex.
  return eps1 == eps2;
}

}  // namespace dplane
