#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <string>

namespace dplane {

// Expression templates are disabled so the types behave as plain values
// inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

inline int sign_of(const Integer& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }
inline int sign_of(long long v) { return (v > 0) - (v < 0); }

inline bool fits_int64(const Integer& v) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

inline std::string to_string(const Integer& v) { return v.str(); }
std::string to_string(const Rational& v);

// Parses "p/q" or "p" with an optional leading sign; throws std::invalid_argument.
Rational parse_rational(const std::string& token);

double to_double(const Rational& v);

}  // namespace dplane
