#include "dplane/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace dplane {

std::string to_string(const Rational& v) {
  Integer num = numerator(v);
  Integer den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(const std::string& s) {
  // GMP rejects a leading '+'.
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& token) {
  auto slash = token.find('/');
  std::string num = token.substr(0, slash);
  if (!is_integer_literal(num)) throw std::invalid_argument("malformed rational '" + token + "'");
  if (slash == std::string::npos) return Rational(parse_integer(num));
  std::string den = token.substr(slash + 1);
  if (den.empty() || !std::isdigit(static_cast<unsigned char>(den[0])) || !is_integer_literal(den))
    throw std::invalid_argument("malformed rational '" + token + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + token + "'");
  return make_rational(parse_integer(num), d);
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace dplane
