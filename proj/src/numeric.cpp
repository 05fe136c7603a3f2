#include "dmp/numeric.hpp"

#include <stdexcept>

namespace dmp {

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational value;
  if (value.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  value.canonicalize();
  return value;
}

}  // namespace dmp
