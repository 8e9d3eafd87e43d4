#include "sasaki/rational.hpp"

#include <cctype>

namespace sasaki {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string num_digits = num;
  if (!num_digits.empty() && num_digits[0] == '-') num_digits.erase(0, 1);
  if (!all_digits(num_digits) || !all_digits(den))
    throw ParseError("malformed rational: \"" + text + "\"");
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator: \"" + text + "\"");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_str();
}

}  // namespace sasaki
