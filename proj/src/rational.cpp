#include "wallmap/rational.hpp"

#include <cctype>

namespace wallmap {

Rational sqrt_upper_bound(const Rational& v, unsigned long refine) {
  if (sign_of(v) < 0) throw ValidationError("sqrt of negative rational");
  if (sign_of(v) == 0) return Rational(0);
  const Integer scale = Integer(refine) * denominator(v);
  // u = ceil(sqrt(num*den*refine^2)) / (den*refine) satisfies u^2 >= v.
  const Integer scaled = numerator(v) * denominator(v) * Integer(refine) *
                         Integer(refine);
  Rational u(ceil_sqrt(scaled), scale);
  u.canonicalize();
  return u;
}

Rational sqrt_lower_bound(const Rational& v, unsigned long refine) {
  if (sign_of(v) < 0) throw ValidationError("sqrt of negative rational");
  if (sign_of(v) == 0) return Rational(0);
  const Integer scale = Integer(refine) * denominator(v);
  const Integer scaled = numerator(v) * denominator(v) * Integer(refine) *
                         Integer(refine);
  Rational l(floor_sqrt(scaled), scale);
  l.canonicalize();
  return l;
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  auto eat_int = [&]() -> bool {
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos > start;
  };
  if (!eat_int()) return std::nullopt;
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    if (!eat_int() || pos != text.size()) return std::nullopt;
  }
  Rational value;
  if (mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
  if (value.get_den() == 0) return std::nullopt;
  value.canonicalize();
  return value;
}

std::string fraction_string(const Rational& value) {
  if (is_integral(value)) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string decimal_string(const Rational& value, int digits) {
  const bool negative = sign_of(value) < 0;
  Rational abs_value = negative ? Rational(-value) : value;
  Integer whole = floor_q(abs_value);
  Rational rest = abs_value - Rational(whole);
  std::string frac;
  frac.reserve(static_cast<std::size_t>(digits));
  for (int i = 0; i < digits && sign_of(rest) != 0; ++i) {
    rest *= 10;
    Integer digit = floor_q(rest);
    frac += static_cast<char>('0' + digit.get_si());
    rest -= Rational(digit);
  }
  // Round half up on the first dropped digit.
  if (sign_of(rest) != 0) {
    rest *= 10;
    if (floor_q(rest) >= 5) {
      int i = static_cast<int>(frac.size()) - 1;
      for (; i >= 0; --i) {
        if (frac[i] != '9') {
          ++frac[i];
          break;
        }
        frac[i] = '0';
      }
      if (i < 0) whole += 1;
    }
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace wallmap
