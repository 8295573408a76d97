#include "sic/rational.hpp"

#include "sic/errors.hpp"

#include <cctype>

namespace sic {

namespace mp = boost::multiprecision;

Integer floor(const Rational& q) {
  Integer num = mp::numerator(q);
  Integer den = mp::denominator(q);
  Integer quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

Integer ceil(const Rational& q) {
  Integer f = floor(q);
  return f * mp::denominator(q) == mp::numerator(q) ? f : f + 1;
}

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational", 0);
  auto slash = text.find('/');
  auto dot = text.find('.');
  auto check_digits = [&](std::size_t from, std::size_t to) {
    std::size_t start = from;
    if (start < to && (text[start] == '-' || text[start] == '+')) ++start;
    if (start == to) throw ParseError("missing digits in '" + text + "'", start);
    for (std::size_t i = start; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("unexpected character in '" + text + "'", i);
      }
    }
  };
  if (slash != std::string::npos) {
    check_digits(0, slash);
    check_digits(slash + 1, text.size());
    Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    return Rational(Integer(text.substr(0, slash)), den);
  }
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    check_digits(0, whole.size());
    if (!frac.empty()) {
      for (std::size_t i = 0; i < frac.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(frac[i]))) {
          throw ParseError("unexpected character in '" + text + "'", dot + 1 + i);
        }
      }
    }
    Integer scale = mp::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer w(whole);
    Integer f = frac.empty() ? Integer(0) : Integer(frac);
    Rational magnitude = Rational(mp::abs(w)) + Rational(f, scale);
    return negative ? Rational(-magnitude) : magnitude;
  }
  check_digits(0, text.size());
  return Rational(Integer(text));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace sic
