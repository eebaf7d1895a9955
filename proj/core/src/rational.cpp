#include "xtalk/rational.hpp"

#include <cstdlib>
#include <stdexcept>

#include "xtalk/errors.hpp"

namespace xtalk {

namespace {

std::int64_t parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("empty number");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("bad number '" + s + "'");
  return v;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rat(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rat(parse_int(text));
  std::string frac = text.substr(dot + 1);
  if (frac.size() > 6) throw ParseError("more than 6 decimal places in '" + text + "'");
  bool neg = !text.empty() && text[0] == '-';
  std::string whole = text.substr(0, dot);
  if (whole.empty() || whole == "-") whole += "0";
  std::int64_t w = parse_int(whole);
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  std::int64_t f = frac.empty() ? 0 : parse_int(frac);
  if (f < 0) throw ParseError("bad number '" + text + "'");
  std::int64_t num = std::llabs(w) * scale + f;
  return Rat(neg ? -num : num, scale);
}

std::string format_rational(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_decimal6(const Rat& r) {
  bool neg = r < Rat(0);
  Rat a = neg ? -r : r;
  // Scale to micro-units and round half to even on the exact remainder.
  std::int64_t num = a.numerator() * 1000000;
  std::int64_t den = a.denominator();
  std::int64_t q = num / den;
  std::int64_t rem = num % den;
  if (2 * rem > den || (2 * rem == den && (q % 2) == 1)) ++q;
  std::int64_t whole = q / 1000000;
  std::int64_t frac = q % 1000000;
  std::string fs = std::to_string(frac);
  fs.insert(fs.begin(), 6 - fs.size(), '0');
  return (neg && q != 0 ? "-" : "") + std::to_string(whole) + "." + fs;
}

}  // namespace xtalk
