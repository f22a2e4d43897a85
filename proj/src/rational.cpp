#include "contracts/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace contracts {

double to_double(const Rat& x) { return x.convert_to<double>(); }

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("rat_from_double: non-finite value");
  }
  return Rat(x);  // cpp_rational converts the binary expansion exactly
}

BigInt rat_floor(const Rat& x) {
  BigInt num = numerator(x), den = denominator(x);  // den > 0, canonical
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt rat_ceil(const Rat& x) { return -rat_floor(-x); }

namespace {

// Strips all factors d from v, returns their count.
int strip_factor(BigInt& v, unsigned d) {
  int count = 0;
  while (v % d == 0) {
    v /= d;
    ++count;
  }
  return count;
}

}  // namespace

std::string format_number(const Rat& x) {
  BigInt num = numerator(x), den = denominator(x);
  if (den == 1) return num.str();
  BigInt rest = den;
  int twos = strip_factor(rest, 2);
  int fives = strip_factor(rest, 5);
  int digits = twos > fives ? twos : fives;
  if (rest == 1 && digits <= 18) {
    // Finite decimal: scale to an integer with `digits` fractional digits.
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * scale / den;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string body = scaled.str();
    if ((int)body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
    return neg ? "-" + body : body;
  }
  return num.str() + "/" + den.str();
}

std::string format_fraction(const Rat& x) {
  BigInt num = numerator(x), den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Explicit base-10 conversion; cpp_int's string constructor would read a
// leading zero as an octal prefix.
BigInt digits_to_int(std::string_view s) {
  BigInt v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

Rat parse_number(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  auto bad = [&] { throw std::invalid_argument("bad number: '" + std::string(text) + "'"); };
  if (s.empty()) bad();
  Rat value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad();
    BigInt den = digits_to_int(q);
    if (den == 0) bad();
    value = Rat(digits_to_int(p), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp) || fp.size() > 64) bad();
    BigInt scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    value = Rat(digits_to_int(ip) * scale + digits_to_int(fp), scale);
  } else {
    if (!all_digits(s)) bad();
    value = Rat(digits_to_int(s));
  }
  return neg ? Rat(-value) : value;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace contracts
