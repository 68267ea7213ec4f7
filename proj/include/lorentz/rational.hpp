#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "lorentz/error.hpp"

namespace lorentz {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and plain decimals such as "-0.125".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational literal");
  auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      Rational r(s, 10);
      r.canonicalize();
      if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
      return r;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") {
      throw InputError("malformed decimal '" + s + "'");
    }
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational literal '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double r) { return r; }

inline int sign(const Rational& r) { return sgn(r); }

inline Rational abs_value(const Rational& r) { return abs(r); }

// Least common multiple of all denominators.
inline Integer common_denominator(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return l;
}

// Positive multiple of v with coprime integer entries; the zero vector maps
// to itself.
inline std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer l = common_denominator(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back(z);
  }
  if (g > 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

}  // namespace lorentz
