#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcpoly {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for violated preconditions and degenerate inputs.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" with q > 0.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t k = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) k = 1;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw Error("zero denominator in '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Rising factorial (x)_k = x (x+1) ... (x+k-1).
inline Rational rising(const Rational& x, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= x + i;
  return out;
}

inline Rational power(const Rational& x, int k) {
  Rational out = 1;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= x;
  if (k < 0) {
    if (x == 0) throw Error("zero raised to a negative power");
    out = 1 / out;
  }
  return out;
}

inline Integer factorial(int k) {
  Integer out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

inline Rational sign_power(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace bcpoly
