#pragma once

// Exact rational scalars. GMP's mpq_class keeps every value in lowest terms
// with a positive denominator, which is the invariant the rest of the
// library relies on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace discstrat {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }

inline BigRational exact_div(const BigRational& a, const BigRational& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  return BigRational(a / b);
}

/// Builds num/den in canonical form.
inline BigRational make_rational(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational result(1);
  BigRational b(base);
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const BigRational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional leading sign on p).
inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw std::domain_error("zero denominator in '" + s + "'");
  return make_rational(BigInt(num), d);
}

/// Decimal rendering with `digits` significant digits (exactness checks
/// must happen before this).
inline std::string to_decimal(const BigRational& q, int digits = 12) {
  if (is_zero(q)) return "0";
  mpf_class f(q, static_cast<mp_bitcnt_t>(digits * 4 + 64));
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  std::string out;
  if (exp > 0 && exp <= digits + 6) {
    auto e = static_cast<std::size_t>(exp);
    if (mant.size() <= e) {
      out = mant + std::string(e - mant.size(), '0');
    } else {
      out = mant.substr(0, e) + "." + mant.substr(e);
    }
  } else if (exp <= 0 && exp > -6) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exp - 1);
  }
  return neg ? "-" + out : out;
}

}  // namespace discstrat
