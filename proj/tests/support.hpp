#pragma once

// Test-only helpers: a small reader for polynomial text in a_i variables and
// seeded random generators.

#include <cctype>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "discstrat/discstrat.hpp"

namespace testing_support {

using namespace discstrat;

/// Reads sums of terms like "-4*a_2^3*a_0" or "a_1^2" (also "u_i", "t").
inline MultiPoly read_poly(const std::string& text, const VarNames& names) {
  MultiPoly out(names);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  skip();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    }
    BigRational coeff(sign);
    Monomial m(names->size());
    bool first = true;
    while (true) {
      skip();
      if (!first) {
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip();
        } else {
          break;
        }
      }
      first = false;
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string num = digits();
        std::string den = "1";
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          den = digits();
        }
        coeff *= make_rational(BigInt(num), BigInt(den));
      } else {
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        const std::string name = text.substr(start, pos - start);
        std::size_t idx = names->size();
        for (std::size_t i = 0; i < names->size(); ++i)
          if ((*names)[i] == name) idx = i;
        if (idx == names->size()) throw std::invalid_argument("unknown variable " + name);
        unsigned e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = static_cast<unsigned>(std::stoul(digits()));
        }
        m[idx] += e;
      }
    }
    out.add_term(m, coeff);
    skip();
  }
  return out;
}

inline BigRational random_rational(std::mt19937_64& rng, int bound = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, max_den);
  return make_rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline MultiPoly random_multipoly(std::mt19937_64& rng, const VarNames& names, unsigned max_degree,
                                  std::size_t terms) {
  MultiPoly p(names);
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(names->size());
    unsigned budget = max_degree;
    for (std::size_t i = 0; i < names->size(); ++i) {
      const unsigned e = std::min(budget, exp(rng) / static_cast<unsigned>(names->size()) + (exp(rng) % 2));
      m[i] = e;
      budget -= e;
    }
    p.add_term(m, random_rational(rng));
  }
  return p;
}

inline UniPoly random_unipoly(std::mt19937_64& rng, int degree) {
  std::vector<BigRational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng));
  if (is_zero(c.back())) c.back() = 1;
  return UniPoly(std::move(c));
}

inline std::vector<BigRational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<BigRational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng));
  return v;
}

/// prod (x - r_i)
inline UniPoly from_roots(const std::vector<BigRational>& roots) {
  UniPoly p(BigRational(1));
  for (const auto& r : roots) p = p * UniPoly({BigRational(-r), BigRational(1)});
  return p;
}

// Texts transcribed from the reference literature.
inline const char* kQuarticDiscriminant =
    "256*a_0^3 - 27*a_1^4 - 128*a_0^2*a_2^2 - 192*a_0^2*a_1*a_3 + 144*a_0*a_1^2*a_2 - 4*a_1^2*a_2^3"
    " + 18*a_1^3*a_2*a_3 - 6*a_0*a_1^2*a_3^2 + 16*a_0*a_2^4 + 144*a_0^2*a_2*a_3^2 - 80*a_0*a_1*a_2^2*a_3"
    " + 18*a_0*a_1*a_2*a_3^3 - 4*a_1^3*a_3^3 - 4*a_0*a_2^3*a_3^2 - 27*a_0^2*a_3^4 + a_1^2*a_2^2*a_3^2";
inline const char* kCubicDiscriminant = "-4*a_2^3*a_0 + a_2^2*a_1^2 + 18*a_2*a_1*a_0 - 4*a_1^3 - 27*a_0^2";
inline const char* kQuarticDa0 =
    "-54*a_0*a_3^4 + 18*a_1*a_2*a_3^3 - 4*a_2^3*a_3^2 + 288*a_0*a_2*a_3^2 - 6*a_1^2*a_3^2 - 80*a_1*a_2^2*a_3"
    " + 16*a_2^4 - 384*a_0*a_1*a_3 - 256*a_0*a_2^2 + 144*a_1^2*a_2 + 768*a_0^2";
inline const char* kQuarticDa1 =
    "18*a_0*a_2*a_3^3 - 12*a_1^2*a_3^3 + 2*a_1*a_2^2*a_3^2 - 12*a_0*a_1*a_3^2 - 80*a_0*a_2^2*a_3"
    " + 54*a_1^2*a_2*a_3 - 8*a_1*a_2^3 - 192*a_0^2*a_3 + 288*a_0*a_1*a_2 - 108*a_1^3";
inline const char* kQuarticDa2 =
    "18*a_0*a_1*a_3^3 - 12*a_0*a_2^2*a_3^2 + 2*a_1^2*a_2*a_3^2 + 144*a_0^2*a_3^2 - 160*a_0*a_1*a_2*a_3"
    " + 64*a_0*a_2^3 + 18*a_1^3*a_3 - 12*a_1^2*a_2^2 - 256*a_0^2*a_2 + 144*a_0*a_1^2";

inline std::vector<BigRational> point(std::initializer_list<long> v) {
  std::vector<BigRational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace testing_support
