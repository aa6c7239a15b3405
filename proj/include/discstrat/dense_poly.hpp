#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "discstrat/rational.hpp"

namespace discstrat {

namespace detail {
template <class T>
bool coeff_is_zero(const T& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i.
/// The leading stored coefficient is nonzero; zero is the empty vector.
template <class T>
class DensePoly {
 public:
  DensePoly() = default;
  DensePoly(const T& c) {  // NOLINT: constants convert implicitly
    if (!detail::coeff_is_zero(c)) coeffs_.push_back(c);
  }
  DensePoly(int c) : DensePoly(T(c)) {}  // NOLINT
  explicit DensePoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  /// c * x^k
  static DensePoly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1);
    v[k] = c;
    return DensePoly(std::move(v));
  }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(); }
  const T& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == T(1); }

  /// Index of the lowest nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!detail::coeff_is_zero(coeffs_[i])) return i;
    return std::nullopt;
  }

  DensePoly& operator+=(const DensePoly& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly p, const DensePoly& q) { return p += q; }
  friend DensePoly operator-(DensePoly p, const DensePoly& q) { return p -= q; }
  friend DensePoly operator-(DensePoly p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  friend DensePoly operator*(const DensePoly& p, const DensePoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> r(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(p.coeffs_[i])) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return DensePoly(std::move(r));
  }
  DensePoly& operator*=(const DensePoly& q) { return *this = *this * q; }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

template <class T>
bool is_zero(const DensePoly<T>& p) {
  return p.is_zero();
}

using UniPoly = DensePoly<BigRational>;

template <class T>
DensePoly<T> derivative(const DensePoly<T>& p) {
  if (p.degree() <= 0) return {};
  std::vector<T> d(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * T(static_cast<long>(i));
  return DensePoly<T>(std::move(d));
}

template <class T>
T evaluate(const DensePoly<T>& p, const T& x) {
  T acc{};
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
  return acc;
}

template <class T>
DensePoly<T> pow(const DensePoly<T>& p, unsigned e) {
  DensePoly<T> result(T(1));
  DensePoly<T> base = p;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

/// Quotient and remainder over a field.
inline std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<BigRational> rem(a.coeffs());
  std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const BigRational& lb = b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigRational c = rem[k + db] / lb;
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

inline UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  BigRational inv = 1 / p.leading();
  std::vector<BigRational> c(p.coeffs());
  for (auto& v : c) v *= inv;
  return UniPoly(std::move(c));
}

inline UniPoly scale(const UniPoly& p, const BigRational& c) {
  std::vector<BigRational> v(p.coeffs());
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

template <class T>
std::string DensePoly<T>::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const T& c = coeffs_[i];
    if (detail::coeff_is_zero(c)) continue;
    if constexpr (std::is_same_v<T, BigRational>) {
      BigRational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) out << '-';
      } else {
        out << (sgn(c) < 0 ? " - " : " + ");
      }
      bool unit = mag == 1 && i != 0;
      if (!unit) out << discstrat::to_string(mag) << (i != 0 ? "*" : "");
    } else {
      if (!first) out << " + ";
      out << '(' << c.to_string() << ')' << (i != 0 ? "*" : "");
    }
    first = false;
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

}  // namespace discstrat
