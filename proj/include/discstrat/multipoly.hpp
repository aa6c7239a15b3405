#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "discstrat/monomial.hpp"
#include "discstrat/rational.hpp"

namespace discstrat {

/// Ordered variable names of a polynomial ring; the arity is their count.
using VarNames = std::shared_ptr<const std::vector<std::string>>;

inline VarNames make_var_names(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

/// Names prefix_0, ..., prefix_{n-1}.
inline VarNames indexed_var_names(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + "_" + std::to_string(i));
  return make_var_names(std::move(names));
}

/// Coefficient ring variables a_0..a_{n-1}; shared per n so that ring
/// comparisons are usually a pointer check.
inline VarNames coefficient_vars(std::size_t n) {
  static const std::vector<VarNames> common = [] {
    std::vector<VarNames> v;
    for (std::size_t k = 0; k <= 16; ++k) v.push_back(indexed_var_names(k, "a"));
    return v;
  }();
  return n < common.size() ? common[n] : indexed_var_names(n, "a");
}

inline bool same_ring(const VarNames& a, const VarNames& b) {
  return a == b || *a == *b;
}

/// ord of a polynomial at a point; nullopt stands for infinity (zero polynomial).
using Order = std::optional<std::uint64_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in descending canonical order and never store zero.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigRational, CanonicalDescending>;

  MultiPoly() : names_(make_var_names({})) {}
  explicit MultiPoly(VarNames names) : names_(std::move(names)) {}

  static MultiPoly constant(VarNames names, const BigRational& c) {
    MultiPoly p(std::move(names));
    p.add_term(Monomial(p.arity()), c);
    return p;
  }
  static MultiPoly variable(VarNames names, std::size_t index) {
    MultiPoly p(std::move(names));
    if (index >= p.arity()) throw std::out_of_range("variable index out of range");
    p.add_term(Monomial::variable(p.arity(), index), BigRational(1));
    return p;
  }

  std::size_t arity() const { return names_->size(); }
  const VarNames& names() const { return names_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  BigRational constant_term() const {
    auto it = terms_.find(Monomial(arity()));
    return it == terms_.end() ? BigRational(0) : it->second;
  }
  BigRational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  /// Highest total degree; 0 for constants and the zero polynomial.
  std::uint64_t total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  void add_term(const Monomial& m, const BigRational& c) {
    if (m.arity() != arity()) throw std::invalid_argument("monomial arity differs from ring arity");
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  /// Same terms over a different ring of equal arity.
  MultiPoly renamed(VarNames names) const {
    if (names->size() != arity()) throw std::invalid_argument("incompatible rings");
    MultiPoly r(std::move(names));
    r.terms_ = terms_;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& q) {
    require_same_ring(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& q) {
    require_same_ring(q);
    for (const auto& [m, c] : q.terms_) add_term(m, BigRational(-c));
    return *this;
  }
  MultiPoly& operator*=(const BigRational& c) {
    if (is_zero_coeff(c)) {
      terms_.clear();
    } else {
      for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
  }

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator-(MultiPoly p) {
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  friend MultiPoly operator*(MultiPoly p, const BigRational& c) { return p *= c; }
  friend MultiPoly operator*(const BigRational& c, MultiPoly p) { return p *= c; }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    p.require_same_ring(q);
    MultiPoly r(p.names_);
    if (p.is_zero() || q.is_zero()) return r;
    BigRational prod;
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) {
        prod = cp * cq;
        r.add_term(mp * mq, prod);
      }
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

  /// p * c * m for a single term.
  MultiPoly times_term(const Monomial& m, const BigRational& c) const {
    MultiPoly r(names_);
    if (is_zero_coeff(c)) return r;
    // Multiplying by a monomial preserves the order, so append at the end.
    for (const auto& [mp, cp] : terms_) r.terms_.emplace_hint(r.terms_.end(), mp * m, BigRational(cp * c));
    return r;
  }

  friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
    return same_ring(p.names_, q.names_) && p.terms_ == q.terms_;
  }

  /// Canonical text, e.g. "-4*a_2^3*a_0 + a_2^2*a_1^2 - 27*a_0^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      BigRational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) out << '-';
      } else {
        out << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      bool unit = mag == 1;
      bool wrote = false;
      if (!unit || m.is_one()) {
        out << discstrat::to_string(mag);
        wrote = true;
      }
      for (std::size_t i = m.arity(); i-- > 0;) {
        if (m[i] == 0) continue;
        if (wrote) out << '*';
        out << (*names_)[i];
        if (m[i] > 1) out << '^' << m[i];
        wrote = true;
      }
    }
    return out.str();
  }

  void require_same_ring(const MultiPoly& q) const {
    if (!same_ring(names_, q.names_)) throw std::invalid_argument("incompatible rings");
  }

 private:
  static bool is_zero_coeff(const BigRational& c) { return sgn(c) == 0; }

  VarNames names_;
  TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

inline MultiPoly pow(const MultiPoly& p, unsigned e) {
  MultiPoly result = MultiPoly::constant(p.names(), BigRational(1));
  MultiPoly base = p;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

inline MultiPoly partial_derivative(const MultiPoly& p, std::size_t var_index) {
  if (var_index >= p.arity()) throw std::out_of_range("derivative variable index out of range");
  MultiPoly r(p.names());
  for (const auto& [m, c] : p.terms()) {
    if (m[var_index] == 0) continue;
    Monomial dm(m);
    dm[var_index] -= 1;
    r.add_term(dm, BigRational(c * m[var_index]));
  }
  return r;
}

/// Applies d/d(var_i) exponents[i] times for each i.
inline MultiPoly partial_derivative(const MultiPoly& p, const Monomial& multi_index) {
  if (multi_index.arity() != p.arity()) throw std::invalid_argument("multi-index arity mismatch");
  MultiPoly r = p;
  for (std::size_t i = 0; i < multi_index.arity(); ++i)
    for (Monomial::Exponent k = 0; k < multi_index[i]; ++k) r = partial_derivative(r, i);
  return r;
}

namespace detail {

inline void require_point(const MultiPoly& p, std::span<const BigRational> point) {
  if (point.size() != p.arity()) throw std::invalid_argument("point length differs from ring arity");
}

// powers[i][e] = point[i]^e up to the degree used in p.
inline std::vector<std::vector<BigRational>> power_table(const MultiPoly& p,
                                                         std::span<const BigRational> point) {
  std::vector<Monomial::Exponent> max_exp(p.arity(), 0);
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < m.arity(); ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  std::vector<std::vector<BigRational>> powers(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    powers[i].resize(max_exp[i] + 1);
    powers[i][0] = 1;
    for (std::size_t e = 1; e <= max_exp[i]; ++e) powers[i][e] = powers[i][e - 1] * point[i];
  }
  return powers;
}

}  // namespace detail

inline BigRational evaluate(const MultiPoly& p, std::span<const BigRational> point) {
  detail::require_point(p, point);
  auto powers = detail::power_table(p, point);
  BigRational sum(0);
  BigRational term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < m.arity(); ++i)
      if (m[i] != 0) term *= powers[i][m[i]];
    sum += term;
  }
  return sum;
}

/// q(u) = p(shift + u) over fresh variables u_0, ..., u_{n-1}.
inline MultiPoly taylor_shift(const MultiPoly& p, std::span<const BigRational> shift,
                              VarNames fresh = nullptr) {
  detail::require_point(p, shift);
  if (!fresh) fresh = indexed_var_names(p.arity(), "u");
  if (fresh->size() != p.arity()) throw std::invalid_argument("incompatible rings");
  const std::size_t n = p.arity();
  auto powers = detail::power_table(p, shift);

  std::uint64_t max_e = 0;
  for (const auto& row : powers) max_e = std::max<std::uint64_t>(max_e, row.size());
  std::vector<std::vector<BigInt>> binom(max_e + 1);
  for (std::size_t e = 0; e <= max_e; ++e) {
    binom[e].resize(e + 1);
    binom[e][0] = binom[e][e] = 1;
    for (std::size_t j = 1; j < e; ++j) binom[e][j] = binom[e - 1][j - 1] + binom[e - 1][j];
  }

  MultiPoly result(fresh);
  std::vector<std::pair<Monomial, BigRational>> partial;
  std::vector<std::pair<Monomial, BigRational>> next;
  for (const auto& [m, c] : p.terms()) {
    partial.assign(1, {Monomial(n), c});
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = m[i];
      if (e == 0) continue;
      next.clear();
      next.reserve(partial.size() * (e + 1));
      for (const auto& [pm, pc] : partial) {
        for (Monomial::Exponent j = 0; j <= e; ++j) {
          // C(e, j) * shift_i^(e-j) * u_i^j
          const BigRational& sp = powers[i][e - j];
          if (sgn(sp) == 0) continue;
          Monomial nm(pm);
          nm[i] = j;
          next.emplace_back(std::move(nm), BigRational(pc * sp * binom[e][j]));
        }
      }
      partial.swap(next);
    }
    for (const auto& [pm, pc] : partial) result.add_term(pm, pc);
  }
  return result;
}

/// Lowest total degree of a nonzero term of the Taylor expansion at the point.
inline Order order_of(const MultiPoly& p, std::span<const BigRational> point) {
  detail::require_point(p, point);
  if (p.is_zero()) return std::nullopt;
  MultiPoly shifted = taylor_shift(p, point);
  // Descending canonical order: the last term has the least degree.
  return shifted.terms().rbegin()->first.degree();
}

/// Exact quotient p / q; throws when q does not divide p.
inline MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
  p.require_same_ring(q);
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  MultiPoly quotient(p.names());
  if (q.is_constant()) {
    quotient = p;
    quotient *= BigRational(1 / q.constant_term());
    return quotient;
  }
  const auto& [lead_m, lead_c] = *q.terms().begin();
  MultiPoly rem = p;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().begin();
    if (!lead_m.divides(rm)) throw std::domain_error("inexact polynomial division");
    Monomial tm = rm / lead_m;
    BigRational tc = rc / lead_c;
    quotient.add_term(tm, tc);
    rem -= q.times_term(tm, tc);
  }
  return quotient;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace discstrat
