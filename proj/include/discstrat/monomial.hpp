#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace discstrat {

/// Exponent vector over a fixed number of ring variables.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1) {
    Monomial m(arity);
    m.exps_.at(index) = power;
    return m;
  }

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) {
      if (b.exps_[i] > r.exps_[i]) throw std::domain_error("monomial does not divide");
      r.exps_[i] -= b.exps_[i];
    }
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Canonical term order for storage and printing: total degree first, ties
/// broken lexicographically with the highest-indexed variable most
/// significant. Returns <0, 0, >0.
inline int canonical_compare(const Monomial& a, const Monomial& b) {
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

/// Strict "a comes before b" in descending canonical order.
struct CanonicalDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return canonical_compare(a, b) > 0;
  }
};

/// Term order used by the Groebner engine.
struct MonomialOrder {
  enum class Tag { GradedReverseLex, Lex };

  Tag tag = Tag::GradedReverseLex;
  // ranking[0] is the smallest variable, ranking.back() the largest.
  // Empty means the identity ranking a_0 < a_1 < ... .
  std::vector<std::size_t> ranking;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Tag::Lex, {}}; }

  std::size_t rank_to_var(std::size_t r) const { return ranking.empty() ? r : ranking[r]; }

  void validate(std::size_t arity) const {
    if (ranking.empty()) return;
    if (ranking.size() != arity) throw std::invalid_argument("ranking length differs from arity");
    std::vector<std::size_t> sorted(ranking);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw std::invalid_argument("ranking is not a permutation");
  }

  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.arity();
    if (tag == Tag::Lex) {
      for (std::size_t r = n; r-- > 0;) {
        auto v = rank_to_var(r);
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      }
      return 0;
    }
    auto da = a.degree();
    auto db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Smaller exponent on the smallest variable wins.
    for (std::size_t r = 0; r < n; ++r) {
      auto v = rank_to_var(r);
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
  }
};

}  // namespace discstrat
