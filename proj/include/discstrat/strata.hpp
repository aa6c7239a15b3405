#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "discstrat/cache.hpp"
#include "discstrat/dense_poly.hpp"
#include "discstrat/matrix.hpp"
#include "discstrat/multipoly.hpp"
#include "discstrat/resultants.hpp"

namespace discstrat {

/// Degrees for which the generic discriminant is expanded symbolically by
/// default. Larger degrees work but are slow.
inline constexpr std::size_t kMaxSymbolicDegree = 7;

/// gamma in Q^n, standing for F_gamma = x^n + gamma_{n-1} x^{n-1} + ... + gamma_0.
class CoefficientPoint {
 public:
  CoefficientPoint() = default;
  explicit CoefficientPoint(std::vector<BigRational> coords) : coords_(std::move(coords)) {}

  /// Coefficients of a monic polynomial below the leading one.
  static CoefficientPoint from_monic(const UniPoly& p) {
    if (!p.is_monic()) throw std::invalid_argument("coefficient point needs a monic polynomial");
    std::vector<BigRational> c(p.coeffs().begin(), p.coeffs().end() - 1);
    return CoefficientPoint(std::move(c));
  }

  std::size_t degree() const { return coords_.size(); }
  const std::vector<BigRational>& coords() const { return coords_; }
  const BigRational& operator[](std::size_t i) const { return coords_[i]; }

  UniPoly polynomial() const {
    std::vector<BigRational> c(coords_);
    c.emplace_back(1);
    return UniPoly(std::move(c));
  }

  std::string to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) out << (i ? ", " : "") << discstrat::to_string(coords_[i]);
    out << ')';
    return out.str();
  }

  friend bool operator==(const CoefficientPoint&, const CoefficientPoint&) = default;

 private:
  std::vector<BigRational> coords_;
};

/// Weakly decreasing positive parts; indexes the coincident root locus C_mu.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
    if (std::any_of(parts_.begin(), parts_.end(), [](unsigned p) { return p == 0; }))
      throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  /// "2,1,1" in any order.
  static Partition parse(const std::string& text) {
    std::vector<unsigned> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("invalid partition '" + text + "'");
      parts.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    return Partition(std::move(parts));
  }

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::size_t total() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ..., (1,...,1).
inline std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (n >= 1) rec(static_cast<unsigned>(n), static_cast<unsigned>(n));
  return out;
}

/// Exact multiplicities of the distinct complex roots, sorted descending.
struct MultiplicityPattern {
  std::vector<unsigned> multiplicities;

  std::size_t distinct_roots() const { return multiplicities.size(); }
  std::size_t total() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0}); }
  friend bool operator==(const MultiplicityPattern&, const MultiplicityPattern&) = default;
};

struct StratumReport {
  std::size_t n = 0;
  std::size_t m_gcd = 0;
  std::size_t m_subdisc = 0;
  std::size_t m_order = 0;
  std::size_t m_tval = 0;
  std::size_t ord_D = 0;  // NOLINT: field name mirrors the serialized key
  std::size_t d_gcd = 0;
  bool on_hypersurface = false;
  bool hypersurface_singular = false;
  bool consistent = false;

  friend bool operator==(const StratumReport&, const StratumReport&) = default;
};

// ---------------------------------------------------------------------------
// Classifiers
// ---------------------------------------------------------------------------

namespace detail {
inline void require_classifiable(const CoefficientPoint& gamma) {
  if (gamma.degree() < 2) throw std::invalid_argument("classification needs degree n >= 2");
}

inline void require_symbolic(std::size_t n, std::size_t max_degree) {
  if (n > max_degree)
    throw std::out_of_range("degree " + std::to_string(n) + " is outside the symbolic range 2.." +
                            std::to_string(max_degree) + "; use the t-valuation classifier instead");
}

/// F_gamma + t * x^s and F'_gamma + s * t * x^(s-1) as polynomials in x over Q[t].
inline std::pair<DensePoly<UniPoly>, DensePoly<UniPoly>> shifted_pair(const CoefficientPoint& gamma,
                                                                      std::size_t s) {
  const UniPoly f = gamma.polynomial();
  const UniPoly df = derivative(f);
  const UniPoly t = UniPoly::monomial(BigRational(1), 1);
  std::vector<UniPoly> fc;
  std::vector<UniPoly> dfc;
  for (const auto& c : f.coeffs()) fc.emplace_back(c);
  for (const auto& c : df.coeffs()) dfc.emplace_back(c);
  fc[s] += t;
  if (s >= 1) dfc[s - 1] += t * UniPoly(BigRational(static_cast<long>(s)));
  return {DensePoly<UniPoly>(std::move(fc)), DensePoly<UniPoly>(std::move(dfc))};
}

inline std::size_t t_valuation(const UniPoly& r) {
  auto v = r.valuation();
  if (!v) throw std::logic_error("resultant in t vanished identically");
  return *v;
}
}  // namespace detail

/// Ground truth: n - deg gcd(F, F').
inline std::size_t classify_by_gcd(const CoefficientPoint& gamma) {
  detail::require_classifiable(gamma);
  return distinct_root_count(gamma.polynomial());
}

/// Index of the first subdiscriminant not vanishing at gamma; D_{n-1} = n is never zero.
inline std::size_t first_nonvanishing_subdiscriminant(const CoefficientPoint& gamma) {
  detail::require_classifiable(gamma);
  const std::size_t n = gamma.degree();
  for (std::size_t j = 0; j < n; ++j)
    if (!is_zero(evaluate(subdiscriminant(n, j), gamma.coords()))) return j;
  throw std::logic_error("all subdiscriminants vanished");
}

inline std::size_t classify_by_subdiscriminants(const CoefficientPoint& gamma) {
  return gamma.degree() - first_nonvanishing_subdiscriminant(gamma);
}

/// ord of the generic discriminant at gamma.
inline std::size_t discriminant_order(const CoefficientPoint& gamma,
                                      std::size_t max_degree = kMaxSymbolicDegree) {
  detail::require_classifiable(gamma);
  detail::require_symbolic(gamma.degree(), max_degree);
  Order ord = order_of(discriminant(gamma.degree()), gamma.coords());
  if (!ord) throw std::logic_error("generic discriminant is zero");
  return static_cast<std::size_t>(*ord);
}

inline std::size_t classify_by_order(const CoefficientPoint& gamma, std::size_t max_degree = kMaxSymbolicDegree) {
  return gamma.degree() - discriminant_order(gamma, max_degree);
}

/// R(t) = res_x(F_gamma + t, F'_gamma) in Q[t].
inline UniPoly constant_shift_resultant(const CoefficientPoint& gamma) {
  detail::require_classifiable(gamma);
  auto [f, df] = detail::shifted_pair(gamma, 0);
  return resultant(f, df);
}

/// Valuation at t = 0 of res_x(F_gamma + t, F'_gamma); equals deg gcd(F, F').
inline std::size_t t_valuation_constant_shift(const CoefficientPoint& gamma) {
  return detail::t_valuation(constant_shift_resultant(gamma));
}

inline std::size_t classify_by_t_valuation(const CoefficientPoint& gamma) {
  return gamma.degree() - t_valuation_constant_shift(gamma);
}

/// R_s(t) = res_x(F_gamma + t x^s, F'_gamma + s t x^(s-1)) in Q[t].
inline UniPoly monomial_shift_resultant(const CoefficientPoint& gamma, std::size_t s) {
  detail::require_classifiable(gamma);
  if (s < 1 || s >= gamma.degree()) throw std::out_of_range("monomial shift index s must satisfy 1 <= s <= n-1");
  auto [f, df] = detail::shifted_pair(gamma, s);
  return resultant(f, df);
}

/// Valuation at t = 0 of R_s(t). R_s vanishes identically (infinite
/// valuation, nullopt) when x^2 divides both F_gamma and x^s.
inline Order t_valuation_monomial_shift(const CoefficientPoint& gamma, std::size_t s) {
  auto v = monomial_shift_resultant(gamma, s).valuation();
  if (!v) return std::nullopt;
  return *v;
}

// ---------------------------------------------------------------------------
// Coincident root loci
// ---------------------------------------------------------------------------

/// prod (x - roots[i])^parts[i], as a coefficient point.
inline CoefficientPoint coincident_point(const Partition& mu, const std::vector<BigRational>& roots) {
  if (roots.size() != mu.length()) throw std::invalid_argument("need one root per partition part");
  UniPoly p(BigRational(1));
  for (std::size_t i = 0; i < roots.size(); ++i)
    p *= pow(UniPoly{BigRational(-roots[i]), BigRational(1)}, mu.parts()[i]);
  return CoefficientPoint::from_monic(p);
}

namespace detail {
/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r = 0;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}
}  // namespace detail

/// Distinct rational roots with numerators in [-50, 50] and denominators in
/// {1, 2, 3}, one per part of mu; deterministic in the seed.
inline std::vector<BigRational> sample_distinct_roots(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BigRational> roots;
  while (roots.size() < count) {
    const auto num = static_cast<long>(detail::uniform_below(rng, 101)) - 50;
    const auto den = static_cast<long>(detail::uniform_below(rng, 3)) + 1;
    BigRational r = make_rational(num, den);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  return roots;
}

inline CoefficientPoint sample_coincident_locus(const Partition& mu, std::uint64_t seed) {
  return coincident_point(mu, sample_distinct_roots(mu.length(), seed));
}

inline MultiplicityPattern multiplicity_pattern(const CoefficientPoint& gamma) {
  if (gamma.degree() < 1) throw std::invalid_argument("multiplicity pattern needs degree >= 1");
  MultiplicityPattern pattern;
  for (const auto& [factor, mult] : squarefree_decomposition(gamma.polynomial()))
    pattern.multiplicities.insert(pattern.multiplicities.end(), static_cast<std::size_t>(factor.degree()), mult);
  std::sort(pattern.multiplicities.begin(), pattern.multiplicities.end(), std::greater<>());
  return pattern;
}

/// True iff the parts of mu can be grouped so the group sums are exactly the
/// pattern's multiplicities, i.e. F_gamma lies in C_mu.
inline bool coincident_locus_membership(const MultiplicityPattern& pattern, const Partition& mu) {
  if (pattern.total() != mu.total()) throw std::invalid_argument("pattern and partition sum to different n");
  std::vector<unsigned> room(pattern.multiplicities);
  const auto& parts = mu.parts();
  // Parts are descending, so large parts are placed first.
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == parts.size()) return std::all_of(room.begin(), room.end(), [](unsigned r) { return r == 0; });
    for (std::size_t b = 0; b < room.size(); ++b) {
      if (room[b] < parts[i]) continue;
      // Bins with equal remaining room are interchangeable.
      bool seen = false;
      for (std::size_t e = 0; e < b; ++e) seen = seen || room[e] == room[b];
      if (seen) continue;
      room[b] -= parts[i];
      bool ok = place(i + 1);
      room[b] += parts[i];
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

// ---------------------------------------------------------------------------
// Singularity of the discriminant hypersurface
// ---------------------------------------------------------------------------

namespace detail {
inline KeyedCache<std::size_t, std::vector<MultiPoly>>& gradient_cache() {
  static KeyedCache<std::size_t, std::vector<MultiPoly>> cache;
  return cache;
}
}  // namespace detail

/// dD/da_0, ..., dD/da_{n-1}; cached per n.
inline const std::vector<MultiPoly>& discriminant_gradient(std::size_t n) {
  return detail::gradient_cache().get(n, [n] {
    std::vector<MultiPoly> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(partial_derivative(discriminant(n), i));
    return g;
  });
}

/// gamma must lie on V(D); true iff every first partial of D vanishes there.
inline bool hypersurface_singularity_test(const CoefficientPoint& gamma,
                                          std::size_t max_degree = kMaxSymbolicDegree) {
  detail::require_classifiable(gamma);
  detail::require_symbolic(gamma.degree(), max_degree);
  const std::size_t n = gamma.degree();
  if (!is_zero(evaluate(discriminant(n), gamma.coords()))) throw std::domain_error("not on hypersurface");
  const auto& grad = discriminant_gradient(n);
  return std::all_of(grad.begin(), grad.end(),
                     [&](const MultiPoly& g) { return is_zero(evaluate(g, gamma.coords())); });
}

/// Runs all four classifiers; disagreement is recorded, never thrown.
inline StratumReport stratum_report(const CoefficientPoint& gamma, std::size_t max_degree = kMaxSymbolicDegree) {
  detail::require_classifiable(gamma);
  StratumReport r;
  r.n = gamma.degree();
  r.m_gcd = classify_by_gcd(gamma);
  r.d_gcd = r.n - r.m_gcd;
  r.m_subdisc = classify_by_subdiscriminants(gamma);
  r.ord_D = discriminant_order(gamma, max_degree);
  r.m_order = r.n - r.ord_D;
  r.m_tval = classify_by_t_valuation(gamma);
  r.on_hypersurface = r.ord_D > 0;
  r.hypersurface_singular = r.on_hypersurface && hypersurface_singularity_test(gamma, max_degree);
  r.consistent = r.m_gcd == r.m_subdisc && r.m_gcd == r.m_order && r.m_gcd == r.m_tval;
  return r;
}

}  // namespace discstrat
