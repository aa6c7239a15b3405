#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "discstrat/cache.hpp"
#include "discstrat/dense_poly.hpp"
#include "discstrat/matrix.hpp"
#include "discstrat/multipoly.hpp"

namespace discstrat {

// ---------------------------------------------------------------------------
// Sylvester matrices and resultants over Q and Q[t]
// ---------------------------------------------------------------------------

/// Sylvester matrix of p (deg m) and q (deg l): l shifted rows of p's
/// coefficients followed by m shifted rows of q's, highest degree first.
template <class R>
Matrix<R> sylvester_matrix(const DensePoly<R>& p, const DensePoly<R>& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("sylvester matrix of zero polynomial");
  const auto m = static_cast<std::size_t>(p.degree());
  const auto l = static_cast<std::size_t>(q.degree());
  Matrix<R> s(m + l, m + l);
  for (std::size_t r = 0; r < l; ++r)
    for (std::size_t j = 0; j <= m; ++j) s(r, r + j) = p.coeffs()[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= l; ++j) s(l + r, r + j) = q.coeffs()[l - j];
  return s;
}

/// Classical resultant res_x(p, q) = det of the Sylvester matrix, so that
/// res(p, q) = lc(p)^deg(q) * prod_{p(a)=0} q(a).
template <class R>
R resultant(const DensePoly<R>& p, const DensePoly<R>& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return R(1);
  return determinant_bareiss(sylvester_matrix(p, q));
}

// ---------------------------------------------------------------------------
// gcd machinery over Q
// ---------------------------------------------------------------------------

/// Monic gcd by Euclid with monic remainders; gcd(0, 0) is rejected.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    UniPoly r = monic(divrem(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
inline UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  const int delta = a.degree() - b.degree();
  if (delta < 0) return a;
  return divrem(scale(a, pow(b.leading(), static_cast<unsigned>(delta + 1))), b).second;
}

/// Monic gcd through the subresultant polynomial remainder sequence. Kept as
/// an independent route to cross-check gcd().
inline UniPoly gcd_subresultant(UniPoly a, UniPoly b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.degree() < b.degree()) std::swap(a, b);
  BigRational g(1);
  BigRational h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    UniPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return monic(b);
    if (r.degree() == 0) return UniPoly(BigRational(1));
    a = std::move(b);
    b = scale(r, 1 / (g * pow(h, static_cast<unsigned>(delta))));
    g = a.leading();
    // h <- g^delta / h^(delta - 1)
    if (delta > 0) h = pow(g, static_cast<unsigned>(delta)) / pow(h, static_cast<unsigned>(delta - 1));
  }
}

struct GcdCofactors {
  UniPoly gcd;        // monic
  UniPoly p_cofactor;  // p / gcd
  UniPoly q_cofactor;  // q / gcd
};

inline GcdCofactors gcd_and_cofactors(const UniPoly& p, const UniPoly& q) {
  UniPoly g = gcd(p, q);
  return {g, exact_div(p, g), exact_div(q, g)};
}

/// Square-free factor with its multiplicity.
struct SquarefreeFactor {
  UniPoly factor;
  unsigned multiplicity = 0;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

using SquarefreeDecomposition = std::vector<SquarefreeFactor>;

/// Yun's algorithm. Factors are monic, square-free, pairwise coprime and
/// listed by increasing multiplicity.
inline SquarefreeDecomposition squarefree_decomposition(const UniPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("square-free decomposition needs degree >= 1");
  if (!p.is_monic()) throw std::invalid_argument("square-free decomposition needs a monic polynomial");
  SquarefreeDecomposition out;
  UniPoly dp = derivative(p);
  UniPoly a = gcd(p, dp);
  UniPoly b = exact_div(p, a);
  UniPoly c = exact_div(dp, a);
  UniPoly d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    UniPoly ai = gcd(b, d);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - derivative(b);
    if (ai.degree() > 0) out.push_back({std::move(ai), i});
  }
  return out;
}

/// n - deg gcd(p, p'): the number of distinct complex roots.
inline std::size_t distinct_root_count(const UniPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("distinct root count needs degree >= 1");
  if (!p.is_monic()) throw std::invalid_argument("distinct root count needs a monic polynomial");
  return static_cast<std::size_t>(p.degree() - gcd(p, derivative(p)).degree());
}

// ---------------------------------------------------------------------------
// The generic monic family F = x^n + a_{n-1} x^{n-1} + ... + a_0
// ---------------------------------------------------------------------------

namespace family {

inline void require_degree(std::size_t n) {
  if (n < 2) throw std::invalid_argument("monic family needs degree n >= 2");
}

/// a_i as a polynomial in a_0..a_{n-1}; a_n is the constant 1.
inline MultiPoly coefficient(std::size_t n, std::size_t i) {
  if (i == n) return MultiPoly::constant(coefficient_vars(n), BigRational(1));
  return MultiPoly::variable(coefficient_vars(n), i);
}

/// b_i = (i+1) a_{i+1}, the coefficients of F'.
inline MultiPoly derivative_coefficient(std::size_t n, std::size_t i) {
  return coefficient(n, i + 1) * BigRational(static_cast<long>(i + 1));
}

}  // namespace family

/// Truncated Sylvester pattern of F and F' with n-1-k rows of a's and n-k
/// rows of b's, cut to 2n-1-2k columns.
inline PolyMatrix subdiscriminant_matrix(std::size_t n, std::size_t k) {
  family::require_degree(n);
  if (k >= n) throw std::invalid_argument("subdiscriminant index k must be < n");
  const std::size_t top = n - 1 - k;
  const std::size_t bottom = n - k;
  const std::size_t dim = top + bottom;
  const MultiPoly zero(coefficient_vars(n));
  PolyMatrix m(dim, dim, zero);
  for (std::size_t r = 0; r < top; ++r)
    for (std::size_t c = r; c < dim && c - r <= n; ++c) m(r, c) = family::coefficient(n, n - (c - r));
  for (std::size_t r = 0; r < bottom; ++r)
    for (std::size_t c = r; c < dim && c - r <= n - 1; ++c)
      m(top + r, c) = family::derivative_coefficient(n, n - 1 - (c - r));
  return m;
}

/// The full (2n-1)x(2n-1) Sylvester matrix of F and F'.
inline PolyMatrix sylvester_f_fprime(std::size_t n) { return subdiscriminant_matrix(n, 0); }

namespace detail {
inline KeyedCache<std::pair<std::size_t, std::size_t>, MultiPoly>& subdiscriminant_cache() {
  static KeyedCache<std::pair<std::size_t, std::size_t>, MultiPoly> cache;
  return cache;
}
}  // namespace detail

/// D_k = (-1)^{(n-k)(n-k-1)/2} det(subdiscriminant_matrix(n, k)); cached per (n, k).
inline const MultiPoly& subdiscriminant(std::size_t n, std::size_t k) {
  family::require_degree(n);
  if (k >= n) throw std::invalid_argument("subdiscriminant index k must be < n");
  return detail::subdiscriminant_cache().get({n, k}, [n, k] {
    MultiPoly det = determinant(subdiscriminant_matrix(n, k));
    const std::size_t e = (n - k) * (n - k - 1) / 2;
    return e % 2 == 1 ? -det : det;
  });
}

/// The generic discriminant D = D_0.
inline const MultiPoly& discriminant(std::size_t n) { return subdiscriminant(n, 0); }

}  // namespace discstrat
