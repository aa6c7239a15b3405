#pragma once

// Buchberger's algorithm over Q for small ideal-membership experiments on
// the discriminant and its derivatives.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "discstrat/monomial.hpp"
#include "discstrat/multipoly.hpp"
#include "discstrat/resultants.hpp"

namespace discstrat {

namespace detail {

struct OrderDescending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

/// A polynomial whose terms are sorted by a runtime monomial order, leading
/// term first.
class OrderedPoly {
 public:
  using Terms = std::map<Monomial, BigRational, OrderDescending>;

  OrderedPoly(const MonomialOrder& order, VarNames names) : names_(std::move(names)), terms_(OrderDescending{&order}) {}
  OrderedPoly(const MonomialOrder& order, const MultiPoly& p) : OrderedPoly(order, p.names()) {
    for (const auto& [m, c] : p.terms()) terms_.emplace(m, c);
  }

  bool is_zero() const { return terms_.empty(); }
  const Monomial& lead_monomial() const { return terms_.begin()->first; }
  const BigRational& lead_coeff() const { return terms_.begin()->second; }
  const Terms& terms() const { return terms_; }
  const VarNames& names() const { return names_; }

  void add_term(const Monomial& m, const BigRational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// this -= c * m * g
  void subtract_multiple(const OrderedPoly& g, const Monomial& m, const BigRational& c) {
    BigRational prod;
    for (const auto& [gm, gc] : g.terms_) {
      prod = -(gc * c);
      add_term(gm * m, prod);
    }
  }

  void pop_lead() { terms_.erase(terms_.begin()); }

  void make_monic() {
    if (terms_.empty()) return;
    BigRational inv = 1 / lead_coeff();
    for (auto& [m, c] : terms_) c *= inv;
  }

  MultiPoly to_multipoly() const {
    MultiPoly p(names_);
    for (const auto& [m, c] : terms_) p.add_term(m, c);
    return p;
  }

 private:
  VarNames names_;
  Terms terms_;
};

/// Full reduction of p by the list.
inline OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& by, const MonomialOrder& order) {
  OrderedPoly remainder(order, p.names());
  while (!p.is_zero()) {
    const Monomial lm = p.lead_monomial();
    const BigRational lc = p.lead_coeff();
    const OrderedPoly* divisor = nullptr;
    for (const auto& g : by) {
      if (!g.is_zero() && g.lead_monomial().divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      p.subtract_multiple(*divisor, lm / divisor->lead_monomial(), BigRational(lc / divisor->lead_coeff()));
    } else {
      remainder.add_term(lm, lc);
      p.pop_lead();
    }
  }
  return remainder;
}

inline OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  OrderedPoly s(order, f.names());
  s.subtract_multiple(f, l / f.lead_monomial(), BigRational(-1 / f.lead_coeff()));
  s.subtract_multiple(g, l / g.lead_monomial(), BigRational(1 / g.lead_coeff()));
  return s;
}

}  // namespace detail

/// Reduced Groebner basis: monic generators, sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, VarNames names, std::vector<MultiPoly> generators)
      : order_(std::make_shared<MonomialOrder>(std::move(order))),
        names_(std::move(names)),
        generators_(std::move(generators)) {}

  const MonomialOrder& order() const { return *order_; }
  const VarNames& names() const { return names_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  bool is_unit_ideal() const { return generators_.size() == 1 && generators_[0].is_constant() && !generators_[0].is_zero(); }

  std::vector<detail::OrderedPoly> ordered() const {
    std::vector<detail::OrderedPoly> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) out.emplace_back(*order_, g);
    return out;
  }

 private:
  // Shared so OrderedPoly comparators stay valid when the basis is copied.
  std::shared_ptr<MonomialOrder> order_;
  VarNames names_;
  std::vector<MultiPoly> generators_;
};

namespace detail {
inline VarNames common_ring(const std::vector<MultiPoly>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& g : gens) gens.front().require_same_ring(g);
  return gens.front().names();
}
}  // namespace detail

/// Buchberger's algorithm with normal pair selection, the coprime-leading-term
/// criterion and the chain criterion.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order = MonomialOrder::grevlex()) {
  const VarNames names = detail::common_ring(gens);
  order.validate(names->size());
  auto ord = std::make_shared<MonomialOrder>(order);
  using detail::OrderedPoly;

  std::vector<OrderedPoly> basis;
  for (const auto& g : gens) {
    OrderedPoly p(*ord, g);
    p = detail::reduce(std::move(p), basis, *ord);
    if (p.is_zero()) continue;
    p.make_monic();
    basis.push_back(std::move(p));
  }
  if (basis.empty()) return GroebnerBasis(*ord, names, {});

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto pair_open = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, lcm(basis[i].lead_monomial(), basis[j].lead_monomial())});

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const Pair& a, const Pair& b) { return ord->compare(a.lcm, b.lcm) < 0; });
    const Pair pr = *best;
    pairs.erase(best);

    const Monomial& li = basis[pr.i].lead_monomial();
    const Monomial& lj = basis[pr.j].lead_monomial();
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      chain = basis[k].lead_monomial().divides(pr.lcm) && !pair_open(pr.i, k) && !pair_open(pr.j, k);
    }
    if (chain) continue;

    OrderedPoly s = detail::reduce(detail::s_polynomial(basis[pr.i], basis[pr.j], *ord), basis, *ord);
    if (s.is_zero()) continue;
    s.make_monic();
    basis.push_back(std::move(s));
    const std::size_t k = basis.size() - 1;
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm(basis[i].lead_monomial(), basis[k].lead_monomial())});
  }

  // Minimalize, then interreduce.
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].lead_monomial();
      const auto& mj = basis[j].lead_monomial();
      // Equal leading monomials: keep the earlier one.
      redundant = mj.divides(mi) && (mi != mj || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OrderedPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    OrderedPoly r = detail::reduce(minimal[i], others, *ord);
    r.make_monic();
    reduced.push_back(r.to_multipoly());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return ord->compare(OrderedPoly(*ord, a).lead_monomial(), OrderedPoly(*ord, b).lead_monomial()) < 0;
  });
  return GroebnerBasis(*ord, names, std::move(reduced));
}

/// Remainder of p modulo the basis; zero iff p lies in the ideal.
inline MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
  if (!same_ring(p.names(), gb.names())) throw std::invalid_argument("incompatible rings");
  return detail::reduce(detail::OrderedPoly(gb.order(), p), gb.ordered(), gb.order()).to_multipoly();
}

inline bool ideal_contains(const GroebnerBasis& gb, const MultiPoly& p) { return normal_form(p, gb).is_zero(); }

/// Buchberger criterion: every S-polynomial reduces to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto g = gb.ordered();
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!detail::reduce(detail::s_polynomial(g[i], g[j], gb.order()), g, gb.order()).is_zero()) return false;
  return true;
}

/// Reduced basis check: monic, and no leading monomial divides any term of
/// another generator.
inline bool is_reduced(const GroebnerBasis& gb) {
  const auto g = gb.ordered();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].lead_coeff() != 1) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : g[j].terms())
        if (g[i].lead_monomial().divides(m)) return false;
    }
  }
  return true;
}

/// membership[s-1] = (p^s in ideal) for s = 1..s_max.
inline std::vector<bool> power_membership_ladder(const MultiPoly& p, const GroebnerBasis& gb, unsigned s_max) {
  std::vector<bool> ladder;
  MultiPoly power = MultiPoly::constant(p.names(), BigRational(1));
  for (unsigned s = 1; s <= s_max; ++s) {
    power = normal_form(power * p, gb);
    // p^s reduces to 0 iff NF(NF(p^{s-1}) * p) does.
    ladder.push_back(power.is_zero());
  }
  return ladder;
}

/// Least s <= s_max with p^s in <gens>.
inline std::optional<unsigned> smallest_power_in_ideal(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                                                       unsigned s_max, MonomialOrder order = MonomialOrder::grevlex()) {
  if (s_max < 1) throw std::invalid_argument("s_max must be at least 1");
  const GroebnerBasis gb = buchberger(gens, std::move(order));
  const auto ladder = power_membership_ladder(p, gb, s_max);
  for (unsigned s = 1; s <= s_max; ++s)
    if (ladder[s - 1]) return s;
  return std::nullopt;
}

/// Same ideal: every generator of each side reduces to zero modulo the other's basis.
inline bool ideals_equal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  const GroebnerBasis ga = buchberger(a, order);
  const GroebnerBasis gbb = buchberger(b, order);
  return std::all_of(a.begin(), a.end(), [&](const MultiPoly& p) { return ideal_contains(gbb, p); }) &&
         std::all_of(b.begin(), b.end(), [&](const MultiPoly& p) { return ideal_contains(ga, p); });
}

// ---------------------------------------------------------------------------
// Generator sets for the discriminant experiments
// ---------------------------------------------------------------------------

/// All multi-indices over `arity` variables with |delta| <= bound.
inline std::vector<Monomial> multi_indices_up_to(std::size_t arity, std::size_t bound) {
  std::vector<Monomial> out;
  Monomial current(arity);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t var, std::size_t left) {
    if (var == arity) {
      out.push_back(current);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      current[var] = static_cast<Monomial::Exponent>(e);
      rec(var + 1, left - e);
    }
    current[var] = 0;
  };
  rec(0, bound);
  return out;
}

/// {d_delta D : |delta| <= bound} for the degree-n discriminant, zeros and
/// duplicates dropped.
inline std::vector<MultiPoly> derivative_ideal_generators(std::size_t n, std::size_t bound) {
  std::vector<MultiPoly> out;
  for (const auto& delta : multi_indices_up_to(n, bound)) {
    MultiPoly d = partial_derivative(discriminant(n), delta);
    if (d.is_zero() || std::find(out.begin(), out.end(), d) != out.end()) continue;
    out.push_back(std::move(d));
  }
  return out;
}

/// {D_0, ..., D_bound}.
inline std::vector<MultiPoly> subdiscriminant_ideal_generators(std::size_t n, std::size_t bound) {
  if (bound >= n) throw std::invalid_argument("subdiscriminant index out of range");
  std::vector<MultiPoly> out;
  for (std::size_t j = 0; j <= bound; ++j) out.push_back(subdiscriminant(n, j));
  return out;
}

}  // namespace discstrat
