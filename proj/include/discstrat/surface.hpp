#pragma once

// Rational sample grids of the discriminant for isosurface / contour plots.

#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "discstrat/rational.hpp"
#include "discstrat/resultants.hpp"
#include "discstrat/strata.hpp"

namespace discstrat {

struct AxisRange {
  BigRational lo;
  BigRational hi;
  std::size_t resolution = 2;

  /// lo + (hi - lo) i / (resolution - 1)
  BigRational at(std::size_t i) const {
    return lo + (hi - lo) * BigRational(static_cast<long>(i)) / BigRational(static_cast<long>(resolution - 1));
  }
};

struct SurfaceGrid {
  std::size_t n = 3;
  std::map<std::size_t, AxisRange> free_axes;  // coefficient index -> range
  std::map<std::size_t, BigRational> fixed;    // coefficient index -> value
  std::size_t cap = 1'000'000;

  /// Every free coefficient on [lo, hi] at the given resolution.
  static SurfaceGrid uniform(std::size_t n, const BigRational& lo, const BigRational& hi, std::size_t resolution,
                             const std::map<std::size_t, BigRational>& fixed = {}) {
    SurfaceGrid g;
    g.n = n;
    g.fixed = fixed;
    for (std::size_t i = 0; i < n; ++i)
      if (!fixed.contains(i)) g.free_axes[i] = AxisRange{lo, hi, resolution};
    return g;
  }

  std::size_t sample_count() const {
    std::size_t total = 1;
    for (const auto& [i, axis] : free_axes) {
      if (axis.resolution != 0 && total > cap / axis.resolution + 1) return cap + 1;
      total *= axis.resolution;
    }
    return total;
  }

  void validate() const {
    if (n != 3 && n != 4) throw std::invalid_argument("surface grids support degree 3 or 4");
    const std::size_t want_fixed = n - 3;
    if (fixed.size() != want_fixed)
      throw std::invalid_argument(n == 4 ? "degree 4 grids need exactly one fixed coefficient"
                                         : "degree 3 grids take no fixed coefficients");
    for (std::size_t i = 0; i < n; ++i) {
      const bool is_free = free_axes.contains(i);
      if (is_free == fixed.contains(i)) throw std::invalid_argument("a_" + std::to_string(i) + " must be either free or fixed");
    }
    if (free_axes.size() + fixed.size() != n) throw std::invalid_argument("coefficient index out of range");
    for (const auto& [i, axis] : free_axes) {
      if (axis.resolution < 2) throw std::invalid_argument("resolution must be at least 2");
      if (axis.lo >= axis.hi) throw std::invalid_argument("range for a_" + std::to_string(i) + " must have lo < hi");
    }
    if (sample_count() > cap) throw std::invalid_argument("grid exceeds the sample cap of " + std::to_string(cap));
  }
};

struct SurfaceRow {
  CoefficientPoint gamma;
  BigRational D;
  std::size_t m = 0;
};

/// Visits grid points with a_0 varying fastest. Checks D = 0 <=> m <= n-1 on
/// every row before handing it out.
inline std::size_t for_each_surface_row(const SurfaceGrid& grid, const std::function<void(const SurfaceRow&)>& visit) {
  grid.validate();
  const MultiPoly& disc = discriminant(grid.n);
  std::map<std::size_t, std::size_t> index;
  for (const auto& [i, axis] : grid.free_axes) index[i] = 0;

  std::size_t rows = 0;
  while (true) {
    std::vector<BigRational> c(grid.n);
    for (const auto& [i, v] : grid.fixed) c[i] = v;
    for (const auto& [i, axis] : grid.free_axes) c[i] = axis.at(index[i]);
    SurfaceRow row{CoefficientPoint(std::move(c)), BigRational(0), 0};
    row.D = evaluate(disc, row.gamma.coords());
    row.m = classify_by_gcd(row.gamma);
    if (is_zero(row.D) != (row.m <= grid.n - 1))
      throw std::logic_error("discriminant vanishing disagrees with root count at " + row.gamma.to_string());
    visit(row);
    ++rows;

    auto it = grid.free_axes.begin();
    for (; it != grid.free_axes.end(); ++it) {
      if (++index[it->first] < it->second.resolution) break;
      index[it->first] = 0;
    }
    if (it == grid.free_axes.end()) break;
  }
  return rows;
}

/// CSV with header a_0,...,a_{n-1},D,m; values rendered with `digits`
/// significant digits.
inline std::size_t write_surface_csv(const SurfaceGrid& grid, std::ostream& out, int digits = 12) {
  grid.validate();
  for (std::size_t i = 0; i < grid.n; ++i) out << "a_" << i << ',';
  out << "D,m\n";
  return for_each_surface_row(grid, [&](const SurfaceRow& row) {
    for (const auto& c : row.gamma.coords()) out << to_decimal(c, digits) << ',';
    out << to_decimal(row.D, digits) << ',' << row.m << '\n';
  });
}

}  // namespace discstrat
