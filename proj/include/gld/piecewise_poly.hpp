#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "gld/errors.hpp"

namespace gld {

/// Piecewise polynomial on [0,1] in the global power basis: piece p lives on
/// [breaks[p], breaks[p+1]] with value sum_d coef[p][d] t^d. Degrees stay
/// small here (constraint kernels and their products), so products and
/// integrals are exact up to rounding -- no quadrature anywhere.
class PiecewisePoly {
 public:
  PiecewisePoly() : breaks_{0.0, 1.0}, coef_{{0.0}} {}

  PiecewisePoly(std::vector<double> breaks, std::vector<std::vector<double>> coef)
      : breaks_(std::move(breaks)), coef_(std::move(coef)) {
    if (breaks_.size() < 2 || coef_.size() + 1 != breaks_.size())
      throw ValidationError("PiecewisePoly: inconsistent breaks/pieces");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
      if (!(breaks_[i] < breaks_[i + 1]))
        throw ValidationError("PiecewisePoly: breaks not increasing");
  }

  /// Single global polynomial with the given power-basis coefficients.
  static PiecewisePoly poly(std::vector<double> c) {
    return PiecewisePoly({0.0, 1.0}, {std::move(c)});
  }

  static PiecewisePoly constant(double v) { return poly({v}); }

  /// 1 on [0,t0], 0 afterwards (endpoint-evaluation kernel).
  static PiecewisePoly indicator(double t0) {
    if (t0 <= 0.0) return constant(0.0);
    if (t0 >= 1.0) return constant(1.0);
    return PiecewisePoly({0.0, t0, 1.0}, {{1.0}, {0.0}});
  }

  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<std::vector<double>>& coef() const { return coef_; }

  double operator()(double t) const {
    const std::size_t p = piece_index(t);
    double v = 0.0;
    const auto& c = coef_[p];
    for (std::size_t d = c.size(); d-- > 0;) v = v * t + c[d];
    return v;
  }

  PiecewisePoly operator*(const PiecewisePoly& other) const {
    return combine(other, [](const std::vector<double>& a, const std::vector<double>& b) {
      std::vector<double> prod(a.size() + b.size() - 1, 0.0);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
      return prod;
    });
  }

  PiecewisePoly operator+(const PiecewisePoly& other) const {
    return combine(other, [](const std::vector<double>& a, const std::vector<double>& b) {
      std::vector<double> sum(std::max(a.size(), b.size()), 0.0);
      for (std::size_t i = 0; i < a.size(); ++i) sum[i] += a[i];
      for (std::size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
      return sum;
    });
  }

  PiecewisePoly scaled(double s) const {
    PiecewisePoly out = *this;
    for (auto& c : out.coef_)
      for (auto& v : c) v *= s;
    return out;
  }

  /// Continuous antiderivative with F(0) = 0.
  PiecewisePoly antiderivative() const {
    std::vector<std::vector<double>> out(coef_.size());
    double accum = 0.0;
    for (std::size_t p = 0; p < coef_.size(); ++p) {
      std::vector<double> c(coef_[p].size() + 1, 0.0);
      for (std::size_t d = 0; d < coef_[p].size(); ++d) c[d + 1] = coef_[p][d] / (d + 1.0);
      // shift the constant so pieces chain continuously
      double at_left = 0.0;
      for (std::size_t d = c.size(); d-- > 0;) at_left = at_left * breaks_[p] + c[d];
      c[0] = accum - at_left;
      double at_right = 0.0;
      for (std::size_t d = c.size(); d-- > 0;) at_right = at_right * breaks_[p + 1] + c[d];
      accum = at_right;
      out[p] = std::move(c);
    }
    return PiecewisePoly(breaks_, std::move(out));
  }

  /// Exact integral over [0,1].
  double integral() const {
    const PiecewisePoly f = antiderivative();
    return f(1.0);
  }

  /// Exact integral over [a,b].
  double integral(double a, double b) const {
    const PiecewisePoly f = antiderivative();
    return f(b) - f(a);
  }

  double inner(const PiecewisePoly& other) const { return ((*this) * other).integral(); }

  double max_abs_coef() const {
    double m = 0.0;
    for (const auto& c : coef_)
      for (double v : c) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  std::size_t piece_index(double t) const {
    const auto it = std::upper_bound(breaks_.begin() + 1, breaks_.end() - 1, t);
    return static_cast<std::size_t>(it - breaks_.begin()) - 1;
  }

  template <typename Op>
  PiecewisePoly combine(const PiecewisePoly& other, Op op) const {
    std::vector<double> merged;
    std::merge(breaks_.begin(), breaks_.end(), other.breaks_.begin(), other.breaks_.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<std::vector<double>> out(merged.size() - 1);
    for (std::size_t p = 0; p + 1 < merged.size(); ++p) {
      const double mid = 0.5 * (merged[p] + merged[p + 1]);
      out[p] = op(coef_[piece_index(mid)], other.coef_[other.piece_index(mid)]);
    }
    return PiecewisePoly(std::move(merged), std::move(out));
  }

  std::vector<double> breaks_;
  std::vector<std::vector<double>> coef_;
};

}  // namespace gld
