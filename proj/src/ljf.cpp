#include "nbtsp/ljf.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace nbtsp {

namespace {

constexpr int kMaxIterations = 200;
// Largest exponent expm1 can take before overflowing; above this the
// ratio-power terms are evaluated in log space.
constexpr double kExpOverflow = 700.0;

// p = delta / ((r_min/L)^delta - 1). For large exponents the denominator
// overflows while p itself underflows smoothly toward 0.
double attractive_exponent(double log_ratio, double delta) {
  const double a = delta * log_ratio;
  if (a <= kExpOverflow) return delta / std::expm1(a);
  return std::exp(std::log(delta) - a);
}

}  // namespace

void LjfCanonical::validate() const {
  if (!(G > 0.0) || !(H > 0.0) || !(q > 0.0) || !(p > 0.0))
    throw DomainError("LJF canonical parameters must all be positive");
  if (!(q > p)) throw DomainError("LJF requires q > p");
}

void LjfShape::validate() const {
  if (!(L > 0.0) || !(r_min > 0.0) || !(M > 0.0) || !(delta > 0.0))
    throw InvalidShapeError("LJF shape parameters must all be positive");
  if (!(L < r_min)) throw InvalidShapeError("LJF shape requires L < r_min");
}

double force_eval(const LjfCanonical& params, double r) {
  params.validate();
  if (!(r > 0.0)) throw DomainError("force_eval requires r > 0");
  const double delta = params.q - params.p;
  const double L = std::pow(params.G / params.H, 1.0 / delta);
  const double f =
      params.H / std::pow(r, params.p) * std::expm1(-delta * std::log(r / L));
  if (!std::isfinite(f))
    throw OverflowError("force_eval overflowed at r = " + std::to_string(r), r);
  return f;
}

double force_eval(const LjfShape& shape, double r) {
  shape.validate();
  if (!(r > 0.0)) throw DomainError("force_eval requires r > 0");
  const double log_ratio = std::log(shape.r_min / shape.L);
  const double p = attractive_exponent(log_ratio, shape.delta);
  const double prefactor = std::exp(p * std::log(shape.r_min / r));
  const double numer = std::expm1(-shape.delta * std::log(r / shape.L));
  const double denom = -std::expm1(-shape.delta * log_ratio);
  const double f = shape.M * prefactor * numer / denom;
  if (!std::isfinite(f))
    throw OverflowError("force_eval overflowed at r = " + std::to_string(r), r);
  return f;
}

ShapeQuantities shape_from_canonical(const LjfCanonical& params) {
  params.validate();
  const double delta = params.q - params.p;
  const double L = std::pow(params.G / params.H, 1.0 / delta);
  const double r_min = std::pow(params.q / params.p, 1.0 / delta) * L;
  const double M = params.H * std::pow(r_min, -params.p) * (1.0 - params.p / params.q);
  const double r_infl =
      std::pow((params.q + 1.0) / (params.p + 1.0), 1.0 / delta) * r_min;
  return {{L, r_min, M, delta}, r_infl};
}

LjfCanonical canonical_from_shape(const LjfShape& shape) {
  shape.validate();
  const double log_ratio = std::log(shape.r_min / shape.L);
  const double p = attractive_exponent(log_ratio, shape.delta);
  const double q = p + shape.delta;
  const double H = shape.M * std::pow(shape.r_min, p) / (1.0 - p / q);
  const double G = H * std::pow(shape.L, shape.delta);
  return {G, H, q, p};
}

double decay_profile(double L, double r_min, double r) {
  if (!(L > 0.0) || !(L < r_min)) throw DomainError("decay_profile requires 0 < L < r_min");
  if (!(r >= r_min)) throw DomainError("decay_profile requires r >= r_min");
  const double t = std::log(r_min / L);
  return std::exp(-std::log(r / r_min) / t) * std::log(r / L) / t;
}

namespace {

// d/dr T(r) = T(r) * (1/log(r/L) - 1/log(r_min/L)) / r, negative on (r_min, inf).
double decay_profile_slope(double L, double r_min, double r) {
  const double t = std::log(r_min / L);
  return decay_profile(L, r_min, r) * (1.0 / std::log(r / L) - 1.0 / t) / r;
}

}  // namespace

double solve_R_eps(double L, double r_min, double eps) {
  if (!(L > 0.0) || !(L < r_min)) throw DomainError("solve_R_eps requires 0 < L < r_min");
  if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("solve_R_eps requires eps in (0, 1)");

  // T(r_min) = 1 > eps and T -> 0, so doubling finds an upper bracket.
  double lo = r_min;
  double hi = 2.0 * r_min;
  while (decay_profile(L, r_min, hi) > eps) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi))
      throw ConvergenceError("solve_R_eps failed to bracket the root", lo, hi);
  }

  // Internal target sits two decades below the 1e-10 contract so callers
  // never see a residual at the bound.
  constexpr double kTol = 1e-12;
  // Bisect until the bracket is narrow, then polish with Newton steps kept
  // inside the bracket.
  for (int it = 0; it < kMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double res = decay_profile(L, r_min, mid) - eps;
    if (res > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-6 * mid) break;
  }
  double r = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double res = decay_profile(L, r_min, r) - eps;
    if (std::abs(res) <= kTol) return r;
    const double slope = decay_profile_slope(L, r_min, r);
    double next = r - res / slope;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (res > 0.0)
      lo = r;
    else
      hi = r;
    r = next;
  }
  // Could not hit the internal target; the contract bound may still hold.
  if (std::abs(decay_profile(L, r_min, r) - eps) <= 1e-10) return r;
  throw ConvergenceError("solve_R_eps did not converge", lo, hi);
}

double solve_delta(double L, double r_min, double M, double eps, double r_eps) {
  if (!(L > 0.0) || !(L < r_min) || !(M > 0.0))
    throw DomainError("solve_delta requires 0 < L < r_min and M > 0");
  if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("solve_delta requires eps in (0, 1)");

  const double R_eps = solve_R_eps(L, r_min, eps);
  if (!(r_eps > R_eps))
    throw InfeasibleTargetError("r_eps must exceed R_eps = " + std::to_string(R_eps) +
                                "; the attainable interval is (R_eps, inf)");

  // residual(delta) = F_delta(r_eps) + eps*M decreases strictly in delta,
  // from M*(eps - T(r_eps)) > 0 down to M*(eps - 1) < 0.
  const auto residual = [&](double delta) {
    return force_eval(LjfShape{L, r_min, M, delta}, r_eps) + eps * M;
  };

  double lo = 1.0;
  while (residual(lo) <= 0.0) {
    lo *= 0.5;
    if (lo < 1e-12) throw ConvergenceError("solve_delta failed to bracket below", lo, 1.0);
  }
  double hi = std::max(2.0 * lo, 1.0);
  while (residual(hi) >= 0.0) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw ConvergenceError("solve_delta failed to bracket above", lo, hi);
  }

  // Plain bisection: the residual flattens sharply toward delta -> 0, which
  // starves secant/Newton steps of progress, while halving is immune.
  const double tol = 1e-12 * M;
  double delta = 0.5 * (lo + hi);
  double res = residual(delta);
  for (int it = 0; it < kMaxIterations; ++it) {
    if (std::abs(res) <= tol) return delta;
    if (res > 0.0)
      lo = delta;
    else
      hi = delta;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    delta = 0.5 * (lo + hi);
    res = residual(delta);
  }
  // Machine-tight bracket; accept whatever residual is left if it meets the
  // contract bound.
  if (std::abs(res) <= 1e-9 * M) return delta;
  throw ConvergenceError("solve_delta did not converge", lo, hi);
}

double potential_eval(const LjfCanonical& params, double r) {
  params.validate();
  if (!(r > 0.0)) throw DomainError("potential_eval requires r > 0");
  if (params.q == 1.0 || params.p == 1.0)
    throw UnsupportedExponentError("potential_eval is undefined for q = 1 or p = 1");
  const double u = params.G / ((params.q - 1.0) * std::pow(r, params.q - 1.0)) -
                   params.H / ((params.p - 1.0) * std::pow(r, params.p - 1.0));
  if (!std::isfinite(u))
    throw OverflowError("potential_eval overflowed at r = " + std::to_string(r), r);
  return u;
}

}  // namespace nbtsp
