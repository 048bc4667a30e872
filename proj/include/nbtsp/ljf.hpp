#pragma once

#include "nbtsp/errors.hpp"

namespace nbtsp {

// F(r) = G/r^q - H/r^p with q > p. Positive values repel, negative attract.
struct LjfCanonical {
  double G = 0.0;  // repulsive coefficient
  double H = 0.0;  // attractive coefficient
  double q = 0.0;  // repulsive exponent
  double p = 0.0;  // attractive exponent

  void validate() const;  // throws DomainError
};

// Geometric parameterization of the same family:
//   L      equilibrium distance, F(L) = 0
//   r_min  location of the maximal attraction, F(r_min) = -M
//   M      magnitude of the maximal attractive force
//   delta  decay shape, delta = q - p
struct LjfShape {
  double L = 0.0;
  double r_min = 0.0;
  double M = 0.0;
  double delta = 0.0;

  void validate() const;  // throws InvalidShapeError
};

struct ShapeQuantities {
  LjfShape shape;
  double r_infl = 0.0;  // unique inflection point, r_infl > r_min
};

// Evaluates F(r) in the factored form H/r^p * ((L/r)^(q-p) - 1), which avoids
// forming G/r^q and H/r^p separately and cancelling.
double force_eval(const LjfCanonical& params, double r);

// Same force, evaluated directly from shape parameters. All exponentials go
// through expm1/exp so that (r_min/L)^delta may exceed the double range
// (large delta) without corrupting the result.
double force_eval(const LjfShape& shape, double r);

ShapeQuantities shape_from_canonical(const LjfCanonical& params);

LjfCanonical canonical_from_shape(const LjfShape& shape);

// T(r) = (r_min/r)^(1/log(r_min/L)) * log(r/L)/log(r_min/L), the delta -> 0
// envelope of -F(r)/M on [r_min, inf). T(r_min) = 1, T decreases to 0.
double decay_profile(double L, double r_min, double r);

// Solves T(R_eps) = eps for the lower edge of the attainable r_eps interval.
double solve_R_eps(double L, double r_min, double eps);

// Solves F(r_eps) = -eps*M for delta, given the remaining shape parameters.
// r_eps must lie in the attainable interval (R_eps, inf).
double solve_delta(double L, double r_min, double M, double eps, double r_eps);

// Antiderivative diagnostic: U with -dU/dr = F, valid for q != 1 and p != 1.
double potential_eval(const LjfCanonical& params, double r);

}  // namespace nbtsp
