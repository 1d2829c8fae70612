#pragma once

#include <stefan/model.hpp>
#include <stefan/solution.hpp>

#include <utility>

namespace stefan {

struct GridSpec {
    int nx = 16;         // interior x samples per time
    int nt = 8;          // time samples
    double t0 = 0.5;     // time range
    double t1 = 2.0;
    double r_lo = 0.05;  // x = r * s(t), r strictly inside (r_lo, r_hi)
    double r_hi = 0.95;
};

struct ResidualReport {
    double pde_max_rel = 0.0;        // |u_t - a^2 u_xx| / scale, finite differences
    double phase_temp_max_abs = 0.0; // |u(s(t), t)|
    double stefan_max_rel = 0.0;     // front energy balance, FD + analytic routes
    double fixed_face_max_rel = 0.0; // boundary condition at x = 0
    GridSpec grid;
};

// Residual gates used by the `verify` command and the acceptance suite.
inline constexpr double kPdeResidualGate = 1e-6;
inline constexpr double kPhaseTempGate = 1e-12;
inline constexpr double kStefanResidualGate = 1e-6;
inline constexpr double kFixedFaceResidualGate = 1e-8;

// Checks the assembled solution against the governing equations by finite
// differences on an (nx x nt) grid: heat equation in the interior
// (5-point central stencils, x-step s(t)/200, t-step t/1000), zero phase
// temperature at the front, front energy balance (4th-order one-sided stencil
// at h = s(t)/1000 plus the analytic reduced gradient), and the fixed-face
// boundary condition.  Requires nx >= 4, nt >= 2, 0 < t0 < t1.
ResidualReport pde_residual(const SimilaritySolution& sol, int nx, int nt,
                            std::pair<double, double> t_range);

ResidualReport pde_residual(const SimilaritySolution& sol,
                            const GridSpec& grid);

bool residuals_pass(const ResidualReport& rep);

// Independent root finder for the front equation: plain bisection on
// F(z) = constant * shape(z) - z^(beta+delta+1), rebuilt directly from the
// Kummer kernel (shares no code with the Newton path).  `shape` follows the
// spec's bc kind (dirichlet / neumann / robin-general).  Requires a sign
// change on [lo, hi].
double bisection_root(double constant, const ProblemSpec& spec, double lo,
                      double hi, double tol);

// As above but with the equation constant derived from the spec itself.
double bisection_root(const ProblemSpec& spec, double lo = 1e-12,
                      double hi = 0.0, double tol = 1e-12);

// Extended-precision reference for the Kummer series: exact dyadic-rational
// accumulation (arbitrary-precision integers over a common power-of-two
// denominator), converted to double once at the end.  precision_digits (>= 30)
// sets the certified working precision for the cancellation check: throws
// std::runtime_error if the series' internal cancellation exceeds
// precision_digits - 17 decimal digits.  Requires |z| <= 60.
double kummer_oracle(double a, double b, double z, int precision_digits = 40);

} // namespace stefan
