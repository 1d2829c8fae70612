#pragma once

#include <stefan/model.hpp>

namespace stefan {

enum class RootMethod { newton, bisection_fallback };

struct RootReport {
    double xi = 0.0;        // dimensionless front coefficient, s(t) = 2 xi a sqrt(t)
    int iterations = 0;     // Newton iterations used
    double residual = 0.0;  // |F(xi)| at return
    RootMethod method = RootMethod::newton;
    double bracket_lo = 0.0; // bracket the safeguarded iteration ran in
    double bracket_hi = 0.0;
};

// Shape function of the general/Robin/Neumann front equation,
//   f(z) = 1 / [ (k/(2 a h0)) M(alpha/2+1/2, 1/2, z^2)
//                + lambda z M(alpha/2+1, 3/2, z^2) ].
// For a Neumann spec the canonical split h0 := q0, u_inf := 1, lambda := 0 is
// used (only the product h0*u_inf enters the equation).  Underflows to 0 for
// large z.
double f_general(double z, const ProblemSpec& spec);

// d f_general / dz = -f^2 * D'(z) with
//   D'(z) = (k/(2 a h0)) 2(alpha+1) z M(alpha/2+3/2, 3/2, z^2)
//           + lambda M(alpha/2+1, 1/2, z^2).
double f_general_prime(double z, const ProblemSpec& spec);

// Shape function of the Dirichlet front equation,
//   f(z) = 1 / (z M(alpha/2+1, 3/2, z^2)),  z > 0.
double f_dirichlet(double z, const LatentHeatLaw& law);
double f_dirichlet_prime(double z, const LatentHeatLaw& law);

// Solves the front equation F(z) = C * f(z) - z^(beta+delta+1) = 0 for the
// unique positive root, with a bracket-safeguarded Newton iteration
// (log-variable formulation when beta+delta+1 > 6).  Throws SolveError on
// non-convergence, ValidationError for an invalid spec.
RootReport solve_xi(const ProblemSpec& spec, double tol = 1e-10,
                    int max_iter = 100);

} // namespace stefan
