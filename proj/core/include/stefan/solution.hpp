#pragma once

#include <stefan/model.hpp>
#include <stefan/solver.hpp>

namespace stefan {

// Assembled similarity solution
//   u(x,t) = t^(alpha/2) [ c1 M(-alpha/2, 1/2, -eta^2)
//                          + c2 eta M(-alpha/2+1/2, 3/2, -eta^2) ],
//   eta = x / (2 a sqrt(t)),  s(t) = 2 xi a sqrt(t).
struct SimilaritySolution {
    ProblemSpec spec;
    double xi = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double alpha = 0.0; // = beta - delta
};

// Computes c1, c2 for the spec's bc kind from the solved front coefficient.
SimilaritySolution assemble(const ProblemSpec& spec, const RootReport& root);

// Temperature at (x, t).  Requires t > 0 and 0 <= x <= s(t); throws
// std::domain_error outside the domain.
double eval_u(const SimilaritySolution& sol, double x, double t);

struct FrontState {
    double s = 0.0;    // front position
    double sdot = 0.0; // front velocity
};

FrontState eval_front(const SimilaritySolution& sol, double t);

enum class LatentHeatRegime { sublinear, linear, superlinear };

struct LatentHeatState {
    double value = 0.0;  // L(t) = gamma s^beta sdot^delta
    double power = 0.0;  // L ~ t^power, power = (beta - delta)/2
    LatentHeatRegime regime = LatentHeatRegime::linear;
};

LatentHeatState latent_heat(const SimilaritySolution& sol, double t);

// Conductive flux k u_x(0, t) = k c2 t^((alpha-1)/2) / (2a).
double eval_fixed_face_flux(const SimilaritySolution& sol, double t);

// Analytic temperature gradient at the front, reduced to the single-term
// form u_x(s(t), t) = c2 e^(-xi^2) t^((alpha-1)/2) / (2 a M(-alpha/2,1/2,-xi^2)),
// which is free of c1/c2 cancellation.
double eval_front_gradient(const SimilaritySolution& sol, double t);

// Convenience: solve + assemble.
SimilaritySolution solve_problem(const ProblemSpec& spec, double tol = 1e-10,
                                 int max_iter = 100);

} // namespace stefan
