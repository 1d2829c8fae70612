#pragma once

#include <stefan/model.hpp>
#include <stefan/solution.hpp>

#include <span>
#include <vector>

namespace stefan {

// The Dirichlet problem with the same front as a solved Neumann/Robin/general
// problem: u0 equals the source solution's fixed-face coefficient c1.
ProblemSpec dirichlet_from_general(const ProblemSpec& spec,
                                   const SimilaritySolution& sol);

// Inverse map: the general-condition problem (given lambda, u_inf) whose
// solution coincides with a solved Dirichlet problem.  Requires
// lambda * u0 < u_inf; returns the spec with
//   h0 = -k u0 M1 / (2 a xi M3 (lambda u0 - u_inf)),
// M1, M3 evaluated at -xi^2.
ProblemSpec general_from_dirichlet(const ProblemSpec& dirichlet_spec,
                                   const SimilaritySolution& dirichlet_sol,
                                   double lambda, double u_inf);

struct EquivalenceRecord {
    ProblemSpec source_spec;
    ProblemSpec target_spec;
    double xi_source = 0.0;
    double xi_target = 0.0;
    double max_xi_gap = 0.0; // |xi_source - xi_target|
};

// Solves `source`, maps it to its Dirichlet equivalent, solves that, and
// reports both fronts.
EquivalenceRecord equivalence_record(const ProblemSpec& source,
                                     double tol = 1e-10, int max_iter = 100);

struct RobinLimitEntry {
    double bi = 0.0;   // Biot number a h0 / k
    double xi_r = 0.0; // Robin front coefficient at this Bi
    double gap = 0.0;  // xi_d_inf - xi_r, strictly positive, decreasing
};

struct RobinLimitStudy {
    double xi_d_inf = 0.0; // Dirichlet front with u0 = u_inf (Bi -> inf limit)
    std::vector<RobinLimitEntry> entries;
};

// Sweeps the Robin problem along ascending Biot numbers and reports the gap
// to the Dirichlet limit.  `base` must be a Robin spec; its h0 is replaced
// per entry.  Throws VerificationError if the guaranteed ordering
// (0 < xi_r(Bi) increasing, gaps positive decreasing) fails numerically.
RobinLimitStudy robin_limit_study(const ProblemSpec& base,
                                  std::span<const double> bi_values,
                                  double tol = 1e-10, int max_iter = 100);

} // namespace stefan
