#pragma once

#include <optional>
#include <string>

namespace stefan {

// Thermal/material constants of the one-phase melt problem.
struct MaterialParams {
    double a = 1.0;     // diffusivity sqrt: u_t = a^2 u_xx
    double k = 1.0;     // conductivity
    double gamma = 1.0; // latent-heat scale in L = gamma * s^beta * sdot^delta
};

// Power-law latent heat L = gamma * s(t)^beta * sdot(t)^delta.
struct LatentHeatLaw {
    double beta = 0.0;
    double delta = 0.0;

    // Growth exponent of the similarity temperature, u ~ t^(alpha/2).
    double alpha() const noexcept { return beta - delta; }
};

enum class BcKind { dirichlet, neumann, robin, general };

// Fixed-face (x = 0) boundary condition.  Which constants are meaningful
// depends on `kind`:
//   dirichlet: u(0,t) = u0 * t^(alpha/2)
//   neumann:   k u_x(0,t) = -q0 * t^((alpha-1)/2)
//   robin:     k u_x(0,t) = (h0/sqrt(t)) * (u(0,t) - u_inf * t^(alpha/2))
//   general:   k u_x(0,t) = (h0/sqrt(t)) * (lambda u(0,t) - u_inf * t^(alpha/2))
struct BoundaryCondition {
    BcKind kind = BcKind::dirichlet;
    double u0 = 0.0;
    double q0 = 0.0;
    double h0 = 0.0;
    double u_inf = 0.0;
    double lambda = 0.0;

    static BoundaryCondition dirichlet(double u0);
    static BoundaryCondition neumann(double q0);
    static BoundaryCondition robin(double h0, double u_inf);
    static BoundaryCondition general(double lambda, double h0, double u_inf);
};

// Full problem statement.  Treated as immutable after validate().
struct ProblemSpec {
    MaterialParams material;
    LatentHeatLaw law;
    BoundaryCondition bc;
};

// Dimensionless groups; only those meaningful for the bc kind are populated.
//   neumann:        Q   = q0 / (gamma * a^(beta+delta+1))
//   robin/general:  Ste = u_inf * k / (gamma * a^(beta+delta+2)),
//                   Bi  = a * h0 / k
struct DimensionlessGroups {
    std::optional<double> Q;
    std::optional<double> Ste;
    std::optional<double> Bi;
};

// Checks every model invariant and returns the spec unchanged.  Throws
// ValidationError carrying one message per violated requirement:
//   beta >= delta and beta >= -(1 + delta); beta + delta + 1 > 0;
//   a, k, gamma > 0; the bc constants required by `kind` are positive
//   (lambda >= 0 for general, > 0 for robin-equivalent use);
//   all values finite.
ProblemSpec validate(const ProblemSpec& spec);

// Computes the groups for a validated spec.
DimensionlessGroups dimensionless(const ProblemSpec& spec);

// Human-readable one-line description, e.g. for CLI summaries.
std::string describe(const BoundaryCondition& bc);
std::string to_string(BcKind kind);

} // namespace stefan
