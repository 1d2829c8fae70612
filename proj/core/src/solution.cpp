#include <stefan/solution.hpp>

#include <stefan/errors.hpp>
#include <stefan/kummer.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace stefan {
namespace {

// M(-alpha/2, 1/2, -xi^2): shared denominator of the coefficient formulas.
double m1_at(double alpha, double xi) {
    return kummer_m(-alpha / 2, 0.5, -xi * xi);
}

// M(-alpha/2 + 1/2, 3/2, -xi^2).
double m3_at(double alpha, double xi) {
    return kummer_m(-alpha / 2 + 0.5, 1.5, -xi * xi);
}

void check_positive_front(const SimilaritySolution& sol, double t) {
    if (!(t > 0.0))
        throw std::domain_error("similarity solution: t must be > 0 (got " +
                                std::to_string(t) + ")");
    (void)sol;
}

} // namespace

SimilaritySolution assemble(const ProblemSpec& raw, const RootReport& root) {
    const ProblemSpec spec = validate(raw);
    const double xi = root.xi;
    if (!(xi > 0.0))
        throw ValidationError("assemble: front coefficient must be > 0");

    const double alpha = spec.law.alpha();
    const double a = spec.material.a;
    const double k = spec.material.k;
    const double M1 = m1_at(alpha, xi);
    const double M3 = m3_at(alpha, xi);
    if (!(M1 > 0.0) || !(M3 > 0.0))
        throw VerificationError(
            "assemble: Kummer denominator guard failed (M1=" +
            std::to_string(M1) + ", M3=" + std::to_string(M3) + ")");

    SimilaritySolution sol;
    sol.spec = spec;
    sol.xi = xi;
    sol.alpha = alpha;

    switch (spec.bc.kind) {
        case BcKind::dirichlet: {
            sol.c1 = spec.bc.u0;
            sol.c2 = -spec.bc.u0 * M1 / (xi * M3);
            break;
        }
        case BcKind::neumann: {
            const double q0 = spec.bc.q0;
            sol.c1 = 2.0 * a * q0 * xi / k * (M3 / M1);
            sol.c2 = -2.0 * a * q0 / k;
            break;
        }
        case BcKind::robin:
        case BcKind::general: {
            const double lambda = spec.bc.lambda;
            const double r = k / (2.0 * a * spec.bc.h0);
            const double den = r * M1 + lambda * xi * M3;
            if (!(den > 0.0))
                throw VerificationError(
                    "assemble: boundary denominator guard failed");
            sol.c1 = spec.bc.u_inf * xi * M3 / den;
            sol.c2 = -spec.bc.u_inf * M1 / den;
            break;
        }
    }
    return sol;
}

double eval_u(const SimilaritySolution& sol, double x, double t) {
    check_positive_front(sol, t);
    const double a = sol.spec.material.a;
    const double s = 2.0 * sol.xi * a * std::sqrt(t);
    if (x < 0.0 || x > s * (1.0 + 1e-12))
        throw std::domain_error("eval_u: x outside [0, s(t)] (x=" +
                                std::to_string(x) + ", s=" + std::to_string(s) +
                                ")");
    const double eta = std::min(x, s) / (2.0 * a * std::sqrt(t));
    const double phi =
        sol.c1 * kummer_m(-sol.alpha / 2, 0.5, -eta * eta) +
        sol.c2 * eta * kummer_m(-sol.alpha / 2 + 0.5, 1.5, -eta * eta);
    return std::pow(t, sol.alpha / 2) * phi;
}

FrontState eval_front(const SimilaritySolution& sol, double t) {
    check_positive_front(sol, t);
    const double a = sol.spec.material.a;
    FrontState st;
    st.s = 2.0 * sol.xi * a * std::sqrt(t);
    st.sdot = sol.xi * a / std::sqrt(t);
    return st;
}

LatentHeatState latent_heat(const SimilaritySolution& sol, double t) {
    const FrontState st = eval_front(sol, t);
    const double beta = sol.spec.law.beta;
    const double delta = sol.spec.law.delta;

    LatentHeatState L;
    L.value = sol.spec.material.gamma * std::pow(st.s, beta) *
              std::pow(st.sdot, delta);
    L.power = sol.alpha / 2;
    if (L.power < 1.0)
        L.regime = LatentHeatRegime::sublinear;
    else if (L.power > 1.0)
        L.regime = LatentHeatRegime::superlinear;
    else
        L.regime = LatentHeatRegime::linear;
    return L;
}

double eval_fixed_face_flux(const SimilaritySolution& sol, double t) {
    check_positive_front(sol, t);
    const double a = sol.spec.material.a;
    const double k = sol.spec.material.k;
    return k * sol.c2 * std::pow(t, (sol.alpha - 1.0) / 2) / (2.0 * a);
}

double eval_front_gradient(const SimilaritySolution& sol, double t) {
    check_positive_front(sol, t);
    const double a = sol.spec.material.a;
    const double M1 = m1_at(sol.alpha, sol.xi);
    return sol.c2 * std::exp(-sol.xi * sol.xi) *
           std::pow(t, (sol.alpha - 1.0) / 2) / (2.0 * a * M1);
}

SimilaritySolution solve_problem(const ProblemSpec& spec, double tol,
                                 int max_iter) {
    return assemble(spec, solve_xi(spec, tol, max_iter));
}

} // namespace stefan
