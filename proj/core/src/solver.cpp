#include <stefan/solver.hpp>

#include <stefan/errors.hpp>
#include <stefan/kummer.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

namespace stefan {
namespace {

constexpr double kBracketFloor = 1e-12;
constexpr double kBracketCeil = 1e3;
constexpr double kUnderflowZ2 = 708.0; // z^2 beyond which the shapes are 0
constexpr double kResidualGate = 1e-9; // scaled |F(xi)| allowed at return
constexpr double kLogFormThreshold = 6.0; // exponent beyond which we solve in log z

// The general/Robin/Neumann shape depends on (r, lambda, alpha) only, where
// r = k/(2 a h0).  Neumann enters through the canonical split h0 := q0,
// u_inf := 1 (only the product h0*u_inf is physical there).
struct GeneralParams {
    double r = 0.0;
    double lambda = 0.0;
    double alpha = 0.0;
};

GeneralParams as_general(const ProblemSpec& spec) {
    GeneralParams p;
    p.alpha = spec.law.alpha();
    const double a = spec.material.a;
    const double k = spec.material.k;
    switch (spec.bc.kind) {
        case BcKind::neumann:
            p.r = k / (2.0 * a * spec.bc.q0);
            p.lambda = 0.0;
            break;
        case BcKind::robin:
            p.r = k / (2.0 * a * spec.bc.h0);
            p.lambda = 1.0;
            break;
        case BcKind::general:
            p.r = k / (2.0 * a * spec.bc.h0);
            p.lambda = spec.bc.lambda;
            break;
        case BcKind::dirichlet:
            throw ValidationError(
                "f_general: boundary condition must be neumann, robin or "
                "general, not dirichlet");
    }
    return p;
}

double f_general_impl(double z, const GeneralParams& p) {
    if (z < 0.0) throw std::domain_error("f_general: z must be >= 0");
    const double z2 = z * z;
    if (z2 > kUnderflowZ2) return 0.0; // value below ~1e-300
    const double den = p.r * kummer_m(p.alpha / 2 + 0.5, 0.5, z2) +
                       p.lambda * z * kummer_m(p.alpha / 2 + 1.0, 1.5, z2);
    return 1.0 / den;
}

double f_general_prime_impl(double z, const GeneralParams& p) {
    if (z < 0.0) throw std::domain_error("f_general_prime: z must be >= 0");
    const double z2 = z * z;
    if (z2 > kUnderflowZ2) return 0.0;
    const double f = f_general_impl(z, p);
    const double dden =
        p.r * 2.0 * (p.alpha + 1.0) * z * kummer_m(p.alpha / 2 + 1.5, 1.5, z2) +
        p.lambda * kummer_m(p.alpha / 2 + 1.0, 0.5, z2);
    return -f * f * dden;
}

// Neumann shape: 1 / M(alpha/2+1/2, 1/2, z^2); algebraically the
// lambda = 0 general shape rescaled by r.
double g_neumann(double z, double alpha) {
    const double z2 = z * z;
    if (z2 > kUnderflowZ2) return 0.0;
    return 1.0 / kummer_m(alpha / 2 + 0.5, 0.5, z2);
}

double g_neumann_prime(double z, double alpha) {
    const double z2 = z * z;
    if (z2 > kUnderflowZ2) return 0.0;
    const double g = g_neumann(z, alpha);
    return -g * g * 2.0 * (alpha + 1.0) * z *
           kummer_m(alpha / 2 + 1.5, 1.5, z2);
}

// Front equation F(z) = C * shape(z) - z^m.
struct FrontEquation {
    double C = 0.0;
    double m = 0.0;
    std::function<double(double)> shape;
    std::function<double(double)> dshape;
};

FrontEquation front_equation(const ProblemSpec& spec) {
    const double a = spec.material.a;
    const double k = spec.material.k;
    const double gamma = spec.material.gamma;
    const double beta = spec.law.beta;
    const double m = spec.law.beta + spec.law.delta + 1.0;
    const double alpha = spec.law.alpha();

    FrontEquation eq;
    eq.m = m;
    switch (spec.bc.kind) {
        case BcKind::neumann:
            eq.C = spec.bc.q0 / (gamma * std::pow(2.0, beta) * std::pow(a, m));
            eq.shape = [alpha](double z) { return g_neumann(z, alpha); };
            eq.dshape = [alpha](double z) { return g_neumann_prime(z, alpha); };
            break;
        case BcKind::robin:
        case BcKind::general: {
            GeneralParams p = as_general(spec);
            eq.C = k * spec.bc.u_inf /
                   (gamma * std::pow(2.0, beta + 1.0) * std::pow(a, m + 1.0));
            eq.shape = [p](double z) { return f_general_impl(z, p); };
            eq.dshape = [p](double z) { return f_general_prime_impl(z, p); };
            break;
        }
        case BcKind::dirichlet: {
            const LatentHeatLaw law = spec.law;
            eq.C = k * spec.bc.u0 /
                   (gamma * std::pow(2.0, beta + 1.0) * std::pow(a, m + 1.0));
            eq.shape = [law](double z) { return f_dirichlet(z, law); };
            eq.dshape = [law](double z) { return f_dirichlet_prime(z, law); };
            break;
        }
    }
    return eq;
}

struct IterationOutcome {
    double root = 0.0;
    int iterations = 0;
    bool used_bisection = false;
    bool converged = false;
};

// Bracket-safeguarded Newton on a monotone-decreasing residual: keeps
// (lo, hi) with value(lo) > 0 > value(hi), falls back to the midpoint when a
// Newton step leaves the bracket, stops when the step shrinks below tol.
IterationOutcome safeguarded_newton(const std::function<double(double)>& value,
                                    const std::function<double(double)>& slope,
                                    double z0, double lo, double hi, double tol,
                                    int max_iter) {
    IterationOutcome out;
    double z = std::clamp(z0, lo, hi);
    for (int i = 1; i <= max_iter; ++i) {
        out.iterations = i;
        const double Fz = value(z);
        if (Fz == 0.0) {
            out.root = z;
            out.converged = true;
            return out;
        }
        if (Fz > 0.0) lo = z; else hi = z;
        const double dF = slope(z);
        const double correction = Fz / dF;
        double next = z - correction;
        if (std::isfinite(next) && std::abs(correction) < tol) {
            // Newton's own correction is below tol: converged.  Decide this
            // before the bracket test — the bracket update above can pin the
            // current point to an endpoint and a sub-tol correction would
            // otherwise be mistaken for an escape and answered by a midpoint
            // step away from the root.
            out.root = std::clamp(next, lo, hi);
            out.converged = true;
            return out;
        }
        if (!std::isfinite(next) || next < lo || next > hi) {
            next = 0.5 * (lo + hi);
            out.used_bisection = true;
        }
        const double step = std::abs(next - z);
        z = next;
        if (step < tol) {
            // Stopped on a collapsed bracket; a couple of plain Newton steps
            // sharpen the O(tol) midpoint error to round-off.
            for (int j = 0; j < 2; ++j) {
                const double Fp = value(z);
                if (Fp == 0.0) break;
                const double polished = z - Fp / slope(z);
                if (!std::isfinite(polished) || polished < lo ||
                    polished > hi)
                    break;
                z = polished;
            }
            out.root = z;
            out.converged = true;
            return out;
        }
    }
    out.root = z;
    return out;
}

} // namespace

double f_general(double z, const ProblemSpec& spec) {
    return f_general_impl(z, as_general(spec));
}

double f_general_prime(double z, const ProblemSpec& spec) {
    return f_general_prime_impl(z, as_general(spec));
}

double f_dirichlet(double z, const LatentHeatLaw& law) {
    if (z <= 0.0) throw std::domain_error("f_dirichlet: z must be > 0");
    const double z2 = z * z;
    if (z2 > kUnderflowZ2) return 0.0;
    return 1.0 / (z * kummer_m(law.alpha() / 2 + 1.0, 1.5, z2));
}

double f_dirichlet_prime(double z, const LatentHeatLaw& law) {
    if (z <= 0.0) throw std::domain_error("f_dirichlet_prime: z must be > 0");
    const double z2 = z * z;
    if (z2 > kUnderflowZ2) return 0.0;
    const double f = f_dirichlet(z, law);
    return -f * f * kummer_m(law.alpha() / 2 + 1.0, 0.5, z2);
}

RootReport solve_xi(const ProblemSpec& raw, double tol, int max_iter) {
    const ProblemSpec spec = validate(raw);
    if (!(tol > 0.0) || tol >= 1.0)
        throw ValidationError("solve_xi: tol must be in (0, 1)");
    if (max_iter < 1) throw ValidationError("solve_xi: max_iter must be >= 1");

    const FrontEquation eq = front_equation(spec);
    auto F = [&](double z) { return eq.C * eq.shape(z) - std::pow(z, eq.m); };

    // Bracket: the residual is positive at 0+ and eventually negative.
    double lo = kBracketFloor;
    if (!(F(lo) > 0.0))
        throw SolveError("solve_xi: front coefficient below bracket floor " +
                         std::to_string(kBracketFloor));
    double hi = 1.0;
    while (F(hi) >= 0.0) {
        hi *= 2.0;
        if (hi > kBracketCeil)
            throw SolveError("solve_xi: failed to bracket the front "
                             "coefficient below " +
                             std::to_string(kBracketCeil));
    }

    double guess = std::min(0.5, std::pow(eq.C * eq.shape(1.0), 1.0 / eq.m));
    if (!std::isfinite(guess) || guess <= lo || guess >= hi)
        guess = std::clamp(guess, 2.0 * lo, 0.5 * (lo + hi));

    IterationOutcome outcome;
    if (eq.m > kLogFormThreshold) {
        // Steep power: iterate on G(w) = log C + log shape(e^w) - m w.
        auto G = [&](double w) {
            const double s = eq.shape(std::exp(w));
            if (s <= 0.0) return -std::numeric_limits<double>::infinity();
            return std::log(eq.C) + std::log(s) - eq.m * w;
        };
        auto Gp = [&](double w) {
            const double z = std::exp(w);
            return z * eq.dshape(z) / eq.shape(z) - eq.m;
        };
        outcome = safeguarded_newton(G, Gp, std::log(guess), std::log(lo),
                                     std::log(hi), tol, max_iter);
        outcome.root = std::exp(outcome.root);
    } else {
        auto Fp = [&](double z) {
            return eq.C * eq.dshape(z) - eq.m * std::pow(z, eq.m - 1.0);
        };
        outcome = safeguarded_newton(F, Fp, guess, lo, hi, tol, max_iter);
    }

    if (!outcome.converged)
        throw SolveError("solve_xi: no convergence in " +
                         std::to_string(max_iter) + " iterations");

    const double xi = outcome.root;
    const double residual = std::abs(F(xi));
    const double scale =
        std::max({std::abs(eq.C * eq.shape(xi)), std::pow(xi, eq.m), 1e-300});
    if (residual / scale > kResidualGate) {
        std::ostringstream msg;
        msg << "solve_xi: converged step but scaled residual "
            << std::scientific << residual / scale << " exceeds gate "
            << kResidualGate;
        throw SolveError(msg.str());
    }

    RootReport report;
    report.xi = xi;
    report.iterations = outcome.iterations;
    report.residual = residual;
    report.method = outcome.used_bisection ? RootMethod::bisection_fallback
                                           : RootMethod::newton;
    report.bracket_lo = lo;
    report.bracket_hi = hi;
    return report;
}

} // namespace stefan
