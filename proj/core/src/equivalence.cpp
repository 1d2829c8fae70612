#include <stefan/equivalence.hpp>

#include <stefan/errors.hpp>
#include <stefan/kummer.hpp>
#include <stefan/solver.hpp>

#include <cmath>
#include <string>

namespace stefan {

ProblemSpec dirichlet_from_general(const ProblemSpec& spec,
                                   const SimilaritySolution& sol) {
    if (spec.bc.kind == BcKind::dirichlet)
        throw ValidationError(
            "dirichlet_from_general: source is already dirichlet");
    // The equivalent prescribed-temperature datum is the solution's own
    // fixed-face coefficient: u(0,t) = c1 t^(alpha/2).
    if (!(sol.c1 > 0.0))
        throw VerificationError(
            "dirichlet_from_general: fixed-face coefficient must be > 0");
    ProblemSpec out = spec;
    out.bc = BoundaryCondition::dirichlet(sol.c1);
    return validate(out);
}

ProblemSpec general_from_dirichlet(const ProblemSpec& dirichlet_spec,
                                   const SimilaritySolution& dirichlet_sol,
                                   double lambda, double u_inf) {
    if (dirichlet_spec.bc.kind != BcKind::dirichlet)
        throw ValidationError("general_from_dirichlet: source must be dirichlet");
    if (!(lambda >= 0.0))
        throw ValidationError("general_from_dirichlet: lambda must be >= 0");
    const double u0 = dirichlet_spec.bc.u0;
    if (!(lambda * u0 < u_inf))
        throw ValidationError(
            "general_from_dirichlet: lambda*u0 < u_inf is required (got "
            "lambda*u0 = " +
            std::to_string(lambda * u0) + ", u_inf = " + std::to_string(u_inf) +
            ")");

    const double a = dirichlet_spec.material.a;
    const double k = dirichlet_spec.material.k;
    const double xi = dirichlet_sol.xi;
    const double alpha = dirichlet_spec.law.alpha();
    const double M1 = kummer_m(-alpha / 2, 0.5, -xi * xi);
    const double M3 = kummer_m(-alpha / 2 + 0.5, 1.5, -xi * xi);
    const double h0 =
        -k * u0 * M1 / (2.0 * a * xi * M3 * (lambda * u0 - u_inf));

    ProblemSpec out = dirichlet_spec;
    out.bc = BoundaryCondition::general(lambda, h0, u_inf);
    return validate(out);
}

EquivalenceRecord equivalence_record(const ProblemSpec& source, double tol,
                                     int max_iter) {
    EquivalenceRecord rec;
    rec.source_spec = validate(source);
    const SimilaritySolution sol = solve_problem(rec.source_spec, tol, max_iter);
    rec.xi_source = sol.xi;
    rec.target_spec = dirichlet_from_general(rec.source_spec, sol);
    rec.xi_target = solve_xi(rec.target_spec, tol, max_iter).xi;
    rec.max_xi_gap = std::abs(rec.xi_source - rec.xi_target);
    return rec;
}

RobinLimitStudy robin_limit_study(const ProblemSpec& base,
                                  std::span<const double> bi_values,
                                  double tol, int max_iter) {
    const ProblemSpec spec = validate(base);
    if (spec.bc.kind != BcKind::robin)
        throw ValidationError("robin_limit_study: base spec must be robin");
    if (bi_values.empty())
        throw ValidationError("robin_limit_study: need at least one Bi value");
    for (size_t i = 0; i + 1 < bi_values.size(); ++i)
        if (!(bi_values[i] < bi_values[i + 1]))
            throw ValidationError(
                "robin_limit_study: Bi values must be strictly ascending");
    if (!(bi_values.front() > 0.0))
        throw ValidationError("robin_limit_study: Bi values must be > 0");

    const double a = spec.material.a;
    const double k = spec.material.k;

    RobinLimitStudy study;
    ProblemSpec dir = spec;
    dir.bc = BoundaryCondition::dirichlet(spec.bc.u_inf);
    study.xi_d_inf = solve_xi(dir, tol, max_iter).xi;

    for (double bi : bi_values) {
        ProblemSpec rs = spec;
        rs.bc = BoundaryCondition::robin(bi * k / a, spec.bc.u_inf);
        RobinLimitEntry e;
        e.bi = bi;
        e.xi_r = solve_xi(rs, tol, max_iter).xi;
        e.gap = study.xi_d_inf - e.xi_r;
        study.entries.push_back(e);
    }

    for (size_t i = 0; i < study.entries.size(); ++i) {
        const auto& e = study.entries[i];
        if (!(e.gap > 0.0))
            throw VerificationError(
                "robin_limit_study: gap to the dirichlet limit must stay "
                "positive (Bi=" +
                std::to_string(e.bi) + ")");
        if (i > 0 && !(e.xi_r > study.entries[i - 1].xi_r &&
                       e.gap < study.entries[i - 1].gap))
            throw VerificationError(
                "robin_limit_study: front coefficient must increase and the "
                "gap decrease along ascending Bi (Bi=" +
                std::to_string(e.bi) + ")");
    }
    return study;
}

} // namespace stefan
