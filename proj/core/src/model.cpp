#include <stefan/model.hpp>

#include <stefan/errors.hpp>

#include <cmath>
#include <sstream>

namespace stefan {

BoundaryCondition BoundaryCondition::dirichlet(double u0) {
    BoundaryCondition bc;
    bc.kind = BcKind::dirichlet;
    bc.u0 = u0;
    return bc;
}

BoundaryCondition BoundaryCondition::neumann(double q0) {
    BoundaryCondition bc;
    bc.kind = BcKind::neumann;
    bc.q0 = q0;
    return bc;
}

BoundaryCondition BoundaryCondition::robin(double h0, double u_inf) {
    BoundaryCondition bc;
    bc.kind = BcKind::robin;
    bc.h0 = h0;
    bc.u_inf = u_inf;
    bc.lambda = 1.0;
    return bc;
}

BoundaryCondition BoundaryCondition::general(double lambda, double h0,
                                             double u_inf) {
    BoundaryCondition bc;
    bc.kind = BcKind::general;
    bc.lambda = lambda;
    bc.h0 = h0;
    bc.u_inf = u_inf;
    return bc;
}

std::string to_string(BcKind kind) {
    switch (kind) {
        case BcKind::dirichlet: return "dirichlet";
        case BcKind::neumann: return "neumann";
        case BcKind::robin: return "robin";
        case BcKind::general: return "general";
    }
    return "?";
}

std::string describe(const BoundaryCondition& bc) {
    std::ostringstream os;
    os << to_string(bc.kind) << " (";
    switch (bc.kind) {
        case BcKind::dirichlet: os << "u0=" << bc.u0; break;
        case BcKind::neumann: os << "q0=" << bc.q0; break;
        case BcKind::robin: os << "h0=" << bc.h0 << ", u_inf=" << bc.u_inf; break;
        case BcKind::general:
            os << "lambda=" << bc.lambda << ", h0=" << bc.h0
               << ", u_inf=" << bc.u_inf;
            break;
    }
    os << ")";
    return os.str();
}

ProblemSpec validate(const ProblemSpec& spec) {
    std::vector<std::string> issues;
    auto finite = [&](double v, const char* name) {
        if (!std::isfinite(v)) {
            issues.push_back(std::string(name) + " must be finite");
            return false;
        }
        return true;
    };
    auto positive = [&](double v, const char* name) {
        if (finite(v, name) && v <= 0.0)
            issues.push_back(std::string(name) + " must be > 0 (got " +
                             std::to_string(v) + ")");
    };

    positive(spec.material.a, "a");
    positive(spec.material.k, "k");
    positive(spec.material.gamma, "gamma");

    const double beta = spec.law.beta;
    const double delta = spec.law.delta;
    if (finite(beta, "beta") && finite(delta, "delta")) {
        if (beta < delta)
            issues.push_back("beta >= delta is required (temperature growth "
                             "exponent alpha = beta - delta must be >= 0)");
        if (beta + delta + 1.0 <= 0.0)
            issues.push_back("beta + delta + 1 > 0 is required (front "
                             "equation exponent must be positive)");
    }

    switch (spec.bc.kind) {
        case BcKind::dirichlet:
            positive(spec.bc.u0, "u0");
            break;
        case BcKind::neumann:
            positive(spec.bc.q0, "q0");
            break;
        case BcKind::robin:
            positive(spec.bc.h0, "h0");
            positive(spec.bc.u_inf, "u_inf");
            break;
        case BcKind::general:
            positive(spec.bc.h0, "h0");
            positive(spec.bc.u_inf, "u_inf");
            if (finite(spec.bc.lambda, "lambda") && spec.bc.lambda < 0.0)
                issues.push_back("lambda must be >= 0 (got " +
                                 std::to_string(spec.bc.lambda) + ")");
            break;
    }

    if (!issues.empty()) {
        std::string msg = "invalid problem:";
        for (const auto& s : issues) msg += "\n  - " + s;
        throw ValidationError(msg, issues);
    }

    ProblemSpec out = spec;
    if (out.bc.kind == BcKind::robin) out.bc.lambda = 1.0;
    return out;
}

DimensionlessGroups dimensionless(const ProblemSpec& spec) {
    const double a = spec.material.a;
    const double k = spec.material.k;
    const double gamma = spec.material.gamma;
    const double bd = spec.law.beta + spec.law.delta;

    DimensionlessGroups g;
    switch (spec.bc.kind) {
        case BcKind::dirichlet:
            break; // no canonical groups for a prescribed-temperature face
        case BcKind::neumann:
            g.Q = spec.bc.q0 / (gamma * std::pow(a, bd + 1.0));
            break;
        case BcKind::robin:
        case BcKind::general:
            g.Ste = spec.bc.u_inf * k / (gamma * std::pow(a, bd + 2.0));
            g.Bi = a * spec.bc.h0 / k;
            break;
    }
    return g;
}

} // namespace stefan
