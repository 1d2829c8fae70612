#pragma once

#include <stefan/model.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace stefan {

// Flat key=value run configuration.  Recognized keys:
//   beta, delta, gamma, a, k, bc, u0, q0, h0, u_inf, lambda, tol, max_iter
// bc is one of: dirichlet | neumann | robin | general.
// Lines may be blank or start with '#'.  Unknown keys are an error.
struct Config {
    std::optional<double> beta, delta, gamma, a, k;
    std::optional<double> u0, q0, h0, u_inf, lambda;
    std::optional<double> tol;
    std::optional<int> max_iter;
    std::optional<BcKind> bc;
};

Config parse_config_text(const std::string& text);
Config parse_config_file(const std::filesystem::path& path);

// Parses "dirichlet" | "neumann" | "robin" | "general"; throws
// ValidationError otherwise.
BcKind parse_bc_name(const std::string& name);

// Field-wise merge; values present in `over` win.
Config merge(const Config& base, const Config& over);

// Builds a ProblemSpec from a config, applying defaults
// (a = k = gamma = 1, beta = delta = 0) and validating.  Requires bc to be
// set and the bc-specific constants to be present.
ProblemSpec build_spec(const Config& cfg);

// Solver controls with defaults applied (tol = 1e-10, max_iter = 100).
double config_tol(const Config& cfg);
int config_max_iter(const Config& cfg);

} // namespace stefan
