#include <stefan/config.hpp>

#include <stefan/errors.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace stefan {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view key, std::string_view value) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ValidationError("config: key '" + std::string(key) +
                              "' expects a number, got '" + std::string(value) +
                              "'");
    return v;
}

int parse_int(std::string_view key, std::string_view value) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ValidationError("config: key '" + std::string(key) +
                              "' expects an integer, got '" +
                              std::string(value) + "'");
    return v;
}

} // namespace

BcKind parse_bc_name(const std::string& name) {
    if (name == "dirichlet") return BcKind::dirichlet;
    if (name == "neumann") return BcKind::neumann;
    if (name == "robin") return BcKind::robin;
    if (name == "general") return BcKind::general;
    throw ValidationError(
        "bc must be one of dirichlet|neumann|robin|general, got '" + name +
        "'");
}

Config parse_config_text(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": expected key=value, got '" + raw + "'");
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": empty key or value");

        if (key == "beta") cfg.beta = parse_double(key, value);
        else if (key == "delta") cfg.delta = parse_double(key, value);
        else if (key == "gamma") cfg.gamma = parse_double(key, value);
        else if (key == "a") cfg.a = parse_double(key, value);
        else if (key == "k") cfg.k = parse_double(key, value);
        else if (key == "bc") cfg.bc = parse_bc_name(std::string(value));
        else if (key == "u0") cfg.u0 = parse_double(key, value);
        else if (key == "q0") cfg.q0 = parse_double(key, value);
        else if (key == "h0") cfg.h0 = parse_double(key, value);
        else if (key == "u_inf") cfg.u_inf = parse_double(key, value);
        else if (key == "lambda") cfg.lambda = parse_double(key, value);
        else if (key == "tol") cfg.tol = parse_double(key, value);
        else if (key == "max_iter") cfg.max_iter = parse_int(key, value);
        else
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": unknown key '" + std::string(key) + "'");
    }
    return cfg;
}

Config parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("config: cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

Config merge(const Config& base, const Config& over) {
    Config out = base;
    auto pick = [](auto& dst, const auto& src) {
        if (src) dst = src;
    };
    pick(out.beta, over.beta);
    pick(out.delta, over.delta);
    pick(out.gamma, over.gamma);
    pick(out.a, over.a);
    pick(out.k, over.k);
    pick(out.u0, over.u0);
    pick(out.q0, over.q0);
    pick(out.h0, over.h0);
    pick(out.u_inf, over.u_inf);
    pick(out.lambda, over.lambda);
    pick(out.tol, over.tol);
    pick(out.max_iter, over.max_iter);
    pick(out.bc, over.bc);
    return out;
}

ProblemSpec build_spec(const Config& cfg) {
    if (!cfg.bc)
        throw ValidationError("config: bc is required "
                              "(dirichlet|neumann|robin|general)");

    std::vector<std::string> missing;
    auto need = [&](const std::optional<double>& v, const char* name) {
        if (!v) missing.push_back(name);
        return v.value_or(0.0);
    };

    ProblemSpec spec;
    spec.material.a = cfg.a.value_or(1.0);
    spec.material.k = cfg.k.value_or(1.0);
    spec.material.gamma = cfg.gamma.value_or(1.0);
    spec.law.beta = cfg.beta.value_or(0.0);
    spec.law.delta = cfg.delta.value_or(0.0);

    switch (*cfg.bc) {
        case BcKind::dirichlet:
            spec.bc = BoundaryCondition::dirichlet(need(cfg.u0, "u0"));
            break;
        case BcKind::neumann:
            spec.bc = BoundaryCondition::neumann(need(cfg.q0, "q0"));
            break;
        case BcKind::robin:
            spec.bc = BoundaryCondition::robin(need(cfg.h0, "h0"),
                                               need(cfg.u_inf, "u_inf"));
            break;
        case BcKind::general:
            spec.bc = BoundaryCondition::general(cfg.lambda.value_or(1.0),
                                                 need(cfg.h0, "h0"),
                                                 need(cfg.u_inf, "u_inf"));
            break;
    }
    if (!missing.empty()) {
        std::string msg =
            "config: bc=" + to_string(*cfg.bc) + " requires key(s):";
        for (const auto& m : missing) msg += " " + m;
        throw ValidationError(msg, missing);
    }
    return validate(spec);
}

double config_tol(const Config& cfg) {
    double tol = cfg.tol.value_or(1e-10);
    if (!(tol > 0.0) || tol >= 1.0)
        throw ValidationError("config: tol must be in (0, 1)");
    return tol;
}

int config_max_iter(const Config& cfg) {
    int n = cfg.max_iter.value_or(100);
    if (n < 1) throw ValidationError("config: max_iter must be >= 1");
    return n;
}

} // namespace stefan
