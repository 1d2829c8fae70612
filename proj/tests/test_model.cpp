#include <doctest.h>

#include <stefan/errors.hpp>
#include <stefan/model.hpp>

#include <cmath>
#include <string>

using namespace stefan;

namespace {

ProblemSpec neumann_spec(double q0, double beta = 0.0, double delta = 0.0) {
    ProblemSpec s;
    s.law = {beta, delta};
    s.bc = BoundaryCondition::neumann(q0);
    return s;
}

} // namespace

TEST_CASE("validate: accepts the classical problem and fills robin lambda") {
    ProblemSpec s;
    s.bc = BoundaryCondition::robin(2.0, 0.5);
    const ProblemSpec v = validate(s);
    CHECK(v.bc.lambda == 1.0);
    CHECK(v.law.alpha() == 0.0);
}

TEST_CASE("validate: rejects beta < delta") {
    ProblemSpec s = neumann_spec(1.0, 0.0, 0.5);
    CHECK_THROWS_AS(validate(s), ValidationError);
}

TEST_CASE("validate: rejects beta + delta + 1 <= 0") {
    ProblemSpec s = neumann_spec(1.0, -0.5, -0.6);
    CHECK_THROWS_AS(validate(s), ValidationError);
    s = neumann_spec(1.0, -0.5, -0.5); // exactly zero
    CHECK_THROWS_AS(validate(s), ValidationError);
    s = neumann_spec(1.0, -0.45, -0.5);
    CHECK_NOTHROW(validate(s));
}

TEST_CASE("validate: rejects non-positive constants, collecting all issues") {
    ProblemSpec s = neumann_spec(-1.0);
    s.material.a = 0.0;
    s.material.gamma = -2.0;
    try {
        validate(s);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.issues().size() == 3);
        CHECK(std::string(e.what()).find("q0") != std::string::npos);
        CHECK(std::string(e.what()).find("gamma") != std::string::npos);
    }
}

TEST_CASE("validate: per-kind boundary constants") {
    ProblemSpec s;
    s.bc = BoundaryCondition::dirichlet(0.0);
    CHECK_THROWS_AS(validate(s), ValidationError);
    s.bc = BoundaryCondition::robin(1.0, 0.0);
    CHECK_THROWS_AS(validate(s), ValidationError);
    s.bc = BoundaryCondition::robin(0.0, 1.0);
    CHECK_THROWS_AS(validate(s), ValidationError);
    s.bc = BoundaryCondition::general(-0.5, 1.0, 1.0); // lambda < 0
    CHECK_THROWS_AS(validate(s), ValidationError);
    s.bc = BoundaryCondition::general(0.0, 1.0, 1.0); // lambda = 0 is fine
    CHECK_NOTHROW(validate(s));
    s.bc.kind = BcKind::neumann;
    s.bc.q0 = std::nan("");
    CHECK_THROWS_AS(validate(s), ValidationError);
}

TEST_CASE("dimensionless: per-kind groups") {
    ProblemSpec s = neumann_spec(0.3, 1.0, 0.5);
    s.material.a = 2.0;
    s.material.gamma = 0.25;
    DimensionlessGroups g = dimensionless(validate(s));
    REQUIRE(g.Q.has_value());
    CHECK(!g.Ste);
    CHECK(!g.Bi);
    // Q = q0 / (gamma a^{beta+delta+1}), exponent 2.5 here.
    CHECK(*g.Q == doctest::Approx(0.3 / (0.25 * std::pow(2.0, 2.5))));

    ProblemSpec r;
    r.law = {1.0, 0.0};
    r.material = {2.0, 3.0, 0.5};
    r.bc = BoundaryCondition::robin(5.0, 0.7);
    g = dimensionless(validate(r));
    REQUIRE(g.Ste.has_value());
    REQUIRE(g.Bi.has_value());
    CHECK(!g.Q);
    CHECK(*g.Ste == doctest::Approx(0.7 * 3.0 / (0.5 * std::pow(2.0, 3.0))));
    CHECK(*g.Bi == doctest::Approx(2.0 * 5.0 / 3.0));

    ProblemSpec d;
    d.bc = BoundaryCondition::dirichlet(1.0);
    g = dimensionless(validate(d));
    CHECK(!g.Q);
    CHECK(!g.Ste);
    CHECK(!g.Bi);
}

TEST_CASE("dimensionless: groups invariant under data/latent rescaling") {
    // (q0, gamma) -> (c q0, c gamma) leaves Q unchanged; same joint scaling
    // for the robin pair (u_inf stays, gamma and h0/k scalings cancel in Ste
    // and Bi respectively).
    for (double c : {0.5, 2.0, 7.3}) {
        ProblemSpec s = neumann_spec(0.3, 1.0, 0.5);
        const double q = *dimensionless(validate(s)).Q;
        s.bc.q0 *= c;
        s.material.gamma *= c;
        CHECK(*dimensionless(validate(s)).Q == doctest::Approx(q).epsilon(1e-15));

        ProblemSpec r;
        r.bc = BoundaryCondition::robin(5.0, 0.7);
        const DimensionlessGroups g0 = dimensionless(validate(r));
        r.bc.u_inf *= c;
        r.material.gamma *= c;
        CHECK(*dimensionless(validate(r)).Ste ==
              doctest::Approx(*g0.Ste).epsilon(1e-15));
        r.bc.h0 *= c;
        r.material.k *= c;
        CHECK(*dimensionless(validate(r)).Bi ==
              doctest::Approx(*g0.Bi).epsilon(1e-15));
    }
}

TEST_CASE("describe and to_string name the condition kinds") {
    CHECK(to_string(BcKind::dirichlet) == "dirichlet");
    CHECK(to_string(BcKind::neumann) == "neumann");
    CHECK(to_string(BcKind::robin) == "robin");
    CHECK(to_string(BcKind::general) == "general");
    CHECK(describe(BoundaryCondition::neumann(0.1)).find("q0") !=
          std::string::npos);
    CHECK(describe(BoundaryCondition::general(2.0, 3.0, 0.7)).find("lambda") !=
          std::string::npos);
}
