#include <doctest.h>

#include <stefan/cli.hpp>
#include <stefan/csv.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using stefan::cli::run;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& stem) {
    return std::filesystem::temp_directory_path() / stem;
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("table 1: golden output") {
    const RunResult r = cli({"table", "1"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "delta,beta,Q=0.1,Q=0.2,Q=0.3,Q=0.4,Q=0.5,flags\n"
          "0,0,0.0990,0.1927,0.2777,0.3531,0.4194,suspect-paper-cell\n"
          "0,1,0.2138,0.2912,0.3453,0.3875,0.4223,\n"
          "-0.5,0,0.0100,0.0398,0.0879,0.1496,0.2172,\n"
          "-0.5,1,0.1319,0.2016,0.2543,0.2970,0.3329,suspect-paper-cell\n"
          "1,1,0.3534,0.4357,0.4904,0.5321,0.5661,\n"
          "1,3,0.3838,0.4323,0.4627,0.4851,0.5031,\n");
}

TEST_CASE("table 2: golden output") {
    const RunResult r = cli({"table", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "delta,beta,Bi=1,Bi=10,Bi=50,Bi=100,xi_D\n"
          "0,0,0.2926,0.4422,0.4601,0.4625,0.4648\n"
          "0,1,0.3490,0.4485,0.4617,0.4635,0.4652\n"
          "-0.5,0,0.1430,0.3375,0.3617,0.3648,0.3680\n"
          "-0.5,1,0.2701,0.3837,0.3994,0.4015,0.4036\n"
          "1,1,0.4736,0.5514,0.5609,0.5621,0.5634\n"
          "1,3,0.4615,0.5181,0.5260,0.5270,0.5281\n");
}

TEST_CASE("solve: summary lines carry 12-digit scientific values") {
    const RunResult r = cli({"solve", "--bc", "neumann", "--q0", "0.1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bc: neumann (q0=0.1)\n") != std::string::npos);
    CHECK(r.out.find("xi: 9.90242125377e-02\n") != std::string::npos);
    CHECK(r.out.find("groups: Q=1.00000000000e-01\n") != std::string::npos);
    CHECK(r.out.find("c2=-2.00000000000e-01") != std::string::npos);
    CHECK(r.out.find("regime=sublinear") != std::string::npos);
    CHECK(r.out.find("method=newton") != std::string::npos);
}

TEST_CASE("eval: header, row count, beyond-front zeros") {
    const RunResult r = cli({"eval", "--bc", "dirichlet", "--u0", "0.5",
                             "--nx", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("t,x,eta,u\n", 0) == 0);
    CHECK(count_lines(r.out) == 1 + 5); // header + nx rows at the single t=1
    CHECK(r.out.find("1.00000000000e+00,0.00000000000e+00,"
                     "0.00000000000e+00,5.00000000000e-01\n") !=
          std::string::npos);

    const RunResult ext = cli({"eval", "--bc", "dirichlet", "--u0", "0.5",
                               "--nx", "3", "--extend", "1.2"});
    CHECK(ext.code == 0);
    // Last sample sits past the front: temperature is identically zero.
    CHECK(ext.out.find(",0.00000000000e+00\n") != std::string::npos);

    const RunResult grid =
        cli({"eval", "--bc", "dirichlet", "--u0", "0.5", "--t-min", "0.5",
             "--t-max", "2.0", "--nt", "4", "--nx", "3"});
    CHECK(grid.code == 0);
    CHECK(count_lines(grid.out) == 1 + 4 * 3);

    // A multi-time request without a time range is an input error.
    const RunResult bad =
        cli({"eval", "--bc", "dirichlet", "--u0", "0.5", "--nt", "2"});
    CHECK(bad.code == 2);
}

TEST_CASE("front: header and square-root law in the rows") {
    const RunResult r = cli({"front", "--bc", "dirichlet", "--u0", "0.5",
                             "--t-min", "0.5", "--t-max", "2.0", "--nt", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("t,s,sdot\n", 0) == 0);
    CHECK(count_lines(r.out) == 4);
    // At t = 0.5 the rate s/(2t) equals s, so both columns agree.
    CHECK(r.out.find("5.00000000000e-01,6.57306552578e-01,"
                     "6.57306552578e-01\n") != std::string::npos);
}

TEST_CASE("latent: regime header comment") {
    const RunResult r = cli({"latent", "--bc", "neumann", "--q0", "0.4",
                             "--beta", "3", "--delta", "1", "--t-min", "0.5",
                             "--t-max", "2.0", "--nt", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# power=1 regime=linear\n", 0) == 0);
    CHECK(r.out.find("\nt,L\n") != std::string::npos);
    CHECK(count_lines(r.out) == 4);
}

TEST_CASE("sweep: csv of the swept group against the front coefficient") {
    const RunResult r = cli({"sweep", "--bc", "neumann", "--param", "Q",
                             "--values", "0.1", "0.2", "0.3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "Q,xi\n"
          "1.00000000000e-01,9.90242125377e-02\n"
          "2.00000000000e-01,1.92708879599e-01\n"
          "3.00000000000e-01,2.77729784179e-01\n");

    // Ste sweeps require the transfer coefficient to pin the Robin problem.
    const RunResult bad =
        cli({"sweep", "--bc", "robin", "--param", "Ste", "--values", "0.5"});
    CHECK(bad.code == 2);
    const RunResult ok = cli({"sweep", "--bc", "robin", "--h0", "10",
                              "--param", "Ste", "--values", "0.1", "0.5"});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("Ste,xi\n", 0) == 0);
}

TEST_CASE("verify: gate lines and the overall verdict") {
    const RunResult r = cli({"verify", "--bc", "dirichlet", "--u0", "0.5"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 5);
    CHECK(r.out.find("pde_max_rel=") != std::string::npos);
    CHECK(r.out.find("gate=1.00000000000e-06 PASS") != std::string::npos);
    CHECK(r.out.find("verification: PASS\n") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("equiv: to-dirichlet summary") {
    const RunResult r = cli({"equiv", "--bc", "robin", "--h0", "10",
                             "--u_inf", "0.5", "--beta", "1", "--delta",
                             "-0.5", "--direction", "to-dirichlet"});
    CHECK(r.code == 0);
    CHECK(r.out.find("u0: 4.32895785320e-01\n") != std::string::npos);
    CHECK(r.out.find("xi_source: 3.83731387385e-01\n") != std::string::npos);
    const size_t gap_at = r.out.find("gap: ");
    REQUIRE(gap_at != std::string::npos);
    CHECK(std::stod(r.out.substr(gap_at + 5)) < 1e-10);

    const RunResult inv = cli({"equiv", "--bc", "dirichlet", "--u0", "0.4",
                               "--u_inf", "0.9", "--direction",
                               "from-dirichlet"});
    CHECK(inv.code == 0);
    CHECK(inv.out.find("h0:") != std::string::npos);

    // from-dirichlet without the ambient datum cannot build the target.
    const RunResult bad = cli({"equiv", "--bc", "dirichlet", "--u0", "0.4",
                               "--direction", "from-dirichlet"});
    CHECK(bad.code == 2);
}

TEST_CASE("determinism: repeated invocations are byte-identical") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"table", "1"},
          {"eval", "--bc", "robin", "--h0", "3", "--u_inf", "0.7", "--beta",
           "2", "--delta", "0.5", "--nx", "9"},
          {"verify", "--bc", "neumann", "--q0", "0.3", "--beta", "1"}}) {
        const RunResult first = cli(args);
        const RunResult second = cli(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("exit codes: invalid input -> 2") {
    CHECK(cli({"solve", "--bc", "nope", "--u0", "1"}).code == 2);
    CHECK(cli({"solve", "--bc", "neumann", "--q0", "-1"}).code == 2);
    CHECK(cli({"table", "3"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"solve", "--bc", "dirichlet", "--u0", "1", "--nonsense"})
              .code == 2);
    CHECK(cli({"solve", "--bc", "dirichlet"}).code == 2); // u0 required
    const RunResult bad = cli({"solve", "--bc", "neumann", "--q0", "-1"});
    CHECK(bad.out.empty());
    CHECK(bad.err.rfind("error:", 0) == 0);
}

TEST_CASE("exit codes: non-convergence -> 3") {
    const RunResult r = cli({"solve", "--bc", "dirichlet", "--u0", "1",
                             "--max_iter", "2"});
    CHECK(r.code == 3);
    CHECK(r.err.rfind("error:", 0) == 0);
}

TEST_CASE("exit codes: verification failure -> 4") {
    const RunResult r = cli({"verify", "--bc", "dirichlet", "--u0", "0.5",
                             "--corrupt-c1", "1e-6"});
    CHECK(r.code == 4);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("verification: FAIL\n") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"solve", "--help"}).code == 0);
    CHECK(cli({"--help"}).out.find("solve") != std::string::npos);
}

TEST_CASE("config file merges under explicit flags") {
    const std::filesystem::path path = temp_file("stefan_cli_merge.cfg");
    {
        std::ofstream f(path);
        f << "# shared problem setup\n"
          << "bc = neumann\n"
          << "q0 = 0.1\n"
          << "beta = 1\n";
    }
    const RunResult base = cli({"solve", "--config", path.string()});
    CHECK(base.code == 0);
    CHECK(base.out.find("beta=1") != std::string::npos);

    // A flag overrides the same key from the file.
    const RunResult override_run =
        cli({"solve", "--config", path.string(), "--q0", "0.2"});
    CHECK(override_run.code == 0);
    CHECK(override_run.out.find("q0=0.2") != std::string::npos);
    CHECK(override_run.out != base.out);

    const RunResult missing = cli({"solve", "--config", "/nonexistent.cfg"});
    CHECK(missing.code == 2);
    std::remove(path.string().c_str());
}

TEST_CASE("--output redirects the payload to a file") {
    const std::filesystem::path path = temp_file("stefan_cli_out.csv");
    std::remove(path.string().c_str());
    const RunResult r =
        cli({"table", "1", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str().rfind("delta,beta,Q=0.1", 0) == 0);
    CHECK(count_lines(buf.str()) == 7);
    std::remove(path.string().c_str());

    CHECK(cli({"table", "1", "--output", "/no/such/dir/x.csv"}).code == 2);
}

TEST_CASE("csv formatting primitives") {
    using stefan::format_sci;
    using stefan::format_short;
    using stefan::format_table;

    CHECK(format_sci(1.0) == "1.00000000000e+00");
    CHECK(format_sci(-0.2) == "-2.00000000000e-01");
    CHECK(format_sci(0.099024212537655727) == "9.90242125377e-02");
    CHECK(format_sci(0.0) == "0.00000000000e+00");
    CHECK(format_sci(-0.0) == "0.00000000000e+00"); // sign of zero dropped
    CHECK(format_sci(1e-300) == "1.00000000000e-300");
    CHECK(format_sci(123456789.0) == "1.23456789000e+08");

    CHECK(format_table(0.09902421) == "0.0990");
    CHECK(format_table(0.41935) == "0.4194"); // ties away on the stored value
    CHECK(format_table(-0.5) == "-0.5000");
    CHECK(format_table(0.0) == "0.0000");

    CHECK(format_short(1.0) == "1");
    CHECK(format_short(-0.5) == "-0.5");
    CHECK(format_short(0.1) == "0.1");
    CHECK(format_short(-0.0) == "0");
}
