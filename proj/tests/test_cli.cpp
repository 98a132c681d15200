#include "mpls/cli.hpp"
#include "support.hpp"

#include <json.hpp>

#include <sstream>

namespace {

struct Run {
    int code;
    std::string out, err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = mpls::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hilbert") {
    Run r = run({"hilbert", "--place", "q2", "--a", "2", "--b", "5"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["schema"] == 1);
    CHECK(j["value"] == -1);
    CHECK(run({"hilbert", "--place", "r", "--a", "-1", "--b", "-1"}).json()["value"] == -1);
}

TEST_CASE("tables") {
    Run r = run({"table", "--kind", "q2-weil"});
    REQUIRE(r.code == 0);
    auto rows = r.json()["rows"];
    CHECK(rows.size() == 8);
    Run t = run({"table", "--kind", "q2-weil", "--format", "table"});
    CHECK(t.code == 0);
    CHECK(t.out.find("unit_mod_8") != std::string::npos);
}

TEST_CASE("cocycle and metaplectic products") {
    Run r = run({"cocycle", "--place", "q3", "--g", "[[0,1],[-1,0]]", "--h", "[[-1,0],[0,-1]]"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["value"] == 1);
    Run k = run({"cocycle", "--place", "q2", "--g", "[[0,1],[-1,0]]", "--h", "[[-1,0],[0,-1]]", "--kubota"});
    REQUIRE(k.code == 0);
    CHECK(k.json()["value"] == -1);
    Run m = run({"mp-mul", "--place", "q2", "--elements",
                 R"([[[[0,1],[-1,0]],1],[[[0,1],[-1,0]],1],[[[0,1],[-1,0]],1],[[[0,1],[-1,0]],1]])"});
    REQUIRE(m.code == 0);
    CHECK(m.json()["eps"] == -1);
    Run b = run({"bruhat", "--g", "[[1,0],[3,1]]"});
    REQUIRE(b.code == 0);
    CHECK(b.json()["cell"] == 1);
}

TEST_CASE("local coefficient decomposition") {
    Run r = run({"local-coef", "--prime", "3", "--char", "trivial", "--emit", "decomposition"});
    REQUIRE(r.code == 0);
    auto d = r.json()["decomposition"];
    CHECK(d["I0"][0].get<double>() == doctest::Approx(2.0 / 3.0));
    CHECK(d["I1"][0].get<double>() == doctest::Approx(0.0));
    CHECK(d["J"][0][0].get<double>() == doctest::Approx(1.0 / std::sqrt(3.0)));
    Run both = run({"local-coef", "--prime", "5", "--char", "legendre", "--mode", "both", "--s", "0.3,0.2"});
    CHECK(both.code == 0);
    Run real = run({"local-coef", "--place", "r", "--parity", "1", "--a", "1", "--b", "1", "--s", "0.5"});
    REQUIRE(real.code == 0);
    auto v = real.json()["values"][0];
    CHECK(v["gamma_form"][0].get<double>() == doctest::Approx(std::cos(M_PI / 4) / (2 * std::sqrt(M_PI))));
    CHECK(v["L_form"][1].get<double>() == doctest::Approx(-std::sin(M_PI / 4) / (2 * std::sqrt(M_PI))));
}

TEST_CASE("exit codes") {
    CHECK(run({"hilbert", "--place", "q4", "--a", "2", "--b", "5"}).code == 1);
    CHECK(run({"hilbert", "--place", "q2", "--a", "0", "--b", "5"}).code == 1);
    CHECK(run({"hilbert", "--place", "q2", "--a", "x/2", "--b", "5"}).code == 1);
    CHECK(run({"cocycle", "--place", "q3", "--g", "[[1,1],[1,1]]", "--h", "[[1,0],[0,1]]"}).code == 1);
    CHECK(run({"nosuch"}).code == 1);
    CHECK(run({"verify", "--suite", "nosuch", "--seed", "1"}).code == 1);
    // A tolerance no numeric check can meet makes the run a verification failure.
    CHECK(run({"local-coef", "--prime", "5", "--char", "unramified:0.6,0.8", "--mode", "both", "--s", "0.3,0.2",
               "--tol", "1e-300"})
              .code == 2);
}

TEST_CASE("verify is deterministic") {
    std::vector<std::string> args = {"verify", "--suite", "cocycle", "--n", "2", "--place", "q3", "--trials", "500", "--seed", "7"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run g1 = run({"gamma", "--kind", "sym2", "--params", "0.6,0.8;1", "--q", "5", "--s", "0.3"});
    Run g2 = run({"gamma", "--kind", "sym2", "--params", "0.6,0.8;1", "--q", "5", "--s", "0.3"});
    CHECK(g1.code == 0);
    CHECK(g1.out == g2.out);
}
