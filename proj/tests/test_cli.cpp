#include "doctest.h"

#include "wheelzeta/json_io.hpp"
#include "wheelzeta/wheel.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace wheelzeta;
using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(WHEELZETA_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

} // namespace

TEST_CASE("group sum") {
    const auto r = run("crit add --k 3 --q 3 --t 2 --config 2,4,2 --config 0,4,1");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out) == json::parse(R"({"result":[1,0,4]})"));
}

TEST_CASE("polynomials re-parse") {
    const auto r = run("poly wcyc --d 2");
    CHECK(r.status == 0);
    CHECK(polynomial_from_json(json::parse(r.out)) == wcyc(2));
    CHECK(polynomial_from_json(json::parse(run("poly wk --k 4").out)) == wheel_poly(4));
    CHECK(json::parse(run("poly wk --k 3 --eval 3,2").out)["value"] == "134");
    CHECK(json::parse(run("poly nk --k 3 --eval q=5,n1=9").out)["value"] == "108");
    CHECK(polynomial_from_json(json::parse(run("poly ecyc --d 3").out)).eval(5, 9) == 12);
}

TEST_CASE("group invariants") {
    CHECK(snf_from_json(json::parse(run("group wheel --k 3 --q 1 --t 1").out)).invariant_factors == std::vector<BigInt>{1, 4, 4});
    const auto d = json::parse(run("group deformed --k 2 --q 2 --t 7").out);
    CHECK(d["predicted_d1"] == "7");
    CHECK(d["d1"] == "7");
    const auto two = run("group two-by-two --k 4 --eval 3,2");
    CHECK(two.status == 0);
    CHECK(json::parse(two.out)["matches"] == true);
}

TEST_CASE("tree, shift, curve and language commands") {
    const auto tr = json::parse(run("crit tree --k 3 --q 3 --t 2 --config 4,1,0").out);
    CHECK(tr["spokes"] == json::parse(R"([{"vertex":1,"label":4}])"));
    CHECK(tr["arcs"].size() == 2);
    const auto sk = run("shift kernel --d 3 --q 1 --t 1");
    CHECK(sk.status == 0);
    CHECK(json::parse(sk.out)["kernel_size"] == "16");
    CHECK(json::parse(run("shift quad --k 3 --q 3 --t 2").out)["holds"] == true);
    CHECK(json::parse(run("shift embed --k1 3 --k2 6 --q 3 --t 2 --config 2,4,2").out)["result"] == json::parse("[2,4,2,2,4,2]"));
    CHECK(json::parse(run("curve count --p 5 --a 1 --b 1 --k 3").out)["n"] == "108");
    CHECK(json::parse(run("curve group --p 5 --a 1 --b 1").out)["invariants"] == json::parse(R"(["1","9"])"));
    CHECK(json::parse(run("curve cyc-kernel --p 5 --a 1 --b 1 --d 2").out)["n"] == "3");
    CHECK(json::parse(run("curve coker --p 5 --a 1,0 --b 1 --k 2").out)["matches"] == true);
    CHECK(json::parse(run("lang accept --q 3 --t 2 --word 4,1,0").out)["accepted"] == true);
    CHECK(json::parse(run("lang count --q 3 --t 2 --k 3").out)["count"] == "134");
    const auto z = json::parse(run("lang zeta --q 1 --t 1 --series 4").out);
    CHECK(z["num"] == json::parse(R"(["1","-2","1"])"));
    CHECK(z["series"].size() == 5);
    CHECK(json::parse(run("crit list --k 2 --q 3 --t 2").out)["order"] == "20");
}

TEST_CASE("exit codes") {
    CHECK(run("bogus").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("crit add --k 3 --q 3 --t 2 --config 2,4,2").status == 2);
    CHECK(run("crit tree --k 3 --q 3 --t 2 --config 0,5,0").status == 2);
    CHECK(run("curve count --p 4 --a 1 --b 1").status == 2);
    CHECK(run("curve count --p 5 --a 1,1 --b 1").status == 2);
    CHECK(run("crit list --k 9 --q 3 --t 3 --budget 100").status == 2);
    CHECK(run("--format text poly wk --k 2").status == 0);
}

TEST_CASE("verify command") {
    const auto r = run("verify --suite 1,2,9 --kmax 3");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out)["passed"] == true);
    CHECK(run("verify --suite nope").status == 2);
}
