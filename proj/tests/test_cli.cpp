#include "hds/cli.hpp"
#include "hds/verify.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using hds::Json;

namespace {

struct Outcome {
    int code;
    std::string out, err;

    Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args, const std::string &stdin_text = "")
{
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int code = hds::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

Json strings(std::initializer_list<const char *> xs)
{
    Json j = Json::array();
    for (const char *x : xs)
        j.push_back(x);
    return j;
}

} // namespace

TEST_CASE("cascade command")
{
    auto r = call({"cascade", "--group", "su", "--p", "2", "--q", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"cascade":[["1","0","0","0","-1"],["0","1","0","-1","0"]]})"
                   "\n");
}

TEST_CASE("blattner-param on the Sp(4,R) counterexample")
{
    auto r = call({"blattner-param", "--group", "sp", "--n", "4", "--lambda", "5,3,1,-2"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["Lambda"] == strings({"6", "5", "3", "-1"}));
    CHECK(j["condition_1_2"] == false);
}

TEST_CASE("admissible command")
{
    auto q = call({"admissible", "--group", "su", "--p", "2", "--q", "3", "--subgroup", "su-q-block"}).json();
    CHECK(q["status"] == "Admissible");
    CHECK(q["certificate"] == "ConeKernelTrivial");
    auto p = call({"admissible", "--group", "su", "--p", "2", "--q", "3", "--subgroup", "su-p-block"}).json();
    CHECK(p["status"] == "NotAdmissible");
    CHECK(p["witness_ray"] == strings({"1", "1", "0", "-1", "-1"}));
}

TEST_CASE("pair, cone and chambers commands")
{
    auto pair = call({"pair", "--group", "sp", "--n", "2"});
    REQUIRE(pair.code == 0);
    CHECK(pair.json()["noncompact_positives"].size() == 3);
    auto cone = call({"cone", "--group", "sp", "--n", "2"}).json();
    CHECK(cone["cone_generators"] == Json::array({strings({"2", "0"}), strings({"2", "2"})}));
    auto ch = call({"chambers", "--group", "sp", "--n", "2"}).json();
    CHECK(ch["chambers"].size() == 4);
}

TEST_CASE("multiplicity commands")
{
    auto k = call({"kmult", "--group", "sp", "--n", "2", "--Lambda", "3,3", "--mu", "5,3"});
    CHECK(k.code == 0);
    CHECK(k.json()["mult"] == 1);
    auto b = call({"blattner", "--group", "sp", "--n", "1", "--lambda", "3", "--mu", "6"});
    CHECK(b.json()["mult"] == 1);
    auto h = call({"hmult", "--group", "sp", "--n", "2", "--subgroup", "torus", "--Lambda", "3,3", "--mu", "4,4"}).json();
    CHECK(h["value"] == 1);
    CHECK(h["complete"] == true);
    auto d = call({"ds-hmult", "--group", "sp", "--n", "2", "--subgroup", "torus", "--lambda", "2,1", "--mu", "5,3"});
    CHECK(d.json()["value"] == 1);
    auto s = call({"schmid", "--group", "sp", "--n", "2", "--degree", "2"}).json();
    CHECK(s["terms"].size() == 2);
}

TEST_CASE("domain errors exit 2 with an error object")
{
    auto r = call({"blattner", "--group", "sp", "--n", "4", "--lambda", "5,3,1,-2", "--mu", "6,5,3,-1"});
    CHECK(r.code == 2);
    auto j = r.json();
    CHECK(j["error"]["kind"] == "condition_1_2");
    CHECK(j["error"]["message"].is_string());
    CHECK(call({"kmult", "--group", "sp", "--n", "2", "--Lambda", "3,3", "--mu", "3,4"}).code == 2);
    CHECK(call({"hmult", "--group", "su", "--p", "2", "--q", "3", "--subgroup", "su-p-block", "--Lambda",
                "2,2,-1,-1,-2", "--mu", "0,0"})
              .json()["error"]["kind"] == "not_admissible");
}

TEST_CASE("usage errors exit 1")
{
    CHECK(call({}).code == 1);
    CHECK(call({"bogus"}).code == 1);
    CHECK(call({"cascade", "--group", "xx", "--p", "1"}).code == 1);
    CHECK(call({"cascade", "--group", "su", "--p", "2"}).code == 1);
    CHECK(call({"kmult", "--group", "sp", "--n", "2", "--Lambda", "3", "--mu", "3,3"}).code == 1);
    CHECK(call({"kmult", "--group", "sp", "--n", "2", "--Lambda", "a,b", "--mu", "3,3"}).code == 1);
    CHECK(call({"admissible", "--group", "sp", "--n", "2", "--subgroup-file", "/nonexistent/file.json"}).code == 1);
}

TEST_CASE("--version reports the schema")
{
    auto r = call({"--version"});
    CHECK(r.code == 0);
    CHECK(r.json()["schema_version"] == hds::kSchemaVersion);
}

TEST_CASE("--subgroup-file - reads stdin")
{
    auto r = call({"hmult", "--group", "sp", "--n", "2", "--Lambda", "3,3", "--mu", "6", "--subgroup-file", "-"},
                  R"({"name":"circle","h_type":"torus","projection":[["1","1"]]})");
    REQUIRE(r.code == 0);
    CHECK(r.json()["value"] == 1);
    CHECK(r.json()["complete"] == true);
}

TEST_CASE("verify-paper")
{
    auto all = call({"verify-paper"});
    CHECK(all.code == 0);
    auto j = all.json();
    CHECK(j["pass"] == true);
    CHECK(j["items"].size() == hds::verify_items().size());

    auto one = call({"verify-paper", "--item", "sp4-counterexample"}).json();
    REQUIRE(one["items"].size() == 1);
    CHECK(one["items"][0]["item"] == "sp4-counterexample");
    CHECK(call({"verify-paper", "--item", "nope"}).code == 2);
}

TEST_CASE("verify-paper flags a perturbed golden table")
{
    Json golden = hds::default_golden();
    golden["sp4-counterexample"]["rho_c"] = strings({"3/2", "1/2", "-1/2", "-1/2"});
    const std::string path = "perturbed_golden.json";
    std::ofstream(path) << golden.dump();
    auto r = call({"verify-paper", "--golden", path});
    std::remove(path.c_str());
    CHECK(r.code == 3);
    auto j = r.json();
    CHECK(j["pass"] == false);
    for (const auto &item : j["items"]) {
        CHECK(item["pass"] == (item["item"] != "sp4-counterexample"));
        if (item["item"] == "sp4-counterexample") {
            CHECK(item["expected"]["rho_c"] == strings({"3/2", "1/2", "-1/2", "-1/2"}));
            CHECK(item["actual"]["rho_c"] == strings({"3/2", "1/2", "-1/2", "-3/2"}));
        }
    }
}

TEST_CASE("output is byte-identical across runs")
{
    std::vector<std::string> args{"branch", "--group", "su", "--p", "2", "--q", "3", "--subgroup", "su-q-block",
                                  "--lambda", "2,1,0,0,-3"};
    auto a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto pretty = call({"chambers", "--group", "su", "--p", "2", "--q", "1", "--pretty"});
    CHECK(Json::parse(pretty.out) == call({"chambers", "--group", "su", "--p", "2", "--q", "1"}).json());
}
