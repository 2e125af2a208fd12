#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dbent/cli.hpp"
#include "dbent/io.hpp"

using namespace dbent;
using io::json;

namespace {

struct Run {
    int code;
    std::string text;
    json body() const { return json::parse(text); }
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    const int code = cli::run(args, out);
    return {code, out.str()};
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("dbent_cli_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("closed-form parameters from the command line")
{
    auto r = run({"pds-params", "--theorem", "coset-union", "--p", "7", "--s", "2", "--ntotal", "8", "--hsize", "16",
                  "--m1", "1", "--m0", "0", "--eps", "+1"});
    CHECK(r.code == 0);
    auto b = r.body();
    CHECK(b["v"] == 5764801);
    CHECK(b["k"] == 1881600);
    CHECK(b["lambda"] == 614705);
    CHECK(b["mu"] == 613872);
    CHECK(b["method"] == "formula");

    r = run({"pds-params", "--theorem", "coset-union", "--p", "5", "--s", "2", "--ntotal", "16", "--hsize", "8", "--m1",
             "1", "--m0", "0", "--eps", "-1"});
    CHECK(r.code == 0);
    CHECK(r.body()["mu"] == 15625125000LL);

    r = run({"pds-params", "--theorem", "subset", "--p", "3", "--s", "1", "--n", "2", "--size-a", "1", "--eps", "1"});
    CHECK(r.code == 0);
    CHECK(r.body()["k"] == 2);

    r = run({"pds-params", "--theorem", "coset-union", "--p", "7", "--s", "2", "--ntotal", "8", "--hsize", "5", "--m1",
             "1", "--eps", "1"});
    CHECK(r.code == 1);
    CHECK(r.body()["error"]["code"] == "NonDivisor");
}

TEST_CASE("published examples")
{
    const auto r = run({"reproduce-examples"});
    CHECK(r.code == 0);
    const auto b = r.body();
    CHECK(b["all_match"] == true);
    CHECK(b["examples"].size() == 8);
}

TEST_CASE("construct, certify and extract")
{
    const auto bundle = temp_path("bundle.json");
    auto r = run({"construct", "--family", "mm-power", "--p", "3", "--m", "2", "--s", "1", "--a", "1", "--e", "1",
                  "--out", bundle});
    REQUIRE(r.code == 0);
    CHECK(r.text.empty());

    r = run({"certify", "--file", bundle});
    CHECK(r.code == 0);
    auto b = r.body();
    CHECK(b["certified"] == true);
    CHECK(b["sigma"] == json({0, 1, 2}));
    CHECK(b["sigma_matches_claim"] == true);
    CHECK(b["epsilon_matches_claim"] == true);

    // a dual with one entry changed
    auto j = json::parse(std::ifstream(bundle));
    j["dual"]["table"][5] = (j["dual"]["table"][5].get<int>() + 1) % 3;
    const auto f = temp_path("f.json");
    write(f, j["dual"].dump());
    r = run({"certify", "--file", bundle, "--dual", f});
    CHECK(r.code == 1);
    CHECK(r.body()["certified"] == false);

    const auto set = temp_path("set.json");
    r = run({"pds-extract", "--file", bundle, "--values", "1", "--out", set});
    REQUIRE(r.code == 0);
    r = run({"pds-verify", "--set", set});
    CHECK(r.code == 0);
    b = r.body();
    CHECK(b["verified"] == true);
    CHECK(b["method"] == "bruteforce");
    CHECK(b["k"] == 24);

    r = run({"pds-verify", "--file", bundle, "--values", "1", "--candidate", "81,24,9,6", "--method",
             "characters"});
    CHECK(r.code == 0);
    CHECK(r.body()["method"] == "characters");
    r = run({"pds-verify", "--file", bundle, "--values", "1", "--candidate", "81,24,9,7"});
    CHECK(r.code == 1);
    r = run({"pds-verify", "--file", bundle, "--values", "1", "--method", "characters"});
    CHECK(r.code == 2);

    for (const auto& fam : std::vector<std::vector<std::string>>{
             {"--family", "quad-trace", "--p", "5", "--n", "2", "--s", "1", "--a", "2"},
             {"--family", "diag-quad", "--p", "3", "--s", "1", "--coeffs", "1,2,2"},
             {"--family", "mm-qpoly", "--p", "3", "--m", "2", "--s", "1", "--coeffs", "0,1"},
             {"--family", "spread", "--p", "3", "--m", "2", "--s", "1", "--gamma0", "2"},
             {"--family", "switched-quadratic", "--p", "3", "--n", "2", "--m", "1", "--alpha", "1,1,1"}}) {
        std::vector<std::string> args{"construct"};
        args.insert(args.end(), fam.begin(), fam.end());
        args.insert(args.end(), {"--out", bundle});
        REQUIRE(run(args).code == 0);
        r = run({"certify", "--file", bundle});
        CHECK(r.code == 0);
    }
}

TEST_CASE("spectra and classification of files")
{
    const auto bundle = temp_path("bundle2.json");
    REQUIRE(run({"construct", "--family", "quad-trace", "--p", "3", "--n", "2", "--s", "1", "--out", bundle}).code == 0);
    auto j = json::parse(std::ifstream(bundle))["function"];
    for (auto& y : j["table"]) y = 0;
    const auto zero = temp_path("zero.json");
    write(zero, j.dump());

    auto r = run({"walsh", "--file", zero});
    CHECK(r.code == 0);
    auto b = r.body();
    CHECK(b["spectrum"][0]["coeffs"] == json({9, 0}));
    for (std::size_t a = 1; a < 9; ++a) CHECK(b["spectrum"][a]["coeffs"] == json({0, 0}));
    CHECK(b["parseval"] == true);

    r = run({"classify", "--file", zero});
    CHECK(r.body()["is_bent"] == false);
    r = run({"classify", "--file", bundle, "--component", "2"});
    b = r.body();
    CHECK(b["is_bent"] == true);
    CHECK(b["weakly_regular"] == true);
    CHECK(b["dual"].size() == 9);
    CHECK(run({"classify", "--file", bundle, "--component", "3"}).code == 2);
}

TEST_CASE("Gaussian periods from the command line")
{
    auto r = run({"gaussian-period", "--p", "3", "--s", "2", "--t", "2", "--a", "1"});
    CHECK(r.code == 0);
    auto b = r.body();
    CHECK(b["value"]["coeffs"] == json({1, 0}));
    CHECK(b["agree"] == true);
    r = run({"gaussian-period", "--p", "7", "--s", "2", "--t", "3", "--a", "1"});
    CHECK(r.code == 0);
    CHECK(r.body()["semiprimitive"] == false);
}

TEST_CASE("errors and determinism")
{
    auto r = run({});
    CHECK(r.code == 2);
    CHECK(r.body()["error"]["code"] == "usage");
    CHECK(run({"construct", "--family", "nope", "--p", "3"}).code == 2);
    CHECK(run({"pds-params", "--theorem", "subset", "--p", "3", "--s", "1", "--n", "2", "--eps", "2"}).code == 2);
    CHECK(run({"walsh", "--file", temp_path("missing.json")}).code == 2);

    const auto bad = temp_path("bad.json");
    write(bad, R"({"space":[{"p":3,"m":1}],"codomain":{"p":3,"s":1},"table":[0,1]})");
    r = run({"walsh", "--file", bad});
    CHECK(r.code == 2);
    CHECK(r.body()["error"]["code"] == "Schema");
    write(bad, R"({"space":[{"p":3,"m":1}],"codomain":{"p":3,"s":1},"table":[0,1,3]})");
    CHECK(run({"walsh", "--file", bad}).code == 2);
    write(bad, R"({"space":[{"p":4,"m":1}],"codomain":{"p":3,"s":1},"table":[0,1,2,0]})");
    CHECK(run({"walsh", "--file", bad}).code == 2);
    write(bad, "not json");
    CHECK(run({"walsh", "--file", bad}).code == 2);

    r = run({"construct", "--family", "mm-power", "--p", "3", "--m", "2", "--s", "1", "--e", "2"});
    CHECK(r.code == 1);
    CHECK(r.body()["error"]["code"] == "BadExponent");

    const std::vector<std::string> args{"construct", "--family", "spread", "--p", "3", "--m", "2", "--s", "2"};
    CHECK(run(args).text == run(args).text);
}
