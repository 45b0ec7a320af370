#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hdecomp");
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = hdecomp::cli::execute(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("hdecomp_cli_" + std::to_string(std::rand()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("biex command") {
    const auto r = run({"biex", "--h", "k222", "--n", "6"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["value"] == 7);
    CHECK(j["status"] == "exact");
}

TEST_CASE("phi-n command") {
    const auto r = run({"phi-n", "--h", "k3", "--n", "5"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["value"] == 6);
    CHECK_FALSE(j["witnesses"].empty());
}

TEST_CASE("decompose then verify") {
    TempDir dir;
    // T_2(10) plus a planted edge, as a graph6 file
    const auto spec = run({"construct", "--h", "bowtie", "--n", "10", "--out", dir / "input.g6"});
    REQUIRE(spec.code == 0);
    const auto d = run({"decompose", "--g", dir / "input.g6", "--h", "k3", "--beta", "0.25", "--out", dir / "out"});
    REQUIRE(d.code == 0);
    CHECK(fs::exists(dir / "out.hdec"));
    CHECK(fs::exists(dir / "out.report.json"));
    CHECK(Json::parse(d.out)["format"] == "hdecomp-report/1");
    const auto v = run({"verify", "--g", dir / "input.g6", "--decomposition", dir / "out.hdec"});
    CHECK(v.code == 0);
    CHECK(Json::parse(v.out)["ok"] == true);
}

TEST_CASE("verify reports a broken decomposition") {
    TempDir dir;
    REQUIRE(run({"phi", "--g", "k5", "--h", "k3", "--out", dir / "k5.hdec"}).code == 0);
    std::ifstream in(dir / "k5.hdec");
    std::stringstream text;
    text << in.rdbuf();
    std::string s = text.str();
    s = s.substr(0, s.rfind("E "));
    {
        std::ofstream out(dir / "k5.hdec");
        out << s;
    }
    const auto v = run({"verify", "--g", "k5", "--decomposition", dir / "k5.hdec"});
    CHECK(v.code == 1);
    CHECK(Json::parse(v.out)["violation"].get<std::string>().rfind("edge uncovered", 0) == 0);
}

TEST_CASE("family files are written") {
    TempDir dir;
    const auto r = run({"family", "--h", "bowtie", "--out", dir / "bt"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["F*_H"]["member_count"] == 2);
    CHECK(fs::exists(dir / "bt.F.g6"));
    CHECK(fs::exists(dir / "bt.Fstar.g6.json"));
    const auto ex = run({"ex", "--family", dir / "bt.Fstar.g6", "--n", "7"});
    CHECK(ex.code == 0);
    CHECK(Json::parse(ex.out)["value"] == 1);
}

TEST_CASE("small commands") {
    CHECK(Json::parse(run({"sigma", "--h", "k222"}).out)["sigma"] == 2);
    CHECK(Json::parse(run({"critical", "--h", "c5"}).out)["edge_critical"] == true);
    CHECK(Json::parse(run({"pack", "--g", "k7", "--h", "k3"}).out)["packing_size"] == 7);
    CHECK(Json::parse(run({"enumerate", "--n", "5", "--count"}).out)["count"] == 34);
    CHECK(Json::parse(run({"ex", "--forbid", "c4", "--n", "6"}).out)["value"] == 7);
    const auto lines = run({"enumerate", "--n", "4"}).out;
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 11);
}

TEST_CASE("usage and domain errors") {
    CHECK(run({}).code == hdecomp::cli::kUsageError);
    CHECK(run({"nope"}).code == hdecomp::cli::kUsageError);
    CHECK(run({"biex", "--h", "k3", "--n", "5", "--frobnicate"}).code == hdecomp::cli::kUsageError);
    CHECK(run({"biex", "--h", "k3"}).code == hdecomp::cli::kUsageError);
    const auto bad = run({"sigma", "--h", "B\x7f"});
    CHECK(bad.code == hdecomp::cli::kUsageError);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"family", "--h", "c4"}).code == hdecomp::cli::kDomainError);
    CHECK(run({"decompose", "--g", "k5", "--h", "c4", "--out", "never"}).code == hdecomp::cli::kDomainError);
    CHECK_FALSE(fs::exists("never.hdec"));
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("caps map to exit code 3") {
    CHECK(run({"enumerate", "--n", "12"}).code == hdecomp::cli::kBudgetError);
    CHECK(run({"biex", "--h", "k222", "--n", "9", "--budget", "2"}).code == hdecomp::cli::kBudgetError);
    CHECK(run({"--scan-cap", "4", "phi-n", "--h", "k3", "--n", "5"}).code == hdecomp::cli::kBudgetError);
}

TEST_CASE("cache path is honoured") {
    TempDir dir;
    const auto cache = dir / "cache.jsonl";
    REQUIRE(run({"--cache-path", cache, "biex", "--h", "k222", "--n", "7"}).code == 0);
    CHECK(fs::file_size(cache) > 0);
    const auto again = run({"biex", "--h", "k222", "--n", "7", "--cache-path", cache});
    CHECK(Json::parse(again.out)["value"] == 9);
}
