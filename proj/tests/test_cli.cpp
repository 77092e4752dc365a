#include "doctest.h"
#include "mhc/report.hpp"
#include "support.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

using namespace mhc;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run mhc_cli(const std::string& args) {
    std::string cmd = std::string(MHC_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& file) {
    auto dir = std::filesystem::temp_directory_path() / "mhc_cli_test";
    std::filesystem::create_directories(dir);
    return dir / file;
}

void write(const std::filesystem::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

std::vector<std::size_t> prefix(const json& dims, std::size_t k) {
    auto v = dims.get<std::vector<std::size_t>>();
    v.resize(std::min(k, v.size()));
    return v;
}

}  // namespace

TEST_CASE("example output parses, validates and runs") {
    for (std::string name : {"trunc:3", "sweedler", "taft:3", "rank1:c4", "rank1nc:c2xc4", "rank1nc:c8", "dihedral:3"}) {
        CAPTURE(name);
        Run r = mhc_cli("example " + name);
        REQUIRE(r.code == 0);
        ParsedSpec p = parse_spec_text(r.out);
        CHECK(p.document == example_spec(name));
        auto file = scratch("ex.json");
        REQUIRE(mhc_cli("example " + name + " -o " + file.string()).code == 0);
        CHECK(mhc_cli("hh --spec " + file.string() + " --max-degree 3").code == 0);
    }
    CHECK(parse_spec_text(mhc_cli("example sweedler").out).document["extension"] ==
          example_spec("taft:2")["extension"]);
}

TEST_CASE("reports are byte-for-byte deterministic") {
    for (std::string args : {"hh --spec rank1c4 --closed-form --oracle --decompose --basis --json",
                             "hc --spec sweedler --max-degree 5 --closed-form --oracle --decompose --basis --json",
                             "verify --spec taft3 --max-degree 4 --json", "hh --spec dihedral6 --max-degree 4"}) {
        CAPTURE(args);
        Run a = mhc_cli(args), b = mhc_cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("hh examples") {
    json r = json::parse(mhc_cli("hh --spec sweedler --max-degree 6 --oracle --json").out);
    CHECK(prefix(r["dimensions"], 5) == std::vector<std::size_t>{2, 1, 1, 1, 1});
    CHECK(r["oracle"]["agrees"] == true);

    r = json::parse(mhc_cli("hh --spec trunc3 --max-degree 6 --closed-form --json").out);
    CHECK(prefix(r["dimensions"], 5) == std::vector<std::size_t>{3, 2, 2, 2, 2});
    bool alpha_identity_agrees = false;
    for (const auto& f : r["closed_forms"])
        if (f["kind"] == "alpha-identity") alpha_identity_agrees = f["agrees"] == true;
    CHECK(alpha_identity_agrees);
    CHECK(r["hypotheses"]["collapse"]["holds"] == false);

    r = json::parse(mhc_cli("hh --spec dihedral6 --max-degree 4 --json").out);
    CHECK(r["dimensions"].size() == 4);
    CHECK_FALSE(r["warnings"].empty());
    CHECK(r["hypotheses"]["collapse"]["holds"] == false);
}

TEST_CASE("hc examples") {
    json r = json::parse(mhc_cli("hc --spec sweedler --max-degree 5 --oracle --json").out);
    CHECK(prefix(r["dimensions"], 4) == std::vector<std::size_t>{2, 1, 2, 1});
    CHECK(r["oracle"]["agrees"] == true);

    r = json::parse(mhc_cli("hc --spec rank1c4 --max-degree 5 --closed-form --json").out);
    CHECK(prefix(r["dimensions"], 4) == std::vector<std::size_t>{3, 1, 3, 1});
    bool noted = false;
    for (const auto& f : r["closed_forms"])
        if (f["status"] == "evaluated" && f["readings_differ"] == true) noted = !f["notes"].empty();
    CHECK(noted);

    r = json::parse(mhc_cli("hc --spec taft3 --max-degree 3 --json").out);
    CHECK(r["dimensions"].get<std::vector<std::size_t>>() == std::vector<std::size_t>{3, 2, 3});
}

TEST_CASE("every mode in a report reproduces the generic dimensions") {
    for (std::string name : {"sweedler", "rank1c4", "rank1nc_c2xc4"}) {
        CAPTURE(name);
        for (std::string cmd : {"hh", "hc"}) {
            json r = json::parse(mhc_cli(cmd + " --spec " + name + " --max-degree 5 --decompose --oracle --json").out);
            for (const auto& [mode, dims] : r["modes"].items()) {
                CAPTURE(mode);
                CHECK(dims == r["dimensions"]);
            }
            CHECK(r["warnings"].empty());
        }
    }
}

TEST_CASE("verify examples") {
    for (std::string name : {"sweedler", "trunc3", "taft3"}) {
        CAPTURE(name);
        Run run = mhc_cli("verify --spec " + name + " --max-degree 5 --json");
        CHECK(run.code == 0);
        json r = json::parse(run.out);
        CHECK(r["all_pass"] == true);
        for (const auto& c : r["checks"]) CHECK(c["pass"] == true);
    }
}

TEST_CASE("exit codes") {
    auto bad_json = scratch("bad.json");
    write(bad_json, "{\"field\": \n");
    CHECK(mhc_cli("hh --spec " + bad_json.string()).code == 1);

    json doc = example_spec("trunc:2");
    doc["extension"]["n"] = 1;
    auto n1 = scratch("n1.json");
    write(n1, doc.dump());
    CHECK(mhc_cli("hh --spec " + n1.string()).code == 1);

    doc = example_spec("sweedler");
    doc["endomorphism"]["values"]["g"] = "3";
    auto chi = scratch("chi.json");
    write(chi, doc.dump());
    CHECK(mhc_cli("verify --spec " + chi.string()).code == 1);

    CHECK(mhc_cli("example nonsense").code == 1);
    CHECK(mhc_cli("hh --spec nonsense").code == 1);
    CHECK(mhc_cli("hh --spec sweedler --max-degree 1").code == 1);
    CHECK(mhc_cli("hh --spec sweedler --max-degree 3").code == 0);
}

TEST_CASE("a bimodule spec is accepted by hh and refused by hc") {
    // M = A for A = Q[x]/(x^2), given by explicit action matrices
    json doc = example_spec("trunc:2");
    doc["bimodule"] = {{"dim", 2},
                       {"left_k", json::array({json::array({json::array({"1", "0"}), json::array({"0", "1"})})})},
                       {"right_k", json::array({json::array({json::array({"1", "0"}), json::array({"0", "1"})})})},
                       {"left_x", json::array({json::array({"0", "0"}), json::array({"1", "0"})})},
                       {"right_x", json::array({json::array({"0", "0"}), json::array({"1", "0"})})}};
    auto file = scratch("bimodule.json");
    write(file, doc.dump());
    Run hh = mhc_cli("hh --spec " + file.string() + " --max-degree 5 --oracle --json");
    REQUIRE(hh.code == 0);
    json r = json::parse(hh.out);
    CHECK(prefix(r["dimensions"], 5) == prefix(json(test::frozen_dims("trunc2", "hh")), 5));
    CHECK(r["oracle"]["agrees"] == true);
    CHECK(mhc_cli("hc --spec " + file.string()).code == 1);

    // an x action that does not kill f is rejected
    doc["bimodule"]["left_x"] = json::array({json::array({"1", "0"}), json::array({"0", "1"})});
    write(file, doc.dump());
    CHECK(mhc_cli("hh --spec " + file.string()).code == 1);
}
