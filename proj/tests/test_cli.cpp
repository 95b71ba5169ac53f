#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "../tools/cli_app.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult result;
    result.code = reflecto::cli::run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::string data_file(const std::string& name) {
    return std::string(REFLECTO_SOURCE_DIR) + "/data/" + name;
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("profile emits the expected csv table") {
    const CliResult r = run({"profile", "--spec", "thue_morse", "--n-max", "14",
                             "--prefix", "4096", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 16);  // header + 15 data rows
    CHECK(r.out.substr(0, 28) == "n,rho,pal,refl,unr,r,stable\n");
    CHECK(r.out.find("14,42,2,42,0,22,1\n") != std::string::npos);

    // Identical invocations give identical bytes.
    const CliResult again = run({"profile", "--spec", "thue_morse", "--n-max", "14",
                                 "--prefix", "4096", "--format", "csv"});
    CHECK(again.out == r.out);
}

TEST_CASE("profile json names the spec and round trips") {
    const CliResult r = run({"profile", "--spec", "fibonacci", "--n-max", "6",
                             "--format", "json"});
    CHECK(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["spec"] == "fibonacci");
    CHECK(doc["rows"].size() == 7);
    CHECK(doc["rows"][6]["r"] == 4);
}

TEST_CASE("profile rejects unknown specs and bad usage") {
    CHECK(run({"profile", "--spec", "martian", "--n-max", "5"}).code == 3);
    CHECK(run({"profile", "--spec", "martian", "--n-max", "5"})
              .err.find("unknown spec") != std::string::npos);
    CHECK(run({"profile", "--n-max", "5"}).code == 3);
    CHECK(run({"profile", "--spec", "thue_morse"}).code == 3);         // no --n-max
    CHECK(run({"profile", "--spec", "thue_morse", "--n-max", "5",
               "--format", "dot"}).code == 3);                          // wrong format
    CHECK(run({}).code == 3);                                           // no subcommand
    CHECK(run({"profile", "--spec", "thue_morse", "--spec-file", "x",
               "--n-max", "5"}).code == 3);                             // both sources
}

TEST_CASE("profile reads spec files") {
    const std::string path = "/tmp/reflecto_test_spec.json";
    {
        std::ofstream out(path);
        out << R"({"kind": "periodic", "preperiod": "", "period": "011"})";
    }
    const CliResult r = run({"profile", "--spec-file", path, "--n-max", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3,3,1,3,0,2,1\n") != std::string::npos);

    {
        std::ofstream out(path);
        out << "{ not json";
    }
    const CliResult bad = run({"profile", "--spec-file", path, "--n-max", "6"});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("malformed") != std::string::npos);

    CHECK(run({"profile", "--spec-file", "/tmp/which_does_not_exist.json",
               "--n-max", "6"}).code == 3);
    std::remove(path.c_str());
}

TEST_CASE("check subcommand reports ndjson and exit codes") {
    const CliResult one = run({"check", "--id", "T3_EQUALITY"});
    CHECK(one.code == 0);
    CHECK(count_lines(one.out) == 1);
    const nlohmann::json doc = nlohmann::json::parse(one.out);
    CHECK(doc["id"] == "T3_EQUALITY");
    CHECK(doc["verdict"] == "pass");

    CHECK(run({"check", "--id", "NOPE"}).code == 3);

    // A starved budget turns the verdict inconclusive, exit 2.
    const CliResult starved =
        run({"check", "--id", "CHACON", "--prefix", "64"});
    CHECK(starved.code == 2);
    CHECK(nlohmann::json::parse(starved.out)["verdict"] == "inconclusive");
}

TEST_CASE("check --id all runs the whole registry") {
    const CliResult all = run({"check", "--id", "all"});
    CHECK(all.code == 0);
    CHECK(count_lines(all.out) == 20);
    std::istringstream lines(all.out);
    std::string line;
    std::string previous_id;
    while (std::getline(lines, line)) {
        const nlohmann::json doc = nlohmann::json::parse(line);
        CHECK(doc["verdict"] == "pass");
        CHECK(previous_id < doc["id"].get<std::string>());
        previous_id = doc["id"];
    }
}

TEST_CASE("conjecture surveys exit with the inconclusive code") {
    const CliResult scan = run({"check", "--scan", "periodic_01", "--n-max", "50"});
    CHECK(scan.code == 2);
    const nlohmann::json doc = nlohmann::json::parse(scan.out);
    CHECK(doc["id"] == "CONJECTURE_SCAN");
    CHECK(doc["details"]["two_step_equalities"]["count"].get<int>() > 0);
    CHECK(run({"check", "--scan", "nope"}).code == 3);
    CHECK(run({"check", "--scan", "fibonacci", "--id", "CHACON"}).code == 3);
}

TEST_CASE("graph subcommand emits dot and json") {
    const CliResult dot = run({"graph", "--spec", "fibonacci", "--kind", "K",
                               "--n", "5", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out ==
          "digraph k_5 {\n"
          "  rankdir=LR;\n"
          "  n0 [label=\"00100\"];\n"
          "  n1 [label=\"00101\"];\n"
          "  n2 [label=\"01001\"];\n"
          "  n3 [label=\"01010\"];\n"
          "  n0 -> n2 [label=\"001001\"];\n"
          "  n1 -> n3 [label=\"001010\"];\n"
          "  n2 -> n2 [label=\"010010\"];\n"
          "  n2 -> n1 [label=\"100101\"];\n"
          "}\n");

    const CliResult json = run({"graph", "--spec", "thue_morse", "--kind", "lambda",
                                "--n", "2", "--format", "json"});
    CHECK(json.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc["kind"] == "lambda");
    CHECK(doc["vertices"].size() == 3);
    CHECK(doc["edges"].size() == 6);
    CHECK(doc["spec"] == "thue_morse");

    CHECK(run({"graph", "--spec", "fibonacci", "--kind", "triangle", "--n", "5"})
              .code == 3);
}

TEST_CASE("linrep subcommand evaluates and compares") {
    const CliResult eval = run({"linrep", "--rep-file", data_file("thue_morse_r.linrep"),
                                "--n-max", "5"});
    CHECK(eval.code == 0);
    CHECK(eval.out == "n,value\n0,1\n1,2\n2,3\n3,4\n4,6\n5,6\n");

    const CliResult single = run({"linrep", "--rep-file", data_file("thue_morse_r.linrep"),
                                  "--n", "9", "--format", "json"});
    CHECK(single.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(single.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["n"] == 9);
    CHECK(doc[0]["value"] == "12");

    const CliResult same = run({"linrep", "--rep-file", data_file("thue_morse_r.linrep"),
                                "--rep-file", data_file("thue_morse_r.linrep")});
    CHECK(same.code == 0);
    CHECK(nlohmann::json::parse(same.out)["equal"] == true);

    const CliResult different =
        run({"linrep", "--rep-file", data_file("thue_morse_r.linrep"),
             "--rep-file", data_file("thue_morse_rho_shift.linrep")});
    CHECK(different.code == 1);
    CHECK(nlohmann::json::parse(different.out)["equal"] == false);

    CHECK(run({"linrep", "--rep-file", "/tmp/missing.linrep"}).code == 3);
}

TEST_CASE("dfao subcommand evaluates machine files") {
    const CliResult r = run({"dfao", "--dfao-file", data_file("t3.dfao"), "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,output\n5,2\n");

    const CliResult range = run({"dfao", "--dfao-file", data_file("thue_morse.dfao"),
                                 "--n-max", "7", "--format", "json"});
    CHECK(range.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(range.out);
    REQUIRE(doc.size() == 8);
    CHECK(doc[6]["output"] == 0);  // 6 = 110 has two ones
    CHECK(run({"dfao", "--dfao-file", "/tmp/missing.dfao", "--n", "3"}).code == 3);
}

TEST_CASE("catalog subcommand lists every entry") {
    const CliResult json = run({"catalog"});
    CHECK(json.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc.size() == 18);
    bool saw_quasi = false, saw_tm = false;
    for (const auto& entry : doc) {
        if (entry["name"] == "quasi_sturmian_fib") {
            saw_quasi = true;
            CHECK(entry["spec"].is_null());
        }
        if (entry["name"] == "thue_morse") {
            saw_tm = true;
            // The entry exposes the defining morphism, not an opaque name.
            CHECK(entry["spec"]["kind"] == "morphic");
            CHECK(entry["spec"]["images"] == nlohmann::json({"01", "10"}));
        }
    }
    CHECK(saw_quasi);
    CHECK(saw_tm);

    const CliResult csv = run({"catalog", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(count_lines(csv.out) == 19);  // header + 18 entries
}

TEST_CASE("prefix cap from the environment") {
    setenv("REFLECTO_MAX_PREFIX", "1000", 1);
    const CliResult capped = run({"profile", "--spec", "thue_morse", "--n-max", "5",
                                  "--prefix", "4096"});
    CHECK(capped.code == 3);
    CHECK(capped.err.find("REFLECTO_MAX_PREFIX") != std::string::npos);

    // Under the cap (including the stability factor) everything works.
    const CliResult fits = run({"profile", "--spec", "thue_morse", "--n-max", "5",
                                "--prefix", "400"});
    CHECK(fits.code == 0);

    setenv("REFLECTO_MAX_PREFIX", "banana", 1);
    CHECK(run({"profile", "--spec", "thue_morse", "--n-max", "5",
               "--prefix", "64"}).code == 3);
    unsetenv("REFLECTO_MAX_PREFIX");
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"profile", "--help"}).code == 0);
}
