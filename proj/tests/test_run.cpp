#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sturmian/run.hpp"

using namespace sturmian;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult invoke(RunConfig cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig base(const std::string& command, const std::string& pi = "") {
    RunConfig cfg;
    cfg.command = command;
    cfg.pi_text = pi;
    return cfg;
}

}  // namespace

TEST_CASE("parse_format") {
    REQUIRE(parse_format("text") == OutputFormat::Text);
    REQUIRE(parse_format("json") == OutputFormat::Json);
    REQUIRE(parse_format("tsv") == OutputFormat::Tsv);
    REQUIRE_THROWS_AS(parse_format("yaml"), ParseError);
}

TEST_CASE("generate text output is byte-stable") {
    const RunResult r = invoke(base("generate", "1,2;2,1"));
    REQUIRE(r.code == kExitOk);
    REQUIRE(r.out ==
            "pi 1,2;2,1\nseed a\nlength 5\ncount_a 3\ncount_b 2\nword aabab\n");
    REQUIRE(r.err.empty());
    REQUIRE(invoke(base("generate", "1,2;2,1")).out == r.out);
}

TEST_CASE("generate json and tsv") {
    RunConfig cfg = base("generate", "2,1");
    cfg.format = OutputFormat::Json;
    const RunResult r = invoke(cfg);
    REQUIRE(r.code == kExitOk);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("length") == 3);
    REQUIRE(j.at("word") == "aab");

    cfg.format = OutputFormat::Tsv;
    const RunResult t = invoke(cfg);
    REQUIRE(t.out == "pi\tseed\tlength\tcount_a\tcount_b\tword\n2,1\ta\t3\t2\t1\taab\n");
}

TEST_CASE("generate writes the out file") {
    const std::string path = "run_test_word.tmp";
    RunConfig cfg = base("generate", "1,2;2,1");
    cfg.out_file = path;
    REQUIRE(invoke(cfg).code == kExitOk);
    std::ifstream f(path);
    std::string content;
    std::getline(f, content);
    REQUIRE(content == "aabab");
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("exit codes map the error taxonomy") {
    RunConfig capped = base("generate", "9,8");
    capped.length_cap = 5;
    const RunResult r = invoke(capped);
    REQUIRE(r.code == kExitSizeLimit);
    REQUIRE(r.err.find("error:") == 0);
    REQUIRE(r.out.empty());

    REQUIRE(invoke(base("generate", "1,3")).code == kExitInputError);
    REQUIRE(invoke(base("generate", "")).code == kExitInputError);
    REQUIRE(invoke(base("analyze", "nonsense")).code == kExitInputError);
    REQUIRE(invoke(base("frobnicate", "1,2")).code == kExitInputError);

    RunConfig zero_cap = base("generate", "1,2");
    zero_cap.length_cap = 0;
    REQUIRE(invoke(zero_cap).code == kExitInputError);

    RunConfig bad_seed = base("generate", "1,2");
    bad_seed.seed = "abc";
    REQUIRE(invoke(bad_seed).code == kExitInputError);
}

TEST_CASE("analyze text carries counts, occurrences and the distinct set") {
    const RunResult r = invoke(base("analyze", "1,2;2,1"));
    REQUIRE(r.code == kExitOk);
    REQUIRE(r.out.find("k_total 6\n") != std::string::npos);
    REQUIRE(r.out.find("originals_total 4\n") != std::string::npos);
    REQUIRE(r.out.find("m_distinct 4\n") != std::string::npos);
    REQUIRE(r.out.find("  3 b 3 2 3 no\n") != std::string::npos);
    REQUIRE(r.out.find(" abaababaaba\n") != std::string::npos);
}

TEST_CASE("analyze json is machine-readable and stable") {
    RunConfig cfg = base("analyze", "1,2;2,1");
    cfg.format = OutputFormat::Json;
    const RunResult r = invoke(cfg);
    REQUIRE(r.code == kExitOk);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("counts").at("k_total") == 6);
    REQUIRE(j.at("occurrences").size() == 6);
    REQUIRE(j.at("occurrences")[1].at("kind") == "aa");
    REQUIRE(j.at("occurrences")[1].at("flagged") == true);
    REQUIRE(j.at("occurrences")[1].at("sequence_id") == -1);
    REQUIRE(j.at("distinct").size() == 4);
    REQUIRE(j.at("distinct")[1].at("word") == "abaababaaba");
    REQUIRE(invoke(cfg).out == r.out);
}

TEST_CASE("analyze tsv rows") {
    RunConfig cfg = base("analyze", "2,1");
    cfg.format = OutputFormat::Tsv;
    const RunResult r = invoke(cfg);
    REQUIRE(r.out.rfind("position\tkind\tlength\torigin_level\tsequence_id\tflagged\n", 0) == 0);
    // Header plus one row per center of "aab".
    REQUIRE(std::count(r.out.begin(), r.out.end(), '\n') == 5);
}

TEST_CASE("verify passes on a healthy configuration") {
    RunConfig cfg = base("verify", "1,2;2,1");
    cfg.sweep_count = 3;
    cfg.sweep_max_n = 3;
    cfg.sweep_max_p = 3;
    cfg.rng_seed = 5;
    const RunResult r = invoke(cfg);
    REQUIRE(r.code == kExitOk);
    REQUIRE(r.out.find("sequence report for 1,2;2,1\n") == 0);
    REQUIRE(r.out.find("result PASS\n") != std::string::npos);
    REQUIRE(r.out.find("FAIL") == std::string::npos);

    cfg.format = OutputFormat::Json;
    const nlohmann::json j = nlohmann::json::parse(invoke(cfg).out);
    REQUIRE(j.at("all_pass") == true);
    REQUIRE(j.at("sequence").at("all_pass") == true);
    REQUIRE(j.at("sweep").at("checks").is_array());
}

TEST_CASE("verify without a sequence only sweeps") {
    RunConfig cfg = base("verify");
    cfg.sweep_count = 2;
    cfg.sweep_max_n = 2;
    cfg.sweep_max_p = 3;
    const RunResult r = invoke(cfg);
    REQUIRE(r.code == kExitOk);
    REQUIRE(r.out.find("sequence report") == std::string::npos);
    REQUIRE(r.out.find("sweep 2 sequences") != std::string::npos);
}

TEST_CASE("bistandard lists the reflection chain") {
    RunConfig cfg = base("bistandard", "1,2;2,1");
    cfg.iterations = 3;
    const RunResult r = invoke(cfg);
    REQUIRE(r.code == kExitOk);
    REQUIRE(r.out ==
            "W0 length 1 a\nW1 length 5 ababa\nW2 length 17 ababaabababaababa\n"
            "W3 length 41 ababaabababaababaabababaababaabababaababa\n");
}

TEST_CASE("bench emits one row per size") {
    RunConfig cfg = base("bench");
    cfg.iterations = 1;
    const RunResult r = invoke(cfg);
    REQUIRE(r.code == kExitOk);
    REQUIRE(r.out.rfind("length 106706 occurrences ", 0) == 0);
}
