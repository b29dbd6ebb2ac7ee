#include "oracles.hpp"

#include "sasaki/io.hpp"
#include "sasaki/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace sasaki;
namespace fs = std::filesystem;

namespace {

fs::path corpus_dir() {
    static const fs::path dir = [] {
        const fs::path p = fs::temp_directory_path() / "sasaki_test_corpus";
        fs::remove_all(p);
        CommandOptions o;
        o.command = "emit-corpus";
        o.out = p.string();
        const auto r = run_command(o);
        REQUIRE(r.exit_code == 0);
        return p;
    }();
    return dir;
}

std::string at(const std::string& name) { return (corpus_dir() / name).string(); }

CommandResult run(CommandOptions o) { return run_command(o); }

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_CASE("corpus contents") {
    const auto files = corpus_files();
    std::map<std::string, std::string> by_name(files.begin(), files.end());
    CHECK(by_name.size() == files.size());
    for (const char* f : {"h3.json", "h5.json", "h7.json", "h5_trivial.json", "h5_unitary.json", "h5_real.json", "h5_rank2.json",
                          "gamma3.json", "gamma5.json"})
        CHECK(by_name.count(f) == 1);
    CHECK(parse_model(by_name.at("h7.json")).dim == 7);
    const auto g5 = parse_group(by_name.at("gamma5.json"));
    CHECK(g5.presentation.generators.size() == 5);
    CHECK(g5.presentation.relators.size() == 10);
    CHECK(g5.representation);
    CHECK(corpus_files() == files);
}

TEST_CASE("parse and serialize round trip on the corpus") {
    for (const auto& [name, text] : corpus_files()) {
        CAPTURE(name);
        if (name.rfind("gamma", 0) == 0) {
            CHECK(serialize_group(parse_group(text)) == text);
        } else if (name.find('_') != std::string::npos) {
            const auto b = parse_bundle(text);
            CHECK(serialize_bundle(b) == text);
        } else {
            const auto d = parse_model(text);
            CHECK(serialize_model(d) == text);
            CHECK(validate_sasakian(d).ok());
            const auto ref = oracle::heisenberg(static_cast<int>(d.n()));
            CHECK(d.complex_structure == ref.complex_structure);
            CHECK(d.eta == ref.eta);
        }
    }
}

TEST_CASE("malformed input names the line or field") {
    auto msg = [](auto f) {
        try {
            f();
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(msg([] { parse_model("{\n  \"name\": \"x\",\n  oops\n}"); }).rfind("line 3", 0) == 0);
    CHECK(msg([] { parse_model(R"({"name": "x"})"); }).rfind("dimension", 0) == 0);
    CHECK(msg([] {
              parse_model(
                  R"({"name":"x","dimension":3,"brackets":[{"i":1,"j":2,"k":0,"coeff":"1/0"}],"eta":["1","0","0"],"xi":["1","0","0"],"I":[["0","0","0"],["0","0","-1"],["0","1","0"]]})");
          }).rfind("brackets[0].coeff", 0) == 0);
    CHECK(msg([] { parse_bundle(R"({"rank": 2, "diagonal": [["0","1","0"]]})"); }).rfind("diagonal", 0) == 0);
    CHECK(msg([] { parse_group(R"({"name":"g","generators":["a"],"relators":["ab"]})"); }).rfind("relators", 0) == 0);
    CHECK_THROWS_AS(read_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("exit codes") {
    CommandOptions o;
    o.command = "validate";
    o.model = at("h5.json");
    CHECK(run(o).exit_code == 0);

    o = {};
    o.command = "quadraticity";
    o.model = at("h3.json");
    o.rank = 1;
    auto r = run(o);
    CHECK(r.exit_code == 1);
    const auto j = nlohmann::json::parse(r.report);
    CHECK(j["verdict"] == "fail");
    bool found = false;
    for (const auto& rec : j["records"])
        if (rec["check_id"] == "quadraticity.verdict") found = rec["witness"] == "hypothesis-violated";
    CHECK(found);

    o = {};
    o.command = "cup-vanishing";
    o.model = at("h5.json");
    o.degrees = std::pair{1, 1};
    r = run(o);
    CHECK(r.exit_code == 2);
    CHECK(r.report.empty());
    CHECK(r.error.find("1,1") != std::string::npos);

    o = {};
    o.command = "validate";
    o.model = at("missing.json");
    CHECK(run(o).exit_code == 2);

    const fs::path bad = corpus_dir() / "model_as_bundle.json";
    write(bad, corpus_files()[0].second);  // an h3 model file used as a bundle
    o = {};
    o.command = "cohomology";
    o.model = at("h5.json");
    o.bundle = bad.string();
    CHECK(run(o).exit_code == 2);

    o = {};
    o.command = "cohomology";
    o.model = at("h5.json");
    CHECK(run(o).exit_code == 2);  // no mode selected

    o = {};
    o.command = "nonsense";
    CHECK(run(o).exit_code == 2);
}

TEST_CASE("reports carry hashes, anchors and sorted ids") {
    CommandOptions o;
    o.command = "cohomology";
    o.model = at("h5.json");
    o.bundle = at("h5_trivial.json");
    o.basic = o.full = true;
    const auto r = run(o);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.report);
    CHECK(j["command"] == echo(o));
    REQUIRE(j["inputs"].size() == 2);
    CHECK(j["inputs"][0]["sha256"] == sha256_hex(read_file(o.model)));
    std::vector<std::string> ids;
    for (const auto& rec : j["records"]) {
        ids.push_back(rec["check_id"]);
        CHECK_FALSE(rec["paper_anchor"].get<std::string>().empty());
    }
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    for (const auto& rec : j["records"]) {
        if (rec["check_id"] == "cohomology.full") CHECK(rec["witness"] == "1 4 5 5 4 1");
        if (rec["check_id"] == "cohomology.basic") CHECK(rec["witness"] == "1 4 6 4 1");
    }
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("reports are byte-stable across thread counts") {
    for (const char* cmd : {"kahler-check", "formality-check"}) {
        CommandOptions o;
        o.command = cmd;
        o.model = at("h5.json");
        o.bundle = at("h5_rank2.json");
        o.threads = 1;
        const auto a = run(o);
        o.threads = 6;
        const auto b = run(o);
        CHECK(a.report == b.report);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("run_tasks keeps task order and propagates exceptions") {
    std::vector<std::function<std::vector<Check>()>> tasks;
    for (int i = 0; i < 9; ++i) tasks.push_back([i] { return std::vector<Check>{make_check(std::to_string(i), "", true)}; });
    const auto out = run_tasks(tasks, 4);
    REQUIRE(out.size() == 9);
    for (int i = 0; i < 9; ++i) CHECK(out[static_cast<std::size_t>(i)].id == std::to_string(i));
    tasks.push_back([]() -> std::vector<Check> { throw std::runtime_error("boom"); });
    CHECK_THROWS_WITH(run_tasks(tasks, 3), "boom");
}

TEST_CASE("repvar compares Γ5 with h5") {
    CommandOptions o;
    o.command = "repvar";
    o.group = at("gamma5.json");
    o.compare_model = at("h5.json");
    CHECK(run(o).exit_code == 0);
    o.group = at("gamma3.json");
    o.compare_model = at("h3.json");
    CHECK(run(o).exit_code == 0);
}
