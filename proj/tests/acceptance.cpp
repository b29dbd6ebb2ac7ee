// Runs the corpus suite through the command layer and prints one line per acceptance criterion.

#include "oracles.hpp"

#include "sasaki/flat.hpp"
#include "sasaki/io.hpp"
#include "sasaki/report.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <thread>

using namespace sasaki;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
    CommandOptions options;
    CommandResult result;
    json report;  // null on exit code 2
};

const std::vector<std::string> kModels = {"h3", "h5", "h7"};
const std::vector<std::string> kBundles = {"trivial", "trivial2", "unitary", "real", "rank2"};

std::vector<CommandOptions> suite(const fs::path& dir, unsigned threads) {
    std::vector<CommandOptions> s;
    auto opt = [&](std::string cmd) {
        CommandOptions o;
        o.command = std::move(cmd);
        o.threads = threads;
        return o;
    };
    auto file = [&](const std::string& name) { return (dir / (name + ".json")).string(); };
    for (const auto& m : kModels) {
        auto v = opt("validate");
        v.model = file(m);
        s.push_back(v);
        for (const char* cmd : {"kahler-check", "ddc-check", "formality-check"}) {
            auto o = opt(cmd);
            o.model = file(m);
            s.push_back(o);
            for (const auto& b : kBundles) {
                o.bundle = file(m + "_" + b);
                s.push_back(o);
            }
        }
        auto c = opt("cohomology");
        c.model = file(m);
        c.basic = c.full = true;
        s.push_back(c);
        c.basic = c.full = false;
        for (const auto& b : kBundles) {
            c.bundle = file(m + "_" + b);
            s.push_back(c);
        }
    }
    auto q = opt("quadraticity");
    q.model = file("h5");
    q.rank = 2;
    s.push_back(q);
    q.model = file("h3");
    q.rank = 1;
    s.push_back(q);
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"trivial", "trivial"}, {"unitary", "real"}, {"unitary", "trivial"}, {"rank2", "unitary"}, {"real", "real"}};
    for (const auto& [a, b] : pairs) {
        auto c = opt("cup-vanishing");
        c.model = file("h7");
        c.bundle1 = file("h7_" + a);
        c.bundle2 = file("h7_" + b);
        c.degrees = std::pair{2, 2};
        s.push_back(c);
    }
    for (std::size_t m : {1, 2}) {
        auto r = opt("repvar");
        r.group = file("gamma5");
        r.compare_model = file("h5");
        r.rank = m;
        s.push_back(r);
    }
    auto r3 = opt("repvar");
    r3.group = file("gamma3");
    r3.compare_model = file("h3");
    s.push_back(r3);
    return s;
}

std::vector<Run> run_suite(const fs::path& dir, unsigned threads) {
    std::vector<Run> out;
    for (const auto& o : suite(dir, threads)) {
        Run r{o, run_command(o), {}};
        if (r.result.exit_code != 2) r.report = json::parse(r.result.report);
        out.push_back(std::move(r));
    }
    return out;
}

const json* record(const Run& r, const std::string& id) {
    if (r.report.is_null()) return nullptr;
    for (const auto& rec : r.report["records"])
        if (rec["check_id"] == id) return &rec;
    return nullptr;
}

bool passes(const Run& r, const std::string& id) {
    const json* rec = record(r, id);
    return rec && (*rec)["status"] == "pass";
}

std::string witness(const Run& r, const std::string& id) {
    const json* rec = record(r, id);
    return rec ? (*rec)["witness"].get<std::string>() : std::string("<missing>");
}

std::string stem(const std::string& path) { return path.empty() ? "" : fs::path(path).stem().string(); }

std::string label(const CommandOptions& o) {
    std::string s = stem(o.model);
    for (const auto* p : {&o.bundle, &o.bundle1, &o.bundle2, &o.group})
        if (!p->empty()) s += "/" + stem(*p);
    if (o.rank) s += "/m=" + std::to_string(*o.rank);
    return s;
}

std::vector<const Run*> select(const std::vector<Run>& runs, const std::string& command) {
    std::vector<const Run*> out;
    for (const auto& r : runs)
        if (r.options.command == command) out.push_back(&r);
    return out;
}

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

void print(int n, const std::string& title, const Outcome& v, const std::string& summary) {
    std::cout << "criterion " << n << " [" << title << "]: " << (v.ok ? "PASS" : "FAIL");
    if (!summary.empty()) std::cout << " - " << summary;
    std::cout << "\n";
    std::size_t shown = 0;
    for (const auto& note : v.notes) {
        if (++shown > 12) {
            std::cout << "    ... " << v.notes.size() - 12 << " more\n";
            break;
        }
        std::cout << "    " << note << "\n";
    }
}

Outcome criterion1(const std::vector<Run>& runs, std::string& summary) {
    static const std::vector<std::string> ids = {
        "ce.d_squared",           "ce.cartan",
        "operators.d_squared",    "operators.dprime_squared",
        "operators.dsecond_squared", "operators.dprime_dsecond",
        "kahler.lambda_del",      "kahler.lambda_delbar",
        "kahler.laplacians",      "delta.relation",
    };
    static const std::vector<std::string> twisted_ids = {"kahler_twisted.first", "kahler_twisted.second",
                                                         "kahler_twisted.laplacians"};
    Outcome v;
    std::size_t instances = 0, failed = 0;
    bool opposite = true;
    for (const auto* r : select(runs, "kahler-check")) {
        const std::string b = stem(r->options.bundle);
        if (b.empty() || b.find("trivial2") != std::string::npos) continue;
        ++instances;
        auto all = ids;
        all.insert(all.end(), twisted_ids.begin(), twisted_ids.end());
        bool inst_ok = true;
        for (const auto& id : all)
            if (!passes(*r, id)) {
                inst_ok = false;
                v.require(false, label(r->options) + ": " + id + " (" + witness(*r, id).substr(0, 90) + ")");
            }
        failed += !inst_ok;
        for (const char* id : {"kahler_twisted.first.opposite_sign", "kahler_twisted.second.opposite_root"}) {
            const json* rec = record(*r, id);
            if (rec && (*rec)["witness"] != "holds") opposite = false;
        }
    }
    summary = std::to_string(instances - failed) + "/" + std::to_string(instances) +
              " model/bundle instances satisfy every identity as printed";
    if (opposite) summary += "; the opposite-sign forms [Λ,D′]=√−1(D″)*, [Λ,D″]=−√−1(D′)* hold on all of them";
    return v;
}

Outcome criterion2(const std::vector<Run>& runs, std::string& summary) {
    Outcome v;
    std::size_t degrees = 0;
    for (const auto* r : select(runs, "ddc-check")) {
        v.require(r->result.exit_code == 0, label(r->options) + ": exit " + std::to_string(r->result.exit_code));
        for (int k = 0;; ++k) {
            const std::string id = "ddc.degree" + std::to_string(k);
            if (!record(*r, id)) break;
            ++degrees;
            v.require(passes(*r, id), label(r->options) + ": " + id);
        }
        v.require(passes(*r, "ddc.lemma"), label(r->options) + ": ddc.lemma");
    }
    summary = std::to_string(select(runs, "ddc-check").size()) + " instances, " + std::to_string(degrees) +
              " degrees compared as canonical subspaces";
    return v;
}

Outcome criterion3(const std::vector<Run>& runs, std::string& summary) {
    Outcome v;
    std::size_t arrows = 0;
    for (const auto* r : select(runs, "formality-check")) {
        for (const auto& rec : r->report["records"]) {
            const std::string id = rec["check_id"];
            if (id.rfind("formality.", 0) != 0 || rec["status"] == "info") continue;
            arrows += id.rfind("formality.arrow.", 0) == 0;
            v.require(rec["status"] == "pass", label(r->options) + ": " + id + " " + rec["witness"].get<std::string>());
        }
        v.require(passes(*r, "formality.induced_differential"), label(r->options) + ": induced differential");
    }
    summary = std::to_string(arrows) + " arrows checked over " + std::to_string(select(runs, "formality-check").size()) +
              " instances; induced differential on H_{Dᶜ} is zero";
    return v;
}

Outcome criterion4(const std::vector<Run>& runs, const fs::path& dir, std::string& summary) {
    Outcome v;
    for (const auto* r : select(runs, "cohomology")) {
        if (r->options.bundle.empty()) continue;
        const std::string b = stem(r->options.bundle);
        v.require(passes(*r, "cohomology.twisted.proposition"),
                  label(r->options) + ": " + witness(*r, "cohomology.twisted.proposition"));
        const std::string ext = witness(*r, "cohomology.twisted.extended"), full = witness(*r, "cohomology.twisted.full");
        if (b == "h5_trivial") {
            std::string expect;
            for (auto x : oracle::heisenberg_betti(2)) expect += (expect.empty() ? "" : " ") + std::to_string(x);
            v.require(expect == "1 4 5 5 4 1", "closed-form Betti numbers of h5: " + expect);
            v.require(ext == expect && full == expect, "h5 trivial: extended " + ext + ", full " + full);
        }
        if (b.find("unitary") != std::string::npos || b.find("real") != std::string::npos) {
            v.require(ext.find_first_not_of("0 ") == std::string::npos, label(r->options) + ": extended " + ext);
            v.require(full.find_first_not_of("0 ") == std::string::npos, label(r->options) + ": full " + full);
        }
    }
    // Contraction homotopy oracle: D i_{X_1} + i_{X_1} D = c + nilpotent, hence invertible and null-homotopic.
    std::size_t homotopies = 0;
    for (const auto& m : kModels)
        for (const char* b : {"unitary", "real"}) {
            const auto d = parse_model(read_file(dir / (m + ".json")));
            const auto bundle = parse_bundle(read_file(dir / (m + "_" + b + ".json")));
            const auto tc = attach_bundle(d, bundle);
            const Gaussian c = bundle.connection[1](0, 0);
            const auto x1 = unit_vector(d.dim, 1);
            for (int k = 0; k <= static_cast<int>(d.dim); ++k) {
                Matrix h = Matrix::zero(tc.full_dim(k), tc.full_dim(k));
                if (k > 0) h += tc.full_d(k - 1) * tc.full_interior(x1, k);
                if (k < static_cast<int>(d.dim)) h += tc.full_interior(x1, k + 1) * tc.full_d(k);
                v.require(!c.is_zero() && oracle::nilpotency(h - c * Matrix::identity(tc.full_dim(k))) > 0,
                          m + "_" + b + ": homotopy is not c + nilpotent in degree " + std::to_string(k));
                ++homotopies;
            }
        }
    summary = "extended = full on every corpus bundle; h5 trivial 1 4 5 5 4 1; characters acyclic (" +
              std::to_string(homotopies) + " homotopy degrees)";
    return v;
}

Outcome criterion5(const std::vector<Run>& runs, std::string& summary) {
    Outcome v;
    for (const auto* r : select(runs, "quadraticity")) {
        const std::string m = stem(r->options.model);
        const std::string verdict = witness(*r, "quadraticity.verdict");
        if (m == "h5") {
            v.require(witness(*r, "quadraticity.lefschetz").rfind("rank 16", 0) == 0,
                      "h5: " + witness(*r, "quadraticity.lefschetz"));
            v.require(passes(*r, "quadraticity.multilinear"), "h5: multilinear certificate");
            v.require(verdict == "quadratic-certified" && r->result.exit_code == 0, "h5: verdict " + verdict);
            summary += "h5 m=2: " + witness(*r, "quadraticity.lefschetz") + ", " + verdict;
        } else {
            v.require(verdict == "hypothesis-violated" && r->result.exit_code == 1, "h3: verdict " + verdict);
            summary += "; h3 m=1: " + verdict;
        }
    }
    return v;
}

Outcome criterion6(const std::vector<Run>& runs, std::string& summary) {
    Outcome v;
    for (const auto* r : select(runs, "repvar")) {
        if (stem(r->options.group) != "gamma5") continue;
        const std::size_t m = r->options.rank.value_or(1);
        const std::string want = std::to_string(4 * m * m);
        v.require(witness(*r, "repvar.h1_dims") == want + " vs " + want, label(r->options) + ": " + witness(*r, "repvar.h1_dims"));
        for (const char* id : {"repvar.h1_dims", "repvar.linear_blocks", "repvar.quadratic_ideals"})
            v.require(passes(*r, id), label(r->options) + ": " + id);
        summary += (summary.empty() ? "" : "; ") + std::string("m=") + std::to_string(m) + ": H¹ " +
                   witness(*r, "repvar.h1_dims") + ", " + witness(*r, "repvar.quadratic_ideals");
    }
    return v;
}

Outcome criterion7(const std::vector<Run>& runs, std::string& summary) {
    Outcome v;
    std::size_t pairs = 0;
    for (const auto* r : select(runs, "cup-vanishing")) {
        ++pairs;
        v.require(r->result.exit_code == 0, label(r->options) + ": exit " + std::to_string(r->result.exit_code));
        v.require(passes(*r, "cup.vanishing") && passes(*r, "cup.vanishing_full"), label(r->options) + ": nonzero product");
        v.require(passes(*r, "cup.guard"), label(r->options) + ": guard " + witness(*r, "cup.guard"));
    }
    const auto runs_cup = select(runs, "cup-vanishing");
    summary = "H²⊗H²→H⁴ zero for " + std::to_string(pairs) + " bundle pairs on h7; guard: " +
              (runs_cup.empty() ? "" : witness(*runs_cup.front(), "cup.guard"));
    return v;
}

Outcome criterion8(const std::vector<Run>& runs, std::string& summary) {
    Outcome v;
    for (const auto* r : select(runs, "kahler-check")) {
        const std::string m = stem(r->options.model);
        if (!r->options.bundle.empty() || m == "h3") continue;
        const int n = m == "h5" ? 2 : 3;
        for (int k = 0; k + 2 <= 2 * n; ++k) {
            const std::string id = "lefschetz.r" + std::to_string(k);
            const long expect = std::min(oracle::binom(2 * n, k), oracle::binom(2 * n, k + 2));
            v.require(passes(*r, id), m + ": " + id + " " + witness(*r, id));
            v.require(witness(*r, id).rfind("rank " + std::to_string(expect) + " ", 0) == 0,
                      m + ": " + id + " expected rank " + std::to_string(expect) + ", got " + witness(*r, id));
            summary += (summary.empty() ? "" : ", ") + m + " r=" + std::to_string(k) + " " + witness(*r, id);
        }
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "sasaki_acceptance_corpus";
    fs::remove_all(dir);
    {
        CommandOptions o;
        o.command = "emit-corpus";
        o.out = dir.string();
        const auto r = run_command(o);
        if (r.exit_code != 0) {
            std::cerr << "emit-corpus failed: " << r.error << "\n";
            return 2;
        }
    }
    const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
    const auto t0 = std::chrono::steady_clock::now();
    const auto first = run_suite(dir, 1);
    const auto t1 = std::chrono::steady_clock::now();
    std::cout << "suite: " << first.size() << " commands in " << std::chrono::duration<double>(t1 - t0).count() << " s\n";
    for (const auto& r : first)
        if (r.result.exit_code == 2) std::cout << "    input error in " << echo(r.options) << ": " << r.result.error << "\n";

    bool all = true;
    std::string s;
    auto report = [&](int n, const char* title, const Outcome& v) {
        print(n, title, v, s);
        all = all && v.ok;
        s.clear();
    };
    report(1, "operator identities", criterion1(first, s));
    report(2, "DDᶜ-lemma", criterion2(first, s));
    report(3, "almost-formality chain", criterion3(first, s));
    report(4, "extended model computes twisted cohomology", criterion4(first, dir, s));
    report(5, "quadraticity", criterion5(first, s));
    report(6, "germ cross-validation", criterion6(first, s));
    report(7, "cup-product vanishing", criterion7(first, s));
    report(8, "Lefschetz ranges", criterion8(first, s));

    const auto second = run_suite(dir, hw);
    Outcome v9;
    for (std::size_t i = 0; i < first.size(); ++i) {
        v9.require(first[i].result.report == second[i].result.report && first[i].result.exit_code == second[i].result.exit_code &&
                       first[i].result.error == second[i].result.error,
                   echo(first[i].options) + ": reports differ");
    }
    s = std::to_string(first.size()) + " reports byte-identical across two runs (1 and " + std::to_string(hw) + " threads)";
    report(9, "determinism", v9);
    return all ? 0 : 1;
}
