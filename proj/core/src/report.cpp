#include "sasaki/report.hpp"

#include "sasaki/basic.hpp"
#include "sasaki/flat.hpp"
#include "sasaki/germ.hpp"
#include "sasaki/group.hpp"
#include "sasaki/io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <thread>

namespace sasaki {

namespace {

using json = nlohmann::ordered_json;
using Task = std::function<std::vector<Check>()>;

std::string dims_str(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

const std::map<std::string, std::string>& axiom_anchors() {
    static const std::map<std::string, std::string> m = {
        {"odd_dimension", "dim M = 2n+1"},
        {"jacobi", "[[X,Y],Z]+[[Y,Z],X]+[[Z,X],Y]=0"},
        {"reeb_normalized", "η(ξ)=1"},
        {"reeb_kills_deta", "i_ξdη=0"},
        {"contact", "η∧(dη)^n≠0"},
        {"complex_structure_kills_reeb", "Iξ=0"},
        {"complex_structure_on_contact_distribution", "I²=−1 on ker η"},
        {"cr_rank", "dim T^{1,0}=n"},
        {"cr_integrable", "[T^{1,0},T^{1,0}]⊂T^{1,0}"},
        {"reeb_preserves_cr", "L_ξI=0"},
        {"strongly_pseudoconvex", "L_η(X,X)=dη(X,IX)>0"},
    };
    return m;
}

struct Inputs {
    std::vector<InputDigest> digests;

    std::string load(const std::string& path) {
        std::string text = read_file(path);
        digests.push_back({path, sha256_hex(text)});
        return text;
    }
    SasakianLieDatum model(const std::string& path) {
        const std::string text = load(path);
        try {
            return parse_model(text);
        } catch (const InputError& e) {
            throw InputError(path + ": " + e.what());
        }
    }
    FlatBundleDatum bundle(const std::string& path) {
        const std::string text = load(path);
        try {
            return parse_bundle(text);
        } catch (const InputError& e) {
            throw InputError(path + ": " + e.what());
        } catch (const BundleError& e) {
            throw InputError(path + ": " + e.what());
        }
    }
    GroupFile group(const std::string& path) {
        const std::string text = load(path);
        try {
            return parse_group(text);
        } catch (const InputError& e) {
            throw InputError(path + ": " + e.what());
        }
    }
};

std::vector<Check> validation_checks(const SasakianLieDatum& d) {
    std::vector<Check> out;
    const auto rep = validate_sasakian(d);
    for (const auto& a : rep.axioms) {
        auto it = axiom_anchors().find(a.axiom);
        out.push_back(make_check("axiom." + a.axiom, it == axiom_anchors().end() ? a.axiom : it->second, a.passed,
                                 a.passed ? "" : a.witness));
    }
    return out;
}

/// Throws InputError unless every axiom holds.
void require_valid(const SasakianLieDatum& d, const std::string& path) {
    for (const auto& a : validate_sasakian(d).axioms)
        if (!a.passed) throw InputError(path + ": model fails " + a.axiom + (a.witness.empty() ? "" : " (" + a.witness + ")"));
}

FlatBundleDatum check_dim(FlatBundleDatum b, const SasakianLieDatum& d, const std::string& path) {
    if (b.dim() != d.dim)
        throw InputError(path + ": diagonal: connection forms have " + std::to_string(b.dim()) + " entries, model has dimension " +
                         std::to_string(d.dim));
    return b;
}

std::vector<Check> ce_checks(const CEComplex& ce) {
    std::vector<Check> out;
    bool sq = true;
    for (int k = 0; k + 1 < static_cast<int>(ce.datum().dim); ++k) sq = sq && (ce.d(k + 1) * ce.d(k)).is_zero();
    out.push_back(make_check("ce.d_squared", "d²=0", sq));
    std::string w;
    out.push_back(make_check("ce.cartan", "L_X=di_X+i_Xd", ce.cartan_formula_holds(&w), w));
    out.push_back(make_check("ce.wedge", "α∧β=(−1)^{pq}β∧α", ce.wedge_axioms_hold()));
    return out;
}

std::vector<Check> lefschetz_checks(const BasicComplex& bc) {
    std::vector<Check> out;
    for (int r = 0; r + 2 <= bc.top(); ++r) {
        const auto l = lefschetz_map(bc, r);
        std::string w = "rank " + std::to_string(l.rank) + " : " + std::to_string(l.source_dim) + " → " +
                        std::to_string(l.target_dim);
        out.push_back(make_check("lefschetz.r" + std::to_string(r),
                                 "[dη]∧ : H^r_B→H^{r+2}_B injective for r≤n−1, surjective for r≥n−1",
                                 l.prediction_holds, w));
    }
    return out;
}

std::vector<Check> hodge_checks(const BasicComplex& bc, bool full) {
    std::vector<Check> out;
    const int top = full ? bc.full_top() : bc.top();
    for (int k = 0; k <= top; ++k) {
        const auto h = full ? full_harmonic_projector(bc, k) : harmonic_projector(bc, k);
        for (auto c : h.checks) {
            c.id += ".k" + std::to_string(k);
            out.push_back(std::move(c));
        }
    }
    return out;
}

struct Context {
    const CommandOptions& o;
    Inputs in;
    std::vector<Check> records;
};

void add(Context& c, std::vector<Task> tasks) {
    auto r = run_tasks(tasks, c.o.threads);
    c.records.insert(c.records.end(), r.begin(), r.end());
}

void cmd_validate(Context& c) {
    const auto d = c.in.model(c.o.model);
    c.records = validation_checks(d);
    if (!all_pass(c.records)) return;
    const CEComplex ce(d);
    std::optional<FlatBundleDatum> bundle;
    if (!c.o.bundle.empty()) bundle = check_dim(c.in.bundle(c.o.bundle), d, c.o.bundle);
    std::vector<Task> tasks = {
        [&] { return ce_checks(ce); },
        [&] {
            const BasicComplex bc(ce);
            auto out = bigrading(bc).checks;
            append(out, metric_and_star(bc).checks);
            return out;
        },
    };
    if (bundle)
        tasks.push_back([&] {
            try {
                const BasicComplex bc(ce, *bundle);
                auto out = scoped("bundle", bc.construction_checks());
                out.push_back(make_check("bundle.flat", "D²=0", true));
                return out;
            } catch (const BundleError& e) {
                return std::vector<Check>{make_check("bundle.flat", "D²=0", false, e.what())};
            }
        });
    add(c, std::move(tasks));
}

void cmd_cohomology(Context& c) {
    const auto d = c.in.model(c.o.model);
    require_valid(d, c.o.model);
    if (!c.o.basic && !c.o.full && c.o.bundle.empty()) throw InputError("cohomology: one of --basic, --full, --bundle is required");
    const CEComplex ce(d);
    std::vector<Task> tasks;
    if (c.o.basic)
        tasks.push_back([&] {
            const BasicComplex bc(ce);
            return std::vector<Check>{make_info("cohomology.basic", "H*_B", dims_str(betti_numbers(bc.complex())))};
        });
    if (c.o.full)
        tasks.push_back(
            [&] { return std::vector<Check>{make_info("cohomology.full", "H*(g)", dims_str(betti_numbers(ce.complex())))}; });
    std::optional<FlatBundleDatum> b;
    if (!c.o.bundle.empty()) b = check_dim(c.in.bundle(c.o.bundle), d, c.o.bundle);
    if (b)
        tasks.push_back([&] {
            const BasicComplex tc(ce, *b);
            const auto basic = betti_numbers(tc.complex());
            const auto ext = betti_numbers(extended_complex(tc));
            const auto full = betti_numbers(tc.full());
            return std::vector<Check>{
                make_info("cohomology.twisted.basic", "H*_B(M,E)", dims_str(basic)),
                make_info("cohomology.twisted.extended", "H*(A*_B⊕A*_B∧η)", dims_str(ext)),
                make_info("cohomology.twisted.full", "H*(M,E)", dims_str(full)),
                make_check("cohomology.twisted.proposition", "H(A*_B⊕A*_B∧η) = H(A*(M,E))", ext == full,
                           dims_str(ext) + " vs " + dims_str(full)),
            };
        });
    add(c, std::move(tasks));
}

/// Model, CE complex and (optionally twisted) basic complex shared by several commands.
struct Setting {
    SasakianLieDatum datum;
    std::unique_ptr<CEComplex> ce;
    std::unique_ptr<BasicComplex> bc;
    bool twisted = false;
};

Setting setting(Context& c) {
    Setting s;
    s.datum = c.in.model(c.o.model);
    require_valid(s.datum, c.o.model);
    s.ce = std::make_unique<CEComplex>(s.datum);
    FlatBundleDatum b;
    if (!c.o.bundle.empty()) {
        b = check_dim(c.in.bundle(c.o.bundle), s.datum, c.o.bundle);
        s.twisted = true;
    }
    s.bc = std::make_unique<BasicComplex>(*s.ce, b);
    return s;
}

void cmd_kahler(Context& c) {
    const Setting s = setting(c);
    const BasicComplex& bc = *s.bc;
    std::vector<Task> tasks = {
        [&] { return ce_checks(*s.ce); },
        [&] { return bigrading(bc).checks; },
        [&] { return metric_and_star(bc).checks; },
        [&] { return operator_suite(bc).checks; },
        [&] { return verify_kahler_identities(bc).checks; },
        [&] { return delta_relation_check(bc).checks; },
        [&] { return lefschetz_checks(bc); },
        [&] { return build_dprime_dsecond(bc).checks; },
        [&] { return scoped("basic", hodge_checks(bc, false)); },
    };
    if (s.twisted) {
        tasks.push_back([&] { return verify_twisted_kahler(bc).checks; });
        tasks.push_back([&] { return check_harmonicity(bc).checks; });
        tasks.push_back([&] { return theta_split_and_thm42(bc).checks; });
        tasks.push_back([&] { return scoped("full", hodge_checks(bc, true)); });
    }
    add(c, std::move(tasks));
}

void cmd_ddc(Context& c) {
    const Setting s = setting(c);
    add(c, {[&] {
                const auto r = verify_ddc_lemma(*s.bc);
                auto out = r.checks;
                for (const auto& d : r.degrees)
                    out.push_back(make_check("ddc.degree" + std::to_string(d.degree),
                                             "ker D∩ker Dᶜ∩im D = ker D∩ker Dᶜ∩im Dᶜ = im DDᶜ", d.equal,
                                             "dims " + std::to_string(d.dim_im_d) + ", " + std::to_string(d.dim_im_dc) +
                                                 ", " + std::to_string(d.dim_im_ddc)));
                return out;
            },
            [&] { return build_dprime_dsecond(*s.bc).checks; }});
}

void cmd_formality(Context& c) {
    const Setting s = setting(c);
    add(c, {[&] {
                const auto f = formality_chain(*s.bc);
                auto out = f.checks;
                out.push_back(make_info("formality.betti.model", "H*_B⊕H*_B⊗⟨η⟩", dims_str(f.model_betti)));
                out.push_back(make_info("formality.betti.extended", "A*_B⊕A*_B∧η", dims_str(f.extended_betti)));
                out.push_back(make_info("formality.betti.full", "A*(M,E)", dims_str(f.full_betti)));
                return out;
            },
            [&] { return ker_dxi_splitting(*s.bc).checks; }});
}

void cmd_quadraticity(Context& c) {
    const auto d = c.in.model(c.o.model);
    require_valid(d, c.o.model);
    FlatBundleDatum b;
    if (!c.o.bundle.empty())
        b = check_dim(c.in.bundle(c.o.bundle), d, c.o.bundle);
    else
        b = FlatBundleDatum::trivial(d.dim, c.o.rank.value_or(1));
    const auto g = build_germ_model(d, b);
    const auto q = quadraticity_check(g, static_cast<int>(d.n()));
    std::vector<Check> out;
    out.push_back(make_check("dgla", "dω+½[ω,ω]=0 on a DGLA", g.dgla_report.ok()));
    out.push_back(make_info("basic_dims", "H*_B(M,End E)", dims_str(g.basic_dims)));
    out.push_back(make_info("augmentation", "ε_x : H⁰_B(M,End E)→End(E_x)",
                            "rank " + std::to_string(g.augmentation_rank) + " of " + std::to_string(g.fiber_rank * g.fiber_rank)));
    out.push_back(make_info("cone.quadratic_block", "β∧dη+½[α,α]=0",
                            std::to_string(q.cone.quadratic_block.targets.size()) + " equations of " +
                                std::to_string(q.cone.quadratic_targets) + " targets in " +
                                std::to_string(q.cone.full.variables.size()) + " variables"));
    out.push_back(make_info("cone.bracket_block", "[α,β]⊗η=0",
                            std::to_string(q.cone.bracket_block.targets.size()) + " equations of " +
                                std::to_string(q.cone.bracket_targets) + " targets"));
    c.records = scoped("germ", std::move(out));
    append(c.records, q.checks);
}

void cmd_cup(Context& c) {
    const auto d = c.in.model(c.o.model);
    require_valid(d, c.o.model);
    if (!c.o.degrees) throw InputError("cup-vanishing: --degrees s,t is required");
    auto load = [&](const std::string& p) {
        return p.empty() ? FlatBundleDatum::trivial(d.dim, 1) : check_dim(c.in.bundle(p), d, p);
    };
    const auto b1 = load(c.o.bundle1), b2 = load(c.o.bundle2);
    const auto [s, t] = *c.o.degrees;
    const int n = static_cast<int>(d.n());
    if (!(s < n && t < n && s + t > n))
        throw RangeError("cup-vanishing: degrees " + std::to_string(s) + "," + std::to_string(t) +
                         " violate s,t<n and s+t>n for n=" + std::to_string(n));
    const TwistedComplex e = attach_bundle(d, b1), f = attach_bundle(d, b2);
    c.records = cup_vanishing_check(e, f, s, t).checks;
}

void cmd_repvar(Context& c) {
    const GroupFile gf = c.in.group(c.o.group);
    const auto& gp = gf.presentation;
    Representation rho = gf.representation ? *gf.representation : Representation::trivial(gp, c.o.rank.value_or(1));
    if (c.o.rank && *c.o.rank != rho.rank) {
        for (const auto& [g, img] : rho.images)
            if (!(img == Matrix::identity(rho.rank)))
                throw InputError(c.o.group + ": representation: --rank only applies to trivial representations");
        rho = Representation::trivial(gp, *c.o.rank);
    }
    const auto fox = fox_tangent(gp, rho);
    std::vector<Check> out;
    out.push_back(make_info("repvar.fox_tangent", "Z¹, B¹, H¹ of π₁ with ad ρ",
                            "Z¹ " + std::to_string(fox.z1) + ", B¹ " + std::to_string(fox.b1) + ", H¹ " + std::to_string(fox.h1)));
    const auto o2 = relator_order2(gp, rho);
    out.push_back(make_info("repvar.order2_system", "ρ(g)exp(U_g) to order 2",
                            std::to_string(o2.targets.size()) + " equations in " + std::to_string(o2.variables.size()) +
                                " variables"));
    if (!c.o.compare_model.empty()) {
        const auto d = c.in.model(c.o.compare_model);
        require_valid(d, c.o.compare_model);
        const TwistedComplex end_tc = attach_bundle(d, end_bundle(FlatBundleDatum::trivial(d.dim, rho.rank)));
        const auto g = build_germ_model(end_tc);
        if (gf.matching.empty()) throw InputError(c.o.group + ": matching: required for --compare-model");
        const auto cmp = compare_cone_with_variety(g, end_tc, gp, rho, gf.matching);
        append(out, cmp.checks);
        const auto q = quadraticity_check(g, static_cast<int>(d.n()));
        out.push_back(make_info("repvar.model_verdict", "the analytic germ is quadratic", to_string(q.verdict)));
    } else {
        const Subspace k = gp.relators.empty() ? Subspace::full(o2.variables.size()) : kernel(o2.linear_part);
        out.push_back(make_check("repvar.linear_blocks", "Z¹ from the Fox Jacobian = kernel of the order-1 expansion",
                                 k == fox.cocycles));
    }
    c.records = std::move(out);
}

void cmd_emit(Context& c) {
    if (c.o.out.empty()) throw InputError("emit-corpus: --out is required");
    std::error_code ec;
    std::filesystem::create_directories(c.o.out, ec);
    for (const auto& [name, text] : corpus_files()) {
        const auto path = std::filesystem::path(c.o.out) / name;
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << text)) throw InputError(path.string() + ": cannot write");
        c.records.push_back(make_check("corpus." + name, "bundled corpus file", true, sha256_hex(text)));
    }
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr)) throw std::runtime_error("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string s;
    for (unsigned int i = 0; i < len; ++i) {
        s += hex[md[i] >> 4];
        s += hex[md[i] & 15];
    }
    return s;
}

std::vector<Check> scoped(const std::string& scope, std::vector<Check> checks) {
    for (auto& c : checks) c.id = scope + "." + c.id;
    return checks;
}

std::vector<Check> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
    std::vector<std::vector<Check>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<Check> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::string Report::to_json() const {
    json j;
    j["command"] = command;
    json ins = json::array();
    for (const auto& d : inputs) ins.push_back({{"path", d.path}, {"sha256", d.sha256}});
    j["inputs"] = std::move(ins);
    auto sorted = records;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    json recs = json::array();
    for (const auto& r : sorted)
        recs.push_back({{"check_id", r.id}, {"paper_anchor", r.anchor}, {"status", to_string(r.status)}, {"witness", r.witness}});
    j["records"] = std::move(recs);
    j["verdict"] = passed() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string echo(const CommandOptions& o) {
    std::string s = o.command;
    auto opt = [&](const char* flag, const std::string& v) {
        if (!v.empty()) s += std::string(" ") + flag + " " + v;
    };
    opt("--model", o.model);
    if (o.basic) s += " --basic";
    if (o.full) s += " --full";
    opt("--bundle", o.bundle);
    opt("--bundle1", o.bundle1);
    opt("--bundle2", o.bundle2);
    if (o.degrees) s += " --degrees " + std::to_string(o.degrees->first) + "," + std::to_string(o.degrees->second);
    if (o.rank) s += " --rank " + std::to_string(*o.rank);
    opt("--group", o.group);
    opt("--compare-model", o.compare_model);
    opt("--out", o.out);
    return s;
}

CommandResult run_command(const CommandOptions& o) {
    static const std::map<std::string, void (*)(Context&)> commands = {
        {"validate", cmd_validate},         {"cohomology", cmd_cohomology},
        {"kahler-check", cmd_kahler},       {"ddc-check", cmd_ddc},
        {"formality-check", cmd_formality}, {"quadraticity", cmd_quadraticity},
        {"cup-vanishing", cmd_cup},         {"repvar", cmd_repvar},
        {"emit-corpus", cmd_emit},
    };
    CommandResult res;
    auto fail = [&](const char* what) {
        res.exit_code = 2;
        res.error = what;
        return res;
    };
    auto it = commands.find(o.command);
    if (it == commands.end()) return fail(("unknown command '" + o.command + "'").c_str());
    Context c{o, {}, {}};
    try {
        it->second(c);
    } catch (const InputError& e) {
        return fail(e.what());
    } catch (const RangeError& e) {
        return fail(e.what());
    } catch (const BundleError& e) {
        return fail(e.what());
    } catch (const DimensionMismatch& e) {
        return fail(e.what());
    } catch (const std::invalid_argument& e) {
        return fail(e.what());
    }
    // Several reports share the construction checks of the complex they were computed on.
    std::stable_sort(c.records.begin(), c.records.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    c.records.erase(std::unique(c.records.begin(), c.records.end(),
                                [](const Check& a, const Check& b) {
                                    return a.id == b.id && a.status == b.status && a.witness == b.witness;
                                }),
                    c.records.end());
    Report r{echo(o), c.in.digests, std::move(c.records)};
    res.report = r.to_json();
    res.exit_code = r.passed() ? 0 : 1;
    return res;
}

}  // namespace sasaki
