#include "sasaki/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sasaki {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) { throw InputError(path + ": " + message); }

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line number for the diagnostic.
        std::size_t line = 1;
        for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i)
            if (text[i] == '\n') ++line;
        throw InputError("line " + std::to_string(line) + ": " + e.what());
    }
}

const json& field(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Gaussian scalar(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a scalar string such as \"1/2\" or \"0+1*i\"");
    try {
        return Gaussian::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

std::size_t count(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<Gaussian> vector_of(const json& j, const std::string& path, std::size_t expected) {
    if (!j.is_array()) fail(path, "expected an array");
    if (j.size() != expected) fail(path, "expected " + std::to_string(expected) + " entries, found " + std::to_string(j.size()));
    std::vector<Gaussian> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar(j[i], at(path, i)));
    return v;
}

Matrix matrix_of(const json& j, const std::string& path, std::size_t n) {
    if (!j.is_array() || j.size() != n) fail(path, "expected " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = vector_of(j[r], at(path, r), n);
        for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
    }
    return m;
}

json to_json(std::span<const Gaussian> v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(z.to_string());
    return a;
}

json to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        a.push_back(std::move(row));
    }
    return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

SasakianLieDatum parse_model(std::string_view text) {
    const json j = parse_json(text);
    SasakianLieDatum d;
    const auto& name = field(j, "", "name");
    if (!name.is_string()) fail("name", "expected a string");
    d.name = name.get<std::string>();
    d.dim = count(field(j, "", "dimension"), "dimension");
    if (d.dim % 2 == 0) fail("dimension", "must be odd");
    if (d.dim > 15) fail("dimension", "at most 15 is supported");
    const auto& br = field(j, "", "brackets");
    if (!br.is_array()) fail("brackets", "expected an array");
    for (std::size_t b = 0; b < br.size(); ++b) {
        const std::string p = at("brackets", b);
        StructureConstant s;
        s.i = count(field(br[b], p, "i"), join(p, "i"));
        s.j = count(field(br[b], p, "j"), join(p, "j"));
        s.k = count(field(br[b], p, "k"), join(p, "k"));
        for (auto [v, key] : {std::pair{s.i, "i"}, {s.j, "j"}, {s.k, "k"}})
            if (v >= d.dim) fail(join(p, key), "index out of range");
        if (s.i == s.j) fail(p, "i and j must differ");
        s.coeff = scalar(field(br[b], p, "coeff"), join(p, "coeff"));
        d.brackets.push_back(std::move(s));
    }
    d.eta = vector_of(field(j, "", "eta"), "eta", d.dim);
    d.xi = vector_of(field(j, "", "xi"), "xi", d.dim);
    d.complex_structure = matrix_of(field(j, "", "I"), "I", d.dim);
    if (auto it = j.find("orientation"); it != j.end()) {
        if (!it->is_number_integer() || (it->get<int>() != 1 && it->get<int>() != -1)) fail("orientation", "expected 1 or -1");
        d.orientation = it->get<int>();
    }
    return d;
}

std::string serialize_model(const SasakianLieDatum& d) {
    json j;
    j["name"] = d.name;
    j["dimension"] = d.dim;
    json br = json::array();
    for (const auto& s : d.brackets) {
        json b;
        b["i"] = s.i;
        b["j"] = s.j;
        b["k"] = s.k;
        b["coeff"] = s.coeff.to_string();
        br.push_back(std::move(b));
    }
    j["brackets"] = std::move(br);
    j["eta"] = to_json(d.eta);
    j["xi"] = to_json(d.xi);
    j["I"] = to_json(d.complex_structure);
    if (d.orientation != 0) j["orientation"] = d.orientation;
    return dump(j);
}

FlatBundleDatum parse_bundle(std::string_view text) {
    const json j = parse_json(text);
    const std::size_t rank = count(field(j, "", "rank"), "rank");
    if (rank == 0) fail("rank", "must be positive");
    const auto& diag = field(j, "", "diagonal");
    if (!diag.is_array() || diag.size() != rank) fail("diagonal", "expected " + std::to_string(rank) + " connection forms");
    if (!diag[0].is_array()) fail("diagonal[0]", "expected an array");
    const std::size_t dim = diag[0].size();
    std::vector<std::vector<Gaussian>> forms;
    for (std::size_t r = 0; r < rank; ++r) forms.push_back(vector_of(diag[r], at("diagonal", r), dim));
    Matrix h;
    if (auto it = j.find("metric"); it != j.end()) h = matrix_of(*it, "metric", rank);
    FlatBundleDatum b = FlatBundleDatum::diagonal(forms, h);
    if (auto it = j.find("name"); it != j.end()) {
        if (!it->is_string()) fail("name", "expected a string");
        b.name = it->get<std::string>();
    }
    if (!(b.metric == b.metric.adjoint())) fail("metric", "not Hermitian");
    return b;
}

std::string serialize_bundle(const FlatBundleDatum& b) {
    if (!b.is_diagonal()) throw std::invalid_argument("only diagonal bundles have a file format");
    json j;
    if (!b.name.empty()) j["name"] = b.name;
    j["rank"] = b.rank;
    json diag = json::array();
    for (std::size_t r = 0; r < b.rank; ++r) {
        std::vector<Gaussian> form;
        for (const auto& c : b.connection) form.push_back(c(r, r));
        diag.push_back(to_json(form));
    }
    j["diagonal"] = std::move(diag);
    if (!(b.metric == Matrix::identity(b.rank))) j["metric"] = to_json(b.metric);
    return dump(j);
}

GroupFile parse_group(std::string_view text) {
    const json j = parse_json(text);
    GroupFile g;
    if (auto it = j.find("name"); it != j.end() && it->is_string()) g.presentation.name = it->get<std::string>();
    const auto& gens = field(j, "", "generators");
    if (!gens.is_array()) fail("generators", "expected an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].is_string()) fail(at("generators", i), "expected a string");
        g.presentation.generators.push_back(gens[i].get<std::string>());
    }
    const auto& rels = field(j, "", "relators");
    if (!rels.is_array()) fail("relators", "expected an array");
    for (std::size_t i = 0; i < rels.size(); ++i) {
        if (!rels[i].is_string()) fail(at("relators", i), "expected a string");
        g.presentation.relators.push_back(rels[i].get<std::string>());
    }
    try {
        g.presentation.validate();
    } catch (const std::invalid_argument& e) {
        fail("relators", e.what());
    }
    if (auto it = j.find("representation"); it != j.end()) {
        if (!it->is_object()) fail("representation", "expected an object");
        Representation rho;
        bool first = true;
        for (const auto& gen : g.presentation.generators) {
            const std::string p = "representation." + gen;
            const auto& m = field(*it, "representation", gen.c_str());
            if (first) {
                if (!m.is_array() || m.empty()) fail(p, "expected a square matrix");
                rho.rank = m.size();
                first = false;
            }
            rho.images[gen] = matrix_of(m, p, rho.rank);
        }
        for (const auto& [key, _] : it->items())
            if (!rho.images.count(key)) fail("representation." + key, "not a generator");
        try {
            rho.validate(g.presentation);
        } catch (const std::invalid_argument& e) {
            fail("representation", e.what());
        }
        g.representation = std::move(rho);
    }
    if (auto it = j.find("matching"); it != j.end()) {
        if (!it->is_object()) fail("matching", "expected an object");
        for (const auto& [key, v] : it->items()) {
            const std::string p = "matching." + key;
            if (std::find(g.presentation.generators.begin(), g.presentation.generators.end(), key) ==
                g.presentation.generators.end())
                fail(p, "not a generator");
            if (!v.is_number_integer()) fail(p, "expected an integer");
            g.matching[key] = v.get<int>();
        }
    }
    return g;
}

std::string serialize_group(const GroupFile& g) {
    json j;
    if (!g.presentation.name.empty()) j["name"] = g.presentation.name;
    j["generators"] = g.presentation.generators;
    j["relators"] = g.presentation.relators;
    if (g.representation) {
        json r;
        for (const auto& gen : g.presentation.generators) r[gen] = to_json(g.representation->images.at(gen));
        j["representation"] = std::move(r);
    }
    if (!g.matching.empty()) {
        json m;
        for (const auto& gen : g.presentation.generators)
            if (auto it = g.matching.find(gen); it != g.matching.end()) m[gen] = it->second;
        j["matching"] = std::move(m);
    }
    return dump(j);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

SasakianLieDatum heisenberg(std::size_t n) {
    SasakianLieDatum d;
    d.name = "h" + std::to_string(2 * n + 1);
    d.dim = 2 * n + 1;
    for (std::size_t a = 0; a < n; ++a) d.brackets.push_back({2 * a + 1, 2 * a + 2, 0, Gaussian(-1)});
    d.eta = unit_vector(d.dim, 0);
    d.xi = unit_vector(d.dim, 0);
    d.complex_structure = Matrix(d.dim, d.dim);
    for (std::size_t a = 0; a < n; ++a) {
        d.complex_structure(2 * a + 2, 2 * a + 1) = 1;
        d.complex_structure(2 * a + 1, 2 * a + 2) = -1;
    }
    return d;
}

std::vector<Gaussian> form(std::size_t dim, std::size_t k, Gaussian c) {
    std::vector<Gaussian> v(dim);
    v[k] = std::move(c);
    return v;
}

FlatBundleDatum named(FlatBundleDatum b, std::string name) {
    b.name = std::move(name);
    return b;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> corpus_files() {
    std::vector<std::pair<std::string, std::string>> files;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto d = heisenberg(n);
        const std::size_t N = d.dim;
        files.emplace_back(d.name + ".json", serialize_model(d));
        files.emplace_back(d.name + "_trivial.json",
                           serialize_bundle(named(FlatBundleDatum::diagonal({form(N, 1, 0)}), "trivial")));
        files.emplace_back(d.name + "_trivial2.json",
                           serialize_bundle(named(FlatBundleDatum::diagonal({form(N, 1, 0), form(N, 1, 0)}), "trivial rank 2")));
        files.emplace_back(d.name + "_unitary.json",
                           serialize_bundle(named(FlatBundleDatum::diagonal({form(N, 1, Gaussian::i())}), "unitary character i e^1")));
        files.emplace_back(d.name + "_real.json",
                           serialize_bundle(named(FlatBundleDatum::diagonal({form(N, 1, 1)}), "real character e^1")));
        const std::size_t second = n >= 2 ? 3 : 2;
        files.emplace_back(d.name + "_rank2.json",
                           serialize_bundle(named(FlatBundleDatum::diagonal({form(N, 1, 1), form(N, second, 1)}),
                                                  "diag(e^1, e^" + std::to_string(second) + ")")));
    }
    GroupFile g3;
    g3.presentation = {"gamma3", {"a", "b", "c"}, {"abABC", "acAC", "bcBC"}};
    g3.representation = Representation::trivial(g3.presentation, 1);
    g3.matching = {{"a", 1}, {"b", 2}, {"c", -1}};
    files.emplace_back("gamma3.json", serialize_group(g3));
    GroupFile g5;
    g5.presentation = {"gamma5",
                       {"a", "b", "x", "y", "c"},
                       {"abABC", "xyXYC", "axAX", "ayAY", "bxBX", "byBY", "acAC", "bcBC", "xcXC", "ycYC"}};
    g5.representation = Representation::trivial(g5.presentation, 1);
    g5.matching = {{"a", 1}, {"b", 2}, {"x", 3}, {"y", 4}, {"c", -1}};
    files.emplace_back("gamma5.json", serialize_group(g5));
    return files;
}

}  // namespace sasaki
