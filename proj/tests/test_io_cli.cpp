#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kmu/catalog.hpp"
#include "kmu/cli.hpp"
#include "kmu/io.hpp"

namespace fs = std::filesystem;
using kmu::QSqrt2;
using nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run kmu_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = kmu::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("kmu-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("every family emits a document that loads back") {
    TempDir dir;
    for (const auto& fam : kmu::catalog_families()) {
        for (const char* field : {"exact", "float"}) {
            const std::string f = dir.file(fam.name + "-" + field + ".json");
            std::vector<std::string> args{"catalog", "emit", fam.name, "--field", field, "-o", f};
            if (fam.name == "so2n-iwasawa") args.insert(args.end(), {"--n", "3"});
            const auto r = kmu_run(args);
            CAPTURE(fam.name);
            REQUIRE(r.code == 0);
            const auto doc = kmu::load_document(f);
            CHECK(doc.index() == (std::string(field) == "exact" ? 0u : 1u));
            CHECK(kmu_run({"--quiet", "check", "jacobi", f}).code == 0);
        }
    }
}

TEST_CASE("exact round trip preserves the algebra and structure") {
    const auto cm = kmu::build_s_N(3);
    const auto j = kmu::to_json(kmu::make_document(cm));
    const auto back = std::get<kmu::AlgebraDocument<QSqrt2>>(kmu::parse_document(j));
    CHECK(back.metric.algebra().labels() == cm.algebra().labels());
    CHECK(back.metric.gram() == cm.metric.gram());
    for (std::size_t i = 0; i < cm.dim(); ++i)
        for (std::size_t k = 0; k < cm.dim(); ++k)
            CHECK(back.metric.algebra().structure(i, k) == cm.algebra().structure(i, k));
    REQUIRE(back.contact.has_value());
    CHECK(back.contact->phi == cm.structure.phi);
    CHECK(back.contact->xi == cm.structure.xi);
    CHECK(kmu::to_json(back) == j);
}

TEST_CASE("float round trip is bit exact") {
    const auto cm = kmu::build_g_alpha_beta<double>(0.3, 1.7, 2);
    const auto j = kmu::to_json(kmu::make_document(cm));
    const auto back = std::get<kmu::AlgebraDocument<double>>(kmu::parse_document(json::parse(j.dump())));
    CHECK(back.metric.gram() == cm.metric.gram());
    CHECK(back.contact->phi == cm.structure.phi);
    for (std::size_t i = 0; i < cm.dim(); ++i)
        for (std::size_t k = 0; k < cm.dim(); ++k)
            CHECK(back.metric.algebra().structure(i, k) == cm.algebra().structure(i, k));
}

TEST_CASE("malformed documents are rejected with a location") {
    const auto good = kmu::to_json(kmu::make_document(kmu::build_heisenberg<QSqrt2>(1)));
    {
        auto j = good;
        j["extra"] = 1;
        CHECK_THROWS_AS(kmu::parse_document(j), kmu::InputError);
    }
    {
        auto j = good;
        j["basis"] = json::array({"a", "a", "b"});
        CHECK_THROWS_AS(kmu::parse_document(j), kmu::InputError);
    }
    TempDir dir;
    const std::string f = dir.file("bad.json");
    write(f, "{ \"field\": ");
    const auto r = kmu_run({"check", "jacobi", f});
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.json") != std::string::npos);
    const auto missing = kmu_run({"check", "jacobi", dir.file("nope.json")});
    CHECK(missing.code == 2);
}

TEST_CASE("exit codes") {
    TempDir dir;
    const std::string g = dir.file("g.json");
    REQUIRE(kmu_run({"catalog", "emit", "g-alpha-beta", "--alpha", "0", "--beta", "2", "-o", g}).code == 0);
    CHECK(kmu_run({"--quiet", "kappa-mu", g}).code == 0);
    CHECK(kmu_run({"--quiet", "check", "einstein", g}).code == 1);
    CHECK(kmu_run({"frobnicate"}).code == 2);
    CHECK(kmu_run({"check", "nonsense", g}).code == 2);
    CHECK(kmu_run({}).code == 2);
    CHECK(kmu_run({"--help"}).code == 0);
    CHECK(kmu_run({"catalog", "emit", "no-such-family"}).code == 2);
    CHECK(kmu_run({"rank-reduce", g, "--aprime", "Q7"}).code == 2);
}

TEST_CASE("out-of-range g(alpha,beta) warns but still emits") {
    const auto r = kmu_run({"catalog", "emit", "g-alpha-beta", "--alpha", "3", "--beta", "1"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(json::parse(r.out).contains("brackets"));
}

TEST_CASE("report schema") {
    TempDir dir;
    const std::string s = dir.file("s.json");
    REQUIRE(kmu_run({"catalog", "emit", "solvable-model", "--c", "2*r2", "--m", "2", "-o", s}).code == 0);
    const auto r = kmu_run({"check", "einstein", s});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    for (const char* key : {"tool", "version", "command", "input_digest", "records", "verdict", "timestamp", "wall_time_ms"})
        CHECK(j.contains(key));
    CHECK(j["verdict"] == "pass");
    CHECK(j["input_digest"].get<std::string>().rfind("sha256:", 0) == 0);
    const auto& rec = j["records"][0];
    CHECK(rec["name"] == "einstein");
    CHECK(rec["scalars"][0]["exact"] == "-16");
    CHECK(rec["scalars"][0]["value"] == -16.0);
    const auto quiet = kmu_run({"--no-timestamp", "check", "einstein", s});
    CHECK_FALSE(json::parse(quiet.out).contains("timestamp"));
}

TEST_CASE("SHA-256 of a known input") {
    TempDir dir;
    const std::string f = dir.file("abc.txt");
    write(f, "abc");
    CHECK(kmu::cli::sha256_files({f}) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("repeated runs are byte identical") {
    TempDir dir;
    const std::string s = dir.file("s.json");
    REQUIRE(kmu_run({"catalog", "emit", "solvable-model", "--m", "2", "-o", s}).code == 0);
    for (std::vector<std::string> args : {std::vector<std::string>{"--no-timestamp", "min-sec", s, "--samples", "200", "--seed", "9"},
                                          std::vector<std::string>{"--no-timestamp", "ricci", s},
                                          std::vector<std::string>{"--no-timestamp", "rank-reduce", s, "--aprime", "H0"}}) {
        const auto a = kmu_run(args), b = kmu_run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    const auto e1 = kmu_run({"catalog", "emit", "s-N", "--n", "3"});
    const auto e2 = kmu_run({"catalog", "emit", "s-N", "--n", "3"});
    CHECK(e1.out == e2.out);
}

TEST_CASE("combination parser") {
    const auto s = kmu::build_solvable_model<QSqrt2>(QSqrt2(0, 2), 2).metric;
    const auto v = kmu::cli::parse_combinations(s, "A1+2*A2, -1/2*r2*A1+(1-r2)*W0 ,H0");
    REQUIRE(v.size() == 3);
    CHECK(v[0][0] == QSqrt2(1));
    CHECK(v[0][1] == QSqrt2(2));
    CHECK(v[1][0] == QSqrt2(0, mpq_class(-1, 2)));
    CHECK(v[1][s.dim() - 1] == QSqrt2(1, -1));
    CHECK(v[2] == kmu::solvable_model_mean_curvature(QSqrt2(0, 2), 2));
    CHECK_THROWS_AS(kmu::cli::parse_combinations(s, "A9"), std::invalid_argument);
    CHECK_THROWS_AS(kmu::cli::parse_combinations(s, "(1*A1"), std::invalid_argument);
    CHECK_THROWS_AS(kmu::cli::parse_combinations(s, "A1,"), std::invalid_argument);
}

TEST_CASE("CLI isomorphism and deformation commands") {
    TempDir dir;
    const std::string src = dir.file("sN.json"), dst = dir.file("g.json"), map = dir.file("map.json");
    REQUIRE(kmu_run({"catalog", "emit", "s-N", "--n", "3", "-o", src}).code == 0);
    REQUIRE(kmu_run({"catalog", "emit", "g-alpha-beta", "--n", "3", "-o", dst}).code == 0);
    const auto f = kmu::s_N_to_g02_map(3);
    json rows = json::array();
    for (std::size_t r = 0; r < f.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(f(r, c).to_string());
        rows.push_back(row);
    }
    write(map, json{{"matrix", rows}}.dump());
    CHECK(kmu_run({"--quiet", "verify-iso", src, dst, "--map", map}).code == 0);
    rows[0][1] = "1";
    write(map, json{{"matrix", rows}}.dump());
    CHECK(kmu_run({"--quiet", "verify-iso", src, dst, "--map", map}).code == 1);

    const std::string out = dir.file("d.json");
    const auto d = kmu_run({"--quiet", "deform", dst, "--a", "1/2", "-o", out});
    CHECK(d.code == 0);
    CHECK(d.out.find("formula_match: pass") != std::string::npos);
    CHECK(kmu_run({"--quiet", "kappa-mu", out}).code == 0);
}

TEST_CASE("CLI rank reduction reports the criterion and the direct check") {
    TempDir dir;
    const std::string s = dir.file("s.json");
    REQUIRE(kmu_run({"catalog", "emit", "solvable-model", "--m", "2", "-o", s}).code == 0);
    const auto h = json::parse(kmu_run({"--no-timestamp", "rank-reduce", s, "--aprime", "H0"}).out);
    const auto t = json::parse(kmu_run({"--no-timestamp", "rank-reduce", s, "--aprime", "-1/2*r2*A1+1/2*r2*A2"}).out);
    auto find = [](const json& j, const std::string& name) {
        for (const auto& r : j["records"])
            if (r["name"] == name) return r;
        return json();
    };
    CHECK(find(h, "heber_einstein")["witness"] == "true");
    CHECK(find(h, "einstein_direct")["witness"] == "true");
    CHECK(find(t, "heber_einstein")["witness"] == "false");
    CHECK(find(t, "einstein_direct")["witness"] == "false");
    CHECK(find(t, "soliton_constant_preserved")["status"] == "pass");
    CHECK(t["verdict"] == "pass");
}
