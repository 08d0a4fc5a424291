#include <doctest.h>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include "../tools/cli.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/io.hpp"

using namespace leibniz;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Out {
	int code;
	std::string out, err;
	json j() const { return json::parse(out); }
};

Out run(std::vector<std::string> args) {
	std::ostringstream o, e;
	int c = cli::run(args, o, e);
	return {c, o.str(), e.str()};
}

std::string data(const std::string& f) {
	const char* d = std::getenv("LEIBNIZ_TEST_DATA");
	return (fs::path(d ? d : "tests/data") / f).string();
}

fs::path scratch(const std::string& f) {
	fs::path dir = fs::temp_directory_path() / "leibniz_cli_test";
	fs::create_directories(dir);
	return dir / f;
}

std::string write(const std::string& f, const std::string& text) {
	auto p = scratch(f);
	std::ofstream(p) << text;
	return p.string();
}

}

TEST_CASE("check reports") {
	auto r = run({"check", data("exem1.json")});
	REQUIRE(r.code == 0);
	auto j = r.j();
	CHECK(j["identities"]["left_leibniz"]["passed"] == true);
	CHECK(j["identities"]["lie"]["passed"] == false);
	CHECK(j["killing"]["K"] == json::parse(R"([["0","0"],["0","0"]])"));
	CHECK(j["killing"]["B"] == json::parse(R"([["0","0"],["0","1"]])"));

	auto a = run({"check", data("abelian3.json")}).j();
	for (auto id : {"left_leibniz", "right_leibniz", "symmetric_leibniz", "lie"}) CHECK(a["identities"][id]["passed"] == true);

	CHECK(run({"check", data("g33.json"), "--expect", "L-invariant"}).code == 0);
	CHECK(run({"check", data("g33.json"), "--expect", "left-leibniz", "--expect", "non-lie"}).code == 0);
	CHECK(run({"check", data("g33.json"), "--expect", "lie"}).code == 1);
	CHECK(run({"check", data("sl2.json"), "--expect", "semisimple"}).code == 0);
	CHECK(run({"--format", "text", "check", data("exem1.json")}).out.find("left_leibniz: yes") != std::string::npos);
}

TEST_CASE("construct pipeline") {
	auto out = scratch("dext.json").string();
	REQUIRE(run({"-o", out, "construct", "double-ext", data("double_ext_rotation.json")}).code == 0);
	auto f = io::algebra_file_from(io::read_json_file(out));
	CHECK(f.algebra.dim() == 4);
	CHECK(run({"check", out, "--expect", "lie", "--expect", "L-invariant"}).code == 0);

	auto z = run({"construct", "L", data("ext_L_zero.json")});
	REQUIRE(z.code == 0);
	auto zf = io::algebra_file_from(z.j());
	CHECK(zf.algebra == Algebra(zf.algebra.dim()));

	auto rr = run({"construct", "R", data("ext_R_L15.json")});
	REQUIRE(rr.code == 0);
	auto rf = io::algebra_file_from(rr.j());
	auto cat = catalog_get("L_{1,5}", {{"lambda1", 1}, {"lambda2", 2}, {"mu", 1}, {"rho", -1}});
	CHECK(rf.algebra == cat.algebra);
	REQUIRE(rf.metric);
	CHECK(rf.metric->matrix() == cat.metric->matrix());

	auto v = run({"construct", "L", data("ext_L_zero.json"), "--validate"});
	CHECK(v.code == 0);
}

TEST_CASE("validate lists violated equations") {
	auto bad = write("bad_L.json", R"({"kind":"L","h":{"dim":1},
		"A":{"algebra":{"dim":2},"metric":{"matrix":[["1","0"],["0","1"]]}},"F":[[["1","0"],["0","0"]]]})");
	auto r = run({"construct", "L", bad, "--validate"});
	CHECK(r.code == 1);
	CHECK_FALSE(r.out.empty());
}

TEST_CASE("core, h2, fingerprint, catalog") {
	auto c = run({"core", data("g31.json"), "--side", "L"});
	CHECK(c.code == 0);
	CHECK(c.j()["branch"] == "nondeg_leib");
	auto h = run({"h2", data("sl2.json")});
	CHECK(h.code == 0);
	CHECK(h.j()["h2_dim"] == 0);
	CHECK(run({"fingerprint", data("exem1.json")}).j()["leib"] == 1);

	auto l = run({"catalog", "list"});
	CHECK(l.code == 0);
	CHECK(l.out.find("L_{1,4}") != std::string::npos);
	auto g = run({"catalog", "get", "g_{4,4}", "--param", "alpha=1", "--param", "lambda=1"});
	CHECK(g.code == 0);
	CHECK(run({"catalog", "get", "nothing"}).code != 0);
	CHECK(run({"catalog", "get", "g_{4,4}", "--param", "lambda=0"}).code != 0);
}

TEST_CASE("verify-tables") {
	auto r = run({"verify-tables"});
	CHECK(r.code == 0);
	CHECK_FALSE(r.out.empty());
	CHECK(run({"verify-tables", "--name", "L_{1,4}"}).code == 0);
}

TEST_CASE("malformed input exits 2") {
	CHECK(run({"check", write("syntax.json", "{\"algebra\": ")}).code == 2);
	CHECK(run({"check", write("index.json", R"({"dim":2,"products":[{"i":3,"j":1,"coeffs":{"1":"1"}}]})")}).code == 2);
	CHECK(run({"check", write("float.json", R"({"dim":1,"products":[{"i":1,"j":1,"coeffs":{"1":0.5}}]})")}).code == 2);
	CHECK(run({"check", write("ok.json", R"({"dim":1,"products":[{"i":1,"j":1,"coeffs":{"1":"1/2"}}]})")}).code == 0);
	CHECK(run({"check", scratch("missing.json").string()}).code == 2);
	CHECK(run({"frobnicate"}).code == 2);
	CHECK(run({"check"}).code == 2);
	auto e = run({"check", write("syntax2.json", "{\n\"dim\": 2,\n\"products\": [\n}")});
	CHECK(e.code == 2);
	CHECK(e.err.find("line") != std::string::npos);
}

TEST_CASE("reports are byte-stable through export and re-read") {
	for (auto& name : catalog_names()) {
		CAPTURE(name);
		auto ex = run({"catalog", "export", name});
		REQUIRE(ex.code == 0);
		auto p = write("export.json", ex.out);
		auto first = run({"check", p});
		REQUIRE(first.code == 0);
		auto f = io::algebra_file_from(json::parse(ex.out));
		std::optional<Matrix> m;
		if (f.metric) m = f.metric->matrix();
		auto again = write("export2.json", io::document(f.algebra, m).dump(2));
		CHECK(run({"check", again}).out == first.out);
		CHECK(run({"check", p}).out == first.out);
	}
}
