#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "leibniz/io.hpp"
#include "leibniz/sample.hpp"

namespace leibniz::cli {

namespace {

using io::json;

// Input could not be read or has the wrong shape.
struct Malformed : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct Config {
	std::string format = "json";
	std::uint64_t seed = default_seed;
	std::vector<std::string> params;
	std::vector<std::string> expects;
	bool validate = false;
	std::string side = "L";
	std::string output;
	std::string kind;
	std::string path;
	std::string name;
};

template <class F>
auto load(F&& f) -> decltype(f()) {
	try {
		return f();
	} catch (const Error& e) {
		throw Malformed(e.what());
	} catch (const io::json::exception& e) {
		throw Malformed(e.what());
	}
}

io::AlgebraFile load_algebra(const std::string& path) {
	return load([&] { return io::algebra_file_from(io::read_json_file(path)); });
}

Params parse_params(const std::vector<std::string>& kv) {
	Params p;
	for (auto& s : kv) {
		auto eq = s.find('=');
		if (eq == std::string::npos || eq == 0) throw Malformed("--param expects k=v, got '" + s + "'");
		try {
			p[s.substr(0, eq)] = parse_rational(s.substr(eq + 1));
		} catch (const Error&) {
			throw Malformed("--param " + s + ": value is not a rational");
		}
	}
	return p;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string idx(const std::vector<std::size_t>& v) {
	std::string s = "(";
	for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
	return s + ")";
}

std::string vec_text(const Vec& v) {
	std::string s = "[";
	for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
	return s + "]";
}

std::string check_text(const CheckResult& c) {
	std::string s = yn(c.passed);
	if (c.witness) s += "  witness " + c.witness->label + " " + idx(c.witness->indices) + " defect " + vec_text(c.witness->defect);
	return s;
}

void matrix_text(std::ostream& out, const std::string& label, const Matrix& m) {
	out << label << ":\n";
	for (std::size_t i = 0; i < m.rows(); ++i) out << "  " << vec_text(m.row(i)) << "\n";
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void write_output(const Config& cfg, std::ostream& out, const json& j) {
	if (cfg.output.empty()) {
		emit(out, j);
		return;
	}
	std::ofstream f(cfg.output);
	if (!f) throw Malformed("cannot write " + cfg.output);
	f << j.dump(2) << "\n";
}

std::string normalize(std::string s) {
	std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return c == '_' ? '-' : std::tolower(c); });
	return s;
}

// check -----------------------------------------------------------------

struct CheckReport {
	json j;
	std::vector<std::pair<std::string, bool>> expect;
};

CheckReport check_report(const io::AlgebraFile& f, const std::vector<std::string>& expects) {
	const Algebra& a = f.algebra;
	CheckReport r;
	json& j = r.j;
	std::map<std::string, bool> facts;
	json ids;
	for (auto [k, kind] : {std::pair{"left_leibniz", Identity::LeftLeibniz}, {"right_leibniz", Identity::RightLeibniz},
			{"symmetric_leibniz", Identity::SymmetricLeibniz}, {"lie", Identity::Lie}}) {
		auto c = check_identity(a, kind);
		ids[k] = io::to_json(c);
		facts[normalize(k)] = c.passed;
	}
	facts["non-lie"] = !facts["lie"];
	j["identities"] = ids;
	if (f.metric) {
		json inv;
		for (auto k : {Invariance::L, Invariance::R, Invariance::Assoc}) {
			auto c = check_invariance(a, f.metric->matrix(), k);
			inv[invariance_name(k)] = io::to_json(c);
			facts[normalize(std::string(invariance_name(k)) + "-invariant")] = c.passed;
		}
		j["invariance"] = inv;
		auto s = signature_class(*f.metric);
		j["signature"] = {{"p", s.p}, {"q", s.q}, {"euclidean", s.euclidean}, {"lorentzian", s.lorentzian}};
		facts["euclidean"] = s.euclidean;
		facts["lorentzian"] = s.lorentzian;
	} else {
		j["invariance"] = nullptr;
		j["signature"] = nullptr;
	}
	j["leib"] = io::to_json(leib_ideal(a));
	if (facts["left-leibniz"]) {
		j["killing"] = {{"B", io::to_json(killing(a, KillingKind::B))}, {"K", io::to_json(killing(a, KillingKind::K))}};
		auto c = cartan(a);
		j["cartan"] = {{"semisimple", c.semisimple}, {"solvable", c.solvable}};
		facts["semisimple"] = c.semisimple;
		facts["solvable"] = c.solvable;
	} else {
		j["killing"] = nullptr;
		j["cartan"] = nullptr;
	}
	j["fingerprint"] = io::to_json(fingerprint(a, f.metric));
	json ex = json::array();
	for (auto& e : expects) {
		auto it = facts.find(normalize(e));
		if (it == facts.end()) throw Malformed("unknown claim '" + e + "'");
		r.expect.push_back({e, it->second});
		ex.push_back({{"claim", e}, {"holds", it->second}});
	}
	j["expect"] = ex;
	return r;
}

void check_text_out(std::ostream& out, const json& j) {
	auto c = [&](const json& x) {
		CheckResult r;
		r.passed = x["passed"].get<bool>();
		if (!x["witness"].is_null()) {
			r.witness = Witness{x["witness"]["label"], x["witness"]["indices"].get<std::vector<std::size_t>>(),
				io::vec_from(x["witness"]["defect"], "")};
		}
		return check_text(r);
	};
	for (auto& [k, v] : j["identities"].items()) out << k << ": " << c(v) << "\n";
	if (!j["invariance"].is_null())
		for (auto& [k, v] : j["invariance"].items()) out << k << "-invariance: " << c(v) << "\n";
	if (!j["signature"].is_null())
		out << "signature: (" << j["signature"]["p"] << "," << j["signature"]["q"] << ")\n";
	out << "dim Leib: " << j["leib"]["dim"] << "\n";
	if (!j["killing"].is_null()) {
		matrix_text(out, "B", io::matrix_from(j["killing"]["B"], ""));
		matrix_text(out, "K", io::matrix_from(j["killing"]["K"], ""));
		out << "semisimple: " << yn(j["cartan"]["semisimple"]) << "\nsolvable: " << yn(j["cartan"]["solvable"]) << "\n";
	}
	for (auto& e : j["expect"]) out << "expect " << e["claim"].get<std::string>() << ": " << (e["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
}

int cmd_check(const Config& cfg, std::ostream& out) {
	auto f = load_algebra(cfg.path);
	auto r = check_report(f, cfg.expects);
	if (cfg.format == "text") check_text_out(out, r.j);
	else emit(out, r.j);
	for (auto& [k, ok] : r.expect)
		if (!ok) return 1;
	return 0;
}

// construct ---------------------------------------------------------------

json construction_json(const Construction& c) { return io::document(c.algebra, c.metric.matrix()); }

int cmd_construct(const Config& cfg, std::ostream& out) {
	json in = load([&] { return io::read_json_file(cfg.path); });
	const std::string& k = cfg.kind;
	if (k == "L" || k == "R" || k == "SYM") {
		ExtData d = load([&] {
			json j = in;
			if (!j.contains("kind")) j["kind"] = k;
			auto dd = io::ext_data_from(j);
			if (ext_kind_name(dd.kind) != k) throw Error(ErrorCode::Parse, "kind: file says " + std::string(ext_kind_name(dd.kind)));
			check_shape(dd);
			return dd;
		});
		if (cfg.validate) {
			auto rep = validate_extension(d);
			if (cfg.format == "text") {
				for (auto& v : rep.violations) out << v.equation << " " << idx(v.indices) << " " << vec_text(v.defect) << "\n";
				for (auto& n : rep.notes) out << "note: " << n << "\n";
				if (rep.ok()) out << "no violations\n";
			} else {
				emit(out, io::to_json(rep));
			}
			return rep.ok() ? 0 : 1;
		}
		write_output(cfg, out, construction_json(construct_extension(d, true)));
		return 0;
	}
	if (k == "double-ext") {
		auto [h, m, A] = load([&] {
			auto hh = io::algebra_from(io::need_field(in, "h"), "h");
			auto mm = io::metric_from(io::need_field(in, "metric"), "metric");
			auto aa = io::matrix_from(io::need_field(in, "Amap"), "Amap");
			return std::tuple{hh, mm, aa};
		});
		write_output(cfg, out, construction_json(double_extension(h, m, A)));
		return 0;
	}
	if (k == "cotangent") {
		auto [kind, g, Om] = load([&] {
			std::string s = in.value("kind", "coadjoint_L");
			CotangentKind ck;
			if (s == "cor_zero") ck = CotangentKind::CorZero;
			else if (s == "coadjoint_L") ck = CotangentKind::CoadjointL;
			else if (s == "two_step_R") ck = CotangentKind::TwoStepR;
			else throw Error(ErrorCode::Parse, "kind: expected cor_zero, coadjoint_L or two_step_R");
			auto gg = io::algebra_from(io::need_field(in, "g"), "g");
			std::optional<Tensor3> t;
			if (in.contains("Omega")) t = io::tensor_from(in["Omega"], gg.dim(), gg.dim(), gg.dim(), "Omega");
			return std::tuple{ck, gg, t};
		});
		write_output(cfg, out, construction_json(construct_cotangent(kind, g, Om)));
		return 0;
	}
	if (k == "metrised") {
		std::string s = in.value("kind", "");
		if (s == "commutative") {
			auto [n, m, T] = load([&] {
				auto nn = io::need_field(in, "k").get<std::size_t>();
				auto mm = io::metric_from(io::need_field(in, "metric"), "metric");
				return std::tuple{nn, mm, io::tensor_from(io::need_field(in, "T"), nn, nn, nn, "T")};
			});
			write_output(cfg, out, construction_json(construct_metrised_commutative(n, m, T)));
			return 0;
		}
		if (s == "from_quadratic") {
			auto [g, m, I, T] = load([&] {
				auto gg = io::algebra_from(io::need_field(in, "g"), "g");
				auto mm = io::metric_from(io::need_field(in, "metric"), "metric");
				std::vector<Vec> vs;
				const json& ij = io::need_field(in, "I");
				for (std::size_t i = 0; i < ij.size(); ++i) vs.push_back(io::vec_from(ij[i], "I[" + std::to_string(i) + "]"));
				std::size_t n = gg.dim();
				return std::tuple{gg, mm, Subspace::span(n, vs), io::tensor_from(io::need_field(in, "T"), n, n, n, "T")};
			});
			write_output(cfg, out, construction_json(construct_metrised_from_quadratic(g, m, I, T)));
			return 0;
		}
		throw Malformed("kind: expected commutative or from_quadratic");
	}
	if (k == "lorentz-L") {
		auto [A, m, F, G, delta] = load([&] {
			auto aa = io::algebra_from(io::need_field(in, "A"), "A");
			auto mm = io::metric_from(io::need_field(in, "metric"), "metric");
			return std::tuple{aa, mm, io::matrix_from(io::need_field(in, "F"), "F"), io::matrix_from(io::need_field(in, "G"), "G"),
				io::vec_from(io::need_field(in, "delta"), "delta")};
		});
		write_output(cfg, out, construction_json(construct_lorentz_L(A, m, F, G, delta)));
		return 0;
	}
	if (k == "nondeg-L") {
		auto [h, mh, mN, rho] = load([&] {
			auto hh = io::algebra_from(io::need_field(in, "h"), "h");
			auto a = io::metric_from(io::need_field(in, "metric_h"), "metric_h");
			auto b = io::metric_from(io::need_field(in, "metric_N"), "metric_N");
			std::vector<Matrix> r;
			const json& rj = io::need_field(in, "rho");
			for (std::size_t i = 0; i < rj.size(); ++i) r.push_back(io::matrix_from(rj[i], "rho[" + std::to_string(i) + "]"));
			return std::tuple{hh, a, b, r};
		});
		write_output(cfg, out, construction_json(construct_nondeg_L(h, mh, mN, rho)));
		return 0;
	}
	throw Malformed("unknown construction '" + k + "'");
}

// core, h2, fingerprint -----------------------------------------------------

int cmd_core(const Config& cfg, std::ostream& out) {
	auto f = load_algebra(cfg.path);
	if (!f.metric) throw Malformed("metric: required for core");
	Side side;
	if (cfg.side == "L") side = Side::L;
	else if (cfg.side == "R") side = Side::R;
	else throw Malformed("--side expects L or R");
	auto rep = classify(f.algebra, *f.metric, side);
	json j = io::to_json(rep);
	if (rep.branch == Branch::Degenerate) {
		auto s = splitting_report(f.algebra, *f.metric, side);
		j["splitting"] = {{"kappa", io::to_json(s.kappa)}, {"morphism_ok", s.morphism_ok}, {"image_ideal_ok", s.image_ideal_ok}};
	}
	if (cfg.format == "text") {
		out << "branch: " << branch_name(rep.branch) << "\n";
		if (rep.core) {
			out << "dim I: " << rep.core->I.dim() << "\ndim A: " << rep.core->A.dim() << "\ndim h: " << rep.core->h.dim() << "\n";
			for (auto& s : rep.core->failed_assertions) out << "failed: " << s << "\n";
		}
		if (rep.nondeg) out << "dim Leib: " << rep.nondeg->leib.dim() << "\n";
	} else {
		emit(out, j);
	}
	return rep.core && !rep.core->failed_assertions.empty() ? 1 : 0;
}

int cmd_h2(const Config& cfg, std::ostream& out) {
	auto f = load_algebra(cfg.path);
	auto d = derivation_spaces(f.algebra, f.metric);
	if (cfg.format == "text") {
		if (d.h2_dim) out << *d.h2_dim << "\n";
		else out << "undefined (needs a quadratic Lie algebra)\n";
	} else {
		emit(out, io::to_json(d));
	}
	return 0;
}

int cmd_fingerprint(const Config& cfg, std::ostream& out) {
	auto f = load_algebra(cfg.path);
	json j = io::to_json(fingerprint(f.algebra, f.metric));
	if (cfg.format == "text") {
		for (auto& [k, v] : j.items()) out << k << ": " << v.dump() << "\n";
	} else {
		emit(out, j);
	}
	return 0;
}

// catalog ---------------------------------------------------------------------

int cmd_catalog(const std::string& sub, const Config& cfg, std::ostream& out) {
	if (sub == "list") {
		json a = json::array();
		for (auto& d : catalog_defs()) {
			if (cfg.format == "text") {
				out << d.name << "  [" << d.source << "]";
				if (!d.param_names.empty()) {
					out << "  params:";
					for (auto& p : d.param_names) out << " " << p;
				}
				if (!d.constraint_text.empty()) out << "  (" << d.constraint_text << ")";
				out << "\n";
			}
			a.push_back({{"name", d.name}, {"source", d.source}, {"description", d.description},
				{"params", d.param_names}, {"constraint", d.constraint_text}});
		}
		if (cfg.format != "text") emit(out, a);
		return 0;
	}
	Params p = parse_params(cfg.params);
	CatalogEntry e = load([&] { return catalog_get(cfg.name, p); });
	if (sub == "get") {
		emit(out, io::to_json(e));
		return 0;
	}
	write_output(cfg, out, io::document(e.algebra, e.metric ? std::optional<Matrix>(e.metric->matrix()) : std::nullopt));
	return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
	auto reps = cfg.name.empty() ? catalog_verify_all() : load([&] { return catalog_verify_name(cfg.name); });
	bool bad = false;
	json a = json::array();
	for (auto& r : reps) {
		bad = bad || r.undocumented_discrepancy();
		a.push_back(io::to_json(r));
		if (cfg.format != "text") continue;
		bool all = r.error.empty() && std::all_of(r.checks.begin(), r.checks.end(), [](auto& c) { return c.agree; });
		out << (all ? "ok   " : r.undocumented_discrepancy() ? "FAIL " : "doc  ") << r.name;
		if (!r.params.empty()) out << " [" << params_to_string(r.params) << "]";
		if (r.literal) out << " printed row";
		out << "\n";
		if (!r.error.empty()) out << "     error: " << r.error << "\n";
		for (auto& c : r.checks)
			if (!c.agree) {
				out << "     " << c.claim << " disagrees";
				if (c.witness) out << ", witness " << idx(c.witness->indices) << " " << vec_text(c.witness->defect);
				if (!c.detail.empty()) out << ", " << c.detail;
				out << "\n";
			}
	}
	if (cfg.format != "text") emit(out, {{"entries", a}, {"undocumented_discrepancy", bad}});
	return bad ? 1 : 0;
}

int cmd_random_ext(const Config& cfg, std::ostream& out) {
	ExtKind k;
	if (cfg.kind == "L") k = ExtKind::L;
	else if (cfg.kind == "R") k = ExtKind::R;
	else if (cfg.kind == "SYM") k = ExtKind::SYM;
	else throw Malformed("kind: expected L, R or SYM");
	std::mt19937_64 rng(cfg.seed);
	write_output(cfg, out, io::to_json(random_ext_data(k, rng)));
	return 0;
}

}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
	Config cfg;
	CLI::App app{"Exact computations with Leibniz algebras and invariant metrics", "leibniz"};
	app.require_subcommand(1);
	app.fallthrough();
	app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
	app.add_option("--seed", cfg.seed, "seed for randomized commands");
	app.add_option("-o,--output", cfg.output, "write the result to a file");

	auto* check = app.add_subcommand("check", "identities, invariance, Killing forms, Cartan verdicts, fingerprint");
	check->add_option("file", cfg.path)->required();
	check->add_option("--expect", cfg.expects, "claim that must hold (exit 1 otherwise)");

	auto* construct = app.add_subcommand("construct", "build an algebra and metric from construction data");
	construct->add_option("kind", cfg.kind)->required()->check(
		CLI::IsMember({"double-ext", "L", "R", "SYM", "cotangent", "metrised", "lorentz-L", "nondeg-L"}));
	construct->add_option("file", cfg.path)->required();
	construct->add_flag("--validate", cfg.validate, "list violated equations instead of constructing");

	auto* core = app.add_subcommand("core", "classify and extract the core");
	core->add_option("file", cfg.path)->required();
	core->add_option("--side", cfg.side, "invariance side, L or R");

	std::string catsub;
	auto* catalog = app.add_subcommand("catalog", "built-in algebras");
	catalog->add_option("action", catsub)->required()->check(CLI::IsMember({"list", "get", "export"}));
	catalog->add_option("name", cfg.name);
	catalog->add_option("--param", cfg.params, "parameter k=v");

	auto* verify = app.add_subcommand("verify-tables", "recheck every catalog claim");
	verify->add_option("--name", cfg.name, "restrict to one entry");

	auto* h2 = app.add_subcommand("h2", "derivations and dim H² of a quadratic Lie algebra");
	h2->add_option("file", cfg.path)->required();

	auto* fp = app.add_subcommand("fingerprint", "isomorphism invariants");
	fp->add_option("file", cfg.path)->required();

	auto* rnd = app.add_subcommand("random-ext", "seeded random extension data");
	rnd->add_option("kind", cfg.kind)->required();

	std::vector<std::string> args(argv.rbegin(), argv.rend());
	try {
		app.parse(args);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e, out, err);
		return code == 0 ? 0 : 2;
	}

	try {
		if (*check) return cmd_check(cfg, out);
		if (*construct) return cmd_construct(cfg, out);
		if (*core) return cmd_core(cfg, out);
		if (*catalog) {
			if (catsub != "list" && cfg.name.empty()) throw Malformed("catalog " + catsub + " needs a name");
			return cmd_catalog(catsub, cfg, out);
		}
		if (*verify) return cmd_verify(cfg, out);
		if (*h2) return cmd_h2(cfg, out);
		if (*fp) return cmd_fingerprint(cfg, out);
		if (*rnd) return cmd_random_ext(cfg, out);
	} catch (const Malformed& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	} catch (const Error& e) {
		err << "error: " << e.what() << "\n";
		return 1;
	}
	return 2;
}

}
