#include "leibniz/io.hpp"

#include <fstream>
#include <sstream>

namespace leibniz::io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
	throw Error(ErrorCode::Parse, (path.empty() ? "" : path + ": ") + msg);
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::size_t index_from(const json& j, std::size_t n, const std::string& path) {
	std::size_t i = 0;
	if (j.is_number_unsigned() || j.is_number_integer()) {
		if (j.get<long long>() < 1) bad(path, "index must be at least 1");
		i = j.get<std::size_t>();
	} else if (j.is_string()) {
		try {
			std::size_t pos = 0;
			i = std::stoul(j.get<std::string>(), &pos);
			if (pos != j.get<std::string>().size()) throw std::invalid_argument("");
		} catch (const std::exception&) {
			bad(path, "expected an index");
		}
	} else {
		bad(path, "expected an index");
	}
	if (i < 1 || i > n) bad(path, "index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
	return i - 1;
}

const json& need(const json& j, const std::string& key, const std::string& path) { return need_field(j, key, path); }

json witness_or_null(const std::optional<Witness>& w) { return w ? to_json(*w) : json(nullptr); }

json opt(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

}

const json& need_field(const json& j, const std::string& key, const std::string& path) {
	if (!j.is_object()) bad(path, "expected an object");
	auto it = j.find(key);
	if (it == j.end()) bad(sub(path, key), "missing field");
	return *it;
}

Rational rational_from(const json& j, const std::string& path) {
	if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
	if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
	if (j.is_number_float()) bad(path, "floating-point numbers are not accepted; write a rational string");
	if (!j.is_string()) bad(path, "expected a rational string");
	try {
		return parse_rational(j.get<std::string>());
	} catch (const Error&) {
		bad(path, "cannot parse rational '" + j.get<std::string>() + "'");
	}
}

Vec vec_from(const json& j, const std::string& path) {
	if (!j.is_array()) bad(path, "expected an array");
	Vec v;
	for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from(j[i], sub(path, i)));
	return v;
}

Matrix matrix_from(const json& j, const std::string& path) {
	if (!j.is_array()) bad(path, "expected an array of rows");
	std::size_t r = j.size(), c = r ? (j[0].is_array() ? j[0].size() : 0) : 0;
	Matrix m(r, c);
	for (std::size_t i = 0; i < r; ++i) {
		Vec row = vec_from(j[i], sub(path, i));
		if (row.size() != c) bad(sub(path, i), "row length " + std::to_string(row.size()) + ", expected " + std::to_string(c));
		for (std::size_t k = 0; k < c; ++k) m(i, k) = row[k];
	}
	return m;
}

Tensor3 tensor_from(const json& j, std::size_t a, std::size_t b, std::size_t c, const std::string& path) {
	if (j.is_null()) return zero_tensor(a, b, c);
	if (!j.is_array() || j.size() != a) bad(path, "expected " + std::to_string(a) + " slices");
	Tensor3 t = zero_tensor(a, b, c);
	for (std::size_t i = 0; i < a; ++i) {
		auto p = sub(path, i);
		if (!j[i].is_array() || j[i].size() != b) bad(p, "expected " + std::to_string(b) + " rows");
		for (std::size_t k = 0; k < b; ++k) {
			Vec v = vec_from(j[i][k], sub(p, k));
			if (v.size() != c) bad(sub(p, k), "expected length " + std::to_string(c));
			t[i][k] = v;
		}
	}
	return t;
}

Algebra algebra_from(const json& j, const std::string& path) {
	const json& dj = need(j, "dim", path);
	if (!dj.is_number_integer() || dj.get<long long>() < 0) bad(sub(path, "dim"), "expected a nonnegative integer");
	std::size_t n = dj.get<std::size_t>();
	Algebra a(n);
	if (j.contains("basis")) {
		const json& b = j["basis"];
		if (!b.is_array() || b.size() != n) bad(sub(path, "basis"), "expected " + std::to_string(n) + " names");
		std::vector<std::string> names;
		for (std::size_t i = 0; i < n; ++i) {
			if (!b[i].is_string()) bad(sub(sub(path, "basis"), i), "expected a string");
			names.push_back(b[i].get<std::string>());
		}
		a.set_basis_names(names);
	}
	if (!j.contains("products")) return a;
	const json& ps = j["products"];
	auto pp = sub(path, "products");
	if (!ps.is_array()) bad(pp, "expected an array");
	for (std::size_t t = 0; t < ps.size(); ++t) {
		auto p = sub(pp, t);
		std::size_t i = index_from(need(ps[t], "i", p), n, sub(p, "i"));
		std::size_t k = index_from(need(ps[t], "j", p), n, sub(p, "j"));
		const json& cs = need(ps[t], "coeffs", p);
		if (!cs.is_object()) bad(sub(p, "coeffs"), "expected an object");
		for (auto it = cs.begin(); it != cs.end(); ++it) {
			auto cp = sub(sub(p, "coeffs"), it.key());
			std::size_t l = index_from(json(it.key()), n, cp);
			a.c(i, k, l) += rational_from(it.value(), cp);
		}
	}
	return a;
}

Matrix form_from(const json& j, const std::string& path) {
	const json& mj = j.is_object() ? need(j, "matrix", path) : j;
	auto mp = j.is_object() ? sub(path, "matrix") : path;
	Matrix m = matrix_from(mj, mp);
	if (m.rows() != m.cols()) bad(mp, "matrix is not square");
	return m;
}

Metric metric_from(const json& j, const std::string& path) {
	Matrix m = form_from(j, path);
	try {
		return Metric(m);
	} catch (const Error& e) {
		bad(path, e.what());
	}
}

ExtData ext_data_from(const json& j, const std::string& path) {
	ExtData d;
	const json& kj = need(j, "kind", path);
	std::string kind = kj.is_string() ? kj.get<std::string>() : "";
	if (kind == "L") d.kind = ExtKind::L;
	else if (kind == "R") d.kind = ExtKind::R;
	else if (kind == "SYM") d.kind = ExtKind::SYM;
	else bad(sub(path, "kind"), "expected L, R or SYM");
	d.h = algebra_from(need(j, "h", path), sub(path, "h"));
	const json& aj = need(j, "A", path);
	d.A = algebra_from(need(aj, "algebra", sub(path, "A")), sub(sub(path, "A"), "algebra"));
	d.mA = metric_from(need(aj, "metric", sub(path, "A")), sub(sub(path, "A"), "metric"));
	if (d.mA.dim() != d.A.dim()) bad(sub(path, "A"), "metric size does not match algebra dimension");
	std::size_t k = d.h.dim(), m = d.A.dim();
	auto mats = [&](const char* key) {
		std::vector<Matrix> out(k, Matrix(m, m));
		if (!j.contains(key) || j[key].is_null()) return out;
		auto p = sub(path, key);
		if (!j[key].is_array() || j[key].size() != k) bad(p, "expected one matrix per basis vector of h");
		for (std::size_t i = 0; i < k; ++i) {
			out[i] = matrix_from(j[key][i], sub(p, i));
			if (out[i].rows() != m || out[i].cols() != m) bad(sub(p, i), "expected a square matrix of size dim A");
		}
		return out;
	};
	d.F = mats("F");
	d.G = mats("G");
	auto ten = [&](const char* key, std::size_t c) {
		return tensor_from(j.contains(key) ? j[key] : json(nullptr), k, k, c, sub(path, key));
	};
	d.theta = ten("theta", m);
	d.omega = ten("omega", m);
	d.Omega = ten("Omega", k);
	return d;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Vec& v) {
	json a = json::array();
	for (auto& x : v) a.push_back(to_string(x));
	return a;
}

json to_json(const Matrix& m) {
	json a = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
	return a;
}

json to_json(const Tensor3& t) {
	json a = json::array();
	for (auto& s : t) {
		json b = json::array();
		for (auto& v : s) b.push_back(to_json(v));
		a.push_back(b);
	}
	return a;
}

json to_json(const Algebra& a) {
	json j;
	std::size_t n = a.dim();
	j["dim"] = n;
	j["basis"] = a.basis_names();
	json ps = json::array();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t k = 0; k < n; ++k) {
			json cs = json::object();
			for (std::size_t l = 0; l < n; ++l)
				if (a.c(i, k, l) != 0) cs[std::to_string(l + 1)] = to_string(a.c(i, k, l));
			if (!cs.empty()) ps.push_back({{"i", i + 1}, {"j", k + 1}, {"coeffs", cs}});
		}
	j["products"] = ps;
	return j;
}

json metric_json(const Matrix& m) { return {{"matrix", to_json(m)}}; }

json to_json(const ExtData& d) {
	json j;
	j["kind"] = ext_kind_name(d.kind);
	j["h"] = to_json(d.h);
	j["A"] = {{"algebra", to_json(d.A)}, {"metric", metric_json(d.mA.matrix())}};
	json f = json::array(), g = json::array();
	for (auto& m : d.F) f.push_back(to_json(m));
	for (auto& m : d.G) g.push_back(to_json(m));
	j["F"] = f;
	j["G"] = g;
	j["theta"] = to_json(d.theta);
	j["omega"] = to_json(d.omega);
	j["Omega"] = to_json(d.Omega);
	return j;
}

json to_json(const Witness& w) { return {{"label", w.label}, {"indices", w.indices}, {"defect", to_json(w.defect)}}; }

json to_json(const CheckResult& c) { return {{"passed", c.passed}, {"witness", witness_or_null(c.witness)}}; }

json to_json(const Subspace& s) { return {{"dim", s.dim()}, {"basis", to_json(s.basis())}}; }

json to_json(const Inertia& i) { return {{"p", i.p}, {"q", i.q}, {"z", i.z}}; }

json to_json(const Fingerprint& f) {
	json j;
	j["dim"] = f.dim;
	j["leib"] = f.leib;
	j["left_center"] = f.zl;
	j["right_center"] = f.zr;
	j["center"] = f.z;
	j["square"] = f.square;
	j["leib_isotropic"] = opt(f.leib_isotropic);
	j["derived_length"] = opt(f.derived_length);
	j["nilpotency_class"] = opt(f.nilpotency_class);
	j["K_rank"] = f.k_rank;
	j["K_inertia"] = to_json(f.k_inertia);
	j["metric_inertia"] = f.metric_inertia ? to_json(*f.metric_inertia) : json(nullptr);
	return j;
}

json to_json(const ValidationReport& r) {
	json v = json::array();
	for (auto& x : r.violations) v.push_back({{"equation", x.equation}, {"indices", x.indices}, {"defect", to_json(x.defect)}});
	return {{"ok", r.ok()}, {"violations", v}, {"equations", r.equation_ids()}, {"notes", r.notes}};
}

json to_json(const CoreResult& c) {
	json j;
	j["side"] = side_name(c.side);
	j["I"] = to_json(c.I);
	j["I_perp"] = to_json(c.I_perp);
	j["A"] = document(c.A, c.mA.matrix());
	j["h"] = to_json(c.h);
	j["projA"] = to_json(c.projA);
	j["projH"] = to_json(c.projH);
	j["liftA"] = to_json(c.liftA);
	j["liftH"] = to_json(c.liftH);
	j["failed_assertions"] = c.failed_assertions;
	return j;
}

json to_json(const ClassifyReport& r) {
	json j;
	j["branch"] = branch_name(r.branch);
	j["side"] = side_name(r.side);
	j["leib_equals_perp"] = r.leib_equals_perp;
	j["fingerprint"] = to_json(r.fp);
	if (r.nondeg) {
		json rho = json::array();
		for (auto& m : r.nondeg->rho) rho.push_back(to_json(m));
		j["nondeg"] = {{"leib", to_json(r.nondeg->leib)}, {"leib_perp", to_json(r.nondeg->leib_perp)},
			{"h", to_json(r.nondeg->h)}, {"rho", rho}};
	}
	if (r.core) j["core"] = to_json(*r.core);
	if (r.metrised) {
		auto& m = *r.metrised;
		j["metrised"] = {{"bracket", to_json(m.bracket)}, {"circ", to_json(m.circ)}, {"eq4_holds", m.eq4_holds},
			{"derived_proper", m.derived_proper}, {"lie_center", to_json(m.lie_center)},
			{"center_degenerate", m.center_degenerate}, {"omega_in_center", m.omega_in_center}};
	}
	return j;
}

json to_json(const EntryReport& r) {
	json j;
	j["name"] = r.name;
	json p = json::object();
	for (auto& [k, v] : r.params) p[k] = to_string(v);
	j["params"] = p;
	j["literal"] = r.literal;
	j["reading"] = r.reading;
	json cs = json::array();
	for (auto& c : r.checks)
		cs.push_back({{"claim", c.claim}, {"agree", c.agree}, {"documented", c.documented},
			{"witness", witness_or_null(c.witness)}, {"detail", c.detail}});
	j["checks"] = cs;
	j["error"] = r.error;
	j["undocumented_discrepancy"] = r.undocumented_discrepancy();
	return j;
}

json to_json(const CatalogEntry& e) {
	json j = document(e.algebra, e.metric ? std::optional<Matrix>(e.metric->matrix()) : std::nullopt);
	j["name"] = e.name;
	j["source"] = e.source;
	json p = json::object();
	for (auto& [k, v] : e.params) p[k] = to_string(v);
	j["params"] = p;
	json c = json::object();
	auto b = [&](const char* k, const std::optional<bool>& v) {
		if (v) c[k] = *v;
	};
	b("left_leibniz", e.claims.left_leibniz);
	b("right_leibniz", e.claims.right_leibniz);
	b("symmetric_leibniz", e.claims.symmetric_leibniz);
	b("lie", e.claims.lie);
	if (e.claims.invariance) c["invariance"] = invariance_name(*e.claims.invariance);
	if (e.claims.metric_nondegenerate) c["metric_nondegenerate"] = true;
	if (e.claims.dim_leib_at_least_2) c["dim_leib_at_least_2"] = true;
	if (e.claims.leib_isotropic) c["leib_isotropic"] = true;
	if (e.claims.B) c["B"] = to_json(*e.claims.B);
	if (e.claims.K) c["K"] = to_json(*e.claims.K);
	j["claims"] = c;
	j["reading"] = e.reading;
	j["documented_failures"] = e.documented_failures;
	return j;
}

json to_json(const DerivationSpaces& d) {
	json j;
	j["n"] = d.n;
	j["der_dim"] = d.der.dim();
	j["skew_der_dim"] = d.skew_der ? json(d.skew_der->dim()) : json(nullptr);
	j["inner_dim"] = d.inner ? json(d.inner->dim()) : json(nullptr);
	j["h2_dim"] = opt(d.h2_dim);
	return j;
}

json document(const Algebra& a, const std::optional<Matrix>& metric) {
	json j;
	j["algebra"] = to_json(a);
	if (metric) j["metric"] = metric_json(*metric);
	return j;
}

AlgebraFile algebra_file_from(const json& j) {
	AlgebraFile f;
	if (j.is_object() && j.contains("algebra")) {
		f.algebra = algebra_from(j["algebra"], "algebra");
		if (j.contains("metric") && !j["metric"].is_null()) f.metric = metric_from(j["metric"], "metric");
	} else {
		f.algebra = algebra_from(j, "");
	}
	if (f.metric && f.metric->dim() != f.algebra.dim()) bad("metric", "size does not match algebra dimension");
	return f;
}

json read_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	std::string text = ss.str();
	try {
		return json::parse(text);
	} catch (const json::parse_error& e) {
		std::size_t line = 1, col = 1;
		for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
			if (text[i] == '\n') {
				++line;
				col = 1;
			} else {
				++col;
			}
		}
		throw Error(ErrorCode::Parse, path + ": invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
	}
}

}
