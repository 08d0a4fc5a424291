#include "leibniz/catalog.hpp"

#include <algorithm>

namespace leibniz {

namespace {

using R = Rational;

struct B {
	Algebra a;
	explicit B(std::size_t n) : a(n) {}
	// e_i • e_j += x e_k
	B& p(std::size_t i, std::size_t j, std::size_t k, const R& x) { a.set(i, j, k, x); return *this; }
	// [e_i, e_j] += x e_k
	B& br(std::size_t i, std::size_t j, std::size_t k, const R& x) { a.set(i, j, k, x); a.set(j, i, k, -x); return *this; }
};

Matrix met(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, R>> e) {
	Matrix m(n, n);
	for (auto& [i, j, x] : e) {
		m(i - 1, j - 1) = x;
		m(j - 1, i - 1) = x;
	}
	return m;
}

R P(const Params& p, const std::string& k) {
	auto it = p.find(k);
	if (it == p.end()) throw Error(ErrorCode::ConstraintViolated, "missing parameter " + k);
	return it->second;
}

bool is_pm1(const R& x) { return x == 1 || x == -1; }

CatalogEntry entry(const std::string& name, const std::string& src, const Params& p, Algebra a, std::optional<Matrix> m) {
	CatalogEntry e;
	e.name = name;
	e.source = src;
	e.params = p;
	e.algebra = std::move(a);
	if (m) e.metric = Metric(*m);
	return e;
}

void table1_claims(CatalogEntry& e, const R& mu) {
	e.claims.invariance = Invariance::Assoc;
	e.claims.metric_nondegenerate = true;
	if (mu != 0) {
		e.claims.symmetric_leibniz = true;
		e.claims.lie = false;
	} else {
		e.claims.lie = true;
	}
}

void table2_claims(CatalogEntry& e) {
	e.claims.left_leibniz = true;
	e.claims.invariance = Invariance::L;
	e.claims.lie = false;
	e.claims.metric_nondegenerate = true;
	e.claims.dim_leib_at_least_2 = true;
}

void table3_claims(CatalogEntry& e) {
	e.claims.left_leibniz = true;
	e.claims.right_leibniz = true;
	e.claims.invariance = Invariance::R;
	e.claims.lie = false;
	e.claims.metric_nondegenerate = true;
	e.claims.leib_isotropic = true;
}

void lie_claims(CatalogEntry& e) {
	e.claims.lie = true;
	if (e.metric) {
		e.claims.invariance = Invariance::L;
		e.claims.metric_nondegenerate = true;
	}
}

std::optional<std::string> none(const Params&) { return std::nullopt; }

std::vector<Params> grid(const std::vector<std::pair<std::string, std::vector<R>>>& axes) {
	std::vector<Params> out{{}};
	for (auto& [k, vals] : axes) {
		std::vector<Params> next;
		for (auto& p : out)
			for (auto& v : vals) {
				Params q = p;
				q[k] = v;
				next.push_back(q);
			}
		out = next;
	}
	return out;
}

// metrised symmetric Leibniz algebras ----------------------------------

Algebra with_circ(B b, std::size_t n, const R& mu) {
	b.p(n, n, 1, mu);
	return b.a;
}

std::vector<CatalogDef> build_defs() {
	std::vector<CatalogDef> d;
	const std::string T1 = "metrised symmetric", T2 = "L-quadratic", T3 = "R-quadratic";
	const std::vector<R> mus{1, 2, 0};

	d.push_back({"os(4,lambda)", T1, "oscillator with e4∘e4=μe1", {"lambda", "mu"}, "lambda>0",
		grid({{"lambda", {1, 2}}, {"mu", mus}}),
		[=](const Params& p) {
			R l = P(p, "lambda"), mu = P(p, "mu");
			B b(4);
			b.br(2, 3, 1, 1).br(4, 2, 3, l).br(4, 3, 2, -l);
			auto e = entry("os(4,lambda)", T1, p, with_circ(b, 4, mu), met(4, {{2, 2, 1 / l}, {3, 3, 1 / l}, {1, 4, 1}}));
			table1_claims(e, mu);
			return e;
		},
		[](const Params& p) -> std::optional<std::string> { if (P(p, "lambda") <= 0) return "lambda>0"; return std::nullopt; },
		nullptr, {}});

	d.push_back({"g_{1,4}", T1, "diamond algebra with e4∘e4=μe1", {"mu"}, "",
		grid({{"mu", mus}}),
		[=](const Params& p) {
			R mu = P(p, "mu");
			B b(4);
			b.br(4, 2, 2, 1).br(4, 3, 3, -1).br(2, 3, 1, 1);
			auto e = entry("g_{1,4}", T1, p, with_circ(b, 4, mu), met(4, {{1, 4, 1}, {2, 3, 1}}));
			table1_claims(e, mu);
			return e;
		},
		none, nullptr, {}});

	d.push_back({"g_{1,5}", T1, "5-dim quadratic Lie with e5∘e5=μe1", {"mu"}, "",
		grid({{"mu", mus}}),
		[=](const Params& p) {
			R mu = P(p, "mu");
			B b(5);
			b.br(2, 3, 1, 1).br(3, 4, 1, -1).br(5, 2, 3, 1).br(5, 3, 2, 1).br(5, 3, 4, -1).br(5, 4, 3, 1);
			auto e = entry("g_{1,5}", T1, p, with_circ(b, 5, mu), met(5, {{1, 5, 1}, {2, 2, -1}, {3, 3, 1}, {4, 4, 1}}));
			table1_claims(e, mu);
			return e;
		},
		none, nullptr, {}});

	auto osc6 = [=](const Params& p, bool literal) {
		R l1 = P(p, "lambda1"), l2 = P(p, "lambda2"), mu = P(p, "mu");
		B b(6);
		b.br(2, 4, 1, 1).br(3, 5, 1, 1).br(6, 2, 4, l1).br(6, 4, 2, -l1).br(6, 3, 5, l2).br(6, 5, 3, -l2);
		Matrix m = literal ? met(6, {{2, 2, 1 / l1}, {3, 3, 1 / l1}, {4, 4, 1 / l1}, {5, 5, 1 / l1}, {1, 6, 1}})
			: met(6, {{2, 2, 1 / l1}, {4, 4, 1 / l1}, {3, 3, 1 / l2}, {5, 5, 1 / l2}, {1, 6, 1}});
		auto e = entry("osc(6)", T1, p, with_circ(b, 6, mu), m);
		table1_claims(e, mu);
		e.reading = literal ? "printed metric, single 1/lambda read as 1/lambda1"
			: "metric (2,2)=(4,4)=1/lambda1, (3,3)=(5,5)=1/lambda2";
		return e;
	};
	d.push_back({"osc(6)", T1, "6-dim oscillator with e6∘e6=μe1", {"lambda1", "lambda2", "mu"}, "lambda1,lambda2>0",
		{{{"lambda1", 1}, {"lambda2", 2}, {"mu", 1}}, {{"lambda1", 2}, {"lambda2", 3}, {"mu", 2}},
		 {{"lambda1", 1}, {"lambda2", 1}, {"mu", 1}}, {{"lambda1", 1}, {"lambda2", 2}, {"mu", 0}}},
		[=](const Params& p) { return osc6(p, false); },
		[](const Params& p) -> std::optional<std::string> {
			if (P(p, "lambda1") <= 0 || P(p, "lambda2") <= 0) return "lambda1,lambda2>0";
			return std::nullopt;
		},
		[=](const Params& p) { return osc6(p, true); },
		{{{"lambda1", 1}, {"lambda2", 2}, {"mu", 1}}}});

	const Matrix nmet = met(6, {{1, 6, 1}, {2, 5, 1}, {3, 4, -1}});
	auto n1 = [=](const Params& p, bool literal) {
		R mu = P(p, "mu");
		B b(6);
		b.br(6, 3, 2, 1).br(6, 5, 4, 1).br(3, 5, 1, 1);
		auto e = entry("n_1(2,2)", T1, p, literal ? b.a : with_circ(b, 6, mu), nmet);
		table1_claims(e, mu);
		e.reading = literal ? "printed row, no ∘ term" : "adds e6∘e6=μe1 as in every other row";
		return e;
	};
	d.push_back({"n_1(2,2)", T1, "nilpotent quadratic Lie with e6∘e6=μe1", {"mu"}, "",
		grid({{"mu", mus}}),
		[=](const Params& p) { return n1(p, false); }, none,
		[=](const Params& p) { return n1(p, true); }, {{{"mu", 1}}}});

	auto n2 = [=](const Params& p, bool literal) {
		R t = P(p, "t"), mu = P(p, "mu");
		B b(6);
		b.br(6, 2, 2, 1).br(6, 2, 3, t).br(6, 3, 2, -t).br(6, 3, 3, 1).br(6, 4, 4, -1).br(6, 4, 5, t);
		b.br(6, 5, 4, -t);
		if (literal) b.br(6, 5, 3, -1);
		else b.br(6, 5, 5, -1);
		b.br(2, 4, 1, -t).br(2, 5, 1, 1).br(3, 4, 1, -1).br(3, 5, 1, -t);
		auto e = entry("n_2(2,2)", T1, p, with_circ(b, 6, mu), nmet);
		table1_claims(e, mu);
		e.reading = literal ? "printed row [e6,e5]=-te4-e3" : "[e6,e5]=-te4-e5";
		return e;
	};
	d.push_back({"n_2(2,2)", T1, "solvable quadratic Lie with e6∘e6=μe1", {"t", "mu"}, "t>0",
		grid({{"t", {1, 2}}, {"mu", mus}}),
		[=](const Params& p) { return n2(p, false); },
		[](const Params& p) -> std::optional<std::string> { if (P(p, "t") <= 0) return "t>0"; return std::nullopt; },
		[=](const Params& p) { return n2(p, true); }, {{{"t", 2}, {"mu", 1}}}});

	d.push_back({"n_3(2,2)", T1, "quadratic Lie with e6∘e6=μe1", {"epsilon", "mu"}, "epsilon^2=1",
		grid({{"epsilon", {1, -1}}, {"mu", mus}}),
		[=](const Params& p) {
			R ep = P(p, "epsilon"), mu = P(p, "mu");
			B b(6);
			b.br(6, 2, 3, 1).br(6, 3, 2, -1).br(6, 4, 2, ep).br(6, 4, 5, 1).br(6, 5, 3, ep).br(6, 5, 4, -1);
			b.br(2, 4, 1, -1).br(3, 5, 1, -1).br(4, 5, 1, ep);
			auto e = entry("n_3(2,2)", T1, p, with_circ(b, 6, mu), nmet);
			table1_claims(e, mu);
			return e;
		},
		[](const Params& p) -> std::optional<std::string> { if (!is_pm1(P(p, "epsilon"))) return "epsilon^2=1"; return std::nullopt; },
		nullptr, {}});

	d.push_back({"n_4(2,2)", T1, "quadratic Lie with e6∘e6=μe1", {"t", "mu"}, "t>0",
		grid({{"t", {1, 2}}, {"mu", mus}}),
		[=](const Params& p) {
			R t = P(p, "t"), mu = P(p, "mu");
			B b(6);
			b.br(6, 2, 3, 1).br(6, 3, 2, -1).br(6, 4, 5, t).br(6, 5, 4, -t).br(2, 3, 1, -1).br(4, 5, 1, t);
			auto e = entry("n_4(2,2)", T1, p, with_circ(b, 6, mu),
				met(6, {{2, 2, -1}, {3, 3, -1}, {4, 4, 1}, {5, 5, 1}, {1, 6, 1}}));
			table1_claims(e, mu);
			return e;
		},
		[](const Params& p) -> std::optional<std::string> { if (P(p, "t") <= 0) return "t>0"; return std::nullopt; },
		nullptr, {}});

	d.push_back({"n_5(2,2)", T1, "quadratic Lie with e6∘e6=μe1", {"mu"}, "",
		grid({{"mu", mus}}),
		[=](const Params& p) {
			R mu = P(p, "mu");
			B b(6);
			b.br(6, 2, 2, 1).br(6, 3, 2, 1).br(6, 3, 3, 1).br(6, 4, 4, -1).br(6, 5, 4, 1).br(6, 5, 5, -1);
			b.br(2, 5, 1, 1).br(3, 4, 1, -1).br(3, 5, 1, 1);
			auto e = entry("n_5(2,2)", T1, p, with_circ(b, 6, mu), nmet);
			table1_claims(e, mu);
			return e;
		},
		none, nullptr, {}});

	d.push_back({"n_6(2,2)", T1, "quadratic Lie with e6∘e6=μe1", {"t", "mu"}, "t>=1",
		grid({{"t", {1, 2}}, {"mu", mus}}),
		[=](const Params& p) {
			R t = P(p, "t"), mu = P(p, "mu");
			B b(6);
			b.br(6, 2, 2, 1).br(6, 3, 3, -1).br(6, 4, 4, t).br(6, 5, 5, -t).br(2, 3, 1, 1).br(4, 5, 1, t);
			auto e = entry("n_6(2,2)", T1, p, with_circ(b, 6, mu), met(6, {{1, 6, 1}, {2, 3, 1}, {4, 5, 1}}));
			table1_claims(e, mu);
			return e;
		},
		[](const Params& p) -> std::optional<std::string> { if (P(p, "t") < 1) return "t>=1"; return std::nullopt; },
		nullptr, {}});

	// L-quadratic non-Lie left Leibniz algebras ----------------------------

	d.push_back({"g_{3,1}", T2, "e3 acts on the Euclidean plane by a rotation", {"lambda", "s"}, "lambda!=0, s=±1",
		grid({{"lambda", {1, 2}}, {"s", {1, -1}}}),
		[=](const Params& p) {
			R l = P(p, "lambda"), s = P(p, "s");
			B b(3);
			b.p(3, 1, 2, l).p(3, 2, 1, -l);
			auto e = entry("g_{3,1}", T2, p, b.a, met(3, {{1, 1, 1}, {2, 2, 1}, {3, 3, s}}));
			table2_claims(e);
			return e;
		},
		[](const Params& p) -> std::optional<std::string> {
			if (P(p, "lambda") == 0) return "lambda!=0";
			if (!is_pm1(P(p, "s"))) return "s=±1";
			return std::nullopt;
		},
		nullptr, {}});

	d.push_back({"g_{3,2}", T2, "e3 acts on the Lorentz plane by a boost", {"lambda"}, "lambda!=0",
		grid({{"lambda", {1, 2}}}),
		[=](const Params& p) {
			R l = P(p, "lambda");
			B b(3);
			b.p(3, 1, 2, l).p(3, 2, 1, l);
			auto e = entry("g_{3,2}", T2, p, b.a, met(3, {{1, 1, -1}, {2, 2, 1}, {3, 3, 1}}));
			table2_claims(e);
			return e;
		},
		[](const Params& p) -> std::optional<std::string> { if (P(p, "lambda") == 0) return "lambda!=0"; return std::nullopt; },
		nullptr, {}});

	d.push_back({"g_{3,3}", T2, "nilpotent 3-dim", {"mu"}, "mu!=0",
		grid({{"mu", {1, 2}}}),
		[=](const Params& p) {
			R mu = P(p, "mu");
			B b(3);
			b.p(2, 2, 3, -mu).p(2, 3, 1, mu);
			auto e = entry("g_{3,3}", T2, p, b.a, met(3, {{1, 2, 1}, {3, 3, 1}}));
			table2_claims(e);
			return e;
		},
		[](const Params& p) -> std::optional<std::string> { if (P(p, "mu") == 0) return "mu!=0"; return std::nullopt; },
		nullptr, {}});

	auto g41 = [=](const Params& p) {
		R a = P(p, "a"), bb = P(p, "b");
		B b(4);
		b.p(1, 3, 4, 1).p(1, 4, 3, -1).p(2, 3, 4, 1).p(2, 4, 3, -1);
		auto e = entry("g_{4,1}", T2, p, b.a, met(4, {{1, 1, bb}, {2, 2, 1}, {3, 3, 1}, {4, 4, a}}));
		table2_claims(e);
		return e;
	};
	d.push_back({"g_{4,1}", T2, "two commuting rotations of span{e3,e4}", {"a", "b"}, "a=1, b=±1",
		grid({{"a", {1}}, {"b", {1, -1}}}),
		[=](const Params& p) {
			auto e = g41(p);
			e.reading = "printed a^2=1 restricted to a=1";
			return e;
		},
		[](const Params& p) -> std::optional<std::string> {
			if (P(p, "a") != 1) return "a=1";
			if (!is_pm1(P(p, "b"))) return "b=±1";
			return std::nullopt;
		},
		[=](const Params& p) {
			auto e = g41(p);
			e.reading = "printed row with a=-1";
			return e;
		},
		{{{"a", -1}, {"b", 1}}, {{"a", -1}, {"b", -1}}}});

	auto g42 = [=](const Params& p) {
		R a = P(p, "a"), bb = P(p, "b");
		B b(4);
		b.p(1, 1, 4, a).p(1, 2, 3, -a).p(2, 1, 4, bb).p(2, 2, 3, -bb);
		auto e = entry("g_{4,2}", T2, p, b.a, met(4, {{1, 3, 1}, {2, 4, 1}}));
		table2_claims(e);
		return e;
	};
	d.push_back({"g_{4,2}", T2, "2-step nilpotent 4-dim", {"a", "b"}, "(a,b)!=(0,0)",
		{{{"a", 1}, {"b", 0}}, {{"a", 0}, {"b", 1}}, {{"a", 1}, {"b", 1}}, {{"a", 1}, {"b", -1}}, {{"a", -1}, {"b", 1}}},
		[=](const Params& p) {
			auto e = g42(p);
			e.reading = "a=b=0 excluded (abelian)";
			return e;
		},
		[](const Params& p) -> std::optional<std::string> {
			if (P(p, "a") == 0 && P(p, "b") == 0) return "(a,b)!=(0,0)";
			return std::nullopt;
		},
		[=](const Params& p) {
			auto e = g42(p);
			e.reading = "printed row with a=b=0";
			return e;
		},
		{{{"a", 0}, {"b", 0}}}});

	d.push_back({"g_{4,3}", T2, "4-dim with e1•e2=e1", {"a"}, "",
		grid({{"a", {0, 1, -1}}}),
		[=](const Params& p) {
			R a = P(p, "a");
			B b(4);
			b.p(1, 2, 1, 1).p(2, 1, 1, -1).p(2, 1, 4, a).p(2, 2, 3, -a).p(1, 3, 4, -1).p(2, 3, 3, 1);
			auto e = entry("g_{4,3}", T2, p, b.a, met(4, {{1, 3, 1}, {2, 4, 1}}));
			table2_claims(e);
			return e;
		},
		none, nullptr, {}});

	const Matrix lmet = met(4, {{1, 4, 1}, {2, 2, 1}, {3, 3, 1}});
	const std::string lread = "metric {(1,4)=(2,2)=(3,3)=1}; printed metric has indices beyond dimension 4";
	auto printed_metric = [](CatalogEntry&) -> CatalogEntry {
		throw Error(ErrorCode::DimensionMismatch, "printed metric {(1,6)=(2,5)=-(3,4)=1} needs dimension 6");
	};

	d.push_back({"g_{4,4}", T2, "Lorentz rank-one extension of the Euclidean plane", {"alpha", "lambda"}, "lambda!=0",
		{{{"alpha", 1}, {"lambda", 1}}, {{"alpha", 2}, {"lambda", 1}}, {{"alpha", 0}, {"lambda", 1}}, {{"alpha", 1}, {"lambda", 2}}},
		[=](const Params& p) {
			R al = P(p, "alpha"), l = P(p, "lambda");
			B b(4);
			b.p(4, 4, 2, -al).p(4, 2, 3, l).p(4, 2, 1, al).p(4, 3, 2, -l);
			auto e = entry("g_{4,4}", T2, p, b.a, lmet);
			table2_claims(e);
			e.reading = lread;
			return e;
		},
		[](const Params& p) -> std::optional<std::string> { if (P(p, "lambda") == 0) return "lambda!=0"; return std::nullopt; },
		[=](const Params& p) { CatalogEntry e; e.params = p; return printed_metric(e); },
		{{{"alpha", 1}, {"lambda", 1}}}});

	d.push_back({"g_{4,5}", T2, "printed row (antisymmetric)", {"lambda"}, "lambda!=0",
		grid({{"lambda", {1, 2}}}),
		[=](const Params& p) {
			R l = P(p, "lambda");
			B b(4);
			b.p(2, 3, 1, l).p(3, 2, 1, -l).p(4, 2, 3, l).p(4, 3, 2, -l).p(2, 4, 3, -l).p(3, 4, 2, l);
			auto e = entry("g_{4,5}", T2, p, b.a, lmet);
			table2_claims(e);
			e.reading = lread + "; printed products are antisymmetric, so the row is the oscillator Lie algebra";
			e.documented_failures = {"non_lie", "dim_leib_at_least_2"};
			return e;
		},
		[](const Params& p) -> std::optional<std::string> { if (P(p, "lambda") == 0) return "lambda!=0"; return std::nullopt; },
		nullptr, {}});

	auto g46 = [=](const Params& p) {
		R al = P(p, "alpha"), be = P(p, "beta"), ga = P(p, "gamma");
		B b(4);
		b.p(4, 4, 2, -al).p(4, 4, 3, -be).p(3, 2, 1, ga).p(4, 2, 1, al).p(4, 3, 1, be).p(3, 4, 2, -ga);
		auto e = entry("g_{4,6}", T2, p, b.a, lmet);
		table2_claims(e);
		e.reading = lread;
		return e;
	};
	d.push_back({"g_{4,6}", T2, "nilpotent Lorentz extension", {"alpha", "beta", "gamma"}, "beta*gamma=0",
		{{{"alpha", 1}, {"beta", 0}, {"gamma", 1}}, {{"alpha", 1}, {"beta", 1}, {"gamma", 0}},
		 {{"alpha", 0}, {"beta", 0}, {"gamma", 1}}, {{"alpha", 2}, {"beta", 0}, {"gamma", 3}}, {{"alpha", 1}, {"beta", 2}, {"gamma", 0}}},
		g46,
		[](const Params& p) -> std::optional<std::string> {
			if (P(p, "beta") * P(p, "gamma") != 0) return "beta*gamma=0";
			return std::nullopt;
		},
		[=](const Params& p) { CatalogEntry e; e.params = p; return printed_metric(e); },
		{{{"alpha", 1}, {"beta", 0}, {"gamma", 1}}}});

	// R-quadratic non-Lie Leibniz algebras ----------------------------------

	auto l14 = [=](const Params& p, bool literal) {
		R l1 = P(p, "lambda1"), l2 = P(p, "lambda2");
		B b(4);
		b.p(1, 1, 4, -l1).p(1, 2, 4, -l2).p(2, 1, 3, l1);
		if (literal) b.p(2, 1, 3, l2);
		else b.p(2, 2, 3, l2);
		auto e = entry("L_{1,4}", T3, p, b.a, met(4, {{1, 3, 1}, {2, 4, 1}}));
		table3_claims(e);
		e.reading = literal ? "printed row, both e2•e1 entries summed" : "second e2•e1 entry read as e2•e2=lambda2 e3";
		return e;
	};
	d.push_back({"L_{1,4}", T3, "R-quadratic 4-dim", {"lambda1", "lambda2"}, "(lambda1,lambda2)!=(0,0)",
		{{{"lambda1", 1}, {"lambda2", 1}}, {{"lambda1", 1}, {"lambda2", 2}}, {{"lambda1", 0}, {"lambda2", 1}}, {{"lambda1", 2}, {"lambda2", 0}}},
		[=](const Params& p) { return l14(p, false); },
		[](const Params& p) -> std::optional<std::string> {
			if (P(p, "lambda1") == 0 && P(p, "lambda2") == 0) return "(lambda1,lambda2)!=(0,0)";
			return std::nullopt;
		},
		[=](const Params& p) { return l14(p, true); }, {{{"lambda1", 1}, {"lambda2", 2}}}});

	auto l15 = [=](const Params& p) {
		R l1 = P(p, "lambda1"), l2 = P(p, "lambda2"), mu = P(p, "mu"), rho = P(p, "rho");
		B b(5);
		b.p(1, 1, 5, -l1).p(1, 2, 5, -l2).p(1, 2, 3, rho).p(2, 1, 4, l1).p(2, 1, 3, -rho).p(2, 2, 4, l2);
		b.p(1, 3, 5, mu).p(2, 3, 4, -mu).p(3, 1, 5, rho).p(3, 2, 4, -rho);
		auto e = entry("L_{1,5}", T3, p, b.a, met(5, {{1, 4, 1}, {2, 5, 1}, {3, 3, 1}}));
		table3_claims(e);
		return e;
	};
	d.push_back({"L_{1,5}", T3, "R-quadratic 5-dim", {"lambda1", "lambda2", "mu", "rho"}, "rho=0 or rho=-mu",
		{{{"lambda1", 1}, {"lambda2", 1}, {"mu", 1}, {"rho", -1}}, {{"lambda1", 1}, {"lambda2", 2}, {"mu", 1}, {"rho", 0}},
		 {{"lambda1", 2}, {"lambda2", 1}, {"mu", 3}, {"rho", -3}}, {{"lambda1", 0}, {"lambda2", 1}, {"mu", 2}, {"rho", 0}}},
		l15,
		[](const Params& p) -> std::optional<std::string> {
			if (P(p, "rho") != 0 && P(p, "rho") != -P(p, "mu")) return "rho=0 or rho=-mu";
			return std::nullopt;
		},
		nullptr, {}});

	// dims 2 and 3 ------------------------------------------------------------

	const std::string T35 = "metrised dims 2-3";
	d.push_back({"dim2_metrised", T35, "e1•e1=±e2", {"sign", "alpha"}, "sign=±1, alpha>0",
		grid({{"sign", {1, -1}}, {"alpha", {1, 2}}}),
		[=](const Params& p) {
			R s = P(p, "sign"), al = P(p, "alpha");
			B b(2);
			b.p(1, 1, 2, s);
			auto e = entry("dim2_metrised", T35, p, b.a, met(2, {{1, 2, al}}));
			table1_claims(e, 1);
			return e;
		},
		[](const Params& p) -> std::optional<std::string> {
			if (!is_pm1(P(p, "sign"))) return "sign=±1";
			if (P(p, "alpha") <= 0) return "alpha>0";
			return std::nullopt;
		},
		nullptr, {}});

	auto d3 = [=](const Params& p, bool literal) {
		R s = P(p, "sign"), al = P(p, "alpha"), s2 = P(p, "s");
		B b(3);
		b.p(1, 1, literal ? 3 : 2, s);
		auto e = entry("dim3_metrised", T35, p, b.a, met(3, {{1, 2, al}, {3, 3, s2}}));
		table1_claims(e, 1);
		e.reading = literal ? "printed row e1•e1=±e3" : "e1•e1=±e2 (the 2-dim algebra plus an orthogonal line)";
		return e;
	};
	d.push_back({"dim3_metrised", T35, "e1•e1=±e2 plus a line", {"sign", "alpha", "s"}, "sign=±1, s=±1, alpha>0",
		grid({{"sign", {1, -1}}, {"alpha", {1, 2}}, {"s", {1, -1}}}),
		[=](const Params& p) { return d3(p, false); },
		[](const Params& p) -> std::optional<std::string> {
			if (!is_pm1(P(p, "sign")) || !is_pm1(P(p, "s"))) return "sign=±1, s=±1";
			if (P(p, "alpha") <= 0) return "alpha>0";
			return std::nullopt;
		},
		[=](const Params& p) { return d3(p, true); }, {{{"sign", 1}, {"alpha", 1}, {"s", 1}}}});

	// examples ---------------------------------------------------------------

	d.push_back({"exem1", "Example", "2-dim left Leibniz, e2•e1=e1, e2•e2=e1", {}, "", {{}},
		[=](const Params& p) {
			B b(2);
			b.p(2, 1, 1, 1).p(2, 2, 1, 1);
			auto e = entry("exem1", "Example", p, b.a, std::nullopt);
			e.claims.left_leibniz = true;
			e.claims.lie = false;
			e.claims.B = Matrix{{0, 0}, {0, 1}};
			e.claims.K = Matrix{{0, 0}, {0, 0}};
			return e;
		},
		none, nullptr, {}});

	auto aff1 = [] { return lie_from_brackets(2, {{{1, 2}, {0, 1}}}); };
	auto heis3 = [] { return lie_from_brackets(3, {{{1, 2}, {0, 0, 1}}}); };

	d.push_back({"T*aff(1)", "Example", "coadjoint left Leibniz structure on aff(1)⊕aff(1)*", {}, "", {{}},
		[=](const Params& p) {
			auto c = construct_cotangent(CotangentKind::CoadjointL, aff1());
			auto e = entry("T*aff(1)", "Example", p, c.algebra, c.metric.matrix());
			table2_claims(e);
			return e;
		},
		none, nullptr, {}});

	d.push_back({"T*heis(3)", "Example", "R-quadratic structure on heis(3)⊕heis(3)*", {}, "", {{}},
		[=](const Params& p) {
			auto c = construct_cotangent(CotangentKind::TwoStepR, heis3());
			auto e = entry("T*heis(3)", "Example", p, c.algebra, c.metric.matrix());
			e.claims.left_leibniz = true;
			e.claims.invariance = Invariance::R;
			e.claims.lie = false;
			e.claims.metric_nondegenerate = true;
			e.claims.leib_isotropic = true;
			return e;
		},
		none, nullptr, {}});

	auto remark = [=](const Params& p, bool literal) {
		R l1 = P(p, "lambda1"), l2 = P(p, "lambda2"), a = P(p, "a");
		// h = span{e1,e2}, A = span{f1,f2}, then e1*, e2*
		Algebra A(2);
		ExtData dd = zero_ext_data(ExtKind::SYM, Algebra(2), A, Metric::diag({1, 1}));
		dd.F = {Matrix{{0, l1}, {-l1, 0}}, Matrix{{0, l2}, {-l2, 0}}};
		dd.Omega[0][0][1] = a;
		dd.Omega[0][1][0] = -a;
		dd.Omega[1][0][1] = -a;
		dd.Omega[1][1][0] = a;
		auto c = construct_extension(dd, false);
		Algebra g = c.algebra;
		if (literal)
			for (std::size_t x = 0; x < 2; ++x)
				for (std::size_t f = 2; f < 4; ++f)
					for (std::size_t k = 0; k < 6; ++k) g.c(f, x, k) = 0;
		auto e = entry("sym_remark", "Remark", p, g, c.metric.matrix());
		e.claims.symmetric_leibniz = true;
		e.claims.invariance = Invariance::L;
		e.claims.lie = a == 0;
		e.claims.metric_nondegenerate = true;
		e.reading = literal ? "printed product list only (no f•e products)"
			: "includes f_k•e_i=-F(e_i)f_k, which the printed list omits";
		return e;
	};
	d.push_back({"sym_remark", "Remark", "L-quadratic symmetric Leibniz family on h⊕R^2⊕h*, r=2", {"lambda1", "lambda2", "a"}, "",
		{{{"lambda1", 1}, {"lambda2", 2}, {"a", 3}}, {{"lambda1", 1}, {"lambda2", 0}, {"a", 1}}, {{"lambda1", 2}, {"lambda2", -1}, {"a", 0}}},
		[=](const Params& p) { return remark(p, false); }, none,
		[=](const Params& p) { return remark(p, true); }, {{{"lambda1", 1}, {"lambda2", 2}, {"a", 3}}}});

	// base Lie algebras --------------------------------------------------------

	const std::string LB = "base Lie";
	d.push_back({"sl(2)", LB, "basis h,e,f with Killing metric", {}, "", {{}},
		[=](const Params& p) {
			Algebra g = lie_from_brackets(3, {{{1, 2}, {0, 2, 0}}, {{1, 3}, {0, 0, -2}}, {{2, 3}, {1, 0, 0}}});
			g.set_basis_names({"h", "e", "f"});
			auto e = entry("sl(2)", LB, p, g, killing(g, KillingKind::B));
			lie_claims(e);
			return e;
		},
		none, nullptr, {}});
	d.push_back({"so(3)", LB, "cross product with Euclidean metric", {}, "", {{}},
		[=](const Params& p) {
			Algebra g = lie_from_brackets(3, {{{1, 2}, {0, 0, 1}}, {{2, 3}, {1, 0, 0}}, {{3, 1}, {0, 1, 0}}});
			auto e = entry("so(3)", LB, p, g, Matrix::identity(3));
			lie_claims(e);
			return e;
		},
		none, nullptr, {}});
	d.push_back({"heis(3)", LB, "Heisenberg [e1,e2]=e3", {}, "", {{}},
		[=](const Params& p) {
			auto e = entry("heis(3)", LB, p, heis3(), std::nullopt);
			lie_claims(e);
			return e;
		},
		none, nullptr, {}});
	d.push_back({"aff(1)", LB, "[e1,e2]=e2", {}, "", {{}},
		[=](const Params& p) {
			auto e = entry("aff(1)", LB, p, aff1(), std::nullopt);
			lie_claims(e);
			return e;
		},
		none, nullptr, {}});
	d.push_back({"abelian", LB, "abelian with Euclidean metric", {"n"}, "n in 1..4",
		grid({{"n", {1, 2, 3}}}),
		[=](const Params& p) {
			std::size_t n = P(p, "n").get_num().get_ui();
			auto e = entry("abelian", LB, p, abelian(n), Matrix::identity(n));
			lie_claims(e);
			return e;
		},
		[](const Params& p) -> std::optional<std::string> {
			R n = P(p, "n");
			if (n.get_den() != 1 || n < 1 || n > 4) return "n in 1..4";
			return std::nullopt;
		},
		nullptr, {}});
	return d;
}

}

const std::vector<CatalogDef>& catalog_defs() {
	static const std::vector<CatalogDef> defs = build_defs();
	return defs;
}

std::vector<std::string> catalog_names() {
	std::vector<std::string> v;
	for (auto& d : catalog_defs()) v.push_back(d.name);
	return v;
}

const CatalogDef& catalog_def(const std::string& name) {
	for (auto& d : catalog_defs())
		if (d.name == name) return d;
	throw Error(ErrorCode::UnknownName, "no catalog entry '" + name + "'");
}

CatalogEntry catalog_get(const std::string& name, const Params& params) {
	auto& d = catalog_def(name);
	Params p = params;
	if (!d.samples.empty())
		for (auto& [k, v] : d.samples.front())
			if (!p.count(k)) p[k] = v;
	for (auto& [k, v] : p)
		if (std::find(d.param_names.begin(), d.param_names.end(), k) == d.param_names.end())
			throw Error(ErrorCode::ConstraintViolated, "unknown parameter " + k + " for " + name);
	if (d.constraint)
		if (auto msg = d.constraint(p)) throw Error(ErrorCode::ConstraintViolated, name + ": " + *msg);
	return d.build(p);
}

std::vector<CatalogEntry> catalog_samples(const std::string& name) {
	std::vector<CatalogEntry> v;
	for (auto& p : catalog_def(name).samples) v.push_back(catalog_get(name, p));
	return v;
}

std::vector<CatalogEntry> catalog_all() {
	std::vector<CatalogEntry> v;
	for (auto& d : catalog_defs())
		for (auto& p : d.samples) v.push_back(catalog_get(d.name, p));
	return v;
}

std::string params_to_string(const Params& p) {
	std::string s;
	for (auto& [k, v] : p) s += (s.empty() ? "" : ", ") + k + "=" + to_string(v);
	return s;
}

bool EntryReport::undocumented_discrepancy() const {
	if (literal) return false;
	if (!error.empty()) return true;
	for (auto& c : checks)
		if (!c.agree && !c.documented) return true;
	return false;
}

EntryReport catalog_verify(const CatalogEntry& e) {
	EntryReport r;
	r.name = e.name;
	r.params = e.params;
	r.reading = e.reading;
	auto doc = [&](const std::string& id) {
		return std::find(e.documented_failures.begin(), e.documented_failures.end(), id) != e.documented_failures.end();
	};
	auto add = [&](const std::string& id, bool agree, std::optional<Witness> w = std::nullopt, std::string detail = "") {
		r.checks.push_back({id, agree, !agree && doc(id), std::move(w), std::move(detail)});
	};
	auto ident = [&](const std::string& id, std::optional<bool> claim, Identity kind) {
		if (!claim) return;
		auto c = check_identity(e.algebra, kind);
		add(id, c.passed == *claim, c.witness);
	};
	const auto& cl = e.claims;
	ident("left_leibniz", cl.left_leibniz, Identity::LeftLeibniz);
	ident("right_leibniz", cl.right_leibniz, Identity::RightLeibniz);
	ident("symmetric_leibniz", cl.symmetric_leibniz, Identity::SymmetricLeibniz);
	if (cl.lie) {
		auto c = check_identity(e.algebra, Identity::Lie);
		add(*cl.lie ? "lie" : "non_lie", c.passed == *cl.lie, c.witness);
	}
	if (cl.invariance && e.metric) {
		auto c = check_invariance(e.algebra, e.metric->matrix(), *cl.invariance);
		add(std::string(invariance_name(*cl.invariance)) + "_invariance", c.passed, c.witness);
	}
	if (cl.metric_nondegenerate) add("metric_nondegenerate", e.metric.has_value());
	Subspace leib = leib_ideal(e.algebra);
	if (cl.dim_leib_at_least_2) add("dim_leib_at_least_2", leib.dim() >= 2, std::nullopt, "dim Leib = " + std::to_string(leib.dim()));
	if (cl.leib_isotropic && e.metric) add("leib_isotropic", subspace_contains(orthogonal(e.metric->matrix(), leib), leib));
	if (cl.B) add("B", killing(e.algebra, KillingKind::B) == *cl.B);
	if (cl.K) add("K", killing(e.algebra, KillingKind::K) == *cl.K);
	return r;
}

std::vector<EntryReport> catalog_verify_name(const std::string& name) {
	auto& d = catalog_def(name);
	std::vector<EntryReport> out;
	for (auto& p : d.samples) {
		try {
			out.push_back(catalog_verify(catalog_get(name, p)));
		} catch (const Error& ex) {
			EntryReport r;
			r.name = name;
			r.params = p;
			r.error = ex.what();
			out.push_back(r);
		}
	}
	if (d.literal)
		for (auto& p : d.literal_samples) {
			EntryReport r;
			try {
				r = catalog_verify(d.literal(p));
			} catch (const Error& ex) {
				r.name = name;
				r.params = p;
				r.error = ex.what();
			}
			r.literal = true;
			for (auto& c : r.checks)
				if (!c.agree) c.documented = true;
			out.push_back(r);
		}
	return out;
}

std::vector<EntryReport> catalog_verify_all() {
	std::vector<EntryReport> out;
	for (auto& d : catalog_defs()) {
		auto v = catalog_verify_name(d.name);
		out.insert(out.end(), v.begin(), v.end());
	}
	return out;
}

}
