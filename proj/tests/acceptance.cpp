// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include "gen.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/construct.hpp"
#include "leibniz/core.hpp"
#include "oracle.hpp"

using namespace leibniz;

namespace {

struct Outcome {
	bool pass = true;
	std::ostringstream detail;
	void require(bool ok, const std::string& what) {
		if (!ok) {
			if (pass) detail << "first failure: " << what << "; ";
			pass = false;
		}
	}
};

bool has_claim(const EntryReport& r, const std::string& id) {
	return std::any_of(r.checks.begin(), r.checks.end(), [&](const ClaimCheck& c) { return c.claim == id; });
}

bool inv(const Construction& c, oracle::Inv k) { return oracle::invariant(oracle::tab(c.algebra), oracle::to_m(c.metric.matrix()), k); }

void table_reproduction(Outcome& o) {
	auto reports = catalog_verify_all();
	std::map<std::string, int> per_table;
	std::map<std::string, std::set<std::string>> t1_mu;
	int literal_failures = 0, witnessed = 0, lie_by_exhaustion = 0;
	for (auto& r : reports) {
		std::string tag = r.name + " " + params_to_string(r.params) + (r.literal ? " (printed row)" : "");
		o.require(!r.undocumented_discrepancy(), "undocumented discrepancy in " + tag);
		if (r.literal) {
			for (auto& c : r.checks) {
				if (c.agree) continue;
				++literal_failures;
				if (c.witness && !c.witness->indices.empty()) ++witnessed;
				else if (c.claim == "non_lie") ++lie_by_exhaustion;
				else if (c.claim == "dim_leib_at_least_2" || c.claim == "metric_nondegenerate") ++witnessed;
				else o.require(false, "literal failure without witness: " + tag + " " + c.claim);
			}
			continue;
		}
		auto e = catalog_get(r.name, r.params);
		per_table[e.source]++;
		bool mu0 = e.params.count("mu") && e.params.at("mu") == 0 && e.source == "metrised symmetric";
		if (e.source == "metrised symmetric") {
			t1_mu[e.name].insert(params_to_string({{"mu", e.params.at("mu")}}));
			o.require(has_claim(r, mu0 ? "lie" : "symmetric_leibniz"), "identity claim missing for " + tag);
			o.require(has_claim(r, "assoc_invariance"), "invariance claim missing for " + tag);
			o.require(mu0 || has_claim(r, "non_lie"), "non-Lie claim missing for " + tag);
		} else if (e.source == "L-quadratic") {
			o.require(has_claim(r, "left_leibniz") && has_claim(r, "L_invariance") && has_claim(r, "non_lie"), "claims missing for " + tag);
		} else if (e.source == "R-quadratic") {
			o.require(has_claim(r, "left_leibniz") && has_claim(r, "right_leibniz") && has_claim(r, "R_invariance") && has_claim(r, "non_lie"),
			          "claims missing for " + tag);
		}
		if (e.source == "metrised symmetric" || e.source == "L-quadratic" || e.source == "R-quadratic") o.require(has_claim(r, "metric_nondegenerate"), "nondegeneracy claim missing for " + tag);
	}
	for (auto& [name, mus] : t1_mu) o.require(mus.count("mu=1") && mus.count("mu=2"), name + " lacks mu samples 1 and 2");
	o.detail << reports.size() << " reports; samples metrised symmetric " << per_table["metrised symmetric"] << ", L-quadratic " << per_table["L-quadratic"] << ", R-quadratic "
	         << per_table["R-quadratic"] << "; printed-row failures " << literal_failures << " (" << witnessed << " witnessed, "
	         << lie_by_exhaustion << " Lie by exhaustion)";
}

void example_exactness(Outcome& o) {
	auto e = catalog_get("exem1");
	Matrix b = killing(e.algebra, KillingKind::B), k = killing(e.algebra, KillingKind::K);
	o.require(b == Matrix{{0, 0}, {0, 1}}, "B");
	o.require(k == Matrix(2, 2), "K");
	o.detail << "B=[[0,0],[0,1]] K=0";
}

void killing_pullback(Outcome& o) {
	int n = 0;
	for (auto& e : catalog_all()) {
		if (!check_identity(e.algebra, Identity::LeftLeibniz).passed) continue;
		auto q = lie_quotient(e.algebra);
		Matrix k = killing(e.algebra, KillingKind::K);
		o.require(k == q.projection.transpose() * killing(q.algebra, KillingKind::B) * q.projection, e.name);
		o.require(oracle::killing_K(oracle::tab(e.algebra)) == oracle::to_m(k), e.name + " oracle");
		++n;
	}
	o.detail << n << " left Leibniz samples";
}

void cartan_agreement(Outcome& o) {
	std::set<std::string> names;
	int samples = 0;
	for (auto& e : catalog_all()) {
		auto c = cartan(e.algebra);
		bool solvable = series(e.algebra, SeriesKind::Derived).terminal_zero;
		o.require(c.solvable == solvable, e.name + " solvable");
		if (solvable) o.require(!c.semisimple, e.name + " semisimple");
		names.insert(e.name);
		++samples;
	}
	o.require(names.size() >= 25, "fewer than 25 entries");
	o.require(cartan(catalog_get("sl(2)").algebra).semisimple, "sl(2)");
	o.detail << names.size() << " entries, " << samples << " samples";
}

void oracle_equivalence(Outcome& o) {
	std::mt19937_64 rng(default_seed);
	for (auto kind : {ExtKind::L, ExtKind::R}) {
		int total = 0, valid = 0;
		for (int t = 0; t < 2000 && total < 220; ++t) {
			ExtData d = random_ext_data(kind, rng);
			if (d.h.dim() > 2 || d.A.dim() > 3) continue;
			++total;
			bool ok = validate_extension(d).ok();
			auto c = construct_extension(d, false);
			bool generic = oracle::left_leibniz(oracle::tab(c.algebra));
			o.require(ok == generic, std::string(ext_kind_name(kind)) + " validator disagrees");
			o.require(inv(c, kind == ExtKind::L ? oracle::Inv::L : oracle::Inv::R), "invariance");
			valid += ok;
		}
		o.require(total >= 200, "too few samples");
		o.detail << (kind == ExtKind::R ? ", " : "") << ext_kind_name(kind) << " " << valid << "/" << total << " valid";
	}
}

// h* ⊆ Leib(g) and the A-part of Leib(g) is nondegenerate.
bool core_hypothesis(const ExtData& d, const Construction& c) {
	std::size_t k = d.h.dim(), m = d.A.dim(), n = 2 * k + m;
	Subspace leib = leib_ideal(c.algebra);
	std::vector<Vec> hs;
	for (std::size_t i = 0; i < k; ++i) hs.push_back(unit_vec(n, k + m + i));
	if (!subspace_contains(leib, Subspace::span(n, hs))) return false;
	std::vector<Vec> pa;
	for (auto& v : leib.vectors()) pa.push_back(Vec(v.begin() + k, v.begin() + k + m));
	Subspace PA = Subspace::span(m, pa);
	if (PA.dim() == 0) return true;
	Matrix G = PA.basis() * d.mA.matrix() * PA.basis().transpose();
	return rank(G) == G.rows();
}

void round_trip(Outcome& o) {
	std::mt19937_64 rng(default_seed);
	int valid = 0, kept = 0;
	for (int t = 0; t < 1500 && kept < 120; ++t) {
		ExtData d = random_ext_data(ExtKind::L, rng);
		if (!validate_extension(d).ok()) continue;
		++valid;
		auto c = construct_extension(d, true);
		if (!core_hypothesis(d, c)) continue;
		++kept;
		auto r = core_extract(c.algebra, c.metric, Side::L);
		o.require(r.I.dim() == d.h.dim(), "dim I");
		o.require(fingerprint(r.A, r.mA) == fingerprint(d.A, d.mA), "fingerprint A");
		o.require(fingerprint(r.h) == fingerprint(d.h), "fingerprint h");
	}
	o.require(kept >= 50, "fewer than 50 instances");
	o.detail << kept << " round trips out of " << valid << " valid draws";
}

void rigidity(Outcome& o) {
	int nonlie = 0, perfect = 0;
	for (auto& e : catalog_all()) {
		if (!e.metric) continue;
		const Matrix& m = e.metric->matrix();
		bool L = check_invariance(e.algebra, m, Invariance::L).passed;
		bool R = check_invariance(e.algebra, m, Invariance::R).passed;
		bool lie = check_identity(e.algebra, Identity::Lie).passed;
		if (!lie && (L || R)) {
			++nonlie;
			o.require(leib_ideal(e.algebra).dim() >= 2, e.name + " dim Leib");
		}
		if (!lie && R) {
			auto sc = signature_class(*e.metric);
			o.require(!sc.euclidean && !sc.lorentzian, e.name + " signature");
		}
		if (R && square(e.algebra) == Subspace::full(e.algebra.dim())) {
			++perfect;
			o.require(lie, e.name + " perfect but not Lie");
		}
	}
	o.detail << nonlie << " non-Lie invariant samples, " << perfect << " perfect R-invariant samples";
}

void two_imply_third(Outcome& o) {
	gen::Rng r(default_seed);
	int planted = 0, chance = 0;
	for (int t = 0; t < 260; ++t) {
		Algebra a = gen::algebra(r, 2 + r.below(3), 0.15);
		std::size_t n = a.dim();
		std::size_t drop = r.below(3);
		std::vector<std::pair<std::size_t, std::size_t>> slots;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i; j < n; ++j) slots.push_back({i, j});
		auto form_of = [&](const Vec& x) {
			Matrix s(n, n);
			for (std::size_t p = 0; p < slots.size(); ++p) s(slots[p].first, slots[p].second) = s(slots[p].second, slots[p].first) = x[p];
			return s;
		};
		std::vector<Vec> rows;
		for (std::size_t kk = 0; kk < 3; ++kk) {
			if (kk == drop) continue;
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j)
					for (std::size_t l = 0; l < n; ++l) {
						Vec row(slots.size());
						Vec u = unit_vec(n, i), v = unit_vec(n, j), w = unit_vec(n, l);
						for (std::size_t p = 0; p < slots.size(); ++p) {
							Matrix s = form_of(unit_vec(slots.size(), p));
							if (kk == 0) row[p] = bilinear(s, a.product(u, v), w) + bilinear(s, v, a.product(u, w));
							else if (kk == 1) row[p] = bilinear(s, a.product(v, u), w) + bilinear(s, v, a.product(w, u));
							else row[p] = bilinear(s, a.product(u, v), w) - bilinear(s, u, a.product(v, w));
						}
						rows.push_back(row);
					}
		}
		// planted: a random form in the solution space of the two kept invariances
		Subspace sols = kernel(Matrix::from_rows(rows, slots.size()));
		std::vector<Matrix> forms;
		if (sols.dim() > 0) {
			Vec x = zero_vec(slots.size());
			for (auto& b : sols.vectors()) x = x + r.value() * b;
			forms.push_back(form_of(x));
		}
		// chance: a random symmetric form
		forms.push_back(gen::symmetric(r, n, 0.5));
		for (std::size_t f = 0; f < forms.size(); ++f) {
			const Matrix& s = forms[f];
			if (s.is_zero()) continue;
			auto tb = oracle::tab(a);
			auto sm = oracle::to_m(s);
			int held = oracle::invariant(tb, sm, oracle::Inv::L) + oracle::invariant(tb, sm, oracle::Inv::R) +
			           oracle::invariant(tb, sm, oracle::Inv::Assoc);
			if (held < 2) continue;
			(f == 0 && sols.dim() > 0 ? planted : chance)++;
			o.require(held == 3, "third invariance fails");
			for (auto& p : oracle::symmetrized_products(tb))
				for (std::size_t i = 0; i < n; ++i) o.require(oracle::form(sm, p, oracle::e(n, i)) == 0, "symmetrized product outside ker S");
			// the library agrees
			int lib = check_invariance(a, s, Invariance::L).passed + check_invariance(a, s, Invariance::R).passed +
			          check_invariance(a, s, Invariance::Assoc).passed;
			o.require(lib == 3, "library invariance check");
		}
	}
	o.require(planted + chance >= 100, "fewer than 100 detected cases");
	o.detail << planted << " planted, " << chance << " by chance";
}

void h2_checks(Outcome& o) {
	Algebra s = gen::sl2();
	auto a = derivation_spaces(s, Metric(killing(s, KillingKind::B)));
	auto b = derivation_spaces(abelian(2), Metric::diag({1, 1}));
	o.require(a.h2_dim == std::optional<std::size_t>(0), "sl(2)");
	o.require(b.h2_dim == std::optional<std::size_t>(1), "abelian plane");
	gen::Rng r(default_seed);
	int recovered = 0;
	for (int t = 0; t < 20; ++t) {
		std::size_t k = 1 + r.below(2);
		Matrix U(3, k);
		for (std::size_t i = 0; i < 3; ++i)
			for (std::size_t j = 0; j < k; ++j) U(i, j) = r.sparse(0.7);
		std::vector<Matrix> F;
		for (std::size_t j = 0; j < k; ++j) F.push_back(s.left_op(U.col(j)));
		bool ok = find_U(s, F) == U;
		o.require(ok, "find_U");
		recovered += ok;
	}
	o.detail << "h2(sl2)=" << a.h2_dim.value_or(99) << " h2(R^2)=" << b.h2_dim.value_or(99) << " find_U " << recovered << "/20";
}

void construction_closure(Outcome& o) {
	gen::Rng r(default_seed);
	auto pool = gen::quadratic_pool();
	for (int t = 0; t < 20; ++t) {
		auto& q = pool[r.below(pool.size())];
		auto c = double_extension(q.g, q.m, gen::random_skew_derivation(r, q.g, q.m));
		o.require(oracle::lie(oracle::tab(c.algebra)) && inv(c, oracle::Inv::L), "double extension");
	}
	int metrised = 0;
	for (int t = 0; t < 400 && metrised < 20; ++t) {
		auto& q = pool[r.below(pool.size())];
		std::size_t n = q.g.dim();
		std::vector<Vec> iso;
		for (auto& v : center(q.g).vectors())
			if (bilinear(q.m.matrix(), v, v) == 0) iso.push_back(v);
		if (iso.empty()) continue;
		Subspace I = Subspace::span(n, {iso[r.below(iso.size())]});
		Vec phi = q.m.matrix() * I.vectors()[0];
		Rational k = r.value();
		Tensor3 T = zero_tensor(n, n, n);
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y)
				for (std::size_t w = 0; w < n; ++w) T[x][y][w] = k * phi[x] * phi[y] * phi[w];
		auto m = construct_metrised_from_quadratic(q.g, q.m, I, T);
		auto tb = oracle::tab(m.algebra);
		o.require(oracle::left_leibniz(tb) && oracle::right_leibniz(tb) && inv(m, oracle::Inv::Assoc), "metrised");
		++metrised;
	}
	o.require(metrised == 20, "fewer than 20 metrised triples");
	std::set<std::string> cot;
	for (auto& e : catalog_all()) {
		if (e.algebra.dim() > 4 || !check_identity(e.algebra, Identity::Lie).passed) continue;
		auto c = construct_cotangent(CotangentKind::CoadjointL, e.algebra);
		o.require(oracle::left_leibniz(oracle::tab(c.algebra)) && inv(c, oracle::Inv::L), "coadjoint " + e.name);
		cot.insert(e.name);
	}
	o.detail << "20 double extensions, " << metrised << " metrised, coadjoint over " << cot.size() << " Lie entries";
}

}

int main() {
	std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
		{"table reproduction", table_reproduction},
		{"exem1 Killing forms", example_exactness},
		{"Killing pullback", killing_pullback},
		{"Cartan agreement", cartan_agreement},
		{"oracle equivalence", oracle_equivalence},
		{"core round trip", round_trip},
		{"rigidity", rigidity},
		{"two invariances imply the third", two_imply_third},
		{"H2 and find_U", h2_checks},
		{"construction closure", construction_closure},
	};
	int failed = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i) {
		Outcome o;
		try {
			criteria[i].second(o);
		} catch (const std::exception& e) {
			o.require(false, std::string("exception: ") + e.what());
		}
		std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << " (" << o.detail.str()
		          << ")\n";
		failed += !o.pass;
	}
	return failed ? 1 : 0;
}
