#include <doctest.h>
#include "gen.hpp"
#include "oracle.hpp"

using namespace leibniz;

namespace {

Algebra exem1() {
	Algebra a(2);
	a.set(2, 1, 1, 1).set(2, 2, 1, 1);
	return a;
}

Algebra sl2() { return lie_from_brackets(3, {{{1, 2}, {0, 2, 0}}, {{1, 3}, {0, 0, -2}}, {{2, 3}, {1, 0, 0}}}); }

using oracle::to_m;

oracle::Inv okind(Invariance k) {
	return k == Invariance::L ? oracle::Inv::L : k == Invariance::R ? oracle::Inv::R : oracle::Inv::Assoc;
}

const Invariance kinds[] = {Invariance::L, Invariance::R, Invariance::Assoc};

std::vector<CatalogEntry> left_entries() {
	std::vector<CatalogEntry> v;
	for (auto& e : catalog_all())
		if (check_identity(e.algebra, Identity::LeftLeibniz).passed) v.push_back(e);
	return v;
}

}

TEST_CASE("forms reject bad input") {
	CHECK_THROWS_AS(BilForm(Matrix{{0, 1}, {0, 0}}), Error);
	try {
		Metric m(Matrix{{1, 1}, {1, 1}});
		FAIL("degenerate metric accepted");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::Degenerate);
	}
	CHECK(Metric::diag({1, -1}).inertia() == Inertia{1, 1, 0});
}

TEST_CASE("invariance on g31") {
	auto a = catalog_get("g_{3,1}", {{"lambda", 1}, {"s", 1}}).algebra;
	Matrix id = Matrix::identity(3);
	CHECK(check_invariance(a, id, Invariance::L).passed);
	auto assoc = check_invariance(a, id, Invariance::Assoc);
	CHECK_FALSE(assoc.passed);
	CHECK_FALSE(oracle::invariant(oracle::tab(a), to_m(id), oracle::Inv::Assoc));
	REQUIRE(assoc.witness);
	auto& w = assoc.witness->indices;
	REQUIRE(w.size() == 3);
	std::size_t n = 3;
	Vec u = unit_vec(n, w[0] - 1), v = unit_vec(n, w[1] - 1), x = unit_vec(n, w[2] - 1);
	CHECK(bilinear(id, a.product(u, v), x) != bilinear(id, u, a.product(v, x)));
	for (auto k : kinds) CHECK(check_invariance(a, Matrix(3, 3), k).passed);
}

TEST_CASE("orthogonal complements") {
	CHECK(orthogonal(Matrix::identity(2), Subspace::span(2, {Vec{1, 0}})) == Subspace::span(2, {Vec{0, 1}}));
	Matrix neutral{{0, 1}, {1, 0}};
	CHECK(orthogonal(neutral, Subspace::span(2, {Vec{1, 0}})) == Subspace::span(2, {Vec{1, 0}}));
	CHECK(form_kernel(killing(exem1(), KillingKind::B)) == Subspace::span(2, {Vec{1, 0}}));
}

TEST_CASE("Killing forms") {
	CHECK(killing(exem1(), KillingKind::B) == Matrix{{0, 0}, {0, 1}});
	CHECK(killing(exem1(), KillingKind::K).is_zero());
	CHECK(killing(abelian(3), KillingKind::B).is_zero());
	CHECK(killing(abelian(3), KillingKind::K).is_zero());
	Matrix k = killing(sl2(), KillingKind::K);
	CHECK(k == Matrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}});
	CHECK(k == killing(sl2(), KillingKind::B));
}

TEST_CASE("Cartan verdicts") {
	auto e = cartan(exem1());
	CHECK(e.solvable);
	CHECK_FALSE(e.semisimple);
	auto a = cartan(abelian(2));
	CHECK(a.solvable);
	CHECK_FALSE(a.semisimple);
	auto s = cartan(sl2());
	CHECK(s.semisimple);
	CHECK_FALSE(s.solvable);
	Algebra bad(1);
	bad.set(1, 1, 1, 1);
	CHECK_THROWS_AS(cartan(bad), Error);
}

TEST_CASE("signature classes") {
	auto e = signature_class(Metric::diag({1, 1, 1}));
	CHECK(e.euclidean);
	CHECK_FALSE(e.lorentzian);
	auto os = signature_class(*catalog_get("os(4,lambda)", {{"lambda", 1}, {"mu", 1}}).metric);
	CHECK(os.p == 3);
	CHECK(os.q == 1);
	CHECK(os.lorentzian);
	auto l14 = signature_class(*catalog_get("L_{1,4}", {{"lambda1", 1}, {"lambda2", 2}}).metric);
	CHECK(l14.p == 2);
	CHECK(l14.q == 2);
	CHECK_FALSE(l14.euclidean);
	CHECK_FALSE(l14.lorentzian);
}

TEST_CASE("Lie quotients") {
	auto q = lie_quotient(exem1());
	CHECK(q.algebra.dim() == 1);
	CHECK(q.algebra.is_abelian());
	CHECK(lie_quotient(sl2()).algebra == sl2());
	auto g33 = catalog_get("g_{3,3}", {{"mu", 1}}).algebra;
	auto q3 = lie_quotient(g33);
	CHECK(q3.algebra.dim() == 1);
	CHECK(q3.algebra.is_abelian());
	CHECK_FALSE(is_zero(q3.projection * Vec{0, 1, 0}));
	CHECK(is_zero(q3.projection * Vec{1, 0, 0}));
	CHECK(is_zero(q3.projection * Vec{0, 0, 1}));
}

TEST_CASE("property: invariance checks agree with brute force") {
	gen::Rng r(31);
	for (int t = 0; t < 200; ++t) {
		Algebra a;
		Matrix s;
		if (t % 2) {
			a = gen::algebra(r, 1 + r.below(4), 0.2);
			s = gen::symmetric(r, a.dim());
		} else {
			auto c = gen::catalog_in_random_basis(r);
			a = c.algebra;
			s = c.metric.matrix();
		}
		for (auto k : kinds) CHECK(check_invariance(a, s, k).passed == oracle::invariant(oracle::tab(a), to_m(s), okind(k)));
	}
}

TEST_CASE("property: Killing forms agree with brute force and are bi-invariant") {
	gen::Rng r(32);
	for (int t = 0; t < 60; ++t) {
		auto c = gen::catalog_in_random_basis(r);
		if (!check_identity(c.algebra, Identity::LeftLeibniz).passed) continue;
		auto tb = oracle::tab(c.algebra);
		Matrix b = killing(c.algebra, KillingKind::B), k = killing(c.algebra, KillingKind::K);
		CHECK(to_m(b) == oracle::killing_B(tb));
		CHECK(to_m(k) == oracle::killing_K(tb));
		for (auto kind : kinds) {
			CHECK(check_invariance(c.algebra, b, kind).passed);
			CHECK(check_invariance(c.algebra, k, kind).passed);
		}
	}
}

TEST_CASE("property: catalog Killing facts") {
	for (auto& e : left_entries()) {
		CAPTURE(e.name);
		Matrix b = killing(e.algebra, KillingKind::B), k = killing(e.algebra, KillingKind::K);
		auto q = lie_quotient(e.algebra);
		CHECK(k == q.projection.transpose() * killing(q.algebra, KillingKind::B) * q.projection);
		Subspace leib = leib_ideal(e.algebra);
		CHECK(subspace_contains(form_kernel(b), leib));
		CHECK(subspace_contains(form_kernel(k), leib));
		CHECK(cartan(e.algebra).solvable == series(e.algebra, SeriesKind::Derived).terminal_zero);
	}
}

TEST_CASE("property: two invariances imply the third") {
	gen::Rng r(33);
	int planted = 0;
	for (int t = 0; t < 200; ++t) {
		Algebra a = gen::algebra(r, 2 + r.below(3), 0.15);
		std::size_t n = a.dim();
		std::size_t drop = r.below(3);
		// Symmetric forms satisfying the two kept invariances form a kernel.
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
						for (std::size_t p = 0; p < slots.size(); ++p) {
							Matrix s = form_of(unit_vec(slots.size(), p));
							Vec u = unit_vec(n, i), v = unit_vec(n, j), w = unit_vec(n, l);
							if (kk == 0) row[p] = bilinear(s, a.product(u, v), w) + bilinear(s, v, a.product(u, w));
							else if (kk == 1) row[p] = bilinear(s, a.product(v, u), w) + bilinear(s, v, a.product(w, u));
							else row[p] = bilinear(s, a.product(u, v), w) - bilinear(s, u, a.product(v, w));
						}
						rows.push_back(row);
					}
		}
		Subspace sols = kernel(Matrix::from_rows(rows, slots.size()));
		if (sols.dim() == 0) continue;
		Vec x = zero_vec(slots.size());
		for (auto& b : sols.vectors()) x = x + r.value() * b;
		Matrix s = form_of(x);
		if (s.is_zero()) continue;
		++planted;
		auto tb = oracle::tab(a);
		CHECK(oracle::invariant(tb, to_m(s), oracle::Inv::L));
		CHECK(oracle::invariant(tb, to_m(s), oracle::Inv::R));
		CHECK(oracle::invariant(tb, to_m(s), oracle::Inv::Assoc));
		for (auto& p : oracle::symmetrized_products(tb))
			for (std::size_t i = 0; i < n; ++i) CHECK(oracle::form(to_m(s), p, oracle::e(n, i)) == 0);
	}
	CHECK(planted >= 100);
}

TEST_CASE("property: Leib and its orthogonal under invariant metrics") {
	for (auto& e : catalog_all()) {
		if (!e.metric || !check_identity(e.algebra, Identity::LeftLeibniz).passed) continue;
		CAPTURE(e.name);
		const Matrix& m = e.metric->matrix();
		std::size_t n = e.algebra.dim();
		Subspace leib = leib_ideal(e.algebra);
		if (check_invariance(e.algebra, m, Invariance::L).passed) {
			// u ↦ R_u + R_u^*, vectorized
			std::vector<Vec> cols;
			for (std::size_t i = 0; i < n; ++i) {
				Matrix ru = e.algebra.right_op(unit_vec(n, i));
				cols.push_back(matrix_to_vec(ru + metric_adjoint(ru, *e.metric)));
			}
			CHECK(orthogonal(m, leib) == kernel(Matrix::from_cols(cols, n * n)));
			CHECK(right_center(e.algebra) == orthogonal(m, square(e.algebra)));
		}
		if (check_invariance(e.algebra, m, Invariance::R).passed) {
			CHECK(subspace_contains(square(e.algebra), leib));
			CHECK(subspace_contains(orthogonal(m, leib), square(e.algebra)));
			CHECK(left_center(e.algebra) == orthogonal(m, square(e.algebra)));
			auto sc = signature_class(*e.metric);
			if (sc.euclidean) CHECK(check_identity(e.algebra, Identity::Lie).passed);
		}
	}
}
