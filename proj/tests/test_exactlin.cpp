#include <doctest.h>
#include "gen.hpp"
#include "oracle.hpp"

using namespace leibniz;

namespace {

oracle::M to_m(const Matrix& a) {
	oracle::M m(a.rows(), oracle::V(a.cols()));
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
	return m;
}

Subspace axis(std::size_t n, std::size_t i) { return Subspace::span(n, {unit_vec(n, i)}); }

}

TEST_CASE("rationals print and parse in lowest terms") {
	CHECK(to_string(parse_rational("-6/4")) == "-3/2");
	CHECK(to_string(parse_rational("-0")) == "0");
	CHECK(to_string(parse_rational(" 7 ")) == "7");
	CHECK_THROWS_AS(parse_rational("1/0"), Error);
	CHECK_THROWS_AS(parse_rational("x"), Error);
	CHECK_THROWS_AS(parse_rational("0.5"), Error);
}

TEST_CASE("rref_solve on small systems") {
	auto z = rref_solve(Matrix(2, 2));
	CHECK(z.rank == 0);
	CHECK(z.kernel.dim() == 2);

	auto id = rref_solve(Matrix::identity(3), Vec{1, 2, 3});
	CHECK(id.rank == 3);
	CHECK(id.kernel.dim() == 0);
	REQUIRE(id.particular);
	CHECK(*id.particular == Vec{1, 2, 3});

	auto s = rref_solve(Matrix{{1, 2}, {2, 4}});
	CHECK(s.rank == 1);
	CHECK(s.kernel == Subspace::span(2, {Vec{-2, 1}}));

	auto none = rref_solve(Matrix{{1, 2}, {2, 4}}, Vec{1, 0});
	CHECK_FALSE(none.particular);
}

TEST_CASE("subspace sum and intersection") {
	CHECK(subspace_intersect(axis(2, 0), axis(2, 1)).dim() == 0);
	CHECK(subspace_sum(axis(2, 0), axis(2, 1)) == Subspace::full(2));
	Subspace a = Subspace::span(3, {Vec{1, 1, 0}});
	Subspace b = Subspace::span(3, {Vec{1, 1, 0}, Vec{0, 0, 1}});
	CHECK(subspace_intersect(a, b) == a);
	CHECK(subspace_contains(b, a));
	CHECK_FALSE(subspace_contains(a, b));
	CHECK(subspace_equals(Subspace::span(3, {Vec{2, 2, 0}}), a));
}

TEST_CASE("inertia of small forms") {
	auto h = inertia(Matrix{{0, 1}, {1, 0}});
	CHECK(h == Inertia{1, 1, 0});
	CHECK(inertia(Matrix::identity(4)) == Inertia{4, 0, 0});
	Matrix os4(4, 4);
	os4(1, 1) = os4(2, 2) = 1;
	os4(0, 3) = os4(3, 0) = 1;
	CHECK(inertia(os4) == Inertia{3, 1, 0});
	CHECK(inertia(Matrix{{1, 1}, {1, 1}}) == Inertia{1, 0, 1});
	CHECK_THROWS_AS(inertia(Matrix{{0, 1}, {0, 0}}), Error);
}

TEST_CASE("inverse") {
	Matrix m{{2, 1}, {1, 1}};
	CHECK(inverse(m) * m == Matrix::identity(2));
	CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("property: inertia agrees with the characteristic-polynomial oracle and is congruence invariant") {
	gen::Rng r(11);
	for (int t = 0; t < 150; ++t) {
		std::size_t n = 1 + r.below(5);
		Matrix s = gen::symmetric(r, n);
		auto in = inertia(s);
		auto o = oracle::signature(to_m(s));
		CHECK(in.p == o.p);
		CHECK(in.q == o.q);
		CHECK(in.z == o.z);
		Matrix p = gen::invertible(r, n);
		CHECK(inertia(p.transpose() * s * p) == in);
	}
}

TEST_CASE("property: dimension formula and rank-nullity") {
	gen::Rng r(12);
	for (int t = 0; t < 150; ++t) {
		std::size_t n = 1 + r.below(5);
		std::vector<Vec> a, b;
		for (std::size_t i = r.below(n + 1); i > 0; --i) a.push_back(gen::vec(r, n, 0.5));
		for (std::size_t i = r.below(n + 1); i > 0; --i) b.push_back(gen::vec(r, n, 0.5));
		Subspace s1 = Subspace::span(n, a), s2 = Subspace::span(n, b);
		CHECK(s1.dim() + s2.dim() == subspace_sum(s1, s2).dim() + subspace_intersect(s1, s2).dim());
		CHECK(s1.dim() == oracle::rank(to_m(Matrix::from_rows(a, n))));

		Matrix m = gen::matrix(r, 1 + r.below(4), n);
		std::size_t rk = rank(m);
		CHECK(rk == oracle::rank(to_m(m)));
		Subspace k = kernel(m);
		CHECK(rk + k.dim() == n);
		for (auto& v : k.vectors()) CHECK(is_zero(m * v));
	}
}
