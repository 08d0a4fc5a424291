#pragma once
// Seeded generators for property tests.
#include <random>
#include "leibniz/catalog.hpp"
#include "leibniz/sample.hpp"

namespace gen {

using namespace leibniz;

struct Rng {
	std::mt19937_64 eng;
	explicit Rng(std::uint64_t seed = default_seed) : eng(seed) {}
	std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng); }
	bool coin(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }
	Rational value() { return sample_values()[below(sample_values().size())]; }
	Rational sparse(double p) { return coin(p) ? value() : Rational(0); }
};

inline Vec vec(Rng& r, std::size_t n, double p = 0.7) {
	Vec v(n);
	for (auto& x : v) x = r.sparse(p);
	return v;
}

inline Matrix matrix(Rng& r, std::size_t rows, std::size_t cols, double p = 0.5) {
	Matrix m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j) m(i, j) = r.sparse(p);
	return m;
}

inline Matrix symmetric(Rng& r, std::size_t n, double p = 0.5) {
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = r.sparse(p);
	return m;
}

inline Matrix invertible(Rng& r, std::size_t n) {
	for (;;) {
		Matrix m = matrix(r, n, n, 0.6);
		if (rank(m) == n) return m;
	}
}

inline Algebra algebra(Rng& r, std::size_t n, double p = 0.15) {
	Algebra a(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) a.c(i, j, k) = r.sparse(p);
	return a;
}

// A catalog sample moved to a random basis.
inline Construction catalog_in_random_basis(Rng& r) {
	std::vector<CatalogEntry> all;
	for (auto& e : catalog_all())
		if (e.metric) all.push_back(e);
	const auto& e = all[r.below(all.size())];
	return transport(e.algebra, *e.metric, invertible(r, e.algebra.dim()));
}

inline Algebra aff1() { return lie_from_brackets(2, {{{1, 2}, {0, 1}}}); }
inline Algebra heis3() { return lie_from_brackets(3, {{{1, 2}, {0, 0, 1}}}); }
inline Algebra sl2() { return lie_from_brackets(3, {{{1, 2}, {0, 2, 0}}, {{1, 3}, {0, 0, -2}}, {{2, 3}, {1, 0, 0}}}); }
inline Algebra so3() { return lie_from_brackets(3, {{{1, 2}, {0, 0, 1}}, {{2, 3}, {1, 0, 0}}, {{3, 1}, {0, 1, 0}}}); }

struct Quadratic {
	Algebra g;
	Metric m;
};

// Small quadratic Lie algebras.
inline std::vector<Quadratic> quadratic_pool() {
	auto os = catalog_get("os(4,lambda)", {{"lambda", 1}, {"mu", 0}});
	auto g14 = catalog_get("g_{1,4}", {{"mu", 0}});
	return {{abelian(2), Metric::diag({1, 1})}, {abelian(2), Metric(Matrix{{0, 1}, {1, 0}})}, {so3(), Metric::diag({1, 1, 1})},
		{sl2(), Metric(killing(sl2(), KillingKind::B))}, {os.algebra, *os.metric}, {g14.algebra, *g14.metric},
		{abelian(3), Metric::diag({1, -1, 1})}};
}

inline Matrix random_skew_derivation(Rng& r, const Algebra& a, const Metric& m) {
	auto ds = derivation_spaces(a, m);
	Vec x = zero_vec(a.dim() * a.dim());
	for (auto& b : ds.skew_der->vectors()) x = x + r.value() * b;
	return vec_to_matrix(x, a.dim());
}

}
