#include "leibniz/sample.hpp"

namespace leibniz {

namespace {

struct Pooled {
	Algebra a;
	Matrix m;
	bool lie;
};

Matrix sym(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, int>> e) {
	Matrix m(n, n);
	for (auto& [i, j, x] : e) {
		m(i - 1, j - 1) = x;
		m(j - 1, i - 1) = x;
	}
	return m;
}

std::vector<Pooled> a_pool() {
	std::vector<Pooled> p;
	p.push_back({Algebra(0), Matrix(0, 0), true});
	p.push_back({abelian(1), sym(1, {{1, 1, 1}}), true});
	p.push_back({abelian(1), sym(1, {{1, 1, -1}}), true});
	p.push_back({abelian(2), Matrix::identity(2), true});
	p.push_back({abelian(2), sym(2, {{1, 2, 1}}), true});
	Algebra g31(3), g32(3), g33(3);
	g31.set(3, 1, 2, 1).set(3, 2, 1, -1);
	g32.set(3, 1, 2, 1).set(3, 2, 1, 1);
	g33.set(2, 2, 3, -1).set(2, 3, 1, 1);
	p.push_back({g31, Matrix::identity(3), false});
	p.push_back({g32, sym(3, {{1, 1, -1}, {2, 2, 1}, {3, 3, 1}}), false});
	p.push_back({g33, sym(3, {{1, 2, 1}, {3, 3, 1}}), false});
	p.push_back({abelian(3), Matrix::identity(3), true});
	p.push_back({lie_from_brackets(3, {{{1, 2}, {0, 0, 1}}, {{2, 3}, {1, 0, 0}}, {{3, 1}, {0, 1, 0}}}), Matrix::identity(3), true});
	return p;
}

}

const std::vector<Rational>& sample_values() {
	static const std::vector<Rational> v{Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
	return v;
}

ExtData random_ext_data(ExtKind kind, std::mt19937_64& rng) {
	static const std::vector<Pooled> apool = a_pool();
	auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
	auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };

	std::vector<Algebra> hpool{abelian(1), abelian(2), lie_from_brackets(2, {{{1, 2}, {0, 1}}})};
	if (kind == ExtKind::R) hpool = {abelian(1), abelian(2), lie_from_brackets(3, {{{1, 2}, {0, 0, 1}}})};
	if (kind == ExtKind::SYM) hpool.pop_back();
	Algebra h = hpool[pick(hpool.size())];

	const Pooled* a = nullptr;
	do a = &apool[pick(apool.size())];
	while (kind != ExtKind::L && !a->lie);
	std::size_t k = h.dim(), m = a->a.dim();
	ExtData d = zero_ext_data(kind, h, a->a, Metric(a->m));

	static const double dens[] = {0, 0.2, 0.5, 1};
	double p = dens[pick(4)];
	auto r = [&](double q) { return coin(q) ? sample_values()[pick(sample_values().size())] : Rational(0); };

	Matrix minv = m ? d.mA.inverse() : Matrix(0, 0);
	for (std::size_t i = 0; i < k; ++i) {
		Matrix S(m, m);
		for (std::size_t x = 0; x < m; ++x)
			for (std::size_t y = x + 1; y < m; ++y) {
				S(x, y) = r(p);
				S(y, x) = -S(x, y);
			}
		d.F[i] = minv * S;
		if (kind != ExtKind::L) continue;
		for (std::size_t x = 0; x < m; ++x)
			for (std::size_t y = 0; y < m; ++y) d.G[i](x, y) = r(p);
	}
	if (kind == ExtKind::L && coin(0.3))
		for (std::size_t i = 0; i < k; ++i) d.G[i] = Rational(-1) * d.F[i];

	auto fill = [&](Tensor3& t, bool skew) {
		for (std::size_t i = 0; i < k; ++i)
			for (std::size_t j = 0; j < k; ++j) {
				if (skew && j < i) {
					t[i][j] = Rational(-1) * t[j][i];
					continue;
				}
				if (skew && i == j) continue;
				for (std::size_t l = 0; l < m; ++l) t[i][j][l] = r(p);
			}
	};
	fill(d.theta, kind != ExtKind::L);
	fill(d.omega, true);
	double q = coin(0.5) ? 0.5 : 0;
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < k; ++j)
			for (std::size_t l = j + 1; l < k; ++l) {
				d.Omega[i][j][l] = r(q);
				d.Omega[i][l][j] = -d.Omega[i][j][l];
			}
	return d;
}

}
