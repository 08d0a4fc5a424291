#include "leibniz/algebra.hpp"

namespace leibniz {

static std::vector<std::string> default_names(std::size_t n) {
	std::vector<std::string> v;
	for (std::size_t i = 1; i <= n; ++i) v.push_back("e" + std::to_string(i));
	return v;
}

Algebra::Algebra(std::size_t dim) : n_(dim), names_(default_names(dim)), sc_(dim * dim * dim) {}

Algebra::Algebra(std::size_t dim, std::vector<std::string> names) : Algebra(dim) {
	set_basis_names(std::move(names));
}

void Algebra::set_basis_names(std::vector<std::string> names) {
	if (names.size() != n_) throw Error(ErrorCode::DimensionMismatch, "basis name count");
	names_ = std::move(names);
}

Algebra& Algebra::set(std::size_t i, std::size_t j, std::size_t k, const Rational& x) {
	if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_)
		throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
	c(i - 1, j - 1, k - 1) += x;
	return *this;
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
	Vec r(n_);
	for (std::size_t k = 0; k < n_; ++k) r[k] = c(i, j, k);
	return r;
}

Vec Algebra::product(const Vec& u, const Vec& v) const {
	if (u.size() != n_ || v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "product operands");
	Vec r(n_);
	for (std::size_t i = 0; i < n_; ++i) {
		if (u[i] == 0) continue;
		for (std::size_t j = 0; j < n_; ++j) {
			if (v[j] == 0) continue;
			Rational f = u[i] * v[j];
			for (std::size_t k = 0; k < n_; ++k)
				if (c(i, j, k) != 0) r[k] += f * c(i, j, k);
		}
	}
	return r;
}

Matrix Algebra::left_op(const Vec& u) const {
	if (u.size() != n_) throw Error(ErrorCode::DimensionMismatch, "left_op operand");
	Matrix m(n_, n_);
	for (std::size_t i = 0; i < n_; ++i) {
		if (u[i] == 0) continue;
		for (std::size_t j = 0; j < n_; ++j)
			for (std::size_t k = 0; k < n_; ++k) m(k, j) += u[i] * c(i, j, k);
	}
	return m;
}

Matrix Algebra::right_op(const Vec& u) const {
	if (u.size() != n_) throw Error(ErrorCode::DimensionMismatch, "right_op operand");
	Matrix m(n_, n_);
	for (std::size_t i = 0; i < n_; ++i) {
		if (u[i] == 0) continue;
		for (std::size_t j = 0; j < n_; ++j)
			for (std::size_t k = 0; k < n_; ++k) m(k, j) += u[i] * c(j, i, k);
	}
	return m;
}

bool Algebra::is_abelian() const {
	for (auto& x : sc_)
		if (x != 0) return false;
	return true;
}

Algebra abelian(std::size_t n) { return Algebra(n); }

Algebra lie_from_brackets(std::size_t n, const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vec>>& brackets) {
	Algebra a(n);
	for (auto& [ij, v] : brackets) {
		if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket vector");
		for (std::size_t k = 0; k < n; ++k) {
			if (v[k] == 0) continue;
			a.set(ij.first, ij.second, k + 1, v[k]);
			a.set(ij.second, ij.first, k + 1, -v[k]);
		}
	}
	return a;
}

Vec leibniz_defect(const Algebra& a, const Vec& u, const Vec& v, const Vec& w) {
	return a.product(u, a.product(v, w)) - a.product(a.product(u, v), w) - a.product(v, a.product(u, w));
}

Vec right_leibniz_defect(const Algebra& a, const Vec& u, const Vec& v, const Vec& w) {
	return a.product(a.product(u, v), w) - a.product(a.product(u, w), v) - a.product(u, a.product(v, w));
}

namespace {

CheckResult check_left(const Algebra& a) {
	std::size_t n = a.dim();
	Vec q(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				for (std::size_t r = 0; r < n; ++r) {
					q[r] = 0;
					for (std::size_t s = 0; s < n; ++s)
						q[r] += a.c(j, k, s) * a.c(i, s, r) - a.c(i, j, s) * a.c(s, k, r) - a.c(i, k, s) * a.c(j, s, r);
				}
				if (!is_zero(q)) return {false, Witness{"left_leibniz", {i + 1, j + 1, k + 1}, q}};
			}
	return {};
}

CheckResult check_right(const Algebra& a) {
	std::size_t n = a.dim();
	Vec q(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				for (std::size_t r = 0; r < n; ++r) {
					q[r] = 0;
					for (std::size_t s = 0; s < n; ++s)
						q[r] += a.c(i, j, s) * a.c(s, k, r) - a.c(i, k, s) * a.c(s, j, r) - a.c(j, k, s) * a.c(i, s, r);
				}
				if (!is_zero(q)) return {false, Witness{"right_leibniz", {i + 1, j + 1, k + 1}, q}};
			}
	return {};
}

CheckResult check_alternating(const Algebra& a) {
	std::size_t n = a.dim();
	for (std::size_t i = 0; i < n; ++i) {
		Vec d = a.basis_product(i, i);
		if (!is_zero(d)) return {false, Witness{"antisymmetry", {i + 1, i + 1}, d}};
	}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			Vec d = a.basis_product(i, j) + a.basis_product(j, i);
			if (!is_zero(d)) return {false, Witness{"antisymmetry", {i + 1, j + 1}, d}};
		}
	return {};
}

}

CheckResult check_identity(const Algebra& a, Identity kind) {
	switch (kind) {
	case Identity::LeftLeibniz: return check_left(a);
	case Identity::RightLeibniz: return check_right(a);
	case Identity::Lie: {
		auto r = check_alternating(a);
		if (!r.passed) return r;
		return check_left(a);
	}
	case Identity::SymmetricLeibniz: {
		auto r = check_left(a);
		if (!r.passed) return r;
		return check_right(a);
	}
	}
	return {};
}

Subspace leib_ideal(const Algebra& a) {
	std::size_t n = a.dim();
	std::vector<Vec> v;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j) v.push_back(a.basis_product(i, j) + a.basis_product(j, i));
	return Subspace::span(n, v);
}

Subspace left_center(const Algebra& a) {
	std::size_t n = a.dim();
	Matrix m(n * n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) m(k * n + j, i) = a.c(i, j, k);
	return kernel(m);
}

Subspace right_center(const Algebra& a) {
	std::size_t n = a.dim();
	Matrix m(n * n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) m(k * n + j, i) = a.c(j, i, k);
	return kernel(m);
}

Subspace center(const Algebra& a) { return subspace_intersect(left_center(a), right_center(a)); }

Subspace product_space(const Algebra& a, const Subspace& f, const Subspace& g) {
	if (f.ambient_dim() != a.dim() || g.ambient_dim() != a.dim())
		throw Error(ErrorCode::DimensionMismatch, "product_space operands");
	std::vector<Vec> v;
	auto fv = f.vectors(), gv = g.vectors();
	for (auto& x : fv)
		for (auto& y : gv) v.push_back(a.product(x, y));
	return Subspace::span(a.dim(), v);
}

Subspace square(const Algebra& a) {
	auto full = Subspace::full(a.dim());
	return product_space(a, full, full);
}

std::optional<Witness> ideal_witness(const Algebra& a, const Subspace& s) {
	std::size_t n = a.dim();
	auto sv = s.vectors();
	for (std::size_t r = 0; r < sv.size(); ++r)
		for (std::size_t i = 0; i < n; ++i) {
			Vec e = unit_vec(n, i);
			Vec l = a.product(e, sv[r]);
			if (!s.contains(l)) return Witness{"left_product_escapes", {i + 1, r + 1}, l};
			Vec rr = a.product(sv[r], e);
			if (!s.contains(rr)) return Witness{"right_product_escapes", {r + 1, i + 1}, rr};
		}
	return std::nullopt;
}

Quotient quotient(const Algebra& a, const Subspace& s) {
	std::size_t n = a.dim();
	if (s.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "quotient subspace");
	if (auto w = ideal_witness(a, s)) {
		std::string msg = w->label + " at basis " + std::to_string(w->indices[0]) + "," + std::to_string(w->indices[1]);
		throw Error(ErrorCode::NotAnIdeal, msg);
	}
	auto piv = s.pivots();
	std::vector<bool> is_piv(n, false);
	for (auto p : piv) is_piv[p] = true;
	std::vector<std::size_t> comp;
	for (std::size_t j = 0; j < n; ++j)
		if (!is_piv[j]) comp.push_back(j);
	std::size_t q = comp.size();
	Quotient res;
	res.projection = Matrix(q, n);
	res.lift = Matrix(n, q);
	for (std::size_t t = 0; t < q; ++t) {
		res.projection(t, comp[t]) = 1;
		for (std::size_t r = 0; r < piv.size(); ++r) res.projection(t, piv[r]) = -s.basis()(r, comp[t]);
		res.lift(comp[t], t) = 1;
	}
	std::vector<std::string> names;
	for (auto c : comp) names.push_back(a.basis_names()[c]);
	res.algebra = Algebra(q, names);
	for (std::size_t t = 0; t < q; ++t)
		for (std::size_t u = 0; u < q; ++u) {
			Vec p = res.projection * a.basis_product(comp[t], comp[u]);
			for (std::size_t k = 0; k < q; ++k) res.algebra.c(t, u, k) = p[k];
		}
	return res;
}

std::optional<std::size_t> Series::length() const {
	for (std::size_t i = 0; i < terms.size(); ++i)
		if (terms[i].dim() == 0) return i;
	return std::nullopt;
}

Series series(const Algebra& a, SeriesKind kind) {
	Series s;
	auto full = Subspace::full(a.dim());
	s.terms.push_back(full);
	while (true) {
		const Subspace& cur = s.terms.back();
		Subspace next = kind == SeriesKind::Derived
			? product_space(a, cur, cur)
			: subspace_sum(product_space(a, full, cur), product_space(a, cur, full));
		if (next == cur) break;
		s.terms.push_back(next);
		if (next.dim() == 0) break;
	}
	s.terminal_zero = s.terms.back().dim() == 0;
	return s;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
	std::size_t n = a.dim(), m = b.dim();
	std::vector<std::string> names;
	for (std::size_t i = 1; i <= n + m; ++i) names.push_back("e" + std::to_string(i));
	Algebra r(n + m, names);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) r.c(i, j, k) = a.c(i, j, k);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			for (std::size_t k = 0; k < m; ++k) r.c(n + i, n + j, n + k) = b.c(i, j, k);
	return r;
}

}
