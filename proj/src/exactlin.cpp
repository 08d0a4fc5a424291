#include "leibniz/exactlin.hpp"

#include <algorithm>

namespace leibniz {

std::string to_string(const Rational& q) {
	return q.get_str();
}

Rational parse_rational(const std::string& s) {
	std::string t;
	for (char ch : s)
		if (ch != ' ') t += ch;
	if (t.empty()) throw Error(ErrorCode::Parse, "empty rational");
	Rational q;
	if (q.set_str(t, 10) != 0 || q.get_den() == 0) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
	q.canonicalize();
	return q;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
	Vec v(n);
	v[i] = 1;
	return v;
}

bool is_zero(const Vec& v) {
	return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

static void check_len(std::size_t a, std::size_t b) {
	if (a != b) throw Error(ErrorCode::DimensionMismatch, std::to_string(a) + " vs " + std::to_string(b));
}

Vec operator+(const Vec& a, const Vec& b) {
	check_len(a.size(), b.size());
	Vec r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
	return r;
}

Vec operator-(const Vec& a, const Vec& b) {
	check_len(a.size(), b.size());
	Vec r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
	return r;
}

Vec operator*(const Rational& s, const Vec& a) {
	Vec r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
	return r;
}

Rational dot(const Vec& a, const Vec& b) {
	check_len(a.size(), b.size());
	Rational r;
	for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
	return r;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
	r_ = rows.size();
	c_ = r_ ? rows.begin()->size() : 0;
	for (auto& row : rows) {
		check_len(row.size(), c_);
		for (auto& x : row) a_.push_back(x);
	}
}

Matrix Matrix::identity(std::size_t n) {
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
	return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
	Matrix m(rows.size(), cols);
	for (std::size_t i = 0; i < rows.size(); ++i) {
		check_len(rows[i].size(), cols);
		for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
	}
	return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
	return from_rows(cols, rows).transpose();
}

Vec Matrix::row(std::size_t i) const {
	return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

Vec Matrix::col(std::size_t j) const {
	Vec v(r_);
	for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
	return v;
}

Matrix Matrix::transpose() const {
	Matrix t(c_, r_);
	for (std::size_t i = 0; i < r_; ++i)
		for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
	return t;
}

bool Matrix::is_zero() const {
	return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

bool Matrix::is_symmetric() const {
	if (r_ != c_) return false;
	for (std::size_t i = 0; i < r_; ++i)
		for (std::size_t j = i + 1; j < c_; ++j)
			if ((*this)(i, j) != (*this)(j, i)) return false;
	return true;
}

Rational Matrix::trace() const {
	Rational t;
	for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
	return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
	check_len(a.rows(), b.rows());
	check_len(a.cols(), b.cols());
	Matrix r(a.rows(), a.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
	return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
	check_len(a.rows(), b.rows());
	check_len(a.cols(), b.cols());
	Matrix r(a.rows(), a.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
	return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
	check_len(a.cols(), b.rows());
	Matrix r(a.rows(), b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t k = 0; k < a.cols(); ++k) {
			if (a(i, k) == 0) continue;
			for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
		}
	return r;
}

Matrix operator*(const Rational& s, const Matrix& a) {
	Matrix r(a.rows(), a.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
	return r;
}

Vec operator*(const Matrix& a, const Vec& v) {
	check_len(a.cols(), v.size());
	Vec r(a.rows());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
			if (v[j] != 0) r[i] += a(i, j) * v[j];
	return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rational bilinear(const Matrix& s, const Vec& u, const Vec& v) { return dot(u, s * v); }

std::vector<std::size_t> rref_inplace(Matrix& m) {
	std::vector<std::size_t> piv;
	std::size_t row = 0;
	for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
		std::size_t p = row;
		while (p < m.rows() && m(p, c) == 0) ++p;
		if (p == m.rows()) continue;
		if (p != row)
			for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
		Rational inv = 1 / m(row, c);
		for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
		for (std::size_t i = 0; i < m.rows(); ++i) {
			if (i == row || m(i, c) == 0) continue;
			Rational f = m(i, c);
			for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
		}
		piv.push_back(c);
		++row;
	}
	return piv;
}

Matrix inverse(const Matrix& m) {
	if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
	std::size_t n = m.rows();
	Matrix aug(n, 2 * n);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
		aug(i, n + i) = 1;
	}
	auto piv = rref_inplace(aug);
	if (piv.size() < n || (n && piv[n - 1] != n - 1)) throw Error(ErrorCode::Singular, "matrix is singular");
	Matrix r(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
	return r;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vecs) {
	Matrix m = Matrix::from_rows(vecs, ambient);
	auto piv = rref_inplace(m);
	Subspace s(ambient);
	s.basis_ = Matrix(piv.size(), ambient);
	for (std::size_t i = 0; i < piv.size(); ++i)
		for (std::size_t j = 0; j < ambient; ++j) s.basis_(i, j) = m(i, j);
	return s;
}

Subspace Subspace::full(std::size_t ambient) {
	Subspace s(ambient);
	s.basis_ = Matrix::identity(ambient);
	return s;
}

std::vector<Vec> Subspace::vectors() const {
	std::vector<Vec> v;
	for (std::size_t i = 0; i < basis_.rows(); ++i) v.push_back(basis_.row(i));
	return v;
}

std::vector<std::size_t> Subspace::pivots() const {
	std::vector<std::size_t> p;
	for (std::size_t i = 0; i < basis_.rows(); ++i) {
		std::size_t j = 0;
		while (basis_(i, j) == 0) ++j;
		p.push_back(j);
	}
	return p;
}

bool Subspace::contains(const Vec& v) const {
	check_len(v.size(), n_);
	Vec r = v;
	auto piv = pivots();
	for (std::size_t i = 0; i < piv.size(); ++i) {
		if (r[piv[i]] == 0) continue;
		Rational f = r[piv[i]];
		for (std::size_t j = 0; j < n_; ++j) r[j] -= f * basis_(i, j);
	}
	return is_zero(r);
}

SolveResult rref_solve(const Matrix& m, const std::optional<Vec>& b) {
	if (b) check_len(b->size(), m.rows());
	std::size_t n = m.cols();
	Matrix a(m.rows(), n + (b ? 1 : 0));
	for (std::size_t i = 0; i < m.rows(); ++i) {
		for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
		if (b) a(i, n) = (*b)[i];
	}
	auto piv = rref_inplace(a);
	SolveResult res;
	bool inconsistent = false;
	for (auto p : piv) {
		if (p < n) res.pivots.push_back(p);
		else inconsistent = true;
	}
	res.rank = res.pivots.size();
	std::vector<bool> is_piv(n, false);
	for (auto p : res.pivots) is_piv[p] = true;
	std::vector<Vec> ker;
	for (std::size_t f = 0; f < n; ++f) {
		if (is_piv[f]) continue;
		Vec v(n);
		v[f] = 1;
		for (std::size_t i = 0; i < res.pivots.size(); ++i) v[res.pivots[i]] = -a(i, f);
		ker.push_back(v);
	}
	res.kernel = Subspace::span(n, ker);
	if (b && !inconsistent) {
		Vec x(n);
		for (std::size_t i = 0; i < res.pivots.size(); ++i) x[res.pivots[i]] = a(i, n);
		res.particular = x;
	}
	return res;
}

Subspace kernel(const Matrix& m) { return rref_solve(m).kernel; }

std::size_t rank(const Matrix& m) {
	Matrix a = m;
	return rref_inplace(a).size();
}

static void same_ambient(const Subspace& a, const Subspace& b) {
	if (a.ambient_dim() != b.ambient_dim())
		throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
	same_ambient(a, b);
	auto v = a.vectors();
	for (auto& x : b.vectors()) v.push_back(x);
	return Subspace::span(a.ambient_dim(), v);
}

Subspace annihilator(const Subspace& s) {
	if (s.dim() == 0) return Subspace::full(s.ambient_dim());
	return kernel(s.basis());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
	same_ambient(a, b);
	auto v = annihilator(a).vectors();
	for (auto& x : annihilator(b).vectors()) v.push_back(x);
	if (v.empty()) return Subspace::full(a.ambient_dim());
	return kernel(Matrix::from_rows(v, a.ambient_dim()));
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
	same_ambient(a, b);
	for (auto& x : b.vectors())
		if (!a.contains(x)) return false;
	return true;
}

bool subspace_equals(const Subspace& a, const Subspace& b) {
	same_ambient(a, b);
	return a == b;
}

Inertia inertia(const Matrix& s0) {
	if (!s0.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "inertia needs a symmetric matrix");
	Matrix s = s0;
	std::size_t n = s.rows();
	std::vector<bool> active(n, true);
	Inertia res;
	std::size_t left = n;
	while (left > 0) {
		std::size_t k = n;
		for (std::size_t i = 0; i < n; ++i)
			if (active[i] && s(i, i) != 0) { k = i; break; }
		if (k == n) {
			// zero diagonal: turn a hyperbolic pair into a nonzero diagonal entry
			std::size_t pi = n, pj = n;
			for (std::size_t i = 0; i < n && pi == n; ++i)
				for (std::size_t j = i + 1; j < n; ++j)
					if (active[i] && active[j] && s(i, j) != 0) { pi = i; pj = j; break; }
			if (pi == n) break;
			for (std::size_t c = 0; c < n; ++c) s(pi, c) += s(pj, c);
			for (std::size_t r = 0; r < n; ++r) s(r, pi) += s(r, pj);
			k = pi;
		}
		Rational d = s(k, k);
		if (d > 0) ++res.p; else ++res.q;
		active[k] = false;
		--left;
		for (std::size_t i = 0; i < n; ++i) {
			if (!active[i] || s(i, k) == 0) continue;
			for (std::size_t j = 0; j < n; ++j)
				if (active[j]) s(i, j) -= s(i, k) * s(k, j) / d;
		}
		for (std::size_t i = 0; i < n; ++i) s(i, k) = s(k, i) = 0;
		s(k, k) = d;
	}
	res.z = left;
	return res;
}

}
