#include "leibniz/construct.hpp"

#include <algorithm>

namespace leibniz {

Tensor3 zero_tensor(std::size_t a, std::size_t b, std::size_t c) {
	return Tensor3(a, std::vector<Vec>(b, Vec(c)));
}

bool Tensor4::is_zero() const {
	return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

const char* ext_kind_name(ExtKind k) {
	switch (k) {
	case ExtKind::L: return "L";
	case ExtKind::R: return "R";
	case ExtKind::SYM: return "SYM";
	}
	return "?";
}

ExtData zero_ext_data(ExtKind kind, const Algebra& h, const Algebra& A, const Metric& mA) {
	std::size_t k = h.dim(), m = A.dim();
	ExtData d;
	d.kind = kind;
	d.h = h;
	d.A = A;
	d.mA = mA;
	d.F.assign(k, Matrix(m, m));
	if (kind == ExtKind::L) d.G.assign(k, Matrix(m, m));
	d.theta = zero_tensor(k, k, m);
	d.omega = zero_tensor(k, k, m);
	d.Omega = zero_tensor(k, k, k);
	return d;
}

std::vector<std::string> ValidationReport::equation_ids() const {
	std::vector<std::string> ids;
	for (auto& v : violations)
		if (std::find(ids.begin(), ids.end(), v.equation) == ids.end()) ids.push_back(v.equation);
	return ids;
}

Metric natural_metric(std::size_t k, const Metric& mA) {
	std::size_t m = mA.dim(), n = 2 * k + m;
	Matrix g(n, n);
	for (std::size_t i = 0; i < k; ++i) g(i, k + m + i) = g(k + m + i, i) = 1;
	for (std::size_t p = 0; p < m; ++p)
		for (std::size_t q = 0; q < m; ++q) g(k + p, k + q) = mA.matrix()(p, q);
	return Metric(g);
}

namespace {

Rational om_at(const Tensor3& Om, std::size_t x, const Vec& z, std::size_t t) {
	Rational r;
	for (std::size_t a = 0; a < z.size(); ++a)
		if (z[a] != 0) r += z[a] * Om[x][a][t];
	return r;
}

Rational om_at2(const Tensor3& Om, std::size_t x, std::size_t z, const Vec& t) {
	Rational r;
	for (std::size_t a = 0; a < t.size(); ++a)
		if (t[a] != 0) r += t[a] * Om[x][z][a];
	return r;
}

Rational om_lin(const Tensor3& Om, const Vec& x, std::size_t z, std::size_t t) {
	Rational r;
	for (std::size_t a = 0; a < x.size(); ++a)
		if (x[a] != 0) r += x[a] * Om[a][z][t];
	return r;
}

// (ad*_X Ω(Y))(Z,T) = −Ω(Y)([X,Z],T) − Ω(Y)(Z,[X,T])
Rational adstar(const Algebra& h, const Tensor3& Om, std::size_t x, std::size_t y, std::size_t z, std::size_t t) {
	return -om_at(Om, y, h.basis_product(x, z), t) - om_at2(Om, y, z, h.basis_product(x, t));
}

void require(bool ok, ErrorCode c, const std::string& msg) {
	if (!ok) throw Error(c, msg);
}

void check_skew3(const Tensor3& t, std::size_t a, std::size_t b, const std::string& name, bool first_pair) {
	// first_pair: skew in (i,j); otherwise skew in (j,l)
	if (first_pair) {
		for (std::size_t i = 0; i < a; ++i)
			for (std::size_t j = 0; j < a; ++j)
				require(t[i][j] == Rational(-1) * t[j][i], ErrorCode::ShapeMismatch, name + " is not skew");
	} else {
		for (std::size_t i = 0; i < a; ++i)
			for (std::size_t j = 0; j < b; ++j)
				for (std::size_t l = 0; l < b; ++l)
					require(t[i][j][l] == -t[i][l][j], ErrorCode::ShapeMismatch, name + " is not skew");
	}
}

void check_tensor(const Tensor3& t, std::size_t a, std::size_t b, std::size_t c, const std::string& name) {
	require(t.size() == a, ErrorCode::ShapeMismatch, name + " outer size");
	for (auto& r : t) {
		require(r.size() == b, ErrorCode::ShapeMismatch, name + " middle size");
		for (auto& v : r) require(v.size() == c, ErrorCode::ShapeMismatch, name + " inner size");
	}
}

Matrix lin_comb(const std::vector<Matrix>& F, const Vec& v, std::size_t m) {
	Matrix r(m, m);
	for (std::size_t i = 0; i < v.size(); ++i)
		if (v[i] != 0) r = r + v[i] * F[i];
	return r;
}

Vec tlin1(const Tensor3& t, const Vec& x, std::size_t j, std::size_t m) {
	Vec r(m);
	for (std::size_t i = 0; i < x.size(); ++i)
		if (x[i] != 0) r = r + x[i] * t[i][j];
	return r;
}

Vec tlin2(const Tensor3& t, std::size_t i, const Vec& y, std::size_t m) {
	Vec r(m);
	for (std::size_t j = 0; j < y.size(); ++j)
		if (y[j] != 0) r = r + y[j] * t[i][j];
	return r;
}

struct Collector {
	ValidationReport rep;
	void mat(const std::string& id, std::vector<std::size_t> idx, const Matrix& d) {
		if (!d.is_zero()) {
			for (auto& i : idx) ++i;
			rep.violations.push_back({id, idx, matrix_to_vec(d)});
		}
	}
	void vec(const std::string& id, std::vector<std::size_t> idx, const Vec& d) {
		if (!is_zero(d)) {
			for (auto& i : idx) ++i;
			rep.violations.push_back({id, idx, d});
		}
	}
	void scalar(const std::string& id, std::vector<std::size_t> idx, const Rational& d) {
		if (d != 0) {
			for (auto& i : idx) ++i;
			rep.violations.push_back({id, idx, {d}});
		}
	}
	void check(const std::string& id, const CheckResult& r) {
		if (!r.passed) {
			Violation v{id, {}, {}};
			if (r.witness) { v.indices = r.witness->indices; v.defect = r.witness->defect; }
			rep.violations.push_back(v);
		}
	}
};

void side_F(Collector& c, const ExtData& d) {
	std::size_t m = d.A.dim();
	for (std::size_t i = 0; i < d.F.size(); ++i) {
		c.mat("F_skew", {i}, d.mA.matrix() * d.F[i] + d.F[i].transpose() * d.mA.matrix());
		for (std::size_t p = 0; p < m; ++p)
			for (std::size_t q = 0; q < m; ++q) {
				Vec a = unit_vec(m, p), b = unit_vec(m, q);
				Vec def = d.F[i] * d.A.product(a, b) - d.A.product(d.F[i] * a, b) - d.A.product(a, d.F[i] * b);
				c.vec("F_derivation", {i, p, q}, def);
			}
	}
}

ValidationReport validate_L(const ExtData& d) {
	Collector c;
	const Algebra &h = d.h, &A = d.A;
	std::size_t k = h.dim(), m = A.dim();
	auto ip = [&](const Vec& a, const Vec& b) { return bilinear(d.mA.matrix(), a, b); };
	c.check("h_lie", check_identity(h, Identity::Lie));
	bool h_lie = c.rep.ok();
	c.check("A_left_leibniz", check_identity(A, Identity::LeftLeibniz));
	c.check("A_invariance", check_invariance(A, d.mA.matrix(), Invariance::L));
	side_F(c, d);
	std::vector<Matrix> Gs;
	for (auto& g : d.G) Gs.push_back(metric_adjoint(g, d.mA));
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t p = 0; p < m; ++p) {
			Vec a = unit_vec(m, p);
			Matrix La = A.left_op(a);
			c.mat("eq1a", {i, p}, commutator(La, d.F[i]) - A.left_op(d.G[i] * a));
			c.mat("eq1b", {i, p}, commutator(La, d.G[i]) - A.right_op(d.G[i] * a));
		}
	for (std::size_t x = 0; x < k; ++x)
		for (std::size_t y = 0; y < k; ++y) {
			Vec xy = h.basis_product(x, y);
			Matrix Gxy = lin_comb(d.G, xy, m), Fxy = lin_comb(d.F, xy, m);
			Matrix Rth = A.right_op(d.theta[x][y]);
			c.mat("eq2", {x, y}, A.left_op(d.omega[x][y]) - (Gs[x] * d.G[y] - Gs[y] * d.G[x]));
			c.mat("eq3a", {x, y}, Rth - (commutator(d.F[x], d.G[y]) - Gxy));
			c.mat("eq3b", {x, y}, Rth - (d.F[x] * d.G[y] + d.G[y] * d.G[x] - Gxy));
			c.mat("eq4", {x, y}, A.left_op(d.theta[x][y]) - (commutator(d.F[x], d.F[y]) - Fxy));
			for (std::size_t z = 0; z < k; ++z) {
				Vec v = tlin2(d.theta, x, h.basis_product(y, z), m) - tlin1(d.theta, xy, z, m)
					- tlin2(d.theta, y, h.basis_product(x, z), m) + d.F[x] * d.theta[y][z]
					- d.F[y] * d.theta[x][z] - d.G[z] * d.theta[x][y];
				c.vec("eq5", {x, y, z}, v);
				Vec w = Gs[z] * d.theta[x][y] - Gs[y] * d.theta[x][z] - d.F[x] * d.omega[y][z]
					+ tlin2(d.omega, y, h.basis_product(x, z), m) + tlin1(d.omega, xy, z, m);
				c.vec("eq6", {x, y, z}, w);
				c.vec("eq7", {x, y, z}, (Gs[x] + d.F[x]) * d.omega[y][z]);
			}
		}
	if (!h_lie) return c.rep;
	Tensor4 D = delta_omega(h, d.Omega);
	for (std::size_t x = 0; x < k; ++x)
		for (std::size_t y = 0; y < k; ++y)
			for (std::size_t z = 0; z < k; ++z)
				for (std::size_t t = 0; t < k; ++t) {
					Rational r = ip(d.theta[x][t], d.theta[y][z]) - ip(d.theta[y][t], d.theta[x][z]) - ip(d.omega[z][t], d.theta[x][y]);
					c.scalar("eq8", {x, y, z, t}, D.at(x, y, z, t) - r);
				}
	return c.rep;
}

void two_step(Collector& c, const Algebra& h) {
	std::size_t k = h.dim();
	for (std::size_t x = 0; x < k; ++x)
		for (std::size_t y = 0; y < k; ++y)
			for (std::size_t z = 0; z < k; ++z)
				c.vec("h_two_step_nilpotent", {x, y, z}, h.product(unit_vec(k, x), h.basis_product(y, z)));
}

ValidationReport validate_R(const ExtData& d) {
	Collector c;
	const Algebra &h = d.h, &A = d.A;
	std::size_t k = h.dim(), m = A.dim();
	auto ip = [&](const Vec& a, const Vec& b) { return bilinear(d.mA.matrix(), a, b); };
	c.check("h_lie", check_identity(h, Identity::Lie));
	two_step(c, h);
	c.check("A_lie", check_identity(A, Identity::Lie));
	c.check("A_invariance", check_invariance(A, d.mA.matrix(), Invariance::L));
	side_F(c, d);
	for (std::size_t x = 0; x < k; ++x)
		for (std::size_t y = 0; y < k; ++y) {
			Matrix Fxy = lin_comb(d.F, h.basis_product(x, y), m);
			c.mat("eq1", {x, y}, A.left_op(d.omega[x][y]) - (Fxy - commutator(d.F[x], d.F[y])));
			c.mat("eq2", {x, y}, A.left_op(d.theta[x][y]) - commutator(d.F[x], d.F[y]));
			for (std::size_t z = 0; z < k; ++z) {
				c.vec("eq3", {x, y, z}, d.F[x] * d.theta[y][z] + d.F[y] * d.theta[z][x] + d.F[z] * d.theta[x][y]);
				Vec v = d.F[x] * d.omega[y][z] + d.F[y] * d.omega[z][x] - d.F[z] * d.theta[x][y]
					+ tlin2(d.omega, x, h.basis_product(y, z), m) - tlin2(d.omega, y, h.basis_product(x, z), m);
				c.vec("eq4", {x, y, z}, v);
				Vec w = d.F[x] * d.theta[y][z] - d.F[y] * d.omega[z][x] + d.F[z] * d.theta[x][y]
					- tlin2(d.theta, y, h.basis_product(x, z), m);
				c.vec("eq5", {x, y, z}, w);
				for (std::size_t t = 0; t < k; ++t) {
					// (ad_T)^*Ω(Z)(X,Y)
					Rational lhs = -om_at(d.Omega, z, h.basis_product(t, x), y) - om_at2(d.Omega, z, x, h.basis_product(t, y));
					Rational rhs = ip(d.omega[y][t], d.theta[x][z]) + ip(d.omega[x][t], d.theta[z][y]) + ip(d.theta[z][t], d.theta[x][y]);
					c.scalar("eq6", {x, y, z, t}, lhs - rhs);
				}
			}
		}
	c.rep.notes.push_back("h_two_step_nilpotent is required by the h-h-h* component of the Leibniz identity; it is not among the listed R equations");
	return c.rep;
}

ValidationReport validate_SYM(const ExtData& d) {
	Collector c;
	const Algebra &h = d.h, &A = d.A;
	std::size_t k = h.dim();
	auto ip = [&](const Vec& a, const Vec& b) { return bilinear(d.mA.matrix(), a, b); };
	if (!h.is_abelian()) c.rep.violations.push_back({"h_abelian", {}, {}});
	c.check("A_lie", check_identity(A, Identity::Lie));
	c.check("A_invariance", check_invariance(A, d.mA.matrix(), Invariance::L));
	side_F(c, d);
	for (std::size_t x = 0; x < k; ++x)
		for (std::size_t y = 0; y < k; ++y) {
			Matrix br = commutator(d.F[x], d.F[y]);
			c.mat("eq1a", {x, y}, A.left_op(d.theta[x][y]) - br);
			c.mat("eq1b", {x, y}, A.left_op(d.omega[x][y]) + br);
			for (std::size_t z = 0; z < k; ++z) {
				c.vec("eq2", {x, y, z}, d.F[x] * d.theta[y][z] + d.F[y] * d.theta[z][x] + d.F[z] * d.theta[x][y]);
				c.vec("eq3", {x, y, z}, d.F[x] * (d.theta[y][z] + d.omega[y][z]));
				for (std::size_t t = 0; t < k; ++t) {
					c.scalar("eq4", {x, y, z, t}, ip(d.theta[y][t], d.theta[z][x]) + ip(d.theta[x][t], d.theta[y][z]) + ip(d.theta[z][t], d.theta[x][y]));
					c.scalar("eq5", {x, y, z, t}, ip(d.theta[x][t] + d.omega[x][t], d.theta[y][z]));
				}
			}
		}
	return c.rep;
}

}

Tensor4 delta_omega(const Algebra& h, const Tensor3& Om) {
	std::size_t k = h.dim();
	check_tensor(Om, k, k, k, "Omega");
	if (!check_identity(h, Identity::Lie).passed) throw Error(ErrorCode::NotLie, "delta_omega needs a Lie algebra");
	Tensor4 D;
	D.k = k;
	D.v.assign(k * k * k * k, Rational());
	for (std::size_t x = 0; x < k; ++x)
		for (std::size_t y = 0; y < k; ++y) {
			Vec xy = h.basis_product(x, y);
			for (std::size_t z = 0; z < k; ++z)
				for (std::size_t t = 0; t < k; ++t)
					D.at(x, y, z, t) = adstar(h, Om, x, y, z, t) - adstar(h, Om, y, x, z, t) - om_lin(Om, xy, z, t);
		}
	return D;
}

bool is_derivation(const Algebra& A, const Matrix& D) {
	std::size_t m = A.dim();
	for (std::size_t p = 0; p < m; ++p)
		for (std::size_t q = 0; q < m; ++q) {
			Vec a = unit_vec(m, p), b = unit_vec(m, q);
			if (!is_zero(D * A.product(a, b) - A.product(D * a, b) - A.product(a, D * b))) return false;
		}
	return true;
}

bool is_skew(const Matrix& D, const Matrix& m) { return (m * D + D.transpose() * m).is_zero(); }

Construction double_extension(const Algebra& h, const Metric& mh, const Matrix& Amap) {
	std::size_t d = h.dim();
	if (!check_identity(h, Identity::Lie).passed || !check_invariance(h, mh.matrix(), Invariance::L).passed)
		throw Error(ErrorCode::NotQuadraticLie, "double extension needs a quadratic Lie algebra");
	if (Amap.rows() != d || Amap.cols() != d) throw Error(ErrorCode::ShapeMismatch, "Amap size");
	if (!is_skew(Amap, mh.matrix())) throw Error(ErrorCode::NotSkew, "Amap is not skew for the metric");
	if (!is_derivation(h, Amap)) throw Error(ErrorCode::NotSkew, "Amap is not a derivation of h");
	std::size_t n = d + 2, e = 0, eb = d + 1;
	Algebra g(n);
	for (std::size_t i = 0; i < d; ++i) {
		Vec au = Amap * unit_vec(d, i);
		for (std::size_t r = 0; r < d; ++r) {
			g.c(eb, 1 + i, 1 + r) += au[r];
			g.c(1 + i, eb, 1 + r) -= au[r];
		}
		for (std::size_t j = 0; j < d; ++j) {
			g.c(1 + i, 1 + j, e) += bilinear(mh.matrix(), au, unit_vec(d, j));
			for (std::size_t r = 0; r < d; ++r) g.c(1 + i, 1 + j, 1 + r) += h.c(i, j, r);
		}
	}
	Matrix m(n, n);
	m(e, eb) = m(eb, e) = 1;
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j) m(1 + i, 1 + j) = mh.matrix()(i, j);
	return {g, Metric(m)};
}

void check_shape(const ExtData& d) {
	std::size_t k = d.h.dim(), m = d.A.dim();
	require(d.mA.dim() == m, ErrorCode::ShapeMismatch, "metric on A has wrong size");
	require(d.F.size() == k, ErrorCode::ShapeMismatch, "F needs one matrix per h basis element");
	for (auto& f : d.F) require(f.rows() == m && f.cols() == m, ErrorCode::ShapeMismatch, "F matrix size");
	if (d.kind == ExtKind::L) {
		require(d.G.size() == k, ErrorCode::ShapeMismatch, "G needs one matrix per h basis element");
		for (auto& g : d.G) require(g.rows() == m && g.cols() == m, ErrorCode::ShapeMismatch, "G matrix size");
	}
	check_tensor(d.theta, k, k, m, "theta");
	check_tensor(d.omega, k, k, m, "omega");
	check_tensor(d.Omega, k, k, k, "Omega");
	check_skew3(d.omega, k, k, "omega", true);
	check_skew3(d.Omega, k, k, "Omega", false);
	if (d.kind != ExtKind::L) check_skew3(d.theta, k, k, "theta", true);
}

ValidationReport validate_extension(const ExtData& d) {
	check_shape(d);
	switch (d.kind) {
	case ExtKind::L: return validate_L(d);
	case ExtKind::R: return validate_R(d);
	case ExtKind::SYM: return validate_SYM(d);
	}
	return {};
}

Construction construct_extension(const ExtData& d, bool enforce) {
	check_shape(d);
	if (enforce) {
		auto rep = validate_extension(d);
		if (!rep.ok()) {
			std::string ids;
			for (auto& s : rep.equation_ids()) ids += (ids.empty() ? "" : ",") + s;
			throw Error(ErrorCode::ValidationFailed, "violated: " + ids);
		}
	}
	const Algebra &h = d.h, &A = d.A;
	std::size_t k = h.dim(), m = A.dim(), n = 2 * k + m;
	auto X = [](std::size_t i) { return i; };
	auto a = [k](std::size_t p) { return k + p; };
	auto al = [k, m](std::size_t l) { return k + m + l; };
	auto ip = [&](const Vec& u, const Vec& v) { return bilinear(d.mA.matrix(), u, v); };
	bool lkind = d.kind != ExtKind::R;
	std::vector<Matrix> G;
	if (d.kind == ExtKind::L) G = d.G;
	else for (auto& f : d.F) G.push_back(Rational(-1) * f);
	Algebra g(n);
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < k; ++j) {
			if (d.kind == ExtKind::L)
				for (std::size_t l = 0; l < k; ++l) g.c(X(i), X(j), X(l)) += h.c(i, j, l);
			for (std::size_t p = 0; p < m; ++p) g.c(X(i), X(j), a(p)) += d.theta[i][j][p];
			for (std::size_t l = 0; l < k; ++l)
				g.c(X(i), X(j), al(l)) += lkind ? d.Omega[i][j][l] : d.Omega[j][i][l];
		}
	for (std::size_t p = 0; p < m; ++p)
		for (std::size_t q = 0; q < m; ++q) {
			for (std::size_t r = 0; r < m; ++r) g.c(a(p), a(q), a(r)) += A.c(p, q, r);
			for (std::size_t l = 0; l < k; ++l)
				g.c(a(p), a(q), al(l)) += -ip(G[l] * unit_vec(m, p), unit_vec(m, q));
		}
	for (std::size_t i = 0; i < k; ++i) {
		for (std::size_t p = 0; p < m; ++p) {
			for (std::size_t r = 0; r < m; ++r) {
				g.c(X(i), a(p), a(r)) += d.F[i](r, p);
				g.c(a(p), X(i), a(r)) += G[i](r, p);
			}
			Vec ap = unit_vec(m, p);
			for (std::size_t l = 0; l < k; ++l) {
				if (lkind) {
					g.c(X(i), a(p), al(l)) += -ip(d.theta[i][l], ap);
					g.c(a(p), X(i), al(l)) += -ip(d.omega[i][l], ap);
				} else {
					g.c(X(i), a(p), al(l)) += ip(d.omega[i][l], ap);
					g.c(a(p), X(i), al(l)) += ip(d.theta[i][l], ap);
				}
			}
		}
		// X•α = ad*_X α
		for (std::size_t l = 0; l < k; ++l)
			for (std::size_t j = 0; j < k; ++j) g.c(X(i), al(l), al(j)) += -h.c(i, j, l);
	}
	std::vector<std::string> names;
	for (std::size_t i = 0; i < k; ++i) names.push_back("X" + std::to_string(i + 1));
	for (std::size_t p = 0; p < m; ++p) names.push_back("a" + std::to_string(p + 1));
	for (std::size_t i = 0; i < k; ++i) names.push_back("alpha" + std::to_string(i + 1));
	g.set_basis_names(names);
	return {g, natural_metric(k, d.mA)};
}

Construction construct_cotangent(CotangentKind kind, const Algebra& g, const std::optional<Tensor3>& Omega) {
	std::size_t k = g.dim();
	if (!check_identity(g, Identity::Lie).passed) throw Error(ErrorCode::NotLie, "cotangent construction needs a Lie algebra");
	Algebra A0(0);
	Metric m0{Matrix(0, 0)};
	ExtData d = zero_ext_data(kind == CotangentKind::TwoStepR ? ExtKind::R : ExtKind::L, g, A0, m0);
	if (kind == CotangentKind::CorZero && Omega) {
		check_tensor(*Omega, k, k, k, "Omega");
		check_skew3(*Omega, k, k, "Omega", false);
		if (!delta_omega(g, *Omega).is_zero()) throw Error(ErrorCode::NotCocycle, "Omega is not a 1-cocycle");
		d.Omega = *Omega;
	}
	if (kind == CotangentKind::TwoStepR) {
		Collector c;
		two_step(c, g);
		if (!c.rep.ok()) throw Error(ErrorCode::NotTwoStepNilpotent, "g is not 2-step nilpotent");
	}
	auto r = construct_extension(d, false);
	std::vector<std::string> names;
	for (std::size_t i = 0; i < k; ++i) names.push_back("u" + std::to_string(i + 1));
	for (std::size_t i = 0; i < k; ++i) names.push_back("alpha" + std::to_string(i + 1));
	r.algebra.set_basis_names(names);
	return r;
}

Coboundary cocycle_coboundary(const Algebra& h, const Tensor3& O1, const Tensor3& O2) {
	std::size_t k = h.dim();
	Coboundary res;
	res.cocycle1 = delta_omega(h, O1).is_zero();
	res.cocycle2 = delta_omega(h, O2).is_zero();
	std::vector<std::pair<std::size_t, std::size_t>> pairs;
	for (std::size_t a = 0; a < k; ++a)
		for (std::size_t b = a + 1; b < k; ++b) pairs.push_back({a, b});
	std::size_t rows = k * k * k;
	Matrix M(rows, pairs.size());
	Vec rhs(rows);
	for (std::size_t x = 0; x < k; ++x)
		for (std::size_t z = 0; z < k; ++z)
			for (std::size_t t = 0; t < k; ++t) {
				std::size_t row = (x * k + z) * k + t;
				rhs[row] = O2[x][z][t] - O1[x][z][t];
				for (std::size_t c = 0; c < pairs.size(); ++c) {
					// ω = E_ab − E_ba
					auto w = [&](std::size_t p, std::size_t q) -> Rational {
						if (p == pairs[c].first && q == pairs[c].second) return 1;
						if (p == pairs[c].second && q == pairs[c].first) return -1;
						return 0;
					};
					Vec xz = h.basis_product(x, z), xt = h.basis_product(x, t);
					Rational v;
					for (std::size_t s = 0; s < k; ++s) v += -xz[s] * w(s, t) - xt[s] * w(z, s);
					M(row, c) = v;
				}
			}
	if (pairs.empty()) {
		if (is_zero(rhs)) res.witness = Matrix(k, k);
		return res;
	}
	auto sol = rref_solve(M, rhs);
	if (sol.particular) {
		Matrix w(k, k);
		for (std::size_t c = 0; c < pairs.size(); ++c) {
			w(pairs[c].first, pairs[c].second) = (*sol.particular)[c];
			w(pairs[c].second, pairs[c].first) = -(*sol.particular)[c];
		}
		res.witness = w;
	}
	return res;
}

Matrix cotangent_shift(const Matrix& omega) {
	std::size_t k = omega.rows();
	Matrix P = Matrix::identity(2 * k);
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t l = 0; l < k; ++l) P(k + l, i) = -omega(i, l);
	return P;
}

static bool symmetric3(const Tensor3& T) {
	std::size_t k = T.size();
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < k; ++j)
			for (std::size_t l = 0; l < k; ++l)
				if (T[i][j][l] != T[j][i][l] || T[i][j][l] != T[i][l][j]) return false;
	return true;
}

Construction construct_metrised_commutative(std::size_t k, const Metric& mA, const Tensor3& T) {
	check_tensor(T, k, k, k, "T");
	if (!symmetric3(T)) throw Error(ErrorCode::ConstraintViolated, "T_symmetric");
	std::size_t m = mA.dim(), n = 2 * k + m;
	Algebra g(n);
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < k; ++j)
			for (std::size_t l = 0; l < k; ++l) g.c(i, j, k + m + l) = T[i][j][l];
	return {g, natural_metric(k, mA)};
}

Construction construct_metrised_from_quadratic(const Algebra& g, const Metric& m, const Subspace& I, const Tensor3& T) {
	std::size_t n = g.dim();
	check_tensor(T, n, n, n, "T");
	if (!check_identity(g, Identity::Lie).passed || !check_invariance(g, m.matrix(), Invariance::L).passed)
		throw Error(ErrorCode::ConstraintViolated, "quadratic_lie");
	if (I.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "I");
	if (!subspace_contains(center(g), I)) throw Error(ErrorCode::ConstraintViolated, "I_central");
	if (!subspace_contains(orthogonal(m.matrix(), I), I)) throw Error(ErrorCode::ConstraintViolated, "I_isotropic");
	if (!symmetric3(T)) throw Error(ErrorCode::ConstraintViolated, "T_symmetric");
	for (auto& u : orthogonal(m.matrix(), I).vectors())
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t l = 0; l < n; ++l) {
				Rational s;
				for (std::size_t i = 0; i < n; ++i) s += u[i] * T[i][j][l];
				if (s != 0) throw Error(ErrorCode::ConstraintViolated, "T_vanishes_on_I_perp");
			}
	Algebra r = g;
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y) {
			Vec w = m.inverse() * T[x][y];
			if (!I.contains(w)) throw Error(ErrorCode::Internal, "omega image outside I");
			for (std::size_t k = 0; k < n; ++k) r.c(x, y, k) += w[k];
		}
	return {r, m};
}

Construction construct_lorentz_L(const Algebra& A, const Metric& mA, const Matrix& F, const Matrix& G, const Vec& delta) {
	std::size_t m = A.dim();
	if (F.rows() != m || F.cols() != m || G.rows() != m || G.cols() != m || delta.size() != m)
		throw Error(ErrorCode::ShapeMismatch, "lorentz data sizes");
	auto fail = [](const std::string& name, const Vec& defect) {
		std::string s;
		for (auto& x : defect) s += (s.empty() ? "" : ",") + to_string(x);
		throw Error(ErrorCode::ConditionFailed, name + " defect (" + s + ")");
	};
	auto need = [&](const std::string& name, const Matrix& d) { if (!d.is_zero()) fail(name, matrix_to_vec(d)); };
	auto r1 = check_identity(A, Identity::LeftLeibniz);
	if (!r1.passed) fail("A_left_leibniz", r1.witness->defect);
	auto r2 = check_invariance(A, mA.matrix(), Invariance::L);
	if (!r2.passed) fail("A_invariance", r2.witness->defect);
	need("F_skew", mA.matrix() * F + F.transpose() * mA.matrix());
	if (!is_derivation(A, F)) fail("F_derivation", {});
	if (!is_zero(G * delta)) fail("G_delta_zero", G * delta);
	need("L_delta_zero", A.left_op(delta));
	Matrix FG = F + G;
	for (std::size_t p = 0; p < m; ++p) {
		Vec a = unit_vec(m, p);
		need("image_F_plus_G_in_left_center", A.left_op(FG * a));
		need("L_a_G_commutator", commutator(A.left_op(a), G) - A.right_op(G * a));
	}
	Matrix Rd = A.right_op(delta);
	need("GF_commutator_equals_R_delta", commutator(G, F) - Rd);
	need("G2_plus_GF_equals_R_delta", G * G + G * F - Rd);

	ExtData d = zero_ext_data(ExtKind::L, Algebra(1), A, mA);
	d.F = {F};
	d.G = {G};
	d.theta[0][0] = delta;
	auto c = construct_extension(d, false);
	// (ē, A, e) -> (e, A, ē)
	std::size_t n = m + 2;
	Matrix P(n, n);
	P(n - 1, 0) = 1;
	P(0, n - 1) = 1;
	for (std::size_t p = 1; p <= m; ++p) P(p, p) = 1;
	auto t = transport(c.algebra, c.metric, P);
	std::vector<std::string> names{"e"};
	for (std::size_t p = 0; p < m; ++p) names.push_back("a" + std::to_string(p + 1));
	names.push_back("ebar");
	t.algebra.set_basis_names(names);
	return t;
}

Construction construct_nondeg_L(const Algebra& h, const Metric& mh, const Metric& mN, const std::vector<Matrix>& rho) {
	std::size_t k = h.dim(), m = mN.dim(), n = k + m;
	if (!check_identity(h, Identity::Lie).passed || !check_invariance(h, mh.matrix(), Invariance::L).passed)
		throw Error(ErrorCode::NotQuadraticLie, "h must be quadratic Lie");
	if (rho.size() != k) throw Error(ErrorCode::ShapeMismatch, "rho needs one matrix per h basis element");
	for (auto& r : rho) {
		if (r.rows() != m || r.cols() != m) throw Error(ErrorCode::ShapeMismatch, "rho matrix size");
		if (!is_skew(r, mN.matrix())) throw Error(ErrorCode::NotSkew, "rho(X) is not skew for mN");
	}
	for (std::size_t x = 0; x < k; ++x)
		for (std::size_t y = 0; y < k; ++y)
			if (lin_comb(rho, h.basis_product(x, y), m) != commutator(rho[x], rho[y]))
				throw Error(ErrorCode::NotRepresentation, "rho([X,Y]) != [rho X, rho Y]");
	Algebra g(n);
	for (std::size_t x = 0; x < k; ++x) {
		for (std::size_t y = 0; y < k; ++y)
			for (std::size_t z = 0; z < k; ++z) g.c(m + x, m + y, m + z) = h.c(x, y, z);
		for (std::size_t p = 0; p < m; ++p)
			for (std::size_t r = 0; r < m; ++r) g.c(m + x, p, r) = rho[x](r, p);
	}
	Matrix M(n, n);
	for (std::size_t p = 0; p < m; ++p)
		for (std::size_t q = 0; q < m; ++q) M(p, q) = mN.matrix()(p, q);
	for (std::size_t x = 0; x < k; ++x)
		for (std::size_t y = 0; y < k; ++y) M(m + x, m + y) = mh.matrix()(x, y);
	return {g, Metric(M)};
}

Vec matrix_to_vec(const Matrix& m) {
	Vec v;
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
	return v;
}

Matrix vec_to_matrix(const Vec& v, std::size_t n) {
	if (v.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "vec_to_matrix");
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
	return m;
}

DerivationSpaces derivation_spaces(const Algebra& A, const std::optional<Metric>& mA) {
	std::size_t n = A.dim(), N = n * n;
	auto idx = [n](std::size_t r, std::size_t s) { return r * n + s; };
	DerivationSpaces res;
	res.n = n;
	Matrix M(n * n * n, N);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				std::size_t row = (i * n + j) * n + k;
				for (std::size_t s = 0; s < n; ++s) {
					M(row, idx(k, s)) += A.c(i, j, s);
					M(row, idx(s, i)) -= A.c(s, j, k);
					M(row, idx(s, j)) -= A.c(i, s, k);
				}
			}
	res.der = N ? kernel(M) : Subspace(0);
	if (mA) {
		if (mA->dim() != n) throw Error(ErrorCode::DimensionMismatch, "metric size");
		Matrix S(n * n, N);
		const Matrix& g = mA->matrix();
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t s = 0; s < n; ++s) {
					S(i * n + j, idx(s, j)) += g(i, s);
					S(i * n + j, idx(s, i)) += g(s, j);
				}
		res.skew_der = subspace_intersect(res.der, N ? kernel(S) : Subspace(0));
	}
	if (check_identity(A, Identity::Lie).passed) {
		std::vector<Vec> ads;
		for (std::size_t i = 0; i < n; ++i) ads.push_back(matrix_to_vec(A.left_op(unit_vec(n, i))));
		res.inner = Subspace::span(N, ads);
		if (res.skew_der)
			res.h2_dim = res.skew_der->dim() - subspace_intersect(*res.skew_der, *res.inner).dim();
	} else if (mA) {
		// Inner and H² only make sense for Lie algebras
		res.inner.reset();
	}
	return res;
}

Matrix find_U(const Algebra& A, const std::vector<Matrix>& F) {
	std::size_t n = A.dim();
	if (!check_identity(A, Identity::Lie).passed) throw Error(ErrorCode::NotLie, "find_U needs a Lie algebra");
	if (center(A).dim() != 0) throw Error(ErrorCode::ConstraintViolated, "find_U needs trivial center");
	Matrix M(n * n, n);
	for (std::size_t i = 0; i < n; ++i) {
		Vec ad = matrix_to_vec(A.left_op(unit_vec(n, i)));
		for (std::size_t r = 0; r < n * n; ++r) M(r, i) = ad[r];
	}
	Matrix U(n, F.size());
	for (std::size_t x = 0; x < F.size(); ++x) {
		if (F[x].rows() != n || F[x].cols() != n) throw Error(ErrorCode::ShapeMismatch, "F matrix size");
		auto sol = rref_solve(M, matrix_to_vec(F[x]));
		if (!sol.particular) throw Error(ErrorCode::NoSolution, "F(X" + std::to_string(x + 1) + ") is not inner");
		for (std::size_t i = 0; i < n; ++i) U(i, x) = (*sol.particular)[i];
	}
	return U;
}

Algebra transport_algebra(const Algebra& a, const Matrix& P) {
	std::size_t n = a.dim();
	if (P.rows() != n || P.cols() != n) throw Error(ErrorCode::DimensionMismatch, "transport matrix size");
	Matrix Pi = inverse(P);
	Algebra r(n, a.basis_names());
	std::vector<Vec> cols;
	for (std::size_t i = 0; i < n; ++i) cols.push_back(P.col(i));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			Vec v = Pi * a.product(cols[i], cols[j]);
			for (std::size_t k = 0; k < n; ++k) r.c(i, j, k) = v[k];
		}
	return r;
}

Construction transport(const Algebra& a, const Metric& m, const Matrix& P) {
	Algebra r = transport_algebra(a, P);
	return {r, Metric(P.transpose() * m.matrix() * P)};
}

}
