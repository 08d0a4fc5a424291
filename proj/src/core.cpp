#include "leibniz/core.hpp"

namespace leibniz {

const char* side_name(Side s) { return s == Side::L ? "L" : "R"; }

const char* branch_name(Branch b) {
	switch (b) {
	case Branch::Lie: return "lie";
	case Branch::NondegLeib: return "nondeg_leib";
	case Branch::Degenerate: return "degenerate";
	case Branch::Metrised: return "metrised";
	}
	return "?";
}

namespace {

void precheck(const Algebra& g, const Metric& m, Side side) {
	if (m.dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "metric and algebra dims");
	if (!check_identity(g, Identity::LeftLeibniz).passed) throw Error(ErrorCode::NotLeftLeibniz, "core needs a left Leibniz algebra");
	auto inv = check_invariance(g, m.matrix(), side == Side::L ? Invariance::L : Invariance::R);
	if (!inv.passed) throw Error(ErrorCode::InvarianceMismatch, std::string("metric is not ") + side_name(side) + "-invariant");
}

// rows of `from` extending `base` to a basis of span(base ∪ from)
std::vector<Vec> extend(const std::vector<Vec>& base, const std::vector<Vec>& from, std::size_t n) {
	std::vector<Vec> cur = base, added;
	std::size_t r = base.size();
	for (auto& v : from) {
		cur.push_back(v);
		if (rank(Matrix::from_rows(cur, n)) > r) { ++r; added.push_back(v); }
		else cur.pop_back();
	}
	return added;
}

Algebra product_on(const Algebra& g, const Matrix& lift, const Matrix& proj) {
	std::size_t d = lift.cols();
	Algebra r(d);
	std::vector<Vec> cols;
	for (std::size_t i = 0; i < d; ++i) cols.push_back(lift.col(i));
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j) {
			Vec v = proj * g.product(cols[i], cols[j]);
			for (std::size_t k = 0; k < d; ++k) r.c(i, j, k) = v[k];
		}
	return r;
}

}

CoreResult core_extract(const Algebra& g, const Metric& m, Side side) {
	precheck(g, m, side);
	std::size_t n = g.dim();
	const Matrix& M = m.matrix();
	CoreResult res;
	res.side = side;
	Subspace leib = leib_ideal(g);
	res.I = side == Side::L ? subspace_intersect(leib, orthogonal(M, leib)) : leib;
	res.I_perp = orthogonal(M, res.I);
	auto fail = [&](const std::string& s) { res.failed_assertions.push_back(s); };
	if (!subspace_contains(res.I_perp, res.I)) fail("I_totally_isotropic");

	auto iv = res.I.vectors();
	auto bv = extend(iv, res.I_perp.vectors(), n);
	std::size_t r = iv.size(), s = bv.size();
	// isotropic partner: ⟨x_a, i_b⟩ = δ_ab, x_a ⊥ B, ⟨x_a, x_c⟩ = 0
	std::vector<Vec> xv;
	if (r) {
		std::vector<Vec> rows;
		for (auto& v : iv) rows.push_back(M * v);
		for (auto& v : bv) rows.push_back(M * v);
		Matrix S = Matrix::from_rows(rows, n);
		std::vector<Vec> yv;
		for (std::size_t a = 0; a < r; ++a) {
			Vec rhs(r + s);
			rhs[a] = 1;
			auto sol = rref_solve(S, rhs);
			if (!sol.particular) throw Error(ErrorCode::Internal, "no isotropic partner");
			yv.push_back(*sol.particular);
		}
		for (std::size_t a = 0; a < r; ++a) {
			Vec x = yv[a];
			for (std::size_t b = 0; b < r; ++b) x = x - Rational(1, 2) * bilinear(M, yv[a], yv[b]) * iv[b];
			xv.push_back(x);
		}
	}
	std::vector<Vec> all = xv;
	all.insert(all.end(), bv.begin(), bv.end());
	all.insert(all.end(), iv.begin(), iv.end());
	Matrix Q = Matrix::from_cols(all, n);
	Matrix Qi = inverse(Q);
	res.projH = Matrix(r, n);
	res.projA = Matrix(s, n);
	for (std::size_t j = 0; j < n; ++j) {
		for (std::size_t a = 0; a < r; ++a) res.projH(a, j) = Qi(a, j);
		for (std::size_t b = 0; b < s; ++b) res.projA(b, j) = Qi(r + b, j);
	}
	res.liftH = Matrix::from_cols(xv, n);
	res.liftA = Matrix::from_cols(bv, n);
	if (r == 0) res.liftH = Matrix(n, 0);
	if (s == 0) res.liftA = Matrix(n, 0);

	// A = I^⊥ / I
	for (auto& u : bv)
		for (auto& v : bv)
			if (!res.I_perp.contains(g.product(u, v))) fail("I_perp_closed");
	for (auto& u : iv)
		for (auto& v : res.I_perp.vectors())
			if (!res.I.contains(g.product(u, v)) || !res.I.contains(g.product(v, u))) fail("I_ideal_in_I_perp");
	res.A = product_on(g, res.liftA, res.projA);
	Matrix mA(s, s);
	for (std::size_t a = 0; a < s; ++a)
		for (std::size_t b = 0; b < s; ++b) mA(a, b) = bilinear(M, bv[a], bv[b]);
	res.mA = Metric(mA);

	// h = g / I^⊥
	if (side == Side::L) {
		for (auto& u : res.I_perp.vectors())
			for (std::size_t e = 0; e < n; ++e) {
				Vec ev = unit_vec(n, e);
				if (!is_zero(res.projH * g.product(ev, u)) || !is_zero(res.projH * g.product(u, ev))) fail("I_perp_ideal");
			}
		res.h = product_on(g, res.liftH, res.projH);
	} else {
		auto bracket = [&](const Vec& u, const Vec& v) {
			return Rational(-1) * (res.projH * (metric_adjoint(g.left_op(v), m) * u));
		};
		for (auto& u : res.I_perp.vectors())
			for (std::size_t e = 0; e < n; ++e) {
				Vec ev = unit_vec(n, e);
				if (!is_zero(bracket(u, ev)) || !is_zero(bracket(ev, u))) fail("h_bracket_well_defined");
			}
		res.h = Algebra(r);
		for (std::size_t a = 0; a < r; ++a)
			for (std::size_t b = 0; b < r; ++b) {
				Vec v = bracket(xv[a], xv[b]);
				for (std::size_t c = 0; c < r; ++c) res.h.c(a, b, c) = v[c];
			}
	}

	if (!check_identity(res.h, Identity::Lie).passed) fail("h_lie");
	if (side == Side::L) {
		if (!check_identity(res.A, Identity::LeftLeibniz).passed) fail("A_left_leibniz");
		if (!check_invariance(res.A, res.mA.matrix(), Invariance::L).passed) fail("A_L_invariant");
		Subspace la = leib_ideal(res.A);
		if (subspace_intersect(la, orthogonal(res.mA.matrix(), la)).dim() != 0) fail("A_leib_nondegenerate");
	} else {
		if (!check_identity(res.A, Identity::Lie).passed) fail("A_lie");
		if (!check_invariance(res.A, res.mA.matrix(), Invariance::L).passed) fail("A_invariant");
		if (!series(res.h, SeriesKind::LowerCentral).terminal_zero || series(res.h, SeriesKind::LowerCentral).terms.size() > 3)
			fail("h_two_step_nilpotent");
	}
	return res;
}

bool Fingerprint::operator==(const Fingerprint& o) const {
	return dim == o.dim && leib == o.leib && zl == o.zl && zr == o.zr && z == o.z && square == o.square &&
		leib_isotropic == o.leib_isotropic && derived_length == o.derived_length &&
		nilpotency_class == o.nilpotency_class && k_rank == o.k_rank && k_inertia == o.k_inertia &&
		metric_inertia == o.metric_inertia;
}

Fingerprint fingerprint(const Algebra& g, const std::optional<Metric>& m) {
	Fingerprint f;
	f.dim = g.dim();
	Subspace leib = leib_ideal(g);
	f.leib = leib.dim();
	Subspace zl = left_center(g), zr = right_center(g);
	f.zl = zl.dim();
	f.zr = zr.dim();
	f.z = subspace_intersect(zl, zr).dim();
	f.square = square(g).dim();
	if (m) {
		f.leib_isotropic = subspace_intersect(leib, orthogonal(m->matrix(), leib)).dim();
		f.metric_inertia = m->inertia();
	}
	f.derived_length = series(g, SeriesKind::Derived).length();
	f.nilpotency_class = series(g, SeriesKind::LowerCentral).length();
	Matrix K = killing(g, KillingKind::K);
	f.k_rank = rank(K);
	f.k_inertia = inertia(K);
	return f;
}

ClassifyReport classify(const Algebra& g, const Metric& m, Side side) {
	ClassifyReport rep;
	rep.side = side;
	std::size_t n = g.dim();
	if (m.dim() != n) throw Error(ErrorCode::DimensionMismatch, "metric and algebra dims");
	rep.fp = fingerprint(g, m);
	if (check_identity(g, Identity::Lie).passed) {
		rep.branch = Branch::Lie;
		return rep;
	}
	if (check_identity(g, Identity::SymmetricLeibniz).passed && check_invariance(g, m.matrix(), Invariance::Assoc).passed) {
		rep.branch = Branch::Metrised;
		MetrisedInfo mi;
		mi.bracket = Algebra(n);
		mi.circ = Algebra(n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t k = 0; k < n; ++k) {
					mi.bracket.c(i, j, k) = (g.c(i, j, k) - g.c(j, i, k)) / 2;
					mi.circ.c(i, j, k) = (g.c(i, j, k) + g.c(j, i, k)) / 2;
				}
		mi.eq4_holds = true;
		for (std::size_t i = 0; i < n && mi.eq4_holds; ++i)
			for (std::size_t j = 0; j < n && mi.eq4_holds; ++j)
				for (std::size_t k = 0; k < n; ++k) {
					Vec ek = unit_vec(n, k);
					if (!is_zero(mi.circ.product(mi.bracket.basis_product(i, j), ek)) ||
						!is_zero(mi.circ.product(mi.circ.basis_product(i, j), ek))) { mi.eq4_holds = false; break; }
				}
		mi.derived_proper = square(mi.bracket).dim() < n;
		mi.lie_center = center(mi.bracket);
		mi.center_degenerate = subspace_intersect(mi.lie_center, orthogonal(m.matrix(), mi.lie_center)).dim() != 0;
		mi.omega_in_center = subspace_contains(mi.lie_center, square(mi.circ));
		rep.metrised = mi;
		return rep;
	}
	precheck(g, m, side);
	Subspace leib = leib_ideal(g), perp = orthogonal(m.matrix(), leib);
	rep.leib_equals_perp = leib == perp;
	if (side == Side::L && subspace_intersect(leib, perp).dim() == 0) {
		rep.branch = Branch::NondegLeib;
		NondegInfo nd;
		nd.leib = leib;
		nd.leib_perp = perp;
		auto lv = leib.vectors(), pv = perp.vectors();
		Matrix liftP = Matrix::from_cols(pv, n), liftL = Matrix::from_cols(lv, n);
		std::vector<Vec> all = pv;
		all.insert(all.end(), lv.begin(), lv.end());
		Matrix Qi = inverse(Matrix::from_cols(all, n));
		Matrix projP(pv.size(), n), projL(lv.size(), n);
		for (std::size_t j = 0; j < n; ++j) {
			for (std::size_t a = 0; a < pv.size(); ++a) projP(a, j) = Qi(a, j);
			for (std::size_t b = 0; b < lv.size(); ++b) projL(b, j) = Qi(pv.size() + b, j);
		}
		nd.h = pv.empty() ? Algebra(0) : product_on(g, liftP, projP);
		for (auto& x : pv) nd.rho.push_back(projL * g.left_op(x) * liftL);
		rep.nondeg = nd;
		return rep;
	}
	rep.branch = Branch::Degenerate;
	rep.core = core_extract(g, m, side);
	return rep;
}

SplittingReport splitting_report(const Algebra& g, const Metric& m, Side side) {
	CoreResult c = core_extract(g, m, side);
	Quotient lq = quotient(g, leib_ideal(g));
	SplittingReport rep;
	rep.kappa = lq.projection * c.liftA;
	std::size_t a = c.A.dim(), l = lq.algebra.dim();
	rep.morphism_ok = true;
	for (std::size_t s = 0; s < a; ++s)
		for (std::size_t t = 0; t < a; ++t) {
			Vec lhs = rep.kappa * c.A.basis_product(s, t);
			Vec rhs = lq.algebra.product(rep.kappa.col(s), rep.kappa.col(t));
			if (lhs != rhs) rep.morphism_ok = false;
		}
	std::vector<Vec> img;
	for (std::size_t s = 0; s < a; ++s) img.push_back(rep.kappa.col(s));
	Subspace image = Subspace::span(l, img);
	bool ideal = !ideal_witness(lq.algebra, image).has_value();
	if (side == Side::L) {
		std::vector<Vec> lp;
		for (auto& v : leib_ideal(g).vectors()) lp.push_back(c.projA * v);
		Subspace pa = Subspace::span(a, lp);
		Subspace ker = a ? kernel(rep.kappa) : Subspace(0);
		if (l == 0) ker = Subspace::full(a);
		rep.image_ideal_ok = ideal && ker == pa && l - image.dim() == c.h.dim();
	} else {
		bool injective = image.dim() == a;
		bool contains_derived = subspace_contains(image, square(lq.algebra));
		rep.image_ideal_ok = ideal && injective && contains_derived;
	}
	return rep;
}

}
