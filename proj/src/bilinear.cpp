#include "leibniz/bilinear.hpp"

namespace leibniz {

BilForm::BilForm(Matrix m) : m_(std::move(m)) {
	if (!m_.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "bilinear form matrix is not symmetric");
}

Metric::Metric(Matrix m) : BilForm(std::move(m)) {
	in_ = leibniz::inertia(m_);
	if (in_.z != 0) {
		auto k = kernel(m_).vectors();
		std::string w;
		for (auto& x : k[0]) w += (w.empty() ? "" : ",") + to_string(x);
		throw Error(ErrorCode::Degenerate, "metric has a kernel, e.g. (" + w + ")");
	}
	inv_ = leibniz::inverse(m_);
}

Metric Metric::diag(const Vec& d) {
	Matrix m(d.size(), d.size());
	for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
	return Metric(m);
}

const char* invariance_name(Invariance k) {
	switch (k) {
	case Invariance::L: return "L";
	case Invariance::R: return "R";
	case Invariance::Assoc: return "assoc";
	}
	return "?";
}

CheckResult check_invariance(const Algebra& a, const Matrix& s, Invariance kind) {
	std::size_t n = a.dim();
	if (s.rows() != n || s.cols() != n) throw Error(ErrorCode::DimensionMismatch, "form and algebra dims");
	// t(i,j,l) = S(e_i•e_j, e_l)
	std::vector<Rational> t(n * n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t l = 0; l < n; ++l) {
				Rational x;
				for (std::size_t k = 0; k < n; ++k)
					if (a.c(i, j, k) != 0) x += a.c(i, j, k) * s(k, l);
				t[(i * n + j) * n + l] = x;
			}
	auto T = [&](std::size_t i, std::size_t j, std::size_t l) -> const Rational& { return t[(i * n + j) * n + l]; };
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				Rational d;
				switch (kind) {
				case Invariance::L: d = T(i, j, k) + T(i, k, j); break;
				case Invariance::R: d = T(i, j, k) + T(k, j, i); break;
				case Invariance::Assoc: d = T(i, j, k) - T(j, k, i); break;
				}
				if (d != 0) return {false, Witness{std::string(invariance_name(kind)) + "_invariance", {i + 1, j + 1, k + 1}, {d}}};
			}
	return {};
}

Subspace orthogonal(const Matrix& s, const Subspace& v) {
	if (v.ambient_dim() != s.rows()) throw Error(ErrorCode::DimensionMismatch, "orthogonal operands");
	if (v.dim() == 0) return Subspace::full(s.rows());
	return kernel(v.basis() * s);
}

Subspace form_kernel(const Matrix& s) { return orthogonal(s, Subspace::full(s.rows())); }

Matrix killing(const Algebra& a, KillingKind kind) {
	std::size_t n = a.dim();
	std::vector<Matrix> L, R;
	for (std::size_t i = 0; i < n; ++i) {
		L.push_back(a.left_op(unit_vec(n, i)));
		if (kind == KillingKind::K) R.push_back(a.right_op(unit_vec(n, i)));
	}
	Matrix f(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			if (kind == KillingKind::B) f(i, j) = (L[i] * L[j]).trace();
			else f(i, j) = -Rational(1, 2) * ((L[i] * R[j]).trace() + (L[j] * R[i]).trace());
		}
	return f;
}

Cartan cartan(const Algebra& a) {
	if (!check_identity(a, Identity::LeftLeibniz).passed)
		throw Error(ErrorCode::NotLeftLeibniz, "cartan criteria need a left Leibniz algebra");
	Subspace kk = form_kernel(killing(a, KillingKind::K));
	Cartan c;
	c.semisimple = kk == leib_ideal(a);
	c.solvable = subspace_contains(kk, square(a));
	return c;
}

SignatureClass signature_class(const Metric& m) {
	SignatureClass s;
	s.p = m.inertia().p;
	s.q = m.inertia().q;
	std::size_t n = m.dim();
	s.euclidean = n > 0 && s.q == 0;
	s.lorentzian = n > 0 && s.q == 1 && s.p == n - 1;
	return s;
}

Quotient lie_quotient(const Algebra& a) {
	if (!check_identity(a, Identity::LeftLeibniz).passed)
		throw Error(ErrorCode::NotLeftLeibniz, "Lie quotient needs a left Leibniz algebra");
	return quotient(a, leib_ideal(a));
}

Matrix metric_adjoint(const Matrix& op, const Metric& m) { return m.inverse() * op.transpose() * m.matrix(); }

}
