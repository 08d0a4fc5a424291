#pragma once
#include "leibniz/algebra.hpp"

namespace leibniz {

// Symmetric bilinear form, possibly degenerate.
class BilForm {
public:
	BilForm() = default;
	explicit BilForm(Matrix m);
	std::size_t dim() const { return m_.rows(); }
	const Matrix& matrix() const { return m_; }
	Rational operator()(const Vec& u, const Vec& v) const { return bilinear(m_, u, v); }
protected:
	Matrix m_;
};

// Nondegenerate symmetric form with cached inertia.
class Metric : public BilForm {
public:
	Metric() = default;
	explicit Metric(Matrix m);
	static Metric diag(const Vec& d);
	const Inertia& inertia() const { return in_; }
	const Matrix& inverse() const { return inv_; }
private:
	Inertia in_;
	Matrix inv_;
};

enum class Invariance { L, R, Assoc };
const char* invariance_name(Invariance k);

CheckResult check_invariance(const Algebra& a, const Matrix& s, Invariance kind);
Subspace orthogonal(const Matrix& s, const Subspace& v);
Subspace form_kernel(const Matrix& s);

enum class KillingKind { B, K };
Matrix killing(const Algebra& a, KillingKind kind);

struct Cartan {
	bool semisimple = false;
	bool solvable = false;
};
Cartan cartan(const Algebra& a);

struct SignatureClass {
	std::size_t p = 0, q = 0;
	bool euclidean = false;
	bool lorentzian = false;
};
SignatureClass signature_class(const Metric& m);

Quotient lie_quotient(const Algebra& a);

// m⁻¹ Mᵀ m
Matrix metric_adjoint(const Matrix& op, const Metric& m);

}
