#pragma once
#include <optional>
#include <string>
#include <vector>
#include "leibniz/bilinear.hpp"

namespace leibniz {

// t[i][j] is a vector; zero-based indices.
using Tensor3 = std::vector<std::vector<Vec>>;
Tensor3 zero_tensor(std::size_t a, std::size_t b, std::size_t c);

struct Tensor4 {
	std::size_t k = 0;
	std::vector<Rational> v;
	Rational& at(std::size_t i, std::size_t j, std::size_t l, std::size_t t) { return v[((i * k + j) * k + l) * k + t]; }
	const Rational& at(std::size_t i, std::size_t j, std::size_t l, std::size_t t) const { return v[((i * k + j) * k + l) * k + t]; }
	bool is_zero() const;
};

struct Construction {
	Algebra algebra;
	Metric metric;
};

enum class ExtKind { L, R, SYM };
const char* ext_kind_name(ExtKind k);

// Data of the h ⊕ A ⊕ h* constructions. G is only read for kind L.
// theta, omega: k×k×m; Omega[i][j][l] = Ω(X_i)(X_j, X_l).
struct ExtData {
	ExtKind kind = ExtKind::L;
	Algebra h;
	Algebra A;
	Metric mA;
	std::vector<Matrix> F, G;
	Tensor3 theta, omega, Omega;
};
ExtData zero_ext_data(ExtKind kind, const Algebra& h, const Algebra& A, const Metric& mA);

struct Violation {
	std::string equation;
	std::vector<std::size_t> indices;  // one-based
	Vec defect;
};

struct ValidationReport {
	std::vector<Violation> violations;
	std::vector<std::string> notes;
	bool ok() const { return violations.empty(); }
	std::vector<std::string> equation_ids() const;
};

// Basis order X_1..X_k, a_1..a_m, α_1..α_k.
Metric natural_metric(std::size_t k, const Metric& mA);
Tensor4 delta_omega(const Algebra& h, const Tensor3& Omega);
// Basis order e, h, ē.
Construction double_extension(const Algebra& h, const Metric& mh, const Matrix& Amap);

void check_shape(const ExtData& d);
ValidationReport validate_extension(const ExtData& d);
Construction construct_extension(const ExtData& d, bool enforce);

enum class CotangentKind { CorZero, CoadjointL, TwoStepR };
Construction construct_cotangent(CotangentKind kind, const Algebra& g, const std::optional<Tensor3>& Omega = std::nullopt);

struct Coboundary {
	bool cocycle1 = false, cocycle2 = false;
	std::optional<Matrix> witness;  // skew k×k matrix ω(X_a, X_b)
};
Coboundary cocycle_coboundary(const Algebra& h, const Tensor3& Omega1, const Tensor3& Omega2);
// φ(X+α) = X + α − ω♭(X) on h ⊕ h*
Matrix cotangent_shift(const Matrix& omega);

// T symmetric k×k×k; products X∘Y ∈ h* only.
Construction construct_metrised_commutative(std::size_t k, const Metric& mA, const Tensor3& T);
// x•y = [x,y] + ω(x,y) with ⟨ω(x,y),z⟩ = T(x,y,z)
Construction construct_metrised_from_quadratic(const Algebra& g, const Metric& m, const Subspace& I, const Tensor3& T);

// Basis order e, A, ē.
Construction construct_lorentz_L(const Algebra& A, const Metric& mA, const Matrix& F, const Matrix& G, const Vec& delta);
// Basis order N, h; N•anything = 0 and X•v = rho(X)v.
Construction construct_nondeg_L(const Algebra& h, const Metric& mh, const Metric& mN, const std::vector<Matrix>& rho);

// Subspaces of the n²-dim matrix space, row-major vectorization.
struct DerivationSpaces {
	std::size_t n = 0;
	Subspace der;
	std::optional<Subspace> skew_der;
	std::optional<Subspace> inner;
	std::optional<std::size_t> h2_dim;
};
DerivationSpaces derivation_spaces(const Algebra& A, const std::optional<Metric>& mA);
Vec matrix_to_vec(const Matrix& m);
Matrix vec_to_matrix(const Vec& v, std::size_t n);
bool is_derivation(const Algebra& A, const Matrix& D);
bool is_skew(const Matrix& D, const Matrix& m);

// Columns U(X_i) with ad_{U(X_i)} = F(X_i).
Matrix find_U(const Algebra& A, const std::vector<Matrix>& F);

// u∘v = P⁻¹(Pu • Pv), metric Pᵀ m P.
Construction transport(const Algebra& a, const Metric& m, const Matrix& P);
Algebra transport_algebra(const Algebra& a, const Matrix& P);

}
