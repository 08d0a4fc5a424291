#pragma once
#include <optional>
#include <string>
#include <vector>
#include "leibniz/exactlin.hpp"

namespace leibniz {

class Algebra {
public:
	Algebra() = default;
	explicit Algebra(std::size_t dim);
	Algebra(std::size_t dim, std::vector<std::string> names);

	std::size_t dim() const { return n_; }
	const std::vector<std::string>& basis_names() const { return names_; }
	void set_basis_names(std::vector<std::string> names);

	// u_i • u_j = Σ_k c(i,j,k) u_k, zero-based
	Rational& c(std::size_t i, std::size_t j, std::size_t k) { return sc_[(i * n_ + j) * n_ + k]; }
	const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return sc_[(i * n_ + j) * n_ + k]; }
	// one-based convenience used by the catalog: e_i • e_j += x e_k
	Algebra& set(std::size_t i, std::size_t j, std::size_t k, const Rational& x);
	// e_i • e_j as a coordinate vector
	Vec basis_product(std::size_t i, std::size_t j) const;

	Vec product(const Vec& u, const Vec& v) const;
	Matrix left_op(const Vec& u) const;
	Matrix right_op(const Vec& u) const;
	bool is_abelian() const;

	bool operator==(const Algebra& o) const { return n_ == o.n_ && sc_ == o.sc_; }
	bool operator!=(const Algebra& o) const { return !(*this == o); }
private:
	std::size_t n_ = 0;
	std::vector<std::string> names_;
	std::vector<Rational> sc_;
};

Algebra abelian(std::size_t n);
// Lie algebra from brackets [e_i,e_j] (one-based), antisymmetry filled in
Algebra lie_from_brackets(std::size_t n, const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vec>>& brackets);

struct Witness {
	std::string label;
	std::vector<std::size_t> indices;  // one-based basis indices
	Vec defect;
};

struct CheckResult {
	bool passed = true;
	std::optional<Witness> witness;
	explicit operator bool() const { return passed; }
};

enum class Identity { LeftLeibniz, RightLeibniz, Lie, SymmetricLeibniz };

Vec leibniz_defect(const Algebra& a, const Vec& u, const Vec& v, const Vec& w);
// (u•v)•w − (u•w)•v − u•(v•w)
Vec right_leibniz_defect(const Algebra& a, const Vec& u, const Vec& v, const Vec& w);
CheckResult check_identity(const Algebra& a, Identity kind);

Subspace leib_ideal(const Algebra& a);
Subspace left_center(const Algebra& a);
Subspace right_center(const Algebra& a);
Subspace center(const Algebra& a);
Subspace product_space(const Algebra& a, const Subspace& f, const Subspace& g);
Subspace square(const Algebra& a);  // g•g

struct Quotient {
	Algebra algebra;
	Matrix projection;  // quotient coords × old coords
	Matrix lift;        // old coords × quotient coords, complement basis
};
// Throws NotAnIdeal when a product escapes i.
Quotient quotient(const Algebra& a, const Subspace& i);
std::optional<Witness> ideal_witness(const Algebra& a, const Subspace& i);

enum class SeriesKind { Derived, LowerCentral };
struct Series {
	std::vector<Subspace> terms;
	bool terminal_zero = false;
	// index of the first zero term, when the series reaches zero
	std::optional<std::size_t> length() const;
};
Series series(const Algebra& a, SeriesKind kind);

Algebra direct_sum(const Algebra& a, const Algebra& b);

}
