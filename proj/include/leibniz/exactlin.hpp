#pragma once
#include <gmpxx.h>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>
#include "leibniz/error.hpp"

namespace leibniz {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& a);
Rational dot(const Vec& a, const Vec& b);

class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
	Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
	static Matrix identity(std::size_t n);
	static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
	static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

	std::size_t rows() const { return r_; }
	std::size_t cols() const { return c_; }
	Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
	const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

	Vec row(std::size_t i) const;
	Vec col(std::size_t j) const;
	Matrix transpose() const;
	bool is_zero() const;
	bool is_symmetric() const;
	Rational trace() const;

	bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
	bool operator!=(const Matrix& o) const { return !(*this == o); }
private:
	std::size_t r_ = 0, c_ = 0;
	std::vector<Rational> a_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vec operator*(const Matrix& a, const Vec& v);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& m);
Rational bilinear(const Matrix& s, const Vec& u, const Vec& v);

// In-place reduced row-echelon form; returns pivot columns.
std::vector<std::size_t> rref_inplace(Matrix& m);

class Subspace {
public:
	Subspace() = default;
	explicit Subspace(std::size_t ambient) : n_(ambient), basis_(0, ambient) {}
	static Subspace span(std::size_t ambient, const std::vector<Vec>& vecs);
	static Subspace full(std::size_t ambient);

	std::size_t ambient_dim() const { return n_; }
	std::size_t dim() const { return basis_.rows(); }
	const Matrix& basis() const { return basis_; }
	std::vector<Vec> vectors() const;
	std::vector<std::size_t> pivots() const;
	bool contains(const Vec& v) const;

	bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
	bool operator!=(const Subspace& o) const { return !(*this == o); }
private:
	std::size_t n_ = 0;
	Matrix basis_;
};

struct SolveResult {
	std::size_t rank = 0;
	std::vector<std::size_t> pivots;
	Subspace kernel;
	std::optional<Vec> particular;
};

SolveResult rref_solve(const Matrix& m, const std::optional<Vec>& b = std::nullopt);
Subspace kernel(const Matrix& m);
std::size_t rank(const Matrix& m);

enum class SubspaceOp { Sum, Intersect, Contains, Equals };
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Subspace& b);  // b ⊆ a
bool subspace_equals(const Subspace& a, const Subspace& b);
// Standard-dot orthogonal complement.
Subspace annihilator(const Subspace& s);

struct Inertia {
	std::size_t p = 0, q = 0, z = 0;
	bool operator==(const Inertia& o) const { return p == o.p && q == o.q && z == o.z; }
};
Inertia inertia(const Matrix& s);

}
