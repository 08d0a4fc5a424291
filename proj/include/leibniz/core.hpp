#pragma once
#include <optional>
#include <string>
#include <vector>
#include "leibniz/construct.hpp"

namespace leibniz {

enum class Side { L, R };
const char* side_name(Side s);

struct CoreResult {
	Side side = Side::L;
	Subspace I, I_perp;
	Algebra A;
	Metric mA;
	Algebra h;
	Matrix projA, projH;  // rows: A (resp. h) coordinates, cols: g coordinates
	Matrix liftA, liftH;  // columns: representatives in I^⊥ (resp. isotropic partner of I)
	// structural facts that were checked; empty means all held
	std::vector<std::string> failed_assertions;
};

CoreResult core_extract(const Algebra& g, const Metric& m, Side side);

struct Fingerprint {
	std::size_t dim = 0, leib = 0, zl = 0, zr = 0, z = 0, square = 0;
	std::optional<std::size_t> leib_isotropic;  // dim Leib ∩ Leib^⊥, needs a metric
	std::optional<std::size_t> derived_length;  // absent: not solvable
	std::optional<std::size_t> nilpotency_class;  // absent: not nilpotent
	std::size_t k_rank = 0;
	Inertia k_inertia;
	std::optional<Inertia> metric_inertia;
	bool operator==(const Fingerprint& o) const;
	bool operator!=(const Fingerprint& o) const { return !(*this == o); }
};
Fingerprint fingerprint(const Algebra& g, const std::optional<Metric>& m = std::nullopt);

enum class Branch { Lie, NondegLeib, Degenerate, Metrised };
const char* branch_name(Branch b);

struct NondegInfo {
	Subspace leib, leib_perp;
	Algebra h;                 // Leib^⊥ with the restricted product
	std::vector<Matrix> rho;   // rho[x] = u_x• restricted to Leib, in Leib basis coordinates
};

struct MetrisedInfo {
	Algebra bracket;          // ½(x•y − y•x)
	Algebra circ;             // ½(x•y + y•x)
	bool eq4_holds = false;   // ω([x,y],z) = ω(ω(x,y),z) = 0
	bool derived_proper = false;  // [g,g] ≠ g
	Subspace lie_center;      // Z of the bracket
	bool center_degenerate = false;
	bool omega_in_center = false;
};

struct ClassifyReport {
	Branch branch = Branch::Lie;
	Side side = Side::L;
	bool leib_equals_perp = false;
	std::optional<NondegInfo> nondeg;
	std::optional<CoreResult> core;
	std::optional<MetrisedInfo> metrised;
	Fingerprint fp;
};
ClassifyReport classify(const Algebra& g, const Metric& m, Side side);

struct SplittingReport {
	Matrix kappa;  // Lie(g) coords × A coords
	bool morphism_ok = false;
	bool image_ideal_ok = false;
};
SplittingReport splitting_report(const Algebra& g, const Metric& m, Side side);

}
