#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "leibniz/core.hpp"

namespace leibniz {

using Params = std::map<std::string, Rational>;

struct Claims {
	std::optional<bool> left_leibniz, right_leibniz, symmetric_leibniz, lie;
	std::optional<Invariance> invariance;
	bool metric_nondegenerate = false;
	bool dim_leib_at_least_2 = false;
	bool leib_isotropic = false;
	std::optional<Matrix> B, K;
};

struct CatalogEntry {
	std::string name;
	std::string source;  // table or example the entry comes from
	Params params;
	Algebra algebra;
	std::optional<Metric> metric;
	Claims claims;
	std::string reading;                         // how the encoded row departs from the printed one
	std::vector<std::string> documented_failures; // claim ids known to fail for the printed row
};

struct CatalogDef {
	std::string name;
	std::string source;
	std::string description;
	std::vector<std::string> param_names;
	std::string constraint_text;
	std::vector<Params> samples;
	std::function<CatalogEntry(const Params&)> build;
	// returns an error message when params are outside the allowed region
	std::function<std::optional<std::string>(const Params&)> constraint;
	// printed row, when it differs from the reading
	std::function<CatalogEntry(const Params&)> literal;
	std::vector<Params> literal_samples;
};

const std::vector<CatalogDef>& catalog_defs();
std::vector<std::string> catalog_names();
const CatalogDef& catalog_def(const std::string& name);
CatalogEntry catalog_get(const std::string& name, const Params& params = {});
std::vector<CatalogEntry> catalog_samples(const std::string& name);
std::vector<CatalogEntry> catalog_all();

struct ClaimCheck {
	std::string claim;
	bool agree = false;
	bool documented = false;
	std::optional<Witness> witness;
	std::string detail;
};

struct EntryReport {
	std::string name;
	Params params;
	bool literal = false;
	std::string reading;
	std::vector<ClaimCheck> checks;
	std::string error;  // entry could not be built
	bool undocumented_discrepancy() const;
};

EntryReport catalog_verify(const CatalogEntry& e);
// All samples of all entries plus the printed-row variants.
std::vector<EntryReport> catalog_verify_all();
std::vector<EntryReport> catalog_verify_name(const std::string& name);

std::string params_to_string(const Params& p);

}
