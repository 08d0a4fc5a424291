#pragma once
#include <optional>
#include <string>
#include <json.hpp>
#include "leibniz/catalog.hpp"

// JSON file formats. Indices in files are one-based, rationals are strings.
namespace leibniz::io {

using json = nlohmann::json;

// Parse errors carry the dotted path of the offending field.
const json& need_field(const json& j, const std::string& key, const std::string& path = "");
Rational rational_from(const json& j, const std::string& path);
Vec vec_from(const json& j, const std::string& path);
Matrix matrix_from(const json& j, const std::string& path);
Tensor3 tensor_from(const json& j, std::size_t a, std::size_t b, std::size_t c, const std::string& path);
Algebra algebra_from(const json& j, const std::string& path = "algebra");
Matrix form_from(const json& j, const std::string& path = "metric");
Metric metric_from(const json& j, const std::string& path = "metric");
ExtData ext_data_from(const json& j, const std::string& path = "");

json to_json(const Rational& q);
json to_json(const Vec& v);
json to_json(const Matrix& m);
json to_json(const Tensor3& t);
json to_json(const Algebra& a);
json metric_json(const Matrix& m);
json to_json(const ExtData& d);
json to_json(const Witness& w);
json to_json(const CheckResult& c);
json to_json(const Subspace& s);
json to_json(const Inertia& i);
json to_json(const Fingerprint& f);
json to_json(const ValidationReport& r);
json to_json(const CoreResult& c);
json to_json(const ClassifyReport& r);
json to_json(const EntryReport& r);
json to_json(const CatalogEntry& e);
json to_json(const DerivationSpaces& d);

// {"algebra": ..., "metric": ...}
json document(const Algebra& a, const std::optional<Matrix>& metric);

struct AlgebraFile {
	Algebra algebra;
	std::optional<Metric> metric;
};
// Accepts a document or a bare algebra object.
AlgebraFile algebra_file_from(const json& j);

// Reads a file; syntax errors report line and column.
json read_json_file(const std::string& path);

}
