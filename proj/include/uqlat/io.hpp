#pragma once

#include <string>

#include "json.hpp"
#include "uqlat/cato.hpp"
#include "uqlat/oqsl2.hpp"
#include "uqlat/report.hpp"
#include "uqlat/uqcore.hpp"

namespace uqlat {

// Bumped when any emitted JSON layout changes; see README for the schemas.
inline constexpr int kSchemaVersion = 1;

nlohmann::json scalar_json(const Scalar& c);                    // "num/den"
nlohmann::json valuation_json(const std::optional<long>& v);    // integer or "inf"
nlohmann::json weight_json(const Weight& w);
nlohmann::json word_element_json(const WordElement& x);
// Canonical form: list of {r, lambda, s, coeff} sorted by the monomial order.
nlohmann::json element_json(const AlgebraElement& x);
nlohmann::json tensor_json(const TensorElement& x);
nlohmann::json oq_element_json(const OqElement& x);  // {kind, exps, coeff} terms
nlohmann::json cartan_element_json(const CartanElement& x);
nlohmann::json report_json(const Report& r);
nlohmann::json rootsystem_json(const RootSystem& rs);
nlohmann::json context_json(const UqContext& ctx);  // root system + word + beta

// Simple tabular payload for CSV/table output.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string emit_json(const nlohmann::json& j);  // canonical, byte-stable
std::string table_csv(const Table& t);
std::string table_text(const Table& t);
nlohmann::json table_json(const Table& t);

// Human-readable aggregated view; JSON/CSV carry every check.
std::string report_text(const Report& r, size_t max_failures_listed = 10);
Table report_table(const Report& r);

}  // namespace uqlat
