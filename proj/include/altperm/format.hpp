#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "altperm/distribution_polynomial.hpp"
#include "altperm/laurent.hpp"

namespace altperm {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Table, Json, Csv };
enum class VerificationStatus { SingleMethod, VerifiedAgree, Mismatch };

std::string to_string(VerificationStatus s);

// Variables a polynomial is written in; only these exponent keys are emitted.
struct Variables {
  bool p = true;
  bool q = true;
};
inline constexpr Variables kOnlyP{true, false};
inline constexpr Variables kOnlyQ{false, true};
inline constexpr Variables kBoth{true, true};

// Terms in lexicographic (e_p, e_q) order, e.g. [{"e_q":1,"c":"2"},{"e_q":2,"c":"3"}].
Json polynomial_to_json(const DistributionPolynomial& poly, Variables vars);
// Accepts the form above; missing exponent keys read as 0.
DistributionPolynomial polynomial_from_json(const Json& j);
// Same shape with "num/den" coefficients.
Json laurent_to_json(const LaurentPolynomial& poly, Variables vars);

struct PolyCell {
  DistributionPolynomial value;
  Variables vars;
};
struct LaurentCell {
  LaurentPolynomial value;
  Variables vars;
};
using Cell = std::variant<long, std::string, BigInt, PolyCell, LaurentCell>;

// A tabular result: one header, rows of cells, plus the query echo and status.
struct TableRecord {
  Json query;
  std::vector<std::string> methods;
  // Single verified value (JSON "result"); per-method values go in rows.
  std::optional<Cell> result;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  VerificationStatus status = VerificationStatus::SingleMethod;
};

void write_record(const TableRecord& rec, OutputFormat fmt, std::ostream& out);

}  // namespace altperm
