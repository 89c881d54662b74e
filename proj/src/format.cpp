#include "altperm/format.hpp"

#include <algorithm>
#include <ostream>

#include "altperm/errors.hpp"

namespace altperm {

std::string to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::SingleMethod: return "single-method";
    case VerificationStatus::VerifiedAgree: return "verified-agree";
    case VerificationStatus::Mismatch: return "MISMATCH";
  }
  return "?";
}

Json polynomial_to_json(const DistributionPolynomial& poly, Variables vars) {
  Json arr = Json::array();
  for (const auto& [m, c] : poly.terms()) {
    if ((!vars.p && m.p != 0) || (!vars.q && m.q != 0))
      throw InternalError("polynomial " + poly.to_string() + " uses an undeclared variable");
    Json t = Json::object();
    if (vars.p) t["e_p"] = m.p;
    if (vars.q) t["e_q"] = m.q;
    t["c"] = c.get_str();
    arr.push_back(std::move(t));
  }
  return arr;
}

DistributionPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw UnsupportedInput("polynomial JSON must be an array of terms");
  DistributionPolynomial poly;
  for (const auto& t : j) {
    const int ep = t.contains("e_p") ? t.at("e_p").get<int>() : 0;
    const int eq = t.contains("e_q") ? t.at("e_q").get<int>() : 0;
    poly.add(ep, eq, BigInt(t.at("c").get<std::string>()));
  }
  return poly;
}

Json laurent_to_json(const LaurentPolynomial& poly, Variables vars) {
  Json arr = Json::array();
  for (const auto& [m, c] : poly.terms()) {
    Json t = Json::object();
    if (vars.p) t["e_p"] = m.p;
    if (vars.q) t["e_q"] = m.q;
    t["c"] = to_string(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

namespace {

Json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, long>) return v;
        else if constexpr (std::is_same_v<T, std::string>) return v;
        else if constexpr (std::is_same_v<T, BigInt>) return v.get_str();
        else if constexpr (std::is_same_v<T, PolyCell>) return polynomial_to_json(v.value, v.vars);
        else return laurent_to_json(v.value, v.vars);
      },
      cell);
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, std::string>) return v;
        else if constexpr (std::is_same_v<T, BigInt>) return v.get_str();
        else return v.value.to_string();
      },
      cell);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string query_line(const Json& query) {
  std::string line = query.value("command", "");
  for (const auto& [k, v] : query.items()) {
    if (k == "command") continue;
    line += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return line;
}

}  // namespace

void write_record(const TableRecord& rec, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::Json: {
      Json j = Json::object();
      j["query"] = rec.query;
      j["methods"] = rec.methods;
      if (rec.result) j["result"] = cell_json(*rec.result);
      Json rows = Json::array();
      for (const auto& row : rec.rows) {
        Json r = Json::object();
        for (std::size_t i = 0; i < rec.columns.size() && i < row.size(); ++i) r[rec.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(r));
      }
      j["rows"] = std::move(rows);
      j["status"] = to_string(rec.status);
      out << j.dump() << '\n';
      return;
    }
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < rec.columns.size(); ++i) out << (i ? "," : "") << csv_field(rec.columns[i]);
      out << '\n';
      for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
        out << '\n';
      }
      return;
    }
    case OutputFormat::Table: {
      std::vector<std::size_t> width(rec.columns.size());
      for (std::size_t i = 0; i < rec.columns.size(); ++i) width[i] = rec.columns[i].size();
      std::vector<std::vector<std::string>> text;
      for (const auto& row : rec.rows) {
        std::vector<std::string> r;
        for (std::size_t i = 0; i < row.size(); ++i) {
          r.push_back(cell_text(row[i]));
          if (i < width.size()) width[i] = std::max(width[i], r.back().size());
        }
        text.push_back(std::move(r));
      }
      out << "# " << query_line(rec.query) << '\n';
      if (rec.result) out << "# result: " << cell_text(*rec.result) << '\n';
      auto emit = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          out << (i ? "  " : "") << r[i];
          if (i + 1 < r.size() && i < width.size()) out << std::string(width[i] - r[i].size(), ' ');
        }
        out << '\n';
      };
      emit(rec.columns);
      for (const auto& r : text) emit(r);
      out << "# status: " << to_string(rec.status) << '\n';
      return;
    }
  }
}

}  // namespace altperm
