#include "qaffine/json_io.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include <sstream>

namespace qaffine::io {

using ordered_json = nlohmann::ordered_json;

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  return std::nullopt;
}

/* ---------------- JSON values ---------------- */

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json term_value(int q, const std::vector<int>& colours, const Int& coeff) {
  ordered_json t;
  t["q"] = q;
  t["colours"] = colours;
  t["coeff"] = to_decimal(coeff);
  return t;
}

ordered_json series_value(const QSeries& s) {
  ordered_json j;
  j["trunc_order"] = s.order();
  j["q_min"] = 0;
  ordered_json terms = ordered_json::array();
  for (int e = 0; e <= s.order(); ++e) {
    if (s.at(e) == 0) continue;
    terms.push_back(term_value(e, {}, s.at(e)));
  }
  j["terms"] = std::move(terms);
  return j;
}

ordered_json series_value(const ColouredSeries& s) {
  ordered_json j;
  j["trunc_order"] = s.order();
  j["q_min"] = s.q_min();
  ordered_json terms = ordered_json::array();
  for (const auto& [e, poly] : s.terms()) {
    for (const auto& [exps, c] : poly.terms()) {
      terms.push_back(term_value(e, exps, c));
    }
  }
  j["terms"] = std::move(terms);
  return j;
}

ordered_json series_value(const LatticeSeries& s) {
  ordered_json j;
  j["trunc_order"] = s.order();
  j["a_min"] = s.a_min();
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : s.terms()) {
    ordered_json t;
    t["a"] = m.a;
    t["b"] = m.b;
    t["coeff"] = to_decimal(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

ordered_json partition_value(const ColouredPartition& p) {
  ordered_json j;
  ordered_json parts = ordered_json::array();
  for (const auto& part : p) {
    ordered_json e;
    e["size"] = part.size;
    e["colour"] = part.colour;
    parts.push_back(std::move(e));
  }
  j["parts"] = std::move(parts);
  j["weight"] = partition_weight(p);
  return j;
}

ordered_json report_value(const VerifyReport& r) {
  ordered_json j;
  j["identity"] = r.identity;
  j["order"] = r.order;
  j["status"] = r.pass ? "PASS" : "FAIL";
  if (r.mismatch) {
    ordered_json m;
    m["where"] = r.mismatch->where;
    m["lhs"] = r.mismatch->lhs;
    m["rhs"] = r.mismatch->rhs;
    j["first_mismatch"] = std::move(m);
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["floor_shift"] = r.floor_shift;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string to_json(const QSeries& s) { return dump(series_value(s)); }
std::string to_json(const ColouredSeries& s) { return dump(series_value(s)); }
std::string to_json(const LatticeSeries& s) { return dump(series_value(s)); }
std::string to_json(const ColouredPartition& p) { return dump(partition_value(p)); }
std::string to_json(const VerifyReport& r) { return dump(report_value(r)); }

std::string grid_summary_json(const std::vector<VerifyReport>& cells) {
  ordered_json j;
  ordered_json arr = ordered_json::array();
  int passed = 0;
  for (const auto& r : cells) {
    if (r.pass) ++passed;
    arr.push_back(report_value(r));
  }
  j["cells"] = std::move(arr);
  j["total"] = cells.size();
  j["passed"] = passed;
  j["status"] = (passed == static_cast<int>(cells.size())) ? "PASS" : "FAIL";
  return dump(j);
}

std::string partitions_json(const std::vector<ColouredPartition>& ps) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : ps) arr.push_back(partition_value(p));
  return dump(arr);
}

/* ---------------- CSV ---------------- */

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string to_csv(const QSeries& s) {
  std::ostringstream out;
  for (int e = 0; e <= s.order(); ++e) {
    out << e << "," << to_decimal(s.at(e)) << "\n";
  }
  return out.str();
}

std::string to_csv(const ColouredSeries& s) {
  std::ostringstream out;
  for (const auto& [e, poly] : s.terms()) {
    for (const auto& [exps, c] : poly.terms()) {
      out << e;
      for (int x : exps) out << "," << x;
      out << "," << to_decimal(c) << "\n";
    }
  }
  return out.str();
}

std::string to_csv(const LatticeSeries& s) {
  std::ostringstream out;
  for (const auto& [m, c] : s.terms()) {
    out << m.a << "," << m.b << "," << to_decimal(c) << "\n";
  }
  return out.str();
}

std::string to_csv(const ColouredPartition& p) {
  std::ostringstream out;
  out << partition_weight(p) << ",";
  for (size_t k = 0; k < p.size(); ++k) {
    if (k) out << ";";
    out << p[k].size << ":" << p[k].colour;
  }
  out << "\n";
  return out.str();
}

std::string to_csv(const VerifyReport& r) {
  std::ostringstream out;
  out << csv_field(r.identity) << "," << r.order << ","
      << (r.pass ? "PASS" : "FAIL") << ",";
  if (r.mismatch) {
    out << csv_field(r.mismatch->where) << "," << csv_field(r.mismatch->lhs)
        << "," << csv_field(r.mismatch->rhs);
  } else {
    out << ",,";
  }
  out << "," << r.floor_shift << "," << r.elapsed_ms << "\n";
  return out.str();
}

/* ---------------- text ---------------- */

std::string to_text(const QSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (int e = 0; e <= s.order(); ++e) {
    Int c = s.at(e);
    if (c == 0) continue;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (e == 0) {
      out << c.get_str();
    } else {
      if (c != 1 && c != -1) out << c.get_str() << "*";
      else if (c == -1) out << "-";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  if (first) out << "0";
  out << " + O(q^" << s.order() + 1 << ")\n";
  return out.str();
}

std::string to_text(const ColouredSeries& s) { return s.to_string() + "\n"; }

std::string to_text(const LatticeSeries& s) { return s.to_string() + "\n"; }

std::string to_text(const ColouredPartition& p) {
  std::ostringstream out;
  out << partition_to_string(p) << "  weight " << partition_weight(p) << "\n";
  return out.str();
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  " << r.identity << "  [order "
      << r.order;
  if (r.floor_shift != 0) out << ", floor shift " << r.floor_shift;
  out << ", " << r.elapsed_ms << " ms]\n";
  if (r.mismatch) {
    out << "  first mismatch at " << r.mismatch->where << ": lhs = "
        << r.mismatch->lhs << ", rhs = " << r.mismatch->rhs << "\n";
  }
  return out.str();
}

}  // namespace qaffine::io
