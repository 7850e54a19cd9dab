#include "finecat/render.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace finecat::render {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  if (name == "bfile") return OutputFormat::kBfile;
  throw std::invalid_argument("unknown format: " + name);
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kTable: return "table";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kBfile: return "bfile";
  }
  return "table";
}

std::string render_sequence(const Sequence& s, OutputFormat f) {
  std::ostringstream out;
  switch (f) {
    case OutputFormat::kTable:
      out << "n " << s.label << "(n)\n";
      for (int n = 1; n <= s.length(); ++n) {
        out << n << " " << to_decimal(s.at(n)) << "\n";
      }
      break;
    case OutputFormat::kCsv:
      out << "n,value\n";
      for (int n = 1; n <= s.length(); ++n) {
        out << n << "," << to_decimal(s.at(n)) << "\n";
      }
      break;
    case OutputFormat::kJson: {
      ordered_json j;
      j["label"] = s.label;
      j["values"] = ordered_json::array();
      for (int n = 1; n <= s.length(); ++n) {
        j["values"].push_back(to_decimal(s.at(n)));
      }
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kBfile:
      for (int n = 1; n <= s.length(); ++n) {
        out << n << " " << to_decimal(s.at(n)) << "\n";
      }
      break;
  }
  return out.str();
}

std::string render_triangle(const Triangle& t, int m, const std::string& method,
                            OutputFormat f) {
  std::ostringstream out;
  switch (f) {
    case OutputFormat::kTable:
    case OutputFormat::kCsv: {
      const char* sep = (f == OutputFormat::kCsv) ? "," : " ";
      for (int n = 1; n <= t.order(); ++n) {
        for (int k = 1; k <= n; ++k) {
          if (k > 1) out << sep;
          out << to_decimal(t.at(n, k));
        }
        out << "\n";
      }
      break;
    }
    case OutputFormat::kJson: {
      ordered_json j;
      j["m"] = m;
      j["rows"] = ordered_json::array();
      for (int n = 1; n <= t.order(); ++n) {
        ordered_json row = ordered_json::array();
        for (int k = 1; k <= n; ++k) row.push_back(to_decimal(t.at(n, k)));
        j["rows"].push_back(std::move(row));
      }
      j["method"] = method;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kBfile: {
      long idx = 0;
      for (int n = 1; n <= t.order(); ++n) {
        for (int k = 1; k <= n; ++k) {
          out << ++idx << " " << to_decimal(t.at(n, k)) << "\n";
        }
      }
      break;
    }
  }
  return out.str();
}

std::string render_value(const Int& v, OutputFormat f) {
  switch (f) {
    case OutputFormat::kTable:
    case OutputFormat::kCsv:
      return to_decimal(v) + "\n";
    case OutputFormat::kJson: {
      ordered_json j;
      j["value"] = to_decimal(v);
      return j.dump() + "\n";
    }
    case OutputFormat::kBfile:
      return "1 " + to_decimal(v) + "\n";
  }
  return to_decimal(v) + "\n";
}

namespace {

const char* status_name(const identities::EvalResult& r) {
  return r.matched ? "verified" : "falsified";
}

const char* expected_name(const identities::EvalResult& r) {
  return r.expected == identities::Expectation::kPass ? "pass"
                                                      : "fail_as_printed";
}

std::string cell_name(const identities::Counterexample& c) {
  if (c.k == 0) return "(" + std::to_string(c.n) + ")";
  return "(" + std::to_string(c.n) + "," + std::to_string(c.k) + ")";
}

}  // namespace

std::string render_reports(const std::vector<identities::EvalResult>& rs,
                           OutputFormat f) {
  std::ostringstream out;
  switch (f) {
    case OutputFormat::kTable: {
      int deviations = 0;
      for (const identities::EvalResult& r : rs) {
        if (!r.as_expected()) ++deviations;
        out << r.id << ": " << status_name(r) << " (expected "
            << expected_name(r) << ", "
            << (r.as_expected() ? "as expected" : "UNEXPECTED") << "), cells="
            << r.cells << ", mismatches=" << r.mismatches << ", max_n="
            << r.max_n_used;
        if (r.vacuous) out << ", vacuous";
        out << ", wall=" << std::fixed << std::setprecision(1) << r.wall_ms
            << "ms\n";
        for (const identities::Counterexample& c : r.counterexamples) {
          out << "  counterexample " << cell_name(c) << ": lhs=" << c.lhs
              << " rhs=" << c.rhs << "\n";
        }
      }
      if (deviations == 0) {
        out << "result: all " << rs.size() << " record(s) matched expectations\n";
      } else {
        out << "result: " << deviations << " of " << rs.size()
            << " record(s) deviated from expectations\n";
      }
      break;
    }
    case OutputFormat::kCsv:
      out << "id,status,expected,as_expected,vacuous,cells,mismatches,max_n\n";
      for (const identities::EvalResult& r : rs) {
        out << r.id << "," << status_name(r) << "," << expected_name(r) << ","
            << (r.as_expected() ? "true" : "false") << ","
            << (r.vacuous ? "true" : "false") << "," << r.cells << ","
            << r.mismatches << "," << r.max_n_used << "\n";
      }
      break;
    case OutputFormat::kJson: {
      ordered_json arr = ordered_json::array();
      for (const identities::EvalResult& r : rs) {
        ordered_json j;
        j["id"] = r.id;
        j["status"] = status_name(r);
        j["expected"] = expected_name(r);
        j["as_expected"] = r.as_expected();
        j["vacuous"] = r.vacuous;
        j["cells"] = r.cells;
        j["mismatches"] = r.mismatches;
        j["max_n"] = r.max_n_used;
        j["wall_ms"] = r.wall_ms;
        ordered_json cxs = ordered_json::array();
        for (const identities::Counterexample& c : r.counterexamples) {
          ordered_json cx;
          cx["n"] = c.n;
          cx["k"] = c.k;
          cx["lhs"] = c.lhs;
          cx["rhs"] = c.rhs;
          cxs.push_back(std::move(cx));
        }
        j["counterexamples"] = std::move(cxs);
        arr.push_back(std::move(j));
      }
      out << arr.dump() << "\n";
      break;
    }
    case OutputFormat::kBfile:
      throw std::invalid_argument("verdict reports have no bfile form");
  }
  return out.str();
}

}  // namespace finecat::render
