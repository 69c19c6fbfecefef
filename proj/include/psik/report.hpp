#pragma once

// TSV rendering of criteria reports. One header line, one row per
// verdict, LF endings, fractions always reduced with the denominator
// spelled out. Identical inputs produce byte-identical output.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "psik/criteria.hpp"

namespace psik {

struct ReportRow {
  std::string group;
  long long order = 0;
  std::string criterion;
  std::string k_used;  // "-" when the criterion has no k
  std::string lhs;     // canonical "num/den"
  std::string rhs;
  std::string relation;
  std::string verdict;
  std::string oracle;  // "true", "false", or "-" when not computed
  std::string consistency;
};

inline std::vector<ReportRow> to_rows(const CriteriaReport& report) {
  std::vector<ReportRow> rows;
  const std::string oracle = report.oracle_solvable.has_value()
                                 ? (*report.oracle_solvable ? "true" : "false")
                                 : "-";
  for (const auto& v : report.verdicts) {
    ReportRow r;
    r.group = v.group_name;
    r.order = v.n;
    r.criterion = to_string(v.criterion);
    r.k_used = v.k_used.has_value() ? std::to_string(*v.k_used) : "-";
    r.lhs = v.lhs.str();
    r.rhs = v.rhs.str();
    r.relation = to_string(v.relation);
    r.verdict = to_string(v.verdict);
    r.oracle = oracle;
    r.consistency = report.consistent ? "true" : "false";
    rows.push_back(std::move(r));
  }
  return rows;
}

inline void write_report(const std::vector<ReportRow>& rows, std::ostream& out) {
  out << "group\torder\tcriterion\tk_used\tlhs\trhs\trelation\tverdict\toracle\tconsistency\n";
  for (const auto& r : rows)
    out << r.group << '\t' << r.order << '\t' << r.criterion << '\t' << r.k_used << '\t' << r.lhs
        << '\t' << r.rhs << '\t' << r.relation << '\t' << r.verdict << '\t' << r.oracle << '\t'
        << r.consistency << '\n';
}

inline std::string render_report(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  write_report(rows, out);
  return out.str();
}

}  // namespace psik
