#include <catch2/catch_amalgamated.hpp>

#include "psik/catalog.hpp"
#include "psik/report.hpp"

using namespace psik;

namespace {
const std::string kHeader =
    "group\torder\tcriterion\tk_used\tlhs\trhs\trelation\tverdict\toracle\tconsistency\n";
}

TEST_CASE("empty report is header only", "[report]") {
  CHECK(render_report({}) == kHeader);
}

TEST_CASE("rows carry reduced fractions and fixed columns", "[report]") {
  const CriteriaReport report = run_all(catalog("A5"));
  const auto rows = to_rows(report);
  REQUIRE(rows.size() == 9);

  CHECK(rows[0].criterion == "HLM2018");
  CHECK(rows[1].criterion == "AzadKhosravi");
  CHECK(rows[1].group == "A5");
  CHECK(rows[1].order == 60);
  CHECK(rows[1].lhs == "211/1");
  CHECK(rows[1].rhs == "211/1");  // the boundary case, reduced
  CHECK(rows[1].relation == "strictly_greater");
  CHECK(rows[1].verdict == "Inconclusive");
  CHECK(rows[1].oracle == "false");
  CHECK(rows[1].consistency == "true");
  CHECK(rows[4].criterion == "MainPsiK");
  CHECK(rows[4].verdict == "Inapplicable");
  CHECK(rows[4].k_used == "-");

  const std::string text = render_report(rows);
  CHECK(text.substr(0, kHeader.size()) == kHeader);
  CHECK(text.find("A5\t60\tAzadKhosravi\t-\t211/1\t211/1\tstrictly_greater\tInconclusive\t"
                  "false\ttrue\n") != std::string::npos);
  // LF endings only.
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("k_used column is populated by the scanners", "[report]") {
  const CriteriaReport report = run_all(catalog("H1"), RunOptions{KRange{4, 16}});
  const auto rows = to_rows(report);
  for (const auto& r : rows)
    if (r.criterion == "MainPsiK") {
      CHECK(r.k_used == "4");
      CHECK(r.verdict == "SolvableCertified");
    }
}

TEST_CASE("rendering is deterministic", "[report][property]") {
  auto render_once = [] {
    std::vector<ReportRow> rows;
    for (const char* name : {"A5", "H1", "Z60"})
      for (auto& r : to_rows(run_all(catalog(name)))) rows.push_back(std::move(r));
    return render_report(rows);
  };
  const std::string a = render_once();
  const std::string b = render_once();
  REQUIRE(!a.empty());
  CHECK(a == b);
}
