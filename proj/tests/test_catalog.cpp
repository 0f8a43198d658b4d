#include "doctest.h"

#include "difinv/catalog.hpp"
#include "difinv/syntax.hpp"

using namespace difinv;

namespace {

const EntryReport& entry(const CatalogReport& r, const std::string& name) {
  for (const auto& e : r.entries) {
    if (e.entry->printed.name == name) return e;
  }
  FAIL("missing entry " << name);
  throw;
}

}  // namespace

TEST_CASE("catalog loads verbatim and isobaric") {
  const auto& c = order5_catalog();
  REQUIRE(c.size() == 15);
  const std::vector<std::pair<std::string, int>> weights{
      {"S0", 3}, {"R0", 8}, {"S1", 4}, {"S2", 8}, {"S3", 12}, {"I0", 8}, {"I1", 4}, {"I2", 8},
      {"I3", 12}, {"I4", 8}, {"I5", 12}, {"I6", 16}, {"I7", 12}, {"I8", 16}, {"I9", 20}};
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c[i].printed.name == weights[i].first);
    CHECK(c[i].weight == weights[i].second);
    CHECK(c[i].printed.provenance == Provenance::Printed);
  }
  // numerator weights of the absolute entries
  CHECK(c[9].printed.weight == 24);   // I4
  CHECK(c[10].printed.weight == 12);  // I5
  CHECK(c[12].printed.weight == 12);  // I7
  CHECK_FALSE(c[14].printed.weight.has_value());  // I9 as typeset is not isobaric
  CHECK(c[8].order == 1);
  CHECK(c[14].order == 3);
  CHECK(c[6].printed_text == "(-a4 + a3')^3/a3^4");
}

TEST_CASE("catalog under the induced generator") {
  CatalogReport r = check_catalog(GeneratorChoice::Induced);
  for (const auto& e : r.entries) {
    CAPTURE(e.entry->printed.name);
    if (e.entry->printed.name == "I9") continue;
    CHECK(e.verdict.verified());
    CHECK(e.isobaric);
  }
  CHECK(entry(r, "R0").inferred_index == Rational(8));
  CHECK(entry(r, "S3").inferred_index == Rational(12));
  const auto& i9 = entry(r, "I9");
  CHECK_FALSE(i9.verdict.verified());
  CHECK_FALSE(i9.isobaric);
  CHECK(i9.route == RepairRoute::AlternateReading);
  REQUIRE(i9.repaired.has_value());
  CHECK(i9.repaired->provenance == Provenance::Repaired);
  CHECK(i9.repaired->weight == 60);
  CHECK_FALSE(r.all_verified());

  Seeds s = r.seeds();
  CHECK(s.s1.provenance == Provenance::Printed);
  CHECK(r.absolute("I9").provenance == Provenance::Repaired);
}

TEST_CASE("catalog under the printed generator") {
  CatalogReport r = check_catalog(GeneratorChoice::Printed);
  CHECK(entry(r, "S0").verdict.verified());
  const auto& s1 = entry(r, "S1");
  CHECK_FALSE(s1.verdict.verified());
  CHECK(s1.verdict.residual == parse("-12*a3*k3"));
  CHECK_FALSE(s1.inferred_index.has_value());
  CHECK(s1.route == RepairRoute::PrintedSupport);
  REQUIRE(s1.repaired);
  CHECK(std::get<DiffPoly>(s1.repaired->expr) == parse("a4 + a3'"));
  CHECK_FALSE(s1.scale.has_value());
  const auto& r0 = entry(r, "R0");
  CHECK(r0.verdict.residual == parse("-24*a3*a4*k3"));
  CHECK(std::get<DiffPoly>(r0.repaired->expr) == parse("3*a5*a3 + a4^2"));
  for (const auto& e : r.entries) {
    CAPTURE(e.entry->printed.name);
    if (e.entry->printed.name == "S0") continue;
    CHECK_FALSE(e.verdict.verified());
    CHECK(e.route != RepairRoute::None);
  }
  // the regrouped I9 reading fails here, but its support carries a unique solution
  const auto& i9 = entry(r, "I9");
  CHECK(i9.route == RepairRoute::AlternateReading);
  REQUIRE(i9.repaired);
  CHECK(i9.repaired->weight == 60);
  Seeds s = r.seeds();
  CHECK(s.r0.provenance == Provenance::Repaired);
}
