#include "doctest.h"

#include "rsf/fusion.hpp"
#include "rsf/hecke.hpp"
#include "rsf/json_io.hpp"
#include "rsf/schurweyl.hpp"
#include "rsf/tableau.hpp"

#include <string>
#include <vector>

using namespace rsf;

TEST_CASE("hecke element round trip") {
  Params p(Rational(2), Rational(3));
  HeckeAlgebra alg(3, p);
  auto e = jm_idempotent(alg, Partition({2, 1}), *StandardTableau::parse("1,2;3"));
  // Throw a negative, non-idempotent piece into the mix as well.
  e = e - he_gen<Rational>(alg, 2).scaled(Rational(7) / 11);
  std::string text = hecke_element_to_json_text(e);
  auto back = hecke_element_from_json_text(alg, text);
  REQUIRE(back.has_value());
  CHECK(*back == e);
  // Serialization is deterministic.
  CHECK(hecke_element_to_json_text(*back) == text);
  // The zero element is the empty object.
  CHECK(hecke_element_to_json_text(he_zero<Rational>(alg)) == "{}");
  CHECK(hecke_element_from_json_text(alg, "{}")->is_zero());
}

TEST_CASE("hecke element parsing rejects malformed input") {
  Params p(Rational(2), Rational(3));
  HeckeAlgebra alg(2, p);
  CHECK_FALSE(hecke_element_from_json_text(alg, "{\"999\": \"1\"}").has_value());
  CHECK_FALSE(hecke_element_from_json_text(alg, "{\"12\": 5}").has_value());
  CHECK_FALSE(hecke_element_from_json_text(alg, "{\"12\": \"1/0\"}").has_value());
  CHECK_FALSE(hecke_element_from_json_text(alg, "not json").has_value());
  CHECK_FALSE(hecke_element_from_json_text(alg, "[1,2]").has_value());
  CHECK(hecke_element_from_json_text(alg, "{\"12\": \"-4/9\"}").has_value());
}

TEST_CASE("weight text") {
  CHECK(weight_text(GlWeight{2, 1, 0}) == "2,1,0");
  CHECK(weight_text(GlWeight{}) == "");
  CHECK(weight_from_text("2,1,0") == GlWeight{2, 1, 0});
  CHECK(weight_from_text("") == GlWeight{});
  CHECK(weight_from_text("5") == GlWeight{5});
  CHECK_FALSE(weight_from_text("1,,2").has_value());
  CHECK_FALSE(weight_from_text("a").has_value());
  CHECK_FALSE(weight_from_text("1,-2").has_value());
  CHECK_FALSE(weight_from_text("1,2,").has_value());
}

TEST_CASE("check report round trip") {
  CheckReport report;
  report.add("first thing", true);
  report.add("second thing", false);
  std::string text = check_report_to_json_text(report, 2);
  auto back = check_report_from_json_text(text);
  REQUIRE(back.has_value());
  REQUIRE(back->items.size() == 2);
  CHECK(back->items[0].name == "first thing");
  CHECK(back->items[0].pass);
  CHECK_FALSE(back->items[1].pass);
  CHECK(check_report_to_json_text(*back, 2) == text);
  CHECK_FALSE(check_report_from_json_text("{\"items\": 3}").has_value());
}

TEST_CASE("module report round trip") {
  Params p(Rational(2), Rational(3));
  ModuleReport report = module_of(Partition({2, 1}), *StandardTableau::parse("1,2;3"), 3, p);
  std::string text = module_report_to_json_text(report, 2);
  auto back = module_report_from_json_text(text);
  REQUIRE(back.has_value());
  CHECK(back->lambda == report.lambda);
  CHECK(back->tableau == report.tableau);
  CHECK(back->rank == report.rank);
  CHECK(back->predicted_dim == report.predicted_dim);
  CHECK(back->weight_multiplicities == report.weight_multiplicities);
  CHECK(back->highest_weight == report.highest_weight);
  CHECK(back->hw_eigenvalues == report.hw_eigenvalues);
  CHECK(back->flags.all_pass() == report.flags.all_pass());
  // Byte-identical re-serialization.
  CHECK(module_report_to_json_text(*back, 2) == text);
  CHECK_FALSE(module_report_from_json_text("{}").has_value());
}

TEST_CASE("audit report round trip") {
  Params p(Rational(2), Rational(3));
  AuditReport audit = schur_weyl_audit(2, 2, p);
  std::string text = audit_report_to_json_text(audit, 2);
  auto back = audit_report_from_json_text(text);
  REQUIRE(back.has_value());
  CHECK(back->n == 2);
  CHECK(back->m == 2);
  CHECK(back->modules.size() == audit.modules.size());
  CHECK(back->all_pass() == audit.all_pass());
  CHECK(audit_report_to_json_text(*back, 2) == text);
  CHECK_FALSE(audit_report_from_json_text("garbage").has_value());
}

TEST_CASE("fusion comparison list round trip") {
  Params p(Rational(2), Rational(3));
  HeckeAlgebra alg(2, p);
  std::vector<FusionComparison> list = verify_fusion_equals_jm(alg);
  REQUIRE(list.size() == 2);
  std::string text = fusion_comparisons_to_json_text(list, 2);
  auto back = fusion_comparisons_from_json_text(text);
  REQUIRE(back.has_value());
  REQUIRE(back->size() == 2);
  CHECK((*back)[0].lambda == list[0].lambda);
  CHECK((*back)[0].tableau == list[0].tableau);
  CHECK((*back)[0].equal == list[0].equal);
  CHECK(fusion_comparisons_to_json_text(*back, 2) == text);
  CHECK_FALSE(fusion_comparisons_from_json_text("{\"no\": 1}").has_value());
}
