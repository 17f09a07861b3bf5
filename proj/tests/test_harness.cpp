#include <cstdlib>

#include "doctest.h"
#include "helpers.hpp"
#include "tfl/harness.hpp"

using namespace tfl;
using namespace tfl::testing;

namespace {

ClaimParams params(int n, std::size_t samples, std::uint64_t seed = 1) {
  ClaimParams p;
  p.n = n;
  p.samples = samples;
  p.seed = seed;
  return p;
}

bool has_note(const ClaimReport& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("claim names") {
  CHECK(all_claims().size() == 22);
  for (auto id : all_claims()) {
    CHECK(parse_claim(to_string(id)) == id);
    CHECK(std::string(claim_statement(id)).size() > 0);
  }
  CHECK_FALSE(parse_claim("THM_9_9"));
}

TEST_CASE("sample suites") {
  auto r = ring("DUAL2", GF(5));
  auto a = sample_suite(r, Side::left, 10, 7);
  auto b = sample_suite(r, Side::left, 10, 7);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() >= 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].module == b[i].module);
  }
  auto c = sample_suite(r, Side::left, 10, 8);
  bool differs = false;
  for (std::size_t i = 0; i < std::min(a.size(), c.size()); ++i) differs = differs || !(a[i].module == c[i].module);
  CHECK(differs);

  auto a2 = ring("A2");
  auto suite = sample_suite(a2, Side::right, 5, 1);
  bool has_regular = false;
  std::size_t simples = 0;
  for (const auto& s : suite) {
    CHECK(s.module.side() == Side::right);
    if (s.module == regular(a2, Side::right)) has_regular = true;
    for (const auto& sm : simple_modules(a2, Side::right))
      if (s.module == sm) ++simples;
  }
  CHECK(has_regular);
  CHECK(simples >= 2);

  auto ng = sample_suite(ring("NG3"), Side::left, 50, 1);
  CHECK(ng.size() == 50);
  for (const auto& s : ng) {
    CHECK(validate_module(s.module).ok);
    CHECK(s.module.dim() <= 50);
  }
}

TEST_CASE("reports do not depend on the worker count") {
  auto r = ring("NG3");
  auto p = params(1, 30, 5);
  setenv("TORSIONFREE_LAB_THREADS", "1", 1);
  auto one = dump(report_to_json(falsify_claim(ClaimId::PROP_4_1, r, p)));
  setenv("TORSIONFREE_LAB_THREADS", "4", 1);
  auto four = dump(report_to_json(falsify_claim(ClaimId::PROP_4_1, r, p)));
  unsetenv("TORSIONFREE_LAB_THREADS");
  CHECK(one == four);
  CHECK(worker_count() >= 1);
}

TEST_CASE("dimension equivalences on a self-injective algebra") {
  auto r = ring("DUAL2");
  auto rep = falsify_claim(ClaimId::THM_1_4, r, params(0, 100));
  CHECK(rep.status == ClaimStatus::no_counterexample);
  CHECK(exit_code(rep) == 0);
  CHECK(rep.instances >= 200);  // both sides
  CHECK(rep.consistent == rep.instances);
  const auto& dims = rep.facts.at("dimensions");
  CHECK(dims.at("gdim").size() == 1);
  CHECK(dims.at("gdim").at("0") == rep.instances);
  CHECK(dims.at("tdim").at("0") == rep.instances);
  CHECK(dims.at("orthdim").at("0") == rep.instances);
}

TEST_CASE("dimensions exceed n when the self-injective dimension does") {
  auto r = ring("NG3");
  auto rep = falsify_claim(ClaimId::THM_1_4, r, params(2, 20));
  CHECK(rep.status == ClaimStatus::no_counterexample);
  CHECK(has_note(rep, "premise fails"));
  bool simple_exhibits = false;
  for (const auto& e : rep.evidence)
    if (e.label == "simple[0]" && e.tag.find("orthdim > n") != std::string::npos) simple_exhibits = true;
  CHECK(simple_exhibits);
  for (const auto& e : rep.evidence) CHECK(reverify_witness(r, witness_to_json(e), params(2, 20)));
}

TEST_CASE("evidence re-verification rejects a changed tag") {
  auto r = ring("NG3");
  auto rep = falsify_claim(ClaimId::PROP_4_1, r, params(1, 20));
  REQUIRE_FALSE(rep.evidence.empty());
  auto j = witness_to_json(rep.evidence.front());
  CHECK(reverify_witness(r, j, params(1, 20)));
  j["tag"] = "not an exhibited condition";
  CHECK_FALSE(reverify_witness(r, j, params(1, 20)));
  CHECK(rep.facts.at("torsionless_property") == "refuted");
}

TEST_CASE("hereditary and self-injective examples") {
  auto a2 = ring("A2");
  auto cor = falsify_claim(ClaimId::COR_4_9, a2, params(1, 30));
  CHECK(cor.status == ClaimStatus::no_counterexample);
  CHECK(exit_code(cor) == 0);

  auto zaks = falsify_claim(ClaimId::ZAKS, a2, params(1, 10));
  CHECK(zaks.status == ClaimStatus::no_counterexample);
  CHECK(zaks.facts.at("selfinjdim").at("left").at("value") == 1);
  CHECK(zaks.facts.at("selfinjdim").at("right").at("value") == 1);

  auto n1 = question_experiment(ClaimId::CLAIM_5_2_N1, a2, params(1, 30));
  CHECK(n1.status == ClaimStatus::no_counterexample);
  CHECK(n1.consistent == n1.instances);
  auto q52 = question_experiment(ClaimId::Q_5_2, a2, params(1, 30));
  CHECK(q52.status == ClaimStatus::no_counterexample);

  auto q51 = question_experiment(ClaimId::Q_5_1, ring("DUAL2"), params(1, 20));
  CHECK(q51.status == ClaimStatus::no_counterexample);
  CHECK(q51.instances > 0);
}

TEST_CASE("undecided premises") {
  auto ng = ring("NG3");
  auto z = falsify_claim(ClaimId::ZAKS, ng, params(1, 10));
  CHECK(z.status == ClaimStatus::premise_undecided);
  CHECK(exit_code(z) == 3);
  CHECK(question_experiment(ClaimId::Q_5_2, ng, params(1, 10)).status == ClaimStatus::premise_undecided);
}

TEST_CASE("construction round trips") {
  for (auto name : {"DUAL2", "A2"}) {
    CAPTURE(name);
    auto rep = construction_roundtrips(ring(name), params(1, 30));
    CHECK(rep.status == ClaimStatus::no_counterexample);
    CHECK(rep.witnesses.empty());
    CHECK(rep.consistent > 0);
  }
}

TEST_CASE("every claim runs on every builtin algebra") {
  for (auto name : builtin_algebra_names()) {
    auto r = ring(name);
    for (auto id : all_claims()) {
      CAPTURE(name);
      CAPTURE(to_string(id));
      auto rep = falsify_claim(id, r, params(1, 8));
      CHECK(rep.status != ClaimStatus::counterexample);
      auto j = report_to_json(rep);
      CHECK(j.at("claim") == to_string(id));
      CHECK(j.at("algebra") == name);
    }
  }
}

TEST_CASE("invalid parameters") {
  auto r = ring("A2");
  CHECK_THROWS_AS(falsify_claim(ClaimId::THM_4_7, r, params(0, 5)), std::invalid_argument);
  auto p = params(1, 5);
  p.k = 0;
  CHECK_THROWS_AS(falsify_claim(ClaimId::PROP_4_4, r, p), std::invalid_argument);
  CHECK_THROWS_AS(falsify_claim(ClaimId::THM_1_4, r, params(-1, 5)), std::invalid_argument);
  CHECK_THROWS_AS(falsify_claim(ClaimId::THM_1_4, r, params(1, 0)), std::invalid_argument);
  p = params(9, 5);
  CHECK_THROWS_AS(falsify_claim(ClaimId::THM_1_4, r, p), std::invalid_argument);
}
