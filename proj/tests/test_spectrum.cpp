#include <algorithm>
#include <fstream>

#include "chain_mutations.hpp"
#include "doctest.h"
#include "gasket/errors.hpp"
#include "gasket/report.hpp"
#include "gasket/tables.hpp"

using namespace gasket;

namespace {

bool same_step(const SpectrumStep& a, const SpectrumStep& b) {
  return a.index == b.index && a.F == b.F && a.D_F == b.D_F && a.F_tilde == b.F_tilde &&
         a.t1 == b.t1 && a.t2 == b.t2 && a.K == b.K && a.bound_provenance == b.bound_provenance;
}

bool covers(const ChainReport& r, double lo, double hi) {
  return std::any_of(r.covered.begin(), r.covered.end(),
                     [&](const auto& iv) { return iv.first <= lo && hi <= iv.second; });
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("closed-form threshold at the full-system step") {
  CHECK(closed_form_threshold(1.3057, 5.900319) == 454);
  CHECK(closed_form_holds(1.3057, 5.900319, 454));
  CHECK(!closed_form_holds(1.3057, 5.900319, 453));
  CHECK(closed_form_holds(1.3057, 5.900319, 10'000));
  CHECK(closed_form_threshold(0.8261, 4.3655) == 8);
  CHECK_THROWS_AS(closed_form_threshold(0.5, 5.900319), TailDiverges);
  CHECK_THROWS_AS(closed_form_threshold(1.3057, 5.900319, 300), ClosedFormNeverHolds);
}

TEST_CASE("direct tail check: M >= 27 passes, 26 does not") {
  const TailVerdict ok = check_tail_condition(1.3057, 5.900319, 27);
  CHECK(ok.passed);
  CHECK(ok.N_closed_form == 454);
  CHECK(ok.directly_verified == 454 - 27);
  CHECK(ok.worst_ratio >= 1.0);
  const TailVerdict bad = check_tail_condition(1.3057, 5.900319, 26);
  CHECK(!bad.passed);
  CHECK(bad.first_failing_M == 26);
  CHECK(check_tail_condition(1.3057, 5.900319, 500).passed);  // closed form alone
  CHECK_THROWS_AS(check_tail_condition(0.5, 5.900319, 27), TailDiverges);
  CHECK_THROWS_AS(check_tail_condition(1.3, 5.900319, 0), std::invalid_argument);
}

TEST_CASE("a pass carries over to smaller t2 above the reuse floor") {
  const TailVerdict v = check_tail_condition(1.3057, 5.900319, 27);
  REQUIRE(v.passed);
  CHECK(v.reuse_floor == 0.5);
  CHECK(check_tail_condition(1.3057 - 0.05, 5.900319, 27).passed);
  CHECK(check_tail_condition(1.0, 5.900319, 27).passed);
}

TEST_CASE("small-alphabet steps") {
  CHECK(check_tail_condition(0.8261, 4.3655, 6).passed);
  CHECK(check_tail_condition(0.8265, 4.3655, 6).passed);
  CHECK(check_tail_condition(1.036, 4.3655, 6).passed);
}

TEST_CASE("canonical chain with published bounds") {
  AssumedProvider p;
  const ChainReport r = run_chain(canonical_steps(), p);
  CHECK(r.passed == 18);
  CHECK(r.all_passed());
  CHECK(r.gaps.empty());
  REQUIRE(r.covered.size() == 1);
  CHECK(r.covered[0].first == 0.459);
  CHECK(r.covered[0].second == 1.3057);
  CHECK(r.reaches_half);
  // With [0, 1/2) from the infinite-alphabet argument, [0, 1.3057] is covered.
  CHECK(r.assumes_mu_segment);
  CHECK(r.final_claim.first <= 0.5);
}

TEST_CASE("single-field mutations flip the row") {
  AssumedProvider p;
  const auto steps = canonical_steps();
  for (const SpectrumStep& s : steps) {
    CAPTURE(s.index);
    REQUIRE(check_step(s, p).passed);
    CHECK(!check_step(mutations::t2_above_D(s), p).passed);
    CHECK(!check_step(mutations::wrong_K(s), p).passed);
    if (auto m = mutations::shrunk_F_tilde(s)) CHECK(!check_step(*m, p).passed);
  }
}

TEST_CASE("rows 17 and 18 accept 4.3655 but not a smaller K") {
  AssumedProvider p;
  const auto steps = canonical_steps();
  CHECK(steps[16].K == 4.3655);
  CHECK(steps[17].K == 4.3655);
  SpectrumStep s = steps[0];
  s.K = 4.3655;  // F = N includes n = 1, 2
  const Certificate c = check_step(s, p);
  CHECK(!c.passed);
  CHECK(!c.check_tail.K_certified);
}

TEST_CASE("deleting a row opens a gap") {
  AssumedProvider p;
  auto steps = canonical_steps();
  steps.erase(steps.begin() + 6);  // row 7: [1.2700, 1.2775]
  const ChainReport r = run_chain(steps, p);
  REQUIRE(r.gaps.size() == 1);
  CHECK(r.gaps[0].first == 1.27);
  CHECK(r.gaps[0].second == 1.2775);
  CHECK(r.final_claim.first == 1.2775);
  CHECK(!r.reaches_half);
}

TEST_CASE("single-row chain") {
  AssumedProvider p;
  const ChainReport r = run_chain({canonical_steps()[0]}, p);
  CHECK(r.passed == 1);
  REQUIRE(r.covered.size() == 1);
  CHECK(r.covered[0] == std::make_pair(1.3001, 1.3057));
  CHECK(!r.reaches_half);
}

TEST_CASE("malformed steps are flagged") {
  AssumedProvider p;
  SpectrumStep s = canonical_steps()[4];
  s.F_tilde = Subsystem::finite({1, 2, 3});  // not F cut at 3
  const Certificate c = check_step(s, p);
  CHECK(!c.wellformed.passed);
  CHECK(!c.passed);
  SpectrumStep t = canonical_steps()[0];
  std::swap(t.t1, t.t2);
  CHECK(!check_step(t, p).wellformed.passed);
}

TEST_CASE("step JSON round trip and the shipped file") {
  const auto steps = canonical_steps();
  const auto back = steps_from_json(steps_to_json(steps));
  REQUIRE(back.size() == steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) CHECK(same_step(steps[i], back[i]));

  const auto shipped = load_steps(std::string(GASKET_DATA_DIR) + "/table1_steps.json");
  REQUIRE(shipped.size() == steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) CHECK(same_step(steps[i], shipped[i]));

  CHECK_THROWS_AS(steps_from_json(Json::parse(R"([{"index": 1}])")), ParseError);
  CHECK_THROWS_AS(steps_from_json(Json::parse(R"({"not": "an array"})")), ParseError);
  CHECK_THROWS(load_steps("/nonexistent/steps.json"));
}

TEST_CASE("corrected file raises the {3,4,5} endpoint") {
  const auto fixed = load_steps(std::string(GASKET_DATA_DIR) + "/table1_steps_corrected.json");
  REQUIRE(fixed.size() == 18);
  CHECK(fixed[16].t1 == 0.8265);
  CHECK(fixed[17].t2 == 0.8265);
  AssumedProvider p;
  const ChainReport r = run_chain(fixed, p);
  CHECK(r.passed == 18);
  CHECK(covers(r, 0.459, 1.3057));
}

TEST_CASE("published tables") {
  CHECK(lookup(published_upper_estimates(), Subsystem::finite({5})) == 0.4581);
  CHECK(lookup(published_upper_estimates(), Subsystem::finite({3, 4, 5})) == 0.8261);
  CHECK(lookup(published_lower_estimates(), Subsystem::all()) == 1.3057);
  CHECK(!lookup(published_upper_estimates(), Subsystem::finite({7})));
  CHECK(published_upper_estimates().size() == 18);
}

}  // TEST_SUITE
