#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "pat/json_io.hpp"
#include "pat/oracle.hpp"
#include "pat/verify.hpp"

using namespace pat;
using namespace pat::oracle;
using tests::R;

TEST_CASE("splitmix64 streams are reproducible") {
  SplitMix64 a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 100; ++i) {
    std::uint64_t va = a.next();
    all_equal = all_equal && va == b.next();
    any_diff = any_diff || va != c.next();
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("weight generator: determinism, shape, and coverage") {
  TrialConfig cfg{7, 10, 4, 1};
  CHECK(random_weight_sequence(3, cfg) == random_weight_sequence(3, cfg));

  SplitMix64 rng(99);
  std::set<std::string> seen;
  for (int i = 0; i < 200; ++i) {
    WeightSequence w = random_weight_sequence(2, rng, 1);
    for (std::size_t t = 1; t < w.horizon(); ++t) CHECK(w.at(t) >= w.at(t + 1));
    seen.insert(to_string(w.at(1)) + "," + to_string(w.at(2)));
  }
  // the whole unit grid shows up: ties, zero tails, all-zero
  CHECK(seen == std::set<std::string>{"0,0", "1,0", "1,1"});
}

TEST_CASE("discount generator stays strictly positive and decreasing") {
  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    DiscountSequence d = random_discount_sequence(1 + rng.below(6), rng, 6);
    CHECK(d.at(d.horizon()) > 0);
    for (std::size_t t = 1; t < d.horizon(); ++t) CHECK(d.at(t) >= d.at(t + 1));
  }
}

TEST_CASE("config-seeded generator overloads repeat exactly") {
  TrialConfig cfg{99, 10, 5, 6};
  auto a = random_dominating_pair(5, cfg);
  auto b = random_dominating_pair(5, cfg);
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
}

TEST_CASE("dominating pair generator meets its contract") {
  SplitMix64 rng(77);
  bool saw_equal = false, saw_strict = false;
  for (int i = 0; i < 300; ++i) {
    std::size_t T = 1 + rng.below(6);
    auto [x, y] = random_dominating_pair(T, rng, 6);
    CHECK(x.is_positive());
    CHECK(y.is_positive());
    CHECK(x.total() == y.total());
    CHECK(dominates(x, y).holds);
    (x == y ? saw_equal : saw_strict) = true;
  }
  CHECK(saw_equal);
  CHECK(saw_strict);
}

TEST_CASE("signed dominating pair generator meets its contract") {
  SplitMix64 rng(78);
  bool saw_equal_sums = false, saw_unequal = false;
  for (int i = 0; i < 300; ++i) {
    std::size_t T = 1 + rng.below(6);
    auto [x, y] = random_signed_dominating_pair(T, rng, 6);
    CHECK(dominates(x, y).holds);
    (x.total() == y.total() ? saw_equal_sums : saw_unequal) = true;
  }
  CHECK(saw_equal_sums);
  CHECK(saw_unequal);
}

TEST_CASE("superiority oracle examples") {
  TrialConfig cfg{11, 100, 2, 6};
  CHECK_FALSE(superiority_oracle(tests::prize({"0", "1"}), tests::prize({"1", "0"}), cfg));
  auto run = run_superiority_oracle(tests::prize({"0", "1"}), tests::prize({"1", "0"}), cfg);
  CHECK(run.first_violation->family == "step");
  CHECK(superiority_oracle(tests::golden_x(), tests::golden_y(), cfg));
  CHECK(superiority_oracle(tests::golden_x(), tests::golden_x(), cfg));
}

TEST_CASE("patience oracle examples") {
  TrialConfig cfg{13, 4000, 3, 6};
  CHECK_FALSE(patience_oracle(tests::golden_alpha(), tests::golden_beta(), cfg));
  CHECK(patience_oracle(tests::golden_beta(), tests::golden_beta(), cfg));
  auto run = run_patience_oracle(tests::golden_alpha(), tests::golden_beta(), cfg);
  CHECK(run.instances >= 4000);
  REQUIRE(run.first_violation.has_value());
  // the violating instance is a real definitional violation
  auto eval = evaluate_patience_instance(tests::golden_alpha(), tests::golden_beta(),
                                         run.first_violation->x, run.first_violation->y);
  CHECK_FALSE(eval.holds);
}

TEST_CASE("serenity oracle catches sign failures through negative units") {
  // beta - alpha = (1/2, -1/4): decreasing but negative, invisible to
  // equal-sum instances
  DiscountSequence alpha({R("1"), R("1/2")});
  DiscountSequence beta({R("3/2"), R("1/4")});
  TrialConfig cfg{17, 100, 2, 6};
  auto run = run_serenity_oracle(alpha, beta, cfg);
  REQUIRE_FALSE(run.ok);
  CHECK(run.first_violation->family == "negative-unit");
  CHECK_FALSE(is_more_serene(alpha, beta).holds);
}

TEST_CASE("relation properties on exhaustive grids") {
  auto two = exhaustive_relation_check(2, 4);
  CHECK(two.ok);
  CHECK(two.sequences == 10);
  CHECK(two.violations == 0);
  CHECK(two.transitivity_checked > 0);

  auto three = exhaustive_relation_check(3, 3);
  CHECK(three.ok);
  CHECK(three.sequences == 10);
  CHECK(three.violations == 0);
}

TEST_CASE("relation property suite") {
  TrialConfig cfg{23, 60, 5, 6};
  auto rep = relation_property_suite(cfg);
  CHECK(rep.ok);
  CHECK(rep.violations == 0);
  CHECK(rep.transitivity_checked > 0);
  CHECK(rep.antisymmetry_checked > 0);
}

TEST_CASE("verify suites pass and reports are byte-for-byte reproducible") {
  TrialConfig cfg{42, 40, 4, 4};
  VerifyReport first = run_verify(cfg, "all");
  CHECK(first.pass);
  REQUIRE(first.suites.size() == 4);
  for (const auto& s : first.suites) {
    INFO(s.name << ": " << s.detail);
    CHECK(s.pass);
  }
  VerifyReport second = run_verify(cfg, "all");
  CHECK(verify_report_to_json(first).dump() == verify_report_to_json(second).dump());

  CHECK(run_verify(cfg, "patience").suites.size() == 1);
  CHECK_THROWS_AS(run_verify(cfg, "bogus"), std::invalid_argument);
}
