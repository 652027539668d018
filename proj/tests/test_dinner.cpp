#include <doctest.h>

#include <set>
#include <stdexcept>

#include "invpath/dinner.hpp"

using namespace invpath;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

const Permutation kGolden = Permutation::parse("9 4 3 2 8 10 7 5 1 6");

std::vector<LabelRule> all_rules() {
  std::vector<LabelRule> out;
  for (auto side : {LabelRule::Side::earlier, LabelRule::Side::later})
    for (auto cmp : {LabelRule::Cmp::greater, LabelRule::Cmp::less})
      for (auto src : {LabelRule::Source::values, LabelRule::Source::inverse})
        out.push_back({side, cmp, src});
  return out;
}

std::vector<int> values(const std::map<int, int>& labels) {
  std::vector<int> out;
  for (auto [pos, lab] : labels) out.push_back(lab);
  return out;
}

}  // namespace

TEST_CASE("golden allocation") {
  const Allocation a = allocate(kGolden);
  CHECK(a.str() == "AABBAAABBB");
  CHECK(a.alice_set() == std::vector<int>{1, 2, 5, 6, 7});
  // Alice eats leftmost-first in reverse crossout order; Bob eats his largest values first.
  CHECK(a.alice_order == std::vector<int>{7, 6, 5, 2, 1});
  CHECK(a.bob_order == std::vector<int>{10, 8, 3, 4, 9});

  const DeltaPaths d = delta_paths(kGolden);
  CHECK(d.delta_a.str() == "UUUDUUDDDD;2,4,2,1,1");
  CHECK(d.delta_a_printed.str() == "UUUDUUDDDD;1,1,2,4,2");
  CHECK(d.delta_b.str() == "UUUDDUUUDDDD;3,2,2,1,1");
  CHECK(d.delta_b_hat.str() == "UUDDUUUDDD;3,2,2,1,1");
  CHECK(d.delta_b_hat.labels == std::map<int, int>{{3, 3}, {4, 2}, {8, 2}, {9, 1}, {10, 1}});
  CHECK(d.delta_a.is_dyck_shape());
  CHECK(d.delta_b.is_dyck_shape());  // the closing D carries no label
  CHECK_FALSE(d.delta_b_hat.is_labeled_dyck());
}

TEST_CASE("two-morsel games") {
  CHECK(allocate(P("2 1")).str() == "AB");
  CHECK(allocate(P("1 2")).str() == "BA");
  CHECK(allocate_bob_first(P("1 2")).str() == "AB");
  CHECK(allocate_bob_first(P("2 1")).str() == "AB");

  const DeltaPaths d = delta_paths(P("2 1"));
  CHECK(d.delta_a.str() == "UD;1");
  CHECK(d.delta_b.str() == "UUDD;1");
  CHECK(d.delta_b_hat.str() == "UD;1");
  CHECK(is_fair(P("2 1")));
  CHECK_FALSE(is_fair(P("1 2")));
  CHECK(k_fairness(P("1 2")) == 1);

  CHECK_THROWS_AS(allocate(P("1 2 3")), std::invalid_argument);
  CHECK_THROWS_AS(delta_paths(P("1")), std::invalid_argument);
  CHECK_THROWS_AS(count_fair(3), std::invalid_argument);
  CHECK_THROWS_AS(count_fair(12), std::out_of_range);
}

TEST_CASE("no label rule reproduces the drawn labels; one rule is exact on FPF involutions") {
  const std::vector<int> drawn{2, 3, 2, 1, 1};
  const DeltaPaths golden = delta_paths(kGolden);
  std::set<std::string> match_drawn, match_phi, exact_iff;
  for (const LabelRule& rule : all_rules()) {
    if (values(lambda_a(kGolden, golden.delta_a.steps, rule)) == drawn) match_drawn.insert(to_string(rule));
    bool phi = true, iff = true;
    for (int size = 2; size <= 8; size += 2) {
      for (const auto& p : all(PermKind::permutations, size)) {
        const DeltaPaths d = delta_paths(p);
        StepWord a{d.delta_a.steps, lambda_a(p, d.delta_a.steps, rule)};
        const bool fpf = p.is_involution() && p.is_fpf();
        iff = iff && ((a == d.delta_b_hat) == fpf);
        if (fpf) {
          const LabeledPath lp = biane(Involution(p));
          phi = phi && a.steps == lp.path().steps() && a.labels == lp.labels();
        }
      }
    }
    if (phi) match_phi.insert(to_string(rule));
    if (iff) exact_iff.insert(to_string(rule));
  }
  CHECK(match_drawn.empty());
  CHECK(match_phi == std::set<std::string>{"later/less/pi", "later/less/pi-inverse"});
  CHECK(exact_iff == std::set<std::string>{to_string(kCalibratedLabelRule)});
  CHECK(to_string(kPrintedLabelRule) == "earlier/greater/pi-inverse");
}

TEST_CASE("fairness criterion agrees with simulation") {
  for (int size = 0; size <= 8; size += 2) {
    CAPTURE(size);
    uint64_t fair = 0;
    bool agree = true;
    for (const auto& p : all(PermKind::permutations, size)) {
      const bool f = is_fair(p);
      agree = agree && f == is_fair_simulated(p);
      fair += f;
    }
    CHECK(agree);
    const std::vector<uint64_t> expected{1, 1, 9, 225, 11025};
    CHECK(fair == expected[size / 2]);
    CHECK(count_fair(size, 10, 3) == fair);
  }
}

TEST_CASE("shape alone is not the fairness criterion") {
  // Dyck-shaped δ̂^B with a label above its height still loses Alice a morsel.
  int mismatches = 0;
  for (const auto& p : all(PermKind::permutations, 4)) {
    const DeltaPaths d = delta_paths(p);
    mismatches += d.delta_b_hat.is_dyck_shape() != is_fair_simulated(p);
  }
  CHECK(mismatches == 3);
}

TEST_CASE("play bundles both games") {
  const DinnerOutcome o = play(kGolden);
  CHECK(o.alice_first.str() == "AABBAAABBB");
  CHECK(o.fair == is_fair_simulated(kGolden));
  CHECK(o.fair == (o.k_fairness == 0));
  CHECK_FALSE(o.fair);
}

TEST_CASE("FPF coincidence") {
  CHECK(fpf_coincidence(P("2 1")));
  CHECK(fpf_coincidence(P("4 3 2 1")));
  CHECK(fpf_coincidence(P("3 4 1 2")));
  CHECK_FALSE(fpf_coincidence(P("1 2")));
  CHECK_FALSE(fpf_coincidence(kGolden));
  for (int size = 0; size <= 8; size += 2) {
    for (const auto& p : all(PermKind::permutations, size)) {
      CHECK(fpf_coincidence(p) == (p.is_involution() && p.is_fpf()));
    }
  }
}
