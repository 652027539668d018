#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "invpath/order.hpp"
#include "invpath/paths.hpp"
#include "oracles.hpp"

using namespace invpath;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
Involution I(int n, std::vector<Pair> cycles) { return Involution::from_cycles(n, cycles); }

// Cover pairs as cycle strings, for readable goldens.
std::set<std::pair<std::string, std::string>> named_covers(const Poset& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [lo, hi] : p.covers) out.emplace(p.elements[lo].cycle_str(), p.elements[hi].cycle_str());
  return out;
}

bool contains(const std::vector<Involution>& v, const Involution& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("bruhat_leq against the closure oracle") {
  for (int n = 0; n <= 5; ++n) {
    const auto perms = oracle::permutations(n);
    const auto leq = oracle::bruhat_by_closure(n);
    bool agree = true;
    for (size_t x = 0; x < perms.size(); ++x)
      for (size_t y = 0; y < perms.size(); ++y)
        agree = agree && bruhat_leq(Permutation(perms[x]), Permutation(perms[y])) == leq[x][y];
    CHECK(agree);
  }
  CHECK(bruhat_leq(P("2 1 4 3"), P("3 4 1 2")));
  CHECK_FALSE(bruhat_leq(P("3 2 1 4"), P("2 1 4 3")));
  CHECK_FALSE(bruhat_leq(P("2 1 4 3"), P("3 2 1 4")));
  CHECK_THROWS_AS(bruhat_leq(P("1 2"), P("1 2 3")), std::invalid_argument);
}

TEST_CASE("Hasse diagram of I_4") {
  const Poset p = induced_poset(PosetKind::involutions, 4);
  REQUIRE(p.size() == 10);
  std::vector<int> profile(5, 0);
  for (int r : p.rank) ++profile.at(r);
  CHECK(profile == std::vector<int>{1, 3, 3, 2, 1});

  const std::set<std::pair<std::string, std::string>> drawn{
      {"()", "(1 2)"},           {"()", "(2 3)"},           {"()", "(3 4)"},
      {"(1 2)", "(1 3)"},        {"(1 2)", "(1 2)(3 4)"},   {"(2 3)", "(1 3)"},
      {"(2 3)", "(2 4)"},        {"(3 4)", "(1 2)(3 4)"},   {"(3 4)", "(2 4)"},
      {"(1 3)", "(1 4)"},        {"(1 3)", "(1 3)(2 4)"},   {"(1 2)(3 4)", "(1 4)"},
      {"(1 2)(3 4)", "(1 3)(2 4)"}, {"(2 4)", "(1 4)"},     {"(2 4)", "(1 3)(2 4)"},
      {"(1 4)", "(1 4)(2 3)"},   {"(1 3)(2 4)", "(1 4)(2 3)"}};
  CHECK(drawn.size() == 17);
  CHECK(named_covers(p) == drawn);
  for (auto [lo, hi] : p.covers) CHECK(p.rank[hi] == p.rank[lo] + 1);
  CHECK(p.rank_generating_function() == QPoly{1, 3, 3, 2, 1});
  CHECK(p.index_of(I(4, {})) == 0);
  CHECK(p.index_of(I(4, {{1, 4}, {2, 3}})) >= 0);
}

TEST_CASE("covers of I_4 agree with the closure oracle") {
  const auto perms = oracle::permutations(4);
  const auto leq = oracle::bruhat_by_closure(4);
  std::vector<size_t> inv;
  for (size_t x = 0; x < perms.size(); ++x)
    if (oracle::is_involution(perms[x])) inv.push_back(x);
  std::set<std::pair<std::string, std::string>> covers;
  for (size_t a : inv)
    for (size_t b : inv) {
      if (a == b || !leq[a][b]) continue;
      bool cover = true;
      for (size_t c : inv)
        if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
      if (cover) covers.emplace(Involution(Permutation(perms[a])).cycle_str(),
                                Involution(Permutation(perms[b])).cycle_str());
    }
  CHECK(covers == named_covers(induced_poset(PosetKind::involutions, 4)));
}

TEST_CASE("dashed edges are Bruhat covers but not weak covers") {
  const std::vector<std::pair<Involution, Involution>> dashed{
      {I(4, {{1, 3}}), I(4, {{1, 3}, {2, 4}})},
      {I(4, {{1, 2}, {3, 4}}), I(4, {{1, 4}})},
      {I(4, {{2, 4}}), I(4, {{1, 3}, {2, 4}})}};
  const auto bruhat = named_covers(induced_poset(PosetKind::involutions, 4));
  const auto weak = named_covers(weak_poset(4));
  for (const auto& [lo, hi] : dashed) {
    CHECK(bruhat.count({lo.cycle_str(), hi.cycle_str()}) == 1);
    CHECK(weak.count({lo.cycle_str(), hi.cycle_str()}) == 0);
    CHECK_FALSE(contains(weak_covers(lo), hi));
  }
  CHECK(weak.size() == 14);
  for (const auto& e : weak) CHECK(bruhat.count(e) == 1);
}

TEST_CASE("weak covers") {
  const auto bottom = weak_covers(I(4, {}));
  CHECK(bottom.size() == 3);
  for (auto c : std::vector<Pair>{{1, 2}, {2, 3}, {3, 4}}) CHECK(contains(bottom, I(4, {c})));

  const auto mid = weak_covers(I(4, {{1, 2}, {3, 4}}));
  CHECK(contains(mid, I(4, {{1, 3}, {2, 4}})));
  CHECK_FALSE(contains(mid, I(4, {{1, 4}})));
  CHECK(weak_covers(I(4, {{1, 4}, {2, 3}})).empty());
}

TEST_CASE("the six local moves of the weak order") {
  struct Move {
    Involution tau, sigma;
  };
  const std::vector<Move> moves{
      {I(2, {}), I(2, {{1, 2}})},                          // two fixed points join
      {I(3, {{1, 2}}), I(3, {{1, 3}})},                    // arc end slides right over a fixed point
      {I(3, {{2, 3}}), I(3, {{1, 3}})},                    // arc start slides left over a fixed point
      {I(4, {{1, 2}, {3, 4}}), I(4, {{1, 3}, {2, 4}})},    // end and start swap
      {I(4, {{1, 3}, {2, 4}}), I(4, {{1, 4}, {2, 3}})},    // two ends swap
      {I(4, {{1, 3}, {2, 4}}), I(4, {{1, 4}, {2, 3}})}};   // two starts swap (at i = 1)
  for (const auto& m : moves) {
    CAPTURE(m.tau.cycle_str());
    CHECK(contains(weak_covers(m.tau), m.sigma));
    CHECK(h_stat(biane(m.sigma)) == h_stat(biane(m.tau)) + 1);
  }
  // The last two are the same pair reached by different s_i: check both.
  const Involution t = I(4, {{1, 3}, {2, 4}});
  const Permutation s1 = P("2 1 3 4"), s3 = P("1 2 4 3");
  CHECK(s1.compose(t.perm()).compose(s1) == I(4, {{1, 4}, {2, 3}}).perm());
  CHECK(s3.compose(t.perm()).compose(s3) == I(4, {{1, 4}, {2, 3}}).perm());
}

TEST_CASE("weak order: covers inside Bruhat covers, H goes up by one, graded") {
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    const Poset b = induced_poset(PosetKind::involutions, n);
    const Poset w = weak_poset(n);
    std::set<std::pair<int, int>> bc(b.covers.begin(), b.covers.end());
    bool inside = true, h_ok = true;
    for (auto [lo, hi] : w.covers) {
      inside = inside && bc.count({b.index_of(w.elements[lo]), b.index_of(w.elements[hi])});
      h_ok = h_ok && h_stat(biane(w.elements[hi])) == h_stat(biane(w.elements[lo])) + 1;
    }
    CHECK(inside);
    CHECK(h_ok);
    CHECK(w.rank_generating_function() == b.rank_generating_function());
    // Every non-bottom element is covered by something.
    std::vector<bool> has_lower(static_cast<size_t>(w.size()), false);
    for (auto [lo, hi] : w.covers) has_lower[hi] = true;
    int minimal = 0;
    for (int x = 0; x < w.size(); ++x) minimal += !has_lower[x];
    CHECK(minimal == 1);
  }
}

TEST_CASE("induced posets are graded") {
  for (int n = 0; n <= 7; ++n) {
    const Poset p = induced_poset(PosetKind::involutions, n, 2);
    bool graded = true;
    for (auto [lo, hi] : p.covers) graded = graded && p.rank[hi] == p.rank[lo] + 1;
    CHECK(graded);
    CHECK(p.rank_generating_function() == rank_gen(RankGenKind::recurrence, n));
  }
  for (int size = 0; size <= 8; size += 2) {
    const Poset p = induced_poset(PosetKind::fpf, size);
    bool graded = true;
    for (auto [lo, hi] : p.covers) graded = graded && p.rank[hi] == p.rank[lo] + 1;
    CHECK(graded);
    CHECK(p.rank_generating_function() == rank_gen(RankGenKind::closed_form_fpf, size / 2));
  }
  const Poset f4 = induced_poset(PosetKind::fpf, 4);
  CHECK(named_covers(f4) == std::set<std::pair<std::string, std::string>>{
                                {"(1 2)(3 4)", "(1 3)(2 4)"}, {"(1 3)(2 4)", "(1 4)(2 3)"}});
  CHECK_THROWS_AS(induced_poset(PosetKind::fpf, 3), std::invalid_argument);
  CHECK_THROWS_AS(induced_poset(PosetKind::involutions, 13), std::out_of_range);
}

TEST_CASE("rank generating functions") {
  CHECK(rank_gen(RankGenKind::involutions, 4) == QPoly{1, 3, 3, 2, 1});
  CHECK(rank_gen(RankGenKind::fpf, 2) == QPoly{1, 1, 1});
  CHECK(rank_gen(RankGenKind::closed_form_fpf, 0) == QPoly{1});
  CHECK(rank_gen(RankGenKind::recurrence, 0) == QPoly{1});
  CHECK(rank_gen(RankGenKind::recurrence, 1) == QPoly{1});
  for (int n = 0; n <= 10; ++n) {
    CHECK(rank_gen(RankGenKind::involutions, n) == rank_gen(RankGenKind::recurrence, n));
    CHECK(rank_gen(RankGenKind::involutions, n).eval(1) == static_cast<int64_t>(count(PermKind::involutions, n)));
  }
  for (int n = 0; n <= 5; ++n) CHECK(rank_gen(RankGenKind::fpf, n) == rank_gen(RankGenKind::closed_form_fpf, n));
  CHECK_THROWS_AS(rank_gen(RankGenKind::involutions, -1), std::invalid_argument);
}

TEST_CASE("DOT export") {
  const std::string dot = export_dot(induced_poset(PosetKind::involutions, 3), "bruhat");
  CHECK(dot ==
        "digraph bruhat {\n"
        "  rankdir=BT;\n"
        "  node [shape=plaintext];\n"
        "  n0 [label=\"(1)(2)(3)\"];\n"
        "  n1 [label=\"(1)(2 3)\"];\n"
        "  n2 [label=\"(1 2)(3)\"];\n"
        "  n3 [label=\"(1 3)(2)\"];\n"
        "  { rank=same; n0; }\n"
        "  { rank=same; n1; n2; }\n"
        "  { rank=same; n3; }\n"
        "  n0 -> n1;\n"
        "  n0 -> n2;\n"
        "  n1 -> n3;\n"
        "  n2 -> n3;\n"
        "}\n");
  CHECK(export_dot(induced_poset(PosetKind::involutions, 5)) ==
        export_dot(induced_poset(PosetKind::involutions, 5, 3)));
}
