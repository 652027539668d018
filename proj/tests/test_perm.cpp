#include <doctest.h>

#include <set>
#include <stdexcept>

#include "invpath/perm.hpp"
#include "oracles.hpp"

using namespace invpath;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("construction validates bijectivity") {
  CHECK_THROWS_AS(P("1 1"), std::invalid_argument);
  CHECK_THROWS_AS(P("0 1"), std::invalid_argument);
  CHECK_THROWS_AS(P("1 3"), std::invalid_argument);
  CHECK_THROWS_AS(P("1 x"), std::invalid_argument);
  CHECK(P("").size() == 0);
  CHECK(P("5 2 6 4 1 3").str() == "5 2 6 4 1 3");
}

TEST_CASE("group operations") {
  CHECK(P("2 3 1").inverse() == P("3 1 2"));
  CHECK(P("2 3 1").compose(P("3 1 2")) == Permutation::identity(3));
  CHECK(P("2 1 3").compose(P("1 3 2")) == P("2 3 1"));
  CHECK_THROWS_AS(P("2 1").compose(P("1 2 3")), std::invalid_argument);
  CHECK(P("5 2 6 4 1 3").is_involution());
  CHECK_FALSE(P("2 3 1").is_involution());
  CHECK(P("2 1 4 3").is_fpf());
  CHECK_FALSE(P("1 2").is_fpf());
}

TEST_CASE("inversions and visible inversions") {
  const auto s = P("5 2 6 4 1 3");
  const std::vector<Pair> visible{{1, 5}, {2, 5}, {3, 5}, {3, 6}, {4, 5}, {4, 6}};
  CHECK(visible_inversions(s) == visible);
  std::set<Pair> all(visible.begin(), visible.end());
  all.insert({{1, 2}, {1, 4}, {1, 6}, {3, 4}});
  CHECK(inversions(s) == std::vector<Pair>(all.begin(), all.end()));
  CHECK(inversions(s).size() == 10);

  CHECK(inversions(Permutation::identity(5)).empty());
  CHECK(visible_inversions(Permutation::identity(5)).empty());
  CHECK(inversions(P("2 1")) == std::vector<Pair>{{1, 2}});
  // Brute-force scan of the six pairs of 2143.
  CHECK(visible_inversions(P("2 1 4 3")) == std::vector<Pair>{{1, 2}, {3, 4}});
}

TEST_CASE("involution statistics") {
  const Involution s(P("5 2 6 4 1 3"));
  CHECK(s.cycles() == std::vector<Pair>{{1, 5}, {3, 6}});
  CHECK(s.cycle_str() == "(1 5)(3 6)");
  CHECK(s.full_cycle_str() == "(1 5)(2)(3 6)(4)");
  CHECK(statistics(s) == InvolutionStats{10, 2, 6, 4});
  CHECK(statistics(Involution(Permutation::identity(7))) == InvolutionStats{0, 0, 0, 0});
  CHECK(statistics(Involution(P("4 3 2 1"))) == InvolutionStats{6, 2, 4, 2});
  CHECK_THROWS_AS(Involution(P("2 3 1")), std::invalid_argument);
  CHECK(Involution::from_cycles(11, {{1, 10}, {2, 4}, {5, 9}, {6, 11}}).perm() ==
        P("10 4 3 2 9 11 7 8 5 1 6"));
  CHECK_THROWS_AS(Involution::from_cycles(4, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("visible inversions count ℓ̂ and contain Cyc") {
  for (int n = 0; n <= 9; ++n) {
    for (const auto& s : all_involutions(n)) {
      const auto vis = visible_inversions(s.perm());
      CHECK(static_cast<int>(vis.size()) == statistics(s).lhat);
      const std::set<Pair> vs(vis.begin(), vis.end());
      for (const auto& c : s.cycles()) CHECK(vs.count(c) == 1);
    }
  }
}

TEST_CASE("FPF statistics") {
  for (int size = 0; size <= 12; size += 2) {
    for (const auto& t : all_fpf_involutions(size)) {
      const auto st = statistics(t);
      CHECK(st.cycles == size / 2);
      CHECK(st.lhat_fpf == st.lhat - size / 2);
    }
  }
}

TEST_CASE("enumeration counts and order") {
  const std::vector<uint64_t> involutions{1, 1, 2, 4, 10, 26, 76, 232};
  for (int n = 0; n <= 7; ++n) {
    uint64_t brute = 0;
    for (const auto& w : oracle::permutations(n)) brute += oracle::is_involution(w);
    CHECK(brute == involutions[n]);
    CHECK(count(PermKind::involutions, n) == involutions[n]);
    CHECK(all(PermKind::involutions, n).size() == involutions[n]);
  }
  CHECK(all(PermKind::fpf_involutions, 4) ==
        std::vector<Permutation>{P("2 1 4 3"), P("3 4 1 2"), P("4 3 2 1")});
  const auto empty = all(PermKind::permutations, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].size() == 0);
  CHECK_THROWS_AS(count(PermKind::fpf_involutions, 5), std::invalid_argument);
  CHECK(count(PermKind::involutions, 20) == 23758664096ULL);
  CHECK(count(PermKind::permutations, 20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(count(PermKind::permutations, 21), std::overflow_error);
}

TEST_CASE("streams match brute-force filters in lexicographic order") {
  for (int n = 0; n <= 7; ++n) {
    std::vector<Permutation> inv, fpf, perms;
    for (const auto& w : oracle::permutations(n)) {
      Permutation p(w);
      perms.push_back(p);
      if (p.is_involution()) {
        inv.push_back(p);
        if (p.is_fpf()) fpf.push_back(p);
      }
    }
    CHECK(all(PermKind::permutations, n) == perms);
    CHECK(all(PermKind::involutions, n) == inv);
    if (n % 2 == 0) CHECK(all(PermKind::fpf_involutions, n) == fpf);
  }
}

TEST_CASE("shards partition the stream") {
  for (auto kind : {PermKind::permutations, PermKind::involutions, PermKind::fpf_involutions}) {
    const int n = 8;
    const auto whole = all(kind, n);
    const uint64_t total = count(kind, n);
    for (uint64_t shards : {1u, 3u, 7u}) {
      std::vector<Permutation> joined;
      for (uint64_t s = 0; s < shards; ++s) {
        PermStream stream(kind, n, total * s / shards, total * (s + 1) / shards);
        while (auto p = stream.next()) joined.push_back(*p);
      }
      CHECK(joined == whole);
    }
    for (uint64_t idx = 0; idx < total; idx += 37) CHECK(unrank(kind, n, idx) == whole[idx]);
    CHECK_THROWS_AS(unrank(kind, n, total), std::out_of_range);
  }
}
