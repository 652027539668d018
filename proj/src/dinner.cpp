#include "invpath/dinner.hpp"

#include <algorithm>
#include <stdexcept>

#include "invpath/parallel.hpp"

namespace invpath {

namespace {

void require_even(const Permutation& p, const char* who) {
  if (p.size() % 2 != 0) {
    throw std::invalid_argument(std::string(who) + ": permutation size " + std::to_string(p.size()) +
                                " is odd");
  }
}

Allocation crossout(const Permutation& p, Player first_crosser) {
  const int size = p.size();
  Allocation a;
  a.owner.assign(static_cast<size_t>(size), Player::A);
  std::vector<bool> taken(static_cast<size_t>(size) + 1, false);
  std::vector<int> alice_crossed, bob_crossed;
  Player turn = first_crosser;
  for (int step = 0; step < size; ++step) {
    int pos = 0;
    if (turn == Player::B) {
      for (int i = 1; i <= size; ++i) {
        if (!taken[i] && (pos == 0 || p(i) < p(pos))) pos = i;
      }
      bob_crossed.push_back(pos);
    } else {
      pos = 1;
      while (taken[pos]) ++pos;
      alice_crossed.push_back(pos);
    }
    taken[pos] = true;
    a.owner[pos - 1] = turn;
    turn = turn == Player::A ? Player::B : Player::A;
  }
  a.alice_order.assign(alice_crossed.rbegin(), alice_crossed.rend());
  a.bob_order.assign(bob_crossed.rbegin(), bob_crossed.rend());
  return a;
}

int excursion_check(const std::vector<Step>& steps, const std::map<int, int>* labels) {
  int y = 0;
  for (size_t i = 0; i < steps.size(); ++i) {
    switch (steps[i]) {
      case Step::U: ++y; break;
      case Step::L: return -1;
      case Step::D:
        if (labels) {
          auto it = labels->find(static_cast<int>(i) + 1);
          if (it == labels->end() || it->second < 1 || it->second > y) return -1;
        }
        if (--y < 0) return -1;
        break;
    }
  }
  return y;
}

}  // namespace

std::vector<int> Allocation::alice_set() const {
  std::vector<int> out(alice_order);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Allocation::str() const {
  std::string out;
  for (Player pl : owner) out.push_back(static_cast<char>(pl));
  return out;
}

Allocation allocate(const Permutation& p) {
  require_even(p, "allocate");
  return crossout(p, Player::B);
}

Allocation allocate_bob_first(const Permutation& p) {
  require_even(p, "allocate_bob_first");
  return crossout(p, Player::A);
}

bool StepWord::is_labeled_dyck() const { return excursion_check(steps, &labels) == 0; }

bool StepWord::is_dyck_shape() const { return excursion_check(steps, nullptr) == 0; }

std::string StepWord::str() const {
  std::string out;
  for (Step s : steps) out.push_back(static_cast<char>(s));
  out.push_back(';');
  bool first = true;
  for (auto [pos, lab] : labels) {
    if (!first) out.push_back(',');
    first = false;
    out += std::to_string(lab);
  }
  return out;
}

std::string to_string(const LabelRule& rule) {
  std::string out = rule.side == LabelRule::Side::earlier ? "earlier" : "later";
  out += rule.cmp == LabelRule::Cmp::greater ? "/greater" : "/less";
  out += rule.source == LabelRule::Source::values ? "/pi" : "/pi-inverse";
  return out;
}

std::map<int, int> lambda_a(const Permutation& p, const std::vector<Step>& delta_a, LabelRule rule) {
  const int size = p.size();
  const Permutation inv = p.inverse();
  const Permutation& x = rule.source == LabelRule::Source::values ? p : inv;
  std::map<int, int> labels;
  for (int i = 1; i <= size; ++i) {
    if (delta_a[i - 1] != Step::D) continue;
    int lambda = 1;
    const int lo = rule.side == LabelRule::Side::earlier ? 1 : i + 1;
    const int hi = rule.side == LabelRule::Side::earlier ? i - 1 : size;
    for (int k = lo; k <= hi; ++k) {
      if (delta_a[k - 1] != Step::D) continue;
      lambda += rule.cmp == LabelRule::Cmp::greater ? x(k) > x(i) : x(k) < x(i);
    }
    labels.emplace(i, lambda);
  }
  return labels;
}

DeltaPaths delta_paths(const Permutation& p) {
  require_even(p, "delta_paths");
  const int size = p.size();
  const Allocation w = allocate(p);
  DeltaPaths out;

  out.delta_a.steps.reserve(size);
  for (int i = 1; i <= size; ++i) {
    out.delta_a.steps.push_back(w.at(p(i)) == Player::A ? Step::D : Step::U);
  }
  out.delta_a.labels = lambda_a(p, out.delta_a.steps, kCalibratedLabelRule);
  out.delta_a_printed.steps = out.delta_a.steps;
  out.delta_a_printed.labels = lambda_a(p, out.delta_a.steps, kPrintedLabelRule);

  // δ̂^B_r is D iff w(r) = B; λ^B counts later Bob positions holding smaller values.
  auto& hat = out.delta_b_hat;
  hat.steps.reserve(size);
  for (int r = 1; r <= size; ++r) hat.steps.push_back(w.at(r) == Player::B ? Step::D : Step::U);
  for (int r = 1; r <= size; ++r) {
    if (hat.steps[r - 1] != Step::D) continue;
    int lambda = 1;
    for (int s = r + 1; s <= size; ++s) {
      lambda += hat.steps[s - 1] == Step::D && p(r) > p(s);
    }
    hat.labels.emplace(r, lambda);
  }

  auto& full = out.delta_b;
  full.steps.push_back(Step::U);
  full.steps.insert(full.steps.end(), hat.steps.begin(), hat.steps.end());
  full.steps.push_back(Step::D);
  for (auto [r, lab] : hat.labels) full.labels.emplace(r + 1, lab);
  return out;
}

DinnerOutcome play(const Permutation& p) {
  DinnerOutcome o;
  o.perm = p;
  o.alice_first = allocate(p);
  o.bob_first = allocate_bob_first(p);
  o.paths = delta_paths(p);
  o.fair = o.paths.delta_b_hat.is_labeled_dyck();
  o.k_fairness = k_fairness(p);
  return o;
}

bool is_fair(const Permutation& p) { return delta_paths(p).delta_b_hat.is_labeled_dyck(); }

bool is_fair_simulated(const Permutation& p) { return k_fairness(p) == 0; }

int k_fairness(const Permutation& p) {
  const auto first = allocate(p).alice_set();
  const auto second = allocate_bob_first(p).alice_set();
  std::vector<int> lost;
  std::set_difference(first.begin(), first.end(), second.begin(), second.end(),
                      std::back_inserter(lost));
  return static_cast<int>(lost.size());
}

uint64_t count_fair(int length, int ceiling, unsigned shards) {
  if (length < 0 || length % 2 != 0) {
    throw std::invalid_argument("count_fair: length must be even and nonnegative, got " +
                                std::to_string(length));
  }
  if (length > ceiling) {
    throw std::out_of_range("count_fair: length " + std::to_string(length) + " exceeds the ceiling " +
                            std::to_string(ceiling));
  }
  const uint64_t total = count(PermKind::permutations, length);
  return sharded_reduce<uint64_t>(total, shards, [&](uint64_t b, uint64_t e) {
    uint64_t fair = 0;
    PermStream stream(PermKind::permutations, length, b, e);
    while (auto p = stream.next()) fair += is_fair(*p);
    return fair;
  });
}

bool fpf_coincidence(const Permutation& p) {
  const DeltaPaths d = delta_paths(p);
  if (!(d.delta_a == d.delta_b_hat)) return false;
  if (p.is_involution() && p.is_fpf()) {
    const LabeledPath phi = biane(Involution(p));
    return d.delta_a.steps == phi.path().steps() && d.delta_a.labels == phi.labels();
  }
  return true;
}

}  // namespace invpath
