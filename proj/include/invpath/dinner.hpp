#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invpath/paths.hpp"
#include "invpath/perm.hpp"

namespace invpath {

enum class Player : char { A = 'A', B = 'B' };

/// Outcome of optimal play, found by the reverse crossout: Bob crosses out the
/// position holding the smallest remaining value, Alice the leftmost remaining
/// position, alternating from the player who moves last.
struct Allocation {
  /// owner[pos - 1] is the player who eats the morsel at position pos.
  std::vector<Player> owner;
  /// Positions in the order each player actually eats them.
  std::vector<int> alice_order;
  std::vector<int> bob_order;

  Player at(int pos) const { return owner[pos - 1]; }
  std::vector<int> alice_set() const;
  std::string str() const;
};

/// Alice moves first. Throws std::invalid_argument on odd size.
Allocation allocate(const Permutation& p);
/// Bob moves first, so Alice makes the first crossout.
Allocation allocate_bob_first(const Permutation& p);

/// A step word with labels on some down steps. Unlike LabeledPath it is not
/// required to be a valid labeled path.
struct StepWord {
  std::vector<Step> steps;
  std::map<int, int> labels;

  /// True iff the word stays weakly above the axis, returns to it, has no L
  /// steps and every label λ at a down step satisfies 1 <= λ <= h.
  bool is_labeled_dyck() const;
  /// Same as is_labeled_dyck but ignoring labels.
  bool is_dyck_shape() const;
  std::string str() const;

  friend bool operator==(const StepWord&, const StepWord&) = default;
};

/// The eight one-count rules for a δ^A label at down step i:
/// 1 + #{k : δ^A_k = D, k on `side` of i, x_k `cmp` x_i} with x = π or π^{-1}.
struct LabelRule {
  enum class Side { earlier, later } side;
  enum class Cmp { greater, less } cmp;
  enum class Source { values, inverse } source;

  friend bool operator==(const LabelRule&, const LabelRule&) = default;
};

/// The rule exactly as printed: earlier down steps with larger π^{-1}.
inline constexpr LabelRule kPrintedLabelRule{LabelRule::Side::earlier, LabelRule::Cmp::greater,
                                             LabelRule::Source::inverse};
/// The rule under which δ^A agrees with Biane's map on FPF involutions and
/// with δ̂^B exactly on them: later down steps with smaller π^{-1}.
inline constexpr LabelRule kCalibratedLabelRule{LabelRule::Side::later, LabelRule::Cmp::less,
                                                LabelRule::Source::inverse};

std::string to_string(const LabelRule& rule);

struct DeltaPaths {
  /// δ^A with calibrated labels; step i is D iff w(π_i) = A.
  StepWord delta_a;
  /// δ^A with the printed label rule.
  StepWord delta_a_printed;
  /// Length 2n+2: U, then D at j iff w(j-1) = B, then a final D. Interior
  /// down steps carry λ^B.
  StepWord delta_b;
  /// δ^B without its first and last step; labels shifted to match.
  StepWord delta_b_hat;
};

std::map<int, int> lambda_a(const Permutation& p, const std::vector<Step>& delta_a, LabelRule rule);
DeltaPaths delta_paths(const Permutation& p);

struct DinnerOutcome {
  Permutation perm;
  Allocation alice_first;
  Allocation bob_first;
  DeltaPaths paths;
  bool fair = false;
  int k_fairness = 0;
};
DinnerOutcome play(const Permutation& p);

/// Fairness by the labeled-Dyck criterion on δ̂^B.
bool is_fair(const Permutation& p);
/// Fairness by comparing Alice's morsels across the two games.
bool is_fair_simulated(const Permutation& p);
/// Number of Alice's first-mover morsels she loses when moving second.
int k_fairness(const Permutation& p);

/// Number of fair permutations of length `length`, by exhaustive sharded
/// enumeration. Throws std::out_of_range above `ceiling`.
uint64_t count_fair(int length, int ceiling = 10, unsigned shards = 0);

/// (δ^A, λ^A) == (δ̂^B, λ^B) under the calibrated labels, and, when p is an
/// FPF involution, both also equal biane(p).
bool fpf_coincidence(const Permutation& p);

}  // namespace invpath
