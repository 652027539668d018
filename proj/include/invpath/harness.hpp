#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invpath/qpoly.hpp"

namespace invpath {

/// One checked identity. For polynomial identities `left` and `right` are the
/// two sides. For exhaustive property checks `left` is the number of objects
/// examined and `right` the number that satisfied the property, both as
/// constants, so `equal` still means "holds everywhere".
struct VerificationReport {
  std::string identity;
  int n = 0;
  std::optional<int> k;
  QPoly left;
  QPoly right;
  bool equal = false;
  /// First counterexample when `equal` is false.
  std::string witness;
  double elapsed_ms = 0;
  unsigned shards = 1;
};

/// Deterministic JSON-lines record. Timing and shard count are not part of it,
/// so the bytes depend only on the identity and its parameters.
std::string to_json_line(const VerificationReport& r);
/// Human-readable one-liner including timing.
std::string summary_line(const VerificationReport& r);

class GuardExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct RunOptions {
  unsigned shards = 0;  // 0: available parallelism
  bool force = false;   // allow n above the default ceiling
};

/// Default ceiling per verify target; exceeding it needs RunOptions::force.
int default_ceiling(const std::string& target);
/// Rough size and time estimate for running `target` at n.
std::string estimate(const std::string& target, int n);

VerificationReport verify_theorem_main(int n, const RunOptions& opts = {});
VerificationReport verify_recurrence(int n, const RunOptions& opts = {});
/// Σ_{D_2n} H against q^n [2n-1]_q!!, the FPF enumeration, and Σ H̃.
std::vector<VerificationReport> verify_corollary_fpf(int n, const RunOptions& opts = {});
VerificationReport verify_blm(int n, const RunOptions& opts = {});
/// Σ watson_weight against [2n-1]_q!!, plus the per-path check
/// q^n · watson_weight(δ) == H[δ;q].
std::vector<VerificationReport> verify_watson(int n, const RunOptions& opts = {});
/// Both sums of the q-binomial identity for every 0 <= k <= n.
std::vector<VerificationReport> verify_deodhar(int n, const RunOptions& opts = {});
/// Fair permutations of length 2n against ((2n-1)!!)^2.
VerificationReport verify_census(int n, const RunOptions& opts = {});
/// Exhaustive structural checks (bijections, statistics, orders, dinner game).
/// Each check runs at min(n, its own ceiling); the report's n is the size used.
std::vector<VerificationReport> verify_structure(int n, const RunOptions& opts = {});

/// Dispatch by CLI target name: main, fpf, blm, watson, deodhar, structure,
/// census. `main` also emits the recurrence check.
std::vector<VerificationReport> run_target(const std::string& target, int n, const RunOptions& opts);

}  // namespace invpath
