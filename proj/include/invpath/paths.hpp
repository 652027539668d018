#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invpath/perm.hpp"
#include "invpath/qpoly.hpp"

namespace invpath {

enum class Step : char { U = 'U', L = 'L', D = 'D' };

/// Lattice path of U/L/D steps from the axis back to the axis, never below it.
class MotzkinPath {
 public:
  MotzkinPath() = default;
  /// Throws std::invalid_argument if the word dips below the axis or does not
  /// return to it.
  explicit MotzkinPath(std::vector<Step> steps);
  /// Bare step word, e.g. "UULDUULLDDD".
  static MotzkinPath parse(std::string_view word);

  int size() const { return static_cast<int>(steps_.size()); }
  /// 1-indexed.
  Step operator[](int i) const { return steps_[i - 1]; }
  const std::vector<Step>& steps() const { return steps_; }

  bool is_dyck() const;
  int down_count() const;
  /// 1-indexed positions of the down steps, left to right.
  std::vector<int> down_positions() const;
  /// h_i for i = 1..n: the larger y-coordinate of step i.
  std::vector<int> heights() const;

  std::string str() const;

  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;
  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// A Motzkin path whose down steps carry labels 1 <= λ_i <= h_i. Labels are
/// keyed by step position.
class LabeledPath {
 public:
  LabeledPath() = default;
  /// Throws std::invalid_argument if the label domain differs from the down
  /// steps or a label is out of [1, h_i].
  LabeledPath(MotzkinPath path, std::map<int, int> labels);
  /// Labels listed in left-to-right down-step order.
  LabeledPath(MotzkinPath path, const std::vector<int>& labels_in_order);
  /// "UULDUULLDDD;2,2,1,1". A label-free path may omit the ';'.
  static LabeledPath parse(std::string_view text);

  const MotzkinPath& path() const { return path_; }
  const std::map<int, int>& labels() const { return labels_; }
  std::vector<int> label_values() const;
  int size() const { return path_.size(); }

  std::string str() const;

  friend auto operator<=>(const LabeledPath&, const LabeledPath&) = default;
  friend bool operator==(const LabeledPath&, const LabeledPath&) = default;

 private:
  MotzkinPath path_;
  std::map<int, int> labels_;
};

/// Biane's map restricted to involutions.
LabeledPath biane(const Involution& s);

/// Inverse of biane. A down step labeled λ closes the λ-th leftmost open up
/// step; the open list is scanned linearly, O(n^2) overall.
Involution biane_inverse(const LabeledPath& lp);

/// H(μ, λ) = Σ over down steps of (λ_i - 1) + Σ over other steps of h_i.
int h_stat(const LabeledPath& lp);

/// H[μ;q] = Π [h_i]_q over downs times Π q^{h_i} over the rest.
QPoly h_poly(const MotzkinPath& m);
/// Like h_poly but U steps contribute q^{h_i - 1}.
QPoly h_tilde_poly(const MotzkinPath& m);

struct ClassSplit {
  std::vector<Pair> class1;  // visible inversions (i, j) with i <= σ(i)
  std::vector<Pair> class2;  // visible inversions (i, j) with i > σ(i)
};
ClassSplit class_split(const Involution& s);

/// All Motzkin paths of length n, lexicographic with U < L < D.
std::vector<MotzkinPath> motzkin_paths(int n);
/// All Dyck paths of length `length` (empty when odd), lexicographic with U < D.
std::vector<MotzkinPath> dyck_paths(int length);
/// All admissible labelings of m, lexicographic on the label sequence.
std::vector<LabeledPath> labelings(const MotzkinPath& m);

}  // namespace invpath
