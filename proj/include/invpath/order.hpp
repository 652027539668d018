#pragma once

#include <string>
#include <utility>
#include <vector>

#include "invpath/perm.hpp"
#include "invpath/qpoly.hpp"

namespace invpath {

/// Bruhat comparison on S_n by the dominance criterion: a <= b iff for all
/// i, k: #{j <= i : a(j) >= k} <= #{j <= i : b(j) >= k}.
bool bruhat_leq(const Permutation& a, const Permutation& b);

/// A finite poset of involutions with its cover relation and rank function.
struct Poset {
  std::vector<Involution> elements;
  /// (lower, upper) index pairs into `elements`, sorted.
  std::vector<std::pair<int, int>> covers;
  std::vector<int> rank;

  int size() const { return static_cast<int>(elements.size()); }
  /// Index of `s` in `elements`, or -1.
  int index_of(const Involution& s) const;
  /// Rank generating function Σ q^{rank}.
  QPoly rank_generating_function() const;
};

enum class PosetKind { involutions, fpf };

/// Hard ceilings on induced_poset: n <= 12 for involutions, size <= 14 for FPF.
inline constexpr int kMaxPosetInvolutions = 12;
inline constexpr int kMaxPosetFpf = 14;

/// The Bruhat order restricted to I_n (kind involutions, ranked by ℓ̂) or to
/// the FPF involutions of size n (kind fpf, ranked by ℓ̂^FPF). Covers are the
/// transitive reduction of bruhat_leq on the subset; ranks are the statistic,
/// not derived from the covers, so gradedness remains a checkable property.
Poset induced_poset(PosetKind kind, int n, unsigned threads = 0);

/// Weak-order covers of τ: for each i in [n-1], σ = s_i τ s_i when that differs
/// from τ, else σ = s_i τ; σ is kept iff ℓ̂(σ) = ℓ̂(τ) + 1.
std::vector<Involution> weak_covers(const Involution& t);

/// (I_n, <=_W) with ranks ℓ̂.
Poset weak_poset(int n);

enum class RankGenKind { involutions, fpf, recurrence, closed_form_fpf };

/// involutions(n): Σ_{I_n} q^{ℓ̂}. fpf(n): Σ over FPF involutions of size 2n of
/// q^{ℓ̂^FPF}. recurrence(n): R_n = R_{n-1} + q[n-1]_q R_{n-2}.
/// closed_form_fpf(n): [2n-1]_q!!.
QPoly rank_gen(RankGenKind kind, int n);

/// Graphviz digraph with cycle-notation labels, edges lower -> upper and one
/// rank=same cluster per rank level. Output depends only on the poset.
std::string export_dot(const Poset& p, const std::string& name = "poset");

}  // namespace invpath
