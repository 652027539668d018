#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace invpath {

/// A pair of 1-indexed positions (i, j), used for inversions and 2-cycles.
using Pair = std::pair<int, int>;

/// Permutation of [n] in one-line notation. Positions and values are 1-indexed.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a bijection on [n].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// Space-separated one-line notation, e.g. "5 2 6 4 1 3".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  std::span<const int> word() const { return word_; }

  Permutation inverse() const;
  /// (*this ∘ other)(i) = (*this)(other(i)).
  Permutation compose(const Permutation& other) const;
  bool is_involution() const;
  bool is_fpf() const;

  std::string str() const;

  /// Lexicographic on one-line words.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

std::vector<Pair> inversions(const Permutation& p);
std::vector<Pair> visible_inversions(const Permutation& p);
int inversion_count(const Permutation& p);

/// A permutation validated to satisfy σ∘σ = id, carrying its 2-cycles.
class Involution {
 public:
  Involution() = default;
  /// Throws std::invalid_argument if `p` is not an involution.
  explicit Involution(Permutation p);

  /// Builds the involution of [n] whose 2-cycles are `cycles`.
  static Involution from_cycles(int n, const std::vector<Pair>& cycles);

  const Permutation& perm() const { return perm_; }
  int size() const { return perm_.size(); }
  int operator()(int i) const { return perm_(i); }
  bool is_fpf() const { return perm_.is_fpf(); }

  /// Cyc(σ) = {(i, j) : i < j = σ(i)}, sorted.
  const std::vector<Pair>& cycles() const { return cycles_; }

  /// "(1 5)(3 6)"; the identity prints as "()".
  std::string cycle_str() const;
  /// Cycle notation including fixed points, "(1 5)(2)(3 6)(4)".
  std::string full_cycle_str() const;

  friend auto operator<=>(const Involution& a, const Involution& b) { return a.perm_ <=> b.perm_; }
  friend bool operator==(const Involution& a, const Involution& b) { return a.perm_ == b.perm_; }

 private:
  Permutation perm_;
  std::vector<Pair> cycles_;
};

struct InvolutionStats {
  int length = 0;    // ℓ
  int cycles = 0;    // c
  int lhat = 0;      // (ℓ + c) / 2
  int lhat_fpf = 0;  // (ℓ - c) / 2

  friend bool operator==(const InvolutionStats&, const InvolutionStats&) = default;
};

InvolutionStats statistics(const Involution& s);

enum class PermKind { permutations, involutions, fpf_involutions };

/// Number of objects of the kind on [n]. fpf_involutions requires even n.
uint64_t count(PermKind kind, int n);

/// The index-th object of the kind in lexicographic order of one-line words.
Permutation unrank(PermKind kind, int n, uint64_t index);

/// Lexicographic stream over a half-open index range [begin, end) of a kind,
/// so disjoint shards partition the full enumeration.
class PermStream {
 public:
  PermStream(PermKind kind, int n);
  PermStream(PermKind kind, int n, uint64_t begin, uint64_t end);

  std::optional<Permutation> next();
  uint64_t size() const { return end_ - begin_; }

 private:
  PermKind kind_;
  int n_;
  uint64_t begin_;
  uint64_t end_;
  uint64_t pos_;
  std::vector<int> current_;
};

std::vector<Permutation> all(PermKind kind, int n);
std::vector<Involution> all_involutions(int n);
std::vector<Involution> all_fpf_involutions(int n);

}  // namespace invpath
