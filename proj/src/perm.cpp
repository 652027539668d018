#include "invpath/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace invpath {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("permutation: \"" + str() + "\" is not a bijection on [" +
                                  std::to_string(n) + "]");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation: negative size");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<int> w;
  std::string tok;
  while (is >> tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      throw std::invalid_argument("permutation: bad token \"" + tok + "\"");
    }
    w.push_back(v);
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("permutation: compose of sizes " + std::to_string(size()) +
                                " and " + std::to_string(other.size()));
  }
  std::vector<int> w(word_.size());
  for (int i = 1; i <= size(); ++i) w[i - 1] = (*this)(other(i));
  return Permutation(std::move(w));
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)((*this)(i)) != i) return false;
  }
  return true;
}

bool Permutation::is_fpf() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) == i) return false;
  }
  return true;
}

std::string Permutation::str() const {
  std::string out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(word_[i]);
  }
  return out;
}

std::vector<Pair> inversions(const Permutation& p) {
  std::vector<Pair> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p(i) > p(j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Pair> visible_inversions(const Permutation& p) {
  std::vector<Pair> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p(i) > p(j) && p(j) <= std::min(i, p(i))) out.emplace_back(i, j);
    }
  }
  return out;
}

int inversion_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) count += p(i) > p(j);
  }
  return count;
}

Involution::Involution(Permutation p) : perm_(std::move(p)) {
  if (!perm_.is_involution()) {
    throw std::invalid_argument("involution: \"" + perm_.str() + "\" does not square to the identity");
  }
  for (int i = 1; i <= perm_.size(); ++i) {
    if (i < perm_(i)) cycles_.emplace_back(i, perm_(i));
  }
}

Involution Involution::from_cycles(int n, const std::vector<Pair>& cycles) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (auto [i, j] : cycles) {
    if (i < 1 || j < 1 || i > n || j > n || i == j || w[i - 1] != i || w[j - 1] != j) {
      throw std::invalid_argument("involution: bad or overlapping cycle (" + std::to_string(i) +
                                  " " + std::to_string(j) + ")");
    }
    w[i - 1] = j;
    w[j - 1] = i;
  }
  return Involution(Permutation(std::move(w)));
}

std::string Involution::cycle_str() const {
  if (cycles_.empty()) return "()";
  std::string out;
  for (auto [i, j] : cycles_) out += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
  return out;
}

std::string Involution::full_cycle_str() const {
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    if (perm_(i) == i) {
      out += "(" + std::to_string(i) + ")";
    } else if (i < perm_(i)) {
      out += "(" + std::to_string(i) + " " + std::to_string(perm_(i)) + ")";
    }
  }
  return out.empty() ? "()" : out;
}

InvolutionStats statistics(const Involution& s) {
  InvolutionStats st;
  st.length = inversion_count(s.perm());
  st.cycles = static_cast<int>(s.cycles().size());
  if ((st.length + st.cycles) % 2 != 0) {
    throw std::logic_error("statistics: l + c is odd for \"" + s.perm().str() + "\"");
  }
  st.lhat = (st.length + st.cycles) / 2;
  st.lhat_fpf = (st.length - st.cycles) / 2;
  return st;
}

namespace {

void require_valid(PermKind kind, int n) {
  if (n < 0) throw std::invalid_argument("enumerate: negative size");
  if (kind == PermKind::fpf_involutions && n % 2 != 0) {
    throw std::invalid_argument("enumerate: fixed-point-free involutions need even size, got " +
                                std::to_string(n));
  }
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
  uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("enumerate: count overflow");
  return out;
}

uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("enumerate: count overflow");
  return out;
}

// Involutions (or FPF involutions) on m points; zero for odd m in the FPF case.
uint64_t matching_count(bool allow_fixed, int m) {
  if (m < 0) return 0;
  uint64_t prev2 = 1, prev1 = allow_fixed ? 1 : 0;  // m = 0, 1
  if (m == 0) return prev2;
  for (int k = 2; k <= m; ++k) {
    const uint64_t cur = checked_add(allow_fixed ? prev1 : 0, checked_mul(k - 1, prev2));
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

// Decision-by-decision unranking: the smallest open position is either fixed
// or paired with a later open position, options tried in increasing value.
std::vector<int> unrank_matching(bool allow_fixed, int n, uint64_t index) {
  std::vector<int> w(static_cast<size_t>(n), 0);
  std::vector<int> open(static_cast<size_t>(n));
  std::iota(open.begin(), open.end(), 1);
  while (!open.empty()) {
    const int m = static_cast<int>(open.size());
    const int p = open.front();
    if (allow_fixed) {
      const uint64_t block = matching_count(true, m - 1);
      if (index < block) {
        w[p - 1] = p;
        open.erase(open.begin());
        continue;
      }
      index -= block;
    }
    const uint64_t block = matching_count(allow_fixed, m - 2);
    const uint64_t t = index / block;
    index %= block;
    const int partner = open[1 + t];
    w[p - 1] = partner;
    w[partner - 1] = p;
    open.erase(open.begin() + 1 + static_cast<std::ptrdiff_t>(t));
    open.erase(open.begin());
  }
  return w;
}

std::vector<int> unrank_permutation(int n, uint64_t index) {
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(pool.size());
  for (int k = n; k >= 1; --k) {
    const uint64_t block = count(PermKind::permutations, k - 1);
    const uint64_t t = index / block;
    index %= block;
    w.push_back(pool[t]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(t));
  }
  return w;
}

}  // namespace

uint64_t count(PermKind kind, int n) {
  require_valid(kind, n);
  switch (kind) {
    case PermKind::permutations: {
      uint64_t f = 1;
      for (int k = 2; k <= n; ++k) f = checked_mul(f, k);
      return f;
    }
    case PermKind::involutions:
      return matching_count(true, n);
    case PermKind::fpf_involutions:
      return matching_count(false, n);
  }
  return 0;
}

Permutation unrank(PermKind kind, int n, uint64_t index) {
  if (index >= count(kind, n)) throw std::out_of_range("unrank: index past the end");
  if (kind == PermKind::permutations) return Permutation(unrank_permutation(n, index));
  return Permutation(unrank_matching(kind == PermKind::involutions, n, index));
}

PermStream::PermStream(PermKind kind, int n) : PermStream(kind, n, 0, count(kind, n)) {}

PermStream::PermStream(PermKind kind, int n, uint64_t begin, uint64_t end)
    : kind_(kind), n_(n), begin_(begin), end_(std::min(end, count(kind, n))), pos_(begin) {
  if (begin_ > end_) begin_ = pos_ = end_;
}

std::optional<Permutation> PermStream::next() {
  if (pos_ >= end_) return std::nullopt;
  if (kind_ == PermKind::permutations) {
    if (pos_ == begin_) {
      current_ = unrank_permutation(n_, pos_);
    } else {
      std::next_permutation(current_.begin(), current_.end());
    }
    ++pos_;
    return Permutation(current_);
  }
  return unrank(kind_, n_, pos_++);
}

std::vector<Permutation> all(PermKind kind, int n) {
  std::vector<Permutation> out;
  out.reserve(count(kind, n));
  PermStream stream(kind, n);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Involution> all_involutions(int n) {
  std::vector<Involution> out;
  for (auto& p : all(PermKind::involutions, n)) out.emplace_back(std::move(p));
  return out;
}

std::vector<Involution> all_fpf_involutions(int n) {
  std::vector<Involution> out;
  for (auto& p : all(PermKind::fpf_involutions, n)) out.emplace_back(std::move(p));
  return out;
}

}  // namespace invpath
