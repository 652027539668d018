#include "invpath/order.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace invpath {

namespace {

// r[(i-1)*n + (k-1)] = #{j <= i : p(j) >= k}.
std::vector<uint8_t> dominance_table(const Permutation& p) {
  const int n = p.size();
  std::vector<uint8_t> r(static_cast<size_t>(n) * n, 0);
  std::vector<uint8_t> running(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= p(i); ++k) ++running[k - 1];
    std::copy(running.begin(), running.end(), r.begin() + static_cast<std::ptrdiff_t>(i - 1) * n);
  }
  return r;
}

bool dominated(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  for (size_t x = 0; x < a.size(); ++x) {
    if (a[x] > b[x]) return false;
  }
  return true;
}

template <typename Fn>
void parallel_rows(int rows, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max(1, rows));
  if (threads <= 1) {
    for (int x = 0; x < rows; ++x) fn(x);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int x = static_cast<int>(t); x < rows; x += static_cast<int>(threads)) fn(x);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

bool bruhat_leq(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("bruhat_leq: sizes " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
  }
  return dominated(dominance_table(a), dominance_table(b));
}

int Poset::index_of(const Involution& s) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), s);
  if (it == elements.end() || !(*it == s)) return -1;
  return static_cast<int>(it - elements.begin());
}

QPoly Poset::rank_generating_function() const {
  std::vector<int64_t> c;
  for (int r : rank) {
    if (static_cast<size_t>(r) >= c.size()) c.resize(static_cast<size_t>(r) + 1, 0);
    ++c[r];
  }
  return QPoly(std::move(c));
}

Poset induced_poset(PosetKind kind, int n, unsigned threads) {
  if (kind == PosetKind::involutions && n > kMaxPosetInvolutions) {
    throw std::out_of_range("induced_poset: involutions of size " + std::to_string(n) +
                            " exceed the ceiling " + std::to_string(kMaxPosetInvolutions));
  }
  if (kind == PosetKind::fpf && n > kMaxPosetFpf) {
    throw std::out_of_range("induced_poset: FPF involutions of size " + std::to_string(n) +
                            " exceed the ceiling " + std::to_string(kMaxPosetFpf));
  }
  Poset p;
  p.elements = kind == PosetKind::involutions ? all_involutions(n) : all_fpf_involutions(n);
  const int size = p.size();
  std::vector<int> length(size);
  std::vector<std::vector<uint8_t>> tables(size);
  p.rank.resize(size);
  for (int x = 0; x < size; ++x) {
    const auto st = statistics(p.elements[x]);
    length[x] = st.length;
    p.rank[x] = kind == PosetKind::involutions ? st.lhat : st.lhat_fpf;
    tables[x] = dominance_table(p.elements[x].perm());
  }

  // Bruhat-comparable distinct permutations differ in ℓ, so only pairs with
  // ℓ(x) < ℓ(y) need testing.
  std::vector<boost::dynamic_bitset<>> above(size, boost::dynamic_bitset<>(size));
  parallel_rows(size, threads, [&](int x) {
    for (int y = 0; y < size; ++y) {
      if (length[x] < length[y] && dominated(tables[x], tables[y])) above[x].set(y);
    }
  });

  std::vector<std::vector<int>> cover_rows(size);
  parallel_rows(size, threads, [&](int x) {
    boost::dynamic_bitset<> implied(size);
    for (auto z = above[x].find_first(); z != boost::dynamic_bitset<>::npos; z = above[x].find_next(z)) {
      implied |= above[z];
    }
    const boost::dynamic_bitset<> direct = above[x] - implied;
    for (auto y = direct.find_first(); y != boost::dynamic_bitset<>::npos; y = direct.find_next(y)) {
      cover_rows[x].push_back(static_cast<int>(y));
    }
  });
  for (int x = 0; x < size; ++x) {
    for (int y : cover_rows[x]) p.covers.emplace_back(x, y);
  }
  return p;
}

std::vector<Involution> weak_covers(const Involution& t) {
  const int n = t.size();
  const int base = statistics(t).lhat;
  std::vector<Involution> out;
  for (int i = 1; i < n; ++i) {
    std::vector<int> sw(static_cast<size_t>(n));
    for (int x = 1; x <= n; ++x) sw[x - 1] = x;
    std::swap(sw[i - 1], sw[i]);
    const Permutation s(std::move(sw));
    Permutation conj = s.compose(t.perm()).compose(s);
    Involution sigma(conj == t.perm() ? s.compose(t.perm()) : std::move(conj));
    if (statistics(sigma).lhat == base + 1) out.push_back(std::move(sigma));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poset weak_poset(int n) {
  Poset p;
  p.elements = all_involutions(n);
  p.rank.reserve(p.elements.size());
  for (const auto& s : p.elements) p.rank.push_back(statistics(s).lhat);
  for (int x = 0; x < p.size(); ++x) {
    for (const auto& up : weak_covers(p.elements[x])) p.covers.emplace_back(x, p.index_of(up));
  }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

QPoly rank_gen(RankGenKind kind, int n) {
  if (n < 0) throw std::invalid_argument("rank_gen: negative n");
  switch (kind) {
    case RankGenKind::involutions: {
      if (n > kMaxPosetInvolutions + 2) {
        throw std::out_of_range("rank_gen: enumeration of I_" + std::to_string(n) +
                                " exceeds the ceiling");
      }
      std::vector<int64_t> c;
      PermStream stream(PermKind::involutions, n);
      while (auto p = stream.next()) {
        const int r = statistics(Involution(std::move(*p))).lhat;
        if (static_cast<size_t>(r) >= c.size()) c.resize(static_cast<size_t>(r) + 1, 0);
        ++c[r];
      }
      return QPoly(std::move(c));
    }
    case RankGenKind::fpf: {
      if (2 * n > kMaxPosetFpf) {
        throw std::out_of_range("rank_gen: enumeration of FPF involutions of size " +
                                std::to_string(2 * n) + " exceeds the ceiling");
      }
      std::vector<int64_t> c;
      PermStream stream(PermKind::fpf_involutions, 2 * n);
      while (auto p = stream.next()) {
        const int r = statistics(Involution(std::move(*p))).lhat_fpf;
        if (static_cast<size_t>(r) >= c.size()) c.resize(static_cast<size_t>(r) + 1, 0);
        ++c[r];
      }
      return QPoly(std::move(c));
    }
    case RankGenKind::recurrence: {
      QPoly prev2 = QPoly::constant(1);  // R_0
      QPoly prev1 = QPoly::constant(1);  // R_1
      if (n <= 1) return QPoly::constant(1);
      for (int k = 2; k <= n; ++k) {
        QPoly cur = prev1 + (qint(k - 1) * prev2).shifted(1);
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
      }
      return prev1;
    }
    case RankGenKind::closed_form_fpf:
      return odd_double_factorial(n);
  }
  return {};
}

std::string export_dot(const Poset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (int x = 0; x < p.size(); ++x) {
    os << "  n" << x << " [label=\"" << p.elements[x].full_cycle_str() << "\"];\n";
  }
  std::map<int, std::vector<int>> levels;
  for (int x = 0; x < p.size(); ++x) levels[p.rank[x]].push_back(x);
  for (const auto& [r, members] : levels) {
    os << "  { rank=same;";
    for (int x : members) os << " n" << x << ";";
    os << " }\n";
  }
  for (auto [lo, hi] : p.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace invpath
