#include "invpath/harness.hpp"

#include <chrono>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "invpath/dinner.hpp"
#include "invpath/order.hpp"
#include "invpath/parallel.hpp"
#include "invpath/paths.hpp"
#include "invpath/perm.hpp"
#include "invpath/rook.hpp"

namespace invpath {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

unsigned resolve(unsigned shards) { return shards == 0 ? default_shards() : shards; }

std::string first_difference(const QPoly& a, const QPoly& b) {
  const int top = std::max(a.degree(), b.degree());
  for (int d = 0; d <= top; ++d) {
    if (a.coeff(d) != b.coeff(d)) {
      return "coefficient of q^" + std::to_string(d) + ": left " + std::to_string(a.coeff(d)) +
             ", right " + std::to_string(b.coeff(d));
    }
  }
  return {};
}

VerificationReport poly_report(std::string identity, int n, QPoly left, QPoly right,
                               Clock::time_point start, unsigned shards) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.n = n;
  r.equal = left == right;
  if (!r.equal) r.witness = first_difference(left, right);
  r.left = std::move(left);
  r.right = std::move(right);
  r.elapsed_ms = ms_since(start);
  r.shards = shards;
  return r;
}

// Exhaustive property over `items`; left counts items, right counts passes.
template <typename Items, typename Pred, typename Describe>
VerificationReport property(std::string identity, int n, const Items& items, Pred pred,
                            Describe describe) {
  const auto start = Clock::now();
  VerificationReport r;
  r.identity = std::move(identity);
  r.n = n;
  int64_t passed = 0;
  for (const auto& item : items) {
    if (pred(item)) {
      ++passed;
    } else if (r.witness.empty()) {
      r.witness = describe(item);
    }
  }
  r.left = QPoly::constant(static_cast<int64_t>(items.size()));
  r.right = QPoly::constant(passed);
  r.equal = r.left == r.right;
  r.elapsed_ms = ms_since(start);
  return r;
}

void check_guard(const std::string& target, int n, const RunOptions& opts) {
  if (n < 0) throw std::invalid_argument(target + ": n must be nonnegative");
  const int ceiling = default_ceiling(target);
  if (n > ceiling && !opts.force) {
    throw GuardExceeded(target + ": n = " + std::to_string(n) + " exceeds the default ceiling " +
                        std::to_string(ceiling) + " (" + estimate(target, n) +
                        "); pass --force to run anyway");
  }
}

QPoly sum_over_involutions(int n, unsigned shards) {
  return sharded_reduce<QPoly>(count(PermKind::involutions, n), shards, [n](uint64_t b, uint64_t e) {
    std::vector<int64_t> c;
    PermStream stream(PermKind::involutions, n, b, e);
    while (auto p = stream.next()) {
      const int r = statistics(Involution(std::move(*p))).lhat;
      if (static_cast<size_t>(r) >= c.size()) c.resize(static_cast<size_t>(r) + 1, 0);
      ++c[r];
    }
    return QPoly(std::move(c));
  });
}

template <typename Fn>
QPoly sum_over_paths(const std::vector<MotzkinPath>& paths, unsigned shards, Fn weight) {
  return sharded_reduce<QPoly>(paths.size(), shards, [&](uint64_t b, uint64_t e) {
    QPoly acc;
    for (uint64_t x = b; x < e; ++x) acc += weight(paths[x]);
    return acc;
  });
}

std::string labeled_desc(const LabeledPath& lp) { return lp.str(); }
std::string inv_desc(const Involution& s) { return s.perm().str() + " " + s.cycle_str(); }
std::string perm_desc(const Permutation& p) { return p.str(); }

}  // namespace

std::string to_json_line(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["n"] = r.n;
  if (r.k) j["k"] = *r.k;
  j["left"] = r.left.str();
  j["right"] = r.right.str();
  j["equal"] = r.equal;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j.dump();
}

std::string summary_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.equal ? "PASS " : "FAIL ") << r.identity << " n=" << r.n;
  if (r.k) os << " k=" << *r.k;
  os << " (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms, " << r.shards
     << (r.shards == 1 ? " shard)" : " shards)");
  if (!r.equal) os << " witness: " << r.witness;
  return os.str();
}

int default_ceiling(const std::string& target) {
  static const std::map<std::string, int> ceilings = {
      {"main", 12},    {"fpf", 7},        {"blm", 7},    {"watson", 7},
      {"deodhar", 10}, {"structure", 10}, {"census", 5},
  };
  auto it = ceilings.find(target);
  if (it == ceilings.end()) throw std::invalid_argument("unknown verify target \"" + target + "\"");
  return it->second;
}

std::string estimate(const std::string& target, int n) {
  double objects = 0;
  try {
    if (target == "main" || target == "deodhar" || target == "structure") {
      objects = static_cast<double>(count(PermKind::involutions, n));
    } else if (target == "census") {
      objects = static_cast<double>(count(PermKind::permutations, 2 * n));
    } else {
      objects = static_cast<double>(count(PermKind::fpf_involutions, 2 * n));
    }
  } catch (const std::overflow_error&) {
    return "too many objects to count";
  }
  // Rough single-core throughput of the enumeration loops.
  const double seconds = objects / 1.5e6;
  std::ostringstream os;
  os << "~" << std::setprecision(3) << objects << " objects, est. " << std::setprecision(2) << seconds
     << " s";
  return os.str();
}

VerificationReport verify_theorem_main(int n, const RunOptions& opts) {
  check_guard("main", n, opts);
  const auto start = Clock::now();
  const unsigned shards = resolve(opts.shards);
  const auto paths = motzkin_paths(n);
  QPoly left = sum_over_paths(paths, shards, [](const MotzkinPath& m) { return h_poly(m); });
  QPoly right = sum_over_involutions(n, shards);
  return poly_report("main", n, std::move(left), std::move(right), start, shards);
}

VerificationReport verify_recurrence(int n, const RunOptions& opts) {
  if (n > 14 && !opts.force) {
    throw GuardExceeded("recurrence: enumeration of I_" + std::to_string(n) +
                        " exceeds the default ceiling 14; pass --force to run anyway");
  }
  const auto start = Clock::now();
  const unsigned shards = resolve(opts.shards);
  QPoly left = sum_over_involutions(n, shards);
  QPoly right = rank_gen(RankGenKind::recurrence, n);
  return poly_report("recurrence", n, std::move(left), std::move(right), start, shards);
}

std::vector<VerificationReport> verify_corollary_fpf(int n, const RunOptions& opts) {
  check_guard("fpf", n, opts);
  const unsigned shards = resolve(opts.shards);
  std::vector<VerificationReport> out;
  const auto paths = dyck_paths(2 * n);
  const QPoly target = odd_double_factorial(n).shifted(n);

  auto start = Clock::now();
  QPoly sum_h = sum_over_paths(paths, shards, [](const MotzkinPath& m) { return h_poly(m); });
  out.push_back(poly_report("fpf", n, std::move(sum_h), target, start, shards));

  start = Clock::now();
  QPoly enumerated = sharded_reduce<QPoly>(
      count(PermKind::fpf_involutions, 2 * n), shards, [n](uint64_t b, uint64_t e) {
        std::vector<int64_t> c;
        PermStream stream(PermKind::fpf_involutions, 2 * n, b, e);
        while (auto p = stream.next()) {
          const int r = statistics(Involution(std::move(*p))).lhat_fpf;
          if (static_cast<size_t>(r) >= c.size()) c.resize(static_cast<size_t>(r) + 1, 0);
          ++c[r];
        }
        return QPoly(std::move(c));
      });
  out.push_back(poly_report("fpf-enumeration", n, enumerated.shifted(n), target, start, shards));

  VerificationReport blm = verify_blm(n, opts);
  out.push_back(std::move(blm));
  return out;
}

VerificationReport verify_blm(int n, const RunOptions& opts) {
  check_guard("blm", n, opts);
  const auto start = Clock::now();
  const unsigned shards = resolve(opts.shards);
  QPoly left = sum_over_paths(dyck_paths(2 * n), shards,
                              [](const MotzkinPath& m) { return h_tilde_poly(m); });
  return poly_report("blm", n, std::move(left), odd_double_factorial(n), start, shards);
}

std::vector<VerificationReport> verify_watson(int n, const RunOptions& opts) {
  check_guard("watson", n, opts);
  const unsigned shards = resolve(opts.shards);
  const auto paths = dyck_paths(2 * n);
  std::vector<VerificationReport> out;

  auto start = Clock::now();
  QPoly left = sum_over_paths(paths, shards, [](const MotzkinPath& m) { return watson_weight(m); });
  out.push_back(poly_report("watson", n, std::move(left), odd_double_factorial(n), start, shards));

  out.push_back(property(
      "watson-pathwise", n, paths,
      [n](const MotzkinPath& m) { return watson_weight(m).shifted(n) == h_poly(m); },
      [](const MotzkinPath& m) { return m.str(); }));
  return out;
}

std::vector<VerificationReport> verify_deodhar(int n, const RunOptions& opts) {
  check_guard("deodhar", n, opts);
  const unsigned shards = resolve(opts.shards);
  const auto start = Clock::now();
  const QPoly q_minus_1{-1, 1};

  // Group both sums by the exponent of (q - 1) before applying the binomials.
  std::vector<QPoly> by_cycles(static_cast<size_t>(n / 2) + 1);
  for (const auto& s : all_involutions(n)) {
    const auto st = statistics(s);
    by_cycles[st.cycles] += QPoly::monomial(1, st.lhat_fpf);
  }
  std::vector<QPoly> by_downs(static_cast<size_t>(n / 2) + 1);
  for (const auto& m : motzkin_paths(n)) by_downs[m.down_count()] += h_tilde_poly(m);
  const double setup_ms = ms_since(start);

  std::vector<VerificationReport> out;
  for (int k = 0; k <= n; ++k) {
    const auto kstart = Clock::now();
    const QPoly target = gaussian_binomial(n, k);
    QPoly inv_side, path_side;
    for (int c = 0; 2 * c <= n; ++c) {
      const int64_t b = binomial(n - 2 * c, k - c);
      if (b == 0) continue;
      const QPoly factor = pow(q_minus_1, c).scaled(b);
      inv_side += factor * by_cycles[c];
      path_side += factor * by_downs[c];
    }
    auto r1 = poly_report("deodhar-involutions", n, std::move(inv_side), target, kstart, shards);
    auto r2 = poly_report("deodhar-motzkin", n, std::move(path_side), target, kstart, shards);
    r1.k = r2.k = k;
    r1.elapsed_ms += setup_ms / (n + 1);
    r2.elapsed_ms += setup_ms / (n + 1);
    out.push_back(std::move(r1));
    out.push_back(std::move(r2));
  }
  return out;
}

VerificationReport verify_census(int n, const RunOptions& opts) {
  check_guard("census", n, opts);
  const auto start = Clock::now();
  const unsigned shards = resolve(opts.shards);
  const int64_t fair = static_cast<int64_t>(count_fair(2 * n, opts.force ? 2 * n : 10, shards));
  const int64_t dfact = odd_double_factorial(n).eval(1);
  return poly_report("census", n, QPoly::constant(fair),
                     QPoly::constant(checked::mul(dfact, dfact, "census", 0)), start, shards);
}

std::vector<VerificationReport> verify_structure(int n, const RunOptions& opts) {
  check_guard("structure", n, opts);
  std::vector<VerificationReport> out;
  const int ni = std::min(n, 10);
  const int fpf_size = 2 * (std::min(n, 12) / 2);

  const auto inv = all_involutions(ni);
  out.push_back(property(
      "visible-inversions-count", ni, inv,
      [](const Involution& s) {
        const auto vis = visible_inversions(s.perm());
        const auto st = statistics(s);
        const std::set<Pair> vis_set(vis.begin(), vis.end());
        const bool cyc_inside = std::all_of(s.cycles().begin(), s.cycles().end(),
                                            [&](const Pair& p) { return vis_set.count(p) > 0; });
        return static_cast<int>(vis.size()) == st.lhat && cyc_inside;
      },
      inv_desc));

  out.push_back(property(
      "fpf-statistics", fpf_size, all_fpf_involutions(fpf_size),
      [fpf_size](const Involution& t) {
        const auto st = statistics(t);
        return st.cycles == fpf_size / 2 && st.lhat_fpf == st.lhat - fpf_size / 2;
      },
      inv_desc));

  out.push_back(property(
      "biane-roundtrip", ni, inv, [](const Involution& s) { return biane_inverse(biane(s)) == s; },
      inv_desc));

  out.push_back(property(
      "biane-h-statistic", ni, inv,
      [](const Involution& s) {
        return h_stat(biane(s)) == static_cast<int>(visible_inversions(s.perm()).size());
      },
      inv_desc));

  out.push_back(property(
      "class-split", ni, inv,
      [](const Involution& s) {
        const auto split = class_split(s);
        const LabeledPath lp = biane(s);
        const auto h = lp.path().heights();
        int heights = 0, labels = 0;
        for (int i = 1; i <= lp.size(); ++i) {
          if (lp.path()[i] == Step::D) {
            labels += lp.labels().at(i) - 1;
          } else {
            heights += h[i - 1];
          }
        }
        return static_cast<int>(split.class1.size()) == heights &&
               static_cast<int>(split.class2.size()) == labels;
      },
      inv_desc));

  {
    std::vector<LabeledPath> labeled;
    for (const auto& m : motzkin_paths(ni)) {
      for (auto& lp : labelings(m)) labeled.push_back(std::move(lp));
    }
    out.push_back(property(
        "biane-inverse-roundtrip", ni, labeled,
        [](const LabeledPath& lp) { return biane(biane_inverse(lp)) == lp; }, labeled_desc));

    // Image of I_n is all of M^L_n: distinct images, as many as labeled paths.
    std::set<LabeledPath> image;
    for (const auto& s : inv) image.insert(biane(s));
    const auto start = Clock::now();
    VerificationReport r;
    r.identity = "biane-image";
    r.n = ni;
    r.left = QPoly::constant(static_cast<int64_t>(labeled.size()));
    r.right = QPoly::constant(static_cast<int64_t>(image.size()));
    r.equal = r.left == r.right && image == std::set<LabeledPath>(labeled.begin(), labeled.end());
    if (!r.equal) r.witness = "image size " + r.right.str() + " vs " + r.left.str() + " labeled paths";
    r.elapsed_ms = ms_since(start);
    out.push_back(std::move(r));
  }

  out.push_back(property(
      "biane-fpf-dyck", fpf_size, all_fpf_involutions(fpf_size),
      [](const Involution& t) { return biane(t).path().is_dyck(); }, inv_desc));

  {
    const int nh = std::min(n, 9);
    out.push_back(property(
        "h-poly-labelings", nh, motzkin_paths(nh),
        [](const MotzkinPath& m) {
          QPoly by_labels;
          const auto all_labels = labelings(m);
          for (const auto& lp : all_labels) by_labels += QPoly::monomial(1, h_stat(lp));
          const QPoly h = h_poly(m);
          return h == by_labels && h.eval(1) == static_cast<int64_t>(all_labels.size());
        },
        [](const MotzkinPath& m) { return m.str(); }));
  }

  {
    const int np = std::min(n, 8);
    const Poset bruhat = induced_poset(PosetKind::involutions, np, opts.shards);
    out.push_back(property(
        "bruhat-graded", np, bruhat.covers,
        [&](const std::pair<int, int>& c) { return bruhat.rank[c.second] == bruhat.rank[c.first] + 1; },
        [&](const std::pair<int, int>& c) {
          return bruhat.elements[c.first].cycle_str() + " < " + bruhat.elements[c.second].cycle_str();
        }));

    const int fp = 2 * (std::min(n, 10) / 2);
    const Poset fpf = induced_poset(PosetKind::fpf, fp, opts.shards);
    out.push_back(property(
        "bruhat-graded-fpf", fp, fpf.covers,
        [&](const std::pair<int, int>& c) { return fpf.rank[c.second] == fpf.rank[c.first] + 1; },
        [&](const std::pair<int, int>& c) {
          return fpf.elements[c.first].cycle_str() + " < " + fpf.elements[c.second].cycle_str();
        }));

    const Poset weak = weak_poset(np);
    const std::set<std::pair<int, int>> bruhat_covers(bruhat.covers.begin(), bruhat.covers.end());
    auto edge_desc = [&](const std::pair<int, int>& c) {
      return weak.elements[c.first].cycle_str() + " <W " + weak.elements[c.second].cycle_str();
    };
    out.push_back(property(
        "weak-within-bruhat", np, weak.covers,
        [&](const std::pair<int, int>& c) { return bruhat_covers.count(c) > 0; }, edge_desc));
    out.push_back(property(
        "weak-h-increment", np, weak.covers,
        [&](const std::pair<int, int>& c) {
          return h_stat(biane(weak.elements[c.second])) == h_stat(biane(weak.elements[c.first])) + 1;
        },
        edge_desc));

    // Every element is reached from the identity along weak covers, so ℓ̂ is
    // the rank of the weak order and its rank generating function is R_{I_n}.
    std::vector<bool> reached(weak.elements.size(), false);
    std::vector<std::vector<int>> ups(weak.elements.size());
    for (auto [lo, hi] : weak.covers) ups[lo].push_back(hi);
    std::vector<int> frontier{0};
    reached[0] = true;
    while (!frontier.empty()) {
      const int x = frontier.back();
      frontier.pop_back();
      for (int y : ups[x]) {
        if (!reached[y]) {
          reached[y] = true;
          frontier.push_back(y);
        }
      }
    }
    std::vector<int> idx(weak.elements.size());
    for (size_t x = 0; x < idx.size(); ++x) idx[x] = static_cast<int>(x);
    out.push_back(property(
        "weak-connected", np, idx, [&](int x) { return static_cast<bool>(reached[x]); },
        [&](int x) { return weak.elements[x].cycle_str(); }));
  }

  {
    const int nr = 2 * (std::min(n, 10) / 2);
    std::vector<LabeledPath> labeled_dyck;
    for (const auto& d : dyck_paths(nr)) {
      for (auto& lp : labelings(d)) labeled_dyck.push_back(std::move(lp));
    }
    out.push_back(property(
        "rook-roundtrip", nr, labeled_dyck,
        [](const LabeledPath& lp) { return from_rook_placement(to_rook_placement(lp)) == lp; },
        labeled_desc));

    const int nd = 2 * (std::min(n, 12) / 2);
    out.push_back(property(
        "dyck-down-heights", nd, dyck_paths(nd),
        [](const MotzkinPath& m) {
          const auto h = m.heights();
          const auto downs = m.down_positions();
          for (int i = 1; i <= static_cast<int>(downs.size()); ++i) {
            if (h[downs[i - 1] - 1] != downs[i - 1] - 2 * i + 1) return false;
          }
          return true;
        },
        [](const MotzkinPath& m) { return m.str(); }));
  }

  {
    const int nf = 2 * (std::min(n, 8) / 2);
    const auto perms = all(PermKind::permutations, nf);
    out.push_back(property(
        "fairness-criterion", nf, perms,
        [](const Permutation& p) { return is_fair(p) == is_fair_simulated(p); }, perm_desc));
    out.push_back(property(
        "fair-eating-order", nf, perms,
        [](const Permutation& p) {
          if (!is_fair_simulated(p)) return true;
          return allocate(p).alice_order == allocate_bob_first(p).alice_order;
        },
        perm_desc));
    out.push_back(property(
        "dinner-fpf-coincidence", nf, perms,
        [](const Permutation& p) { return fpf_coincidence(p) == (p.is_involution() && p.is_fpf()); },
        perm_desc));
  }

  for (auto& r : out) r.shards = resolve(opts.shards);
  return out;
}

std::vector<VerificationReport> run_target(const std::string& target, int n, const RunOptions& opts) {
  if (target == "main") return {verify_theorem_main(n, opts), verify_recurrence(n, opts)};
  if (target == "fpf") return verify_corollary_fpf(n, opts);
  if (target == "blm") return {verify_blm(n, opts)};
  if (target == "watson") return verify_watson(n, opts);
  if (target == "deodhar") return verify_deodhar(n, opts);
  if (target == "census") return {verify_census(n, opts)};
  if (target == "structure") return verify_structure(n, opts);
  throw std::invalid_argument("unknown verify target \"" + target + "\"");
}

}  // namespace invpath
