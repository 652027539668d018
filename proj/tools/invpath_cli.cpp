// invpath: verify involution/Motzkin-path identities, run the bijections, and
// play the dinner game from the command line.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>

#include "invpath/dinner.hpp"
#include "invpath/harness.hpp"
#include "invpath/order.hpp"
#include "invpath/paths.hpp"
#include "invpath/perm.hpp"
#include "invpath/rook.hpp"

using namespace invpath;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitGuard = 2;

ordered_json bijection_record(const Involution& s, const LabeledPath& lp) {
  ordered_json j;
  j["perm"] = s.perm().str();
  j["cycles"] = s.cycle_str();
  j["path"] = lp.path().str();
  j["labels"] = lp.label_values();
  return j;
}

int run_verify(const std::string& target, int n, bool upto, const std::string& json_path,
               const RunOptions& opts) {
  std::unique_ptr<std::ofstream> file;
  std::ostream* json = nullptr;
  if (json_path == "-") {
    json = &std::cout;
  } else if (!json_path.empty()) {
    file = std::make_unique<std::ofstream>(json_path);
    if (!*file) {
      std::cerr << "cannot open " << json_path << " for writing\n";
      return kExitFail;
    }
    json = file.get();
  }
  std::ostream& human = json == &std::cout ? std::cerr : std::cout;

  bool all_equal = true;
  for (int m = upto ? 0 : n; m <= n; ++m) {
    std::cerr << "verify " << target << " n=" << m << ": " << estimate(target, m) << "\n";
    for (const auto& r : run_target(target, m, opts)) {
      human << summary_line(r) << "\n";
      if (json) *json << to_json_line(r) << "\n";
      all_equal = all_equal && r.equal;
    }
  }
  return all_equal ? 0 : kExitFail;
}

void print_dinner(const Permutation& p) {
  const DinnerOutcome o = play(p);
  std::cout << "perm:           " << p.str() << "\n";
  std::cout << "w (by position): " << o.alice_first.str() << "\n";
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  std::cout << "alice eats:     " << list(o.alice_first.alice_order) << "\n";
  std::cout << "bob eats:       " << list(o.alice_first.bob_order) << "\n";
  std::cout << "deltaA:         " << o.paths.delta_a.str() << "\n";
  std::cout << "deltaA printed: " << o.paths.delta_a_printed.str() << "\n";
  std::cout << "deltaB:         " << o.paths.delta_b.str() << "\n";
  std::cout << "deltaB hat:     " << o.paths.delta_b_hat.str() << "\n";
  std::cout << "fair:           " << (o.fair ? "yes" : "no") << "\n";
  std::cout << "k:              " << o.k_fairness << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Involutions, labeled Motzkin paths and the rank generating function of Bruhat order"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustively check an identity");
  std::string target;
  int n = 0;
  bool upto = false;
  std::string json_path;
  RunOptions opts;
  verify->add_option("target", target, "main|fpf|blm|watson|deodhar|structure|census")
      ->required()
      ->check(CLI::IsMember({"main", "fpf", "blm", "watson", "deodhar", "structure", "census"}));
  verify->add_option("--n", n, "Parameter n (census checks permutations of length 2n)")->required();
  verify->add_flag("--upto", upto, "Run every value 0..n");
  verify->add_option("--json", json_path, "Write JSON-lines reports to PATH ('-' for stdout)");
  verify->add_flag("--force", opts.force, "Allow n above the default ceiling");
  verify->add_option("--shards", opts.shards, "Parallel shards (default: available parallelism)");

  // map
  auto* map = app.add_subcommand("map", "Run one of the bijections");
  map->require_subcommand(1);
  std::string perm_text, path_text, rook_text;
  int all_n = -1;
  auto* p2p = map->add_subcommand("perm-to-path", "Involution -> labeled Motzkin path")->alias("perm->path");
  auto* perm_opt = p2p->add_option("--perm", perm_text, "Involution in one-line notation");
  auto* all_opt = p2p->add_option("--all", all_n, "Emit every involution of size N");
  perm_opt->excludes(all_opt);
  auto* path2perm = map->add_subcommand("path-to-perm", "Labeled Motzkin path -> involution")->alias("path->perm");
  path2perm->add_option("--path", path_text, "Labeled path, e.g. UULDUULLDDD;2,2,1,1")->required();
  auto* d2r = map->add_subcommand("dyck-to-rooks", "Labeled Dyck path -> rook placement")->alias("dyck->rooks");
  d2r->add_option("--path", path_text, "Labeled Dyck path, e.g. UUDD;2,1")->required();
  auto* r2d = map->add_subcommand("rooks-to-dyck", "Rook placement -> labeled Dyck path")->alias("rooks->dyck");
  r2d->add_option("--rooks", rook_text, "Placement, e.g. 2,2|1->2,2->1")->required();

  // poset
  auto* poset = app.add_subcommand("poset", "Write a Hasse diagram as Graphviz DOT");
  int poset_n = 0;
  std::string dot_path;
  bool weak = false, fpf = false, poset_force = false;
  poset->add_option("--n", poset_n, "Size of the involutions")->required();
  poset->add_option("--dot", dot_path, "Output path ('-' for stdout)")->required();
  poset->add_flag("--weak", weak, "Weak order instead of Bruhat order");
  poset->add_flag("--fpf", fpf, "Fixed-point-free involutions (n must be even)");
  poset->add_flag("--force", poset_force, "Allow n above 8 (10 for --fpf)");

  // dinner
  auto* dinner = app.add_subcommand("dinner", "Ethiopian dinner game");
  std::string dinner_perm;
  int census = -1;
  bool dinner_force = false;
  auto* dperm = dinner->add_option("--perm", dinner_perm, "Permutation of even size");
  auto* dcensus = dinner->add_option("--census", census, "Count fair permutations of this length");
  dinner->add_flag("--force", dinner_force, "Allow census lengths above 10");
  dperm->excludes(dcensus);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(target, n, upto, json_path, opts);

    if (*p2p) {
      if (all_n >= 0) {
        for (const auto& s : all_involutions(all_n)) std::cout << bijection_record(s, biane(s)).dump() << "\n";
      } else {
        const Involution s(Permutation::parse(perm_text));
        std::cout << bijection_record(s, biane(s)).dump() << "\n";
      }
      return 0;
    }
    if (*path2perm) {
      const LabeledPath lp = LabeledPath::parse(path_text);
      std::cout << bijection_record(biane_inverse(lp), lp).dump() << "\n";
      return 0;
    }
    if (*d2r) {
      const LabeledPath lp = LabeledPath::parse(path_text);
      ordered_json j;
      j["path"] = lp.path().str();
      j["labels"] = lp.label_values();
      j["rooks"] = to_rook_placement(lp).str();
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*r2d) {
      const LabeledPath lp = from_rook_placement(RookPlacement::parse(rook_text));
      ordered_json j;
      j["rooks"] = rook_text;
      j["path"] = lp.path().str();
      j["labels"] = lp.label_values();
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*poset) {
      const int ceiling = fpf ? 10 : 8;
      if (poset_n > ceiling && !poset_force) {
        std::cerr << "poset: n = " << poset_n << " exceeds the default ceiling " << ceiling
                  << "; pass --force to run anyway\n";
        return kExitGuard;
      }
      if (weak && fpf) {
        std::cerr << "poset: --weak applies to involutions only\n";
        return kExitFail;
      }
      const Poset p = weak ? weak_poset(poset_n)
                           : induced_poset(fpf ? PosetKind::fpf : PosetKind::involutions, poset_n);
      const std::string dot = export_dot(p, weak ? "weak" : "bruhat");
      if (dot_path == "-") {
        std::cout << dot;
      } else {
        std::ofstream out(dot_path);
        if (!out) {
          std::cerr << "cannot open " << dot_path << " for writing\n";
          return kExitFail;
        }
        out << dot;
      }
      std::cerr << p.size() << " elements, " << p.covers.size() << " covers\n";
      return 0;
    }

    if (*dinner) {
      if (census >= 0) {
        const uint64_t fair = count_fair(census, dinner_force ? census : 10);
        const int64_t df = odd_double_factorial(census / 2).eval(1);
        std::cout << "length " << census << ": fair " << fair << ", (2n-1)!!^2 " << df * df << "\n";
        return fair == static_cast<uint64_t>(df * df) ? 0 : kExitFail;
      }
      if (dinner_perm.empty()) {
        std::cerr << "dinner: pass --perm or --census\n";
        return kExitFail;
      }
      print_dinner(Permutation::parse(dinner_perm));
      return 0;
    }
  } catch (const GuardExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitGuard;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
