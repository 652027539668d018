#include "invpath/paths.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace invpath {

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int y = 0;
  for (size_t i = 0; i < steps_.size(); ++i) {
    switch (steps_[i]) {
      case Step::U: ++y; break;
      case Step::D: --y; break;
      case Step::L: break;
      default: throw std::invalid_argument("path: unknown step");
    }
    if (y < 0) {
      throw std::invalid_argument("path: \"" + str() + "\" goes below the axis at step " +
                                  std::to_string(i + 1));
    }
  }
  if (y != 0) throw std::invalid_argument("path: \"" + str() + "\" does not return to the axis");
}

MotzkinPath MotzkinPath::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char c : word) {
    switch (c) {
      case 'U': steps.push_back(Step::U); break;
      case 'L': steps.push_back(Step::L); break;
      case 'D': steps.push_back(Step::D); break;
      default:
        throw std::invalid_argument("path: bad step '" + std::string(1, c) + "' in \"" +
                                    std::string(word) + "\"");
    }
  }
  return MotzkinPath(std::move(steps));
}

bool MotzkinPath::is_dyck() const {
  return std::none_of(steps_.begin(), steps_.end(), [](Step s) { return s == Step::L; });
}

int MotzkinPath::down_count() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::D));
}

std::vector<int> MotzkinPath::down_positions() const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i) {
    if ((*this)[i] == Step::D) out.push_back(i);
  }
  return out;
}

std::vector<int> MotzkinPath::heights() const {
  std::vector<int> h;
  h.reserve(steps_.size());
  int y = 0;
  for (Step s : steps_) {
    if (s == Step::U) ++y;
    h.push_back(y);
    if (s == Step::D) --y;
  }
  return h;
}

std::string MotzkinPath::str() const {
  std::string out;
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

LabeledPath::LabeledPath(MotzkinPath path, std::map<int, int> labels)
    : path_(std::move(path)), labels_(std::move(labels)) {
  const auto h = path_.heights();
  const auto downs = path_.down_positions();
  if (labels_.size() != downs.size()) {
    throw std::invalid_argument("labeled path: " + std::to_string(labels_.size()) +
                                " labels for " + std::to_string(downs.size()) + " down steps");
  }
  for (int pos : downs) {
    auto it = labels_.find(pos);
    if (it == labels_.end()) {
      throw std::invalid_argument("labeled path: down step " + std::to_string(pos) + " has no label");
    }
    if (it->second < 1 || it->second > h[pos - 1]) {
      throw std::invalid_argument("labeled path: label " + std::to_string(it->second) +
                                  " at step " + std::to_string(pos) + " outside [1, " +
                                  std::to_string(h[pos - 1]) + "]");
    }
  }
}

namespace {

std::map<int, int> zip_labels(const MotzkinPath& path, const std::vector<int>& values) {
  const auto downs = path.down_positions();
  if (downs.size() != values.size()) {
    throw std::invalid_argument("labeled path: " + std::to_string(values.size()) +
                                " labels for " + std::to_string(downs.size()) + " down steps");
  }
  std::map<int, int> out;
  for (size_t k = 0; k < downs.size(); ++k) out.emplace(downs[k], values[k]);
  return out;
}

}  // namespace

LabeledPath::LabeledPath(MotzkinPath path, const std::vector<int>& labels_in_order)
    : LabeledPath(path, zip_labels(path, labels_in_order)) {}

LabeledPath LabeledPath::parse(std::string_view text) {
  const auto semi = text.find(';');
  MotzkinPath path = MotzkinPath::parse(text.substr(0, semi));
  std::vector<int> values;
  if (semi != std::string_view::npos) {
    std::string rest(text.substr(semi + 1));
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok.size()) {
        throw std::invalid_argument("labeled path: bad label \"" + tok + "\"");
      }
      values.push_back(v);
    }
  }
  return LabeledPath(std::move(path), values);
}

std::vector<int> LabeledPath::label_values() const {
  std::vector<int> out;
  out.reserve(labels_.size());
  for (auto [pos, lab] : labels_) out.push_back(lab);
  return out;
}

std::string LabeledPath::str() const {
  std::string out = path_.str() + ";";
  bool first = true;
  for (auto [pos, lab] : labels_) {
    if (!first) out.push_back(',');
    first = false;
    out += std::to_string(lab);
  }
  return out;
}

LabeledPath biane(const Involution& s) {
  const int n = s.size();
  std::vector<Step> steps;
  steps.reserve(n);
  std::map<int, int> labels;
  for (int i = 1; i <= n; ++i) {
    if (i < s(i)) {
      steps.push_back(Step::U);
    } else if (i == s(i)) {
      steps.push_back(Step::L);
    } else {
      steps.push_back(Step::D);
      int lambda = 0;
      for (int j = i; j <= n; ++j) lambda += s(j) <= s(i);
      labels.emplace(i, lambda);
    }
  }
  return LabeledPath(MotzkinPath(std::move(steps)), std::move(labels));
}

Involution biane_inverse(const LabeledPath& lp) {
  const MotzkinPath& m = lp.path();
  const int n = m.size();
  std::vector<int> word(static_cast<size_t>(n), 0);
  std::vector<int> open;
  for (int i = 1; i <= n; ++i) {
    switch (m[i]) {
      case Step::U:
        open.push_back(i);
        break;
      case Step::L:
        word[i - 1] = i;
        break;
      case Step::D: {
        const int lambda = lp.labels().at(i);
        const int up = open[lambda - 1];
        open.erase(open.begin() + (lambda - 1));
        word[i - 1] = up;
        word[up - 1] = i;
        break;
      }
    }
  }
  return Involution(Permutation(std::move(word)));
}

int h_stat(const LabeledPath& lp) {
  const auto h = lp.path().heights();
  int total = 0;
  for (int i = 1; i <= lp.size(); ++i) {
    total += lp.path()[i] == Step::D ? lp.labels().at(i) - 1 : h[i - 1];
  }
  return total;
}

namespace {

QPoly h_product(const MotzkinPath& m, int up_offset) {
  const auto h = m.heights();
  int shift = 0;
  QPoly out = QPoly::constant(1);
  for (int i = 1; i <= m.size(); ++i) {
    switch (m[i]) {
      case Step::D: out *= qint(h[i - 1]); break;
      case Step::U: shift += h[i - 1] - up_offset; break;
      case Step::L: shift += h[i - 1]; break;
    }
  }
  return out.shifted(shift);
}

}  // namespace

QPoly h_poly(const MotzkinPath& m) { return h_product(m, 0); }

QPoly h_tilde_poly(const MotzkinPath& m) { return h_product(m, 1); }

ClassSplit class_split(const Involution& s) {
  ClassSplit out;
  for (const Pair& p : visible_inversions(s.perm())) {
    (p.first <= s(p.first) ? out.class1 : out.class2).push_back(p);
  }
  return out;
}

namespace {

void extend_paths(int remaining, int height, bool allow_level, std::vector<Step>& prefix,
                  std::vector<MotzkinPath>& out) {
  if (remaining == 0) {
    if (height == 0) out.emplace_back(prefix);
    return;
  }
  if (height + 1 <= remaining - 1) {
    prefix.push_back(Step::U);
    extend_paths(remaining - 1, height + 1, allow_level, prefix, out);
    prefix.pop_back();
  }
  if (allow_level && height <= remaining - 1) {
    prefix.push_back(Step::L);
    extend_paths(remaining - 1, height, allow_level, prefix, out);
    prefix.pop_back();
  }
  if (height > 0) {
    prefix.push_back(Step::D);
    extend_paths(remaining - 1, height - 1, allow_level, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MotzkinPath> motzkin_paths(int n) {
  if (n < 0) throw std::invalid_argument("motzkin_paths: negative length");
  std::vector<MotzkinPath> out;
  std::vector<Step> prefix;
  extend_paths(n, 0, true, prefix, out);
  return out;
}

std::vector<MotzkinPath> dyck_paths(int length) {
  if (length < 0) throw std::invalid_argument("dyck_paths: negative length");
  std::vector<MotzkinPath> out;
  if (length % 2 != 0) return out;
  std::vector<Step> prefix;
  extend_paths(length, 0, false, prefix, out);
  return out;
}

std::vector<LabeledPath> labelings(const MotzkinPath& m) {
  const auto h = m.heights();
  const auto downs = m.down_positions();
  std::vector<int> bound;
  for (int pos : downs) bound.push_back(h[pos - 1]);

  std::vector<LabeledPath> out;
  std::vector<int> values(downs.size(), 1);
  // Odometer with the last down step varying fastest.
  while (true) {
    out.emplace_back(m, values);
    int k = static_cast<int>(values.size()) - 1;
    while (k >= 0 && values[k] == bound[k]) {
      values[k] = 1;
      --k;
    }
    if (k < 0) break;
    ++values[k];
  }
  return out;
}

}  // namespace invpath
