#include "invpath/rook.hpp"

#include <sstream>
#include <stdexcept>

namespace invpath {

namespace {

void require_dyck(const MotzkinPath& m, const char* who) {
  if (!m.is_dyck()) {
    throw std::invalid_argument(std::string(who) + ": \"" + m.str() + "\" has horizontal steps");
  }
}

}  // namespace

void RookPlacement::validate() const {
  const int n = static_cast<int>(row_lengths.size());
  if (static_cast<int>(rooks.size()) != n) {
    throw std::invalid_argument("rook placement: " + std::to_string(rooks.size()) + " rooks for " +
                                std::to_string(n) + " rows");
  }
  for (int i = 1; i <= n; ++i) {
    const int len = row_lengths[i - 1];
    if (len < i || (i > 1 && len < row_lengths[i - 2])) {
      throw std::invalid_argument("rook placement: row " + std::to_string(i) + " of length " +
                                  std::to_string(len) + " is not cut out by a Dyck path");
    }
  }
  if (n > 0 && row_lengths.back() != n) {
    throw std::invalid_argument("rook placement: last row must have length " + std::to_string(n));
  }
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    const int c = rooks[i - 1];
    if (c < 1 || c > row_lengths[i - 1]) {
      throw std::invalid_argument("rook placement: rook in row " + std::to_string(i) +
                                  " at column " + std::to_string(c) + " lies outside the diagram");
    }
    if (used[c]) {
      throw std::invalid_argument("rook placement: column " + std::to_string(c) + " used twice");
    }
    used[c] = true;
  }
}

std::string RookPlacement::str() const {
  std::string out;
  for (size_t i = 0; i < row_lengths.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(row_lengths[i]);
  }
  out.push_back('|');
  for (size_t i = 0; i < rooks.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(i + 1) + "->" + std::to_string(rooks[i]);
  }
  return out;
}

RookPlacement RookPlacement::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("rook placement: missing '|'");
  RookPlacement rp;
  auto split = [](std::string_view s) {
    std::vector<std::string> parts;
    std::istringstream is{std::string(s)};
    std::string tok;
    while (std::getline(is, tok, ',')) parts.push_back(tok);
    return parts;
  };
  auto to_int = [&](const std::string& tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) {
      throw std::invalid_argument("rook placement: bad number \"" + tok + "\" in \"" +
                                  std::string(text) + "\"");
    }
    return v;
  };
  for (const auto& tok : split(text.substr(0, bar))) rp.row_lengths.push_back(to_int(tok));
  int expected_row = 1;
  for (const auto& tok : split(text.substr(bar + 1))) {
    const auto arrow = tok.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("rook placement: bad pair \"" + tok + "\"");
    if (to_int(tok.substr(0, arrow)) != expected_row++) {
      throw std::invalid_argument("rook placement: rows must be listed in order");
    }
    rp.rooks.push_back(to_int(tok.substr(arrow + 2)));
  }
  rp.validate();
  return rp;
}

RookPlacement to_rook_placement(const LabeledPath& dp) {
  const MotzkinPath& m = dp.path();
  require_dyck(m, "to_rook_placement");
  const int n = m.size() / 2;
  RookPlacement rp;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  int ups = 0;
  for (int i = 1; i <= m.size(); ++i) {
    if (m[i] == Step::U) {
      ++ups;
      continue;
    }
    rp.row_lengths.push_back(ups);
    int remaining = dp.labels().at(i);
    int col = 0;
    while (remaining > 0) {
      ++col;
      if (!used[col]) --remaining;
    }
    used[col] = true;
    rp.rooks.push_back(col);
  }
  return rp;
}

LabeledPath from_rook_placement(const RookPlacement& rp) {
  rp.validate();
  const int n = static_cast<int>(rp.row_lengths.size());
  std::vector<Step> steps;
  std::vector<int> labels;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    for (int k = prev; k < rp.row_lengths[i - 1]; ++k) steps.push_back(Step::U);
    steps.push_back(Step::D);
    prev = rp.row_lengths[i - 1];
    const int col = rp.rooks[i - 1];
    int lambda = 1;
    for (int c = 1; c < col; ++c) lambda += !used[c];
    used[col] = true;
    labels.push_back(lambda);
  }
  return LabeledPath(MotzkinPath(std::move(steps)), labels);
}

QPoly watson_weight(const MotzkinPath& dyck) {
  require_dyck(dyck, "watson_weight");
  QPoly out = QPoly::constant(1);
  int shift = 0;
  const auto downs = dyck.down_positions();
  for (int i = 1; i <= static_cast<int>(downs.size()); ++i) {
    const int excess = downs[i - 1] - 2 * i;
    shift += excess;
    out *= qint(excess + 1);
  }
  return out.shifted(shift);
}

}  // namespace invpath
