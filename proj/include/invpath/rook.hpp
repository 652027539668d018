#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "invpath/paths.hpp"
#include "invpath/qpoly.hpp"

namespace invpath {

/// A full rook placement on the Young diagram cut out by a Dyck path.
///
/// Row i belongs to the i-th down step of the path (top row first), so row
/// lengths are weakly increasing and the last row spans the full width n.
/// Columns are counted from 1 at the left edge. rooks[i-1] is the column of
/// the rook in row i.
struct RookPlacement {
  std::vector<int> row_lengths;
  std::vector<int> rooks;

  /// Throws std::invalid_argument when the shape is not cut out by a Dyck
  /// path, or a rook repeats a column or leaves its row.
  void validate() const;

  /// "2,2|1->2,2->1": row lengths, then row->column pairs.
  std::string str() const;
  static RookPlacement parse(std::string_view text);

  friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
};

/// Processing rows top to bottom, row i gets its rook in the λ-th leftmost
/// column not already holding a rook. Rejects paths with L steps.
RookPlacement to_rook_placement(const LabeledPath& dp);

LabeledPath from_rook_placement(const RookPlacement& rp);

/// Π_{i in [n]} q^{d_i - 2i} [d_i - 2i + 1]_q with d_i the position of the
/// i-th down step. Rejects paths with L steps.
QPoly watson_weight(const MotzkinPath& dyck);

}  // namespace invpath
