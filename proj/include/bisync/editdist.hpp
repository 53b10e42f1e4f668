#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bisync/tokens.hpp"

namespace bisync {

// Token-level Levenshtein machinery: distance, alignment scripts, the
// normalized similarity used for fuzzy matching, and the stratification
// helpers (distance buckets, edit-operation classes) used by evaluation.

enum class EditOp { Keep, Del, Ins, Sub };

struct EditStep {
  EditOp op;
  // i indexes the first sequence, j the second; -1 when the op does not
  // consume a position on that side (Ins has i = -1, Del has j = -1).
  int i;
  int j;
};

struct EditScript {
  std::vector<EditStep> steps;
  int cost = 0;  // number of non-Keep steps == Levenshtein distance
};

// Unit-cost Levenshtein distance with substitutions.
int edit_distance(const Tokens& a, const Tokens& b);

// Banded variant with early exit: returns the exact distance whenever it is
// <= max_dist, nullopt otherwise.
std::optional<int> edit_distance_bounded(const Tokens& a, const Tokens& b, int max_dist);

// Minimal alignment of a onto b. Ties in the DP backtrace are broken by
// preferring Keep, then Sub, then Del, then Ins, which makes the script (and
// everything derived from it) deterministic.
EditScript edit_script(const Tokens& a, const Tokens& b);

// Applies a script produced by edit_script(a, b) to a; the result is b.
Tokens apply_edit_script(const Tokens& a, const Tokens& b, const EditScript& script);

// sim(x, y) = 1 - ED(x, y) / max(|x|, |y|). Throws std::invalid_argument when
// both inputs are empty.
double similarity(const Tokens& x, const Tokens& y);

// Which edit kinds appear in the minimal (tie-broken) script from hyp to ref.
// The empty class means hyp == ref.
struct OpClass {
  bool ins = false;
  bool sub = false;
  bool del = false;

  bool operator==(const OpClass&) const = default;
  bool empty() const { return !ins && !sub && !del; }

  // Label in the reporting scheme: "=", "Ins", "Sub", "Del", "Ins+Sub",
  // "Ins+Del", "Sub+Del", "Ins+Sub+Del".
  std::string label() const;
};

OpClass classify_edit_ops(const Tokens& hyp, const Tokens& ref);

// Distance buckets 0..7, 8-10, >10.
inline constexpr int kNumBuckets = 10;

// Bucket index in [0, kNumBuckets).
int bucket_index_of(int distance);
std::string bucket_label(int bucket_index);
inline std::string bucket_of(int distance) { return bucket_label(bucket_index_of(distance)); }

// All 8 op-class labels in reporting order.
std::vector<std::string> op_class_labels();

}  // namespace bisync
