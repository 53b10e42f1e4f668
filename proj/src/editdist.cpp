#include "bisync/editdist.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bisync {

int edit_distance(const Tokens& a, const Tokens& b) {
  const size_t n = a.size(), m = b.size();
  if (n == 0) return static_cast<int>(m);
  if (m == 0) return static_cast<int>(n);
  std::vector<int> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (size_t j = 1; j <= m; ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::optional<int> edit_distance_bounded(const Tokens& a, const Tokens& b, int max_dist) {
  const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
  if (max_dist < 0) return std::nullopt;
  if (std::abs(n - m) > max_dist) return std::nullopt;
  if (n == 0) return m <= max_dist ? std::optional<int>(m) : std::nullopt;
  if (m == 0) return n <= max_dist ? std::optional<int>(n) : std::nullopt;

  // Ukkonen band of half-width max_dist around the diagonal.
  const int inf = std::numeric_limits<int>::max() / 2;
  std::vector<int> prev(m + 1, inf), cur(m + 1, inf);
  for (int j = 0; j <= std::min(m, max_dist); ++j) prev[j] = j;
  for (int i = 1; i <= n; ++i) {
    const int lo = std::max(1, i - max_dist);
    const int hi = std::min(m, i + max_dist);
    std::fill(cur.begin(), cur.end(), inf);
    if (lo == 1 && i <= max_dist) cur[0] = i;
    int row_best = inf;
    for (int j = lo; j <= hi; ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
      row_best = std::min(row_best, cur[j]);
    }
    if (row_best > max_dist) return std::nullopt;
    std::swap(prev, cur);
  }
  return prev[m] <= max_dist ? std::optional<int>(prev[m]) : std::nullopt;
}

EditScript edit_script(const Tokens& a, const Tokens& b) {
  const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
  std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1));
  for (int i = 0; i <= n; ++i) dp[i][0] = i;
  for (int j = 0; j <= m; ++j) dp[0][j] = j;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      int sub = dp[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      dp[i][j] = std::min({sub, dp[i - 1][j] + 1, dp[i][j - 1] + 1});
    }

  EditScript script;
  script.cost = dp[n][m];
  std::vector<EditStep> rev;
  int i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && dp[i - 1][j - 1] == dp[i][j]) {
      rev.push_back({EditOp::Keep, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && j > 0 && a[i - 1] != b[j - 1] && dp[i - 1][j - 1] + 1 == dp[i][j]) {
      rev.push_back({EditOp::Sub, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && dp[i - 1][j] + 1 == dp[i][j]) {
      rev.push_back({EditOp::Del, i - 1, -1});
      --i;
    } else {
      rev.push_back({EditOp::Ins, -1, j - 1});
      --j;
    }
  }
  script.steps.assign(rev.rbegin(), rev.rend());
  return script;
}

Tokens apply_edit_script(const Tokens& a, const Tokens& b, const EditScript& script) {
  Tokens out;
  for (const auto& s : script.steps) {
    switch (s.op) {
      case EditOp::Keep: out.push_back(a[s.i]); break;
      case EditOp::Sub: out.push_back(b[s.j]); break;
      case EditOp::Ins: out.push_back(b[s.j]); break;
      case EditOp::Del: break;
    }
  }
  return out;
}

double similarity(const Tokens& x, const Tokens& y) {
  if (x.empty() && y.empty())
    throw std::invalid_argument("similarity: both inputs empty");
  const double ed = edit_distance(x, y);
  const double denom = static_cast<double>(std::max(x.size(), y.size()));
  return 1.0 - ed / denom;
}

OpClass classify_edit_ops(const Tokens& hyp, const Tokens& ref) {
  OpClass c;
  for (const auto& s : edit_script(hyp, ref).steps) {
    if (s.op == EditOp::Ins) c.ins = true;
    else if (s.op == EditOp::Sub) c.sub = true;
    else if (s.op == EditOp::Del) c.del = true;
  }
  return c;
}

std::string OpClass::label() const {
  if (empty()) return "=";
  std::string out;
  auto append = [&out](const char* part) {
    if (!out.empty()) out += '+';
    out += part;
  };
  if (ins) append("Ins");
  if (sub) append("Sub");
  if (del) append("Del");
  return out;
}

int bucket_index_of(int distance) {
  if (distance < 0) throw std::invalid_argument("bucket_index_of: negative distance");
  if (distance <= 7) return distance;
  if (distance <= 10) return 8;
  return 9;
}

std::string bucket_label(int bucket_index) {
  static const char* labels[kNumBuckets] = {"0", "1", "2", "3", "4",
                                            "5", "6", "7", "8-10", ">10"};
  if (bucket_index < 0 || bucket_index >= kNumBuckets)
    throw std::invalid_argument("bucket_label: index out of range");
  return labels[bucket_index];
}

std::vector<std::string> op_class_labels() {
  return {"=", "Ins", "Sub", "Del", "Ins+Sub", "Ins+Del", "Sub+Del", "Ins+Sub+Del"};
}

}  // namespace bisync
