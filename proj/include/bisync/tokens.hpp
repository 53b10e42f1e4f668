#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bisync {

// All corpora are handled as whitespace tokens. Tokenization is pluggable at
// the CLI boundary but "whitespace" is the only built-in scheme.
using Token = std::string;
using Tokens = std::vector<std::string>;

inline Tokens split_tokens(std::string_view line) {
  Tokens out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string join_tokens(const Tokens& toks) {
  std::string out;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ' ';
    out += toks[i];
  }
  return out;
}

// True iff `sub` is a (not necessarily contiguous) subsequence of `seq`.
inline bool is_subsequence(const Tokens& sub, const Tokens& seq) {
  size_t i = 0;
  for (size_t j = 0; i < sub.size() && j < seq.size(); ++j)
    if (sub[i] == seq[j]) ++i;
  return i == sub.size();
}

}  // namespace bisync
