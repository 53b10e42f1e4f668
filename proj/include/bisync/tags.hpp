#pragma once

#include <optional>
#include <string>

#include "bisync/tokens.hpp"

namespace bisync {

// Reserved vocabulary entries. Tag tokens and [sep] never occur in ordinary
// text; corpus loaders reject them outside their protocol positions.
namespace special {
inline constexpr const char* kPad = "[pad]";
inline constexpr const char* kBos = "[bos]";
inline constexpr const char* kEos = "[eos]";
inline constexpr const char* kSep = "[sep]";
inline constexpr const char* kGap = "[gap]";
inline constexpr const char* kPlh = "[plh]";
inline constexpr const char* kUnk = "[unk]";
inline constexpr const char* kIns = "[ins]";
inline constexpr const char* kNoIns = "[!ins]";
inline constexpr const char* kSub = "[sub]";
inline constexpr const char* kNoSub = "[!sub]";
inline constexpr const char* kDel = "[del]";
inline constexpr const char* kNoDel = "[!del]";
}  // namespace special

// The three binary edit tags of the autoregressive editor. Canonical token
// rendering is three tokens in (ins, sub, del) order; TSV rendering is three
// chars over {0,1} in the same order.
struct EditTagSet {
  bool ins = false;
  bool sub = false;
  bool del = false;

  bool operator==(const EditTagSet&) const = default;
  bool all_negative() const { return !ins && !sub && !del; }
  int positive_count() const { return int(ins) + int(sub) + int(del); }

  Tokens to_tokens() const;
  std::string to_tsv() const;

  // Throw DataError with the offending position on malformed input.
  static EditTagSet from_tokens(const Tokens& toks, size_t offset = 0);
  static EditTagSet from_tsv(const std::string& s);
};

bool is_tag_token(const std::string& tok);
bool is_special_token(const std::string& tok);

}  // namespace bisync
