#pragma once

#include <optional>
#include <vector>

#include "bisync/tokens.hpp"

namespace bisync {

// Lexically constrained beam decoding over any model exposing next-token
// distributions. Sequences are integer token ids; callers map tokens <-> ids
// at the boundary.

using TokenIds = std::vector<int>;

// Next-token scorer already conditioned on a source sentence.
class SentenceScorer {
 public:
  virtual ~SentenceScorer() = default;
  virtual int vocab_size() const = 0;
  virtual int eos_id() const = 0;
  // Log probabilities over the vocabulary for the position following prefix.
  virtual std::vector<double> next_log_probs(const TokenIds& prefix) const = 0;
};

// Ordered segments that must each appear contiguously, in order, in the
// output. Segments may not overlap or nest (guaranteed by construction in
// the synthesis pipeline).
struct ConstraintSet {
  std::vector<TokenIds> segments;

  int total_tokens() const {
    int n = 0;
    for (const auto& s : segments) n += static_cast<int>(s.size());
    return n;
  }
};

struct DecodeResult {
  TokenIds tokens;  // without eos
  double score = 0.0;
};

// Plain beam search: expand every live hypothesis over the full vocabulary,
// keep the top `beam` by score, finish on eos or at max_len. Returns the
// best finished hypothesis (falling back to the best live one at max_len).
DecodeResult beam_search(const SentenceScorer& scorer, int beam, int max_len);

// Constrained search with dynamic beam allocation: candidates are banked by
// the number of constraint tokens consumed and every nonempty bank keeps at
// least one hypothesis; when banks outnumber beam slots, banks win best-first
// from the highest progress down. A hypothesis inside a segment can only
// extend that segment. Returns nullopt when no hypothesis satisfies all
// constraints within max_len.
std::optional<DecodeResult> constrained_beam_search(const SentenceScorer& scorer,
                                                    const ConstraintSet& constraints, int beam,
                                                    int max_len);

}  // namespace bisync
