#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bisync/tokens.hpp"

namespace bisync {

// Deterministic synthetic language pair. Source tokens s<i> map through a
// seeded bijective dictionary to target tokens t<j>, and adjacent tokens at
// even positions are swapped so the pair is not trivially monotonic. Exact
// forward followed by exact backward translation is the identity.
struct ToyLanguageSpec {
  int vocab_size = 50;
  double noise_eps = 0.1;  // per-token perturbation rate under top-5 sampling
  uint64_t seed = 1;

  // dictionary[i] = target index of source token i (a permutation)
  std::vector<int> dictionary;
  std::vector<int> inverse_dictionary;
  std::unordered_map<std::string, int> src_ids;
  std::unordered_map<std::string, int> tgt_ids;
};

ToyLanguageSpec make_toy_spec(int vocab_size, double noise_eps, uint64_t seed);

enum class ToyDirection { Forward, Backward };

struct ToySampling {
  bool top5 = false;
  uint64_t item_seed = 0;
};

// Exact mapping (sampling.top5 = false) or, with top5, every output token is
// independently replaced by one of its 5 nearest vocabulary neighbours with
// probability noise_eps. Throws DataError naming any out-of-vocabulary token.
Tokens toy_translate(const ToyLanguageSpec& spec, const Tokens& input, ToyDirection dir,
                     const ToySampling& sampling = {});

// n parallel pairs with source lengths uniform in [min_len, max_len] and
// ref = exact forward translation of src.
std::vector<std::pair<Tokens, Tokens>> make_toy_corpus(const ToyLanguageSpec& spec, int n,
                                                       int min_len, int max_len, uint64_t seed);

std::string toy_src_token(int id);
std::string toy_tgt_token(int id);

}  // namespace bisync
