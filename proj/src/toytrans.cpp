#include "bisync/toytrans.hpp"

#include <algorithm>
#include <numeric>

#include "bisync/errors.hpp"
#include "bisync/rng.hpp"

namespace bisync {

std::string toy_src_token(int id) { return "s" + std::to_string(id); }
std::string toy_tgt_token(int id) { return "t" + std::to_string(id); }

ToyLanguageSpec make_toy_spec(int vocab_size, double noise_eps, uint64_t seed) {
  if (vocab_size < 2) throw DataError("toy spec: vocab_size must be >= 2");
  ToyLanguageSpec spec;
  spec.vocab_size = vocab_size;
  spec.noise_eps = noise_eps;
  spec.seed = seed;
  spec.dictionary.resize(vocab_size);
  std::iota(spec.dictionary.begin(), spec.dictionary.end(), 0);
  Rng rng(derive_seed(seed, 0xd1c7));
  std::shuffle(spec.dictionary.begin(), spec.dictionary.end(), rng.engine());
  spec.inverse_dictionary.assign(vocab_size, 0);
  for (int i = 0; i < vocab_size; ++i) spec.inverse_dictionary[spec.dictionary[i]] = i;
  for (int i = 0; i < vocab_size; ++i) {
    spec.src_ids[toy_src_token(i)] = i;
    spec.tgt_ids[toy_tgt_token(i)] = i;
  }
  return spec;
}

namespace {

// Swap adjacent tokens at even positions: (0,1), (2,3), ...
void swap_pairs(std::vector<int>& ids) {
  for (size_t i = 0; i + 1 < ids.size(); i += 2) std::swap(ids[i], ids[i + 1]);
}

// The 5 nearest neighbours of id by circular vocabulary distance, in a fixed
// order (offsets +1, -1, +2, -2, +3).
int neighbor_of(int id, int pick, int vocab_size) {
  static const int offsets[5] = {1, -1, 2, -2, 3};
  int v = (id + offsets[pick]) % vocab_size;
  if (v < 0) v += vocab_size;
  return v;
}

}  // namespace

Tokens toy_translate(const ToyLanguageSpec& spec, const Tokens& input, ToyDirection dir,
                     const ToySampling& sampling) {
  const auto& ids_in = dir == ToyDirection::Forward ? spec.src_ids : spec.tgt_ids;
  std::vector<int> ids;
  ids.reserve(input.size());
  for (const auto& tok : input) {
    auto it = ids_in.find(tok);
    if (it == ids_in.end())
      throw DataError("toy_translate: out-of-vocabulary token '" + tok + "'");
    ids.push_back(it->second);
  }
  if (dir == ToyDirection::Forward) {
    for (auto& v : ids) v = spec.dictionary[v];
  } else {
    for (auto& v : ids) v = spec.inverse_dictionary[v];
  }
  swap_pairs(ids);

  if (sampling.top5 && spec.noise_eps > 0.0) {
    Rng rng(derive_seed(spec.seed, sampling.item_seed, 0x70b5));
    for (auto& v : ids)
      if (rng.bernoulli(spec.noise_eps))
        v = neighbor_of(v, rng.uniform_int(0, 4), spec.vocab_size);
  }

  Tokens out;
  out.reserve(ids.size());
  for (int v : ids)
    out.push_back(dir == ToyDirection::Forward ? toy_tgt_token(v) : toy_src_token(v));
  return out;
}

std::vector<std::pair<Tokens, Tokens>> make_toy_corpus(const ToyLanguageSpec& spec, int n,
                                                       int min_len, int max_len, uint64_t seed) {
  if (min_len < 1 || max_len < min_len) throw DataError("toy corpus: bad length range");
  std::vector<std::pair<Tokens, Tokens>> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, static_cast<uint64_t>(i)));
    const int len = rng.uniform_int(min_len, max_len);
    Tokens src;
    src.reserve(len);
    for (int j = 0; j < len; ++j)
      src.push_back(toy_src_token(rng.uniform_int(0, spec.vocab_size - 1)));
    out.emplace_back(src, toy_translate(spec, src, ToyDirection::Forward));
  }
  return out;
}

}  // namespace bisync
