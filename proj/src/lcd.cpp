#include "bisync/lcd.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisync {

// Both searches share the same ranking semantics so that constrained search
// with an empty constraint set is token-identical to beam_search: candidates
// are enumerated per hypothesis in vocabulary order, stable-sorted by score,
// finished hypotheses replace the incumbent best only when strictly better,
// and live hypotheses at max_len compete as forced finishes.

namespace {

struct Hyp {
  TokenIds tokens;
  double score = 0.0;
  int seg = 0;   // next unfinished constraint segment
  int off = 0;   // tokens already emitted of that segment
  int done = 0;  // total constraint tokens consumed
};

void offer(std::optional<DecodeResult>& best, TokenIds tokens, double score) {
  if (!best || score > best->score) best = DecodeResult{std::move(tokens), score};
}

}  // namespace

DecodeResult beam_search(const SentenceScorer& scorer, int beam, int max_len) {
  if (beam < 1) throw std::invalid_argument("beam_search: beam must be >= 1");
  const int vocab = scorer.vocab_size();
  const int eos = scorer.eos_id();

  std::vector<Hyp> live{Hyp{}};
  std::optional<DecodeResult> best;

  for (int step = 0; step < max_len && !live.empty(); ++step) {
    std::vector<Hyp> cands;
    cands.reserve(live.size() * vocab);
    for (const auto& h : live) {
      const auto lp = scorer.next_log_probs(h.tokens);
      for (int v = 0; v < vocab; ++v) {
        Hyp c;
        c.tokens = h.tokens;
        c.tokens.push_back(v);
        c.score = h.score + lp[v];
        cands.push_back(std::move(c));
      }
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Hyp& a, const Hyp& b) { return a.score > b.score; });
    live.clear();
    for (auto& c : cands) {
      if (c.tokens.back() == eos) {
        c.tokens.pop_back();
        offer(best, std::move(c.tokens), c.score);
      } else if (static_cast<int>(live.size()) < beam) {
        live.push_back(std::move(c));
      }
    }
  }
  for (auto& h : live) offer(best, std::move(h.tokens), h.score);
  return best ? *best : DecodeResult{};
}

std::optional<DecodeResult> constrained_beam_search(const SentenceScorer& scorer,
                                                    const ConstraintSet& constraints, int beam,
                                                    int max_len) {
  if (beam < 1) throw std::invalid_argument("constrained_beam_search: beam must be >= 1");
  for (const auto& seg : constraints.segments)
    if (seg.empty()) throw std::invalid_argument("constrained_beam_search: empty segment");
  const int total = constraints.total_tokens();
  if (max_len < total)
    throw std::invalid_argument("constrained_beam_search: max_len below constraint budget");

  const int vocab = scorer.vocab_size();
  const int eos = scorer.eos_id();
  const int num_segs = static_cast<int>(constraints.segments.size());

  std::vector<Hyp> live{Hyp{}};
  std::optional<DecodeResult> best;

  for (int step = 0; step < max_len && !live.empty(); ++step) {
    std::vector<Hyp> cands;
    for (const auto& h : live) {
      if (h.off > 0) {
        // Inside a segment: the only legal continuation is the next
        // constraint token (segments are contiguous).
        const auto& seg = constraints.segments[h.seg];
        Hyp c = h;
        c.tokens.push_back(seg[h.off]);
        c.score += scorer.next_log_probs(h.tokens)[seg[h.off]];
        c.done += 1;
        if (++c.off == static_cast<int>(seg.size())) {
          c.seg += 1;
          c.off = 0;
        }
        cands.push_back(std::move(c));
        continue;
      }
      const auto lp = scorer.next_log_probs(h.tokens);
      for (int v = 0; v < vocab; ++v) {
        Hyp c = h;
        c.tokens.push_back(v);
        c.score += lp[v];
        cands.push_back(std::move(c));
      }
      if (h.seg < num_segs) {
        // Same surface token as the free expansion may appear twice; the
        // two states live in different banks.
        const auto& seg = constraints.segments[h.seg];
        Hyp c = h;
        c.tokens.push_back(seg[0]);
        c.score += lp[seg[0]];
        c.done += 1;
        if (seg.size() == 1) {
          c.seg += 1;
        } else {
          c.off = 1;
        }
        cands.push_back(std::move(c));
      }
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Hyp& a, const Hyp& b) { return a.score > b.score; });

    // Siphon off finished candidates; bank the rest by constraint progress.
    std::vector<std::vector<Hyp>> banks(total + 1);
    for (auto& c : cands) {
      if (c.tokens.back() == eos) {
        if (c.done == total) {
          c.tokens.pop_back();
          offer(best, std::move(c.tokens), c.score);
        }
        continue;  // eos with unmet constraints is dead
      }
      banks[c.done].push_back(std::move(c));
    }

    // Dynamic allocation: one slot per nonempty bank, highest progress
    // first; any remaining slots go to the best leftover candidates.
    live.clear();
    std::vector<Hyp> leftovers;
    for (int b = total; b >= 0; --b) {
      if (banks[b].empty()) continue;
      if (static_cast<int>(live.size()) < beam)
        live.push_back(std::move(banks[b].front()));
      for (size_t i = 1; i < banks[b].size(); ++i)
        leftovers.push_back(std::move(banks[b][i]));
    }
    if (static_cast<int>(live.size()) < beam) {
      std::stable_sort(leftovers.begin(), leftovers.end(),
                       [](const Hyp& a, const Hyp& b) { return a.score > b.score; });
      for (auto& c : leftovers) {
        if (static_cast<int>(live.size()) >= beam) break;
        live.push_back(std::move(c));
      }
    }
  }
  for (auto& h : live)
    if (h.done == total) offer(best, std::move(h.tokens), h.score);
  return best;
}

}  // namespace bisync
