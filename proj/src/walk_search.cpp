#include "walk_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace autocomplexity::detail {

WalkSearch::WalkSearch(WalkSpec spec, std::uint64_t node_budget)
    : spec_(std::move(spec)), n_(spec_.labels.size()), budget_(node_budget) {}

bool WalkSearch::run(std::size_t states, const Visitor& visit) {
  if (states == 0 || states > 64) throw std::invalid_argument("state count must be in 1..64");
  states_ = states;
  visit_ = &visit;
  seq_.assign(n_ + 1, 0);
  edges_.clear();
  multiplicity_.assign(states * spec_.alphabet * states, 0);
  det_target_.assign(states * spec_.alphabet, -1);
  once_.assign((n_ + 1) * (n_ + 1), 0);
  twice_.assign((n_ + 1) * (n_ + 1), 0);
  once_[0] = 1;
  return descend(0, 1);
}

bool WalkSearch::competes(Symbol a, std::size_t step) const {
  if (spec_.second == 0) return true;
  return a / spec_.second == spec_.labels[step] / spec_.second;
}

// Layer block for depth d starts at d * (n + 1); entry j describes walks of
// length j using the edges present at depth d.
bool WalkSearch::refresh(std::size_t from, std::size_t to) {
  const std::size_t stride = n_ + 1;
  std::uint64_t* once = &once_[to * stride];
  std::uint64_t* twice = &twice_[to * stride];
  const bool exact = spec_.mode == WalkSpec::Mode::exact;
  for (std::size_t j = from; j < to; ++j) {
    const std::uint64_t o = once[j];
    const std::uint64_t t = twice[j];
    std::uint64_t no = 0;
    std::uint64_t nt = 0;
    const Symbol want = spec_.labels[j];
    for (const Edge& e : edges_) {
      if (!competes(e.label, j)) continue;
      const std::uint64_t fb = std::uint64_t{1} << e.from;
      const std::uint64_t tb = std::uint64_t{1} << e.to;
      if (exact) {
        if (t & fb) nt |= tb;
        if (o & fb) {
          if (e.label == want) {
            no |= tb;
          } else {
            nt |= tb;
          }
        }
      } else if (t & fb) {
        no |= tb;
        nt |= tb;
      } else if (o & fb) {
        if (no & tb) nt |= tb;
        no |= tb;
      }
    }
    once[j + 1] = no;
    twice[j + 1] = nt;
    if (nt & (std::uint64_t{1} << seq_[j + 1])) return false;
  }
  return true;
}

bool WalkSearch::descend(std::size_t depth, State fresh) {
  if (++explored_ > budget_) throw BudgetHit{};
  if (depth == n_) {
    if (fresh != states_) return true;
    return (*visit_)(std::span<const State>(seq_.data(), n_ + 1));
  }
  const std::size_t stride = n_ + 1;
  const State from = seq_[depth];
  const Symbol label = spec_.labels[depth];
  const State top = std::min<State>(fresh, static_cast<State>(states_ - 1));
  for (State to = 0; to <= top; ++to) {
    const State next_fresh = to == fresh ? fresh + 1 : fresh;
    if (states_ - next_fresh > n_ - (depth + 1)) continue;
    std::int32_t& det = det_target_[from * spec_.alphabet + label];
    if (spec_.deterministic && det >= 0 && det != static_cast<std::int32_t>(to)) continue;

    const std::size_t key = (from * spec_.alphabet + label) * states_ + to;
    const bool new_edge = multiplicity_[key]++ == 0;
    if (new_edge) {
      edges_.push_back({from, label, to});
      det = static_cast<std::int32_t>(to);
    }
    seq_[depth + 1] = to;

    bool ok;
    if (new_edge) {
      once_[(depth + 1) * stride] = 1;
      twice_[(depth + 1) * stride] = 0;
      ok = refresh(0, depth + 1);
    } else {
      std::copy_n(&once_[depth * stride], depth + 1, &once_[(depth + 1) * stride]);
      std::copy_n(&twice_[depth * stride], depth + 1, &twice_[(depth + 1) * stride]);
      ok = refresh(depth, depth + 1);
    }
    const bool keep_going = !ok || descend(depth + 1, next_fresh);

    if (--multiplicity_[key] == 0) {
      edges_.pop_back();
      det = -1;
    }
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace autocomplexity::detail
