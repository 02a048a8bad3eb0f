#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "autocomplexity/automata.hpp"

namespace autocomplexity::detail {

/// Depth-first enumeration of slow state sequences s_0 = 0, s_1, ..., s_n
/// whose walk automaton (edges (s_i, label_i, s_{i+1}), accept {s_n}) is a
/// witness.
///
/// Any witness restricted to the edges of its accepting walk is still a
/// witness with no more states: the walk survives, and removing edges only
/// removes competing walks and words. So these automata suffice.
///
/// A partial sequence is abandoned as soon as the edges placed so far admit a
/// second way of reaching s_j after j steps (a second walk in unique mode,
/// a second word in exact mode). Extending that competitor with the planned
/// suffix gives a second accepting run of the whole automaton, and adding
/// edges never removes it, so the test is sound at every depth.
struct WalkSpec {
  enum class Mode { unique, exact };

  std::vector<Symbol> labels;
  std::size_t alphabet = 1;
  /// Nonzero for pair labels: the condition coordinate of label l is
  /// l / second. Only steps whose label agrees on it compete.
  std::size_t second = 0;
  Mode mode = Mode::unique;
  bool deterministic = false;
};

struct BudgetHit {};

class WalkSearch {
 public:
  using Visitor = std::function<bool(std::span<const State>)>;

  WalkSearch(WalkSpec spec, std::uint64_t node_budget);

  /// Visits witnesses using exactly `states` states. Returns false when the
  /// visitor asked to stop. Throws BudgetHit on node-budget overflow.
  bool run(std::size_t states, const Visitor& visit);

  std::uint64_t explored() const noexcept { return explored_; }

 private:
  bool descend(std::size_t depth, State fresh);
  bool competes(Symbol a, std::size_t step) const;
  // Recomputes reachability layers from `from` to `to` (inclusive target
  // layer); returns false when some s_j is reached twice.
  bool refresh(std::size_t from, std::size_t to);

  WalkSpec spec_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t explored_ = 0;

  std::size_t states_ = 0;
  const Visitor* visit_ = nullptr;
  std::vector<State> seq_;
  std::vector<Edge> edges_;
  std::vector<std::uint16_t> multiplicity_;
  std::vector<std::int32_t> det_target_;
  // unique: once_/twice_ = states reached by >= 1 / >= 2 walks after j steps.
  // exact: once_ = reached by the target prefix, twice_ = by another word.
  std::vector<std::uint64_t> once_;
  std::vector<std::uint64_t> twice_;
};

}  // namespace autocomplexity::detail
