// Reference search over all small automata. It shares no code with the walk
// search; every candidate is judged by the counting routines in automata.cpp.
//
// Both "number of accepting runs" measures are monotone in the edge set, so
// a branch-and-bound over include/exclude decisions visits every automaton
// implicitly: a branch dies when the edges already included admit two runs
// (or one run spelling the wrong word), or when even including every
// undecided edge cannot accept the target. Undecided edges on no
// target-reading walk are dropped by dominance.

#include <optional>
#include <stdexcept>

#include "autocomplexity/complexity.hpp"

namespace autocomplexity {

namespace {

struct Status {
  std::uint64_t runs = 0;
  bool reads_target = false;
};

class Oracle {
 public:
  Oracle(const ComplexityQuery& q, std::size_t states)
      : q_(q), labels_(walk_labels(q)), states_(states) {
    // Under the projection filter an edge whose condition symbol never occurs
    // in the condition word is never read, so it cannot affect any count.
    std::vector<bool> readable(labels_.alphabet_size(), true);
    if (q.condition) {
      const std::size_t d = q.target.alphabet_size();
      std::vector<bool> present(q.condition->alphabet_size(), false);
      for (Symbol c : q.condition->symbols()) present[c] = true;
      for (Symbol l = 0; l < readable.size(); ++l) readable[l] = present[l / d];
    }
    for (State from = 0; from < states; ++from) {
      for (Symbol l = 0; l < labels_.alphabet_size(); ++l) {
        if (!readable[l]) continue;
        for (State to = 0; to < states; ++to) all_.push_back({from, l, to});
      }
    }
  }

  bool any_witness() {
    for (std::uint32_t mask = 1; mask < (1u << states_); ++mask) {
      accepts_.clear();
      for (State s = 0; s < states_; ++s) {
        if (mask & (1u << s)) accepts_.push_back(s);
      }
      std::vector<Edge> included;
      std::vector<std::size_t> undecided(all_.size());
      for (std::size_t j = 0; j < all_.size(); ++j) undecided[j] = all_.size() - 1 - j;
      if (branch(std::move(undecided), included)) return true;
    }
    return false;
  }

 private:
  Nfa build(std::vector<Edge> edges) const {
    return Nfa(states_, labels_.alphabet_size(), 0, accepts_, std::move(edges));
  }

  Status status(const Nfa& m) const {
    Status s;
    switch (q_.kind) {
      case ComplexityKind::nu:
      case ComplexityKind::det_partial:
        s.runs = count_accepting_walks(m, labels_.size()).count;
        s.reads_target = accepts_word(m, labels_);
        break;
      case ComplexityKind::ne:
        s.runs = count_accepted_words(m, labels_.size()).count;
        s.reads_target = accepts_word(m, labels_);
        break;
      case ComplexityKind::nu_cond:
      case ComplexityKind::ne_cond: {
        const auto r = q_.kind == ComplexityKind::nu_cond
                           ? count_walks_given_projection(m, *q_.condition)
                           : count_words_given_projection(m, *q_.condition);
        s.runs = r.count;
        s.reads_target = r.count == 1 ? *r.reconstruction == q_.target : accepts_word(m, labels_);
        break;
      }
      default:
        throw std::invalid_argument("oracle does not support " + to_string(q_.kind));
    }
    return s;
  }

  bool conflicts(const std::vector<Edge>& included, const Edge& e) const {
    if (q_.kind != ComplexityKind::det_partial) return false;
    for (const Edge& f : included) {
      if (f.from == e.from && f.label == e.label) return true;
    }
    return false;
  }

  /// Undecided edges that lie on some accepting walk reading the labels in
  /// included + undecided. Empty optional when no such walk exists.
  std::optional<std::vector<std::size_t>> useful(const std::vector<Edge>& included,
                                                 const std::vector<std::size_t>& undecided) const {
    std::vector<Edge> edges = included;
    for (std::size_t j : undecided) edges.push_back(all_[j]);
    const std::size_t n = labels_.size();
    std::vector<std::vector<bool>> fwd(n + 1, std::vector<bool>(states_, false));
    std::vector<std::vector<bool>> bwd(n + 1, std::vector<bool>(states_, false));
    fwd[0][0] = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (const Edge& e : edges) {
        if (e.label == labels_[i] && fwd[i][e.from]) fwd[i + 1][e.to] = true;
      }
    }
    for (State a : accepts_) bwd[n][a] = true;
    for (std::size_t i = n; i-- > 0;) {
      for (const Edge& e : edges) {
        if (e.label == labels_[i] && bwd[i + 1][e.to]) bwd[i][e.from] = true;
      }
    }
    if (!bwd[0][0]) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t j : undecided) {
      const Edge& e = all_[j];
      for (std::size_t i = 0; i < n; ++i) {
        if (e.label == labels_[i] && fwd[i][e.from] && bwd[i + 1][e.to]) {
          out.push_back(j);
          break;
        }
      }
    }
    return out;
  }

  // Dominance: removing an edge that lies on no target-reading walk keeps
  // the target accepted and cannot add runs, so such edges are excluded.
  bool branch(std::vector<std::size_t> undecided, std::vector<Edge>& included) {
    const auto kept = useful(included, undecided);
    if (!kept) return false;
    undecided = *kept;

    const Status low = status(build(included));
    if (low.runs >= 2 || (low.runs == 1 && !low.reads_target)) return false;
    // Excluding every undecided edge is one of the leaves below.
    if (low.runs == 1 && low.reads_target) return true;
    if (undecided.empty()) return false;

    const std::size_t next = undecided.back();
    undecided.pop_back();
    if (!conflicts(included, all_[next])) {
      included.push_back(all_[next]);
      const bool hit = branch(undecided, included);
      included.pop_back();
      if (hit) return true;
    }
    return branch(std::move(undecided), included);
  }

  const ComplexityQuery& q_;
  Word labels_;
  std::size_t states_;
  std::vector<Edge> all_;
  std::vector<State> accepts_;
};

}  // namespace

std::optional<std::size_t> oracle_min_states(const ComplexityQuery& q, std::size_t max_states) {
  q.validate();
  if (max_states > 3) throw std::invalid_argument("oracle is limited to 3 states");
  if (q.target.size() > 8) throw std::invalid_argument("oracle is limited to words of length 8");
  for (std::size_t k = 1; k <= max_states; ++k) {
    if (Oracle(q, k).any_witness()) return k;
  }
  return std::nullopt;
}

}  // namespace autocomplexity
