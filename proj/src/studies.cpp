#include "autocomplexity/studies.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "autocomplexity/errors.hpp"
#include "walk_search.hpp"

namespace autocomplexity {

namespace {

ComplexityQuery make_query(bool exact, const Word& x, const std::optional<Word>& y) {
  if (y) return {exact ? ComplexityKind::ne_cond : ComplexityKind::nu_cond, x, y};
  return {exact ? ComplexityKind::ne : ComplexityKind::nu, x, std::nullopt};
}

bool still_witness(const Nfa& m, const ComplexityQuery& q) {
  WitnessCertificate c;
  c.kind = certificate_kind_for(q.kind);
  c.target = q.target;
  c.condition = q.condition;
  c.nfa = m;
  c.claimed_states = m.state_count();
  return verify_certificate(c).ok;
}

}  // namespace

std::vector<const ExactWitness*> SparseWitnessReport::sparse() const {
  std::vector<const ExactWitness*> out;
  for (const auto& w : exact_witnesses) {
    if (w.sparse) out.push_back(&w);
  }
  return out;
}

std::vector<const ExactWitness*> SparseWitnessReport::sparse_non_unique() const {
  std::vector<const ExactWitness*> out;
  for (const auto& w : exact_witnesses) {
    if (w.sparse && !w.unique_witness) out.push_back(&w);
  }
  return out;
}

SparseWitnessReport sparse_witness_report(const Word& x, const std::optional<Word>& y,
                                          Solver& solver) {
  if (y && y->size() != x.size()) {
    throw std::invalid_argument("sparse_witness_report: words differ in length");
  }
  const ComplexityQuery exact_q = make_query(true, x, y);
  const ComplexityQuery unique_q = make_query(false, x, y);
  SparseWitnessReport report;
  report.exact_value = solver.value(exact_q);
  report.unique_value = solver.value(unique_q);

  std::size_t most_edges = 0;
  std::map<std::size_t, std::vector<std::vector<State>>> by_edges;
  for_each_witness_sequence(
      unique_q, report.unique_value,
      [&](std::span<const State> seq) {
        const std::size_t edges = certificate_from_sequence(unique_q, seq).nfa.edge_count();
        report.unique_witness_edge_counts.insert(edges);
        by_edges[edges].emplace_back(seq.begin(), seq.end());
        most_edges = std::max(most_edges, edges);
        return true;
      },
      solver.budget());
  if (!by_edges.empty()) report.largest_unique_sequences = by_edges.rbegin()->second;

  std::map<std::pair<std::vector<Edge>, State>, std::size_t> index;
  for_each_witness_sequence(
      exact_q, report.exact_value,
      [&](std::span<const State> seq) {
        Nfa m = certificate_from_sequence(exact_q, seq).nfa;
        auto key = std::make_pair(std::vector<Edge>(m.edges().begin(), m.edges().end()),
                                  m.accepts().front());
        auto [it, inserted] = index.emplace(std::move(key), report.exact_witnesses.size());
        if (inserted) report.exact_witnesses.push_back({std::move(m), {}, false, false, false});
        report.exact_witnesses[it->second].sequences.emplace_back(seq.begin(), seq.end());
        return true;
      },
      solver.budget());

  for (auto& w : report.exact_witnesses) {
    w.edge_minimal = true;
    for (std::size_t e = 0; e < w.nfa.edge_count() && w.edge_minimal; ++e) {
      if (still_witness(w.nfa.without_edge(e), exact_q)) w.edge_minimal = false;
    }
    w.unique_witness =
        w.nfa.state_count() == report.unique_value && still_witness(w.nfa, unique_q);
    w.sparse = w.edge_minimal && w.edge_count() <= most_edges;
  }
  return report;
}

std::vector<Word> scan_sparse_unconditional(std::size_t max_len, std::size_t alphabet,
                                            Solver& solver) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (const Word& w : slow_words(n, alphabet)) {
      if (!sparse_witness_report(w, std::nullopt, solver).sparse_non_unique().empty()) {
        out.push_back(w);
      }
    }
  }
  return out;
}

bool emergent_simplicity(const Word& w, Solver& solver) {
  if (w.empty()) throw std::invalid_argument("emergent_simplicity: empty word");
  if (solver.unique(w) != w.size() / 2 + 1) return false;
  return solver.unique(power(w, 2)) < w.size();
}

std::vector<Word> search_emergent(std::size_t max_len, std::size_t alphabet, Solver& solver) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (const Word& w : slow_words(n, alphabet)) {
      if (emergent_simplicity(w, solver)) out.push_back(w);
    }
  }
  return out;
}

std::size_t single_track_complexity(const Word& x, const Word& y, const Budget& budget) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("single_track_complexity: words differ in length");
  }
  const std::size_t n = y.size();
  detail::WalkSpec spec;
  spec.labels.assign(y.symbols().begin(), y.symbols().end());
  spec.alphabet = y.alphabet_size();
  spec.second = 1;
  detail::WalkSearch search(spec, budget.max_nodes);
  auto refines_x = [&](std::span<const State> s) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (s[i] == s[j] && s[i + 1] == s[j + 1] && y[i] == y[j] && x[i] != x[j]) return false;
      }
    }
    return true;
  };
  for (std::size_t states = 1; states <= n + 1; ++states) {
    bool found = false;
    try {
      search.run(states, [&](std::span<const State> s) {
        found = refines_x(s);
        return !found;
      });
    } catch (const detail::BudgetHit&) {
      throw BudgetExceeded("single-track search exceeded node budget", states);
    }
    if (found) return states;
  }
  throw std::logic_error("single-track search found no automaton");
}

}  // namespace autocomplexity
