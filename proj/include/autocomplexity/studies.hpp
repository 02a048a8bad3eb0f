#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "autocomplexity/cache.hpp"

namespace autocomplexity {

struct ExactWitness {
  Nfa nfa;
  /// State sequences generating this automaton, lexicographic.
  std::vector<std::vector<State>> sequences;
  bool edge_minimal = false;
  /// Also a witness for the A_Nu value (same state count, unique run).
  bool unique_witness = false;
  /// Edge-minimal and no more edges than some A_Nu witness.
  bool sparse = false;

  std::size_t edge_count() const { return nfa.edge_count(); }
};

/// Exact-acceptance witnesses at the A_Ne value compared with the unique
/// ones at the A_Nu value, for x alone or x given y. Witnesses are the
/// walk-generated automata; any edge-minimal witness is one of them.
struct SparseWitnessReport {
  std::size_t exact_value = 0;
  std::size_t unique_value = 0;
  std::vector<ExactWitness> exact_witnesses;
  std::set<std::size_t> unique_witness_edge_counts;
  /// Unique witnesses with the largest edge count, with their sequences.
  std::vector<std::vector<State>> largest_unique_sequences;

  std::vector<const ExactWitness*> sparse() const;
  /// Sparse exact witnesses that are not A_Nu witnesses.
  std::vector<const ExactWitness*> sparse_non_unique() const;
};

SparseWitnessReport sparse_witness_report(const Word& x, const std::optional<Word>& y,
                                          Solver& solver);

/// Slow words of length <= max_len over the alphabet that have a sparse
/// witness which is not an A_Nu witness (unconditional case).
std::vector<Word> scan_sparse_unconditional(std::size_t max_len, std::size_t alphabet,
                                            Solver& solver);

/// A_N(w) equals floor(|w|/2)+1 and A_N(w^2) < |w|.
bool emergent_simplicity(const Word& w, Solver& solver);
/// Slow words of length 1..max_len with emergent simplicity.
std::vector<Word> search_emergent(std::size_t max_len, std::size_t alphabet, Solver& solver);

/// Least number of states of an automaton over y's alphabet that reads y
/// along exactly one walk, where the walk's edge sequence induces a
/// partition of positions refining the one induced by x.
std::size_t single_track_complexity(const Word& x, const Word& y, const Budget& budget = {});

}  // namespace autocomplexity
