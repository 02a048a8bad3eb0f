#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autocomplexity/automata.hpp"
#include "autocomplexity/words.hpp"

namespace autocomplexity {

enum class ComplexityKind {
  nu,        ///< A_N = A_Nu, unique acceptance
  ne,        ///< A_Ne, exact acceptance
  det_total, ///< A, total DFA
  det_partial, ///< A^-, partial DFA
  nu_cond,   ///< A_N(x|y)
  ne_cond,   ///< A_Ne(x|y)
  /// A^-(x|y): conditional-unique with a deterministic automaton. Only used
  /// to compare J_max under the deterministic reading.
  det_partial_cond,
};

std::string to_string(ComplexityKind kind);
/// Accepts the display names ("A_Nu", ...) and the CLI spellings
/// ("anu", "ane", "a", "aminus", "anu-cond", "ane-cond", "aminus-cond").
ComplexityKind complexity_kind_from_string(const std::string& name);
bool is_conditional(ComplexityKind kind);
CertificateKind certificate_kind_for(ComplexityKind kind);

struct ComplexityQuery {
  ComplexityKind kind = ComplexityKind::nu;
  Word target;
  std::optional<Word> condition;

  /// Throws std::invalid_argument when the condition is missing, superfluous
  /// or of the wrong length.
  void validate() const;
};

ComplexityQuery unique_query(const Word& x);
ComplexityQuery conditional_query(const Word& x, const Word& y);
/// A_Nu of the track word x#y.
ComplexityQuery track_query(const Word& x, const Word& y);

struct Budget {
  /// 0 means the natural ceiling for the kind (floor(n/2)+1 for the
  /// nondeterministic kinds, n+1 for the deterministic ones).
  std::size_t max_states = 0;
  std::uint64_t max_nodes = 1'000'000'000;
};

struct ComplexityResult {
  std::size_t value = 0;
  WitnessCertificate certificate;
  /// Lexicographically least witnessing state sequence. For det_total this
  /// is the sequence of the underlying partial automaton.
  std::vector<State> witness_sequence;
  std::uint64_t explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Upper bound on the value used as the search ceiling.
std::size_t state_ceiling(const ComplexityQuery& q);

/// Ascending search over q = 1, 2, ... Every q below the returned value is
/// refuted exhaustively. Throws BudgetExceeded on node-budget overflow.
ComplexityResult compute(const ComplexityQuery& q, const Budget& budget = {});

/// As compute, but gives up (returns nullopt) once `max_states` is refuted.
std::optional<ComplexityResult> search_at_most(const ComplexityQuery& q, std::size_t max_states,
                                               const Budget& budget = {});

/// Labels read along the walk: the target, or track(condition, target).
Word walk_labels(const ComplexityQuery& q);

/// Certificate for a walk-generated witness of q.
WitnessCertificate certificate_from_sequence(const ComplexityQuery& q,
                                             std::span<const State> sequence);

/// Rebuilds a verified result from a known witness sequence (for example a
/// cached one). Returns nullopt if the sequence does not witness `value`.
std::optional<ComplexityResult> result_from_sequence(const ComplexityQuery& q,
                                                     std::span<const State> sequence,
                                                     std::size_t value);

using SequenceVisitor = std::function<bool(std::span<const State>)>;

/// Calls `visit` with every slow state sequence using exactly `at_states`
/// states whose walk automaton witnesses q, in lexicographic order, until
/// `visit` returns false. Not available for det_total.
void for_each_witness_sequence(const ComplexityQuery& q, std::size_t at_states,
                               const SequenceVisitor& visit, const Budget& budget = {});
std::vector<std::vector<State>> all_witness_sequences(const ComplexityQuery& q,
                                                      std::size_t at_states,
                                                      const Budget& budget = {});

/// Reference answer by exhausting every automaton with at most `max_states`
/// (<= 3) states: all edge sets, all accept sets, start 0. Supports the
/// nondeterministic kinds and det_partial. Requires |target| <= 8.
std::optional<std::size_t> oracle_min_states(const ComplexityQuery& q, std::size_t max_states);

}  // namespace autocomplexity
