#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autocomplexity/words.hpp"

namespace autocomplexity {

using State = std::uint32_t;

struct Edge {
  State from;
  Symbol label;
  State to;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Nondeterministic finite automaton without epsilon moves. Edges are kept
/// sorted and duplicate-free; accept states sorted and duplicate-free.
class Nfa {
 public:
  Nfa(std::size_t state_count, std::size_t alphabet_size, State start,
      std::vector<State> accepts, std::vector<Edge> edges);

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  State start() const noexcept { return start_; }
  std::span<const State> accepts() const noexcept { return accepts_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool is_accepting(State s) const;

  Nfa without_edge(std::size_t index) const;

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  std::size_t state_count_;
  std::size_t alphabet_size_;
  State start_;
  std::vector<State> accepts_;
  std::vector<Edge> edges_;
};

/// Saturating counter result: `count` is exact below `cap`; a value equal to
/// `cap` means "at least cap".
struct CountResult {
  std::uint64_t count = 0;
  std::uint64_t cap = 2;
  /// Present only when count == 1 for the projection-filtered counts: the
  /// second coordinate of the single label word.
  std::optional<Word> reconstruction;

  bool saturated() const noexcept { return count >= cap; }
};

inline constexpr std::size_t kDefaultSubsetLimit = 24;

/// Accepting walks of length n from the start state; parallel edges count
/// separately.
CountResult count_accepting_walks(const Nfa& m, std::size_t n, std::uint64_t cap = 2);

/// Distinct words of length n in L(m), via on-the-fly subset construction.
/// Throws CapacityError when m has more than `subset_limit` states.
CountResult count_accepted_words(const Nfa& m, std::size_t n, std::uint64_t cap = 2,
                                 std::size_t subset_limit = kDefaultSubsetLimit);

/// m reads pair symbols (condition, target) encoded as c * D + t with
/// D = m.alphabet_size() / y.alphabet_size(). Counts accepting walks whose
/// condition coordinate spells y.
CountResult count_walks_given_projection(const Nfa& m, const Word& y, std::uint64_t cap = 2);

/// As above, counting distinct label words instead of walks.
CountResult count_words_given_projection(const Nfa& m, const Word& y, std::uint64_t cap = 2,
                                         std::size_t subset_limit = kDefaultSubsetLimit);

/// True when some walk from the start reads w and ends in an accept state.
bool accepts_word(const Nfa& m, const Word& w);

/// Product erasing the condition coordinate: m1 over C x T, m2 over C.
/// Result reads T. State (q, q') is numbered q * |Q2| + q'.
Nfa product_project(const Nfa& m1, const Nfa& m2);
/// Same state space as product_project but edges keep the pair label.
Nfa product_track(const Nfa& m1, const Nfa& m2);

/// Automaton made of exactly the edges of one walk. `states` must be a slow
/// sequence of length labels.size() + 1. Accept state is the last one.
Nfa walk_nfa(std::span<const State> states, const Word& labels);

bool is_deterministic(const Nfa& m);
bool is_total(const Nfa& m);

/// Diagonal one-state automaton over the pair alphabet {(s, s)}.
Nfa diagonal_nfa(std::size_t alphabet_size);

enum class CertificateKind {
  unique,
  exact,
  conditional_unique,
  conditional_exact,
  det_partial,
  det_total,
};

std::string to_string(CertificateKind kind);
CertificateKind certificate_kind_from_string(const std::string& name);
bool is_conditional(CertificateKind kind);

/// An automaton together with the claim it proves: the complexity of
/// `target` (given `condition`, for the conditional kinds) is at most
/// `claimed_states`.
struct WitnessCertificate {
  CertificateKind kind = CertificateKind::unique;
  Word target;
  std::optional<Word> condition;
  Nfa nfa{1, 1, 0, {0}, {}};
  std::size_t claimed_states = 1;

  friend bool operator==(const WitnessCertificate&, const WitnessCertificate&) = default;
};

struct Verdict {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks structure (claimed_states, condition presence, alphabet shapes)
/// and then the acceptance condition of the certificate's kind.
Verdict verify_certificate(const WitnessCertificate& c);

/// Graphviz digraph. With `pair_second_size > 0` labels are rendered as
/// (condition,target) pairs.
std::string to_dot(const Nfa& m, std::size_t pair_second_size = 0);

std::string to_json(const WitnessCertificate& c);
/// Throws ParseError on malformed JSON or schema violations.
WitnessCertificate from_json(const std::string& text);

}  // namespace autocomplexity
