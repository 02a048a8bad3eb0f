#include "autocomplexity/complexity.hpp"

#include <stdexcept>

#include "autocomplexity/errors.hpp"
#include "walk_search.hpp"

namespace autocomplexity {

namespace {

constexpr ComplexityKind kAllKinds[] = {
    ComplexityKind::nu,      ComplexityKind::ne,      ComplexityKind::det_total,
    ComplexityKind::det_partial, ComplexityKind::nu_cond, ComplexityKind::ne_cond,
    ComplexityKind::det_partial_cond,
};

std::string cli_name(ComplexityKind kind) {
  switch (kind) {
    case ComplexityKind::nu: return "anu";
    case ComplexityKind::ne: return "ane";
    case ComplexityKind::det_total: return "a";
    case ComplexityKind::det_partial: return "aminus";
    case ComplexityKind::nu_cond: return "anu-cond";
    case ComplexityKind::ne_cond: return "ane-cond";
    case ComplexityKind::det_partial_cond: return "aminus-cond";
  }
  return "?";
}

detail::WalkSpec walk_spec(const ComplexityQuery& q) {
  detail::WalkSpec spec;
  const Word labels = walk_labels(q);
  spec.labels.assign(labels.symbols().begin(), labels.symbols().end());
  spec.alphabet = labels.alphabet_size();
  if (is_conditional(q.kind)) spec.second = q.target.alphabet_size();
  switch (q.kind) {
    case ComplexityKind::ne:
    case ComplexityKind::ne_cond:
      spec.mode = detail::WalkSpec::Mode::exact;
      break;
    case ComplexityKind::det_partial:
    case ComplexityKind::det_partial_cond:
    case ComplexityKind::det_total:
      spec.deterministic = true;
      break;
    default:
      break;
  }
  return spec;
}

ComplexityQuery as_partial(const ComplexityQuery& q) {
  ComplexityQuery p = q;
  p.kind = ComplexityKind::det_partial;
  return p;
}

// Tries every way of filling the missing transitions of a partial DFA with
// its own states; returns the first total automaton that still accepts only
// the target among words of its length.
std::optional<Nfa> complete_in_place(const Nfa& partial, std::size_t n) {
  const std::size_t k = partial.state_count();
  const std::size_t a = partial.alphabet_size();
  std::vector<char> present(k * a, 0);
  for (const Edge& e : partial.edges()) present[e.from * a + e.label] = 1;
  std::vector<std::pair<State, Symbol>> holes;
  for (State s = 0; s < k; ++s) {
    for (Symbol l = 0; l < a; ++l) {
      if (!present[s * a + l]) holes.emplace_back(s, l);
    }
  }
  double combos = 1;
  for (std::size_t i = 0; i < holes.size(); ++i) combos *= static_cast<double>(k);
  if (combos > 4.0e6) {
    throw CapacityError("total-DFA completion would try " + std::to_string(combos) +
                        " transition tables");
  }
  std::vector<State> choice(holes.size(), 0);
  std::vector<Edge> base(partial.edges().begin(), partial.edges().end());
  while (true) {
    std::vector<Edge> edges = base;
    for (std::size_t i = 0; i < holes.size(); ++i) {
      edges.push_back({holes[i].first, holes[i].second, choice[i]});
    }
    Nfa total(k, a, partial.start(),
              std::vector<State>(partial.accepts().begin(), partial.accepts().end()),
              std::move(edges));
    // deterministic, so walks and words coincide
    if (count_accepting_walks(total, n).count == 1) return total;
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < k) break;
      choice[i] = 0;
    }
    if (i == choice.size()) return std::nullopt;
  }
}

Nfa complete_with_sink(const Nfa& partial) {
  const std::size_t k = partial.state_count();
  const std::size_t a = partial.alphabet_size();
  std::vector<char> present(k * a, 0);
  std::vector<Edge> edges(partial.edges().begin(), partial.edges().end());
  for (const Edge& e : edges) present[e.from * a + e.label] = 1;
  const State sink = static_cast<State>(k);
  for (State s = 0; s <= k; ++s) {
    for (Symbol l = 0; l < a; ++l) {
      if (s == sink || !present[s * a + l]) edges.push_back({s, l, sink});
    }
  }
  return Nfa(k + 1, a, partial.start(),
             std::vector<State>(partial.accepts().begin(), partial.accepts().end()),
             std::move(edges));
}

void check_result(const ComplexityResult& r) {
  const Verdict v = verify_certificate(r.certificate);
  if (!v) throw std::logic_error("search produced an invalid certificate: " + v.diagnostic);
}

std::optional<ComplexityResult> search_total(const ComplexityQuery& q, std::size_t max_states,
                                             const Budget& budget) {
  const auto start = std::chrono::steady_clock::now();
  const ComplexityQuery partial_query = as_partial(q);
  auto partial = search_at_most(partial_query, max_states, budget);
  if (!partial) return std::nullopt;
  const std::size_t k = partial->value;
  const std::size_t n = q.target.size();

  ComplexityResult r;
  r.explored = partial->explored;
  r.certificate.kind = CertificateKind::det_total;
  r.certificate.target = q.target;
  std::optional<Nfa> found;
  std::vector<State> found_seq;
  Budget rest = budget;
  rest.max_nodes = budget.max_nodes > r.explored ? budget.max_nodes - r.explored : 0;
  for_each_witness_sequence(
      partial_query, k,
      [&](std::span<const State> seq) {
        auto total = complete_in_place(certificate_from_sequence(partial_query, seq).nfa, n);
        if (!total) return true;
        found = std::move(total);
        found_seq.assign(seq.begin(), seq.end());
        return false;
      },
      rest);
  if (found) {
    r.value = k;
    r.certificate.nfa = *found;
    r.witness_sequence = found_seq;
  } else {
    if (k + 1 > max_states) return std::nullopt;
    r.value = k + 1;
    r.certificate.nfa = complete_with_sink(partial->certificate.nfa);
    r.witness_sequence = partial->witness_sequence;
  }
  r.certificate.claimed_states = r.value;
  r.elapsed = std::chrono::steady_clock::now() - start;
  check_result(r);
  return r;
}

}  // namespace

std::string to_string(ComplexityKind kind) {
  switch (kind) {
    case ComplexityKind::nu: return "A_Nu";
    case ComplexityKind::ne: return "A_Ne";
    case ComplexityKind::det_total: return "A";
    case ComplexityKind::det_partial: return "A_minus";
    case ComplexityKind::nu_cond: return "A_Nu_cond";
    case ComplexityKind::ne_cond: return "A_Ne_cond";
    case ComplexityKind::det_partial_cond: return "A_minus_cond";
  }
  return "?";
}

ComplexityKind complexity_kind_from_string(const std::string& name) {
  for (ComplexityKind k : kAllKinds) {
    if (name == to_string(k) || name == cli_name(k)) return k;
  }
  throw std::invalid_argument("unknown complexity kind '" + name + "'");
}

bool is_conditional(ComplexityKind kind) {
  return kind == ComplexityKind::nu_cond || kind == ComplexityKind::ne_cond ||
         kind == ComplexityKind::det_partial_cond;
}

CertificateKind certificate_kind_for(ComplexityKind kind) {
  switch (kind) {
    case ComplexityKind::nu: return CertificateKind::unique;
    case ComplexityKind::ne: return CertificateKind::exact;
    case ComplexityKind::det_total: return CertificateKind::det_total;
    case ComplexityKind::det_partial: return CertificateKind::det_partial;
    case ComplexityKind::nu_cond: return CertificateKind::conditional_unique;
    case ComplexityKind::ne_cond: return CertificateKind::conditional_exact;
    case ComplexityKind::det_partial_cond: return CertificateKind::conditional_unique;
  }
  return CertificateKind::unique;
}

void ComplexityQuery::validate() const {
  if (is_conditional(kind) != condition.has_value()) {
    throw std::invalid_argument(to_string(kind) + (condition ? " takes no condition word"
                                                             : " needs a condition word"));
  }
  if (condition && condition->size() != target.size()) {
    throw std::invalid_argument("condition and target differ in length");
  }
}

ComplexityQuery unique_query(const Word& x) { return {ComplexityKind::nu, x, std::nullopt}; }

ComplexityQuery conditional_query(const Word& x, const Word& y) {
  return {ComplexityKind::nu_cond, x, y};
}

ComplexityQuery track_query(const Word& x, const Word& y) {
  return {ComplexityKind::nu, track(x, y).word(), std::nullopt};
}

std::size_t state_ceiling(const ComplexityQuery& q) {
  const std::size_t n = q.target.size();
  switch (q.kind) {
    case ComplexityKind::det_partial:
    case ComplexityKind::det_partial_cond:
      return n + 1;
    case ComplexityKind::det_total:
      return n + 2;
    default:
      return n / 2 + 1;
  }
}

Word walk_labels(const ComplexityQuery& q) {
  if (q.condition) return track(*q.condition, q.target).word();
  return q.target;
}

WitnessCertificate certificate_from_sequence(const ComplexityQuery& q,
                                             std::span<const State> sequence) {
  WitnessCertificate c;
  c.kind = certificate_kind_for(q.kind);
  c.target = q.target;
  c.condition = q.condition;
  c.nfa = walk_nfa(sequence, walk_labels(q));
  c.claimed_states = c.nfa.state_count();
  return c;
}

std::optional<ComplexityResult> search_at_most(const ComplexityQuery& q, std::size_t max_states,
                                               const Budget& budget) {
  q.validate();
  if (q.kind == ComplexityKind::det_total) return search_total(q, max_states, budget);
  const auto start = std::chrono::steady_clock::now();
  detail::WalkSearch search(walk_spec(q), budget.max_nodes);
  std::vector<State> found;
  for (std::size_t states = 1; states <= max_states; ++states) {
    try {
      search.run(states, [&](std::span<const State> seq) {
        found.assign(seq.begin(), seq.end());
        return false;
      });
    } catch (const detail::BudgetHit&) {
      throw BudgetExceeded(to_string(q.kind) + " search exceeded " +
                               std::to_string(budget.max_nodes) + " nodes at " +
                               std::to_string(states) + " states",
                           states);
    }
    if (!found.empty()) {
      ComplexityResult r;
      r.value = states;
      r.witness_sequence = found;
      r.certificate = certificate_from_sequence(q, found);
      r.explored = search.explored();
      r.elapsed = std::chrono::steady_clock::now() - start;
      check_result(r);
      return r;
    }
  }
  return std::nullopt;
}

ComplexityResult compute(const ComplexityQuery& q, const Budget& budget) {
  const std::size_t ceiling = state_ceiling(q);
  const std::size_t limit = budget.max_states ? std::min(budget.max_states, ceiling) : ceiling;
  auto r = search_at_most(q, limit, budget);
  if (r) return *std::move(r);
  if (limit < ceiling) {
    throw BudgetExceeded("no witness with at most " + std::to_string(limit) + " states",
                         limit + 1);
  }
  throw std::logic_error("no witness below the state ceiling for " + q.target.to_string());
}

std::optional<ComplexityResult> result_from_sequence(const ComplexityQuery& q,
                                                     std::span<const State> sequence,
                                                     std::size_t value) {
  q.validate();
  ComplexityResult r;
  r.value = value;
  r.witness_sequence.assign(sequence.begin(), sequence.end());
  try {
    if (q.kind == ComplexityKind::det_total) {
      const Nfa partial = certificate_from_sequence(as_partial(q), sequence).nfa;
      r.certificate.kind = CertificateKind::det_total;
      r.certificate.target = q.target;
      if (value == partial.state_count()) {
        auto total = complete_in_place(partial, q.target.size());
        if (!total) return std::nullopt;
        r.certificate.nfa = *total;
      } else if (value == partial.state_count() + 1) {
        r.certificate.nfa = complete_with_sink(partial);
      } else {
        return std::nullopt;
      }
      r.certificate.claimed_states = value;
    } else {
      r.certificate = certificate_from_sequence(q, sequence);
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (r.certificate.claimed_states != value || !verify_certificate(r.certificate)) {
    return std::nullopt;
  }
  return r;
}

void for_each_witness_sequence(const ComplexityQuery& q, std::size_t at_states,
                               const SequenceVisitor& visit, const Budget& budget) {
  q.validate();
  if (q.kind == ComplexityKind::det_total) {
    throw std::invalid_argument("witness sequences are not defined for total DFAs");
  }
  detail::WalkSearch search(walk_spec(q), budget.max_nodes);
  try {
    search.run(at_states, visit);
  } catch (const detail::BudgetHit&) {
    throw BudgetExceeded("witness enumeration exceeded node budget", 0);
  }
}

std::vector<std::vector<State>> all_witness_sequences(const ComplexityQuery& q,
                                                      std::size_t at_states,
                                                      const Budget& budget) {
  std::vector<std::vector<State>> out;
  for_each_witness_sequence(
      q, at_states,
      [&](std::span<const State> seq) {
        out.emplace_back(seq.begin(), seq.end());
        return true;
      },
      budget);
  return out;
}

}  // namespace autocomplexity
