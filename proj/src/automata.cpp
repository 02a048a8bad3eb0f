#include "autocomplexity/automata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "autocomplexity/errors.hpp"

namespace autocomplexity {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  return (a >= cap - std::min(cap, b)) ? cap : a + b;
}

std::size_t second_factor(const Nfa& m, const Word& y) {
  if (y.alphabet_size() == 0 || m.alphabet_size() % y.alphabet_size() != 0) {
    throw std::invalid_argument("alphabet mismatch: automaton alphabet " +
                                std::to_string(m.alphabet_size()) +
                                " is not a multiple of condition alphabet " +
                                std::to_string(y.alphabet_size()));
  }
  return m.alphabet_size() / y.alphabet_size();
}

std::uint64_t accept_mask(const Nfa& m) {
  std::uint64_t mask = 0;
  for (State a : m.accepts()) mask |= std::uint64_t{1} << a;
  return mask;
}

// successor masks indexed [state * alphabet + symbol]
std::vector<std::uint64_t> successor_masks(const Nfa& m, std::size_t subset_limit) {
  if (m.state_count() > subset_limit || m.state_count() > 64) {
    throw CapacityError("subset construction limited to " + std::to_string(subset_limit) +
                        " states, automaton has " + std::to_string(m.state_count()));
  }
  std::vector<std::uint64_t> succ(m.state_count() * m.alphabet_size(), 0);
  for (const Edge& e : m.edges()) {
    succ[e.from * m.alphabet_size() + e.label] |= std::uint64_t{1} << e.to;
  }
  return succ;
}

void check_cap(std::uint64_t cap) {
  if (cap < 2) throw std::invalid_argument("count cap must be at least 2");
}

}  // namespace

Nfa::Nfa(std::size_t state_count, std::size_t alphabet_size, State start,
         std::vector<State> accepts, std::vector<Edge> edges)
    : state_count_(state_count),
      alphabet_size_(alphabet_size),
      start_(start),
      accepts_(std::move(accepts)),
      edges_(std::move(edges)) {
  if (state_count_ == 0) throw std::invalid_argument("automaton needs at least one state");
  if (alphabet_size_ == 0) throw std::invalid_argument("automaton alphabet must be nonempty");
  if (start_ >= state_count_) throw std::invalid_argument("start state out of range");
  for (State a : accepts_) {
    if (a >= state_count_) throw std::invalid_argument("accept state out of range");
  }
  for (const Edge& e : edges_) {
    if (e.from >= state_count_ || e.to >= state_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.label >= alphabet_size_) throw std::invalid_argument("edge label outside alphabet");
  }
  std::sort(accepts_.begin(), accepts_.end());
  accepts_.erase(std::unique(accepts_.begin(), accepts_.end()), accepts_.end());
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Nfa::is_accepting(State s) const {
  return std::binary_search(accepts_.begin(), accepts_.end(), s);
}

Nfa Nfa::without_edge(std::size_t index) const {
  std::vector<Edge> e(edges_);
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
  return Nfa(state_count_, alphabet_size_, start_, accepts_, std::move(e));
}

CountResult count_accepting_walks(const Nfa& m, std::size_t n, std::uint64_t cap) {
  check_cap(cap);
  std::vector<std::uint64_t> cur(m.state_count(), 0), next(m.state_count());
  cur[m.start()] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (const Edge& e : m.edges()) {
      if (cur[e.from]) next[e.to] = sat_add(next[e.to], cur[e.from], cap);
    }
    cur.swap(next);
  }
  CountResult r{0, cap, std::nullopt};
  for (State a : m.accepts()) r.count = sat_add(r.count, cur[a], cap);
  return r;
}

CountResult count_accepted_words(const Nfa& m, std::size_t n, std::uint64_t cap,
                                 std::size_t subset_limit) {
  check_cap(cap);
  const auto succ = successor_masks(m, subset_limit);
  const std::size_t alphabet = m.alphabet_size();
  std::map<std::uint64_t, std::uint64_t> cur{{std::uint64_t{1} << m.start(), 1}}, next;
  for (std::size_t step = 0; step < n && !cur.empty(); ++step) {
    next.clear();
    for (auto [mask, count] : cur) {
      for (std::size_t a = 0; a < alphabet; ++a) {
        std::uint64_t to = 0;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
          to |= succ[static_cast<std::size_t>(__builtin_ctzll(rest)) * alphabet + a];
        }
        if (to) {
          auto& slot = next[to];
          slot = sat_add(slot, count, cap);
        }
      }
    }
    cur.swap(next);
  }
  const std::uint64_t finals = accept_mask(m);
  CountResult r{0, cap, std::nullopt};
  for (auto [mask, count] : cur) {
    if (mask & finals) r.count = sat_add(r.count, count, cap);
  }
  return r;
}

CountResult count_walks_given_projection(const Nfa& m, const Word& y, std::uint64_t cap) {
  check_cap(cap);
  const std::size_t second = second_factor(m, y);
  const std::size_t n = y.size();
  struct Back {
    State from;
    Symbol label;
  };
  std::vector<std::vector<Back>> back(n, std::vector<Back>(m.state_count()));
  std::vector<std::uint64_t> cur(m.state_count(), 0), next(m.state_count());
  cur[m.start()] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(next.begin(), next.end(), 0);
    for (const Edge& e : m.edges()) {
      if (e.label / second != y[i] || cur[e.from] == 0) continue;
      if (next[e.to] == 0) back[i][e.to] = {e.from, e.label};
      next[e.to] = sat_add(next[e.to], cur[e.from], cap);
    }
    cur.swap(next);
  }
  CountResult r{0, cap, std::nullopt};
  State last = 0;
  for (State a : m.accepts()) {
    if (cur[a]) last = a;
    r.count = sat_add(r.count, cur[a], cap);
  }
  if (r.count == 1) {
    std::vector<Symbol> x(n);
    State s = last;
    for (std::size_t i = n; i-- > 0;) {
      x[i] = static_cast<Symbol>(back[i][s].label % second);
      s = back[i][s].from;
    }
    r.reconstruction = Word(std::move(x), second);
  }
  return r;
}

CountResult count_words_given_projection(const Nfa& m, const Word& y, std::uint64_t cap,
                                         std::size_t subset_limit) {
  check_cap(cap);
  const std::size_t second = second_factor(m, y);
  const auto succ = successor_masks(m, subset_limit);
  const std::size_t alphabet = m.alphabet_size();
  const std::size_t n = y.size();
  struct Entry {
    std::uint64_t count = 0;
    std::uint64_t prev = 0;
    Symbol symbol = 0;
  };
  std::vector<std::map<std::uint64_t, Entry>> layers(n + 1);
  layers[0][std::uint64_t{1} << m.start()] = {1, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [mask, entry] : layers[i]) {
      for (std::size_t d = 0; d < second; ++d) {
        const std::size_t label = y[i] * second + d;
        std::uint64_t to = 0;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
          to |= succ[static_cast<std::size_t>(__builtin_ctzll(rest)) * alphabet + label];
        }
        if (!to) continue;
        Entry& slot = layers[i + 1][to];
        if (slot.count == 0) {
          slot.prev = mask;
          slot.symbol = static_cast<Symbol>(d);
        }
        slot.count = sat_add(slot.count, entry.count, cap);
      }
    }
  }
  const std::uint64_t finals = accept_mask(m);
  CountResult r{0, cap, std::nullopt};
  std::uint64_t last = 0;
  for (const auto& [mask, entry] : layers[n]) {
    if (!(mask & finals)) continue;
    last = mask;
    r.count = sat_add(r.count, entry.count, cap);
  }
  if (r.count == 1) {
    std::vector<Symbol> x(n);
    std::uint64_t mask = last;
    for (std::size_t i = n; i-- > 0;) {
      const Entry& e = layers[i + 1].at(mask);
      x[i] = e.symbol;
      mask = e.prev;
    }
    r.reconstruction = Word(std::move(x), second);
  }
  return r;
}

bool accepts_word(const Nfa& m, const Word& w) {
  std::vector<char> cur(m.state_count(), 0), next(m.state_count());
  cur[m.start()] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::fill(next.begin(), next.end(), 0);
    for (const Edge& e : m.edges()) {
      if (cur[e.from] && e.label == w[i]) next[e.to] = 1;
    }
    cur.swap(next);
  }
  return std::any_of(m.accepts().begin(), m.accepts().end(), [&](State a) { return cur[a]; });
}

namespace {

Nfa product(const Nfa& m1, const Nfa& m2, bool keep_pair) {
  if (m1.alphabet_size() % m2.alphabet_size() != 0) {
    throw std::invalid_argument("product: first automaton alphabet is not a multiple of the "
                                "second automaton alphabet");
  }
  const std::size_t target = m1.alphabet_size() / m2.alphabet_size();
  const std::size_t q2 = m2.state_count();
  auto pair_state = [q2](State a, State b) { return static_cast<State>(a * q2 + b); };
  std::vector<Edge> edges;
  for (const Edge& e1 : m1.edges()) {
    const Symbol condition = static_cast<Symbol>(e1.label / target);
    for (const Edge& e2 : m2.edges()) {
      if (e2.label != condition) continue;
      edges.push_back({pair_state(e1.from, e2.from),
                       keep_pair ? e1.label : static_cast<Symbol>(e1.label % target),
                       pair_state(e1.to, e2.to)});
    }
  }
  std::vector<State> accepts;
  for (State a1 : m1.accepts()) {
    for (State a2 : m2.accepts()) accepts.push_back(pair_state(a1, a2));
  }
  return Nfa(m1.state_count() * q2, keep_pair ? m1.alphabet_size() : target,
             pair_state(m1.start(), m2.start()), std::move(accepts), std::move(edges));
}

}  // namespace

Nfa product_project(const Nfa& m1, const Nfa& m2) { return product(m1, m2, false); }
Nfa product_track(const Nfa& m1, const Nfa& m2) { return product(m1, m2, true); }

Nfa walk_nfa(std::span<const State> states, const Word& labels) {
  if (states.empty()) throw std::invalid_argument("walk_nfa: empty state sequence");
  if (states.size() != labels.size() + 1) {
    throw std::invalid_argument("walk_nfa: need exactly one more state than labels");
  }
  State fresh = 0;
  for (State s : states) {
    if (s > fresh) throw std::invalid_argument("walk_nfa: state sequence is not slow");
    if (s == fresh) ++fresh;
  }
  std::vector<Edge> edges;
  edges.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    edges.push_back({states[i], labels[i], states[i + 1]});
  }
  return Nfa(fresh, labels.alphabet_size(), states.front(), {states.back()}, std::move(edges));
}

bool is_deterministic(const Nfa& m) {
  const auto e = m.edges();
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i].from == e[i - 1].from && e[i].label == e[i - 1].label) return false;
  }
  return true;
}

bool is_total(const Nfa& m) {
  std::vector<char> seen(m.state_count() * m.alphabet_size(), 0);
  for (const Edge& e : m.edges()) seen[e.from * m.alphabet_size() + e.label] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Nfa diagonal_nfa(std::size_t alphabet_size) {
  std::vector<Edge> edges;
  for (Symbol s = 0; s < alphabet_size; ++s) {
    edges.push_back({0, static_cast<Symbol>(s * alphabet_size + s), 0});
  }
  return Nfa(1, alphabet_size * alphabet_size, 0, {0}, std::move(edges));
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::unique: return "unique";
    case CertificateKind::exact: return "exact";
    case CertificateKind::conditional_unique: return "conditional-unique";
    case CertificateKind::conditional_exact: return "conditional-exact";
    case CertificateKind::det_partial: return "det-partial";
    case CertificateKind::det_total: return "det-total";
  }
  return "?";
}

CertificateKind certificate_kind_from_string(const std::string& name) {
  for (auto k : {CertificateKind::unique, CertificateKind::exact,
                 CertificateKind::conditional_unique, CertificateKind::conditional_exact,
                 CertificateKind::det_partial, CertificateKind::det_total}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown certificate kind '" + name + "'");
}

bool is_conditional(CertificateKind kind) {
  return kind == CertificateKind::conditional_unique || kind == CertificateKind::conditional_exact;
}

Verdict verify_certificate(const WitnessCertificate& c) {
  const Nfa& m = c.nfa;
  if (c.claimed_states != m.state_count()) {
    return {false, "claimed " + std::to_string(c.claimed_states) + " states but automaton has " +
                       std::to_string(m.state_count())};
  }
  if (is_conditional(c.kind) != c.condition.has_value()) {
    return {false, "condition word must be present exactly for conditional kinds"};
  }
  const std::size_t n = c.target.size();
  if (c.condition) {
    const Word& y = *c.condition;
    if (y.size() != n) return {false, "condition and target differ in length"};
    if (m.alphabet_size() != y.alphabet_size() * c.target.alphabet_size()) {
      return {false, "automaton alphabet is not condition x target"};
    }
    const CountResult r = c.kind == CertificateKind::conditional_unique
                              ? count_walks_given_projection(m, y)
                              : count_words_given_projection(m, y);
    if (r.count != 1) {
      return {false, r.count == 0 ? "no accepting walk reads the condition"
                                  : "more than one accepting run reads the condition"};
    }
    if (*r.reconstruction != c.target) {
      return {false, "the single run spells " + r.reconstruction->to_string() + ", not " +
                         c.target.to_string()};
    }
    return {true, "ok"};
  }
  if (m.alphabet_size() != c.target.alphabet_size()) {
    return {false, "automaton alphabet differs from target alphabet"};
  }
  if (!accepts_word(m, c.target)) return {false, "target is not accepted"};
  switch (c.kind) {
    case CertificateKind::unique: {
      const auto r = count_accepting_walks(m, n);
      if (r.count != 1) return {false, "more than one accepting walk of the target's length"};
      return {true, "ok"};
    }
    case CertificateKind::det_total:
      if (!is_total(m)) return {false, "automaton is not total"};
      [[fallthrough]];
    case CertificateKind::det_partial:
      if (!is_deterministic(m)) return {false, "automaton is not deterministic"};
      [[fallthrough]];
    case CertificateKind::exact: {
      const auto r = count_accepted_words(m, n);
      if (r.count != 1) return {false, "more than one word of the target's length is accepted"};
      return {true, "ok"};
    }
    default:
      break;
  }
  return {false, "unhandled certificate kind"};
}

}  // namespace autocomplexity
