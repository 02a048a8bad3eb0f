#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "autocomplexity/complexity.hpp"
#include "autocomplexity/errors.hpp"

using namespace autocomplexity;

namespace {

Word w(const char* digits, std::size_t alphabet = 0) { return Word::parse(digits, alphabet); }

std::size_t value(ComplexityKind kind, const Word& x) { return compute({kind, x, std::nullopt}).value; }

// Independent reference for the deterministic kinds: enumerate every
// transition table on k states (partial or total) and every accept set.
// A table exactly accepts x when x is accepted and exactly one word of
// length |x| reaches an accept state.
std::optional<std::size_t> dfa_oracle(const Word& x, bool total, std::size_t max_states) {
  const std::size_t a = x.alphabet_size();
  const std::size_t n = x.size();
  for (std::size_t k = 1; k <= max_states; ++k) {
    const std::size_t choices = total ? k : k + 1;  // k+1: "no edge"
    const std::size_t cells = k * a;
    std::vector<std::size_t> table(cells, 0);
    while (true) {
      // Run x.
      std::size_t state = 0;
      bool alive = true;
      for (std::size_t i = 0; i < n && alive; ++i) {
        const std::size_t t = table[state * a + x[i]];
        if (t == k) alive = false; else state = t;
      }
      if (alive) {
        // Paths of length n from 0, per state.
        std::vector<std::uint64_t> count(k, 0);
        count[0] = 1;
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<std::uint64_t> next(k, 0);
          for (std::size_t s = 0; s < k; ++s) {
            for (std::size_t l = 0; l < a; ++l) {
              const std::size_t t = table[s * a + l];
              if (t < k) next[t] += count[s];
            }
          }
          count = next;
        }
        // Only accept sets containing `state` can accept x; the best is {state}.
        if (count[state] == 1) return k;
      }
      std::size_t c = 0;
      while (c < cells && ++table[c] == choices) table[c++] = 0;
      if (c == cells) break;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("worked examples") {
  const Word x = w("010010010010");
  const Word y = w("010101010101");
  CHECK(compute(unique_query(x)).value == 3);
  CHECK(compute(unique_query(y)).value == 2);
  CHECK(compute(track_query(x, y)).value == 6);

  CHECK(compute(track_query(w("0123"), w("0001"))).value == 3);
  CHECK(compute(unique_query(w("0001"))).value == 2);

  CHECK(compute(conditional_query(w("012301230123"), w("012345012345"))).value == 2);
  CHECK(compute(unique_query(w("012345012345"))).value == 6);
  for (std::size_t n = 0; n <= 9; ++n) {
    CHECK(compute(unique_query(Word(std::vector<Symbol>(n, 0), 1))).value == 1);
  }
}

TEST_CASE("empty word has complexity 1 for every kind") {
  const Word e({}, 2);
  for (auto k : {ComplexityKind::nu, ComplexityKind::ne, ComplexityKind::det_total,
                 ComplexityKind::det_partial}) {
    CHECK(compute({k, e, std::nullopt}).value == 1);
  }
  for (auto k : {ComplexityKind::nu_cond, ComplexityKind::ne_cond,
                 ComplexityKind::det_partial_cond}) {
    CHECK(compute({k, e, e}).value == 1);
  }
}

TEST_CASE("small exact values") {
  CHECK(value(ComplexityKind::ne, w("00")) == 1);
  CHECK(value(ComplexityKind::nu, w("0101")) == 2);
  CHECK(value(ComplexityKind::nu, w("01")) == 2);
  CHECK(compute(conditional_query(w("01"), w("00"))).value == 2);
  CHECK(compute(conditional_query(w("0110"), w("0110"))).value == 1);
}

TEST_CASE("failure of symmetry of information") {
  const Word x = w("0001"), y = w("0011");
  const std::size_t xy = compute(conditional_query(x, y)).value;
  const std::size_t yx = compute(conditional_query(y, x)).value;
  const std::size_t ax = compute(unique_query(x)).value;
  const std::size_t ay = compute(unique_query(y)).value;
  CHECK(xy == 2);
  CHECK(ay == 3);
  CHECK(yx == 2);
  CHECK(ax == 2);
  CHECK(xy * ay != yx * ax);
  CHECK(oracle_min_states(conditional_query(x, y), 3) == xy);
  CHECK(oracle_min_states(conditional_query(y, x), 3) == yx);
  CHECK(oracle_min_states(unique_query(x), 3) == ax);
  CHECK(oracle_min_states(unique_query(y), 3) == ay);
}

TEST_CASE("results carry verified certificates and minimality") {
  for (const char* s : {"0", "01", "0110", "01001", "0010100", "00110101"}) {
    for (auto k : {ComplexityKind::nu, ComplexityKind::ne, ComplexityKind::det_partial,
                   ComplexityKind::det_total}) {
      const ComplexityQuery q{k, w(s, 2), std::nullopt};
      const auto r = compute(q);
      CHECK(r.certificate.claimed_states == r.value);
      CHECK(verify_certificate(r.certificate).ok);
      CHECK(from_json(to_json(r.certificate)) == r.certificate);
      if (r.value > 1) CHECK_FALSE(search_at_most(q, r.value - 1));
    }
  }
}

TEST_CASE("witness sequences are lexicographically least") {
  const ComplexityQuery q = unique_query(w("0110"));
  const auto r = compute(q);
  const auto all = all_witness_sequences(q, r.value);
  REQUIRE_FALSE(all.empty());
  CHECK(all.front() == r.witness_sequence);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("witness streams for the sparse example") {
  const Word x = w("0000110"), y = w("0010100");
  const auto exact = all_witness_sequences({ComplexityKind::ne_cond, x, y}, 3);
  const std::vector<State> a = {0, 0, 1, 1, 1, 2, 0, 0}, b = {0, 1, 1, 1, 1, 2, 0, 0};
  CHECK(std::find(exact.begin(), exact.end(), a) != exact.end());
  CHECK(std::find(exact.begin(), exact.end(), b) != exact.end());
  const auto uniq = all_witness_sequences({ComplexityKind::nu_cond, x, y}, 3);
  const std::vector<State> u = {0, 1, 2, 0, 0, 2, 1, 0};
  CHECK(std::find(uniq.begin(), uniq.end(), u) != uniq.end());
  const auto eps = all_witness_sequences(unique_query(Word({}, 2)), 1);
  CHECK(eps == std::vector<std::vector<State>>{{0}});
}

TEST_CASE("deterministic kinds against a transition-table oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Word& x : slow_words(n, 2)) {
      const std::size_t partial = value(ComplexityKind::det_partial, x);
      const std::size_t total = value(ComplexityKind::det_total, x);
      CHECK(partial <= total);
      CHECK(total <= partial + 1);
      const auto po = dfa_oracle(x, false, 3);
      const auto to = dfa_oracle(x, true, 3);
      if (po) CHECK(*po == partial); else CHECK(partial > 3);
      if (to) CHECK(*to == total); else CHECK(total > 3);
    }
  }
}

TEST_CASE("total automata depend on the alphabet") {
  // Over {0,1,2} a total automaton must also route 2 somewhere.
  const auto binary = value(ComplexityKind::det_total, w("00", 2));
  const auto ternary = value(ComplexityKind::det_total, w("00", 3));
  CHECK(binary == *dfa_oracle(w("00", 2), true, 4));
  CHECK(ternary == *dfa_oracle(w("00", 3), true, 4));
}

TEST_CASE("oracle examples") {
  CHECK(oracle_min_states(unique_query(w("0101")), 3) == 2);
  CHECK(oracle_min_states(unique_query(w("0")), 3) == 1);
  const auto ne = oracle_min_states({ComplexityKind::ne, w("00"), std::nullopt}, 3);
  const auto nu = oracle_min_states(unique_query(w("00")), 3);
  REQUIRE(ne);
  REQUIRE(nu);
  CHECK(*ne <= *nu);
  CHECK_FALSE(oracle_min_states(unique_query(w("0011010")), 3));
  CHECK_THROWS_AS(oracle_min_states(unique_query(w("001101011")), 3), std::invalid_argument);
  CHECK_THROWS_AS(oracle_min_states(unique_query(w("01")), 4), std::invalid_argument);
}

TEST_CASE("query validation and budgets") {
  CHECK_THROWS_AS(compute({ComplexityKind::nu_cond, w("01"), std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(compute({ComplexityKind::nu, w("01"), w("01")}), std::invalid_argument);
  CHECK_THROWS_AS(compute(conditional_query(w("01"), w("011"))), std::invalid_argument);
  try {
    compute(unique_query(w("0010111010011")), Budget{0, 50});
    FAIL("no exception");
  } catch (const BudgetExceeded& e) {
    CHECK(e.lower_bound() >= 1);
  }
  CHECK_THROWS_AS(compute(unique_query(w("0010111010011")), Budget{2, 1'000'000'000}),
                  BudgetExceeded);
}

TEST_CASE("kind names") {
  CHECK(complexity_kind_from_string("anu") == ComplexityKind::nu);
  CHECK(complexity_kind_from_string("A_minus") == ComplexityKind::det_partial);
  CHECK(complexity_kind_from_string("ane-cond") == ComplexityKind::ne_cond);
  CHECK(to_string(ComplexityKind::det_total) == "A");
  CHECK_THROWS_AS(complexity_kind_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("track complexity ignores coordinate order") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Word& x : slow_words(n, 2)) {
      for (const Word& y : slow_words(n, 2)) {
        CHECK(compute(track_query(x, y)).value == compute(track_query(y, x)).value);
      }
    }
  }
}
