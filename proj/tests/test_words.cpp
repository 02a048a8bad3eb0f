#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "autocomplexity/errors.hpp"
#include "autocomplexity/words.hpp"

using namespace autocomplexity;

namespace {

Word w(const char* digits) { return Word::parse(digits); }

// Brute-force slow normalization: the least image over every relabeling.
Word slow_by_relabeling(const Word& x) {
  std::vector<Symbol> perm(x.alphabet_size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<Symbol>> best;
  do {
    std::vector<Symbol> image;
    for (Symbol s : x.symbols()) image.push_back(perm[s]);
    Word candidate = Word::from_symbols(image);
    if (is_slow(candidate) && (!best || image < *best)) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Word::from_symbols(*best);
}

}  // namespace

TEST_CASE("parse and render") {
  CHECK(w("0120").alphabet_size() == 3);
  CHECK(Word::parse("01", 5).alphabet_size() == 5);
  CHECK(w("").empty());
  CHECK(w("0123").to_string() == "0123");
  CHECK_THROWS_AS(Word::parse("01a"), ParseError);
  CHECK_THROWS_AS(Word::parse("012", 2), ParseError);
  try {
    Word::parse("00x1");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK(parse_word_token("10.11.2") == Word::from_symbols({10, 11, 2}));
  CHECK(Word::from_symbols({10, 0}).to_string() == "10.0");
  CHECK_THROWS_AS(Word({0, 3}, 2), std::invalid_argument);
}

TEST_CASE("track and projections") {
  const auto t = track(w("0011"), w("0101"));
  CHECK(project(t, 1) == w("0011"));
  CHECK(project(t, 2) == w("0101"));
  CHECK(t.to_pair_string() == "(0,0)(0,1)(1,0)(1,1)");
  CHECK(project(track(w(""), w("")), 1).empty());
  CHECK_THROWS_AS(project(t, 3), std::invalid_argument);
  CHECK_THROWS_AS(track(w("01"), w("0")), std::invalid_argument);
  for (Symbol a = 0; a < 3; ++a) {
    for (Symbol b = 0; b < 4; ++b) {
      const TrackWord tw(Word({}, 12), 3, 4);
      CHECK(tw.decode(tw.encode(a, b)) == std::pair<Symbol, Symbol>{a, b});
    }
  }
}

TEST_CASE("track round trip, exhaustive small") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Word& x : all_words(n, 2)) {
      for (const Word& y : all_words(n, 3)) {
        const auto t = track(x, y);
        CHECK(project(t, 1) == x);
        CHECK(project(t, 2) == y);
      }
    }
  }
}

TEST_CASE("slow normalization") {
  CHECK(slow_normalize(w("110")) == w("001"));
  CHECK(slow_normalize(w("2102")).to_string() == "0120");
  CHECK(slow_normalize(w("0001")) == w("0001"));
  CHECK(is_slow(w("01")));
  CHECK_FALSE(is_slow(w("10")));
  CHECK(is_slow(w("012012")));
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Word& x : all_words(n, 3)) {
      const Word s = slow_normalize(x);
      CHECK(slow_normalize(s) == s);
      CHECK(induced_partition(s) == induced_partition(x));
      CHECK(s.to_string() == slow_by_relabeling(x).to_string());
    }
  }
}

TEST_CASE("binary slow words are 0{0,1}^(n-1)") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto ws = slow_words(n, 2);
    CHECK(ws.size() == (std::size_t{1} << (n - 1)));
    for (const Word& x : ws) CHECK(x[0] == 0);
    CHECK(std::is_sorted(ws.begin(), ws.end()));
  }
  CHECK(slow_words(0, 2).size() == 1);
}

TEST_CASE("partitions") {
  const Partition p = induced_partition(w("0101"));
  CHECK(p.classes == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
  CHECK(refines(induced_partition(w("0123")), induced_partition(w("0101"))));
  CHECK_FALSE(refines(induced_partition(w("0101")), induced_partition(w("0011"))));
  CHECK_THROWS_AS(refines(induced_partition(w("01")), induced_partition(w("011"))),
                  std::invalid_argument);
}

TEST_CASE("permutation words and powers") {
  CHECK(is_permutation_word(w("0123")));
  CHECK_FALSE(is_permutation_word(w("010")));
  CHECK(is_permutation_word(w("")));
  CHECK(power(w("01"), 3) == w("010101"));
  CHECK(power(w("01"), 0).empty());
  CHECK(contains_kth_power(w("0101"), 2));
  CHECK_FALSE(contains_kth_power(power(w("0123"), 2), 3));
  CHECK(contains_kth_power(w("0"), 1));
  CHECK_FALSE(contains_kth_power(w(""), 1));
  CHECK_THROWS_AS(contains_kth_power(w("01"), 0), std::invalid_argument);
  CHECK(is_primitive(w("0110")));
  CHECK_FALSE(is_primitive(w("0101")));
  CHECK_THROWS_AS(is_primitive(w("")), std::invalid_argument);
  CHECK(cyclic_shifts(w("001")) == std::set<Word>{w("001"), Word::parse("010", 2),
                                                   Word::parse("100", 2)});
  CHECK(periodic_prefix(w("001"), 10).to_string() == "0010010010");
}

TEST_CASE("permutation powers are (k+1)-powerfree") {
  for (std::size_t a = 1; a <= 4; ++a) {
    std::vector<Symbol> s(a);
    std::iota(s.begin(), s.end(), 0);
    const Word alpha = Word::from_symbols(s);
    for (std::size_t k = 1; k <= 4; ++k) {
      CHECK_FALSE(contains_kth_power(power(alpha, k), k + 1));
      CHECK(contains_kth_power(power(alpha, k), k));
    }
  }
}

TEST_CASE("tracks of permutation powers are permutation words") {
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      std::vector<Symbol> sa(a), sb(b);
      std::iota(sa.begin(), sa.end(), 0);
      std::iota(sb.begin(), sb.end(), 0);
      const std::size_t l = std::lcm(a, b);
      const auto t = track(power(Word::from_symbols(sa), l / a), power(Word::from_symbols(sb), l / b));
      CHECK(is_permutation_word(t.word()));
    }
  }
}

TEST_CASE("cyclic shifts of primitive words are primitive") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Word& x : all_words(n, 2)) {
      if (!is_primitive(x)) continue;
      for (const Word& s : cyclic_shifts(x)) CHECK(is_primitive(s));
    }
  }
}

TEST_CASE("kth power detection against a direct scan") {
  auto naive = [](const Word& x, std::size_t k) {
    const auto s = x.symbols();
    for (std::size_t len = 1; len * k <= s.size(); ++len) {
      for (std::size_t i = 0; i + len * k <= s.size(); ++i) {
        bool ok = true;
        for (std::size_t j = len; j < len * k && ok; ++j) ok = s[i + j] == s[i + j - len];
        if (ok) return true;
      }
    }
    return false;
  };
  for (std::size_t n = 0; n <= 9; ++n) {
    for (const Word& x : all_words(n, 2)) {
      for (std::size_t k = 1; k <= 4; ++k) CHECK(contains_kth_power(x, k) == naive(x, k));
    }
  }
}
