#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace autocomplexity {

using Symbol = std::uint32_t;

/// A finite word over the alphabet {0, ..., alphabet_size - 1}.
class Word {
 public:
  Word() = default;
  Word(std::vector<Symbol> symbols, std::size_t alphabet_size);

  /// Alphabet is max symbol + 1 (or 1 for the empty word).
  static Word from_symbols(std::vector<Symbol> symbols);

  /// Parses a digit string such as "0110". With `alphabet_size == 0` the
  /// alphabet is inferred as max digit + 1. Throws ParseError.
  static Word parse(std::string_view digits, std::size_t alphabet_size = 0);

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  Word prefix(std::size_t length) const;
  Word with_alphabet(std::size_t alphabet_size) const;

  /// Digits when every symbol is below 10, otherwise dot-separated integers.
  std::string to_string() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::size_t alphabet_size_ = 1;
};

/// Inverse of Word::to_string for arbitrary alphabets.
Word parse_word_token(std::string_view token, std::size_t alphabet_size = 0);

/// A word over a product alphabet. The pair (g, d) is stored as g * D + d
/// where D is the second factor size.
class TrackWord {
 public:
  TrackWord(Word word, std::size_t first_size, std::size_t second_size);

  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  std::size_t first_size() const noexcept { return first_size_; }
  std::size_t second_size() const noexcept { return second_size_; }

  Symbol encode(Symbol first, Symbol second) const;
  std::pair<Symbol, Symbol> decode(Symbol s) const;
  std::pair<Symbol, Symbol> at(std::size_t i) const { return decode(word_[i]); }

  /// "(0,0)(1,1)"
  std::string to_pair_string() const;

  friend bool operator==(const TrackWord&, const TrackWord&) = default;

 private:
  Word word_;
  std::size_t first_size_;
  std::size_t second_size_;
};

TrackWord track(const Word& x, const Word& y);
Word project(const TrackWord& w, int coordinate);

/// Relabels symbols in order of first occurrence (0, 1, 2, ...). The
/// alphabet size is kept.
Word slow_normalize(const Word& w);
bool is_slow(const Word& w);

/// All slow words of the given length over an alphabet of the given size, in
/// lexicographic order. For a binary alphabet this is 0{0,1}^{n-1}.
std::vector<Word> slow_words(std::size_t length, std::size_t alphabet_size);
/// All words of the given length, lexicographic.
std::vector<Word> all_words(std::size_t length, std::size_t alphabet_size);

struct Partition {
  std::size_t ground_size = 0;
  /// Each class sorted; classes ordered by their least element.
  std::vector<std::vector<std::size_t>> classes;

  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition induced_partition(const Word& w);
bool refines(const Partition& p, const Partition& q);

bool is_permutation_word(const Word& w);

Word power(const Word& w, std::size_t k);
/// Length-n prefix of w repeated forever; w must be nonempty.
Word periodic_prefix(const Word& w, std::size_t n);
bool contains_kth_power(const Word& w, std::size_t k);
bool is_primitive(const Word& w);
std::set<Word> cyclic_shifts(const Word& w);
Word reversed(const Word& w);

}  // namespace autocomplexity
