#include "autocomplexity/words.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "autocomplexity/errors.hpp"

namespace autocomplexity {

Word::Word(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ == 0) {
    throw std::invalid_argument("alphabet size must be at least 1");
  }
  for (Symbol s : symbols_) {
    if (s >= alphabet_size_) {
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet_size_));
    }
  }
}

Word Word::from_symbols(std::vector<Symbol> symbols) {
  Symbol top = 0;
  for (Symbol s : symbols) top = std::max(top, s);
  return Word(std::move(symbols), static_cast<std::size_t>(top) + 1);
}

Word Word::parse(std::string_view digits, std::size_t alphabet_size) {
  std::vector<Symbol> out;
  out.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '9') {
      throw ParseError(std::string("expected a digit, got '") + c + "'", i);
    }
    Symbol s = static_cast<Symbol>(c - '0');
    if (alphabet_size != 0 && s >= alphabet_size) {
      throw ParseError("digit outside alphabet of size " + std::to_string(alphabet_size), i);
    }
    out.push_back(s);
  }
  if (alphabet_size == 0) return from_symbols(std::move(out));
  return Word(std::move(out), alphabet_size);
}

Word parse_word_token(std::string_view token, std::size_t alphabet_size) {
  if (token.find('.') == std::string_view::npos) return Word::parse(token, alphabet_size);
  std::vector<Symbol> out;
  std::size_t pos = 0;
  while (pos <= token.size()) {
    std::size_t end = token.find('.', pos);
    if (end == std::string_view::npos) end = token.size();
    Symbol value = 0;
    auto [ptr, ec] = std::from_chars(token.data() + pos, token.data() + end, value);
    if (ec != std::errc() || ptr != token.data() + end || end == pos) {
      throw ParseError("malformed symbol in word token", pos);
    }
    out.push_back(value);
    pos = end + 1;
  }
  if (alphabet_size == 0) return Word::from_symbols(std::move(out));
  for (Symbol s : out) {
    if (s >= alphabet_size) throw ParseError("symbol outside alphabet", 0);
  }
  return Word(std::move(out), alphabet_size);
}

Word Word::prefix(std::size_t length) const {
  length = std::min(length, symbols_.size());
  return Word({symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(length)},
              alphabet_size_);
}

Word Word::with_alphabet(std::size_t alphabet_size) const {
  return Word(symbols_, alphabet_size);
}

std::string Word::to_string() const {
  bool digits = std::all_of(symbols_.begin(), symbols_.end(), [](Symbol s) { return s < 10; });
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + symbols_[i]));
    } else {
      if (i) out.push_back('.');
      out += std::to_string(symbols_[i]);
    }
  }
  return out;
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Symbol> s(a.symbols_);
  s.insert(s.end(), b.symbols_.begin(), b.symbols_.end());
  return Word(std::move(s), std::max(a.alphabet_size_, b.alphabet_size_));
}

TrackWord::TrackWord(Word word, std::size_t first_size, std::size_t second_size)
    : word_(std::move(word)), first_size_(first_size), second_size_(second_size) {
  if (first_size_ == 0 || second_size_ == 0) {
    throw std::invalid_argument("track factor alphabets must be nonempty");
  }
  if (word_.alphabet_size() != first_size_ * second_size_) {
    throw std::invalid_argument("track word alphabet is not the product of its factors");
  }
}

Symbol TrackWord::encode(Symbol first, Symbol second) const {
  if (first >= first_size_ || second >= second_size_) {
    throw std::invalid_argument("pair symbol outside factor alphabets");
  }
  return static_cast<Symbol>(first * second_size_ + second);
}

std::pair<Symbol, Symbol> TrackWord::decode(Symbol s) const {
  return {static_cast<Symbol>(s / second_size_), static_cast<Symbol>(s % second_size_)};
}

std::string TrackWord::to_pair_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    auto [g, d] = at(i);
    out += "(" + std::to_string(g) + "," + std::to_string(d) + ")";
  }
  return out;
}

TrackWord track(const Word& x, const Word& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("track: words differ in length (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + ")");
  }
  const std::size_t second = y.alphabet_size();
  std::vector<Symbol> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    s[i] = static_cast<Symbol>(x[i] * second + y[i]);
  }
  return TrackWord(Word(std::move(s), x.alphabet_size() * second), x.alphabet_size(), second);
}

Word project(const TrackWord& w, int coordinate) {
  if (coordinate != 1 && coordinate != 2) {
    throw std::invalid_argument("projection coordinate must be 1 or 2");
  }
  std::vector<Symbol> s(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto [g, d] = w.at(i);
    s[i] = coordinate == 1 ? g : d;
  }
  return Word(std::move(s), coordinate == 1 ? w.first_size() : w.second_size());
}

Word slow_normalize(const Word& w) {
  std::vector<Symbol> relabel(w.alphabet_size(), static_cast<Symbol>(-1));
  Symbol next = 0;
  std::vector<Symbol> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Symbol& r = relabel[w[i]];
    if (r == static_cast<Symbol>(-1)) r = next++;
    out[i] = r;
  }
  return Word(std::move(out), w.alphabet_size());
}

bool is_slow(const Word& w) {
  Symbol bound = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > bound) return false;
    if (w[i] == bound) ++bound;
  }
  return true;
}

namespace {

void extend_slow(std::vector<Symbol>& prefix, std::size_t length, std::size_t alphabet,
                 Symbol fresh, std::vector<Word>& out) {
  if (prefix.size() == length) {
    out.emplace_back(prefix, alphabet);
    return;
  }
  Symbol top = std::min<Symbol>(fresh, static_cast<Symbol>(alphabet - 1));
  for (Symbol s = 0; s <= top; ++s) {
    prefix.push_back(s);
    extend_slow(prefix, length, alphabet, s == fresh ? fresh + 1 : fresh, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> slow_words(std::size_t length, std::size_t alphabet_size) {
  std::vector<Word> out;
  std::vector<Symbol> prefix;
  extend_slow(prefix, length, alphabet_size, 0, out);
  return out;
}

std::vector<Word> all_words(std::size_t length, std::size_t alphabet_size) {
  std::vector<Word> out;
  std::vector<Symbol> cur(length, 0);
  while (true) {
    out.emplace_back(cur, alphabet_size);
    std::size_t i = length;
    while (i > 0) {
      if (++cur[i - 1] < alphabet_size) break;
      cur[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

Partition induced_partition(const Word& w) {
  Word s = slow_normalize(w);
  Partition p;
  p.ground_size = w.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == p.classes.size()) p.classes.emplace_back();
    p.classes[s[i]].push_back(i);
  }
  return p;
}

bool refines(const Partition& p, const Partition& q) {
  if (p.ground_size != q.ground_size) {
    throw std::invalid_argument("refines: partitions of different ground sets");
  }
  std::vector<std::size_t> block_of(q.ground_size);
  for (std::size_t b = 0; b < q.classes.size(); ++b) {
    for (std::size_t i : q.classes[b]) block_of[i] = b;
  }
  for (const auto& cls : p.classes) {
    for (std::size_t i : cls) {
      if (block_of[i] != block_of[cls.front()]) return false;
    }
  }
  return true;
}

bool is_permutation_word(const Word& w) {
  std::vector<bool> seen(w.alphabet_size(), false);
  for (Symbol s : w.symbols()) {
    if (seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

Word power(const Word& w, std::size_t k) {
  std::vector<Symbol> s;
  s.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) s.insert(s.end(), w.symbols().begin(), w.symbols().end());
  return Word(std::move(s), w.alphabet_size());
}

Word periodic_prefix(const Word& w, std::size_t n) {
  if (w.empty()) throw std::invalid_argument("periodic_prefix of the empty word");
  std::vector<Symbol> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = w[i % w.size()];
  return Word(std::move(s), w.alphabet_size());
}

bool contains_kth_power(const Word& w, std::size_t k) {
  if (k == 0) throw std::invalid_argument("contains_kth_power: k must be at least 1");
  const std::size_t n = w.size();
  for (std::size_t period = 1; period * k <= n; ++period) {
    // Length of the current run of positions i with w[i] == w[i + period].
    std::size_t run = 0;
    const std::size_t need = period * (k - 1);
    if (need == 0) return true;
    for (std::size_t i = 0; i + period < n; ++i) {
      run = (w[i] == w[i + period]) ? run + 1 : 0;
      if (run >= need) return true;
    }
  }
  return false;
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_primitive: empty word");
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return false;
  }
  return true;
}

std::set<Word> cyclic_shifts(const Word& w) {
  std::set<Word> out;
  const std::size_t n = w.size();
  if (n == 0) {
    out.insert(w);
    return out;
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = w[(i + r) % n];
    out.emplace(std::move(s), w.alphabet_size());
  }
  return out;
}

Word reversed(const Word& w) {
  std::vector<Symbol> s(w.symbols().rbegin(), w.symbols().rend());
  return Word(std::move(s), w.alphabet_size());
}

}  // namespace autocomplexity
