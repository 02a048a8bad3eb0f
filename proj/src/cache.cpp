#include "autocomplexity/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "autocomplexity/errors.hpp"

namespace autocomplexity {

namespace {

std::string sequence_token(const std::vector<State>& seq) {
  return Word(std::vector<Symbol>(seq.begin(), seq.end()),
              seq.empty() ? 1 : *std::max_element(seq.begin(), seq.end()) + 1)
      .to_string();
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  return out;
}

std::string format_line(const CacheKey& key, const CacheEntry& entry) {
  return key.kind + "\t" + key.target + "\t" + key.condition + "\t" +
         std::to_string(entry.value) + "\t" + sequence_token(entry.sequence) + "\n";
}

}  // namespace

CacheKey canonical_key(const ComplexityQuery& q) {
  CacheKey key;
  key.kind = to_string(q.kind);
  if (q.kind == ComplexityKind::det_total) {
    key.kind += "/" + std::to_string(q.target.alphabet_size());
  }
  key.target = slow_normalize(q.target).to_string();
  key.condition = q.condition ? slow_normalize(*q.condition).to_string() : "-";
  return key;
}

ComplexityCache::ComplexityCache(std::filesystem::path directory) {
  std::filesystem::create_directories(directory);
  file_ = directory / kCacheFileName;
  std::ifstream in(*file_);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    try {
      if (fields.size() != 5) throw ParseError("expected 5 tab-separated fields");
      const std::size_t value = std::stoul(fields[3]);
      Word seq = parse_word_token(fields[4]);
      parse_word_token(fields[1]);
      if (fields[2] != "-") parse_word_token(fields[2]);
      CacheEntry entry{value, std::vector<State>(seq.symbols().begin(), seq.symbols().end())};
      entries_[{fields[0], fields[1], fields[2]}] = std::move(entry);
    } catch (const std::exception& e) {
      warnings_.push_back(file_->string() + ":" + std::to_string(line_no) +
                          ": skipped corrupt cache line (" + e.what() + ")");
    }
  }
}

std::optional<std::filesystem::path> ComplexityCache::resolve_directory(
    const std::string& override_dir) {
  if (!override_dir.empty()) return std::filesystem::path(override_dir);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

std::optional<CacheEntry> ComplexityCache::get(const ComplexityQuery& q) const {
  const CacheKey key = canonical_key(q);
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ComplexityCache::put(const ComplexityQuery& q, const CacheEntry& entry) {
  const CacheKey key = canonical_key(q);
  std::unique_lock lock(mutex_);
  entries_.insert_or_assign(key, entry);
  append_line(key, entry);
}

void ComplexityCache::append_line(const CacheKey& key, const CacheEntry& entry) {
  if (!file_) return;
  std::ofstream out(*file_, std::ios::app);
  out << format_line(key, entry);
}

void ComplexityCache::compact() {
  std::unique_lock lock(mutex_);
  if (!file_) return;
  const auto tmp = std::filesystem::path(file_->string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (const auto& [key, entry] : entries_) out << format_line(key, entry);
    if (!out) throw Error("failed to write " + tmp.string());
  }
  std::filesystem::rename(tmp, *file_);
}

void ComplexityCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
  if (file_) std::filesystem::remove(*file_);
}

std::size_t ComplexityCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::vector<std::string> ComplexityCache::warnings() const {
  std::shared_lock lock(mutex_);
  return warnings_;
}

Solver::Solver(std::shared_ptr<ComplexityCache> cache, Budget budget)
    : cache_(std::move(cache)), budget_(budget) {
  if (!cache_) cache_ = std::make_shared<ComplexityCache>();
}

ComplexityResult Solver::solve(const ComplexityQuery& q) {
  q.validate();
  if (auto hit = cache_->get(q)) {
    if (auto r = result_from_sequence(q, hit->sequence, hit->value)) return *std::move(r);
  }
  ComplexityResult r = compute(q, budget_);
  cache_->put(q, {r.value, r.witness_sequence});
  return r;
}

}  // namespace autocomplexity
