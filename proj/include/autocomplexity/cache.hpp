#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "autocomplexity/complexity.hpp"

namespace autocomplexity {

/// Environment variable naming the cache directory.
inline constexpr const char* kCacheDirEnv = "AUTOCOMPLEXITY_CACHE_DIR";
inline constexpr const char* kCacheFileName = "complexity.tsv";

struct CacheKey {
  std::string kind;
  std::string target;
  std::string condition;  // "-" when absent

  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

struct CacheEntry {
  std::size_t value = 0;
  std::vector<State> sequence;
};

/// Complexities depend only on the partition of positions induced by the
/// target (and, separately, by the condition), so queries are keyed by the
/// slow normal forms. A depends on the alphabet size as well.
CacheKey canonical_key(const ComplexityQuery& q);

/// Memo of search results, optionally backed by an append-only TSV file:
///   kind <TAB> target <TAB> condition|- <TAB> value <TAB> state sequence
/// Readers share a lock; writers are serialized.
class ComplexityCache {
 public:
  ComplexityCache() = default;
  /// Loads `<directory>/complexity.tsv` if present. Unparseable lines are
  /// skipped and recorded in warnings().
  explicit ComplexityCache(std::filesystem::path directory);

  /// `override_dir` if nonempty, else $AUTOCOMPLEXITY_CACHE_DIR, else none.
  static std::optional<std::filesystem::path> resolve_directory(const std::string& override_dir);

  std::optional<CacheEntry> get(const ComplexityQuery& q) const;
  void put(const ComplexityQuery& q, const CacheEntry& entry);

  /// Rewrites the file with one line per key (write to temp, then rename).
  void compact();
  void clear();

  std::size_t size() const;
  std::vector<std::string> warnings() const;
  const std::optional<std::filesystem::path>& file() const noexcept { return file_; }

 private:
  void append_line(const CacheKey& key, const CacheEntry& entry);

  std::optional<std::filesystem::path> file_;
  mutable std::shared_mutex mutex_;
  std::map<CacheKey, CacheEntry> entries_;
  std::vector<std::string> warnings_;
};

/// compute() behind a cache. Cached answers are turned back into certificates
/// and re-verified; an entry that fails verification is recomputed.
class Solver {
 public:
  explicit Solver(std::shared_ptr<ComplexityCache> cache = std::make_shared<ComplexityCache>(),
                  Budget budget = {});

  ComplexityResult solve(const ComplexityQuery& q);
  std::size_t value(const ComplexityQuery& q) { return solve(q).value; }

  std::size_t unique(const Word& x) { return value(unique_query(x)); }
  std::size_t conditional(const Word& x, const Word& y) { return value(conditional_query(x, y)); }
  std::size_t of_track(const Word& x, const Word& y) { return value(track_query(x, y)); }

  const Budget& budget() const noexcept { return budget_; }
  ComplexityCache& cache() noexcept { return *cache_; }

 private:
  std::shared_ptr<ComplexityCache> cache_;
  Budget budget_;
};

}  // namespace autocomplexity
