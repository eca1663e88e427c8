#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainsat/graph.hpp"
#include "rainsat/search.hpp"

namespace rainsat {

struct CacheKey {
  std::string command;
  /// canonical_key for n <= 16, the labeled graph6 text above that.
  std::string graph;
  std::string pattern;
  Budget budget;
};

CacheKey make_cache_key(std::string command, const Graph& g, std::string pattern,
                        const Budget& budget);

struct CacheEntry {
  CacheKey key;
  std::string verdict;
  std::string witness_digest;
  std::string timestamp;
};

/// A budget-limited verdict only stands in for a request whose limits are
/// no larger. Zero means unlimited.
bool budget_covers(const Budget& have, const Budget& want);
/// Verdicts other than BudgetExceeded and Inconclusive.
bool is_definitive(const std::string& verdict);

/// FNV-1a of the coloring, as 16 hex digits.
std::string witness_digest(const std::vector<Color>& colors);

/// Append-only JSON-lines file. Readers take a shared lock, the writer an
/// exclusive one. Unreadable lines are skipped with a warning.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}
  /// A definitive entry for the key wins over budget-limited ones.
  std::optional<CacheEntry> lookup(const CacheKey& key);
  void append(const CacheEntry& entry);
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::vector<std::string> warnings_;
};

/// Returns the cached entry if one covers the request, otherwise runs `task`
/// and appends its entry. `hit` reports which happened.
template <class Task>
CacheEntry cache_lookup_or_run(ResultCache& cache, const CacheKey& key, Task&& task, bool& hit) {
  if (auto found = cache.lookup(key)) {
    hit = true;
    return *found;
  }
  hit = false;
  CacheEntry e = task();
  e.key = key;
  cache.append(e);
  return e;
}

}  // namespace rainsat
