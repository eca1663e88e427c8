#include "rainsat/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "rainsat/canonical.hpp"
#include "rainsat/graph_io.hpp"

namespace rainsat {

namespace {

using nlohmann::json;

// Closes the descriptor and drops the lock on scope exit.
class LockedFile {
 public:
  LockedFile(const std::string& path, int flags, int lock) {
    fd_ = ::open(path.c_str(), flags, 0644);
    if (fd_ >= 0 && ::flock(fd_, lock) != 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }
  ~LockedFile() {
    if (fd_ >= 0) ::close(fd_);
  }
  LockedFile(const LockedFile&) = delete;
  LockedFile& operator=(const LockedFile&) = delete;
  int fd() const { return fd_; }

 private:
  int fd_ = -1;
};

json key_json(const CacheKey& k) {
  return json{{"command", k.command},
              {"graph", k.graph},
              {"pattern", k.pattern},
              {"budget_nodes", k.budget.max_nodes},
              {"budget_ms", k.budget.max_ms}};
}

}  // namespace

CacheKey make_cache_key(std::string command, const Graph& g, std::string pattern,
                        const Budget& budget) {
  CacheKey k;
  k.command = std::move(command);
  k.graph = g.vertex_count() <= kCanonicalExactLimit ? "canon:" + canonical_key(g)
                                                      : "labeled:" + encode_graph6(g);
  k.pattern = std::move(pattern);
  k.budget = budget;
  return k;
}

bool budget_covers(const Budget& have, const Budget& want) {
  auto covers = [](auto h, auto w) { return h == 0 || (w != 0 && h >= w); };
  return covers(have.max_nodes, want.max_nodes) && covers(have.max_ms, want.max_ms);
}

bool is_definitive(const std::string& verdict) {
  return verdict != "BudgetExceeded" && verdict != "Inconclusive";
}

std::string witness_digest(const std::vector<Color>& colors) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Color c : colors) {
    for (int i = 0; i < 4; ++i) {
      h ^= static_cast<std::uint8_t>(static_cast<std::uint32_t>(c) >> (8 * i));
      h *= 1099511628211ULL;
    }
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::optional<CacheEntry> ResultCache::lookup(const CacheKey& key) {
  LockedFile f(path_, O_RDONLY, LOCK_SH);
  if (f.fd() < 0) return std::nullopt;
  std::string text;
  char buf[1 << 16];
  for (ssize_t got; (got = ::read(f.fd(), buf, sizeof buf)) > 0;) text.append(buf, got);

  std::optional<CacheEntry> best;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    CacheEntry e;
    try {
      const json j = json::parse(line);
      const json& k = j.at("key");
      e.key.command = k.at("command").get<std::string>();
      e.key.graph = k.at("graph").get<std::string>();
      e.key.pattern = k.at("pattern").get<std::string>();
      e.key.budget.max_nodes = k.at("budget_nodes").get<std::uint64_t>();
      e.key.budget.max_ms = k.at("budget_ms").get<std::int64_t>();
      e.verdict = j.at("verdict").get<std::string>();
      e.witness_digest = j.value("witness_digest", "");
      e.timestamp = j.value("timestamp", "");
    } catch (const std::exception&) {
      warnings_.push_back(path_ + ":" + std::to_string(lineno) + ": skipped corrupt cache line");
      continue;
    }
    if (e.key.command != key.command || e.key.graph != key.graph ||
        e.key.pattern != key.pattern)
      continue;
    if (is_definitive(e.verdict)) return e;
    if (!best && budget_covers(e.key.budget, key.budget)) best = e;
  }
  return best;
}

void ResultCache::append(const CacheEntry& entry) {
  LockedFile f(path_, O_RDWR | O_APPEND | O_CREAT, LOCK_EX);
  if (f.fd() < 0) throw std::runtime_error("cannot open cache file " + path_);
  // A torn previous write must not swallow this record.
  std::string line;
  if (const off_t size = ::lseek(f.fd(), 0, SEEK_END); size > 0) {
    char last = '\n';
    if (::pread(f.fd(), &last, 1, size - 1) == 1 && last != '\n') line = "\n";
  }
  line += json{{"key", key_json(entry.key)},
               {"verdict", entry.verdict},
               {"witness_digest", entry.witness_digest},
               {"timestamp", entry.timestamp}}
              .dump();
  line += '\n';
  if (::write(f.fd(), line.data(), line.size()) != static_cast<ssize_t>(line.size()))
    throw std::runtime_error("short write to cache file " + path_);
}

}  // namespace rainsat
