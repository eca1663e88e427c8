#include "rainsat/search.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace rainsat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Found:
      return "Found";
    case Verdict::NoneExists:
      return "NoneExists";
    case Verdict::BudgetExceeded:
      return "BudgetExceeded";
  }
  return "?";
}

namespace {

using Mask = std::bitset<kMaxSearchEdges>;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

enum class Mode { Find, Count };
enum class Flow { Continue, Stop };

class Stopwatch {
 public:
  explicit Stopwatch(std::int64_t limit_ms) : start_(Clock::now()), limit_ms_(limit_ms) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }
  bool expired() const { return limit_ms_ > 0 && elapsed_ms() >= static_cast<double>(limit_ms_); }

 private:
  Clock::time_point start_;
  std::int64_t limit_ms_;
};

// The instance after dropping edges no copy uses (find mode only) and
// compacting fixed colors to classes 0..fixed_classes-1.
struct Problem {
  int n = 0;
  int m = 0;
  std::vector<Edge> ends;
  std::vector<std::vector<int>> copies;
  std::vector<std::vector<int>> copies_of;
  std::vector<int> fixed;
  int fixed_classes = 0;
  std::vector<int> order;  // static branching order

  // Back to the host graph.
  std::vector<int> original_edge;  // reduced -> original
  std::vector<Color> fixed_labels;  // class -> label
  int host_edges = 0;
  bool has_fixed = false;
};

Problem prepare(const Graph& g, const std::vector<Copy>& copies, const std::vector<Color>& fixed,
                bool drop_unused) {
  const int m = g.edge_count();
  if (!fixed.empty() && static_cast<int>(fixed.size()) != m)
    throw std::invalid_argument("fixed coloring length does not match edge count");
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  for (const auto& copy : copies)
    for (EdgeId e : copy.edges) {
      if (e < 0 || e >= m) throw std::invalid_argument("copy edge index out of range");
      used[e] = 1;
    }

  Problem p;
  p.n = g.vertex_count();
  p.host_edges = m;
  p.has_fixed = std::any_of(fixed.begin(), fixed.end(), [](Color c) { return c >= 0; });
  std::vector<int> reduced(static_cast<std::size_t>(m), -1);
  for (EdgeId e = 0; e < m; ++e) {
    const bool is_fixed = !fixed.empty() && fixed[e] >= 0;
    if (drop_unused && !used[e] && !is_fixed) continue;
    reduced[e] = p.m++;
    p.original_edge.push_back(e);
    p.ends.push_back(g.edge(e));
  }
  if (p.m > kMaxSearchEdges)
    throw std::invalid_argument("search instance has " + std::to_string(p.m) +
                                " constrained edges; the limit is " +
                                std::to_string(kMaxSearchEdges));

  for (EdgeId e = 0; e < m && p.has_fixed; ++e)
    if (fixed[e] >= 0) p.fixed_labels.push_back(fixed[e]);
  std::sort(p.fixed_labels.begin(), p.fixed_labels.end());
  p.fixed_labels.erase(std::unique(p.fixed_labels.begin(), p.fixed_labels.end()),
                       p.fixed_labels.end());
  p.fixed_classes = static_cast<int>(p.fixed_labels.size());
  p.fixed.assign(static_cast<std::size_t>(p.m), -1);
  for (int r = 0; r < p.m && p.has_fixed; ++r) {
    const Color label = fixed[p.original_edge[r]];
    if (label >= 0)
      p.fixed[r] = static_cast<int>(
          std::lower_bound(p.fixed_labels.begin(), p.fixed_labels.end(), label) -
          p.fixed_labels.begin());
  }

  p.copies_of.resize(static_cast<std::size_t>(p.m));
  for (const auto& copy : copies) {
    std::vector<int> edges;
    for (EdgeId e : copy.edges) edges.push_back(reduced[e]);
    const int q = static_cast<int>(p.copies.size());
    for (int e : edges) p.copies_of[e].push_back(q);
    p.copies.push_back(std::move(edges));
  }

  p.order.resize(static_cast<std::size_t>(p.m));
  std::iota(p.order.begin(), p.order.end(), 0);
  std::stable_sort(p.order.begin(), p.order.end(), [&](int a, int b) {
    return p.copies_of[a].size() > p.copies_of[b].size();
  });
  return p;
}

struct Step {
  int edge;
  int cls;
};

struct Task {
  std::vector<Step> prefix;
  std::uint64_t nodes_before = 0;  // frontier nodes preceding it in DFS order
};

class Solver {
 public:
  Solver(const Problem& p, Mode mode, const SearchOptions& options, const Stopwatch& clock,
         std::size_t keep)
      : p_(p),
        mode_(mode),
        forced_(options.forced_repeat_pruning),
        fail_first_(options.fail_first),
        clock_(clock),
        keep_(keep),
        cls_(static_cast<std::size_t>(p.m), -1),
        class_size_(static_cast<std::size_t>(kMaxSearchEdges), 0),
        used_at_(static_cast<std::size_t>(p.n)),
        open_(p.copies.size()),
        repeats_(p.copies.size(), 0),
        cmask_(p.copies.size()) {
    for (std::size_t q = 0; q < p.copies.size(); ++q)
      open_[q] = static_cast<int>(p.copies[q].size());
    classes_ = p.fixed_classes;
    for (int c = 0; c < classes_; ++c) open_mask_.set(c);
  }

  // Applies the fixed pre-coloring; false when it is improper or already
  // completes a rainbow copy.
  bool init() {
    bool ok = true;
    for (int e = 0; e < p_.m; ++e) {
      const int c = p_.fixed[e];
      if (c < 0) continue;
      if (used_at_[p_.ends[e].u].test(c) || used_at_[p_.ends[e].v].test(c)) ok = false;
      if (!assign(e, c)) ok = false;
    }
    return ok;
  }

  void set_node_limit(std::uint64_t limit) { node_limit_ = limit; }
  void set_cancel(const std::atomic<std::size_t>* first_found, std::size_t index) {
    first_found_ = first_found;
    task_index_ = index;
  }

  void run() { dfs(0); }

  void run_task(const Task& task) {
    for (const Step& s : task.prefix) {
      assign(s.edge, s.cls);
      trail_.push_back(s);
    }
    dfs(static_cast<int>(task.prefix.size()));
  }

  std::vector<Task> collect(int depth, std::uint64_t& frontier_nodes) {
    collecting_ = true;
    split_depth_ = depth;
    tasks_.clear();
    nodes_ = 0;
    dfs(0);
    collecting_ = false;
    frontier_nodes = nodes_;
    nodes_ = 0;
    return std::move(tasks_);
  }

  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }
  bool cancelled() const { return cancelled_; }
  bool found() const { return found_; }
  const std::vector<int>& solution() const { return solution_; }
  std::uint64_t count() const { return count_; }
  const std::vector<std::vector<int>>& stored() const { return stored_; }

 private:
  bool assign(int e, int c) {
    cls_[e] = c;
    if (c == classes_) {
      open_mask_.set(c);
      ++classes_;
    }
    ++class_size_[c];
    used_at_[p_.ends[e].u].set(c);
    used_at_[p_.ends[e].v].set(c);
    ++colored_;
    bool ok = true;
    for (int q : p_.copies_of[e]) {
      --open_[q];
      if (cmask_[q].test(c))
        ++repeats_[q];
      else
        cmask_[q].set(c);
      if (open_[q] == 0 && repeats_[q] == 0) ok = false;
    }
    return ok;
  }

  void unassign(int e) {
    const int c = cls_[e];
    cls_[e] = -1;
    for (int q : p_.copies_of[e]) {
      ++open_[q];
      bool shared = false;
      for (int f : p_.copies[q])
        if (f != e && cls_[f] == c) shared = true;
      if (shared)
        --repeats_[q];
      else
        cmask_[q].reset(c);
    }
    --colored_;
    used_at_[p_.ends[e].u].reset(c);
    used_at_[p_.ends[e].v].reset(c);
    if (--class_size_[c] == 0 && c == classes_ - 1 && c >= p_.fixed_classes) {
      --classes_;
      open_mask_.reset(c);
    }
  }

  void domain(int e, Mask& allowed, bool& fresh) const {
    allowed = open_mask_ & ~(used_at_[p_.ends[e].u] | used_at_[p_.ends[e].v]);
    fresh = classes_ < kMaxSearchEdges;
    if (!forced_) return;
    for (int q : p_.copies_of[e]) {
      if (repeats_[q] == 0 && open_[q] == 1) {
        allowed &= cmask_[q];
        fresh = false;
      }
    }
  }

  // Next edge to branch on, or -1 when some uncolored edge has no option.
  int select() const {
    int best = -1;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (int e : p_.order) {
      if (cls_[e] >= 0) continue;
      if (!fail_first_ && !forced_) return e;
      Mask allowed;
      bool fresh = false;
      domain(e, allowed, fresh);
      const std::size_t size = allowed.count() + (fresh ? 1 : 0);
      if (size == 0) return -1;
      if (fail_first_ ? size < best_size : best < 0) {
        best = e;
        best_size = size;
      }
    }
    return best;
  }

  Flow dfs(int depth) {
    if (collecting_ && (depth == split_depth_ || colored_ == p_.m)) {
      tasks_.push_back({trail_, nodes_});
      return Flow::Continue;
    }
    ++nodes_;
    if (!collecting_ && nodes_ > node_limit_) {
      aborted_ = true;
      return Flow::Stop;
    }
    if ((nodes_ & 1023U) == 0) {
      if (clock_.expired()) {
        aborted_ = true;
        return Flow::Stop;
      }
      if (first_found_ && first_found_->load(std::memory_order_relaxed) < task_index_) {
        cancelled_ = true;
        return Flow::Stop;
      }
    }
    if (colored_ == p_.m) {
      if (mode_ == Mode::Find) {
        solution_ = cls_;
        found_ = true;
        return Flow::Stop;
      }
      ++count_;
      if (stored_.size() < keep_) stored_.push_back(cls_);
      return Flow::Continue;
    }
    const int e = select();
    if (e < 0) return Flow::Continue;
    Mask allowed;
    bool fresh = false;
    domain(e, allowed, fresh);
    for (std::size_t c = allowed._Find_first(); c < allowed.size(); c = allowed._Find_next(c)) {
      if (branch(e, static_cast<int>(c), depth) == Flow::Stop) return Flow::Stop;
    }
    if (fresh && branch(e, classes_, depth) == Flow::Stop) return Flow::Stop;
    return Flow::Continue;
  }

  Flow branch(int e, int c, int depth) {
    const bool ok = assign(e, c);
    trail_.push_back({e, c});
    const Flow f = ok ? dfs(depth + 1) : Flow::Continue;
    trail_.pop_back();
    unassign(e);
    return f;
  }

  const Problem& p_;
  Mode mode_;
  bool forced_;
  bool fail_first_;
  const Stopwatch& clock_;
  std::size_t keep_;

  std::vector<int> cls_;
  std::vector<int> class_size_;
  std::vector<Mask> used_at_;
  Mask open_mask_;
  int classes_ = 0;
  int colored_ = 0;
  std::vector<int> open_;
  std::vector<int> repeats_;
  std::vector<Mask> cmask_;
  std::vector<Step> trail_;

  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_ = kNoLimit;
  bool aborted_ = false;
  bool cancelled_ = false;
  bool found_ = false;
  const std::atomic<std::size_t>* first_found_ = nullptr;
  std::size_t task_index_ = 0;

  bool collecting_ = false;
  int split_depth_ = 0;
  std::vector<Task> tasks_;

  std::vector<int> solution_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<int>> stored_;
};

struct RawResult {
  enum class Status { Complete, Found, Exceeded } status = Status::Complete;
  std::vector<int> solution;
  std::uint64_t count = 0;
  std::vector<std::vector<int>> stored;
  std::uint64_t nodes = 0;
};

std::uint64_t limit_of(const Budget& b) { return b.max_nodes == 0 ? kNoLimit : b.max_nodes; }

RawResult run_serial(Solver solver, std::uint64_t limit) {
  solver.set_node_limit(limit);
  solver.run();
  RawResult r;
  r.nodes = solver.nodes();
  r.count = solver.count();
  r.stored = solver.stored();
  if (solver.aborted()) {
    r.status = RawResult::Status::Exceeded;
  } else if (solver.found()) {
    r.status = RawResult::Status::Found;
    r.solution = solver.solution();
  }
  return r;
}

struct TaskResult {
  bool done = false;
  bool aborted = false;
  bool found = false;
  std::vector<int> solution;
  std::uint64_t nodes = 0;
  std::uint64_t count = 0;
  std::vector<std::vector<int>> stored;
};

// Splits the tree at a shallow frontier, searches the subtrees on a thread
// pool and merges them in DFS order, so the outcome and node count match a
// serial run with the same node budget.
RawResult run_parallel(const Solver& root, Mode mode, int workers, std::uint64_t limit,
                       const Problem& p) {
  std::vector<Task> tasks;
  std::uint64_t frontier_nodes = 0;
  const int max_depth = std::min(p.m, 24);
  for (int depth = 1; depth <= max_depth; ++depth) {
    Solver probe = root;
    tasks = probe.collect(depth, frontier_nodes);
    if (tasks.size() >= static_cast<std::size_t>(8 * workers)) break;
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (mode == Mode::Find && first_found.load() < i) continue;
      Solver s = root;
      const std::uint64_t before = tasks[i].nodes_before;
      s.set_node_limit(limit == kNoLimit ? kNoLimit : (limit > before ? limit - before : 0));
      if (mode == Mode::Find) s.set_cancel(&first_found, i);
      s.run_task(tasks[i]);
      if (s.cancelled()) continue;
      TaskResult& r = results[i];
      r.done = true;
      r.aborted = s.aborted();
      r.nodes = s.nodes();
      r.count = s.count();
      r.stored = s.stored();
      if (s.found() && !s.aborted()) {
        r.found = true;
        r.solution = s.solution();
        std::size_t cur = first_found.load();
        while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  RawResult out;
  std::uint64_t subtree_nodes = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const TaskResult& r = results[i];
    subtree_nodes += r.nodes;
    const std::uint64_t total = tasks[i].nodes_before + subtree_nodes;
    if (limit != kNoLimit && total > limit) {
      out.status = RawResult::Status::Exceeded;
      out.nodes = limit + 1;
      return out;
    }
    if (!r.done || r.aborted) {
      out.status = RawResult::Status::Exceeded;
      out.nodes = total;
      return out;
    }
    out.count += r.count;
    for (const auto& s : r.stored) out.stored.push_back(s);
    if (mode == Mode::Find && r.found) {
      out.status = RawResult::Status::Found;
      out.solution = r.solution;
      out.nodes = total;
      return out;
    }
  }
  out.nodes = frontier_nodes + subtree_nodes;
  if (limit != kNoLimit && out.nodes > limit) {
    out.status = RawResult::Status::Exceeded;
    out.nodes = limit + 1;
  }
  return out;
}

RawResult solve(const Problem& p, Mode mode, const SearchOptions& options,
                const Stopwatch& clock, std::size_t keep) {
  Solver root(p, mode, options, clock, keep);
  if (!root.init()) return {};
  const std::uint64_t limit = limit_of(options.budget);
  if (options.workers <= 1 || p.m < 4) return run_serial(root, limit);
  RawResult r = run_parallel(root, mode, options.workers, limit, p);
  if (r.stored.size() > keep) r.stored.resize(keep);
  return r;
}

EdgeColoring to_host_coloring(const Problem& p, const std::vector<int>& cls, bool fill_dropped) {
  std::vector<Color> colors(static_cast<std::size_t>(p.host_edges), -1);
  const Color top = p.fixed_labels.empty() ? -1 : p.fixed_labels.back();
  Color next = 0;
  for (int r = 0; r < p.m; ++r) {
    const int c = cls[r];
    const Color label = c < p.fixed_classes ? p.fixed_labels[c] : top + 1 + (c - p.fixed_classes);
    colors[p.original_edge[r]] = label;
    next = std::max(next, label + 1);
  }
  if (fill_dropped)
    for (Color& c : colors)
      if (c < 0) c = next++;
  EdgeColoring out(std::move(colors));
  return p.has_fixed ? out : out.canonical();
}

void verify_witness(const Graph& g, const EdgeColoring& w, const std::vector<Copy>& copies,
                    const Pattern* pattern, const std::vector<Color>& fixed) {
  bool ok = is_proper(g, w);
  for (const auto& copy : copies)
    if (ok && is_rainbow(copy, w)) ok = false;
  if (ok && pattern) ok = !find_rainbow_copy(g, w, *pattern).has_value();
  for (std::size_t e = 0; ok && e < fixed.size(); ++e)
    if (fixed[e] >= 0 && w[static_cast<EdgeId>(e)] != fixed[e]) ok = false;
  if (!ok) throw std::logic_error("solver produced an invalid witness");
}

SearchOutcome find_impl(const Graph& g, const std::vector<Copy>& copies, const Pattern* pattern,
                        const SearchOptions& options) {
  const Stopwatch clock(options.budget.max_ms);
  const Problem p = prepare(g, copies, options.fixed, true);
  const RawResult r = solve(p, Mode::Find, options, clock, 0);
  SearchOutcome out;
  out.nodes = r.nodes;
  switch (r.status) {
    case RawResult::Status::Exceeded:
      out.verdict = Verdict::BudgetExceeded;
      break;
    case RawResult::Status::Complete:
      out.verdict = Verdict::NoneExists;
      break;
    case RawResult::Status::Found:
      out.verdict = Verdict::Found;
      out.witness = to_host_coloring(p, r.solution, true);
      verify_witness(g, *out.witness, copies, pattern, options.fixed);
      break;
  }
  out.elapsed_ms = clock.elapsed_ms();
  return out;
}

EnumerationOutcome enumerate_impl(const Graph& g, const std::vector<Copy>& copies,
                                  const SearchOptions& options, std::size_t keep) {
  const Stopwatch clock(options.budget.max_ms);
  const Problem p = prepare(g, copies, options.fixed, false);
  const RawResult r = solve(p, Mode::Count, options, clock, keep);
  EnumerationOutcome out;
  out.exhaustive = r.status != RawResult::Status::Exceeded;
  out.count = r.count;
  out.nodes = r.nodes;
  for (const auto& cls : r.stored) out.colorings.push_back(to_host_coloring(p, cls, false));
  out.elapsed_ms = clock.elapsed_ms();
  return out;
}

}  // namespace

SearchOutcome find_rainbow_free_coloring(const Graph& g, const Pattern& pattern,
                                         const SearchOptions& options) {
  return find_impl(g, enumerate_copies(g, pattern), &pattern, options);
}

SearchOutcome find_rainbow_free_coloring(const Graph& g, const std::vector<Copy>& copies,
                                         const SearchOptions& options) {
  return find_impl(g, copies, nullptr, options);
}

EnumerationOutcome enumerate_rainbow_free_colorings(const Graph& g, const Pattern& pattern,
                                                    const SearchOptions& options,
                                                    std::size_t keep) {
  return enumerate_impl(g, enumerate_copies(g, pattern), options, keep);
}

EnumerationOutcome enumerate_rainbow_free_colorings(const Graph& g,
                                                    const std::vector<Copy>& copies,
                                                    const SearchOptions& options,
                                                    std::size_t keep) {
  return enumerate_impl(g, copies, options, keep);
}

UnrestrictedOutcome check_unrestricted(const Graph& g, const EdgeColoring& c,
                                       const std::vector<EdgeId>& edge_set,
                                       const Pattern& pattern, const Budget& budget) {
  if (!is_proper(g, c)) throw std::invalid_argument("check_unrestricted: coloring is not proper");
  if (find_rainbow_copy(g, c, pattern))
    throw std::invalid_argument("check_unrestricted: coloring already has a rainbow copy");
  const int m = g.edge_count();
  std::vector<char> free_edge(static_cast<std::size_t>(m), 0);
  for (EdgeId e : edge_set) {
    if (e < 0 || e >= m) throw std::invalid_argument("check_unrestricted: edge index out of range");
    free_edge[e] = 1;
  }
  std::vector<EdgeId> free_list;
  for (EdgeId e = 0; e < m; ++e)
    if (free_edge[e]) free_list.push_back(e);

  const Stopwatch clock(budget.max_ms);
  const std::uint64_t limit = limit_of(budget);
  UnrestrictedOutcome out;

  // Only copies meeting the edge set can change.
  std::vector<Copy> copies;
  for (auto& copy : enumerate_copies(g, pattern))
    if (std::any_of(copy.edges.begin(), copy.edges.end(), [&](EdgeId e) { return free_edge[e]; }))
      copies.push_back(std::move(copy));

  // Colors kept on the complement, then fresh classes opened in order.
  std::vector<Color> labels;
  for (EdgeId e = 0; e < m; ++e)
    if (!free_edge[e]) labels.push_back(c[e]);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int base = static_cast<int>(labels.size());
  const int palette = base + static_cast<int>(free_list.size());
  const Color fresh_label = (labels.empty() ? 0 : labels.back() + 1);

  std::vector<int> cid(static_cast<std::size_t>(m), -1);
  std::vector<std::vector<char>> used(static_cast<std::size_t>(g.vertex_count()),
                                      std::vector<char>(static_cast<std::size_t>(palette), 0));
  for (EdgeId e = 0; e < m; ++e) {
    if (free_edge[e]) continue;
    cid[e] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), c[e]) - labels.begin());
    used[g.edge(e).u][cid[e]] = 1;
    used[g.edge(e).v][cid[e]] = 1;
  }
  std::vector<std::vector<int>> copies_of(static_cast<std::size_t>(m));
  for (std::size_t q = 0; q < copies.size(); ++q)
    for (EdgeId e : copies[q].edges) copies_of[e].push_back(static_cast<int>(q));

  auto has_repeat = [&](const Copy& copy) {
    std::vector<int> seen;
    for (EdgeId e : copy.edges) {
      if (cid[e] < 0) continue;
      if (std::find(seen.begin(), seen.end(), cid[e]) != seen.end()) return true;
      seen.push_back(cid[e]);
    }
    return false;
  };

  int fresh_open = 0;
  bool aborted = false;
  std::optional<std::size_t> hit;
  std::uint64_t nodes = 0;

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (++nodes > limit || ((nodes & 1023U) == 0 && clock.expired())) {
      aborted = true;
      return true;
    }
    // A fully colored copy with no repeat settles it; so does a state where
    // every copy already repeats a color.
    bool any_alive = false;
    for (std::size_t q = 0; q < copies.size(); ++q) {
      if (has_repeat(copies[q])) continue;
      any_alive = true;
      const bool complete = std::all_of(copies[q].edges.begin(), copies[q].edges.end(),
                                        [&](EdgeId e) { return cid[e] >= 0; });
      if (complete) {
        hit = q;
        return true;
      }
    }
    if (!any_alive || i == free_list.size()) return false;
    const EdgeId e = free_list[i];
    const Vertex u = g.edge(e).u;
    const Vertex v = g.edge(e).v;
    for (int k = 0; k < base + fresh_open + 1 && k < palette; ++k) {
      if (used[u][k] || used[v][k]) continue;
      const bool opens = k == base + fresh_open;
      cid[e] = k;
      used[u][k] = used[v][k] = 1;
      if (opens) ++fresh_open;
      const bool stop = self(self, i + 1);
      if (opens) --fresh_open;
      used[u][k] = used[v][k] = 0;
      if (stop) return true;
      cid[e] = -1;
    }
    return false;
  };
  rec(rec, 0);

  out.nodes = nodes;
  out.elapsed_ms = clock.elapsed_ms();
  if (aborted) return out;
  out.decided = true;
  out.unrestricted = !hit.has_value();
  if (hit) {
    // Untouched free edges take fresh unique colors; that stays proper and
    // leaves the rainbow copy intact.
    int extra = 0;
    for (EdgeId e = 0; e < m; ++e) extra = std::max(extra, cid[e] + 1 - base);
    std::vector<Color> colors(static_cast<std::size_t>(m));
    for (EdgeId e = 0; e < m; ++e) {
      if (cid[e] < 0) cid[e] = base + extra++;
      colors[e] = cid[e] < base ? labels[cid[e]] : fresh_label + (cid[e] - base);
    }
    out.recoloring = EdgeColoring(std::move(colors));
    out.rainbow_copy = copies[*hit];
    if (!is_proper(g, *out.recoloring) || !is_rainbow(*out.rainbow_copy, *out.recoloring))
      throw std::logic_error("check_unrestricted produced an invalid recoloring");
  }
  return out;
}

}  // namespace rainsat
