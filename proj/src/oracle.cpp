#include "hcordial/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hcordial {

std::string to_string(AssignmentCount count) {
  if (count == 0) return "0";
  std::string digits;
  while (count > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(count % 10)));
    count /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Found: return "found";
    case Decision::Exhausted: return "exhausted";
    case Decision::Undecided: return "undecided";
  }
  return "?";
}

namespace {

using Family = LabelingKind::Family;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Problem {
  const Graph& g;
  LabelingKind kind;
  int k = 1;
  bool fix_first_sign = false;
  PruneRules rules;
  std::vector<Label> values;        // ascending
  std::vector<Label> positive;      // values for a sign-fixed first edge
  std::vector<AssignmentCount> power;  // power[r] = |values|^r
  std::size_t max_magnitude = 1;    // bound on |f(v)| tracked in vertex tallies

  Problem(const Graph& graph, const SearchConfig& cfg, bool symmetry)
      : g(graph), kind(cfg.kind), k(cfg.kind.max_label()), fix_first_sign(symmetry),
        rules(cfg.pruning) {
    for (int x = -k; x <= k; ++x)
      if (x != 0) values.push_back(x);
    for (int x = 1; x <= k; ++x) positive.push_back(x);
    power.assign(g.size() + 1, 1);
    for (std::size_t r = 1; r <= g.size(); ++r) power[r] = power[r - 1] * values.size();
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
    max_magnitude = std::max<std::size_t>(max_degree * static_cast<std::size_t>(k), 1);
  }

  const std::vector<Label>& choices(std::size_t edge) const {
    return edge == 0 && fix_first_sign ? positive : values;
  }

  AssignmentCount space() const {
    if (g.size() == 0) return 1;
    return choices(0).size() * power[g.size() - 1];
  }
};

// Can rem more labels (each in +-1..+-k) move a vertex sum by exactly d?
bool reachable(std::int64_t d, std::size_t rem, int k) {
  const auto r = static_cast<std::int64_t>(rem);
  if (rem == 0) return d == 0;
  if (k == 1) return std::llabs(d) <= r && (d - r) % 2 == 0;
  if (rem == 1) return d != 0 && std::llabs(d) <= k;
  return std::llabs(d) <= k * r;
}

struct TaskResult {
  bool finished = false;      // whole subtree explored, or stopped at the witness limit
  std::vector<std::vector<Label>> witnesses;
  SearchStats stats;
};

struct Shared {
  std::size_t task_count = 0;
  std::size_t limit = 1;
  bool any_witness_stops_all = false;
  std::optional<std::uint64_t> budget;
  std::optional<Clock::time_point> deadline;

  std::atomic<std::size_t> next_task{0};
  std::atomic<std::int64_t> cutoff{0};  // tasks with a larger index are not needed
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<bool> out_of_time{false};

  std::mutex mu;
  std::vector<TaskResult> results;
  std::exception_ptr error;

  bool over_limits() const { return out_of_budget.load(std::memory_order_relaxed) ||
                                    out_of_time.load(std::memory_order_relaxed); }

  // Called with mu held after task `index` finished.
  void settle(std::size_t index) {
    if (any_witness_stops_all && !results[index].witnesses.empty()) {
      cutoff.store(-1);
      return;
    }
    std::size_t found = 0;
    for (std::size_t t = 0; t < task_count && results[t].finished; ++t) {
      found += results[t].witnesses.size();
      if (found >= limit) {
        std::int64_t current = cutoff.load();
        auto target = static_cast<std::int64_t>(t);
        while (target < current && !cutoff.compare_exchange_weak(current, target)) {
        }
        return;
      }
    }
  }
};

class Walker {
 public:
  Walker(const Problem& p, Shared& shared, std::size_t task)
      : p_(p), shared_(shared), task_(static_cast<std::int64_t>(task)),
        labels_(p.g.size(), 0), sums_(p.g.order(), 0), remaining_(p.g.order(), 0),
        counted_(p.g.order(), 0), edge_diff_(static_cast<std::size_t>(p.k) + 1, 0),
        vertex_diff_(p.max_magnitude + 1, 0) {
    for (Vertex v = 0; v < p.g.order(); ++v) {
      remaining_[v] = p.g.degree(v);
      if (remaining_[v] > 0) ++incomplete_;
    }
  }

  // Explores the subtree below `prefix` (labels for edges 0..prefix.size()-1).
  void run(const std::vector<Label>& prefix, TaskResult& out) {
    out_ = &out;
    const std::size_t m = p_.g.size();
    const std::size_t depth = prefix.size();

    if (p_.rules.vertex_bounds && !roots_ok()) {
      prune(depth == 0 ? p_.space() : p_.power[m - depth]);
      out.finished = true;
      return;
    }
    for (std::size_t i = 0; i < depth; ++i) {
      if (!assign(i, prefix[i])) {
        prune(p_.power[m - depth]);
        out.finished = true;
        return;
      }
    }
    out.finished = descend(depth);
  }

 private:
  // True when the subtree was fully explored or the witness limit was reached.
  bool descend(std::size_t idx) {
    const std::size_t m = p_.g.size();
    if (idx == m) {
      leaf();
      return true;
    }
    for (Label x : p_.choices(idx)) {
      if (!tick()) return false;
      if (assign(idx, x)) {
        if (!descend(idx + 1)) {
          unassign(idx);
          return false;
        }
      } else {
        prune(p_.power[m - idx - 1]);
      }
      unassign(idx);
      if (out_->witnesses.size() >= shared_.limit) return true;
    }
    return true;
  }

  bool tick() {
    ++out_->stats.nodes;
    if (++pending_ >= 256) {
      auto total = shared_.nodes.fetch_add(pending_, std::memory_order_relaxed) + pending_;
      pending_ = 0;
      if (shared_.budget && total > *shared_.budget) shared_.out_of_budget.store(true);
      if (shared_.deadline && Clock::now() > *shared_.deadline) shared_.out_of_time.store(true);
    }
    if (shared_.over_limits()) return false;
    return task_ <= shared_.cutoff.load(std::memory_order_relaxed);
  }

  void prune(AssignmentCount mass) {
    ++out_->stats.prunes;
    out_->stats.covered += mass;
  }

  bool roots_ok() const {
    for (Vertex v = 0; v < p_.g.order(); ++v)
      if (remaining_[v] == 0 && !vertex_ok(v)) return false;
    return true;
  }

  bool target_reachable(std::int64_t sum, std::size_t rem, std::int64_t target) const {
    return reachable(target - sum, rem, p_.k);
  }

  bool vertex_ok(Vertex w) const {
    const std::int64_t s = sums_[w];
    const std::size_t rem = remaining_[w];
    switch (p_.kind.family) {
      case Family::HCordial:
        if (k_value_ > 0) return target_reachable(s, rem, k_value_) || target_reachable(s, rem, -k_value_);
        return rem > 0 || s != 0;
      case Family::SemiHCordial:
        return target_reachable(s, rem, -1) || target_reachable(s, rem, 0) || target_reachable(s, rem, 1);
      case Family::ZeroMCordial:
        return target_reachable(s, rem, 0);
      case Family::HkCordial:
        for (int t = 1; t <= p_.k; ++t)
          if (target_reachable(s, rem, t) || target_reachable(s, rem, -t)) return true;
        return false;
    }
    return true;
  }

  bool cardinality_ok(std::size_t idx) const {
    if (p_.kind.family != Family::ZeroMCordial) {
      std::int64_t excess = 0;
      for (int i = 1; i <= p_.k; ++i) excess += std::max<std::int64_t>(0, std::llabs(edge_diff_[i]) - 1);
      if (excess > static_cast<std::int64_t>(p_.g.size() - idx - 1)) return false;
    }
    std::int64_t excess = 0;
    switch (p_.kind.family) {
      case Family::HCordial:
        if (k_value_ > 0) excess = std::max<std::int64_t>(0, std::llabs(vertex_diff_[k_value_]) - 1);
        break;
      case Family::SemiHCordial:
        excess = std::max<std::int64_t>(0, std::llabs(vertex_diff_[1]) - 1);
        break;
      case Family::ZeroMCordial:
        break;
      case Family::HkCordial:
        for (int i = 1; i <= p_.k; ++i) excess += std::max<std::int64_t>(0, std::llabs(vertex_diff_[i]) - 1);
        break;
    }
    return excess <= static_cast<std::int64_t>(incomplete_);
  }

  // Records a completed vertex in the vertex tallies.
  void complete(Vertex w, std::size_t idx) {
    --incomplete_;
    const std::int64_t s = sums_[w];
    const auto mag = static_cast<std::size_t>(std::llabs(s));
    std::size_t counted = 0;
    switch (p_.kind.family) {
      case Family::HCordial:
        if (k_value_ == 0 && s != 0) {
          k_value_ = static_cast<std::int64_t>(mag);
          k_setter_ = w;
          k_set_at_ = idx;
        }
        if (k_value_ > 0 && static_cast<std::int64_t>(mag) == k_value_) counted = mag;
        break;
      case Family::SemiHCordial:
        if (mag == 1) counted = 1;
        break;
      case Family::ZeroMCordial:
        break;
      case Family::HkCordial:
        if (mag >= 1 && mag <= static_cast<std::size_t>(p_.k)) counted = mag;
        break;
    }
    if (counted > 0) {
      vertex_diff_[counted] += s > 0 ? 1 : -1;
      counted_[w] = s > 0 ? static_cast<std::int64_t>(counted) : -static_cast<std::int64_t>(counted);
    }
  }

  void uncomplete(Vertex w, std::size_t idx) {
    ++incomplete_;
    if (counted_[w] != 0) {
      vertex_diff_[static_cast<std::size_t>(std::llabs(counted_[w]))] -= counted_[w] > 0 ? 1 : -1;
      counted_[w] = 0;
    }
    if (k_setter_ == w && k_set_at_ == idx) {
      k_value_ = 0;
      k_setter_ = kNone;
      k_set_at_ = kNone;
    }
  }

  bool assign(std::size_t idx, Label x) {
    const Edge& e = p_.g.edge(idx);
    labels_[idx] = x;
    edge_diff_[static_cast<std::size_t>(std::abs(x))] += x > 0 ? 1 : -1;
    sums_[e.u] += x;
    sums_[e.v] += x;
    --remaining_[e.u];
    --remaining_[e.v];
    if (remaining_[e.u] == 0) complete(e.u, idx);
    if (remaining_[e.v] == 0) complete(e.v, idx);

    if (p_.rules.vertex_bounds && (!vertex_ok(e.u) || !vertex_ok(e.v))) return false;
    if (p_.rules.cardinality && !cardinality_ok(idx)) return false;
    return true;
  }

  void unassign(std::size_t idx) {
    const Edge& e = p_.g.edge(idx);
    const Label x = labels_[idx];
    if (remaining_[e.v] == 0) uncomplete(e.v, idx);
    if (remaining_[e.u] == 0) uncomplete(e.u, idx);
    ++remaining_[e.u];
    ++remaining_[e.v];
    sums_[e.u] -= x;
    sums_[e.v] -= x;
    edge_diff_[static_cast<std::size_t>(std::abs(x))] -= x > 0 ? 1 : -1;
    labels_[idx] = 0;
  }

  // Full check of the definition from the running sums; independent of pruning state.
  bool leaf_valid() const {
    const std::size_t n = p_.g.order();
    auto balanced = [](std::int64_t a, std::int64_t b) { return std::llabs(a - b) <= 1; };
    auto count = [&](std::int64_t value) {
      return static_cast<std::int64_t>(std::count(sums_.begin(), sums_.end(), value));
    };
    switch (p_.kind.family) {
      case Family::HCordial: {
        if (n == 0) return std::llabs(edge_diff_[1]) <= 1;
        const std::int64_t kv = std::llabs(sums_[0]);
        if (kv == 0) return false;
        for (auto s : sums_)
          if (std::llabs(s) != kv) return false;
        return std::llabs(edge_diff_[1]) <= 1 && balanced(count(kv), count(-kv));
      }
      case Family::SemiHCordial:
        for (auto s : sums_)
          if (std::llabs(s) > 1) return false;
        return std::llabs(edge_diff_[1]) <= 1 && balanced(count(1), count(-1));
      case Family::ZeroMCordial:
        return std::all_of(sums_.begin(), sums_.end(), [](std::int64_t s) { return s == 0; });
      case Family::HkCordial:
        for (auto s : sums_)
          if (std::llabs(s) < 1 || std::llabs(s) > p_.k) return false;
        for (int i = 1; i <= p_.k; ++i) {
          if (std::llabs(edge_diff_[i]) > 1 || !balanced(count(i), count(-i))) return false;
        }
        return true;
    }
    return false;
  }

  void leaf() {
    ++out_->stats.leaves;
    out_->stats.covered += 1;
    if (!leaf_valid()) return;
    if (!verify(Labeling(p_.g, labels_), p_.kind).valid) {
      throw std::logic_error("search accepted a labeling that fails verification");
    }
    out_->witnesses.push_back(labels_);
  }

  const Problem& p_;
  Shared& shared_;
  std::int64_t task_;
  TaskResult* out_ = nullptr;
  std::uint64_t pending_ = 0;

  std::vector<Label> labels_;
  std::vector<std::int64_t> sums_;
  std::vector<std::size_t> remaining_;
  std::vector<std::int64_t> counted_;  // signed magnitude recorded for a completed vertex
  std::vector<std::int64_t> edge_diff_;    // e(i) - e(-i)
  std::vector<std::int64_t> vertex_diff_;  // v(i) - v(-i) over completed vertices
  std::size_t incomplete_ = 0;
  std::int64_t k_value_ = 0;
  std::size_t k_setter_ = kNone;
  std::size_t k_set_at_ = kNone;
};

struct RunResult {
  std::vector<TaskResult> tasks;
  SearchStats stats;
  bool out_of_budget = false;
  bool out_of_time = false;
};

std::size_t split_depth(const Problem& p, unsigned workers) {
  if (workers <= 1) return 0;
  const std::size_t m = p.g.size();
  std::size_t depth = 0;
  AssignmentCount tasks = 1;
  while (depth < m && tasks < AssignmentCount{16} * workers) {
    tasks *= p.choices(depth).size();
    ++depth;
  }
  return depth;
}

std::vector<Label> prefix_for(const Problem& p, std::size_t task, std::size_t depth) {
  std::vector<Label> prefix(depth);
  for (std::size_t i = depth; i-- > 0;) {
    const auto& c = p.choices(i);
    prefix[i] = c[task % c.size()];
    task /= c.size();
  }
  return prefix;
}

RunResult run_search(const Problem& p, const SearchConfig& cfg, std::size_t limit,
                     bool any_witness_stops_all) {
  const auto start = Clock::now();
  const unsigned workers = std::max(1u, cfg.workers);
  const std::size_t depth = split_depth(p, workers);

  Shared shared;
  shared.task_count = 1;
  for (std::size_t i = 0; i < depth; ++i) shared.task_count *= p.choices(i).size();
  shared.limit = limit;
  shared.any_witness_stops_all = any_witness_stops_all;
  shared.budget = cfg.budget;
  if (cfg.time_limit) shared.deadline = start + *cfg.time_limit;
  shared.cutoff.store(static_cast<std::int64_t>(shared.task_count) - 1);
  shared.results.resize(shared.task_count);

  auto work = [&] {
    try {
      for (;;) {
        const std::size_t t = shared.next_task.fetch_add(1);
        if (t >= shared.task_count || shared.over_limits()) return;
        if (static_cast<std::int64_t>(t) > shared.cutoff.load()) continue;
        TaskResult result;
        Walker walker(p, shared, t);
        walker.run(prefix_for(p, t, depth), result);
        std::lock_guard lock(shared.mu);
        shared.results[t] = std::move(result);
        if (shared.results[t].finished) shared.settle(t);
      }
    } catch (...) {
      std::lock_guard lock(shared.mu);
      if (!shared.error) shared.error = std::current_exception();
      shared.out_of_budget.store(true);
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (shared.error) std::rethrow_exception(shared.error);

  RunResult out;
  out.out_of_budget = shared.out_of_budget.load();
  out.out_of_time = shared.out_of_time.load();
  out.stats.space = p.space();
  for (auto& r : shared.results) {
    out.stats.nodes += r.stats.nodes;
    out.stats.leaves += r.stats.leaves;
    out.stats.prunes += r.stats.prunes;
    out.stats.covered += r.stats.covered;
  }
  out.tasks = std::move(shared.results);
  out.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

std::string limits_note(const RunResult& r) {
  if (r.out_of_time) return "undecided: time budget exhausted";
  return "undecided: budget exhausted after " + std::to_string(r.stats.nodes) + " nodes";
}

bool space_countable(const Graph& g, const SearchConfig& cfg) {
  const double bits = static_cast<double>(g.size()) * std::log2(2.0 * cfg.kind.max_label());
  return bits < 120.0;
}

SearchOutcome decide_impl(const Graph& g, const SearchConfig& cfg, bool symmetry) {
  SearchOutcome outcome;
  if (!space_countable(g, cfg)) {
    outcome.note = "undecided: label space too large to search";
    return outcome;
  }
  Problem p(g, cfg, symmetry);
  RunResult r = run_search(p, cfg, 1, !cfg.canonical);
  outcome.stats = r.stats;

  if (!cfg.canonical) {
    for (const auto& t : r.tasks) {
      if (!t.witnesses.empty()) {
        outcome.decision = Decision::Found;
        outcome.witness = Labeling(g, t.witnesses.front());
        return outcome;
      }
    }
    const bool all = std::all_of(r.tasks.begin(), r.tasks.end(),
                                 [](const TaskResult& t) { return t.finished; });
    outcome.decision = all ? Decision::Exhausted : Decision::Undecided;
    if (!all) outcome.note = limits_note(r);
    return outcome;
  }

  for (const auto& t : r.tasks) {
    if (!t.finished) {
      outcome.decision = Decision::Undecided;
      outcome.note = limits_note(r);
      return outcome;
    }
    if (!t.witnesses.empty()) {
      outcome.decision = Decision::Found;
      outcome.witness = Labeling(g, t.witnesses.front());
      return outcome;
    }
  }
  outcome.decision = Decision::Exhausted;
  return outcome;
}

}  // namespace

SearchOutcome decide(const Graph& g, const SearchConfig& cfg) { return decide_impl(g, cfg, false); }

SearchOutcome decide_with_symmetry(const Graph& g, const SearchConfig& cfg) {
  return decide_impl(g, cfg, g.size() > 0);
}

Enumeration enumerate(const Graph& g, const SearchConfig& cfg) {
  if (cfg.limit == 0) throw std::invalid_argument("enumeration limit must be at least 1");
  Enumeration out;
  if (!space_countable(g, cfg)) {
    out.note = "undecided: label space too large to search";
    return out;
  }
  Problem p(g, cfg, false);
  RunResult r = run_search(p, cfg, cfg.limit, false);
  out.stats = r.stats;
  for (const auto& t : r.tasks) {
    if (!t.finished) {
      out.status = Decision::Undecided;
      out.note = limits_note(r);
      return out;
    }
    for (const auto& w : t.witnesses) {
      out.witnesses.emplace_back(g, w);
      if (out.witnesses.size() == cfg.limit) {
        out.status = Decision::Found;
        return out;
      }
    }
  }
  out.status = Decision::Exhausted;
  return out;
}

}  // namespace hcordial
