#include "trackmc/multicut.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <string>
#include <unordered_map>

#include "format_util.hpp"
#include "parse_util.hpp"

namespace trackmc {

namespace {
constexpr double kGainEps = 1e-9;
}

Graph::Graph(int n_vertices) : n_(n_vertices) {
  if (n_vertices < 0) throw std::invalid_argument("vertex count must be >= 0");
  adj_.resize(static_cast<std::size_t>(n_));
  partners_.resize(static_cast<std::size_t>(n_));
}

std::uint64_t Graph::key(int u, int v) {
  const auto lo = static_cast<std::uint64_t>(std::min(u, v));
  const auto hi = static_cast<std::uint64_t>(std::max(u, v));
  return (lo << 32) | hi;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v, double cost) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self loops are not allowed");
  if (!std::isfinite(cost)) throw std::invalid_argument("edge cost must be finite");
  if (!edge_keys_.insert(key(u, v)).second)
    throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  edges_.push_back({u, v, cost});
  adj_[static_cast<std::size_t>(u)].emplace_back(v, cost);
  adj_[static_cast<std::size_t>(v)].emplace_back(u, cost);
}

void Graph::add_constraint(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("a vertex cannot be constrained against itself");
  if (!constraint_keys_.insert(key(u, v)).second) return;  // idempotent
  constraints_.emplace_back(std::min(u, v), std::max(u, v));
  partners_[static_cast<std::size_t>(u)].push_back(v);
  partners_[static_cast<std::size_t>(v)].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return edge_keys_.count(key(u, v)) > 0;
}

bool Graph::constrained(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return constraint_keys_.count(key(u, v)) > 0;
}

const std::vector<std::pair<int, double>>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

const std::vector<int>& Graph::constraint_partners(int v) const {
  check_vertex(v);
  return partners_[static_cast<std::size_t>(v)];
}

Decomposition all_singletons(int n_vertices) {
  Decomposition d;
  d.labels.resize(static_cast<std::size_t>(n_vertices));
  for (int i = 0; i < n_vertices; ++i) d.labels[static_cast<std::size_t>(i)] = i;
  return d;
}

std::vector<int> canonical_labels(const std::vector<int>& labels) {
  std::vector<int> out(labels.size());
  std::unordered_map<int, int> remap;
  remap.reserve(labels.size() * 2);
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = remap.emplace(labels[i], next);
    if (inserted) ++next;
    out[i] = it->second;
  }
  return out;
}

namespace {

void require_complete(const Graph& g, const Decomposition& d) {
  if (d.labels.size() != static_cast<std::size_t>(g.n_vertices()))
    throw IncompleteLabelingError("labeling covers " + std::to_string(d.labels.size()) +
                                  " of " + std::to_string(g.n_vertices()) + " vertices");
}

}  // namespace

double objective(const Graph& g, const Decomposition& d) {
  require_complete(g, d);
  double total = 0.0;
  for (const GraphEdge& e : g.edges())
    if (d.labels[static_cast<std::size_t>(e.u)] != d.labels[static_cast<std::size_t>(e.v)])
      total += e.cost;
  return total;
}

bool feasible(const Graph& g, const Decomposition& d) {
  require_complete(g, d);
  for (const auto& [u, v] : g.constraints())
    if (d.labels[static_cast<std::size_t>(u)] == d.labels[static_cast<std::size_t>(v)])
      return false;

  // Every component must induce a connected subgraph.
  const int n = g.n_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    const int label = d.labels[static_cast<std::size_t>(s)];
    int reached = 0;
    seen[static_cast<std::size_t>(s)] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      ++reached;
      for (const auto& [nb, cost] : g.neighbors(v)) {
        (void)cost;
        if (seen[static_cast<std::size_t>(nb)] ||
            d.labels[static_cast<std::size_t>(nb)] != label)
          continue;
        seen[static_cast<std::size_t>(nb)] = 1;
        queue.push_back(nb);
      }
    }
    int total = 0;
    for (int v = 0; v < n; ++v)
      if (d.labels[static_cast<std::size_t>(v)] == label) ++total;
    if (reached != total) return false;
  }
  return true;
}

std::vector<int> edge_labels(const Graph& g, const Decomposition& d) {
  require_complete(g, d);
  std::vector<int> y;
  y.reserve(g.edges().size());
  for (const GraphEdge& e : g.edges())
    y.push_back(d.labels[static_cast<std::size_t>(e.u)] !=
                        d.labels[static_cast<std::size_t>(e.v)]
                    ? 1
                    : 0);
  return y;
}

namespace {

// Visits every simple cycle of at most max_len edges exactly once: cycles are
// rooted at their smallest vertex and the two traversal directions are
// collapsed by requiring the second vertex to be smaller than the last.
template <class F>
void for_each_cycle(const Graph& g, int max_len, F&& visit) {
  const int n = g.n_vertices();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const GraphEdge& e = g.edges()[i];
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, static_cast<int>(i));
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, static_cast<int>(i));
  }
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<int> path, path_edges;

  const auto dfs = [&](auto&& self, int v, int root) -> void {
    for (const auto& [nb, ei] : adj[static_cast<std::size_t>(v)]) {
      if (nb == root && path.size() >= 3) {
        if (path[1] < path.back()) {
          path_edges.push_back(ei);
          visit(path_edges);
          path_edges.pop_back();
        }
        continue;
      }
      if (nb <= root || on_path[static_cast<std::size_t>(nb)]) continue;
      if (static_cast<int>(path.size()) >= max_len) continue;
      on_path[static_cast<std::size_t>(nb)] = 1;
      path.push_back(nb);
      path_edges.push_back(ei);
      self(self, nb, root);
      path_edges.pop_back();
      path.pop_back();
      on_path[static_cast<std::size_t>(nb)] = 0;
    }
  };

  for (int root = 0; root < n; ++root) {
    on_path[static_cast<std::size_t>(root)] = 1;
    path.assign(1, root);
    dfs(dfs, root, root);
    on_path[static_cast<std::size_t>(root)] = 0;
  }
}

}  // namespace

bool check_cycle_inequalities(const Graph& g, const std::vector<int>& y,
                              int max_cycle_len) {
  if (y.size() != g.edges().size())
    throw std::invalid_argument("edge labeling size does not match edge count");
  if (max_cycle_len < 3)
    throw std::invalid_argument("cycles have at least three edges");
  bool ok = true;
  for_each_cycle(g, max_cycle_len, [&](const std::vector<int>& cycle) {
    int cut = 0;
    for (int ei : cycle) cut += y[static_cast<std::size_t>(ei)];
    if (cut == 1) ok = false;
  });
  return ok;
}

bool check_cycle_inequalities(const Graph& g, const Decomposition& d,
                              int max_cycle_len) {
  return check_cycle_inequalities(g, edge_labels(g, d), max_cycle_len);
}

std::pair<Decomposition, double> brute_force_optimum(const Graph& g, int cap) {
  const int n = g.n_vertices();
  if (n > cap)
    throw TooLargeError("instance has " + std::to_string(n) +
                        " vertices, enumeration capped at " + std::to_string(cap));
  Decomposition d;
  d.labels.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return {d, 0.0};

  Decomposition best;
  double best_obj = std::numeric_limits<double>::infinity();

  // Restricted-growth enumeration emits each partition once, already in
  // canonical label form and in lexicographic order, so keeping the first
  // strict improvement makes ties resolve lexicographically.
  const auto recurse = [&](auto&& self, int pos, int max_label) -> void {
    if (pos == n) {
      if (!feasible(g, d)) return;
      const double obj = objective(g, d);
      if (obj < best_obj) {
        best_obj = obj;
        best = d;
      }
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      d.labels[static_cast<std::size_t>(pos)] = label;
      self(self, pos + 1, std::max(max_label, label));
    }
  };
  recurse(recurse, 1, 0);  // vertex 0 is pinned to label 0
  return {best, best_obj};
}

namespace {

// Local-search state: components are slots holding sorted member lists; an
// empty slot is dead. Slot numbering is arbitrary, all orderings that affect
// the result are derived from member vertex ids.
class CkljSolver {
 public:
  CkljSolver(const Graph& g, const std::optional<Decomposition>& init)
      : g_(g), comp_of_(static_cast<std::size_t>(g.n_vertices())) {
    if (init) {
      require_complete(g_, *init);
      if (!feasible(g_, *init))
        throw InfeasibleInitError("initial decomposition violates constraints or connectivity");
      std::unordered_map<int, int> slot_of_label;
      for (int v = 0; v < g_.n_vertices(); ++v) {
        const int label = init->labels[static_cast<std::size_t>(v)];
        auto [it, inserted] = slot_of_label.emplace(label, static_cast<int>(members_.size()));
        if (inserted) members_.emplace_back();
        comp_of_[static_cast<std::size_t>(v)] = it->second;
        members_[static_cast<std::size_t>(it->second)].push_back(v);
      }
      for (auto& m : members_) std::sort(m.begin(), m.end());
    } else {
      members_.resize(static_cast<std::size_t>(g_.n_vertices()));
      for (int v = 0; v < g_.n_vertices(); ++v) {
        comp_of_[static_cast<std::size_t>(v)] = v;
        members_[static_cast<std::size_t>(v)] = {v};
      }
    }
    obj_ = objective(g_, current());
  }

  std::pair<Decomposition, SolveReport> run() {
    bool any = true;
    while (any) {
      any = false;
      ++passes_;
      for (const int a : live_slots()) {
        if (dead(a)) continue;  // absorbed earlier in this pass
        while (improve_around(a)) any = true;
      }
      for (const int a : live_slots()) {
        if (dead(a) || members_[static_cast<std::size_t>(a)].size() < 2) continue;
        if (extract_from(a)) any = true;
      }
    }
    Decomposition d{canonical_labels(comp_of_)};
    SolveReport report;
    report.objective = objective(g_, d);
    report.n_components = 1 + *std::max_element(d.labels.begin(), d.labels.end());
    report.n_outer_passes = passes_;
    report.transformations_applied = transformations_;
    return {d, report};
  }

 private:
  Decomposition current() const { return Decomposition{comp_of_}; }
  bool dead(int slot) const { return members_[static_cast<std::size_t>(slot)].empty(); }
  int min_member(int slot) const { return members_[static_cast<std::size_t>(slot)].front(); }

  // Live slots ordered by smallest member.
  std::vector<int> live_slots() const {
    std::vector<int> slots;
    for (int s = 0; s < static_cast<int>(members_.size()); ++s)
      if (!dead(s)) slots.push_back(s);
    std::sort(slots.begin(), slots.end(),
              [&](int a, int b) { return min_member(a) < min_member(b); });
    return slots;
  }

  // Neighboring slots of `a` with total connecting cost, most attractive
  // first; cost ties order by smallest member.
  std::vector<std::pair<int, double>> neighbor_slots(int a) const {
    std::unordered_map<int, double> weight;
    for (const int u : members_[static_cast<std::size_t>(a)])
      for (const auto& [nb, cost] : g_.neighbors(u)) {
        const int b = comp_of_[static_cast<std::size_t>(nb)];
        if (b != a) weight[b] += cost;
      }
    std::vector<std::pair<int, double>> out(weight.begin(), weight.end());
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
      if (x.second != y.second) return x.second > y.second;
      return min_member(x.first) < min_member(y.first);
    });
    return out;
  }

  // One greedy step around component a: scan its neighbor components in order
  // and apply the first improving join or move sequence. True if anything
  // was applied (the neighbor list is then stale and must be rebuilt).
  bool improve_around(int a) {
    for (const auto& [b, weight] : neighbor_slots(a)) {
      (void)weight;
      if (dead(a)) return false;
      if (dead(b)) continue;
      if (update_bipartition(a, b)) return true;
    }
    return false;
  }

  // Considers joining components a and b, and exchanging vertices between
  // them via a Kernighan-Lin move sequence; applies the better option if it
  // strictly improves the objective.
  bool update_bipartition(int a, int b) {
    const auto& A = members_[static_cast<std::size_t>(a)];
    const auto& B = members_[static_cast<std::size_t>(b)];

    double join_gain = 0.0;
    for (const int u : A)
      for (const auto& [nb, cost] : g_.neighbors(u))
        if (comp_of_[static_cast<std::size_t>(nb)] == b) join_gain += cost;

    bool join_allowed = true;
    for (const int u : A) {
      for (const int p : g_.constraint_partners(u))
        if (comp_of_[static_cast<std::size_t>(p)] == b) {
          join_allowed = false;
          break;
        }
      if (!join_allowed) break;
    }

    // Tentative single-vertex moves over the union, each vertex at most once,
    // gains measured against the evolving assignment.
    std::vector<int> verts(A);
    verts.insert(verts.end(), B.begin(), B.end());
    std::sort(verts.begin(), verts.end());
    std::unordered_map<int, int> side;
    side.reserve(verts.size() * 2);
    for (const int u : A) side[u] = 0;
    for (const int u : B) side[u] = 1;
    std::unordered_map<int, char> moved;
    moved.reserve(verts.size() * 2);
    int side_count[2] = {static_cast<int>(A.size()), static_cast<int>(B.size())};

    std::vector<std::pair<int, double>> sequence;  // (vertex, gain when moved)
    while (sequence.size() < verts.size()) {
      // Rank unmoved vertices by gain, ties toward the smaller id.
      std::vector<std::pair<double, int>> ranked;
      for (const int v : verts) {
        if (moved.count(v)) continue;
        const int target = 1 - side[v];
        double gain = 0.0;
        for (const auto& [nb, cost] : g_.neighbors(v)) {
          const auto it = side.find(nb);
          if (it == side.end()) continue;  // other components: cut either way
          gain += it->second == target ? cost : -cost;
        }
        ranked.emplace_back(-gain, v);
      }
      if (ranked.empty()) break;
      std::sort(ranked.begin(), ranked.end());

      bool stepped = false;
      for (const auto& [neg_gain, v] : ranked) {
        const int source = side[v];
        const int target = 1 - source;
        if (!move_permitted(v, source, target, side, side_count)) continue;
        side[v] = target;
        --side_count[source];
        ++side_count[target];
        moved[v] = 1;
        sequence.emplace_back(v, -neg_gain);
        stepped = true;
        break;
      }
      if (!stepped) break;
    }

    double best_prefix_gain = 0.0;
    std::size_t best_prefix_len = 0;
    double cumulative = 0.0;
    for (std::size_t l = 0; l < sequence.size(); ++l) {
      cumulative += sequence[l].second;
      if (cumulative > best_prefix_gain) {
        best_prefix_gain = cumulative;
        best_prefix_len = l + 1;
      }
    }

    if (join_allowed && join_gain > kGainEps && join_gain >= best_prefix_gain) {
      apply_join(a, b, join_gain);
      return true;
    }
    if (best_prefix_len > 0 && best_prefix_gain > kGainEps) {
      std::vector<int> to_flip;
      to_flip.reserve(best_prefix_len);
      for (std::size_t l = 0; l < best_prefix_len; ++l)
        to_flip.push_back(sequence[l].first);
      apply_moves(a, b, to_flip, best_prefix_gain);
      return true;
    }
    return false;
  }

  // A move is vetoed if it would put a constrained pair on one side, orphan
  // part of the source side, or attach the vertex to a side it has no edge
  // into.
  bool move_permitted(int v, int source, int target,
                      const std::unordered_map<int, int>& side,
                      const int side_count[2]) const {
    for (const int p : g_.constraint_partners(v)) {
      const auto it = side.find(p);
      if (it != side.end() && it->second == target) return false;
    }
    if (side_count[target] > 0) {
      bool attached = false;
      for (const auto& [nb, cost] : g_.neighbors(v)) {
        (void)cost;
        const auto it = side.find(nb);
        if (it != side.end() && it->second == target) {
          attached = true;
          break;
        }
      }
      if (!attached) return false;
    }
    if (side_count[source] > 1 && !connected_without(v, source, side)) return false;
    return true;
  }

  // True if the source side stays connected once v leaves it.
  bool connected_without(int v, int source,
                         const std::unordered_map<int, int>& side) const {
    int start = -1, expected = 0;
    for (const auto& [u, s] : side) {
      if (s != source || u == v) continue;
      ++expected;
      if (start < 0 || u < start) start = u;
    }
    if (expected <= 1) return true;
    std::unordered_map<int, char> seen;
    seen.reserve(static_cast<std::size_t>(expected) * 2);
    std::deque<int> queue{start};
    seen[start] = 1;
    int reached = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      ++reached;
      for (const auto& [nb, cost] : g_.neighbors(u)) {
        (void)cost;
        if (nb == v || seen.count(nb)) continue;
        const auto it = side.find(nb);
        if (it == side.end() || it->second != source) continue;
        seen[nb] = 1;
        queue.push_back(nb);
      }
    }
    return reached == expected;
  }

  void apply_join(int a, int b, double gain) {
    auto& ma = members_[static_cast<std::size_t>(a)];
    auto& mb = members_[static_cast<std::size_t>(b)];
    for (const int v : mb) comp_of_[static_cast<std::size_t>(v)] = a;
    std::vector<int> merged;
    merged.reserve(ma.size() + mb.size());
    std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
    ma = std::move(merged);
    mb.clear();
    commit(gain);
  }

  void apply_moves(int a, int b, const std::vector<int>& to_flip, double gain) {
    for (const int v : to_flip) {
      const int from = comp_of_[static_cast<std::size_t>(v)];
      const int to = from == a ? b : a;
      auto& mf = members_[static_cast<std::size_t>(from)];
      mf.erase(std::lower_bound(mf.begin(), mf.end(), v));
      auto& mt = members_[static_cast<std::size_t>(to)];
      mt.insert(std::lower_bound(mt.begin(), mt.end(), v), v);
      comp_of_[static_cast<std::size_t>(v)] = to;
    }
    commit(gain);
  }

  // Splits off vertices whose removal pays (negative internal attachment),
  // one fresh singleton per extraction. True if any extraction applied.
  bool extract_from(int a) {
    bool any = false;
    const std::vector<int> snapshot = members_[static_cast<std::size_t>(a)];
    for (const int v : snapshot) {
      auto& ma = members_[static_cast<std::size_t>(a)];
      if (ma.size() < 2 || comp_of_[static_cast<std::size_t>(v)] != a) continue;
      double internal = 0.0;
      for (const auto& [nb, cost] : g_.neighbors(v))
        if (comp_of_[static_cast<std::size_t>(nb)] == a) internal += cost;
      const double gain = -internal;
      if (gain <= kGainEps) continue;
      if (!remainder_connected(a, v)) continue;
      ma.erase(std::lower_bound(ma.begin(), ma.end(), v));
      const int fresh = static_cast<int>(members_.size());
      members_.push_back({v});
      comp_of_[static_cast<std::size_t>(v)] = fresh;
      commit(gain);
      any = true;
    }
    return any;
  }

  bool remainder_connected(int a, int v) const {
    const auto& ma = members_[static_cast<std::size_t>(a)];
    if (ma.size() <= 2) return true;
    int start = -1;
    for (const int u : ma)
      if (u != v) {
        start = u;
        break;
      }
    std::unordered_map<int, char> seen;
    std::deque<int> queue{start};
    seen[start] = 1;
    std::size_t reached = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      ++reached;
      for (const auto& [nb, cost] : g_.neighbors(u)) {
        (void)cost;
        if (nb == v || seen.count(nb)) continue;
        if (comp_of_[static_cast<std::size_t>(nb)] != a) continue;
        seen[nb] = 1;
        queue.push_back(nb);
      }
    }
    return reached == ma.size() - 1;
  }

  // Books an applied transformation and cross-checks the incremental gain
  // against a full objective recomputation; the objective must never rise.
  void commit(double gain) {
    ++transformations_;
    const double expected = obj_ - gain;
    const double actual = objective(g_, current());
    const double tol = 1e-6 * std::max(1.0, std::abs(expected));
    if (std::abs(actual - expected) > tol || actual > obj_ + kGainEps)
      throw std::logic_error("gain accounting diverged from the objective");
    obj_ = actual;
  }

  const Graph& g_;
  std::vector<int> comp_of_;
  std::vector<std::vector<int>> members_;
  double obj_ = 0.0;
  int passes_ = 0;
  std::int64_t transformations_ = 0;
};

}  // namespace

std::pair<Decomposition, SolveReport> cklj_solve(
    const Graph& g, const std::optional<Decomposition>& init) {
  CkljSolver solver(g, init);
  return solver.run();
}

Graph read_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  long n = 0, m = 0, k = 0;
  long edges_seen = 0, constraints_seen = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    const auto s = detail::trim(line);
    if (s.empty() || s.front() == '#') continue;
    std::istringstream row{std::string(s)};
    if (!have_header) {
      std::string p, mc;
      if (!(row >> p >> mc >> n >> m >> k) || p != "p" || mc != "mc" || n < 0 || m < 0 || k < 0)
        throw MalformedLineError(lineno, "expected header 'p mc <n> <m> <k>'");
      std::string rest;
      if (row >> rest) throw MalformedLineError(lineno, "trailing tokens after header");
      g = Graph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    std::string kind;
    row >> kind;
    try {
      if (kind == "e") {
        long u = 0, v = 0;
        double cost = 0.0;
        std::string rest;
        if (!(row >> u >> v >> cost) || (row >> rest))
          throw MalformedLineError(lineno, "expected 'e <u> <v> <cost>'");
        g.add_edge(static_cast<int>(u), static_cast<int>(v), cost);
        ++edges_seen;
      } else if (kind == "c") {
        long u = 0, v = 0;
        std::string rest;
        if (!(row >> u >> v) || (row >> rest))
          throw MalformedLineError(lineno, "expected 'c <u> <v>'");
        g.add_constraint(static_cast<int>(u), static_cast<int>(v));
        ++constraints_seen;
      } else {
        throw MalformedLineError(lineno, "unknown row kind '" + kind + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw MalformedLineError(lineno, e.what());
    }
  }
  if (!have_header) throw MalformedLineError(lineno, "missing 'p mc' header");
  if (edges_seen != m)
    throw MalformedLineError(lineno, "header announced " + std::to_string(m) +
                                         " edges, found " + std::to_string(edges_seen));
  if (constraints_seen != k)
    throw MalformedLineError(lineno, "header announced " + std::to_string(k) +
                                         " constraints, found " + std::to_string(constraints_seen));
  return g;
}

void write_instance(std::ostream& out, const Graph& g) {
  out << "p mc " << g.n_vertices() << ' ' << g.edges().size() << ' '
      << g.constraints().size() << '\n';
  for (const GraphEdge& e : g.edges())
    out << "e " << e.u << ' ' << e.v << ' ' << detail::format_double(e.cost) << '\n';
  for (const auto& [u, v] : g.constraints()) out << "c " << u << ' ' << v << '\n';
}

void write_solution(std::ostream& out, const Decomposition& d, double objective_value) {
  const auto labels = canonical_labels(d.labels);
  for (std::size_t v = 0; v < labels.size(); ++v)
    out << v << ' ' << labels[v] << '\n';
  out << "objective " << detail::format_double(objective_value) << '\n';
}

}  // namespace trackmc
