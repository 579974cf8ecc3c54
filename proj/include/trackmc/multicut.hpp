#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <unordered_set>
#include <utility>
#include <vector>

#include "trackmc/errors.hpp"

namespace trackmc {

struct GraphEdge {
  int u = 0;
  int v = 0;
  double cost = 0.0;  // positive attracts a join, negative a cut
};

// Undirected weighted graph with optional cannot-link constraints. Vertices
// are 0..n-1. Parallel edges and self-loops are rejected; a constraint may or
// may not coincide with an edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n_vertices);

  int n_vertices() const { return n_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<std::pair<int, int>>& constraints() const { return constraints_; }

  void add_edge(int u, int v, double cost);
  void add_constraint(int u, int v);

  bool has_edge(int u, int v) const;
  bool constrained(int u, int v) const;

  // Adjacency as (neighbor, cost), in insertion order.
  const std::vector<std::pair<int, double>>& neighbors(int v) const;
  // Vertices that must never share a component with v.
  const std::vector<int>& constraint_partners(int v) const;

 private:
  static std::uint64_t key(int u, int v);
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<std::pair<int, int>> constraints_;
  std::unordered_set<std::uint64_t> edge_keys_;
  std::unordered_set<std::uint64_t> constraint_keys_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  std::vector<std::vector<int>> partners_;
};

// Vertex labeling; vertices with equal labels form one component.
struct Decomposition {
  std::vector<int> labels;
};

Decomposition all_singletons(int n_vertices);

// Renumbers labels so components are numbered 0,1,... by their smallest
// member, ascending. Two labelings describe the same decomposition iff their
// canonical forms are equal.
std::vector<int> canonical_labels(const std::vector<int>& labels);

// Total cost of edges whose endpoints are separated.
double objective(const Graph& g, const Decomposition& d);

// True iff every component induces a connected subgraph of g and no
// cannot-link pair shares a component.
bool feasible(const Graph& g, const Decomposition& d);

// Per-edge cut indicator (1 = endpoints separated), aligned with g.edges().
std::vector<int> edge_labels(const Graph& g, const Decomposition& d);

// Checks that no simple cycle of length <= max_cycle_len crosses the cut
// exactly once. Edge labels derived from a decomposition always pass; the
// raw-label overload exists to cross-check that derivation.
bool check_cycle_inequalities(const Graph& g, const std::vector<int>& y,
                              int max_cycle_len);
bool check_cycle_inequalities(const Graph& g, const Decomposition& d,
                              int max_cycle_len);

// Exact minimizer by exhaustive partition enumeration; throws TooLargeError
// above `cap` vertices. Ties resolve to the decomposition whose canonical
// label vector is lexicographically smallest.
std::pair<Decomposition, double> brute_force_optimum(const Graph& g, int cap = 10);

struct SolveReport {
  double objective = 0.0;
  int n_components = 0;
  int n_outer_passes = 0;
  std::int64_t transformations_applied = 0;
};

// Greedy local search over feasible decompositions. Starting from
// all-singletons (or `init`), repeatedly sweeps the components:
//   - for each component and each neighboring component, in descending order
//     of total connecting cost (ties by ascending smallest member), either
//     joins the two or applies the best sequence of single-vertex moves
//     between them, whichever improves the objective most;
//   - then tries to split off individual vertices into fresh singletons.
// Constraint and connectivity violations veto a move. Stops when a full pass
// changes nothing. The objective never increases.
std::pair<Decomposition, SolveReport> cklj_solve(
    const Graph& g, const std::optional<Decomposition>& init = std::nullopt);

// Text instance format: "p mc <n_vertices> <n_edges> <n_constraints>" header,
// then "e <u> <v> <cost>" and "c <u> <v>" lines, 0-based vertices, '#'
// comments allowed.
Graph read_instance(std::istream& in);
void write_instance(std::ostream& out, const Graph& g);

// "<vertex> <component>" per line in vertex order, then "objective <value>".
void write_solution(std::ostream& out, const Decomposition& d, double objective_value);

}  // namespace trackmc
