#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "torcov/partitions.hpp"
#include "torcov/series.hpp"
#include "torcov/triple.hpp"

namespace torcov {

// Multigraph on vertices 0..n-1; edges are unordered pairs stored with
// first <= second (first == second is a loop), kept sorted.
struct GlobalGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static GlobalGraph make(int n, std::vector<std::pair<int, int>> edges);
  // "1-2,1-2,2-3" with 1-based labels; n defaults to the largest label.
  static GlobalGraph parse(const std::string& text, int n = 0);
  std::string to_string() const;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_loop(int e) const { return edges[e].first == edges[e].second; }
  int valence(int v) const;
  bool connected() const;
  bool operator==(const GlobalGraph& o) const { return n == o.n && edges == o.edges; }
};

// Direction for every non-loop edge; loops have none.
struct Orientation {
  GlobalGraph graph;
  std::vector<char> flipped;  // edge e runs second -> first when set

  int source(int e) const;
  int target(int e) const;
  // h >= 0 allowed when the edge goes up in label, h >= 1 otherwise (and on loops)
  int min_height(int e) const;
};

std::vector<Orientation> orientations(const GlobalGraph& g);
Integer automorphism_order(const GlobalGraph& g);

// All labeled multigraphs on n vertices without isolated vertices and with
// valence (loops count twice) at most bounds[v].
std::vector<GlobalGraph> enumerate_graphs(const std::vector<int>& bounds);
// Bounds |mu|+l(mu) per branch point, plus `extra`.
std::vector<GlobalGraph> enumerate_graphs(const Profile& profile, int extra = 0);
// Bounds ell_v + 1, plus `extra`.
std::vector<GlobalGraph> enumerate_graphs_completed(const std::vector<int>& ells, int extra = 0);

// Sum over positive widths w balanced at every vertex of
//   coef(w) * prod_e sum_{h >= h_min(e)} q^{h w_e}
// where the edge `marked` (if >= 0) carries an extra factor h.
using FlowCoefficient = std::function<Rational(const std::vector<int>& widths)>;
QSeries flow_sum(const Orientation& g, int order, int marked, const FlowCoefficient& coef);

using EdgeExponents = std::vector<int>;

// sum prod_e w_e^(m_e+1) q^(h_e w_e) over balanced decorations of G.
QSeries graph_sum_S(const Orientation& g, const EdgeExponents& m, int order);
// graph_sum_S summed over all orientations.
QSeries graph_sum_S_total(const GlobalGraph& g, const EdgeExponents& m, int order);

// Widths entering and leaving v (loops count on both sides).
void vertex_widths(const Orientation& g, const std::vector<int>& w, int v, WidthTuple& in, WidthTuple& out);

// sum prod_e w_e q^(h_e w_e) prod_v A'(w_v-, w_v+, F_v) over decorations of G.
QSeries graph_series_vertex(const Orientation& g, const std::vector<VertexFunction>& F, int order);
QSeries graph_series_nprime(const Orientation& g, const Profile& profile, int order);
QSeries graph_bracket_completed(const Orientation& g, const std::vector<int>& ells, int order);

struct GraphContribution {
  GlobalGraph graph;
  Integer aut;
  QSeries series;  // summed over orientations, not divided by aut
};

std::vector<GraphContribution> per_graph_nprime(const Profile& profile, int order, int extra = 0);
// sum_Gamma |Aut Gamma|^-1 sum_G graph_series_nprime(G)
QSeries assemble_total(const Profile& profile, int order, int extra = 0);
// Same assembly with completed-cycle vertex values.
QSeries assemble_bracket_completed(const std::vector<int>& ells, int order, int extra = 0);

}  // namespace torcov
