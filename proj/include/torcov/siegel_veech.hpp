#pragma once

#include <vector>

#include "torcov/graph.hpp"
#include "torcov/hurwitz.hpp"
#include "torcov/partitions.hpp"
#include "torcov/series.hpp"

namespace torcov {

// sum_lambda T_p(lambda) prod_i f_{mu_i}(lambda) q^|lambda|
QSeries c_series(const Profile& profile, int p, int order);
// <T_p prod f> - <T_p><prod f>
QSeries c_prime_series(const Profile& profile, int p, int order);
// Connected part, using additivity of the weight over components.
QSeries c_connected_series(const Profile& profile, int p, int order);
QSeries c_variant_series(const Profile& profile, int p, int order, Variant v);

// sum over decorations of (h_i0 / w_i0) prod_e w_e^(m_e+1) q^(h_e w_e);
// i0 < 0 sums over every edge.
QSeries sv_graph_sum(const Orientation& g, const EdgeExponents& m, int order, int i0 = -1);
QSeries sv_graph_sum_total(const GlobalGraph& g, const EdgeExponents& m, int order, int i0 = -1);

// sum over decorations of (sum_e h_e w_e^p) prod_e w_e q^(h_e w_e) prod_v A'(w_v-, w_v+, f_mu_v).
QSeries sv_graph_series(const Orientation& g, const Profile& profile, int order, int p);
// Summed over orientations, not divided by |Aut|.
QSeries sv_per_graph(const GlobalGraph& g, const Profile& profile, int order, int p);
std::vector<GraphContribution> sv_per_graph_all(const Profile& profile, int p, int order, int extra = 0);
// sum_Gamma |Aut Gamma|^-1 sv_per_graph(Gamma)
QSeries sv_assemble_total(const Profile& profile, int p, int order, int extra = 0);

// [zeta^0] of prod_e P^(m_e) with edge i0's factor replaced by L (m_i0 = 0)
// or Dq P^(m_i0 - 2).  Loops are rejected.
QSeries sv_constant_term(const GlobalGraph& g, const EdgeExponents& m, int i0, int order);

}  // namespace torcov
