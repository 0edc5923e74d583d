#pragma once

#include <functional>
#include <string>
#include <vector>

#include "torcov/partitions.hpp"
#include "torcov/series.hpp"

namespace torcov {

// all covers / covers without unramified components / connected covers
enum class Variant { all, prime, connected };
Variant parse_variant(const std::string& s);
std::string to_string(Variant v);

constexpr double kDefaultOracleBudget = 1e8;

// sum_{lambda |- d} prod_i f_{mu_i}(lambda)
QSeries n_series(const Profile& profile, int order);
// n_series / partition_gf
QSeries n_prime_series(const Profile& profile, int order);
QSeries n_connected_series(const Profile& profile, int order);
QSeries n_variant_series(const Profile& profile, int order, Variant v);

// Counts Hurwitz tuples (alpha, beta, gamma_1..gamma_n) in S_d with
// beta^-1 alpha^-1 beta alpha = gamma_n ... gamma_1 and gamma_i of type
// mu_i, divided by d!.  Throws BudgetError if the loop count exceeds budget.
Rational brute_force_n(const Profile& profile, int d, Variant v,
                       double budget = kDefaultOracleBudget);
// Same enumeration, each tuple weighted by sum_j alpha_j^p over all cycles
// of alpha (fixed points included).
Rational brute_force_sv(const Profile& profile, int d, int p, Variant v,
                        double budget = kDefaultOracleBudget);

// Ramification points are the parts of the profile; the number of ways to
// label equal parts at a common branch point is prod r! over multiplicities.
Integer ramification_label_factor(const Profile& profile);

// Calls f with the blocks (index lists) of every set partition of {0..n-1}.
void for_each_set_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& f);

// Sub-profile carried by a set of ramification points; points are numbered
// by walking the profile branch point by branch point.
Profile sub_profile(const Profile& profile, const std::vector<int>& points);
int ramification_point_count(const Profile& profile);

}  // namespace torcov
