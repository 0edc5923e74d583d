#pragma once

#include <functional>
#include <string>
#include <vector>

#include "torcov/rational.hpp"
#include "torcov/series.hpp"

namespace torcov {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

int psize(const Partition& p);
inline int plength(const Partition& p) { return static_cast<int>(p.size()); }
// |p| + l(p)
inline int pweight(const Partition& p) { return psize(p) + plength(p); }
Partition sorted_partition(std::vector<int> parts);
// Pads with 1-parts up to size d (d >= |p|).
Partition complete_to(const Partition& p, int d);
// Drops parts equal to 1.
Partition strip_ones(const Partition& p);

// All partitions of d in reverse lexicographic order; cached.
const std::vector<Partition>& partitions_of(int d);

// Size of the class of (sigma completed to d) in S_d; 0 if |sigma| > d.
Integer class_size(const Partition& sigma, int d);
// Order of the centralizer of a permutation of cycle type sigma in S_|sigma|.
Integer centralizer_order(const Partition& sigma);
// chi^lambda at the class of sigma completed with fixed points.
Integer char_value(const Partition& lambda, const Partition& sigma);
Integer dim_irrep(const Partition& lambda);

// Central character normalized as a shifted symmetric function:
// f_mu(lambda) = |lambda|_(|mu|) chi^lambda(mu u 1^...) / (z_mu dim lambda).
Rational f_mu(const Partition& mu, const Partition& lambda);
// sum_i [(lambda_i - i + 1/2)^l - (-i + 1/2)^l]
Rational P_ell(int l, const Partition& lambda);
// P_ell plus the regularizing constant (1 - 2^-l) zeta(-l).
Rational p_ell(int l, const Partition& lambda);
// sum over cells of hook^(p-1)
Rational t_p(const Partition& lambda, int p);
// sum_j sigma_j^p over the parts as given
Rational sv_weight(const Partition& sigma, int p);

using PartitionFunction = std::function<Rational(const Partition&)>;
// (sum_lambda F(lambda) q^|lambda|) / (sum_lambda q^|lambda|)
QSeries q_bracket(const PartitionFunction& F, int order);
// sum_lambda F(lambda) q^|lambda|
QSeries partition_sum(const PartitionFunction& F, int order);

// A tuple of partitions, one per branch point, with 1-parts stripped.
using Profile = std::vector<Partition>;

// "(3)", "(2),(2)", "(2,2),(3)", "" for the empty profile.
Profile parse_profile(const std::string& text);
std::string to_string(const Partition& p);
std::string to_string(const Profile& p);
// Sorted copy; used as a memo key.
Profile canonical(const Profile& p);
int profile_weight(const Profile& p);

}  // namespace torcov
