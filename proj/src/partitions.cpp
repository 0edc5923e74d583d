#include "torcov/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "torcov/errors.hpp"
#include "torcov/qmpoly.hpp"

namespace torcov {

int psize(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition sorted_partition(std::vector<int> parts) {
  for (int x : parts)
    if (x <= 0) throw PreconditionError("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

Partition complete_to(const Partition& p, int d) {
  Partition out = p;
  for (int s = psize(p); s < d; ++s) out.push_back(1);
  return out;
}

Partition strip_ones(const Partition& p) {
  Partition out;
  for (int x : p)
    if (x > 1) out.push_back(x);
  return out;
}

const std::vector<Partition>& partitions_of(int d) {
  if (d < 0) throw PreconditionError("partitions_of: negative size");
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  // parts bounded by `maxpart`, reverse lexicographic
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(d, d);
  return cache.emplace(d, std::move(out)).first->second;
}

Integer centralizer_order(const Partition& sigma) {
  std::map<int, int> mult;
  for (int x : sigma) ++mult[x];
  Integer z = 1;
  for (auto [k, m] : mult) {
    Integer km;
    mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    z *= km * factorial(static_cast<unsigned>(m));
  }
  return z;
}

Integer class_size(const Partition& sigma, int d) {
  if (psize(sigma) > d) return 0;
  return factorial(static_cast<unsigned>(d)) / centralizer_order(complete_to(sigma, d));
}

Integer dim_irrep(const Partition& lambda) {
  const int n = psize(lambda);
  Integer prod = 1;
  for (size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int leg = 0;
      for (size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++leg;
      prod *= lambda[i] - j + leg;
    }
  }
  return factorial(static_cast<unsigned>(n)) / prod;
}

namespace {

struct CharCache {
  std::shared_mutex mu;
  std::map<std::pair<Partition, Partition>, Integer> values;
};

CharCache& char_cache() {
  static CharCache c;
  return c;
}

// sigma: parts > 1 in decreasing order
Integer mn_rec(const Partition& lambda, const Partition& sigma) {
  if (sigma.empty()) return dim_irrep(lambda);
  auto key = std::make_pair(lambda, sigma);
  auto& cache = char_cache();
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.values.find(key);
    if (it != cache.values.end()) return it->second;
  }
  const int k = sigma.front();
  Partition rest(sigma.begin() + 1, sigma.end());
  const int r = plength(lambda);
  std::vector<int> beta(r);
  for (int i = 0; i < r; ++i) beta[i] = lambda[i] + (r - 1 - i);
  Integer total = 0;
  for (int i = 0; i < r; ++i) {
    const int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    Partition mu;
    for (int j = 0; j < r; ++j) {
      int part = nb[j] - (r - 1 - j);
      if (part > 0) mu.push_back(part);
    }
    Integer v = mn_rec(mu, rest);
    if (between % 2) total -= v;
    else total += v;
  }
  std::unique_lock lock(cache.mu);
  cache.values.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer char_value(const Partition& lambda, const Partition& sigma) {
  const int d = psize(lambda);
  if (psize(sigma) > d) throw PreconditionError("char_value: class larger than the partition");
  Partition s = strip_ones(sorted_partition(sigma));
  return mn_rec(lambda, s);
}

Rational f_mu(const Partition& mu, const Partition& lambda) {
  const int d = psize(lambda);
  const int m = psize(mu);
  if (m > d) return 0;
  Integer falling = 1;
  for (int i = 0; i < m; ++i) falling *= d - i;
  Rational v(falling * char_value(lambda, mu));
  v /= Rational(centralizer_order(sorted_partition(mu)) * dim_irrep(lambda));
  return v;
}

Rational P_ell(int l, const Partition& lambda) {
  if (l < 1) throw PreconditionError("P_ell: l must be >= 1");
  Rational s = 0;
  for (int i = 1; i <= plength(lambda); ++i) {
    Rational a(2 * (lambda[i - 1] - i) + 1, 2);
    Rational b(-2 * i + 1, 2);
    s += rpow(a, l) - rpow(b, l);
  }
  return s;
}

Rational p_ell(int l, const Partition& lambda) {
  Rational zeta = -bernoulli(l + 1) / (l + 1);
  return P_ell(l, lambda) + (1 - rpow(Rational(1, 2), l)) * zeta;
}

Rational t_p(const Partition& lambda, int p) {
  Rational s = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int leg = 0;
      for (size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++leg;
      s += rpow(Rational(lambda[i] - j + leg), p - 1);
    }
  }
  return s;
}

Rational sv_weight(const Partition& sigma, int p) {
  Rational s = 0;
  for (int x : sigma) s += rpow(Rational(x), p);
  return s;
}

QSeries partition_sum(const PartitionFunction& F, int order) {
  QSeries s(order);
  for (int d = 0; d <= order; ++d) {
    Rational acc = 0;
    for (const auto& lam : partitions_of(d)) acc += F(lam);
    s[d] = acc;
  }
  return s;
}

QSeries q_bracket(const PartitionFunction& F, int order) {
  return series_div(partition_sum(F, order), partition_gf(order));
}

Profile parse_profile(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  Profile out;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("malformed profile '" + text + "': " + why);
  };
  while (i < s.size()) {
    if (s[i] != '(') fail("expected '('");
    size_t close = s.find(')', i);
    if (close == std::string::npos) fail("missing ')'");
    std::string body = s.substr(i + 1, close - i - 1);
    std::vector<int> parts;
    size_t j = 0;
    while (j <= body.size()) {
      size_t comma = body.find(',', j);
      std::string tok = body.substr(j, comma == std::string::npos ? std::string::npos : comma - j);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) fail("bad part '" + tok + "'");
      if (tok.size() > 6) fail("part too large");
      int v = std::stoi(tok);
      if (v < 1) fail("parts must be positive");
      parts.push_back(v);
      if (comma == std::string::npos) break;
      j = comma + 1;
    }
    Partition p = strip_ones(sorted_partition(parts));
    if (p.empty()) fail("a branch point must have a part >= 2");
    out.push_back(p);
    i = close + 1;
    if (i < s.size()) {
      if (s[i] != ',') fail("expected ',' between partitions");
      ++i;
      if (i == s.size()) fail("trailing ','");
    }
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::string to_string(const Profile& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += to_string(p[i]);
  }
  return out;
}

Profile canonical(const Profile& p) {
  Profile c = p;
  std::sort(c.begin(), c.end());
  return c;
}

int profile_weight(const Profile& p) {
  int w = 0;
  for (const auto& mu : p) w += pweight(mu);
  return w;
}

}  // namespace torcov
