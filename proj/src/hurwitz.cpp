#include "torcov/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "torcov/errors.hpp"

namespace torcov {

Variant parse_variant(const std::string& s) {
  if (s == "all") return Variant::all;
  if (s == "prime" || s == "no-unramified") return Variant::prime;
  if (s == "connected") return Variant::connected;
  throw ParseError("unknown variant '" + s + "' (all|prime|connected)");
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::all: return "all";
    case Variant::prime: return "prime";
    case Variant::connected: return "connected";
  }
  return "?";
}

QSeries n_series(const Profile& profile, int order) {
  return partition_sum(
      [&](const Partition& lam) {
        Rational v = 1;
        for (const auto& mu : profile) {
          v *= f_mu(mu, lam);
          if (v == 0) break;
        }
        return v;
      },
      order);
}

QSeries n_prime_series(const Profile& profile, int order) {
  return series_div(n_series(profile, order), partition_gf(order));
}

Integer ramification_label_factor(const Profile& profile) {
  Integer f = 1;
  for (const auto& mu : profile) {
    std::map<int, int> mult;
    for (int x : mu) ++mult[x];
    for (auto [k, m] : mult) f *= factorial(static_cast<unsigned>(m));
  }
  return f;
}

int ramification_point_count(const Profile& profile) {
  int n = 0;
  for (const auto& mu : profile) n += plength(mu);
  return n;
}

Profile sub_profile(const Profile& profile, const std::vector<int>& points) {
  std::vector<int> branch, part;
  for (size_t i = 0; i < profile.size(); ++i)
    for (int x : profile[i]) {
      branch.push_back(static_cast<int>(i));
      part.push_back(x);
    }
  std::vector<std::vector<int>> byb(profile.size());
  for (int p : points) byb[branch[p]].push_back(part[p]);
  Profile out;
  for (auto& v : byb)
    if (!v.empty()) out.push_back(sorted_partition(v));
  return canonical(out);
}

void for_each_set_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      f(blocks);
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

namespace {

// Connected series from the prime series of all sub-profiles.  Working with
// labeled ramification points makes the decomposition into components a sum
// over set partitions of the points.
class ConnectedInverter {
 public:
  explicit ConnectedInverter(int order) : order_(order) {}

  QSeries labeled_connected(const Profile& pr) {
    Profile key = canonical(pr);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const int n = ramification_point_count(key);
    QSeries s = Rational(ramification_label_factor(key)) * n_prime_series(key, order_);
    if (n == 0) {
      s = QSeries(order_);  // no connected cover with empty profile
    } else {
      for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        if (blocks.size() < 2) return;
        QSeries prod = QSeries::constant(1, order_);
        for (const auto& b : blocks) {
          prod = prod * labeled_connected(sub_profile(key, b));
          if (prod.is_zero()) return;
        }
        s -= prod;
      });
    }
    memo_.emplace(key, s);
    return s;
  }

 private:
  int order_;
  std::map<Profile, QSeries> memo_;
};

}  // namespace

QSeries n_connected_series(const Profile& profile, int order) {
  if (profile.empty()) return QSeries(order);
  ConnectedInverter inv(order);
  QSeries s = inv.labeled_connected(profile);
  s *= Rational(1) / Rational(ramification_label_factor(profile));
  return s;
}

QSeries n_variant_series(const Profile& profile, int order, Variant v) {
  switch (v) {
    case Variant::all: return n_series(profile, order);
    case Variant::prime: return n_prime_series(profile, order);
    case Variant::connected: return n_connected_series(profile, order);
  }
  return QSeries(order);
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& s, const Perm& t) {
  Perm r(s.size());
  for (size_t x = 0; x < s.size(); ++x) r[x] = s[t[x]];
  return r;
}

Perm inverse(const Perm& s) {
  Perm r(s.size());
  for (size_t x = 0; x < s.size(); ++x) r[s[x]] = static_cast<int>(x);
  return r;
}

Partition cycle_type(const Perm& s) {
  std::vector<char> seen(s.size(), 0);
  std::vector<int> parts;
  for (size_t x = 0; x < s.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (size_t y = x; !seen[y]; y = s[y]) {
      seen[y] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

std::vector<Perm> all_perms(int d) {
  std::vector<Perm> out;
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool variant_ok(const std::vector<const Perm*>& gens, size_t first_gamma, int d, Variant v) {
  if (v == Variant::all) return true;
  if (d == 0) return v == Variant::prime;
  UnionFind uf(d);
  for (const Perm* g : gens)
    for (int x = 0; x < d; ++x) uf.unite(x, (*g)[x]);
  if (v == Variant::connected) {
    for (int x = 1; x < d; ++x)
      if (uf.find(x) != uf.find(0)) return false;
    return true;
  }
  std::vector<char> moved(d, 0);
  for (size_t i = first_gamma; i < gens.size(); ++i)
    for (int x = 0; x < d; ++x)
      if ((*gens[i])[x] != x) moved[uf.find(x)] = 1;
  for (int x = 0; x < d; ++x)
    if (!moved[uf.find(x)]) return false;
  return true;
}

// Calls visit(alpha) for every admissible tuple.
template <class Visit>
void enumerate_tuples(const Profile& profile, int d, Variant v, double budget, Visit visit) {
  if (d < 0) throw PreconditionError("degree must be >= 0");
  for (const auto& mu : profile)
    if (psize(mu) > d) return;
  const auto perms = all_perms(d);
  std::vector<Perm> inv;
  inv.reserve(perms.size());
  for (const auto& p : perms) inv.push_back(inverse(p));
  const size_t n = profile.size();
  std::vector<Partition> types;
  for (const auto& mu : profile) types.push_back(complete_to(mu, d));
  std::vector<std::vector<int>> classes(n);
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t k = 0; k < perms.size(); ++k)
      if (cycle_type(perms[k]) == types[i]) classes[i].push_back(static_cast<int>(k));
  double loops = static_cast<double>(perms.size()) * static_cast<double>(perms.size());
  for (size_t i = 0; i + 1 < n; ++i) loops *= static_cast<double>(classes[i].size());
  if (loops > budget)
    throw BudgetError("oracle budget exceeded: " + std::to_string(static_cast<long double>(loops)) +
                      " iterations > " + std::to_string(static_cast<long double>(budget)));

  const Partition identity_type = complete_to({}, d);
  std::vector<int> idx(n > 0 ? n - 1 : 0);
  for (size_t a = 0; a < perms.size(); ++a) {
    for (size_t b = 0; b < perms.size(); ++b) {
      const Perm comm = compose(inv[b], compose(inv[a], compose(perms[b], perms[a])));
      // walk gamma_1..gamma_{n-1} over their classes
      std::function<void(size_t, const Perm&)> rec = [&](size_t i, const Perm& prod) {
        if (n == 0 || i + 1 == n) {
          Perm last = compose(comm, inverse(prod));
          if (cycle_type(last) != (n == 0 ? identity_type : types[n - 1])) return;
          std::vector<const Perm*> gens{&perms[a], &perms[b]};
          for (size_t j = 0; j + 1 < n; ++j) gens.push_back(&perms[idx[j]]);
          if (n > 0) gens.push_back(&last);
          if (variant_ok(gens, 2, d, v)) visit(perms[a]);
          return;
        }
        for (int k : classes[i]) {
          idx[i] = k;
          rec(i + 1, compose(perms[k], prod));
        }
      };
      Perm id(d);
      std::iota(id.begin(), id.end(), 0);
      rec(0, id);
    }
  }
}

}  // namespace

Rational brute_force_n(const Profile& profile, int d, Variant v, double budget) {
  Integer count = 0;
  enumerate_tuples(profile, d, v, budget, [&](const Perm&) { ++count; });
  return Rational(count) / Rational(factorial(static_cast<unsigned>(d)));
}

Rational brute_force_sv(const Profile& profile, int d, int p, Variant v, double budget) {
  Rational total = 0;
  enumerate_tuples(profile, d, v, budget, [&](const Perm& alpha) { total += sv_weight(cycle_type(alpha), p); });
  return total / Rational(factorial(static_cast<unsigned>(d)));
}

}  // namespace torcov
