#include "torcov/siegel_veech.hpp"

#include <map>

#include "torcov/elliptic.hpp"
#include "torcov/errors.hpp"
#include "torcov/parallel.hpp"

namespace torcov {

namespace {

Rational prod_f(const Profile& profile, const Partition& lambda) {
  Rational r = 1;
  for (const auto& mu : profile) {
    r *= f_mu(mu, lambda);
    if (r == 0) break;
  }
  return r;
}

void check_m(const GlobalGraph& g, const EdgeExponents& m) {
  if (static_cast<int>(m.size()) != g.edge_count()) throw PreconditionError("one exponent per edge");
  for (int x : m)
    if (x < 0 || x % 2) throw PreconditionError("edge exponents must be even and >= 0");
}

}  // namespace

QSeries c_series(const Profile& profile, int p, int order) {
  return partition_sum([&](const Partition& l) -> Rational { return t_p(l, p) * prod_f(profile, l); }, order);
}

QSeries c_prime_series(const Profile& profile, int p, int order) {
  QSeries both = q_bracket([&](const Partition& l) -> Rational { return t_p(l, p) * prod_f(profile, l); }, order);
  QSeries tp = q_bracket([&](const Partition& l) -> Rational { return t_p(l, p); }, order);
  return both - tp * n_prime_series(profile, order);
}

namespace {

// Works with labeled ramification points (series times prod r!):
//   c'(R) = sum_{set partitions} sum_{marked block A0} c°(A0) prod_{A != A0} N°(A).
class SvInverter {
 public:
  SvInverter(int p, int order) : p_(p), order_(order) {}

  QSeries labeled_connected(const Profile& pr) {
    Profile key = canonical(pr);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const int n = ramification_point_count(key);
    QSeries s(order_);
    if (n > 0) {
      s = Rational(ramification_label_factor(key)) * c_prime_series(key, p_, order_);
      for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        if (blocks.size() < 2) return;
        std::vector<Profile> subs;
        for (const auto& b : blocks) subs.push_back(sub_profile(key, b));
        for (size_t a0 = 0; a0 < subs.size(); ++a0) {
          QSeries prod = labeled_connected(subs[a0]);
          for (size_t a = 0; a < subs.size() && !prod.is_zero(); ++a)
            if (a != a0) prod = prod * labeled_n(subs[a]);
          s -= prod;
        }
      });
    }
    memo_.emplace(key, s);
    return s;
  }

 private:
  QSeries labeled_n(const Profile& pr) {
    Profile key = canonical(pr);
    auto it = nmemo_.find(key);
    if (it != nmemo_.end()) return it->second;
    QSeries s = Rational(ramification_label_factor(key)) * n_connected_series(key, order_);
    nmemo_.emplace(key, s);
    return s;
  }

  int p_, order_;
  std::map<Profile, QSeries> memo_, nmemo_;
};

}  // namespace

QSeries c_connected_series(const Profile& profile, int p, int order) {
  if (profile.empty()) return QSeries(order);
  SvInverter inv(p, order);
  QSeries s = inv.labeled_connected(profile);
  s *= Rational(1) / Rational(ramification_label_factor(profile));
  return s;
}

QSeries c_variant_series(const Profile& profile, int p, int order, Variant v) {
  switch (v) {
    case Variant::all: return c_series(profile, p, order);
    case Variant::prime: return c_prime_series(profile, p, order);
    case Variant::connected: return c_connected_series(profile, p, order);
  }
  return QSeries(order);
}

QSeries sv_graph_sum(const Orientation& g, const EdgeExponents& m, int order, int i0) {
  check_m(g.graph, m);
  const int E = g.graph.edge_count();
  if (i0 >= E) throw PreconditionError("marked edge out of range");
  QSeries s(order);
  for (int e = 0; e < E; ++e) {
    if (i0 >= 0 && e != i0) continue;
    s += flow_sum(g, order, e, [&](const std::vector<int>& w) -> Rational {
      Integer p = 1;
      for (int f = 0; f < E; ++f) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(w[f]), static_cast<unsigned long>(m[f] + 1));
        p *= t;
      }
      return Rational(p) / Rational(w[e]);
    });
  }
  return s;
}

QSeries sv_graph_sum_total(const GlobalGraph& g, const EdgeExponents& m, int order, int i0) {
  auto os = orientations(g);
  std::vector<QSeries> parts(os.size());
  parallel_for(os.size(), [&](size_t i) { parts[i] = sv_graph_sum(os[i], m, order, i0); });
  QSeries s(order);
  for (const auto& p : parts) s += p;
  return s;
}

QSeries sv_graph_series(const Orientation& g, const Profile& profile, int order, int p) {
  if (static_cast<int>(profile.size()) != g.graph.n) throw PreconditionError("one partition per vertex");
  const int E = g.graph.edge_count();
  std::vector<VertexFunction> F;
  for (const auto& mu : profile) F.push_back(VertexFunction::f(mu));
  QSeries s(order);
  for (int e = 0; e < E; ++e) {
    s += flow_sum(g, order, e, [&](const std::vector<int>& w) -> Rational {
      Rational c = rpow(Rational(w[e]), p);
      for (int f = 0; f < E; ++f) c *= w[f];
      WidthTuple in, out;
      for (int v = 0; v < g.graph.n && c != 0; ++v) {
        vertex_widths(g, w, v, in, out);
        c *= a_prime(in, out, F[v]);
      }
      return c;
    });
  }
  return s;
}

QSeries sv_per_graph(const GlobalGraph& g, const Profile& profile, int order, int p) {
  auto os = orientations(g);
  std::vector<QSeries> parts(os.size());
  parallel_for(os.size(), [&](size_t i) { parts[i] = sv_graph_series(os[i], profile, order, p); });
  QSeries s(order);
  for (const auto& x : parts) s += x;
  return s;
}

std::vector<GraphContribution> sv_per_graph_all(const Profile& profile, int p, int order, int extra) {
  std::vector<GraphContribution> out;
  for (const auto& g : enumerate_graphs(profile, extra))
    out.push_back({g, automorphism_order(g), sv_per_graph(g, profile, order, p)});
  return out;
}

QSeries sv_assemble_total(const Profile& profile, int p, int order, int extra) {
  QSeries s(order);
  for (const auto& c : sv_per_graph_all(profile, p, order, extra))
    s += (Rational(1) / Rational(c.aut)) * c.series;
  return s;
}

QSeries sv_constant_term(const GlobalGraph& g, const EdgeExponents& m, int i0, int order) {
  check_m(g, m);
  if (i0 < 0 || i0 >= g.edge_count()) throw PreconditionError("marked edge out of range");
  std::vector<ZetaExpansion> fs;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e != i0) fs.push_back(fourier_expansion(EllipticKind::P, order, order, m[e]));
    else if (m[e] == 0) fs.push_back(fourier_expansion(EllipticKind::L, order, order));
    else fs.push_back(fourier_expansion(EllipticKind::DqP, order, order, m[e] - 2));
  }
  return constant_term_edges(g, fs, order);
}

}  // namespace torcov
