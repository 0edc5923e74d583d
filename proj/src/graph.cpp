#include "torcov/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "torcov/errors.hpp"
#include "torcov/parallel.hpp"

namespace torcov {

GlobalGraph GlobalGraph::make(int n, std::vector<std::pair<int, int>> edges) {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n) throw PreconditionError("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  return GlobalGraph{n, std::move(edges)};
}

GlobalGraph GlobalGraph::parse(const std::string& text, int n) {
  std::vector<std::pair<int, int>> edges;
  std::stringstream ss(text);
  std::string tok;
  int maxv = 0;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw ParseError("bad edge '" + tok + "' (expected i-j)");
    int a = 0, b = 0;
    try {
      a = std::stoi(tok.substr(0, dash));
      b = std::stoi(tok.substr(dash + 1));
    } catch (const std::exception&) {
      throw ParseError("bad edge '" + tok + "'");
    }
    if (a < 1 || b < 1) throw ParseError("vertex labels start at 1");
    maxv = std::max({maxv, a, b});
    edges.emplace_back(a - 1, b - 1);
  }
  if (n == 0) n = maxv;
  if (maxv > n) throw ParseError("edge label exceeds vertex count");
  return make(n, std::move(edges));
}

std::string GlobalGraph::to_string() const {
  std::string out;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(edges[i].first + 1) + "-" + std::to_string(edges[i].second + 1);
  }
  return out;
}

int GlobalGraph::valence(int v) const {
  int k = 0;
  for (auto [a, b] : edges) k += (a == v) + (b == v);
  return k;
}

bool GlobalGraph::connected() const {
  if (n == 0) return false;
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (auto [a, b] : edges) comp[find(a)] = find(b);
  for (int v = 1; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

int Orientation::source(int e) const {
  const auto& [a, b] = graph.edges[e];
  return flipped[e] ? b : a;
}

int Orientation::target(int e) const {
  const auto& [a, b] = graph.edges[e];
  return flipped[e] ? a : b;
}

int Orientation::min_height(int e) const {
  if (graph.is_loop(e)) return 1;
  return target(e) > source(e) ? 0 : 1;
}

std::vector<Orientation> orientations(const GlobalGraph& g) {
  std::vector<int> nonloop;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!g.is_loop(e)) nonloop.push_back(e);
  std::vector<Orientation> out;
  const unsigned long count = 1ul << nonloop.size();
  for (unsigned long mask = 0; mask < count; ++mask) {
    Orientation o{g, std::vector<char>(g.edges.size(), 0)};
    for (size_t k = 0; k < nonloop.size(); ++k) o.flipped[nonloop[k]] = (mask >> k) & 1;
    out.push_back(std::move(o));
  }
  return out;
}

Integer automorphism_order(const GlobalGraph& g) {
  std::map<std::pair<int, int>, int> mult;
  for (const auto& e : g.edges) ++mult[e];
  Integer a = 1;
  for (const auto& [e, m] : mult) a *= factorial(static_cast<unsigned>(m));
  return a;
}

std::vector<GlobalGraph> enumerate_graphs(const std::vector<int>& bounds) {
  const int n = static_cast<int>(bounds.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<int> cap = bounds;
  std::vector<std::pair<int, int>> edges;
  std::vector<GlobalGraph> out;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == pairs.size()) {
      for (int v = 0; v < n; ++v)
        if (cap[v] == bounds[v]) return;  // isolated
      out.push_back(GlobalGraph::make(n, edges));
      return;
    }
    auto [i, j] = pairs[k];
    const int cost = i == j ? 2 : 1;
    const int most = i == j ? cap[i] / 2 : std::min(cap[i], cap[j]);
    for (int mlt = 0; mlt <= most; ++mlt) {
      for (int t = 0; t < mlt; ++t) edges.emplace_back(i, j);
      cap[i] -= mlt * (i == j ? cost : 1);
      if (i != j) cap[j] -= mlt;
      rec(k + 1);
      cap[i] += mlt * (i == j ? cost : 1);
      if (i != j) cap[j] += mlt;
      edges.resize(edges.size() - mlt);
    }
  };
  rec(0);
  return out;
}

std::vector<GlobalGraph> enumerate_graphs(const Profile& profile, int extra) {
  std::vector<int> bounds;
  for (const auto& mu : profile) bounds.push_back(pweight(mu) + extra);
  return enumerate_graphs(bounds);
}

std::vector<GlobalGraph> enumerate_graphs_completed(const std::vector<int>& ells, int extra) {
  std::vector<int> bounds;
  for (int l : ells) bounds.push_back(l + 1 + extra);
  return enumerate_graphs(bounds);
}

// ---- flow sums ----

namespace {

bool to_i128(const Integer& z, __int128& out) {
  if (mpz_fits_slong_p(z.get_mpz_t())) {
    out = mpz_get_si(z.get_mpz_t());
    return true;
  }
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > 120) return false;
  unsigned long long words[2] = {0, 0};
  size_t count = 0;
  mpz_export(words, &count, -1, sizeof(unsigned long long), 0, 0, z.get_mpz_t());
  unsigned __int128 mag = (static_cast<unsigned __int128>(words[1]) << 64) | words[0];
  out = static_cast<__int128>(mag);
  if (sgn(z) < 0) out = -out;
  return true;
}

Integer from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  unsigned long long words[2] = {static_cast<unsigned long long>(mag),
                                 static_cast<unsigned long long>(mag >> 64)};
  Integer z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(unsigned long long), 0, 0, words);
  if (neg) z = -z;
  return z;
}

// Sums rational multiples of integer series, bucketed by denominator.
class Accumulator {
 public:
  explicit Accumulator(int order) : order_(order), slow_(order) {}

  void add(const Rational& c, const std::vector<long long>& K) {
    __int128 num;
    if (!to_i128(c.get_num(), num)) {
      add_slow(c, K);
      return;
    }
    auto it = buckets_.find(c.get_den());
    if (it == buckets_.end()) it = buckets_.emplace(c.get_den(), std::vector<__int128>(order_ + 1, 0)).first;
    auto& b = it->second;
    for (int n = 0; n <= order_; ++n) {
      if (K[n] == 0) continue;
      __int128 t, s;
      if (__builtin_mul_overflow(num, static_cast<__int128>(K[n]), &t) || __builtin_add_overflow(b[n], t, &s)) {
        flush(it->first, b);
        add_slow(c, K);
        return;
      }
      b[n] = s;
    }
  }

  QSeries result() {
    QSeries s = slow_;
    for (auto& [den, b] : buckets_) {
      for (int n = 0; n <= order_; ++n)
        if (b[n] != 0) s[n] += Rational(from_i128(b[n])) / Rational(den);
    }
    return s;
  }

 private:
  void flush(const Integer& den, std::vector<__int128>& b) {
    for (int n = 0; n <= order_; ++n) {
      if (b[n] != 0) slow_[n] += Rational(from_i128(b[n])) / Rational(den);
      b[n] = 0;
    }
  }
  void add_slow(const Rational& c, const std::vector<long long>& K) {
    for (int n = 0; n <= order_; ++n)
      if (K[n] != 0) slow_[n] += c * Rational(static_cast<long>(K[n]));
  }

  int order_;
  QSeries slow_;
  std::map<Integer, std::vector<__int128>> buckets_;
};

}  // namespace

QSeries flow_sum(const Orientation& g, int N, int marked, const FlowCoefficient& coef) {
  const GlobalGraph& G = g.graph;
  const int E = G.edge_count();
  const int V = G.n;
  std::vector<int> src(E), tgt(E), cost(E);
  for (int e = 0; e < E; ++e) {
    src[e] = g.source(e);
    tgt[e] = g.target(e);
    cost[e] = g.min_height(e);
    if (e == marked) cost[e] = std::max(cost[e], 1);  // the h = 0 term carries the factor 0
  }

  // Spanning forest of the non-loop edges.  Tree edges are solved from the
  // balance at their child vertex, children first.
  std::vector<int> parent_edge(V, -1);
  std::vector<char> seen(V, 0), is_tree(E, 0);
  std::vector<int> bfs;
  for (int r = 0; r < V; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    size_t head = bfs.size();
    bfs.push_back(r);
    while (head < bfs.size()) {
      int v = bfs[head++];
      for (int e = 0; e < E; ++e) {
        if (G.is_loop(e)) continue;
        int a = G.edges[e].first, b = G.edges[e].second;
        if (a != v && b != v) continue;
        int u = a == v ? b : a;
        if (seen[u]) continue;
        seen[u] = 1;
        parent_edge[u] = e;
        is_tree[e] = 1;
        bfs.push_back(u);
      }
    }
  }
  std::vector<int> free_edges;
  for (int e = 0; e < E; ++e)
    if (!is_tree[e]) free_edges.push_back(e);
  std::vector<std::pair<int, int>> solve_order;  // (vertex, tree edge)
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
    if (parent_edge[*it] >= 0) solve_order.emplace_back(*it, parent_edge[*it]);

  std::vector<int> w(E, 0);
  std::vector<long long> bal(V, 0);  // in - out
  std::vector<long long> K(N + 1);
  Accumulator acc(N);

  auto finish = [&](int used) {
    std::vector<std::pair<int, int>> assigned;
    bool ok = true;
    for (auto [v, e] : solve_order) {
      long long need = tgt[e] == v ? -bal[v] : bal[v];
      if (need < 1 || need > N || used + cost[e] * need > N) {
        ok = false;
        break;
      }
      w[e] = static_cast<int>(need);
      bal[tgt[e]] += need;
      bal[src[e]] -= need;
      used += cost[e] * static_cast<int>(need);
      assigned.emplace_back(v, e);
    }
    if (ok)
      for (int v = 0; v < V; ++v)
        if (bal[v] != 0) ok = false;
    if (ok) {
      Rational c = coef(w);
      if (c != 0) {
        std::fill(K.begin(), K.end(), 0);
        K[used] = 1;
        for (int e = 0; e < E; ++e) {
          const int reps = e == marked ? 2 : 1;
          for (int r = 0; r < reps; ++r)
            for (int n = w[e]; n <= N; ++n) K[n] += K[n - w[e]];
        }
        acc.add(c, K);
      }
    }
    for (auto [v, e] : assigned) {
      bal[tgt[e]] -= w[e];
      bal[src[e]] += w[e];
      w[e] = 0;
    }
  };

  std::function<void(size_t, int)> rec = [&](size_t i, int used) {
    if (i == free_edges.size()) {
      finish(used);
      return;
    }
    const int e = free_edges[i];
    const int bound = cost[e] > 0 ? (N - used) / cost[e] : N;
    for (int x = 1; x <= bound; ++x) {
      w[e] = x;
      if (!G.is_loop(e)) {
        bal[tgt[e]] += x;
        bal[src[e]] -= x;
      }
      rec(i + 1, used + cost[e] * x);
      if (!G.is_loop(e)) {
        bal[tgt[e]] -= x;
        bal[src[e]] += x;
      }
    }
    w[e] = 0;
  };
  rec(0, 0);
  return acc.result();
}

QSeries graph_sum_S(const Orientation& g, const EdgeExponents& m, int order) {
  if (static_cast<int>(m.size()) != g.graph.edge_count()) throw PreconditionError("one exponent per edge");
  for (int x : m)
    if (x < 0 || x % 2) throw PreconditionError("edge exponents must be even and >= 0");
  return flow_sum(g, order, -1, [&](const std::vector<int>& w) {
    Integer p = 1;
    for (size_t e = 0; e < w.size(); ++e) {
      Integer t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(w[e]), static_cast<unsigned long>(m[e] + 1));
      p *= t;
    }
    return Rational(p);
  });
}

QSeries graph_sum_S_total(const GlobalGraph& g, const EdgeExponents& m, int order) {
  auto os = orientations(g);
  std::vector<QSeries> parts(os.size());
  parallel_for(os.size(), [&](size_t i) { parts[i] = graph_sum_S(os[i], m, order); });
  QSeries s(order);
  for (const auto& p : parts) s += p;
  return s;
}

void vertex_widths(const Orientation& g, const std::vector<int>& w, int v, WidthTuple& in, WidthTuple& out) {
  in.clear();
  out.clear();
  for (int e = 0; e < g.graph.edge_count(); ++e) {
    if (g.target(e) == v) in.push_back(w[e]);
    if (g.source(e) == v) out.push_back(w[e]);
  }
}

QSeries graph_series_vertex(const Orientation& g, const std::vector<VertexFunction>& F, int order) {
  if (static_cast<int>(F.size()) != g.graph.n) throw PreconditionError("one vertex function per vertex");
  return flow_sum(g, order, -1, [&](const std::vector<int>& w) {
    Integer p = 1;
    for (int x : w) p *= x;
    Rational c(p);
    WidthTuple in, out;
    for (int v = 0; v < g.graph.n && c != 0; ++v) {
      vertex_widths(g, w, v, in, out);
      c *= a_prime(in, out, F[v]);
    }
    return c;
  });
}

QSeries graph_series_nprime(const Orientation& g, const Profile& profile, int order) {
  std::vector<VertexFunction> F;
  for (const auto& mu : profile) F.push_back(VertexFunction::f(mu));
  return graph_series_vertex(g, F, order);
}

QSeries graph_bracket_completed(const Orientation& g, const std::vector<int>& ells, int order) {
  std::vector<VertexFunction> F;
  for (int l : ells) F.push_back(VertexFunction::completed(l));
  return graph_series_vertex(g, F, order);
}

namespace {

std::vector<GraphContribution> per_graph(const std::vector<GlobalGraph>& graphs,
                                         const std::vector<VertexFunction>& F, int order) {
  std::vector<std::pair<size_t, Orientation>> jobs;
  for (size_t i = 0; i < graphs.size(); ++i)
    for (auto& o : orientations(graphs[i])) jobs.emplace_back(i, std::move(o));
  std::vector<QSeries> parts(jobs.size());
  parallel_for(jobs.size(), [&](size_t j) { parts[j] = graph_series_vertex(jobs[j].second, F, order); });
  std::vector<GraphContribution> out;
  for (const auto& g : graphs) out.push_back({g, automorphism_order(g), QSeries(order)});
  for (size_t j = 0; j < jobs.size(); ++j) out[jobs[j].first].series += parts[j];
  return out;
}

QSeries assemble(const std::vector<GraphContribution>& parts, int order) {
  QSeries s(order);
  for (const auto& c : parts) s += Rational(1) / Rational(c.aut) * c.series;
  return s;
}

}  // namespace

std::vector<GraphContribution> per_graph_nprime(const Profile& profile, int order, int extra) {
  std::vector<VertexFunction> F;
  for (const auto& mu : profile) F.push_back(VertexFunction::f(mu));
  return per_graph(enumerate_graphs(profile, extra), F, order);
}

QSeries assemble_total(const Profile& profile, int order, int extra) {
  return assemble(per_graph_nprime(profile, order, extra), order);
}

QSeries assemble_bracket_completed(const std::vector<int>& ells, int order, int extra) {
  std::vector<VertexFunction> F;
  for (int l : ells) F.push_back(VertexFunction::completed(l));
  return assemble(per_graph(enumerate_graphs_completed(ells, extra), F, order), order);
}

}  // namespace torcov
