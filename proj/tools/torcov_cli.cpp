#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "torcov/acceptance.hpp"
#include "torcov/elliptic.hpp"
#include "torcov/errors.hpp"
#include "torcov/graph.hpp"
#include "torcov/hurwitz.hpp"
#include "torcov/parallel.hpp"
#include "torcov/qmpoly.hpp"
#include "torcov/siegel_veech.hpp"
#include "torcov/triple.hpp"

using json = nlohmann::ordered_json;
using namespace torcov;

namespace {

struct Config {
  int order = 12;
  int fit = -1;  // max weight, -1 = no fit
  double budget = kDefaultOracleBudget;
  bool json = false;
  int threads = 0;
};

json series_json(const QSeries& s) {
  return json{{"order", s.order()}, {"coeffs", serialize(s)}};
}

json qmpoly_json(const QMPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"exp", {m.a, m.b, m.c}}, {"coeff", to_string(c)}});
  return out;
}

std::string series_text(const QSeries& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) out += (n ? " " : "") + to_string(s[n]);
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("expected comma separated integers, got '" + text + "'");
    }
  }
  return out;
}

class Output {
 public:
  Output(const std::string& command, const Config& cfg) : cfg_(cfg) {
    doc_["schema"] = 1;
    doc_["command"] = command;
    doc_["config"] = {{"order", cfg.order}};
    if (cfg.fit >= 0) doc_["config"]["fit_max_weight"] = cfg.fit;
  }
  json& doc() { return doc_; }
  void config(const std::string& k, const json& v) { doc_["config"][k] = v; }
  void line(const std::string& s) { text_ += s + "\n"; }
  void check(const std::string& name, bool pass) {
    doc_["checks"].push_back({{"name", name}, {"pass", pass}});
    line(std::string(pass ? "PASS " : "FAIL ") + name);
  }
  void flush() const {
    if (cfg_.json) std::cout << doc_.dump(2) << "\n";
    else std::cout << text_;
  }

 private:
  const Config& cfg_;
  json doc_;
  std::string text_;
};

// Adds series and optional fit to the output.
void emit_series(Output& out, const QSeries& s, const Config& cfg, const std::string& label = "series") {
  out.doc()["series"] = series_json(s);
  out.line(label + ": " + series_text(s));
  if (cfg.fit >= 0) {
    QMPoly p = fit_quasimodular(s, cfg.fit);
    out.doc()["qmpoly"] = qmpoly_json(p);
    out.line("fit: " + p.to_string());
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"torcov: exact counting of torus covers and quasimodular fits"};
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  auto add_common = [&](CLI::App* sub, bool fit) {
    sub->add_option("--order,-N", cfg.order, "truncation order")->check(CLI::NonNegativeNumber);
    if (fit) sub->add_option("--fit", cfg.fit, "fit as quasimodular form of this max weight");
  };

  std::string profile_text, variant_text = "all", graph_text, m_text, win, wout, mu_text;
  int power = 1, p = -1, mm = 1, nn = 1, ell = 3, radius = 6, oracle_degree = -1, sv_edge = -1, completed = -1;
  bool per_graph = false, fit_flag = false;

  auto* count = app.add_subcommand("count", "N, N' or N° series of a profile");
  add_common(count, true);
  count->add_option("--profile", profile_text, "profile, e.g. \"(2),(2)\"")->required();
  count->add_option("--variant", variant_text, "all | prime (no-unramified) | connected");
  count->add_option("--oracle", oracle_degree, "cross-check with the brute-force count up to this degree");
  count->add_option("--budget", cfg.budget, "oracle loop budget");

  auto* graphs = app.add_subcommand("graphs", "graph decomposition of N'");
  add_common(graphs, true);
  graphs->add_option("--profile", profile_text)->required();
  graphs->add_flag("--per-graph", per_graph, "list every graph");

  auto* triple = app.add_subcommand("triple", "triple Hurwitz numbers A and A'");
  triple->add_option("--win", win, "input widths, e.g. 2,3")->required();
  triple->add_option("--wout", wout, "output widths")->required();
  triple->add_option("--mu", mu_text, "ramification over 1, e.g. (3)");
  triple->add_option("--completed", completed, "use P_ell/ell instead of f_mu");

  auto* ssz = app.add_subcommand("ssz-check", "global polynomiality of completed vertex values");
  ssz->add_option("--m", mm)->required();
  ssz->add_option("--n", nn)->required();
  ssz->add_option("--ell", ell)->required();
  ssz->add_option("--radius", radius);

  auto* zconst = app.add_subcommand("zconst", "[zeta^0] Z^e");
  zconst->add_option("--order,-N", cfg.order)->check(CLI::NonNegativeNumber);
  zconst->add_option("--power", power)->required();
  zconst->add_flag("--fit", fit_flag, "also fit the Fourier-side series");

  auto* cterm = app.add_subcommand("cterm", "constant term of a product over graph edges");
  add_common(cterm, true);
  cterm->add_option("--graph", graph_text, "edges, e.g. \"1-2,1-2,1-2\"")->required();
  cterm->add_option("--m", m_text, "even exponent per edge");
  cterm->add_option("--sv-edge", sv_edge, "1-based edge carrying L or DqP (Siegel-Veech sum)");

  auto* sv = app.add_subcommand("sv", "Siegel-Veech weighted counts");
  add_common(sv, true);
  sv->add_option("--profile", profile_text)->required();
  sv->add_option("--p", p, "odd p >= -1");
  sv->add_option("--variant", variant_text);
  sv->add_flag("--per-graph", per_graph);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }
  set_thread_count(cfg.threads);

  CLI::App* cmd = app.get_subcommands().front();
  Output out(cmd->get_name(), cfg);
  int rc = 0;
  try {
    if (cmd == count) {
      const Profile pr = parse_profile(profile_text);
      const Variant v = parse_variant(variant_text);
      out.doc()["profile"] = to_string(pr);
      out.config("variant", to_string(v));
      QSeries s = n_variant_series(pr, cfg.order, v);
      emit_series(out, s, cfg);
      if (oracle_degree >= 0) {
        out.config("oracle_budget", cfg.budget);
        for (int d = 0; d <= std::min(oracle_degree, cfg.order); ++d) {
          const bool same = brute_force_n(pr, d, v, cfg.budget) == s[d];
          out.check("oracle d=" + std::to_string(d), same);
          if (!same) rc = static_cast<int>(ExitCode::mismatch);
        }
      }
    } else if (cmd == graphs) {
      const Profile pr = parse_profile(profile_text);
      out.doc()["profile"] = to_string(pr);
      auto parts = per_graph_nprime(pr, cfg.order);
      QSeries total(cfg.order);
      json list = json::array();
      for (const auto& c : parts) {
        total += (Rational(1) / Rational(c.aut)) * c.series;
        if (!per_graph) continue;
        json item{{"graph", c.graph.to_string()}, {"aut", c.aut.get_str()}, {"series", series_json(c.series)}};
        out.line("graph " + c.graph.to_string() + " aut " + c.aut.get_str() + ": " + series_text(c.series));
        if (cfg.fit >= 0 && !c.series.is_zero()) {
          QMPoly f = fit_quasimodular(c.series, cfg.fit);
          item["fit"] = qmpoly_json(f);
          out.line("  fit: " + f.to_string());
        }
        list.push_back(item);
      }
      if (per_graph) out.doc()["graphs"] = list;
      emit_series(out, total, cfg, "total");
      const bool same = total == n_prime_series(pr, cfg.order);
      out.check("graph total equals N'", same);
      if (!same) rc = static_cast<int>(ExitCode::mismatch);
    } else if (cmd == triple) {
      const WidthTuple wm = parse_ints(win), wp = parse_ints(wout);
      VertexFunction F = VertexFunction::one();
      if (completed >= 1) F = VertexFunction::completed(completed);
      else if (!mu_text.empty()) {
        Profile pr = parse_profile(mu_text);
        if (pr.size() != 1) throw ParseError("--mu takes one partition");
        F = VertexFunction::f(pr[0]);
      }
      out.config("vertex_function", F.key());
      const Rational a = a_number(wm, wp, F), ap = a_prime(wm, wp, F);
      out.doc()["A"] = to_string(a);
      out.doc()["A_prime"] = to_string(ap);
      out.line("A = " + to_string(a));
      out.line("A' = " + to_string(ap));
    } else if (cmd == ssz) {
      out.config("m", mm);
      out.config("n", nn);
      out.config("ell", ell);
      out.config("radius", radius);
      SszReport r = ssz_poly_fit(mm, nn, ell, radius);
      out.doc()["polynomial"] = r.poly.to_string();
      out.doc()["fit_points"] = r.fit_points;
      out.doc()["wall_points"] = r.wall_points;
      out.line("polynomial: " + r.poly.to_string());
      out.line("points: " + std::to_string(r.fit_points) + " fit, " + std::to_string(r.wall_points) + " on walls");
      if (!r.ok) {
        out.doc()["witness"] = {{"minus", r.witness_minus}, {"plus", r.witness_plus}};
        out.line("failure: " + r.message);
      }
      out.check("polynomial and even", r.ok && r.poly.even());
      if (!r.ok) rc = static_cast<int>(ExitCode::fit);
    } else if (cmd == zconst) {
      out.config("power", power);
      QMPoly z = zeta0_Z_power(power, cfg.order);
      out.doc()["qmpoly"] = qmpoly_json(z);
      out.line(z.to_string());
      if (fit_flag) {
        QMPoly f = fit_quasimodular(zeta0_Z_power_series(power, cfg.order), power);
        out.doc()["fit"] = qmpoly_json(f);
        out.check("Fourier fit equals symbolic value", f == z);
        if (!(f == z)) rc = static_cast<int>(ExitCode::mismatch);
      }
    } else if (cmd == cterm) {
      const GlobalGraph g = GlobalGraph::parse(graph_text);
      EdgeExponents m = m_text.empty() ? EdgeExponents(g.edge_count(), 0) : parse_ints(m_text);
      out.doc()["graph"] = g.to_string();
      out.config("m", m);
      QSeries s, direct;
      if (sv_edge >= 1) {
        out.config("sv_edge", sv_edge);
        s = sv_constant_term(g, m, sv_edge - 1, cfg.order);
        direct = sv_graph_sum_total(g, m, cfg.order, sv_edge - 1);
      } else {
        s = constant_term_graph(g, m, cfg.order);
        direct = graph_sum_S_total(g, m, cfg.order);
      }
      const bool same = s == direct;
      emit_series(out, s, cfg);
      out.check("constant term equals direct graph sum", same);
      if (!same) rc = static_cast<int>(ExitCode::mismatch);
    } else if (cmd == sv) {
      const Profile pr = parse_profile(profile_text);
      const Variant v = parse_variant(variant_text);
      out.doc()["profile"] = to_string(pr);
      out.config("p", p);
      out.config("variant", to_string(v));
      if (p < -1) throw PreconditionError("p must be >= -1");
      if (p % 2 == 0 && cfg.fit >= 0) {
        std::cerr << "warning: p is even; quasimodularity is not expected, skipping fit\n";
        cfg.fit = -1;
      }
      QSeries s = c_variant_series(pr, p, cfg.order, v);
      emit_series(out, s, cfg);
      if (per_graph) {
        json list = json::array();
        QSeries total(cfg.order);
        for (const auto& c : sv_per_graph_all(pr, p, cfg.order)) {
          total += (Rational(1) / Rational(c.aut)) * c.series;
          list.push_back({{"graph", c.graph.to_string()}, {"aut", c.aut.get_str()}, {"series", series_json(c.series)}});
          out.line("graph " + c.graph.to_string() + " aut " + c.aut.get_str() + ": " + series_text(c.series));
        }
        out.doc()["graphs"] = list;
        const bool same = total == c_prime_series(pr, p, cfg.order);
        out.check("graph total equals c'", same);
        if (!same) rc = static_cast<int>(ExitCode::mismatch);
      }
    } else if (cmd == selftest) {
      bool all = true;
      for (const auto& r : run_acceptance()) {
        out.check(r.name, r.pass);
        if (!r.detail.empty()) out.line("  " + r.detail);
        all = all && r.pass;
      }
      if (!all) rc = static_cast<int>(ExitCode::mismatch);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }
  out.flush();
  return rc;
}
