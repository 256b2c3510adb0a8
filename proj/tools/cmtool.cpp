// cmtool: command-line front end for the cmreal library.
//
// Exit status: 0 when no falsification event occurred, 1 on a falsification
// (the offending instance is written to stderr as JSON), 2 on malformed
// input or unsupported options, 3 on an internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmreal/calogero_moser.hpp"
#include "cmreal/cherednik.hpp"
#include "cmreal/harness.hpp"
#include "cmreal/io.hpp"
#include "cmreal/quasi_exp.hpp"
#include "cmreal/schur.hpp"
#include "cmreal/tau_wave.hpp"

using namespace cmreal;

namespace {

constexpr int kExitFalsified = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string backend = "exact";
  double tol = 1e-8;
  bool approx() const { return backend == "approx"; }
};

Json load(const std::string& path) {
  if (path != "-") return read_json_file(path);
  std::stringstream ss;
  ss << std::cin.rdbuf();
  return parse_json_text(ss.str());
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int falsified(const std::string& what, const Json& instance) {
  Json report{{"falsification", what}, {"instance", instance}};
  std::cerr << report.dump(2) << '\n';
  return kExitFalsified;
}

void exact_only(const Globals& g, const std::string& cmd) {
  if (g.approx()) throw UsageError(cmd + ": only the exact backend is supported");
}

std::vector<Gq> scalar_list(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array()) throw ParseError("/" + key + ": expected an array of scalars");
  std::vector<Gq> out;
  for (const Json& v : j[key]) out.push_back(gq_from_json(v));
  return out;
}

std::vector<cplx> approx_list(const std::vector<Gq>& v) {
  std::vector<cplx> out;
  for (const Gq& a : v) out.push_back(a.to_complex());
  return out;
}

Json spectrum_json(const Spectrum& s) {
  Json out = Json::array();
  for (cplx v : s.values) out.push_back(to_json(v));
  return out;
}

Json wave_json(const WaveFunction& w) {
  Json out = Json::array();
  for (const RatFunc& f : w.a) out.push_back(f.str());
  return out;
}

Json surd_json(const Surd& s) {
  return {{"a", to_json(s.a)}, {"b", to_json(s.b)}, {"d", to_json(s.d)}, {"approx", to_json(s.approx())}};
}

Partition parts_arg(const std::vector<int>& parts) {
  if (parts.empty()) throw UsageError("--parts: expected at least one part");
  return make_partition(parts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calogero-Moser pairs, tau functions and reality tests"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--backend", g.backend, "exact or approx")
      ->check(CLI::IsMember({"exact", "approx"}))
      ->capture_default_str();
  app.add_option("--tol", g.tol, "floating-point tolerance")->check(CLI::PositiveNumber)->capture_default_str();

  std::string input = "-";
  auto with_input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", input, what + " JSON file, '-' for stdin")->capture_default_str();
    return sub;
  };
  int m = 3;
  auto with_m = [&](CLI::App* sub) { sub->add_option("--m", m, "truncation order")->check(CLI::PositiveNumber); };

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  // ---- pairs ---------------------------------------------------------------

  auto* validate_cmd = with_input(app.add_subcommand("validate", "check rank([X,Z] + I) = 1"), "pair");
  on(validate_cmd, [&] {
    Json j = load(input);
    for (const char* key : {"X", "Z"})
      if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("at /: missing \"") + key + "\"");
    MatQ x = matq_from_json(j["X"]), z = matq_from_json(j["Z"]);
    if (!x.is_square() || x.rows() != z.rows() || x.cols() != z.cols())
      throw ParseError("X and Z must be square of equal size");
    try {
      if (g.approx())
        validate(to_approx(CMPair{x, z}).X, to_approx(CMPair{x, z}).Z, g.tol);
      else
        validate(x, z);
      std::cout << "valid, rank 1\n";
      return 0;
    } catch (const NotCMPairError& e) {
      std::cout << "invalid, rank " << e.rank << '\n';
      return kExitBadInput;
    }
  });

  auto* chart_cmd = with_input(app.add_subcommand("chart", "pair to chart, or chart to pair"), "pair or chart");
  on(chart_cmd, [&] {
    Json j = load(input);
    if (j.contains("lambda")) {
      CMChart c = cmchart_from_json(j);
      if (g.approx())
        emit(to_json(from_chart(to_approx(c))));
      else
        emit(to_json(from_chart(c)));
      return 0;
    }
    CMPair p = cmpair_from_json(j);
    if (!g.approx())
      if (auto c = to_chart_exact(p)) {
        emit(to_json(*c));
        return 0;
      }
    emit(to_json(to_chart(to_approx(p), g.tol)));
    return 0;
  });

  auto* upsilon_cmd = with_input(app.add_subcommand("upsilon", "(spec X, spec Z)"), "pair");
  on(upsilon_cmd, [&] {
    CMPair p = cmpair_from_json(load(input));
    UpsilonTarget u = g.approx() ? upsilon(to_approx(p)) : upsilon(p);
    emit({{"x", spectrum_json(u.x)}, {"z", spectrum_json(u.z)}});
    return 0;
  });

  auto* fiber_cmd = with_input(app.add_subcommand("fiber", "all charts over a spectrum pair, n <= 3"),
                               "{\"x\": [...], \"z\": [...]}");
  on(fiber_cmd, [&] {
    Json j = load(input);
    std::vector<Gq> x = scalar_list(j, "x"), z = scalar_list(j, "z");
    if (x.size() != z.size()) throw ParseError("x and z differ in length");
    Json out = Json::array();
    if (!g.approx() && x.size() <= 2) {
      for (const SurdChart& c : fiber_solve_exact(x, z)) {
        Json alpha = Json::array(), lambda = Json::array();
        for (const Gq& l : c.lambda) lambda.push_back(to_json(l));
        for (const Surd& a : c.alpha) alpha.push_back(surd_json(a));
        out.push_back({{"lambda", lambda}, {"alpha", alpha}});
      }
    } else {
      FiberResult f = fiber_solve(approx_list(x), approx_list(z));
      for (const CMChartC& c : f.points) out.push_back(to_json(c));
    }
    emit({{"points", out.size()}, {"charts", out}});
    return 0;
  });

  bool real_spectra = false;
  auto* realify_cmd = with_input(app.add_subcommand("realify", "real pair conjugate to the input"), "pair");
  realify_cmd->add_flag("--real-spectra", real_spectra, "require real spectra (real-spectra route)");
  on(realify_cmd, [&] {
    CMPair p = cmpair_from_json(load(input));
    try {
      RealifyResult r = g.approx() ? realify_regular(to_approx(p), real_spectra, g.tol)
                                   : realify_regular(p, real_spectra, g.tol);
      Json out{{"exact", r.exact}, {"residual", r.residual}};
      out["pair"] = r.pair ? to_json(*r.pair) : to_json(r.pair_approx);
      emit(out);
      return 0;
    } catch (const CounterexampleAlarm& e) {
      return falsified(e.what(), to_json(p));
    }
  });

  // ---- tau and wave --------------------------------------------------------

  auto* tau_cmd = with_input(app.add_subcommand("tau", "tau(t_1..t_m) of a pair"), "pair");
  with_m(tau_cmd);
  on(tau_cmd, [&] {
    exact_only(g, "tau");
    std::cout << to_string(tau_from_cm(cmpair_from_json(load(input)), m).poly) << '\n';
    return 0;
  });

  auto* wave_cmd = with_input(app.add_subcommand("wave", "a_0(x), ..., a_m(x) of the wave function"), "pair");
  with_m(wave_cmd);
  on(wave_cmd, [&] {
    exact_only(g, "wave");
    emit(wave_json(wave_from_cm(cmpair_from_json(load(input)), m)));
    return 0;
  });

  auto* sato_cmd = with_input(app.add_subcommand("sato-check", "wave function from tau against the direct one"), "pair");
  with_m(sato_cmd);
  on(sato_cmd, [&] {
    exact_only(g, "sato-check");
    CMPair p = cmpair_from_json(load(input));
    WaveFunction direct = wave_from_cm(p, m), sato = sato_wave(tau_from_cm(p, m), m);
    for (int k = 0; k <= m; ++k)
      if (!(direct.a[static_cast<size_t>(k)] == sato.a[static_cast<size_t>(k)]))
        return falsified("wave coefficient a_" + std::to_string(k) + " differs", to_json(p));
    std::cout << "consistent to order " << m << '\n';
    return 0;
  });

  int order = 6;
  auto* bisp_cmd = with_input(app.add_subcommand("bispectral", "B_W[i][j] = B_bW[j][i]"), "pair");
  bisp_cmd->add_option("--order", order, "total order i + j")->check(CLI::PositiveNumber);
  on(bisp_cmd, [&] {
    exact_only(g, "bispectral");
    CMPair p = cmpair_from_json(load(input));
    if (!bispectral_symmetric(p, order)) return falsified("bispectral symmetry fails", to_json(p));
    std::cout << "symmetric to order " << order << '\n';
    return 0;
  });

  // ---- quasi-exponential spaces --------------------------------------------

  auto* wr_cmd = with_input(app.add_subcommand("wronskian", "normalized Wronskian of a space"), "space");
  on(wr_cmd, [&] {
    exact_only(g, "wronskian");
    QuasiExpSpace s = quasi_exp_from_json(load(input));
    Gq mu_sum;
    for (int j = 0; j < s.k(); ++j)
      mu_sum += Gq(static_cast<long>(s.spaces[static_cast<size_t>(j)].size())) * s.mus[static_cast<size_t>(j)];
    emit({{"mu_sum", to_json(mu_sum)}, {"poly", to_json(normalized_wronskian(s))},
          {"text", to_string(normalized_wronskian(s))}});
    return 0;
  });

  auto* canon_cmd = with_input(app.add_subcommand("canonicalize", "constant-free representative"), "space");
  on(canon_cmd, [&] {
    exact_only(g, "canonicalize");
    emit(to_json(canonicalize(quasi_exp_from_json(load(input)))));
    return 0;
  });

  auto* gw_cmd = with_input(app.add_subcommand("gamma-wave", "wave function of a space"), "space");
  with_m(gw_cmd);
  on(gw_cmd, [&] {
    exact_only(g, "gamma-wave");
    emit(wave_json(gamma_wave(quasi_exp_from_json(load(input)), m)));
    return 0;
  });

  auto* rs_cmd = with_input(app.add_subcommand("real-span", "closure under complex conjugation"), "space");
  on(rs_cmd, [&] {
    exact_only(g, "real-span");
    QuasiExpSpace s = quasi_exp_from_json(load(input));
    bool real = real_span_test(s);
    Json out{{"real", real}};
    if (real) out["real_basis"] = to_json(extract_real_basis(s));
    emit(out);
    return 0;
  });

  auto* thm3_cmd = with_input(app.add_subcommand("thm3", "real-rooted Wronskian implies a real space"), "space");
  on(thm3_cmd, [&] {
    exact_only(g, "thm3");
    QuasiExpSpace s = quasi_exp_from_json(load(input));
    Thm3Report r = thm3_harness(s);
    if (r.falsified()) return falsified("real-rooted Wronskian over a non-real space", to_json(s));
    emit({{"applicable", r.applicable}, {"hypothesis", r.hypothesis}, {"conclusion", r.conclusion}});
    return 0;
  });

  // ---- Schur ---------------------------------------------------------------

  std::vector<int> parts;
  auto* schur_cmd = app.add_subcommand("schur", "Schur function in power-sum variables");
  schur_cmd->add_option("--parts", parts, "partition parts, weakly decreasing")->required();
  on(schur_cmd, [&] {
    exact_only(g, "schur");
    std::cout << to_string(schur_function(parts_arg(parts)), "p") << '\n';
    return 0;
  });

  std::vector<std::string> shifts;
  auto* coro_cmd = app.add_subcommand("coro-schur", "real-rooted specialization implies real shifts");
  coro_cmd->add_option("--parts", parts, "partition parts, weakly decreasing")->required();
  coro_cmd->add_option("--c", shifts, "c_1 .. c_N as scalars such as 1/2 or 1+2i")->required();
  on(coro_cmd, [&] {
    exact_only(g, "coro-schur");
    Partition lam = parts_arg(parts);
    std::vector<Gq> c;
    for (const std::string& s : shifts) c.push_back(parse_gq(s));
    CoroSchurReport r = coro_schur_harness(lam, c);
    Json cj = Json::array();
    for (const Gq& v : c) cj.push_back(to_json(v));
    Json instance{{"partition", to_json(lam)}, {"c", cj}};
    if (r.falsified()) return falsified("real-rooted specialization with a non-real shift", instance);
    emit({{"vacuous", r.vacuous}, {"hypothesis", r.hypothesis}, {"conclusion", r.conclusion},
          {"literal_conclusion", r.literal_conclusion}, {"depended", r.depended},
          {"specialization", to_string(r.specialization)}});
    return 0;
  });

  // ---- Cherednik -----------------------------------------------------------

  std::string coupling = "1";
  bool dump_rep = false;
  auto* dunkl_cmd = with_input(app.add_subcommand("dunkl", "Dunkl representation, relations, extracted pair"),
                               "{\"lambda\": [...], \"mu\": [...]}");
  dunkl_cmd->add_option("--c", coupling, "coupling constant")->capture_default_str();
  dunkl_cmd->add_flag("--matrices", dump_rep, "include every operator matrix");
  on(dunkl_cmd, [&] {
    exact_only(g, "dunkl");
    Json j = load(input);
    std::vector<Gq> lambda = scalar_list(j, "lambda"), mu = scalar_list(j, "mu");
    if (lambda.size() != mu.size()) throw ParseError("lambda and mu differ in length");
    DunklRep rep = build_dunkl_rep(lambda, mu, parse_gq(coupling));
    CherednikReport r = reality_harness(rep);
    Json out{{"dim", rep.dim()}, {"relations_violated", check_relations(rep)},
             {"regular_character", regular_character(rep)}, {"pair", to_json(extract_cm_pair(rep))},
             {"evaluated", r.evaluated}, {"hypothesis", r.hypothesis}, {"conclusion", r.conclusion}};
    if (dump_rep) out["rep"] = to_json(rep);
    if (r.falsified()) return falsified("real spectra without a real form", j);
    emit(out);
    return 0;
  });

  // ---- batch harness -------------------------------------------------------

  HarnessConfig cfg;
  std::string csv_path, summary_path;
  bool check_determinism = false;
  auto* harness_cmd = app.add_subcommand("harness-all", "every acceptance suite; CSV plus JSON summary");
  harness_cmd->add_option("--seed", cfg.seed, "base seed")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)
      ->capture_default_str();
  harness_cmd->add_option("--threads", cfg.threads, "worker threads; 0 reads CMREAL_THREADS")->check(CLI::NonNegativeNumber);
  harness_cmd->add_flag("--timing", cfg.timing, "add wall-time columns (output no longer reproducible)");
  harness_cmd->add_option("--csv", csv_path, "CSV output path, stdout if omitted");
  harness_cmd->add_option("--summary", summary_path, "JSON summary path, stderr if omitted");
  harness_cmd->add_flag("--check-determinism", check_determinism, "rerun every suite and compare the CSV bytes");
  on(harness_cmd, [&] {
    std::vector<SuiteReport> reports = run_all(cfg);
    std::string csv = render_csv(reports, cfg.timing);
    if (check_determinism) reports.push_back(determinism_check(render_csv(reports, false), cfg));
    Json summary = render_summary(reports, cfg);
    if (csv_path.empty()) {
      std::cout << csv;
    } else {
      std::ofstream(csv_path, std::ios::binary) << csv;
    }
    if (summary_path.empty())
      std::cerr << summary.dump(2) << '\n';
    else
      std::ofstream(summary_path) << summary.dump(2) << '\n';
    for (const SuiteReport& s : reports)
      for (const InstanceRecord& r : s.records)
        if (r.failed)
          return falsified(s.name, {{"criterion", s.criterion}, {"seed", cfg.seed}, {"instance", r.id},
                                    {"n", r.n}, {"residual", r.residual}, {"note", r.note}});
    for (const SuiteReport& s : reports)
      if (!s.passed()) return falsified(s.name + ": " + s.detail, {{"criterion", s.criterion}});
    return 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    std::cerr << "unsupported input: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitBadInput;
}
