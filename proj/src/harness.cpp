#include "cmreal/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "cmreal/random.hpp"
#include "cmreal/roots.hpp"

namespace cmreal {

namespace {

using Clock = std::chrono::steady_clock;
using InstanceFn = std::function<InstanceRecord(Rng&, int)>;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Instances land in their own slot, so the report order never depends on
// scheduling.
std::vector<InstanceRecord> run_pool(int count, int threads, std::uint64_t seed, int criterion, const InstanceFn& fn) {
  std::vector<InstanceRecord> out(static_cast<size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int id = next++; id < count; id = next++) {
      Rng rng = instance_rng(seed, static_cast<std::uint64_t>(criterion), static_cast<std::uint64_t>(id));
      auto t0 = Clock::now();
      InstanceRecord r;
      try {
        r = fn(rng, id);
      } catch (const std::exception& e) {
        r = InstanceRecord{};
        r.failed = true;
        r.note = std::string("exception: ") + e.what();
      }
      r.id = id;
      r.wall_ms = 1000.0 * seconds_since(t0);
      out[static_cast<size_t>(id)] = std::move(r);
    }
  };
  const int t = std::max(1, std::min(threads, count));
  std::vector<std::thread> pool;
  for (int k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<cplx> approx(const std::vector<Gq>& v) {
  std::vector<cplx> out;
  for (const Gq& a : v) out.push_back(a.to_complex());
  return out;
}

PolyQ signed_reflection(const PolyQ& chi, int n) {
  PolyQ p = chi.scale_argument(Gq(-1));
  return n % 2 ? -p : p;
}

// ---- criterion 1: rank one ------------------------------------------------

InstanceRecord rank_one(Rng& rng, int id) {
  InstanceRecord r;
  r.n = 1 + id / 200;
  CMPair p = from_chart(random_chart(rng, r.n, id % 2 == 1));
  int rank = rank_exact(cm_defect(p.X, p.Z));
  r.hypothesis = true;
  r.conclusion = rank == 1;
  r.failed = !r.conclusion;
  r.note = "rank " + std::to_string(rank);
  return r;
}

// ---- criterion 2: degree of Upsilon ---------------------------------------

bool generic_n2(const std::vector<Gq>& lx, const std::vector<Gq>& lz) {
  Gq d = lx[0] - lx[1], e = lz[0] - lz[1];
  return !(e * e + Gq(4) / (d * d)).is_zero();
}

InstanceRecord upsilon_degree(Rng& rng, int id) {
  InstanceRecord r;
  r.n = 1 + id / 20;
  std::vector<Gq> lx, lz;
  do {
    lx = random_distinct(rng, r.n, true, 3, 7);
    lz = random_distinct(rng, r.n, true, 3, 7);
  } while (r.n == 2 && !generic_n2(lx, lz));
  FiberResult f = fiber_solve(approx(lx), approx(lz));
  long want = factorial(r.n);
  r.hypothesis = true;
  r.conclusion = static_cast<long>(f.points.size()) == want;
  r.failed = !r.conclusion;
  r.note = std::to_string(f.points.size()) + " of " + std::to_string(want) + " points";
  return r;
}

// ---- criterion 3: real spectra realify -------------------------------------

InstanceRecord real_fiber(Rng& rng, int id) {
  InstanceRecord r;
  r.n = 1 + id / 50;
  std::vector<Gq> lx = random_distinct(rng, r.n, false), lz;
  for (int k = 0; k < r.n; ++k) lz.push_back(random_gq(rng, false));
  r.hypothesis = true;
  long want = factorial(r.n);
  if (r.n <= 2) {
    auto charts = fiber_solve_exact(lx, lz);
    bool exact_zero = true;
    for (const SurdChart& c : charts)
      for (const Surd& a : c.alpha) {
        auto im = a.exact_imag();
        exact_zero = exact_zero && im && *im == 0;
      }
    // Repeated Z eigenvalues give non-reduced fibers with fewer distinct points.
    r.conclusion = exact_zero && !charts.empty() && static_cast<long>(charts.size()) <= want;
    r.note = "exact closed form, " + std::to_string(charts.size()) + " points";
  } else {
    FiberResult f = fiber_solve(approx(lx), approx(lz));
    r.conclusion = !f.points.empty() && static_cast<long>(f.points.size()) <= want;
    for (const CMChartC& c : f.points) {
      RealifyResult rr = realify_regular(from_chart(c), true);
      r.residual = std::max(r.residual, rr.residual);
      r.conclusion = r.conclusion && rr.residual <= 1e-8 && is_real_matrix(rr.pair_approx.X, 0.0) &&
                     is_real_matrix(rr.pair_approx.Z, 0.0);
    }
    r.note = std::to_string(f.points.size()) + " points";
  }
  r.failed = !r.conclusion;
  return r;
}

// ---- criteria 4-7: tau and wave identities ---------------------------------

InstanceRecord sato_consistency(Rng& rng, int id) {
  InstanceRecord r;
  r.n = 1 + id % 4;
  CMPair p = random_pair(rng, r.n, id % 2 == 1);
  WaveFunction direct = wave_from_cm(p, 6), sato = sato_wave(tau_from_cm(p, 6), 6);
  r.hypothesis = true;
  r.conclusion = true;
  for (int k = 1; k <= 6; ++k)
    if (direct.a[static_cast<size_t>(k)] != sato.a[static_cast<size_t>(k)]) {
      r.conclusion = false;
      r.note = "a_" + std::to_string(k) + " differs";
      break;
    }
  r.failed = !r.conclusion;
  return r;
}

InstanceRecord tau_specialization(Rng& rng, int id) {
  InstanceRecord r;
  r.n = 1 + id % 5;
  CMPair p = random_pair(rng, r.n, id % 2 == 1);
  bool x_ok = tau_at_x(tau_from_cm(p, 2)) == signed_reflection(char_poly(p.X), r.n);
  bool z_ok = tau_at_x(tau_from_cm(bispectral_involution(p), 2)) == signed_reflection(char_poly(p.Z), r.n);
  r.hypothesis = true;
  r.conclusion = x_ok && z_ok;
  r.failed = !r.conclusion;
  if (!x_ok) r.note = "tau(x,0,...) differs";
  if (!z_ok) r.note += r.note.empty() ? "dual tau differs" : "; dual tau differs";
  return r;
}

InstanceRecord bispectral(Rng& rng, int id) {
  InstanceRecord r;
  r.n = 1 + id % 3;
  CMPair p = random_pair(rng, r.n, id % 2 == 1);
  r.hypothesis = true;
  r.conclusion = bispectral_symmetric(p, 6);
  r.failed = !r.conclusion;
  return r;
}

InstanceRecord flow_intertwining(Rng& rng, int id) {
  InstanceRecord r;
  r.n = 1 + id % 4;
  CMPair p = random_pair(rng, r.n, id % 2 == 1);
  Gq t = random_gq(rng, id % 3 == 0);
  const int m = 3;
  MultiPolyQ flowed = tau_from_cm(cm_flow(p, 1, t), m).poly;
  std::vector<MultiPolyQ> images{MultiPolyQ::variable(0, m) + MultiPolyQ(m, t)};
  for (int j = 1; j < m; ++j) images.push_back(MultiPolyQ::variable(j, m));
  MultiPolyQ shifted = tau_from_cm(p, m).poly.compose(images, m);
  r.hypothesis = true;
  r.conclusion = flowed == shifted;
  r.failed = !r.conclusion;
  return r;
}

// ---- quasi-exponential instance generators ---------------------------------

PolyQ grid_poly(Rng& rng, int max_deg, bool perturb) {
  std::uniform_int_distribution<long> coef(-2, 2);
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<Gq> c;
  for (int k = 0; k < d; ++k) c.push_back(Gq(coef(rng)));
  c.push_back(Gq(1 + std::uniform_int_distribution<long>(0, 1)(rng)));
  if (perturb) {
    size_t at = std::uniform_int_distribution<size_t>(0, c.size() - 1)(rng);
    c[at] += Gq(Rational(0), random_rational(rng, 1, 3));
  }
  return PolyQ(c);
}

// k <= max_k blocks with distinct real integer exponents and at most
// max_dim basis polynomials in total.
QuasiExpSpace random_space(Rng& rng, int max_k, int max_dim, bool perturb, bool force_zero_mu) {
  for (;;) {
    int k = std::uniform_int_distribution<int>(1, max_k)(rng);
    std::vector<long> pool{-2, -1, 0, 1, 2};
    std::shuffle(pool.begin(), pool.end(), rng);
    QuasiExpSpace s;
    int budget = max_dim;
    for (int j = 0; j < k && budget - (k - j - 1) > 0; ++j) {
      int dim = std::uniform_int_distribution<int>(1, budget - (k - j - 1))(rng);
      budget -= dim;
      s.mus.push_back(force_zero_mu ? Gq(0) : Gq(pool[static_cast<size_t>(j)]));
      std::vector<PolyQ> basis;
      for (int b = 0; b < dim; ++b) basis.push_back(grid_poly(rng, 3, perturb && b == 0 && j == 0));
      s.spaces.push_back(std::move(basis));
    }
    try {
      check_space(s);
      normalized_wronskian(s);
      return s;
    } catch (const std::domain_error&) {
      continue;
    }
  }
}

// ---- criterion 8: Wronskian stack ------------------------------------------

InstanceRecord wronskian_stack(Rng& rng, int id) {
  InstanceRecord r;
  r.hypothesis = true;
  if (id < 100) {
    QuasiExpSpace s = random_space(rng, 2, 4, id % 2 == 1, false);
    QuasiExpSpace t = s;
    for (int j = 0; j < s.k(); ++j) {
      const auto& v = s.spaces[static_cast<size_t>(j)];
      int d = static_cast<int>(v.size());
      MatQ g = random_invertible(rng, d, true);
      std::vector<PolyQ> changed;
      for (int a = 0; a < d; ++a) {
        PolyQ acc;
        for (int b = 0; b < d; ++b) acc += g(a, b) * v[static_cast<size_t>(b)];
        changed.push_back(acc);
      }
      t.spaces[static_cast<size_t>(j)] = changed;
    }
    PolyQ w = normalized_wronskian(s);
    r.n = w.degree();
    r.conclusion = w == normalized_wronskian(t);
    r.note = "basis change";
  } else {
    // Templates in canonical form with square-free Wronskian; three blocks of
    // degree one keep the Z spectrum simple at n = 3.
    for (;;) {
      int shape = std::uniform_int_distribution<int>(0, 4)(rng);
      std::vector<long> pool{-2, -1, 1, 2, 3};
      std::shuffle(pool.begin(), pool.end(), rng);
      auto lin = [&] { return PolyQ({random_gq(rng, shape == 4), Gq(1)}); };
      QuasiExpSpace s;
      if (shape == 0) s = {{Gq(pool[0])}, {{lin()}}};
      if (shape == 1) s = {{Gq(pool[0]), Gq(pool[1])}, {{lin()}, {lin()}}};
      if (shape == 2) s = {{Gq(pool[0]), Gq(pool[1]), Gq(pool[2])}, {{lin()}, {lin()}, {lin()}}};
      if (shape == 3) s = {{Gq(pool[0])}, {{lin(), PolyQ({Gq(0), Gq(0), Gq(1)})}}};
      if (shape == 4) s = {{Gq(pool[0])}, {{PolyQ({random_gq(rng, true), random_gq(rng, true), Gq(1)})}}};
      Tau0Match m;
      try {
        m = lemma_tau0_match(s, 1);
      } catch (const std::domain_error&) {
        continue;
      }
      if (!m.evaluated) continue;
      r.n = m.n;
      r.conclusion = m.matched;
      r.residual = m.discrepancy;
      r.note = "tau0 bridge";
      break;
    }
  }
  r.failed = !r.conclusion;
  return r;
}

// ---- criteria 9, 10: reality of quasi-exponential spans --------------------

InstanceRecord from_thm3(const QuasiExpSpace& s) {
  InstanceRecord r;
  Thm3Report t = thm3_harness(s);
  r.n = normalized_wronskian(s).degree();
  r.hypothesis = t.applicable && t.hypothesis;
  r.conclusion = t.conclusion;
  r.failed = t.falsified();
  r.note = t.applicable ? "applicable" : "not applicable";
  return r;
}

InstanceRecord thm3_sweep(Rng& rng, int id) {
  return from_thm3(random_space(rng, 2, 4, id % 2 == 1, false));
}

InstanceRecord shapiro_sweep(Rng& rng, int id) {
  return from_thm3(random_space(rng, 1, 4, id % 2 == 1, true));
}

// ---- criterion 11: Schur ---------------------------------------------------

// Independent oracle: m E_m = sum_k k p_k E_{m-k}, then a Leibniz determinant.
MultiPolyQ oracle_schur(const std::vector<int>& lam, int nv) {
  const int l = static_cast<int>(lam.size());
  const int order = lam.front() + l;
  std::vector<MultiPolyQ> e{MultiPolyQ(nv, Gq(1))};
  for (int m = 1; m <= order; ++m) {
    MultiPolyQ acc(nv);
    for (int k = 1; k <= std::min(m, nv); ++k)
      acc += Gq(k) * (MultiPolyQ::variable(k - 1, nv) * e[static_cast<size_t>(m - k)]);
    e.push_back(Gq::frac(1, m) * acc);
  }
  std::vector<int> perm(static_cast<size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  MultiPolyQ out(nv);
  do {
    int inv = 0;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b) inv += perm[static_cast<size_t>(a)] > perm[static_cast<size_t>(b)];
    MultiPolyQ term(nv, Gq(inv % 2 ? -1 : 1));
    for (int i = 0; i < l; ++i) {
      int idx = lam[static_cast<size_t>(i)] + perm[static_cast<size_t>(i)] - i;
      term *= idx < 0 ? MultiPolyQ(nv) : e[static_cast<size_t>(idx)];
    }
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

const std::vector<std::vector<int>> kSchurShapes{{1}, {2}, {1, 1}, {2, 1}, {3}, {2, 2}};

InstanceRecord schur_suite(Rng& rng, int id) {
  InstanceRecord r;
  r.hypothesis = true;
  const int shapes = static_cast<int>(kSchurShapes.size());
  if (id < shapes) {
    Partition lam = make_partition(kSchurShapes[static_cast<size_t>(id)]);
    r.n = lam.size();
    r.conclusion = schur_function(lam) == oracle_schur(lam.parts, lam.num_vars());
    r.failed = !r.conclusion;
    r.note = "Jacobi-Trudi";
    return r;
  }
  int g = id - shapes;
  std::vector<Gq> c;
  if (g < 25) {
    c = {Gq(g / 5 - 2), Gq(g % 5 - 2)};
  } else {
    c = {random_gq(rng, true), random_gq(rng, true)};
  }
  CoroSchurReport cs = coro_schur_harness(make_partition({2}), c);
  r.n = 2;
  r.hypothesis = cs.hypothesis;
  r.conclusion = cs.conclusion;
  r.failed = cs.falsified();
  r.note = g < 25 ? "grid" : "non-real perturbation";
  return r;
}

// ---- criteria 12, 13: Cherednik --------------------------------------------

InstanceRecord cherednik_relations(Rng& rng, int id) {
  InstanceRecord r;
  r.n = 1 + id / 20;
  std::vector<Gq> lambda = random_distinct(rng, r.n, false), mu;
  for (int k = 0; k < r.n; ++k) mu.push_back(random_gq(rng, false));
  DunklRep rep = build_dunkl_rep(lambda, mu);
  bool relations = check_relations(rep).empty();
  CMPair p = extract_cm_pair(rep);
  PolyQ expect = PolyQ::constant(Gq(1));
  for (const Gq& l : lambda) expect = expect * PolyQ::linear_root(l);
  bool spectrum = char_poly(p.X) == expect;
  bool character = regular_character(rep);
  r.hypothesis = true;
  r.conclusion = relations && spectrum && character && rank_exact(cm_defect(p.X, p.Z)) == 1;
  r.failed = !r.conclusion;
  if (!relations) r.note = "relation failure";
  if (!spectrum) r.note = "Spec(x_1) differs from lambda";
  if (!character) r.note = "character is not regular";
  return r;
}

InstanceRecord cherednik_reality(Rng& rng, int id) {
  InstanceRecord r;
  r.n = 2 + id / 60;
  int kind = id % 6;
  std::vector<Gq> lambda = random_distinct(rng, r.n, false), mu;
  for (int k = 0; k < r.n; ++k) mu.push_back(random_gq(rng, kind == 4));
  if (kind == 2 || kind == 3) {
    Gq m = random_gq(rng, true);
    mu[0] = m;
    mu[1] = m.conj();
  }
  if (kind == 5) {
    Gq l(random_rational(rng, 3, 4), Rational(1 + std::uniform_int_distribution<long>(0, 2)(rng), 2));
    lambda[0] = l;
    lambda[1] = l.conj();
    mu[1] = mu[0].conj();
  }
  static const char* kinds[] = {"real", "real", "paired mu", "paired mu", "complex mu", "paired lambda"};
  CherednikReport c = reality_harness(build_dunkl_rep(lambda, mu));
  r.hypothesis = c.hypothesis;
  r.conclusion = c.conclusion;
  r.failed = c.falsified();
  r.note = std::string(kinds[kind]) + (c.evaluated ? "" : ", not evaluated");
  return r;
}

struct SuiteDef {
  const char* name;
  int count;
  double time_limit;
  InstanceFn fn;
};

SuiteDef suite_def(int criterion) {
  switch (criterion) {
    case 1: return {"rank-one validity", 1200, 10.0, rank_one};
    case 2: return {"degree of Upsilon", 60, 120.0, upsilon_degree};
    case 3: return {"real spectra realify", 150, 0.0, real_fiber};
    case 4: return {"Sato consistency", 50, 0.0, sato_consistency};
    case 5: return {"tau specializations", 50, 0.0, tau_specialization};
    case 6: return {"bispectral symmetry", 30, 0.0, bispectral};
    case 7: return {"flow intertwining", 50, 0.0, flow_intertwining};
    case 8: return {"Wronskian stack", 120, 0.0, wronskian_stack};
    case 9: return {"quasi-exponential reality", 200, 0.0, thm3_sweep};
    case 10: return {"Shapiro special case", 200, 0.0, shapiro_sweep};
    case 11: return {"Schur", static_cast<int>(kSchurShapes.size()) + 45, 0.0, schur_suite};
    case 12: return {"Cherednik relations", 80, 300.0, cherednik_relations};
    case 13: return {"Cherednik reality", 120, 0.0, cherednik_reality};
    default: throw std::invalid_argument("unknown criterion " + std::to_string(criterion));
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const InstanceRecord& r) { return r.failed; }));
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CMREAL_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SuiteReport run_criterion(int criterion, const HarnessConfig& cfg) {
  SuiteDef def = suite_def(criterion);
  SuiteReport rep;
  rep.criterion = criterion;
  rep.name = def.name;
  rep.time_limit = def.time_limit;
  auto t0 = Clock::now();
  rep.records = run_pool(def.count, resolve_threads(cfg.threads), cfg.seed, criterion, def.fn);
  rep.seconds = seconds_since(t0);
  int hyp = static_cast<int>(std::count_if(rep.records.begin(), rep.records.end(), [](const InstanceRecord& r) { return r.hypothesis; }));
  rep.detail = std::to_string(rep.records.size()) + " instances, " + std::to_string(hyp) + " with hypothesis, " +
               std::to_string(rep.failures()) + " failed";
  return rep;
}

std::vector<SuiteReport> run_all(const HarnessConfig& cfg) {
  std::vector<SuiteReport> out;
  for (int c = 1; c <= kHarnessCriteria; ++c) out.push_back(run_criterion(c, cfg));
  return out;
}

SuiteReport determinism_check(const std::string& first_csv, const HarnessConfig& cfg) {
  SuiteReport rep;
  rep.criterion = 14;
  rep.name = "determinism";
  auto t0 = Clock::now();
  std::string second = render_csv(run_all(cfg), false);
  rep.seconds = seconds_since(t0);
  InstanceRecord r;
  r.hypothesis = true;
  r.conclusion = second == first_csv;
  r.failed = !r.conclusion;
  r.note = std::to_string(second.size()) + " bytes";
  rep.records.push_back(r);
  rep.detail = r.conclusion ? "byte-identical rerun" : "rerun differs";
  return rep;
}

std::string render_csv(const std::vector<SuiteReport>& reports, bool timing) {
  std::ostringstream out;
  out << "criterion,suite,instance,n,hypothesis,conclusion,failed,residual,note";
  if (timing) out << ",wall_ms";
  out << "\n";
  char buf[64];
  for (const SuiteReport& s : reports)
    for (const InstanceRecord& r : s.records) {
      std::snprintf(buf, sizeof buf, "%.6e", r.residual);
      out << s.criterion << "," << csv_escape(s.name) << "," << r.id << "," << r.n << "," << r.hypothesis << ","
          << r.conclusion << "," << r.failed << "," << buf << "," << csv_escape(r.note);
      if (timing) {
        std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
        out << "," << buf;
      }
      out << "\n";
    }
  return out.str();
}

Json render_summary(const std::vector<SuiteReport>& reports, const HarnessConfig& cfg) {
  Json suites = Json::array();
  int falsifications = 0;
  for (const SuiteReport& s : reports) {
    Json j{{"criterion", s.criterion}, {"name", s.name}, {"passed", s.passed()},
           {"instances", s.records.size()}, {"failed", s.failures()}, {"detail", s.detail}};
    if (cfg.timing) j["seconds"] = s.seconds;
    falsifications += s.failures();
    for (const InstanceRecord& r : s.records)
      if (r.failed && j["first_failure"].is_null()) j["first_failure"] = {{"instance", r.id}, {"n", r.n}, {"note", r.note}};
    suites.push_back(j);
  }
  return {{"seed", cfg.seed}, {"failures", falsifications}, {"suites", suites}};
}

}  // namespace cmreal
