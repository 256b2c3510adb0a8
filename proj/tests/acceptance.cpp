// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cmreal/harness.hpp"

using namespace cmreal;

namespace {

void print(const SuiteReport& s) {
  std::string limit = s.time_limit > 0 ? " limit " + std::to_string(static_cast<int>(s.time_limit)) + "s" : "";
  std::printf("[%s] %2d %-28s %s; %.1fs%s%s\n", s.passed() ? "PASS" : "FAIL", s.criterion, s.name.c_str(),
              s.detail.c_str(), s.seconds, limit.c_str(), s.within_time() ? "" : " EXCEEDED");
  for (const InstanceRecord& r : s.records)
    if (r.failed) {
      std::printf("       first failure: instance %d, n=%d, %s\n", r.id, r.n, r.note.c_str());
      break;
    }
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  HarnessConfig cfg;
  if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 10);
  std::printf("acceptance run, seed %llu, %d thread(s)\n", static_cast<unsigned long long>(cfg.seed),
              resolve_threads(cfg.threads));
  std::vector<SuiteReport> reports;
  int failed = 0;
  for (int c = 1; c <= kHarnessCriteria; ++c) {
    reports.push_back(run_criterion(c, cfg));
    print(reports.back());
    failed += !reports.back().passed();
  }
  SuiteReport det = determinism_check(render_csv(reports, false), cfg);
  print(det);
  failed += !det.passed();
  std::printf("%d of %d criteria passed\n", kHarnessCriteria + 1 - failed, kHarnessCriteria + 1);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
