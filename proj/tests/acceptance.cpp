// One line per acceptance criterion; exit status is the number of failures.
#include "glinf/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

bool end_to_end(std::string& detail, double& seconds) {
  const std::string cmd = std::string("\"") + GLINF_CLI_PATH + "\" sweep --format csv --out /dev/null 2>/dev/null";
  const auto start = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  detail = "sweep exit code " + std::to_string(code);
  return code == 0 && seconds < 600;
}

}  // namespace

int main() {
  int failures = 0;
  auto line = [&](int id, const std::string& title, bool passed, const std::string& detail, double seconds) {
    failures += !passed;
    std::printf("%s criterion %2d: %s [%s, %.2f s]\n", passed ? "PASS" : "FAIL", id, title.c_str(), detail.c_str(),
                seconds);
    std::fflush(stdout);
  };

  glinf::Sweep sweep;
  for (int id = 1; id <= glinf::Sweep::kCriteria; ++id) {
    const auto r = sweep.run(id);
    line(r.id, r.title, r.passed, r.detail, r.seconds);
  }

  std::string detail;
  double seconds = 0;
  const bool ok = end_to_end(detail, seconds);
  line(10, "end-to-end sweep command exits 0 within 10 minutes", ok, detail, seconds);

  std::printf("%d of %d criteria failed\n", failures, glinf::Sweep::kCriteria + 1);
  return failures;
}
