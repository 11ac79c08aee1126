#include <cstdio>
#include <thread>

#include "qgate/acceptance.hpp"

int main() {
  qgate::acceptance::Config config;
  config.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  int failed = 0;
  for (const auto& c : qgate::acceptance::criteria()) {
    const auto r = qgate::acceptance::run(c.id, config);
    std::printf("%s (%.2f s)\n", qgate::acceptance::format(r).c_str(), r.seconds);
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(qgate::acceptance::criteria().size()) - failed,
              qgate::acceptance::criteria().size());
  return failed == 0 ? 0 : 1;
}
