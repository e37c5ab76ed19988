#include <cliffalg_selftest/criteria.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& c : cliffalg::selftest::criteria()) {
    const auto r = cliffalg::selftest::run_criterion(c, seed);
    std::printf("criterion %2d %s: %s (%.2fs of %.0fs) %s\n", r.id, r.passed() ? "PASS" : "FAIL", r.title.c_str(),
                r.seconds, r.budget_seconds, r.outcome.detail.c_str());
    if (!r.outcome.counterexample.is_null())
      std::printf("  counterexample: %s\n", r.outcome.counterexample.dump().c_str());
    if (!r.passed()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(cliffalg::selftest::criteria().size()) - failed,
              cliffalg::selftest::criteria().size());
  return failed == 0 ? 0 : 1;
}
