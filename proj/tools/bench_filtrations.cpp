// Times the verification sweeps serially and with the OpenMP kernels on the
// same workloads and checks that both modes agree member for member. Each
// run rebuilds its filtration so the shared colon memo starts cold.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "kzl/binomial_edge.hpp"
#include "kzl/lattice.hpp"

using namespace kzl;

namespace {

struct Workload {
  std::string name;
  std::function<Filtration()> build;
};

bool reports_agree(const VerifyReport& a, const VerifyReport& b) {
  if (a.ok != b.ok || a.outcomes.size() != b.outcomes.size()) return false;
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    if (a.outcomes[i].member_key != b.outcomes[i].member_key) return false;
    if (a.outcomes[i].ok != b.outcomes[i].ok) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Workload> workloads;
  workloads.push_back({"path-6 edge ring", [] {
                         Graph g(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
                         return koszul_filtration(build_context(g));
                       }});
  workloads.push_back({"K5 edge ring", [] {
                         Graph g(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                     {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
                         return koszul_filtration(build_context(g));
                       }});
  workloads.push_back({"B3 join-meet ring", [] {
                         Poset antichain({"a", "b", "c"}, {});
                         auto b3 = DistributiveLattice::from_poset(antichain);
                         return hibi_koszul_filtration(hibi_host(b3), b3);
                       }});

  std::printf("%-26s %8s %12s %12s   %s\n", "workload", "members", "serial[ms]",
              "openmp[ms]", "agree");
  for (auto& w : workloads) {
    auto time_mode = [&](Exec mode, VerifyReport& report) {
      Filtration f = w.build();  // cold memo
      auto t0 = std::chrono::steady_clock::now();
      report = verify(f, mode, /*force_search=*/true);
      auto delta = std::chrono::steady_clock::now() - t0;
      return std::chrono::duration<double, std::milli>(delta).count();
    };
    VerifyReport serial_report, parallel_report;
    double serial_ms = time_mode(Exec::Serial, serial_report);
    double parallel_ms = time_mode(Exec::Parallel, parallel_report);
    std::printf("%-26s %8zu %12.1f %12.1f   %s\n", w.name.c_str(),
                static_cast<std::size_t>(serial_report.outcomes.size() + 1), serial_ms,
                parallel_ms, reports_agree(serial_report, parallel_report) ? "yes" : "NO");
  }
  return 0;
}
