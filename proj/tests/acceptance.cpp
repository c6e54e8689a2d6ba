// One line per criterion: "AC<n> PASS|FAIL <scenario> (<seconds> s)".
// Failed checks are listed under the line. Exit status 1 if any fails.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "vcg/vcg.hpp"

int main() {
  using namespace vcg;
  auto const& names  = scenario_names();
  int         failed = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::string         line = "AC" + std::to_string(i + 1);
    std::vector<std::string> notes;
    bool                ok = false;
    double              s  = 0;
    try {
      auto const r = run_scenario(names[i]);
      ok           = r.passed();
      s            = r.seconds;
      for (auto const& c : r.checks) {
        if (!c.ok) {
          notes.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
        }
      }
    } catch (std::exception const& e) {
      notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s %s %s (%s s)\n", line.c_str(), ok ? "PASS" : "FAIL", names[i].c_str(),
                format_seconds(s).c_str());
    for (auto const& n : notes) {
      std::printf("    %s\n", n.c_str());
    }
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", int(names.size()) - failed, names.size());
  return failed == 0 ? 0 : 1;
}
