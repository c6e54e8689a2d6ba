#pragma once

// Reports emitted by the command line and the scenario runner.

#include <chrono>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace vcg {

  enum class Verdict { pass, fail, verified_to_horizon, obstruction };

  inline std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      case Verdict::verified_to_horizon:
        return "verified-to-horizon";
      case Verdict::obstruction:
        return "obstruction";
    }
    return "fail";
  }

  struct ReportCheck {
    std::string name;
    bool        ok = false;
    std::string detail;
  };

  struct Report {
    std::string                                      scenario;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> evidence;
    std::vector<ReportCheck>                         checks;
    Verdict                                          verdict = Verdict::fail;
    double                                           seconds = 0;

    void input(std::string key, std::string value) {
      inputs.emplace_back(std::move(key), std::move(value));
    }

    void note(std::string key, std::string value) {
      evidence.emplace_back(std::move(key), std::move(value));
    }

    bool check(std::string name, bool ok, std::string detail = "") {
      checks.push_back({std::move(name), ok, std::move(detail)});
      return ok;
    }

    bool all_checks() const {
      for (auto const& c : checks) {
        if (!c.ok) {
          return false;
        }
      }
      return true;
    }

    // The verdict is `success` when every check holds and fail otherwise.
    void conclude(Verdict success = Verdict::pass) {
      verdict = all_checks() ? success : Verdict::fail;
    }

    bool passed() const noexcept {
      return verdict != Verdict::fail;
    }
  };

  class Stopwatch {
   public:
    Stopwatch() : _t0(std::chrono::steady_clock::now()) {}

    double seconds() const {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - _t0).count();
    }

   private:
    std::chrono::steady_clock::time_point _t0;
  };

  inline std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
  }

  inline std::string to_text(Report const& r, bool timing = true) {
    std::string out = "scenario: " + r.scenario + "\n";
    for (auto const& [k, v] : r.inputs) {
      out += "  input    " + k + " = " + v + "\n";
    }
    for (auto const& [k, v] : r.evidence) {
      out += "  evidence " + k + " = " + v + "\n";
    }
    for (auto const& c : r.checks) {
      out += std::string("  check    [") + (c.ok ? "ok" : "FAILED") + "] " + c.name;
      if (!c.detail.empty()) {
        out += ": " + c.detail;
      }
      out += "\n";
    }
    out += "  verdict  " + to_string(r.verdict) + "\n";
    if (timing) {
      out += "  seconds  " + format_seconds(r.seconds) + "\n";
    }
    return out;
  }

  // Schema: {scenario, inputs: {..}, evidence: [[key, value], ..],
  // checks: [{name, ok, detail}], verdict, passed, seconds}.
  inline nlohmann::ordered_json to_json(Report const& r, bool timing = true) {
    nlohmann::ordered_json j;
    j["scenario"] = r.scenario;
    j["inputs"]   = nlohmann::ordered_json::object();
    for (auto const& [k, v] : r.inputs) {
      j["inputs"][k] = v;
    }
    j["evidence"] = nlohmann::ordered_json::array();
    for (auto const& [k, v] : r.evidence) {
      j["evidence"].push_back({k, v});
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (auto const& c : r.checks) {
      j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    j["verdict"] = to_string(r.verdict);
    j["passed"]  = r.passed();
    if (timing) {
      j["seconds"] = r.seconds;
    }
    return j;
  }

}  // namespace vcg
