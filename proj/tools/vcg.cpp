// Command-line front end: groups, multipliers, covers, products, limits
// of directed systems, and the named verification scenarios.
//
// Exit codes: 0 pass, 1 failure, 2 usage, 3 computational cap.

#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcg/vcg.hpp"

namespace {

  using namespace vcg;

  struct Output {
    std::string format = "text";
    bool        timing = true;

    void emit(std::vector<Report> const& reports) const {
      if (format == "json") {
        if (reports.size() == 1) {
          std::cout << to_json(reports[0], timing).dump(2) << "\n";
        } else {
          auto arr = nlohmann::ordered_json::array();
          for (auto const& r : reports) {
            arr.push_back(to_json(r, timing));
          }
          std::cout << arr.dump(2) << "\n";
        }
        return;
      }
      for (auto const& r : reports) {
        std::cout << to_text(r, timing);
      }
    }
  };

  int exit_code(std::vector<Report> const& reports) {
    for (auto const& r : reports) {
      if (!r.passed()) {
        return 1;
      }
    }
    return 0;
  }

  std::string subgroup_orders(std::vector<Subgroup> const& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      out += (i ? " > " : "") + std::to_string(s[i].size());
    }
    return out;
  }

  Report group_info(std::string const& spec) {
    Stopwatch  sw;
    Report     r;
    auto const P = load_group(spec);
    auto const& G = P.group;
    r.scenario   = "group info";
    r.input("group", spec);
    r.note("order", std::to_string(G.size()));
    r.note("identity", G.label(G.identity()));
    r.note("abelian", G.is_abelian() ? "yes" : "no");
    r.note("exponent", std::to_string(G.exponent()));
    r.note("center order", std::to_string(center(G).size()));
    r.note("abelianization", abelianization(G).to_string());
    r.note("derived series", subgroup_orders(series(G, SeriesKind::derived)));
    bool const nil = is_nilpotent(G);
    r.note("nilpotent", nil ? "yes" : "no");
    if (nil) {
      r.note("nilpotency class", std::to_string(series(G, SeriesKind::lower_central).size() - 1));
    }
    r.note("presentation", P.presentation.to_string());
    if (G.size() <= 32) {
      std::string labels;
      for (auto const& l : G.labels()) {
        labels += (labels.empty() ? "" : " ") + l;
      }
      r.note("elements", labels);
    }
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  Report multiplier_report(std::string const& spec, std::string const& method) {
    Stopwatch  sw;
    Report     r;
    auto const G = load_group(spec).group;
    r.scenario   = "multiplier";
    r.input("group", spec);
    r.input("method", method);
    std::optional<FgAbelianGroup> bar, coc;
    if (method != "cocycle") {
      bar = schur_multiplier_bar(G).group;
      r.note("bar", bar->to_string());
    }
    if (method != "bar") {
      coc = schur_multiplier_cocycle(G).group;
      r.note("cocycle", coc->to_string());
    }
    auto const M = bar ? *bar : *coc;
    r.note("multiplier", M.to_string());
    r.note("order", std::to_string(M.order()));
    if (bar && coc) {
      r.check("methods agree", *bar == *coc);
    }
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  Report cover_report(std::string const& spec, std::string const& method) {
    Stopwatch  sw;
    Report     r;
    auto const G = load_group(spec).group;
    r.scenario   = "cover";
    r.input("group", spec);
    r.input("method", method);
    auto const cert = method == "cocycle" ? cover_from_cocycle(G)
                                          : cover_from_splitting(G).certificate;
    r.note("certificate", cert.summary());
    r.note("verbal subgroup order", std::to_string(cert.verbal_order()));
    r.note("marginal subgroup order", std::to_string(cert.marginal_order()));
    r.check("certificate revalidates", cert.revalidate());
    r.check("epimorphic image of F/[R,F]", bool(lift_epimorphism_check(cert)));
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  // Syllables "label@factor" separated by spaces, factors numbered from 0.
  FreeProductElement parse_free_word(std::vector<FiniteGroup> const& fs,
                                     std::string const&              text) {
    std::istringstream        in(text);
    std::string               tok;
    std::vector<FreeSyllable> s;
    while (in >> tok) {
      auto const at = tok.rfind('@');
      if (at == std::string::npos) {
        throw InvalidInput("free word: expected label@factor, got '" + tok + "'");
      }
      auto const f = std::stoul(tok.substr(at + 1));
      if (f >= fs.size()) {
        throw InvalidInput("free word: factor " + std::to_string(f) + " out of range");
      }
      auto const x = fs[f].find(tok.substr(0, at));
      if (!x) {
        throw InvalidInput("free word: no element '" + tok.substr(0, at) + "' in factor "
                           + std::to_string(f));
      }
      s.push_back({f, *x});
    }
    return FreeProductElement(fs, s);
  }

  Report product_report(std::vector<std::string> const& specs, std::string const& kind,
                        std::string const& word) {
    Stopwatch sw;
    Report    r;
    r.scenario = "product";
    std::vector<FiniteGroup> fs;
    std::string              joined;
    for (auto const& s : specs) {
      fs.push_back(load_group(s).group);
      joined += (joined.empty() ? "" : ",") + s;
    }
    r.input("factors", joined);
    r.input("kind", kind);
    if (kind == "direct") {
      auto const d = direct_product(fs);
      r.note("order", std::to_string(d.group.size()));
      r.note("abelianization", abelianization(d.group).to_string());
      r.note("multiplier", schur_multiplier(d.group).group.to_string());
    } else if (kind == "nilpotent2") {
      auto const p         = nilpotent2_product(fs);
      auto const predicted = nilpotent2_predicted_order(fs);
      r.note("order", std::to_string(p.group().size()));
      r.note("abelianization", abelianization(p.group()).to_string());
      r.check("order is prod |G_i| times the tensor products of abelianizations",
              p.group().size() == predicted, std::to_string(predicted));
    } else {
      if (word.empty()) {
        throw InvalidInput("--free-normal-form needs --word");
      }
      auto const w = parse_free_word(fs, word);
      r.input("word", word);
      r.note("normal form", w.to_string(fs));
      r.note("syllables", std::to_string(w.length()));
      r.note("inverse", fp_inverse(fs, w).to_string(fs));
      r.check("w w^-1 reduces to 1", fp_multiply(fs, w, fp_inverse(fs, w)).is_identity());
    }
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  Report limit_report(std::string const& path, std::string const& op) {
    Stopwatch  sw;
    Report     r;
    auto const file = load_system_file(path);
    auto const& D   = file.system;
    r.scenario      = "limit";
    r.input("system", path);
    r.input("op", op);
    r.note("stages", std::to_string(D.size()));
    auto const valid = validate_directed_system(D);
    if (!r.check("directed system", bool(valid), valid.violation)) {
      r.conclude();
      return r;
    }
    auto const c = colimit(D);
    r.note("maximum", D.name(c.maximum));
    if (op == "colimit") {
      auto const q   = colimit_by_quotient(D);
      auto const iso = is_isomorphic(q.group, c.group);
      r.note("order", std::to_string(c.group.size()));
      r.note("abelianization", abelianization(c.group).to_string());
      r.check("quotient construction agrees", iso.isomorphic, iso.reason);
    } else if (op == "multiplier") {
      auto const m = multiplier_colimit_check(D);
      r.note("limit of multipliers", m.colimit_of_multipliers.to_string());
      r.note("multiplier of limit", m.multiplier_of_colimit.to_string());
      r.check("induced maps are functorial", m.functorial, m.detail);
      r.check("comparison map is an isomorphism", m.comparison_isomorphism, m.detail);
    } else {
      auto const res = induced_cover_system_search(D);
      if (!res) {
        r.note("obstruction", res.obstruction->detail);
        r.check("induced system of covers", false, res.obstruction->detail);
      } else {
        auto const cert = colimit_cover_check(*res.system);
        r.note("certificate", cert.summary());
        r.check("limit cover certificate revalidates", cert.revalidate());
      }
    }
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  std::vector<Report> verify(std::string const& name, ScenarioOptions const& opt) {
    if (name != "paper") {
      return {run_scenario(name, opt)};
    }
    std::vector<Report> out;
    for (auto const& n : scenario_names()) {
      out.push_back(run_scenario(n, ScenarioOptions{{}, opt.seed, opt.bound}));
    }
    Report summary;
    summary.scenario = "paper";
    std::size_t passed = 0;
    for (auto const& r : out) {
      summary.check(r.scenario, r.passed(), to_string(r.verdict));
      passed += r.passed();
      summary.seconds += r.seconds;
    }
    summary.note("scenarios passed",
                 std::to_string(passed) + "/" + std::to_string(out.size()));
    summary.conclude();
    out.push_back(std::move(summary));
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur multipliers, covering groups and direct limits of finite groups"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--no-timing{false}", out.timing, "Omit timings from reports");

  std::vector<Report> reports;
  std::function<void()> action;

  auto* group = app.add_subcommand("group", "Group commands");
  group->require_subcommand(1);
  auto*       info = group->add_subcommand("info", "Order, centre, series, presentation");
  std::string info_spec;
  info->add_option("group", info_spec, "Catalog name, perm:..., pres:... or file:...")
      ->required();
  info->callback([&] { action = [&] { reports.push_back(group_info(info_spec)); }; });

  auto*       mult = app.add_subcommand("multiplier", "Schur multiplier");
  std::string mult_spec, mult_method = "both";
  mult->add_option("group", mult_spec)->required();
  mult->add_option("--method", mult_method)
      ->check(CLI::IsMember({"bar", "cocycle", "both"}))
      ->capture_default_str();
  mult->callback([&] {
    action = [&] { reports.push_back(multiplier_report(mult_spec, mult_method)); };
  });

  auto*       cov = app.add_subcommand("cover", "Covering group with certificate");
  std::string cov_spec, cov_method = "cocycle";
  cov->add_option("group", cov_spec)->required();
  cov->add_option("--method", cov_method)
      ->check(CLI::IsMember({"cocycle", "splitting"}))
      ->capture_default_str();
  cov->callback([&] {
    action = [&] { reports.push_back(cover_report(cov_spec, cov_method)); };
  });

  auto*                    prod = app.add_subcommand("product", "Products of groups");
  std::vector<std::string> prod_specs;
  std::string              prod_word;
  bool                     direct = false, nil2 = false, free_nf = false;
  prod->add_option("groups", prod_specs, "Two or more factors")->required()->expected(2, -1);
  auto* f1 = prod->add_flag("--direct", direct, "Direct product");
  auto* f2 = prod->add_flag("--nilpotent2", nil2, "Second nilpotent product");
  auto* f3 = prod->add_flag("--free-normal-form", free_nf, "Reduce a word of the free product");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);
  prod->add_option("--word", prod_word, "Syllables label@factor, e.g. \"r@0 a@1 r@0\"");
  prod->callback([&] {
    action = [&] {
      std::string const kind = nil2 ? "nilpotent2" : (free_nf ? "free" : "direct");
      reports.push_back(product_report(prod_specs, kind, prod_word));
    };
  });

  auto*       lim = app.add_subcommand("limit", "Direct limit of a system file");
  std::string lim_file, lim_op = "colimit";
  lim->add_option("file", lim_file)->required()->check(CLI::ExistingFile);
  lim->add_option("--op", lim_op)
      ->check(CLI::IsMember({"colimit", "multiplier", "cover"}))
      ->capture_default_str();
  lim->callback([&] { action = [&] { reports.push_back(limit_report(lim_file, lim_op)); }; });

  auto*           ver = app.add_subcommand("verify", "Run a named scenario");
  std::string     scenario;
  std::string     factors;
  ScenarioOptions opt;
  std::vector<std::string> choices = scenario_names();
  choices.push_back("paper");
  ver->add_option("scenario", scenario)->required()->check(CLI::IsMember(choices));
  ver->add_option("--factors", factors, "wiegold: two groups, comma separated");
  ver->add_option("--seed", opt.seed, "induced-obstruction: seed for the random posets")
      ->capture_default_str();
  ver->add_option("--bound", opt.bound, "free-product-counterexample syllable bound")
      ->capture_default_str();
  ver->callback([&] {
    action = [&] {
      if (!factors.empty()) {
        std::string       part;
        std::stringstream ss(factors);
        while (std::getline(ss, part, ',')) {
          opt.factors.push_back(part);
        }
      }
      reports = verify(scenario, opt);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    action();
  } catch (InvalidInput const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (CapExceeded const& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (std::exception const& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  out.emit(reports);
  return exit_code(reports);
}
