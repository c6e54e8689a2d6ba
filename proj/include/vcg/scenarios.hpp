#pragma once

// Named checks, one per acceptance criterion, each producing a Report.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vcg/catalog.hpp"
#include "vcg/colimit.hpp"
#include "vcg/cover.hpp"
#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"
#include "vcg/free_product.hpp"
#include "vcg/homology.hpp"
#include "vcg/lattice.hpp"
#include "vcg/products.hpp"
#include "vcg/report.hpp"
#include "vcg/system_file.hpp"
#include "vcg/todd_coxeter.hpp"
#include "vcg/variety.hpp"

namespace vcg {

  struct ScenarioOptions {
    std::vector<std::string> factors;        // wiegold: two group specs
    std::uint32_t            seed   = 5;     // random posets, SNF and free-product samples
    std::size_t              bound  = 4;     // free-product-counterexample
  };

  namespace detail {
    inline std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    inline std::string join(std::vector<std::string> const& v, std::string const& sep) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? sep : "") + v[i];
      }
      return out;
    }

    // Splitting covers of C2^2 isomorphic to D8 and to Q8, reached by
    // twisting the complement.
    struct KleinCovers {
      SplittingCover dihedral;
      SplittingCover quaternion;
      std::size_t    dihedral_twist   = 0;
      std::size_t    quaternion_twist = 0;
    };

    inline std::optional<KleinCovers> klein_covers(FiniteGroup const& V) {
      auto const D8 = make_group("D8");
      auto const Q8 = make_group("Q8");
      auto const d  = relation_module_splitting(V);
      std::optional<SplittingCover> cd, cq;
      std::size_t                   td = 0, tq = 0, k = 0;
      for (auto const& tw : simple_twists(d, 16)) {
        auto s = cover_from_splitting(V, twisted_complement(d, tw));
        if (!cd && is_isomorphic(s.certificate.cover(), D8)) {
          cd = std::move(s);
          td = k;
        } else if (!cq && is_isomorphic(s.certificate.cover(), Q8)) {
          cq = std::move(s);
          tq = k;
        }
        ++k;
        if (cd && cq) {
          return KleinCovers{std::move(*cd), std::move(*cq), td, tq};
        }
      }
      return std::nullopt;
    }

    inline std::vector<Homomorphism> all_homomorphisms(FiniteGroup const& S,
                                                       FiniteGroup const& T) {
      auto const  P = present(S);
      std::size_t k = P.generator_elements.size();
      std::vector<Element>      img(k, T.identity());
      std::vector<Element>      elems(T.size());
      std::iota(elems.begin(), elems.end(), Element(0));
      std::vector<std::size_t>  pos(k, 0);
      std::vector<Homomorphism> out;
      for (;;) {
        for (std::size_t i = 0; i < k; ++i) {
          img[i] = elems[pos[i]];
        }
        if (auto h = Homomorphism::try_from_generators(S, T, P.generator_elements, img)) {
          out.push_back(std::move(*h));
        }
        std::size_t i = 0;
        while (i < k && ++pos[i] == T.size()) {
          pos[i++] = 0;
        }
        if (i == k) {
          break;
        }
      }
      return out;
    }

    // A tree poset on 2..4 nodes whose root is the maximum; every edge
    // points to a higher index. Stages are drawn from C2, C2^2, C3 and
    // maps uniformly from all homomorphisms.
    inline DirectedSystem random_tree_system(std::uint32_t seed, std::string& description) {
      std::mt19937                   rng(seed);
      std::vector<std::string> const pool{"C2", "C2^2", "C3"};
      std::size_t const              n = 2 + rng() % 3;
      std::vector<FiniteGroup>       gs;
      std::vector<std::string>       names;
      for (std::size_t i = 0; i < n; ++i) {
        auto const& p = pool[rng() % pool.size()];
        gs.push_back(make_group(p));
        names.push_back(std::to_string(i) + ":" + p);
      }
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        rel.emplace_back(i, i + 1 + rng() % (n - 1 - i));
      }
      DirectedSystem D(gs, rel, names);
      std::vector<std::string> edges;
      for (auto [i, j] : rel) {
        auto const hs = all_homomorphisms(gs[i], gs[j]);
        auto const& h = hs[rng() % hs.size()];
        D.set_map(i, j, h);
        edges.push_back(names[i] + " -> " + names[j]
                        + (h.is_injective() ? " (injective)" : "")
                        + (h.image().size() == 1 ? " (trivial)" : ""));
      }
      description = join(edges, ", ");
      return D;
    }

    inline PresentedGroup cat(std::string const& name) {
      return catalog_group(name);
    }

    // Five systems with stages of order at most 8.
    inline std::vector<std::pair<std::string, DirectedSystem>> small_systems() {
      std::vector<std::pair<std::string, DirectedSystem>> out;
      {
        auto a = cat("C2"), b = cat("C2^2"), c = cat("C2^3");
        DirectedSystem D({a.group, b.group, c.group}, {{0, 1}, {1, 2}},
                         {"C2", "C2^2", "C2^3"});
        D.set_map(0, 1, map_from_images(a, b, {"a1"}));
        D.set_map(1, 2, map_from_images(b, c, {"a1", "a2"}));
        out.emplace_back("chain C2 -> C2^2 -> C2^3", std::move(D));
      }
      {
        auto a = cat("C2"), b = cat("C4"), c = cat("C8");
        DirectedSystem D({a.group, b.group, c.group}, {{0, 1}, {1, 2}},
                         {"C2", "C4", "C8"});
        D.set_map(0, 1, map_from_images(a, b, {"a^2"}));
        D.set_map(1, 2, map_from_images(b, c, {"a^2"}));
        out.emplace_back("chain C2 -> C4 -> C8", std::move(D));
      }
      {
        auto bot = cat("C2"), l = cat("C2^2"), r = cat("C4"), top = cat("C2xC4");
        DirectedSystem D({bot.group, l.group, r.group, top.group},
                         {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                         {"C2", "C2^2", "C4", "C2xC4"});
        D.set_map(0, 1, map_from_images(bot, l, {"a1"}));
        D.set_map(0, 2, map_from_images(bot, r, {"a^2"}));
        D.set_map(1, 3, map_from_images(l, top, {"a2^2", "a1"}));
        D.set_map(2, 3, map_from_images(r, top, {"a2"}));
        out.emplace_back("diamond C2 < C2^2, C4 < C2xC4", std::move(D));
      }
      {
        auto a = cat("C2^3"), b = cat("C2^2"), c = cat("D8");
        DirectedSystem D({a.group, b.group, c.group}, {{0, 1}, {1, 2}},
                         {"C2^3", "C2^2", "D8"});
        D.set_map(0, 1, map_from_images(a, b, {"a1", "a2", "1"}));
        D.set_map(1, 2, map_from_images(b, c, {"s", "r^2"}));
        out.emplace_back("chain C2^3 ->> C2^2 -> D8", std::move(D));
      }
      out.emplace_back("subgroups of D8", subgroup_system(make_group("D8")));
      return out;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Scenarios
  ////////////////////////////////////////////////////////////////////////

  inline Report verify_multipliers() {
    Stopwatch sw;
    Report    r;
    r.scenario = "multipliers";
    std::vector<std::pair<std::string, FgAbelianGroup>> table;
    for (int n = 1; n <= 16; ++n) {
      table.emplace_back("C" + std::to_string(n), FgAbelianGroup());
    }
    table.emplace_back("C2^2", FgAbelianGroup({2}));
    table.emplace_back("C2^3", FgAbelianGroup({2, 2, 2}));
    table.emplace_back("C2^4", FgAbelianGroup({2, 2, 2, 2, 2, 2}));
    for (std::uint64_t m = 2; m <= 6; ++m) {
      for (std::uint64_t n = m; n <= 6; ++n) {
        table.emplace_back("C" + std::to_string(m) + "xC" + std::to_string(n),
                           FgAbelianGroup::from_cyclic_orders({std::gcd(m, n)}));
      }
    }
    table.emplace_back("Q8", FgAbelianGroup());
    table.emplace_back("D8", FgAbelianGroup({2}));
    r.input("entries", std::to_string(table.size()));
    r.input("methods", "bar, cocycle");
    for (auto const& [name, expected] : table) {
      auto const G   = make_group(name);
      auto const bar = schur_multiplier_bar(G).group;
      auto const coc = schur_multiplier_cocycle(G).group;
      r.check("M(" + name + ") = " + expected.to_string(), bar == expected && coc == expected,
              "bar " + bar.to_string() + ", cocycle " + coc.to_string());
    }
    auto const t = sw.seconds();
    r.check("total runtime under 60 s", t < 60, format_seconds(t) + " s");
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  inline Report verify_dual_cover() {
    Stopwatch sw;
    Report    r;
    r.scenario = "dual-cover";
    r.input("groups", "catalog, order <= 12");
    for (auto const& name : catalog_small()) {
      auto const G  = make_group(name);
      auto const M  = schur_multiplier(G).group;
      auto const c  = cover_from_cocycle(G);
      auto const s  = cover_from_splitting(G);
      auto const n  = G.size() * M.order();
      bool const ok = c.cover().size() == n && s.certificate.cover().size() == n
                      && c.revalidate() && s.certificate.revalidate();
      r.check(name, ok,
              "|G| = " + std::to_string(G.size()) + ", M = " + M.to_string()
                  + ", cocycle cover " + std::to_string(c.cover().size())
                  + ", splitting cover " + std::to_string(s.certificate.cover().size()));
    }
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  inline Report verify_d8q8() {
    Stopwatch sw;
    Report    r;
    r.scenario       = "d8q8";
    auto const V     = make_group("C2^2");
    auto const D8    = make_group("D8");
    auto const Q8    = make_group("Q8");
    auto const d8    = check_v_cover(D8, center(D8), V, Variety::abelian(), std::nullopt);
    auto const q8    = check_v_cover(Q8, center(Q8), V, Variety::abelian(), std::nullopt);
    r.input("base", "C2^2");
    r.check("(D8, Z(D8)) covers C2^2", bool(d8), d8 ? d8.certificate->summary() : d8.reason);
    r.check("(Q8, {1, -1}) covers C2^2", bool(q8), q8 ? q8.certificate->summary() : q8.reason);
    auto const iso = is_isomorphic(D8, Q8);
    r.check("D8 and Q8 are not isomorphic", !iso.isomorphic, iso.reason);
    auto const kc = detail::klein_covers(V);
    r.check("splitting covers reach both types", kc.has_value(),
            kc ? "D8 at twist " + std::to_string(kc->dihedral_twist) + ", Q8 at twist "
                     + std::to_string(kc->quaternion_twist)
               : "only one type among 16 twists");
    if (kc) {
      r.note("D8 complement", detail::join([&] {
               std::vector<std::string> w;
               for (auto const& x : kc->dihedral.complement_words) {
                 w.push_back(x.to_string());
               }
               return w;
             }(), "; "));
      r.note("Q8 complement", detail::join([&] {
               std::vector<std::string> w;
               for (auto const& x : kc->quaternion.complement_words) {
                 w.push_back(x.to_string());
               }
               return w;
             }(), "; "));
    }
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  inline Report verify_wiegold(ScenarioOptions const& opt = {}) {
    Stopwatch sw;
    Report    r;
    r.scenario = "wiegold";
    if (!opt.factors.empty()) {
      if (opt.factors.size() != 2) {
        throw InvalidInput("wiegold: --factors takes two groups");
      }
      r.input("factors", opt.factors[0] + "," + opt.factors[1]);
      auto const A = make_group(opt.factors[0]);
      auto const B = make_group(opt.factors[1]);
      auto const w = wiegold_cover(A, B);
      auto const predicted = nilpotent2_predicted_order({w.cover_a.cover(), w.cover_b.cover()});
      r.note("cover order", std::to_string(w.product.group().size()));
      r.note("certificate", w.certificate.summary());
      r.check("order matches |A*| |B*| |A*ab (x) B*ab|", w.product.group().size() == predicted,
              std::to_string(predicted));
      r.check("certificate revalidates", w.certificate.revalidate());
    } else {
      r.input("factors", "C2,C2 and C2xC2,C2xC2 with D8 covers");
      auto const C2 = make_group("C2");
      auto const D8 = make_group("D8");
      auto const V  = make_group("C2^2");
      auto const w1 = wiegold_cover(C2, C2);
      auto const i1 = is_isomorphic(w1.product.group(), D8);
      r.check("C2 *2 C2 is D8", i1.isomorphic, i1.reason);
      r.check("C2 *2 C2 covers C2^2", w1.certificate.revalidate(), w1.certificate.summary());
      auto const cD8 = check_v_cover(D8, center(D8), V, Variety::abelian(), std::nullopt).value();
      auto const w2  = wiegold_cover(cD8, cD8);
      auto const n2  = w2.product.group().size();
      r.check("|D8 *2 D8| = 1024", n2 == 1024, std::to_string(n2));
      r.check("A = [2,2,2,2,2,2]",
              w2.certificate.multiplier() == FgAbelianGroup({2, 2, 2, 2, 2, 2})
                  && abelian_invariants(w2.certificate.A()) == FgAbelianGroup({2, 2, 2, 2, 2, 2}),
              abelian_invariants(w2.certificate.A()).to_string());
      auto const ib = is_isomorphic(w2.certificate.base(), make_group("C2^4"));
      r.check("base is C2^4", ib.isomorphic, ib.reason);
      r.check("D8 *2 D8 covers C2^4", w2.certificate.revalidate(), w2.certificate.summary());
      auto const t = sw.seconds();
      r.check("runtime under 5 min", t < 300, format_seconds(t) + " s");
    }
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  inline Report verify_sylow() {
    Stopwatch sw;
    Report    r;
    r.scenario   = "sylow";
    auto const G = make_group("C2^2xC3^2");
    r.input("group", "C2^2xC3^2");
    auto const s = sylow_cover(G);
    r.note("certificate", s.certificate.summary());
    r.check("|cover| = 216", s.certificate.cover().size() == 216,
            std::to_string(s.certificate.cover().size()));
    r.check("A = [6]", abelian_invariants(s.certificate.A()) == FgAbelianGroup({6}),
            abelian_invariants(s.certificate.A()).to_string());
    r.check("certificate revalidates", s.certificate.revalidate());
    auto const bar = schur_multiplier_bar(G).group;
    auto const coc = schur_multiplier_cocycle(G).group;
    FgAbelianGroup sum;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < s.sylows.size(); ++i) {
      auto const M = schur_multiplier(as_group(s.sylows[i]).group).group;
      parts.push_back("M(S_" + std::to_string(s.primes[i]) + ") = " + M.to_string());
      sum = direct_sum(sum, M);
    }
    r.note("sylow multipliers", detail::join(parts, ", "));
    r.check("M(G) = [6] by both methods", bar == FgAbelianGroup({6}) && coc == bar,
            "bar " + bar.to_string() + ", cocycle " + coc.to_string());
    r.check("M(G) = product of the Sylow multipliers", sum == bar, sum.to_string());
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  inline Report verify_induced_obstruction(ScenarioOptions const& opt = {}) {
    Stopwatch sw;
    Report    r;
    r.scenario   = "induced-obstruction";
    auto const V = make_group("C2^2");
    auto const kc = detail::klein_covers(V);
    if (!kc) {
      r.check("D8 and Q8 splitting covers of C2^2", false);
      r.conclude();
      return r;
    }
    auto const D = DirectedSystem::constant(V, 3);
    // constant D8 system
    {
      auto const ind = induced_cover_system(D, {kc->dihedral, kc->dihedral, kc->dihedral});
      bool       ok  = bool(ind);
      std::string detail = ind ? "" : ind.obstruction->detail;
      if (ind) {
        auto const cert = colimit_cover_check(*ind.system);
        ok              = cert.revalidate() && is_isomorphic(cert.cover(), make_group("D8"));
        detail          = cert.summary();
      }
      r.check("constant D8 system over C2^2: limit certificate", ok, detail);
    }
    // random tree posets
    r.input("seed", std::to_string(opt.seed));
    for (std::uint32_t k = 0; k < 3; ++k) {
      std::string desc;
      auto const  S   = detail::random_tree_system(opt.seed + k, desc);
      auto const  res = induced_cover_system_search(S);
      bool        ok  = bool(res);
      std::string detail;
      if (res) {
        auto const cert = colimit_cover_check(*res.system);
        ok              = cert.revalidate();
        detail          = cert.summary();
      } else {
        detail = res.obstruction->detail;
      }
      r.note("poset " + std::to_string(k + 1), desc);
      r.check("random poset " + std::to_string(k + 1) + ": limit certificate", ok, detail);
    }
    // alternating D8 / Q8
    {
      auto const alt = induced_cover_system(D, {kc->dihedral, kc->quaternion, kc->dihedral});
      r.check("alternating D8/Q8 system reports an obstruction", !alt,
              alt ? "lifted without obstruction" : alt.obstruction->detail);
    }
    r.conclude(Verdict::obstruction);
    r.seconds = sw.seconds();
    return r;
  }

  inline Report verify_limit_commute() {
    Stopwatch sw;
    Report    r;
    r.scenario = "limit-commute";
    for (auto const& [name, D] : detail::small_systems()) {
      auto const valid = validate_directed_system(D);
      if (!r.check(name + ": directed system", bool(valid), valid.violation)) {
        continue;
      }
      auto const m = multiplier_colimit_check(D);
      r.check(name + ": limit of M = M of limit", m.pass(),
              m.colimit_of_multipliers.to_string() + " vs " + m.multiplier_of_colimit.to_string()
                  + (m.detail.empty() ? "" : ", " + m.detail));
    }
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  inline Report verify_free_product_counterexample(ScenarioOptions const& opt = {}) {
    Stopwatch sw;
    Report    r;
    r.scenario = "free-product-counterexample";
    r.input("syllable bound", std::to_string(opt.bound));
    auto const V   = make_group("C2^2");
    auto const D8  = make_group("D8");
    auto const Q8  = make_group("Q8");
    auto const cD8 = check_v_cover(D8, center(D8), V, Variety::abelian(), std::nullopt).value();
    auto const cQ8 = check_v_cover(Q8, center(Q8), V, Variety::abelian(), std::nullopt).value();
    auto const f   = free_product_counterexample(cD8, cQ8, opt.bound);
    r.note("D8 * Q8 words checked", std::to_string(f.words_checked));
    r.note("D8 * Q8 central words", std::to_string(f.central_found));
    r.note("conclusion", f.conclusion);
    r.check("expected multiplier of C2^2 * C2^2 is [2,2]",
            f.expected_multiplier == FgAbelianGroup({2, 2}), f.expected_multiplier.to_string());
    r.check("no nontrivial central word in D8 * Q8", f.words_checked > 0 && f.central_found == 0,
            std::to_string(f.words_checked) + " words");
    r.check("containment refuted within the bound", f.refuted);
    auto const C2 = make_group("C2");
    auto const g  = free_product_counterexample(C2, C2, opt.bound);
    r.check("C2 * C2: no contradiction available", !g.contradiction_available, g.conclusion);
    auto const h = free_product_counterexample(cD8, cover_from_cocycle(make_group("C3")), opt.bound);
    r.check("C2^2 * C3: expected [2], refuted within the bound",
            h.expected_multiplier == FgAbelianGroup({2}) && h.refuted, h.conclusion);
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  inline Report verify_haebich() {
    Stopwatch sw;
    Report    r;
    r.scenario    = "haebich";
    auto const C2 = make_group("C2");
    auto const dp = direct_product({C2, C2});
    r.input("group", "C2xC2 as a regular product of two C2");
    auto const h = haebich_cover({C2, C2}, dp.group, dp.injections);
    r.note("certificate", h.certificate.summary());
    r.check("|L-bar| = 8", h.group().size() == 8, std::to_string(h.group().size()));
    r.check("M-bar = [2]", abelian_invariants(h.certificate.A()) == FgAbelianGroup({2}),
            abelian_invariants(h.certificate.A()).to_string());
    r.check("certificate revalidates", h.certificate.revalidate());
    bool const d8 = is_isomorphic(h.group(), make_group("D8")).isomorphic;
    bool const q8 = is_isomorphic(h.group(), make_group("Q8")).isomorphic;
    r.check("L-bar is D8 or Q8", d8 || q8, d8 ? "D8" : (q8 ? "Q8" : "neither"));
    auto const S3 = make_group("S3");
    auto const a  = S3.element("a");
    auto const b  = S3.element("b");
    auto const w  = is_regular_product(S3, {subgroup_generated(S3, {a}),
                                            subgroup_generated(S3, {b})});
    r.check("S3 with two C2 factors is not a regular product", !w.regular(),
            "generates " + detail::yes_no(w.generates) + ", factors meeting the others trivially "
                + std::to_string(std::count(w.meets_trivially.begin(), w.meets_trivially.end(), true))
                + "/" + std::to_string(w.meets_trivially.size()));
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  inline Report verify_schur_baer() {
    Stopwatch sw;
    Report    r;
    r.scenario = "schur-baer";
    r.input("groups", "catalog, order <= 16");
    for (auto const& name : catalog_all()) {
      auto const s = schur_baer_divisibility(make_group(name));
      r.check(name, s.holds,
              "|G| = " + std::to_string(s.group_order) + ", M = " + s.multiplier.to_string()
                  + ", minimal k = " + std::to_string(s.minimal_power));
    }
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  inline Report verify_infrastructure(ScenarioOptions const& opt = {}) {
    Stopwatch sw;
    Report    r;
    r.scenario = "infrastructure";
    r.input("seed", std::to_string(opt.seed));
    std::mt19937 rng(opt.seed);
    // Smith normal form
    {
      std::size_t good = 0;
      for (int t = 0; t < 200; ++t) {
        std::size_t const m = 1 + rng() % 50, n = 1 + rng() % 50;
        IntMatrix         A(m, n);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            A(i, j) = Integer(int(rng() % 19) - 9);
          }
        }
        auto const s  = smith_normal_form(A);
        bool       ok = s.U * A * s.V == s.D && s.U * s.U_inv == IntMatrix::identity(m)
                  && s.V * s.V_inv == IntMatrix::identity(n);
        for (std::size_t i = 0; i < m && ok; ++i) {
          for (std::size_t j = 0; j < n && ok; ++j) {
            if (i != j && s.D(i, j) != 0) {
              ok = false;
            }
          }
        }
        for (std::size_t i = 0; i + 1 < s.rank && ok; ++i) {
          ok = s.D(i, i) > 0 && Integer(s.D(i + 1, i + 1) % s.D(i, i)).is_zero();
        }
        good += ok;
      }
      r.check("SNF reconstruction on 200 random matrices up to 50 x 50", good == 200,
              std::to_string(good) + "/200");
    }
    // free-product normal form
    {
      for (auto const& [a, b] : {std::pair{"C2", "C3"}, std::pair{"D8", "Q8"}}) {
        std::vector<FiniteGroup> fs{make_group(a), make_group(b)};
        std::size_t              good = 0;
        for (int t = 0; t < 1000; ++t) {
          auto const u = random_free_product_element(fs, rng() % 6, rng);
          auto const v = random_free_product_element(fs, rng() % 6, rng);
          auto const w = random_free_product_element(fs, rng() % 6, rng);
          bool const ok = fp_multiply(fs, fp_multiply(fs, u, v), w)
                              == fp_multiply(fs, u, fp_multiply(fs, v, w))
                          && fp_multiply(fs, u, fp_inverse(fs, u)).is_identity();
          good += ok;
        }
        r.check(std::string("associativity in ") + a + " * " + b + " on 1000 random triples",
                good == 1000, std::to_string(good) + "/1000");
      }
    }
    // Todd-Coxeter round trip
    {
      std::vector<std::string> bad;
      for (auto const& name : catalog_small()) {
        auto const G = make_group(name);
        auto const E = enumerate_group(standard_presentation(G).presentation);
        if (!is_isomorphic(E.group, G)) {
          bad.push_back(name);
        }
      }
      r.check("standard presentation round trip, order <= 12", bad.empty(),
              bad.empty() ? std::to_string(catalog_small().size()) + " groups"
                          : "fails: " + detail::join(bad, ", "));
    }
    // exactness of limits
    {
      auto exact = [&](std::string const& a, std::string const& b, std::string const& c,
                       std::vector<std::string> const& alpha,
                       std::vector<std::string> const& beta) {
        auto pa = detail::cat(a), pb = detail::cat(b), pc = detail::cat(c);
        auto const al = map_from_images(pa, pb, alpha);
        auto const be = map_from_images(pb, pc, beta);
        auto const A  = DirectedSystem::constant(pa.group, 3);
        auto const B  = DirectedSystem::constant(pb.group, 3);
        auto const C  = DirectedSystem::constant(pc.group, 3);
        auto const e  = exactness_check(A, B, C, {al, al, al}, {be, be, be});
        r.check("exactness 1 -> " + a + " -> " + b + " -> " + c + " -> 1", e.pass(), e.detail);
      };
      exact("C2", "C4", "C2", {"a^2"}, {"a"});
      exact("C3", "S3", "C2", {"(a b)"}, {"a", "a"});
      exact("C2", "C2^2", "C2", {"a1"}, {"1", "a"});
    }
    // universal property and limits of subgroup systems
    {
      std::vector<std::string> bad;
      for (auto const& name : {"C2^2", "C6", "S3", "D8", "Q8", "A4"}) {
        auto const G    = make_group(name);
        auto const D    = subgroup_system(G);
        auto const subs = all_subgroups(G);
        std::vector<Homomorphism> cone;
        for (std::size_t i = 0; i < D.size(); ++i) {
          cone.emplace_back(D.group(i), G, subs[i].members());
        }
        auto const tau  = mediating_morphism(D, G, cone);
        auto const c    = colimit(D);
        auto const q    = colimit_by_quotient(D);
        bool       ok   = tau.is_injective() && tau.is_surjective()
                  && is_isomorphic(q.group, G).isomorphic;
        for (std::size_t i = 0; i < D.size() && ok; ++i) {
          ok = c.injections[i].then(tau) == cone[i];
        }
        if (!ok) {
          bad.push_back(name);
        }
      }
      r.check("subgroup systems: limit is G, mediating map unique and bijective", bad.empty(),
              bad.empty() ? "C2^2, C6, S3, D8, Q8, A4" : "fails: " + detail::join(bad, ", "));
    }
    r.conclude();
    r.seconds = sw.seconds();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dispatch
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::string> const& scenario_names() {
    static std::vector<std::string> const names{
        "multipliers",   "dual-cover",    "d8q8",
        "wiegold",       "sylow",         "induced-obstruction",
        "limit-commute", "free-product-counterexample",
        "haebich",       "schur-baer",    "infrastructure"};
    return names;
  }

  inline Report run_scenario(std::string const& name, ScenarioOptions const& opt = {}) {
    if (name == "multipliers") {
      return verify_multipliers();
    }
    if (name == "dual-cover") {
      return verify_dual_cover();
    }
    if (name == "d8q8") {
      return verify_d8q8();
    }
    if (name == "wiegold") {
      return verify_wiegold(opt);
    }
    if (name == "sylow") {
      return verify_sylow();
    }
    if (name == "induced-obstruction") {
      return verify_induced_obstruction(opt);
    }
    if (name == "limit-commute") {
      return verify_limit_commute();
    }
    if (name == "free-product-counterexample") {
      return verify_free_product_counterexample(opt);
    }
    if (name == "haebich") {
      return verify_haebich();
    }
    if (name == "schur-baer") {
      return verify_schur_baer();
    }
    if (name == "infrastructure") {
      return verify_infrastructure(opt);
    }
    throw InvalidInput("unknown scenario '" + name + "'");
  }

}  // namespace vcg
