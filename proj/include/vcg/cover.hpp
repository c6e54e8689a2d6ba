#pragma once

// Covering groups: the central extension by the universal cocycle, and
// F/S for the standard presentation with S = [R,F] and a complement of
// the torsion in R/[R,F].

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"
#include "vcg/homology.hpp"
#include "vcg/lattice.hpp"
#include "vcg/todd_coxeter.hpp"
#include "vcg/variety.hpp"
#include "vcg/word.hpp"

namespace vcg {

  // The extension on pairs (m, g) with (m1, g1)(m2, g2) =
  // (m1 + m2 + f(g1, g2), g1 g2), f the universal cocycle.
  inline CoverCertificate cover_from_cocycle(FiniteGroup const& G) {
    std::size_t const n = G.size();
    if (n > universal_cocycle_cap) {
      throw CapExceeded("cover_from_cocycle: |G| = " + std::to_string(n)
                        + " exceeds the cap " + std::to_string(universal_cocycle_cap));
    }
    auto const  f = universal_cocycle(G);
    auto const& d = f.values.invariant_factors();
    std::size_t m = 1;
    for (auto x : d) {
      m *= x;
    }
    if (m * n > max_cayley_order) {
      throw CapExceeded("cover_from_cocycle: cover order exceeds the Cayley cap");
    }
    auto encode = [&](std::vector<std::uint64_t> const& v) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        idx = idx * d[i] + v[i];
      }
      return idx;
    };
    std::vector<std::vector<std::uint64_t>> decoded(m);
    for (std::size_t idx = 0; idx < m; ++idx) {
      std::vector<std::uint64_t> v(d.size());
      std::size_t                r = idx;
      for (std::size_t i = d.size(); i-- > 0;) {
        v[i] = r % d[i];
        r /= d[i];
      }
      decoded[idx] = std::move(v);
    }
    std::size_t const        N = m * n;
    std::vector<std::string> labels(N);
    std::vector<Element>     table(N * N);
    for (std::size_t a = 0; a < m; ++a) {
      std::string coords;
      for (std::size_t i = 0; i < d.size(); ++i) {
        coords += (i ? "," : "") + std::to_string(decoded[a][i]);
      }
      for (Element g = 0; g < n; ++g) {
        labels[a * n + g] = d.empty() ? G.label(g) : "(" + coords + ";" + G.label(g) + ")";
      }
    }
    for (std::size_t a1 = 0; a1 < m; ++a1) {
      for (Element g1 = 0; g1 < n; ++g1) {
        for (std::size_t a2 = 0; a2 < m; ++a2) {
          auto const s = f.add(decoded[a1], decoded[a2]);
          for (Element g2 = 0; g2 < n; ++g2) {
            auto const v = f.add(s, f(g1, g2));
            table[(a1 * n + g1) * N + a2 * n + g2]
                = static_cast<Element>(encode(v) * n + G.mul(g1, g2));
          }
        }
      }
    }
    FiniteGroup          E(std::move(labels), std::move(table));
    std::vector<Element> a_members, proj(N);
    for (std::size_t a = 0; a < m; ++a) {
      a_members.push_back(static_cast<Element>(a * n + G.identity()));
      for (Element g = 0; g < n; ++g) {
        proj[a * n + g] = g;
      }
    }
    Subgroup     A(E, std::move(a_members));
    Homomorphism pi(E, G, std::move(proj));
    auto check = check_v_cover(E, A, G, Variety::abelian(), f.values, pi);
    if (!check) {
      detail::invariant_failed("cover_from_cocycle: " + check.reason);
    }
    return *check.certificate;
  }

  // Coordinates of a twist: column j of the complement is shifted by
  // sum_i twist[j][i] t_i with t_i the torsion basis.
  using ComplementTwist = std::vector<std::vector<std::uint64_t>>;

  inline std::vector<IntVector> twisted_complement(RelationModuleData const& d,
                                                   ComplementTwist const&    twist) {
    if (twist.size() != d.complement_basis.size()) {
      throw InvalidInput("twisted_complement: one twist per complement vector");
    }
    std::vector<IntVector> out = d.complement_basis;
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (twist[j].size() != d.torsion_basis.size()) {
        throw InvalidInput("twisted_complement: twist length differs from the "
                           "torsion rank");
      }
      for (std::size_t i = 0; i < twist[j].size(); ++i) {
        for (std::size_t c = 0; c < out[j].size(); ++c) {
          out[j][c] += Integer(twist[j][i]) * d.torsion_basis[i][c];
        }
      }
    }
    return out;
  }

  // Whether the vectors span a direct complement of the torsion of the
  // relation module: their free coordinates form a unimodular matrix.
  inline bool is_torsion_complement(RelationModuleData const&     d,
                                    std::vector<IntVector> const& basis) {
    std::size_t const r = d.free_rank;
    if (basis.size() != r) {
      return false;
    }
    std::size_t const t = d.torsion.invariant_factors().size();
    IntMatrix         F(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      if (basis[j].size() != d.relations.rows()) {
        return false;
      }
      auto const y = d.split.cokernel.coordinates(basis[j]);
      for (std::size_t i = 0; i < r; ++i) {
        F(i, j) = y[t + i];
      }
    }
    auto const snf = smith_normal_form(F, SnfTransforms::none);
    if (snf.rank != r) {
      return false;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (snf.D(i, i) != 1) {
        return false;
      }
    }
    return true;
  }

  struct SplittingCover {
    RelationModuleData     module;
    std::vector<IntVector> complement;
    std::vector<Word>      complement_words;
    Presentation           presentation;  // F/S
    EnumeratedGroup        realized;
    CoverCertificate       certificate;
  };

  // F/S on the standard presentation of G. Relators: the complement
  // words and [r_{x,y}, g] for all x, y, g.
  inline SplittingCover cover_from_splitting(FiniteGroup const& G,
                                             std::optional<std::vector<IntVector>> complement = {},
                                             std::size_t max_cosets = max_cosets_from_env()) {
    auto        d = relation_module_splitting(G);
    auto const& sp = d.presentation;
    std::vector<IntVector> basis = complement ? *complement : d.complement_basis;
    if (complement && !is_torsion_complement(d, basis)) {
      throw InvalidInput("cover_from_splitting: supplied vectors do not span a "
                         "complement of the torsion");
    }
    std::vector<Word> words;
    for (auto const& c : basis) {
      words.push_back(relator_product(sp, c));
    }
    std::size_t const n    = G.size();
    std::vector<Word> rels = words;
    auto const&       gens = sp.presentation.generators();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        auto const r = sp.relator(x, y);
        if (r.length() == 0) {
          continue;
        }
        for (auto const& g : gens) {
          rels.push_back(commutator(r, Word::generator(g)));
        }
      }
    }
    Presentation FS(gens, rels);
    auto         T = todd_coxeter(FS, {}, max_cosets);
    auto         E = group_from_coset_table(FS, T);
    std::vector<Element> images(n);
    for (Element x = 0; x < n; ++x) {
      images[x] = x;
    }
    auto const pi = Homomorphism::try_from_generators(E.group, G,
                                                      E.generator_elements, images);
    if (!pi) {
      detail::invariant_failed("cover_from_splitting: F/S does not map onto G");
    }
    auto const expected = n * d.torsion.order();
    if (E.group.size() != expected) {
      detail::invariant_failed("cover_from_splitting: |F/S| = "
                               + std::to_string(E.group.size()) + ", expected "
                               + std::to_string(expected));
    }
    auto check = check_v_cover(E.group, pi->kernel(), G, Variety::abelian(),
                               d.torsion, pi);
    if (!check) {
      detail::invariant_failed("cover_from_splitting: " + check.reason);
    }
    return SplittingCover{std::move(d),       std::move(basis), std::move(words),
                          std::move(FS),      std::move(E),     *check.certificate};
  }

  // Twists c_j + b_j t_1 for the first `limit` bit patterns b, where t_1
  // is the first torsion basis vector.
  inline std::vector<ComplementTwist> simple_twists(RelationModuleData const& d,
                                                    std::size_t               limit) {
    std::vector<ComplementTwist> out;
    std::size_t const            r = d.complement_basis.size();
    std::size_t const            t = d.torsion_basis.size();
    if (t == 0) {
      out.push_back(ComplementTwist(r, std::vector<std::uint64_t>{}));
      return out;
    }
    std::size_t const total = r >= 20 ? limit : std::min<std::size_t>(limit, std::size_t(1) << r);
    for (std::size_t mask = 0; mask < total; ++mask) {
      ComplementTwist tw(r, std::vector<std::uint64_t>(t, 0));
      for (std::size_t j = 0; j < r; ++j) {
        tw[j][0] = (mask >> j) & 1u;
      }
      out.push_back(std::move(tw));
    }
    return out;
  }

  // A cover is an epimorphic image of F/[R,F]: choosing lifts l_x of every
  // x in G, xbar -> l_x sends every r_{x,y} into A, A is central, and the
  // lifts generate the cover.
  struct LiftCheck {
    bool                 relators_in_A = false;
    bool                 A_central     = false;
    bool                 surjective    = false;
    std::vector<Element> lifts;

    explicit operator bool() const noexcept {
      return relators_in_A && A_central && surjective;
    }
  };

  inline LiftCheck lift_epimorphism_check(CoverCertificate const& cert) {
    auto const& E  = cert.cover();
    auto const& G  = cert.base();
    auto const& pi = cert.projection();
    LiftCheck   out;
    out.lifts.assign(G.size(), 0);
    std::vector<bool> have(G.size(), false);
    for (Element e = 0; e < E.size(); ++e) {
      if (!have[pi(e)]) {
        have[pi(e)]       = true;
        out.lifts[pi(e)] = e;
      }
    }
    out.relators_in_A = true;
    for (Element x = 0; x < G.size() && out.relators_in_A; ++x) {
      for (Element y = 0; y < G.size(); ++y) {
        auto const r = E.mul(E.mul(out.lifts[x], out.lifts[y]),
                             E.inv(out.lifts[G.mul(x, y)]));
        if (!cert.A().contains(r)) {
          out.relators_in_A = false;
          break;
        }
      }
    }
    out.A_central  = cert.A().is_subset_of(center(E));
    out.surjective = subgroup_generated(E, out.lifts).is_whole();
    return out;
  }

}  // namespace vcg
