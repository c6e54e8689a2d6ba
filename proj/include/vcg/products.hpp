#pragma once

// Product constructions of covering groups: second nilpotent products,
// direct products of Sylow covers, and covers of regular products.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcg/catalog.hpp"
#include "vcg/cover.hpp"
#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"
#include "vcg/free_product.hpp"
#include "vcg/homology.hpp"
#include "vcg/todd_coxeter.hpp"
#include "vcg/variety.hpp"
#include "vcg/word.hpp"

namespace vcg {

  inline constexpr std::uint64_t nilpotent2_order_cap = 10000;

  ////////////////////////////////////////////////////////////////////////
  // Second nilpotent product
  ////////////////////////////////////////////////////////////////////////

  struct Nilpotent2Product {
    std::vector<PresentedGroup> factors;
    FreeProductPresentation     free_product;
    Presentation                presentation;
    EnumeratedGroup             realized;
    // factor group -> product
    std::vector<Homomorphism> embeddings;
    DirectProduct             direct;
    // product -> direct product of the factors
    Homomorphism  to_direct;
    Subgroup      cartesian;
    std::uint64_t predicted_order = 1;

    FiniteGroup const& group() const noexcept {
      return realized.group;
    }
  };

  // prod |A_i| * prod_{i<j} |A_i,ab (x) A_j,ab|.
  inline std::uint64_t nilpotent2_predicted_order(std::vector<FiniteGroup> const& fs) {
    std::uint64_t n = 1;
    std::vector<FgAbelianGroup> ab;
    for (auto const& G : fs) {
      n *= G.size();
      ab.push_back(abelianization(G));
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        n *= tensor_product(ab[i], ab[j]).order();
      }
    }
    return n;
  }

  // The free product modulo [[x, y], z] for x, y generators of distinct
  // factors and z any generator. The order and the centrality of the
  // cartesian subgroup are checked on every call.
  inline Nilpotent2Product nilpotent2_product(std::vector<PresentedGroup> const& factors,
                                              std::size_t max_cosets = max_cosets_from_env()) {
    if (factors.size() < 2 || factors.size() > 4) {
      throw InvalidInput("nilpotent2_product: needs 2 to 4 factors");
    }
    std::vector<FiniteGroup>  groups;
    std::vector<Presentation> ps;
    for (auto const& f : factors) {
      groups.push_back(f.group);
      ps.push_back(f.presentation);
    }
    Nilpotent2Product out;
    out.factors         = factors;
    out.predicted_order = nilpotent2_predicted_order(groups);
    if (out.predicted_order > nilpotent2_order_cap) {
      throw CapExceeded("nilpotent2_product: predicted order "
                        + std::to_string(out.predicted_order) + " exceeds "
                        + std::to_string(nilpotent2_order_cap));
    }
    out.free_product = free_product_presentation(ps);
    std::vector<std::vector<Word>> gens(factors.size());
    std::vector<Word>              all;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (auto const& g : factors[i].presentation.generators()) {
        gens[i].push_back(Word::generator(out.free_product.renaming[i].at(g)));
        all.push_back(gens[i].back());
      }
    }
    std::vector<Word> rels = out.free_product.presentation.relators();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        for (auto const& x : gens[i]) {
          for (auto const& y : gens[j]) {
            for (auto const& z : all) {
              rels.push_back(commutator(commutator(x, y), z));
            }
          }
        }
      }
    }
    out.presentation = Presentation(out.free_product.presentation.generators(), rels);
    out.realized     = enumerate_group(out.presentation, max_cosets);
    auto const& P    = out.realized.group;
    if (P.size() != out.predicted_order) {
      detail::invariant_failed("nilpotent2_product: order " + std::to_string(P.size())
                               + " differs from the predicted "
                               + std::to_string(out.predicted_order));
    }
    out.direct = direct_product(groups);
    std::vector<Element> direct_images;
    std::size_t          k = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::vector<Element> images;
      for (std::size_t g = 0; g < factors[i].generator_elements.size(); ++g, ++k) {
        images.push_back(out.realized.generator_elements[k]);
        direct_images.push_back(out.direct.injections[i](factors[i].generator_elements[g]));
      }
      out.embeddings.push_back(Homomorphism::from_generators(
          factors[i].group, P, factors[i].generator_elements, images));
    }
    out.to_direct = Homomorphism::from_generators(P, out.direct.group,
                                                  out.realized.generator_elements,
                                                  direct_images);
    out.cartesian = out.to_direct.kernel();
    if (!out.to_direct.is_surjective()) {
      detail::invariant_failed("nilpotent2_product: no surjection onto the "
                               "direct product");
    }
    if (!out.cartesian.is_subset_of(center(P))) {
      detail::invariant_failed("nilpotent2_product: cartesian subgroup is not central");
    }
    return out;
  }

  inline Nilpotent2Product nilpotent2_product(std::vector<FiniteGroup> const& factors,
                                              std::size_t max_cosets = max_cosets_from_env()) {
    std::vector<PresentedGroup> ps;
    for (auto const& G : factors) {
      ps.push_back(present(G));
    }
    return nilpotent2_product(ps, max_cosets);
  }

  struct WiegoldCover {
    CoverCertificate  cover_a;
    CoverCertificate  cover_b;
    Nilpotent2Product product;
    DirectProduct     base;
    CoverCertificate  certificate;
  };

  // The second nilpotent product of the covers A* and B* covers A x B.
  inline WiegoldCover wiegold_cover(CoverCertificate const& ca, CoverCertificate const& cb,
                                    std::size_t max_cosets = max_cosets_from_env()) {
    auto const& A    = ca.base();
    auto const& B    = cb.base();
    auto        prod = nilpotent2_product({present(ca.cover()), present(cb.cover())},
                                   max_cosets);
    auto        base = direct_product({A, B});
    auto const& P    = prod.group();
    // P -> A* x B* -> A x B
    std::vector<Element> images(P.size());
    for (Element x = 0; x < P.size(); ++x) {
      auto const d = prod.to_direct(x);
      images[x]    = base.tuple({ca.projection()(prod.direct.projections[0](d)),
                                 cb.projection()(prod.direct.projections[1](d))});
    }
    Homomorphism pi(P, base.group, std::move(images));
    auto check = check_v_cover(P, pi.kernel(), base.group, Variety::abelian(),
                               std::nullopt, pi);
    if (!check) {
      detail::invariant_failed("wiegold_cover: " + check.reason);
    }
    return WiegoldCover{ca, cb, std::move(prod), std::move(base), *check.certificate};
  }

  inline WiegoldCover wiegold_cover(FiniteGroup const& A, FiniteGroup const& B,
                                    std::size_t max_cosets = max_cosets_from_env()) {
    return wiegold_cover(cover_from_cocycle(A), cover_from_cocycle(B), max_cosets);
  }

  ////////////////////////////////////////////////////////////////////////
  // Sylow covers
  ////////////////////////////////////////////////////////////////////////

  struct SylowCover {
    std::vector<std::uint64_t>    primes;
    std::vector<Subgroup>         sylows;
    std::vector<CoverCertificate> covers;
    DirectProduct                 product;
    CoverCertificate              certificate;
  };

  // For nilpotent G = S_1 x ... x S_k, the product of covers of the S_i.
  inline SylowCover sylow_cover(FiniteGroup const& G) {
    if (!is_nilpotent(G)) {
      throw InvalidInput("sylow_cover: the group is not nilpotent");
    }
    SylowCover           out{{}, {}, {}, {}, cover_from_cocycle(FiniteGroup())};
    std::vector<FiniteGroup> cover_groups;
    std::vector<Homomorphism> to_g;  // cover_i -> G
    for (auto [p, a] : factorize(G.size())) {
      auto S  = sylow_subgroup(G, p);
      auto Sg = as_group(S);
      auto c  = cover_from_cocycle(Sg.group);
      out.primes.push_back(p);
      out.sylows.push_back(S);
      cover_groups.push_back(c.cover());
      to_g.push_back(c.projection().then(Sg.inclusion));
      out.covers.push_back(std::move(c));
    }
    if (cover_groups.empty()) {
      out.certificate = cover_from_cocycle(G);
      return out;
    }
    out.product     = direct_product(cover_groups);
    auto const& P   = out.product.group;
    std::vector<Element> images(P.size());
    for (Element x = 0; x < P.size(); ++x) {
      Element g = G.identity();
      for (std::size_t i = 0; i < cover_groups.size(); ++i) {
        g = G.mul(g, to_g[i](out.product.projections[i](x)));
      }
      images[x] = g;
    }
    Homomorphism pi(P, G, std::move(images));
    auto check = check_v_cover(P, pi.kernel(), G, Variety::abelian(), std::nullopt, pi);
    if (!check) {
      detail::invariant_failed("sylow_cover: " + check.reason);
    }
    out.certificate = *check.certificate;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Regular products
  ////////////////////////////////////////////////////////////////////////

  struct RegularProductWitness {
    FiniteGroup           group;
    std::vector<Subgroup> factors;
    // hats[i] = normal closure of the union of the other factors
    std::vector<Subgroup> hats;
    bool                  generates = false;
    std::vector<bool>     meets_trivially;

    bool regular() const {
      return generates
             && std::all_of(meets_trivially.begin(), meets_trivially.end(),
                            [](bool b) { return b; });
    }

    explicit operator bool() const {
      return regular();
    }
  };

  inline RegularProductWitness is_regular_product(FiniteGroup const&           G,
                                                  std::vector<Subgroup> const& factors) {
    RegularProductWitness w{G, factors, {}, false, {}};
    std::vector<Element>  all;
    for (auto const& A : factors) {
      if (!A.parent().same(G)) {
        throw InvalidInput("is_regular_product: factor is not a subgroup of G");
      }
      all.insert(all.end(), A.members().begin(), A.members().end());
    }
    w.generates = subgroup_generated(G, all).is_whole();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::vector<Element> others;
      for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j != i) {
          others.insert(others.end(), factors[j].members().begin(),
                        factors[j].members().end());
        }
      }
      auto hat = normal_closure(G, others);
      w.meets_trivially.push_back(intersection(factors[i], hat).is_trivial());
      w.hats.push_back(std::move(hat));
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Covers of regular products
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    struct TupleGroup {
      FiniteGroup                       group;
      std::vector<Element>              generator_elements;
      std::vector<std::vector<Element>> tuples;
    };

    // The subgroup of prod groups[i] generated by the given tuples.
    inline TupleGroup tuple_subgroup(std::vector<FiniteGroup> const&          groups,
                                     std::vector<std::vector<Element>> const& gens) {
      std::map<std::vector<Element>, Element> index;
      TupleGroup                              out;
      auto mul = [&](std::vector<Element> const& a, std::vector<Element> const& b) {
        std::vector<Element> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          c[i] = groups[i].mul(a[i], b[i]);
        }
        return c;
      };
      std::vector<Element> id;
      for (auto const& G : groups) {
        id.push_back(G.identity());
      }
      index.emplace(id, 0);
      out.tuples.push_back(id);
      for (std::size_t i = 0; i < out.tuples.size(); ++i) {
        for (auto const& g : gens) {
          auto y = mul(out.tuples[i], g);
          if (index.emplace(y, static_cast<Element>(out.tuples.size())).second) {
            out.tuples.push_back(std::move(y));
            if (out.tuples.size() > max_cayley_order) {
              throw CapExceeded("tuple_subgroup: order exceeds the Cayley cap");
            }
          }
        }
      }
      std::size_t const        n = out.tuples.size();
      std::vector<Element>     table(n * n);
      std::vector<std::string> labels(n);
      for (std::size_t a = 0; a < n; ++a) {
        std::string s = "(";
        for (std::size_t i = 0; i < groups.size(); ++i) {
          s += (i ? "," : "") + groups[i].label(out.tuples[a][i]);
        }
        labels[a] = s + ")";
        for (std::size_t b = 0; b < n; ++b) {
          table[a * n + b] = index.at(mul(out.tuples[a], out.tuples[b]));
        }
      }
      out.group = FiniteGroup(std::move(labels), std::move(table),
                              FiniteGroup::Check::trusted);
      for (auto const& g : gens) {
        out.generator_elements.push_back(index.at(g));
      }
      return out;
    }
  }  // namespace detail

  struct HaebichData {
    std::vector<CoverCertificate> factor_covers;   // L_i over A_i
    std::vector<PresentedGroup>   factor_presentations;
    FreeProductPresentation       L;
    // image of L in G x prod L_i; L -> P has kernel J
    detail::TupleGroup  image;
    std::vector<Word>   J_relators;  // normal generators of J
    std::vector<Word>   N_relators;  // [m, l], m in M_i, l in L_j, i != j
    std::vector<Word>   JL_relators; // [j, x]
    Presentation        presentation;  // L / N[J,L]
    EnumeratedGroup     realized;
    RegularProductWitness regularity;
    CoverCertificate    certificate;

    FiniteGroup const& group() const noexcept {
      return realized.group;
    }
  };

  // L = *L_i with L_i covers of A_i; J = ker(L -> G x prod L_i) is the
  // intersection of nu^-1(ker psi) with the cartesian subgroup; N is the
  // normal closure of the [M_i, L_j]. The result is L / N[J,L].
  inline HaebichData haebich_cover(std::vector<FiniteGroup> const&  factors,
                                   FiniteGroup const&               G,
                                   std::vector<Homomorphism> const& embeddings,
                                   std::size_t max_cosets = max_cosets_from_env()) {
    if (factors.empty() || factors.size() != embeddings.size()) {
      throw InvalidInput("haebich_cover: one embedding per factor is required");
    }
    std::vector<Subgroup> images;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (!embeddings[i].source().same(factors[i]) || !embeddings[i].target().same(G)
          || !embeddings[i].is_injective()) {
        throw InvalidInput("haebich_cover: embedding " + std::to_string(i)
                           + " is not an injection of the factor into G");
      }
      images.push_back(embeddings[i].image());
    }
    auto regularity = is_regular_product(G, images);
    if (!regularity) {
      throw InvalidInput("haebich_cover: G is not the regular product of the factors");
    }
    std::vector<CoverCertificate> covers;
    std::vector<PresentedGroup>   pres;
    std::vector<Presentation>     ps;
    for (auto const& A : factors) {
      covers.push_back(cover_from_cocycle(A));
      pres.push_back(present(covers.back().cover()));
      ps.push_back(pres.back().presentation);
    }
    auto L = free_product_presentation(ps);
    // generators of L as tuples in G x prod L_i
    std::vector<FiniteGroup> groups{G};
    for (auto const& c : covers) {
      groups.push_back(c.cover());
    }
    std::vector<std::vector<Element>> gen_tuples;
    std::vector<std::string>          symbols;
    std::vector<std::vector<Word>>    factor_gens(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto const& gs = pres[i].presentation.generators();
      for (std::size_t g = 0; g < gs.size(); ++g) {
        std::vector<Element> t;
        for (auto const& H : groups) {
          t.push_back(H.identity());
        }
        auto const l = pres[i].generator_elements[g];
        t[0]         = embeddings[i](covers[i].projection()(l));
        t[i + 1]     = l;
        gen_tuples.push_back(std::move(t));
        symbols.push_back(L.renaming[i].at(gs[g]));
        factor_gens[i].push_back(Word::generator(symbols.back()));
      }
    }
    auto image = detail::tuple_subgroup(groups, gen_tuples);
    auto Ppres = present(image.group, image.generator_elements, symbols);
    std::vector<Word> J = Ppres.presentation.relators();
    // N: [m, l] for m generating M_i (as words of L_i), l a generator of L_j
    std::vector<Word> N;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto const words = pres[i].element_words();
      for (auto m : covers[i].A().members()) {
        if (m == covers[i].cover().identity()) {
          continue;
        }
        auto const mw = L.embed(i, words[m]);
        for (std::size_t j = 0; j < factors.size(); ++j) {
          if (j == i) {
            continue;
          }
          for (auto const& l : factor_gens[j]) {
            N.push_back(commutator(mw, l));
          }
        }
      }
    }
    std::vector<Word> JL;
    for (auto const& w : J) {
      for (auto const& s : symbols) {
        JL.push_back(commutator(w, Word::generator(s)));
      }
    }
    std::vector<Word> rels = L.presentation.relators();
    rels.insert(rels.end(), N.begin(), N.end());
    rels.insert(rels.end(), JL.begin(), JL.end());
    Presentation Lbar(L.presentation.generators(), rels);
    auto         E = enumerate_group(Lbar, max_cosets);
    // L-bar -> G
    std::vector<Element> targets;
    for (auto const& t : gen_tuples) {
      targets.push_back(t[0]);
    }
    auto pi = Homomorphism::try_from_generators(E.group, G, E.generator_elements, targets);
    if (!pi) {
      detail::invariant_failed("haebich_cover: L-bar does not map onto G");
    }
    auto check = check_v_cover(E.group, pi->kernel(), G, Variety::abelian(),
                               std::nullopt, pi);
    if (!check) {
      detail::invariant_failed("haebich_cover: " + check.reason);
    }
    return HaebichData{std::move(covers), std::move(pres),   std::move(L),
                       std::move(image),  std::move(J),      std::move(N),
                       std::move(JL),     std::move(Lbar),   std::move(E),
                       std::move(regularity), *check.certificate};
  }

}  // namespace vcg
