#pragma once

// Varieties of groups (abelian, nilpotent of class c), verbal and
// marginal subgroups, and the covering-group checker.

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
#include "vcg/word.hpp"

namespace vcg {

  // The variety defined by the left-normed commutator [x1, ..., x_{c+1}].
  // Class 1 is the variety of abelian groups.
  class Variety {
   public:
    static Variety abelian() {
      return Variety(1);
    }

    static Variety nilpotent(std::size_t c) {
      if (c == 0) {
        throw InvalidInput("Variety: nilpotency class must be at least 1");
      }
      return Variety(c);
    }

    std::size_t nilpotency_class() const noexcept {
      return _c;
    }

    bool is_abelian() const noexcept {
      return _c == 1;
    }

    std::size_t arity() const noexcept {
      return _c + 1;
    }

    std::vector<Word> law_words() const {
      std::vector<Word> xs;
      for (std::size_t i = 1; i <= arity(); ++i) {
        xs.push_back(Word::generator("x" + std::to_string(i)));
      }
      return {commutator(xs)};
    }

    // Value of the law at a substitution.
    Element evaluate(FiniteGroup const& G, std::vector<Element> const& f) const {
      Element v = f.at(0);
      for (std::size_t i = 1; i < f.size(); ++i) {
        v = G.comm(v, f[i]);
      }
      return v;
    }

    std::string name() const {
      return is_abelian() ? "Abelian" : "N" + std::to_string(_c);
    }

    friend bool operator==(Variety const& a, Variety const& b) {
      return a._c == b._c;
    }

   private:
    explicit Variety(std::size_t c) : _c(c) {}

    std::size_t _c = 1;
  };

  // gamma_{c+1}(G).
  inline Subgroup verbal_subgroup(Variety const& V, FiniteGroup const& G) {
    return lower_central_term(G, V.arity());
  }

  // Z_c(G).
  inline Subgroup marginal_subgroup(Variety const& V, FiniteGroup const& G) {
    return upper_central_term(G, V.nilpotency_class());
  }

  namespace detail {
    // Calls fn on every substitution G^arity in lexicographic order.
    template <typename Fn>
    void for_each_substitution(FiniteGroup const& G, std::size_t arity, Fn&& fn) {
      std::vector<Element> f(arity, 0);
      while (true) {
        fn(f);
        std::size_t i = arity;
        while (i > 0 && ++f[i - 1] == G.size()) {
          f[--i] = 0;
        }
        if (i == 0) {
          return;
        }
      }
    }

    inline void check_substitution_budget(FiniteGroup const& G, std::size_t arity,
                                          std::size_t extra, char const* what) {
      long double work = extra;
      for (std::size_t i = 0; i < arity; ++i) {
        work *= static_cast<long double>(G.size());
      }
      if (work > 5e8L) {
        throw CapExceeded(std::string(what) + ": substitution space too large");
      }
    }
  }  // namespace detail

  // The subgroup generated by all law values, by direct substitution.
  inline Subgroup verbal_subgroup_by_substitution(Variety const&     V,
                                                  FiniteGroup const& G) {
    detail::check_substitution_budget(G, V.arity(), 1, "verbal_subgroup");
    std::vector<bool>    seen(G.size(), false);
    std::vector<Element> values;
    detail::for_each_substitution(G, V.arity(), [&](auto const& f) {
      auto const v = V.evaluate(G, f);
      if (!seen[v]) {
        seen[v] = true;
        values.push_back(v);
      }
    });
    return subgroup_generated(G, values);
  }

  // Elements a with v(f1, ..., fi a, ..., fn) = v(f1, ..., fn) for every
  // position i and every substitution f.
  inline Subgroup marginal_subgroup_by_substitution(Variety const&     V,
                                                    FiniteGroup const& G) {
    std::size_t const k = V.arity();
    detail::check_substitution_budget(G, k, G.size() * k, "marginal_subgroup");
    std::vector<bool> marginal(G.size(), true);
    std::vector<Element> g(k);
    detail::for_each_substitution(G, k, [&](auto const& f) {
      auto const v = V.evaluate(G, f);
      for (Element a = 0; a < G.size(); ++a) {
        if (!marginal[a]) {
          continue;
        }
        for (std::size_t i = 0; i < k && marginal[a]; ++i) {
          g    = f;
          g[i] = G.mul(f[i], a);
          if (V.evaluate(G, g) != v) {
            marginal[a] = false;
          }
        }
      }
    });
    std::vector<Element> members;
    for (Element a = 0; a < G.size(); ++a) {
      if (marginal[a]) {
        members.push_back(a);
      }
    }
    return Subgroup(G, std::move(members));
  }

  ////////////////////////////////////////////////////////////////////////
  // Covering groups
  ////////////////////////////////////////////////////////////////////////

  enum class CoverClause { normal, quotient, containment, multiplier };

  inline std::string to_string(CoverClause c) {
    switch (c) {
      case CoverClause::normal:
        return "A is not normal in the cover";
      case CoverClause::quotient:
        return "cover/A is not isomorphic to the base";
      case CoverClause::containment:
        return "A is not contained in verbal and marginal subgroups";
      case CoverClause::multiplier:
        return "A is not isomorphic to the multiplier";
    }
    return "";
  }

  class CoverCertificate;

  struct CoverCheck;

  inline CoverCheck check_v_cover(FiniteGroup const&                   cover,
                                  Subgroup const&                      A,
                                  FiniteGroup const&                   base,
                                  Variety const&                       V,
                                  std::optional<FgAbelianGroup> const& claimed,
                                  std::optional<Homomorphism> const&   projection);

  // Evidence that (cover, A) is a V-covering group of base:
  // cover/A = base, A in V(cover) and V*(cover), A = VM(base).
  class CoverCertificate {
   public:
    FiniteGroup const& cover() const noexcept {
      return _cover;
    }

    Subgroup const& A() const noexcept {
      return _A;
    }

    FiniteGroup const& base() const noexcept {
      return _base;
    }

    Variety const& variety() const noexcept {
      return _variety;
    }

    FgAbelianGroup const& multiplier() const noexcept {
      return _multiplier;
    }

    // Surjection cover -> base with kernel A.
    Homomorphism const& projection() const noexcept {
      return _projection;
    }

    std::size_t verbal_order() const noexcept {
      return _verbal_order;
    }

    std::size_t marginal_order() const noexcept {
      return _marginal_order;
    }

    bool multiplier_supplied() const noexcept {
      return _supplied;
    }

    // Runs the checker again from scratch.
    bool revalidate() const;

    std::string summary() const {
      return "|cover| = " + std::to_string(_cover.size()) + ", |A| = "
             + std::to_string(_A.size()) + ", A = " + _multiplier.to_string()
             + ", |base| = " + std::to_string(_base.size());
    }

   private:
    friend CoverCheck check_v_cover(FiniteGroup const&, Subgroup const&,
                                    FiniteGroup const&, Variety const&,
                                    std::optional<FgAbelianGroup> const&,
                                    std::optional<Homomorphism> const&);

    CoverCertificate(FiniteGroup cover, Subgroup A, FiniteGroup base, Variety V,
                     FgAbelianGroup M, Homomorphism projection)
        : _cover(std::move(cover)),
          _A(std::move(A)),
          _base(std::move(base)),
          _variety(V),
          _multiplier(std::move(M)),
          _projection(std::move(projection)) {}

    FiniteGroup    _cover;
    Subgroup       _A;
    FiniteGroup    _base;
    Variety        _variety;
    FgAbelianGroup _multiplier;
    Homomorphism   _projection;
    std::size_t    _verbal_order   = 0;
    std::size_t    _marginal_order = 0;
    bool           _supplied       = false;
  };

  struct CoverCheck {
    std::optional<CoverCertificate> certificate;
    std::optional<CoverClause>      failed;
    std::string                     reason;

    explicit operator bool() const noexcept {
      return certificate.has_value();
    }

    CoverCertificate const& value() const {
      if (!certificate) {
        throw InvariantViolation("cover check failed: " + reason);
      }
      return *certificate;
    }
  };

  // The multiplier is computed when not claimed (abelian variety only).
  // A projection with kernel A, if supplied, serves as the quotient
  // witness; otherwise an isomorphism cover/A -> base is searched for.
  inline CoverCheck check_v_cover(FiniteGroup const&                   cover,
                                  Subgroup const&                      A,
                                  FiniteGroup const&                   base,
                                  Variety const&                       V,
                                  std::optional<FgAbelianGroup> const& claimed,
                                  std::optional<Homomorphism> const& projection = {}) {
    if (!A.parent().same(cover)) {
      throw InvalidInput("check_v_cover: A is not a subgroup of the cover");
    }
    if (!claimed && !V.is_abelian()) {
      throw InvalidInput("check_v_cover: the multiplier of " + V.name()
                         + " must be supplied");
    }
    CoverCheck out;
    auto fail = [&](CoverClause c, std::string why) {
      out.failed = c;
      out.reason = to_string(c) + ": " + why;
      return out;
    };
    if (!is_normal(A)) {
      return fail(CoverClause::normal, "conjugation leaves A");
    }
    // (1) cover / A = base
    std::optional<Homomorphism> pi;
    if (projection) {
      if (!projection->source().same(cover) || !projection->target().same(base)) {
        throw InvalidInput("check_v_cover: projection has the wrong domain");
      }
      if (!projection->is_surjective()) {
        return fail(CoverClause::quotient, "projection is not surjective");
      }
      if (!(projection->kernel() == A)) {
        return fail(CoverClause::quotient, "projection kernel differs from A");
      }
      pi = projection;
    } else {
      if (cover.size() != A.size() * base.size()) {
        return fail(CoverClause::quotient, "orders differ");
      }
      auto Q   = quotient_group(cover, A);
      auto iso = is_isomorphic(Q.group, base);
      if (!iso) {
        return fail(CoverClause::quotient, iso.reason);
      }
      pi = Q.projection.then(*iso.witness);
    }
    // (2) A in V(cover) and V*(cover)
    auto const verbal   = verbal_subgroup(V, cover);
    auto const marginal = marginal_subgroup(V, cover);
    if (!A.is_subset_of(verbal)) {
      return fail(CoverClause::containment,
                  "A is not contained in the verbal subgroup (order "
                      + std::to_string(verbal.size()) + ")");
    }
    if (!A.is_subset_of(marginal)) {
      return fail(CoverClause::containment,
                  "A is not contained in the marginal subgroup (order "
                      + std::to_string(marginal.size()) + ")");
    }
    // (3) A = VM(base)
    FgAbelianGroup const M = claimed ? *claimed : schur_multiplier(base).group;
    auto const           invariants = abelian_invariants(A);
    bool const           a_abelian  = as_group(A).group.is_abelian();
    if (!a_abelian || invariants != M) {
      return fail(CoverClause::multiplier,
                  "A = " + invariants.to_string() + ", multiplier = " + M.to_string());
    }
    CoverCertificate cert(cover, A, base, V, M, *pi);
    cert._verbal_order   = verbal.size();
    cert._marginal_order = marginal.size();
    cert._supplied       = claimed.has_value();
    out.certificate      = std::move(cert);
    return out;
  }

  inline bool CoverCertificate::revalidate() const {
    std::optional<FgAbelianGroup> claim;
    if (_supplied) {
      claim = _multiplier;
    }
    return static_cast<bool>(
        check_v_cover(_cover, _A, _base, _variety, claim, _projection));
  }

  ////////////////////////////////////////////////////////////////////////
  // Schur-Baer divisibility
  ////////////////////////////////////////////////////////////////////////

  struct SchurBaerReport {
    std::size_t    group_order      = 1;
    FgAbelianGroup multiplier;
    std::uint64_t  multiplier_order = 1;
    unsigned       minimal_power    = 0;  // least k with |M| dividing |G|^k
    unsigned       bound            = 0;  // floor(log2 |M|) + 1
    bool           holds            = false;
  };

  inline SchurBaerReport schur_baer_divisibility(FiniteGroup const& G) {
    SchurBaerReport r;
    r.group_order      = G.size();
    r.multiplier       = schur_multiplier(G).group;
    r.multiplier_order = r.multiplier.order();
    unsigned lg        = 0;
    while ((std::uint64_t(1) << (lg + 1)) <= r.multiplier_order) {
      ++lg;
    }
    r.bound = lg + 1;
    Integer power = 1;
    for (unsigned k = 0; k <= r.bound; ++k) {
      if (Integer(power % r.multiplier_order).is_zero()) {
        r.minimal_power = k;
        r.holds         = true;
        break;
      }
      power *= G.size();
    }
    return r;
  }

}  // namespace vcg
