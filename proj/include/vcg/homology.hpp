#pragma once

// Schur multipliers of finite groups.
//
// Bar method. In the normalized bar complex with trivial coefficients,
// C2 / im d3 = H2(G) + Z^(n-1) since d2 has rank n - 1 (H1 = G_ab is
// finite). H2 is |G|-torsion, so its p-part is read off from
// (C2 / im d3) (x) Z/p^(a+1) where p^a || n: summands of exponent a+1 are
// the free part, the smaller ones are M(G)_p.
//
// Cocycle method. Over Z/p^k, |H^2(G, Z/p^k)| = |Z^2| / |B^2| and
// H^2(G, Z/p^k) = Hom(M(G), Z/p^k) + Ext(G_ab, Z/p^k). The Ext term is
// known from the invariant factors of G_ab, which leaves
// |Hom(M(G), Z/p^k)| = prod_i p^min(k, e_i) for k = 1..a and hence the
// exponents e_i of M(G)_p.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"
#include "vcg/integer.hpp"
#include "vcg/lattice.hpp"
#include "vcg/local_lattice.hpp"
#include "vcg/word.hpp"

namespace vcg {

  // Largest groups handled by each routine.
  inline constexpr std::size_t bar_method_cap      = 36;
  inline constexpr std::size_t cocycle_method_cap  = 36;
  inline constexpr std::size_t basis_cycle_cap     = 24;
  inline constexpr std::size_t universal_cocycle_cap = 16;
  inline constexpr std::size_t relation_module_cap = 12;

  enum class MultiplierMethod { bar, cocycle };

  inline std::string to_string(MultiplierMethod m) {
    return m == MultiplierMethod::bar ? "bar-homology" : "cocycle";
  }

  namespace detail {
    // Position of g among the non-identity elements.
    inline std::vector<std::int64_t> nonidentity_positions(FiniteGroup const& G) {
      std::vector<std::int64_t> pos(G.size(), -1);
      std::int64_t              k = 0;
      for (Element g = 0; g < G.size(); ++g) {
        if (g != G.identity()) {
          pos[g] = k++;
        }
      }
      return pos;
    }

    // p-primary part of C2 / im d3 on the normalized bar complex.
    struct PrimaryPart {
      std::uint64_t         p = 2;
      unsigned              a = 0;  // p^a || |G|
      LocalQuotient         quotient;
      std::vector<unsigned> torsion;    // indices of torsion summands
      std::vector<unsigned> exponents;  // their exponents, ascending
    };

    // Invariant-factor assembly of the primary parts: factor j collects,
    // from every prime, the summand of the same rank counted from the top.
    struct Assembly {
      std::vector<std::uint64_t> factors;
      // slot[j][t] = index into torsion of prime t for factor j, or -1
      std::vector<std::vector<std::int64_t>> slot;
    };

    inline Assembly assemble(std::vector<PrimaryPart> const& parts) {
      std::size_t r = 0;
      for (auto const& pp : parts) {
        r = std::max(r, pp.exponents.size());
      }
      Assembly as;
      as.factors.assign(r, 1);
      as.slot.assign(r, std::vector<std::int64_t>(parts.size(), -1));
      for (std::size_t t = 0; t < parts.size(); ++t) {
        auto const&       ex = parts[t].exponents;
        std::size_t const off = r - ex.size();
        for (std::size_t i = 0; i < ex.size(); ++i) {
          as.factors[off + i] *= ipow(parts[t].p, ex[i]);
          as.slot[off + i][t] = static_cast<std::int64_t>(i);
        }
      }
      return as;
    }

    // x = c_t mod m_t for pairwise coprime m_t.
    inline std::uint64_t crt(std::vector<std::uint64_t> const& c,
                             std::vector<std::uint64_t> const& m) {
      Integer x = 0, M = 1;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (m[i] == 1) {
          continue;
        }
        // x + M t = c_i mod m_i
        auto const  g = extended_gcd(M, Integer(m[i]));
        Integer     t = floor_mod((Integer(c[i]) - x) * g.s, Integer(m[i]));
        x += M * t;
        M *= m[i];
      }
      return static_cast<std::uint64_t>(floor_mod(x, M));
    }
  }  // namespace detail

  // Result of a multiplier computation. For the bar method this also
  // carries everything needed to read homology classes of 2-cycles.
  class MultiplierResult {
   public:
    FgAbelianGroup   group;
    MultiplierMethod method = MultiplierMethod::bar;
    // Integer 2-cycles indexed by g * n + h (entries with g or h the
    // identity are zero); basis_cycles[j] has coordinates e_j. Bar method
    // only, and only when requested.
    std::vector<IntVector> basis_cycles;

    // Invariant-factor coordinates of the class of a normalized 2-chain
    // given sparsely as (g * n + h, coefficient). Meaningful for cycles.
    std::vector<std::uint64_t> coordinates(SparseVector const& chain) const {
      detail::ensure(_parts != nullptr, "MultiplierResult: coordinates need "
                                        "the bar method");
      std::size_t const n = _order;
      SparseVector      local;
      for (auto const& [idx, c] : chain) {
        auto const g = idx / n, h = idx % n;
        if (_pos[g] < 0 || _pos[h] < 0) {
          continue;
        }
        local.emplace_back(
            static_cast<std::uint32_t>(_pos[g] * std::int64_t(n - 1) + _pos[h]), c);
      }
      std::vector<std::vector<std::int64_t>> per_prime;
      for (auto const& pp : *_parts) {
        per_prime.push_back(pp.quotient.coordinates(local));
      }
      std::vector<std::uint64_t> out(_assembly.factors.size());
      for (std::size_t j = 0; j < out.size(); ++j) {
        std::vector<std::uint64_t> c, m;
        for (std::size_t t = 0; t < _parts->size(); ++t) {
          auto const s = _assembly.slot[j][t];
          if (s < 0) {
            continue;
          }
          auto const& pp  = (*_parts)[t];
          auto const  idx = pp.torsion[static_cast<std::size_t>(s)];
          c.push_back(static_cast<std::uint64_t>(per_prime[t][idx]));
          m.push_back(ipow(pp.p, pp.exponents[static_cast<std::size_t>(s)]));
        }
        out[j] = detail::crt(c, m);
      }
      return out;
    }

    std::vector<std::uint64_t> coordinates(IntVector const& chain) const {
      SparseVector s;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!chain[i].is_zero()) {
          // reduce modulo |G|^2, which every primary modulus divides
          Integer const m = Integer(_order) * _order;
          s.emplace_back(static_cast<std::uint32_t>(i),
                         static_cast<std::int64_t>(floor_mod(chain[i], m)));
        }
      }
      return coordinates(s);
    }

    std::size_t group_order() const noexcept {
      return _order;
    }

   private:
    friend MultiplierResult schur_multiplier_bar(FiniteGroup const&, bool);

    std::size_t                                     _order = 1;
    std::vector<std::int64_t>                       _pos;
    std::shared_ptr<std::vector<detail::PrimaryPart> const> _parts;
    detail::Assembly                                _assembly;
  };

  namespace detail {
    // d3 relations [h|k] - [gh|k] + [g|hk] - [g|h] on normalized chains.
    inline void insert_bar_relations(FiniteGroup const&               G,
                                     std::vector<std::int64_t> const& pos,
                                     LocalLattice&                    L) {
      std::size_t const n = G.size(), m = n - 1;
      auto const        e = G.identity();
      auto col = [&](Element g, Element h) {
        return static_cast<std::uint32_t>(pos[g] * std::int64_t(m) + pos[h]);
      };
      SparseVector v;
      for (Element g = 0; g < n; ++g) {
        if (g == e) {
          continue;
        }
        for (Element h = 0; h < n; ++h) {
          if (h == e) {
            continue;
          }
          auto const gh = G.mul(g, h);
          for (Element k = 0; k < n; ++k) {
            if (k == e) {
              continue;
            }
            auto const hk = G.mul(h, k);
            v.clear();
            v.emplace_back(col(h, k), 1);
            if (gh != e) {
              v.emplace_back(col(gh, k), -1);
            }
            if (hk != e) {
              v.emplace_back(col(g, hk), 1);
            }
            v.emplace_back(col(g, h), -1);
            L.insert(v);
          }
        }
      }
    }

    // Integer basis of ker d2 on normalized chains, as columns of V.
    inline std::vector<IntVector> bar_cycle_basis(FiniteGroup const&               G,
                                                  std::vector<std::int64_t> const& pos) {
      std::size_t const n = G.size(), m = n - 1;
      auto const        e = G.identity();
      IntMatrix         d2(m, m * m);
      for (Element g = 0; g < n; ++g) {
        for (Element h = 0; h < n; ++h) {
          if (g == e || h == e) {
            continue;
          }
          auto const c  = static_cast<std::size_t>(pos[g] * std::int64_t(m) + pos[h]);
          auto const gh = G.mul(g, h);
          d2(static_cast<std::size_t>(pos[h]), c) += 1;
          if (gh != e) {
            d2(static_cast<std::size_t>(pos[gh]), c) -= 1;
          }
          d2(static_cast<std::size_t>(pos[g]), c) += 1;
        }
      }
      auto snf = smith_normal_form(d2, SnfTransforms::right);
      detail::ensure(snf.rank == m, "bar complex: d2 does not have rank n-1");
      std::vector<IntVector> basis;
      for (std::size_t j = snf.rank; j < m * m; ++j) {
        basis.push_back(snf.V.column(j));
      }
      return basis;
    }
  }  // namespace detail

  // M(G) via the normalized bar complex. With basis = true, integer
  // 2-cycles representing the invariant-factor generators are computed.
  inline MultiplierResult schur_multiplier_bar(FiniteGroup const& G,
                                               bool               basis = false) {
    std::size_t const n = G.size();
    if (n > bar_method_cap) {
      throw CapExceeded("schur_multiplier (bar): |G| = " + std::to_string(n)
                        + " exceeds the cap " + std::to_string(bar_method_cap));
    }
    if (basis && n > basis_cycle_cap) {
      throw CapExceeded("schur_multiplier (bar): basis cycles need |G| <= "
                        + std::to_string(basis_cycle_cap));
    }
    MultiplierResult r;
    r.method = MultiplierMethod::bar;
    r._order = n;
    r._pos   = detail::nonidentity_positions(G);
    auto parts = std::make_shared<std::vector<detail::PrimaryPart>>();
    std::size_t const m = n - 1;
    for (auto [p, a] : factorize(n)) {
      detail::PrimaryPart pp;
      pp.p = p;
      pp.a = a;
      LocalLattice L(p, a + 1, m * m);
      detail::insert_bar_relations(G, r._pos, L);
      pp.quotient = L.quotient();
      std::size_t free = 0;
      auto const& ex   = pp.quotient.exponents();
      for (unsigned i = 0; i < ex.size(); ++i) {
        if (ex[i] == a + 1) {
          ++free;
        } else {
          pp.torsion.push_back(i);
          pp.exponents.push_back(ex[i]);
        }
      }
      detail::ensure(free == m, "bar complex: free rank of C2/im d3 is not "
                                "|G| - 1");
      detail::ensure(std::is_sorted(pp.exponents.begin(), pp.exponents.end()),
                     "bar complex: exponents not ascending");
      parts->push_back(std::move(pp));
    }
    r._assembly = detail::assemble(*parts);
    r._parts    = parts;
    r.group     = FgAbelianGroup(r._assembly.factors);

    if (basis && !r.group.is_trivial()) {
      auto const kernel = detail::bar_cycle_basis(G, r._pos);
      // per prime: coordinates of the kernel basis, then solve for e_i
      std::vector<std::vector<IntVector>> prime_cycles;
      for (auto const& pp : *parts) {
        std::size_t const t = pp.torsion.size();
        std::vector<IntVector> cyc;
        if (t == 0) {
          prime_cycles.push_back(cyc);
          continue;
        }
        IntMatrix            K(t, kernel.size());
        std::vector<Integer> mods;
        for (std::size_t i = 0; i < t; ++i) {
          mods.push_back(Integer(ipow(pp.p, pp.exponents[i])));
        }
        Integer const big = Integer(ipow(pp.p, pp.a + 1));
        for (std::size_t j = 0; j < kernel.size(); ++j) {
          SparseVector s;
          for (std::size_t c = 0; c < kernel[j].size(); ++c) {
            if (!kernel[j][c].is_zero()) {
              s.emplace_back(static_cast<std::uint32_t>(c),
                             static_cast<std::int64_t>(floor_mod(kernel[j][c], big)));
            }
          }
          auto const co = pp.quotient.coordinates(s);
          for (std::size_t i = 0; i < t; ++i) {
            K(i, j) = co[pp.torsion[i]];
          }
        }
        for (std::size_t i = 0; i < t; ++i) {
          IntVector b(t, 0);
          b[i]   = 1;
          auto x = solve_linear_congruences(K, b, mods);
          detail::ensure(x.has_value(), "bar complex: torsion generator is "
                                        "not hit by any cycle");
          IntVector z(m * m, 0);
          for (std::size_t j = 0; j < kernel.size(); ++j) {
            if ((*x)[j].is_zero()) {
              continue;
            }
            for (std::size_t c = 0; c < z.size(); ++c) {
              if (!kernel[j][c].is_zero()) {
                z[c] += (*x)[j] * kernel[j][c];
              }
            }
          }
          cyc.push_back(std::move(z));
        }
        prime_cycles.push_back(std::move(cyc));
      }
      // combine primes: z_j = sum_t w_t z_{t, slot}, w_t = 1 mod p^a, 0 mod n/p^a
      std::vector<Integer> w;
      for (auto const& pp : *parts) {
        std::uint64_t const pa = ipow(pp.p, pp.a);
        std::uint64_t const co = n / pa;
        w.push_back(Integer(co) * inverse_mod(static_cast<std::int64_t>(co % pa),
                                              static_cast<std::int64_t>(pa)));
      }
      std::vector<Element> nonid;
      for (Element g = 0; g < n; ++g) {
        if (g != G.identity()) {
          nonid.push_back(g);
        }
      }
      for (std::size_t j = 0; j < r._assembly.factors.size(); ++j) {
        IntVector z(n * n, 0);
        for (std::size_t t = 0; t < parts->size(); ++t) {
          auto const s = r._assembly.slot[j][t];
          if (s < 0) {
            continue;
          }
          auto const& zc = prime_cycles[t][static_cast<std::size_t>(s)];
          for (std::size_t c = 0; c < zc.size(); ++c) {
            if (!zc[c].is_zero()) {
              z[nonid[c / m] * n + nonid[c % m]] += w[t] * zc[c];
            }
          }
        }
        r.basis_cycles.push_back(std::move(z));
      }
      // cross-check: the cycles are cycles and have unit coordinates
      for (std::size_t j = 0; j < r.basis_cycles.size(); ++j) {
        auto const& z = r.basis_cycles[j];
        IntVector   bd(n, 0);
        for (Element g = 0; g < n; ++g) {
          for (Element h = 0; h < n; ++h) {
            auto const& c = z[g * n + h];
            if (c.is_zero()) {
              continue;
            }
            bd[h] += c;
            bd[G.mul(g, h)] -= c;
            bd[g] += c;
          }
        }
        for (Element g = 0; g < n; ++g) {
          detail::ensure(g == G.identity() || bd[g].is_zero(),
                         "bar complex: basis chain is not a cycle");
        }
        auto co = r.coordinates(z);
        for (std::size_t i = 0; i < co.size(); ++i) {
          detail::ensure(co[i] == (i == j ? 1u : 0u),
                         "bar complex: basis cycle has wrong coordinates");
        }
      }
    }
    return r;
  }

  // M(G) via 2-cocycles modulo coboundaries with Z/p^k coefficients.
  inline MultiplierResult schur_multiplier_cocycle(FiniteGroup const& G) {
    std::size_t const n = G.size();
    if (n > cocycle_method_cap) {
      throw CapExceeded("schur_multiplier (cocycle): |G| = " + std::to_string(n)
                        + " exceeds the cap "
                        + std::to_string(cocycle_method_cap));
    }
    auto const                 gab = abelianization(G);
    std::vector<std::uint64_t> cyclic;
    for (auto [p, a] : factorize(n)) {
      // h[k] = log_p |Hom(M, Z/p^k)|
      std::vector<std::int64_t> h{0};
      for (unsigned k = 1; k <= a; ++k) {
        auto const log_size = [&](LocalLattice& L) {
          std::int64_t s = 0;
          auto const   q = L.quotient();
          for (auto e : q.exponents()) {
            s += e;
          }
          return s;
        };
        // Z^2: kernel of delta2 on all n^2 cochains
        LocalLattice Z(p, k, n * n);
        SparseVector v;
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            auto const xy = G.mul(x, y);
            for (Element z = 0; z < n; ++z) {
              auto const yz = G.mul(y, z);
              v.clear();
              v.emplace_back(static_cast<std::uint32_t>(y * n + z), 1);
              v.emplace_back(static_cast<std::uint32_t>(xy * n + z), -1);
              v.emplace_back(static_cast<std::uint32_t>(x * n + yz), 1);
              v.emplace_back(static_cast<std::uint32_t>(x * n + y), -1);
              Z.insert(v);
            }
          }
        }
        // Hom(G, Z/p^k) = kernel of delta1
        LocalLattice H1(p, k, n);
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            v.clear();
            v.emplace_back(static_cast<std::uint32_t>(x), 1);
            v.emplace_back(static_cast<std::uint32_t>(y), 1);
            v.emplace_back(static_cast<std::uint32_t>(G.mul(x, y)), -1);
            H1.insert(v);
          }
        }
        std::int64_t const log_z2  = log_size(Z);
        std::int64_t const log_hom = log_size(H1);
        // |B^2| = |C^1| / |Hom(G, Z/p^k)|
        std::int64_t const log_b2 = std::int64_t(k) * std::int64_t(n) - log_hom;
        std::int64_t       log_ext = 0;
        for (auto d : gab.invariant_factors()) {
          log_ext += std::min<std::int64_t>(k, valuation(d, p));
        }
        h.push_back(log_z2 - log_b2 - log_ext);
      }
      // #{e_i >= k} = h[k] - h[k-1]
      for (unsigned k = 1; k <= a; ++k) {
        std::int64_t const ge  = h[k] - h[k - 1];
        std::int64_t const ge1 = k < a ? h[k + 1] - h[k] : 0;
        detail::ensure(ge >= ge1 && ge1 >= 0,
                       "cocycle method: inconsistent Hom counts");
        for (std::int64_t i = 0; i < ge - ge1; ++i) {
          cyclic.push_back(ipow(p, k));
        }
      }
    }
    MultiplierResult r;
    r.method = MultiplierMethod::cocycle;
    r.group  = FgAbelianGroup::from_cyclic_orders(cyclic);
    return r;
  }

  inline MultiplierResult schur_multiplier(FiniteGroup const& G,
                                           MultiplierMethod   method = MultiplierMethod::bar) {
    return method == MultiplierMethod::bar ? schur_multiplier_bar(G)
                                           : schur_multiplier_cocycle(G);
  }

  ////////////////////////////////////////////////////////////////////////
  // Induced maps
  ////////////////////////////////////////////////////////////////////////

  // A homomorphism between finite abelian groups in invariant-factor
  // coordinates: column j is the image of generator j of the source.
  struct AbelianMap {
    FgAbelianGroup                          source;
    FgAbelianGroup                          target;
    std::vector<std::vector<std::uint64_t>> columns;

    std::vector<std::uint64_t> operator()(std::vector<std::uint64_t> const& x) const {
      auto const&                tf = target.invariant_factors();
      std::vector<std::uint64_t> y(tf.size(), 0);
      for (std::size_t j = 0; j < x.size(); ++j) {
        for (std::size_t i = 0; i < tf.size(); ++i) {
          y[i] = static_cast<std::uint64_t>(
              (Integer(y[i]) + Integer(columns[j][i]) * x[j]) % tf[i]);
        }
      }
      return y;
    }

    // Left-to-right composition: x -> next(this(x)).
    AbelianMap then(AbelianMap const& next) const {
      AbelianMap out{source, next.target, {}};
      for (auto const& c : columns) {
        out.columns.push_back(next(c));
      }
      return out;
    }

    bool is_identity() const {
      if (source != target) {
        return false;
      }
      for (std::size_t j = 0; j < columns.size(); ++j) {
        for (std::size_t i = 0; i < columns[j].size(); ++i) {
          if (columns[j][i] != (i == j ? 1u : 0u)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_zero() const {
      for (auto const& c : columns) {
        for (auto v : c) {
          if (v != 0) {
            return false;
          }
        }
      }
      return true;
    }

    // Exhaustive over the finite source.
    bool is_injective() const {
      auto const& sf = source.invariant_factors();
      std::uint64_t total = source.order();
      if (total > (1u << 20)) {
        throw CapExceeded("AbelianMap::is_injective: source too large");
      }
      std::vector<std::uint64_t> x(sf.size(), 0);
      for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t r = t;
        bool          nz = false;
        for (std::size_t i = 0; i < sf.size(); ++i) {
          x[i] = r % sf[i];
          r /= sf[i];
          nz |= x[i] != 0;
        }
        if (nz) {
          auto y = (*this)(x);
          if (std::all_of(y.begin(), y.end(), [](auto v) { return v == 0; })) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_isomorphism() const {
      return source.order() == target.order() && is_injective();
    }

    friend bool operator==(AbelianMap const& a, AbelianMap const& b) {
      return a.source == b.source && a.target == b.target
             && a.columns == b.columns;
    }
  };

  // Pushes 2-cycles forward along [g|h] -> [phi g | phi h].
  inline AbelianMap multiplier_induced_map(Homomorphism const&     phi,
                                           MultiplierResult const& source,
                                           MultiplierResult const& target) {
    auto const&       G = phi.source();
    std::size_t const n = G.size(), nt = phi.target().size();
    detail::ensure(source.basis_cycles.size()
                       == source.group.invariant_factors().size(),
                   "multiplier_induced_map: source basis cycles missing");
    AbelianMap out{source.group, target.group, {}};
    for (auto const& z : source.basis_cycles) {
      std::map<std::uint32_t, Integer> img;
      for (Element g = 0; g < n; ++g) {
        for (Element h = 0; h < n; ++h) {
          if (!z[g * n + h].is_zero()) {
            img[static_cast<std::uint32_t>(phi(g) * nt + phi(h))] += z[g * n + h];
          }
        }
      }
      IntVector v(nt * nt, 0);
      for (auto const& [k, c] : img) {
        v[k] = c;
      }
      out.columns.push_back(target.coordinates(v));
    }
    return out;
  }

  inline AbelianMap multiplier_induced_map(Homomorphism const& phi) {
    return multiplier_induced_map(phi,
                                  schur_multiplier_bar(phi.source(), true),
                                  schur_multiplier_bar(phi.target(), false));
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal cocycle
  ////////////////////////////////////////////////////////////////////////

  // A 2-cocycle G x G -> A with A finite abelian in coordinates.
  struct Cocycle2 {
    FiniteGroup                             group;
    FgAbelianGroup                          values;
    std::vector<std::vector<std::uint64_t>> f;  // index g * n + h

    std::vector<std::uint64_t> const& operator()(Element g, Element h) const {
      return f[std::size_t(g) * group.size() + h];
    }

    std::vector<std::uint64_t> add(std::vector<std::uint64_t> a,
                                   std::vector<std::uint64_t> const& b) const {
      auto const& d = values.invariant_factors();
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = (a[i] + b[i]) % d[i];
      }
      return a;
    }

    // f(x,y) + f(xy,z) = f(y,z) + f(x,yz) everywhere.
    bool satisfies_cocycle_identity() const {
      std::size_t const n = group.size();
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          for (Element z = 0; z < n; ++z) {
            if (add((*this)(x, y), (*this)(group.mul(x, y), z))
                != add((*this)(y, z), (*this)(x, group.mul(y, z)))) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool is_normalized() const {
      auto const e = group.identity();
      for (Element g = 0; g < group.size(); ++g) {
        for (auto const* v : {&(*this)(e, g), &(*this)(g, e)}) {
          if (std::any_of(v->begin(), v->end(), [](auto x) { return x != 0; })) {
            return false;
          }
        }
      }
      return true;
    }

    // <f, z> for an integer 2-chain indexed by g * n + h.
    std::vector<std::uint64_t> pair(IntVector const& z) const {
      auto const&                d = values.invariant_factors();
      std::vector<std::uint64_t> s(d.size(), 0);
      for (std::size_t c = 0; c < z.size(); ++c) {
        if (z[c].is_zero()) {
          continue;
        }
        for (std::size_t i = 0; i < d.size(); ++i) {
          s[i] = static_cast<std::uint64_t>(
              floor_mod(Integer(s[i]) + z[c] * f[c][i], Integer(d[i])));
        }
      }
      return s;
    }
  };

  // The cocycle f(g,h) = class of [g|h] projected to the torsion summand
  // of C2 / im d3. It vanishes on boundaries, so it is a normalized
  // cocycle, and its pairing with the basis cycles is the identity.
  inline Cocycle2 universal_cocycle(FiniteGroup const& G) {
    std::size_t const n = G.size();
    if (n > universal_cocycle_cap) {
      throw CapExceeded("universal_cocycle: |G| = " + std::to_string(n)
                        + " exceeds the cap "
                        + std::to_string(universal_cocycle_cap));
    }
    auto     M = schur_multiplier_bar(G, true);
    Cocycle2 c{G, M.group, {}};
    c.f.assign(n * n, std::vector<std::uint64_t>(M.group.invariant_factors().size(), 0));
    for (Element g = 0; g < n; ++g) {
      for (Element h = 0; h < n; ++h) {
        if (g == G.identity() || h == G.identity()) {
          continue;
        }
        c.f[g * n + h] = M.coordinates(
            SparseVector{{static_cast<std::uint32_t>(g * n + h), 1}});
      }
    }
    detail::ensure(c.is_normalized(), "universal_cocycle: not normalized");
    detail::ensure(c.satisfies_cocycle_identity(),
                   "universal_cocycle: cocycle identity fails");
    for (std::size_t j = 0; j < M.basis_cycles.size(); ++j) {
      auto const v = c.pair(M.basis_cycles[j]);
      for (std::size_t i = 0; i < v.size(); ++i) {
        detail::ensure(v[i] == (i == j ? 1u : 0u),
                       "universal_cocycle: pairing is not the identity");
      }
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relation module of the standard presentation
  ////////////////////////////////////////////////////////////////////////

  struct RelationModuleData {
    StandardPresentation presentation;
    // relations[:, c] is one associativity relation on the n^2
    // generators e_{x,y} (row x * n + y)
    IntMatrix              relations;
    TorsionComplement      split;
    std::vector<IntVector> torsion_basis;
    std::vector<IntVector> complement_basis;
    std::vector<Word>      complement_words;
    FgAbelianGroup         torsion;
    std::size_t            free_rank = 0;
  };

  // prod r_{x,y}^c(x,y) in the free group on the standard generators.
  inline Word relator_product(StandardPresentation const& sp, IntVector const& c) {
    Word w;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) {
        continue;
      }
      if (c[i] > 1000000 || c[i] < -1000000) {
        throw CapExceeded("relator_product: coefficient too large for a word");
      }
      auto const x = static_cast<Element>(i / sp.order);
      auto const y = static_cast<Element>(i % sp.order);
      w            = w * sp.relator(x, y).pow(static_cast<std::int64_t>(c[i]));
    }
    return w;
  }

  // R/[R,F] for the standard presentation of G: generated by the classes
  // e_{x,y} of r_{x,y}, subject to e_{x,y} + e_{xy,z} = e_{y,z} + e_{x,yz}.
  inline RelationModuleData relation_module_splitting(FiniteGroup const& G) {
    std::size_t const n = G.size();
    if (n > relation_module_cap) {
      throw CapExceeded("relation_module_splitting: |G| = " + std::to_string(n)
                        + " exceeds the cap "
                        + std::to_string(relation_module_cap));
    }
    RelationModuleData d;
    d.presentation = standard_presentation(G);
    std::vector<std::vector<std::int64_t>> cols;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          std::vector<std::int64_t> c(n * n, 0);
          c[x * n + y] += 1;
          c[G.mul(x, y) * n + z] += 1;
          c[y * n + z] -= 1;
          c[x * n + G.mul(y, z)] -= 1;
          if (std::any_of(c.begin(), c.end(), [](auto v) { return v != 0; })) {
            cols.push_back(std::move(c));
          }
        }
      }
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    d.relations = IntMatrix(n * n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < n * n; ++i) {
        d.relations(i, j) = cols[j][i];
      }
    }
    d.split            = torsion_complement(d.relations);
    d.torsion_basis    = d.split.torsion_basis;
    d.complement_basis = d.split.complement_basis;
    d.torsion          = FgAbelianGroup(d.split.cokernel.group.invariant_factors());
    d.free_rank        = d.split.cokernel.group.free_rank();
    auto const M       = schur_multiplier_bar(G).group;
    if (d.torsion != M) {
      detail::invariant_failed("relation module torsion " + d.torsion.to_string()
                               + " differs from M(G) = " + M.to_string());
    }
    detail::ensure(d.free_rank == n, "relation module: free rank is not |G|");
    for (auto const& c : d.complement_basis) {
      d.complement_words.push_back(relator_product(d.presentation, c));
    }
    return d;
  }

}  // namespace vcg
