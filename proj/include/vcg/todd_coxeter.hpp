#pragma once

// Todd-Coxeter coset enumeration, HLT strategy with lookahead, following
// the SCANANDFILL / COINCIDENCE formulation in Holt, Eick and O'Brien,
// Handbook of Computational Group Theory, section 5.1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"
#include "vcg/word.hpp"

namespace vcg {

  inline constexpr std::size_t default_max_cosets = 2000000;

  // VCG_TC_MAX_COSETS, or the default when unset or malformed.
  inline std::size_t max_cosets_from_env() {
    if (char const* v = std::getenv("VCG_TC_MAX_COSETS")) {
      char*              end = nullptr;
      unsigned long long n   = std::strtoull(v, &end, 10);
      if (end != v && *end == '\0' && n > 0) {
        return static_cast<std::size_t>(n);
      }
    }
    return default_max_cosets;
  }

  enum class EnumerationStrategy { hlt };

  // Complete coset table: entry (c, 2i) is c * g_i, (c, 2i+1) is c * g_i^-1.
  // Coset 0 is the subgroup; numbering is the breadth-first order.
  struct CosetTable {
    std::size_t                ngens   = 0;
    std::size_t                ncosets = 0;
    std::vector<std::uint32_t> table;
    // statistics of the run
    std::size_t total_defined = 0;
    std::size_t max_active    = 0;

    std::uint32_t operator()(std::size_t coset, std::size_t column) const {
      return table[coset * 2 * ngens + column];
    }

    std::uint32_t act(std::size_t coset, std::size_t gen, std::int64_t e) const {
      std::size_t const col = 2 * gen + (e < 0 ? 1 : 0);
      std::int64_t const k  = e < 0 ? -e : e;
      std::uint32_t      c  = static_cast<std::uint32_t>(coset);
      for (std::int64_t i = 0; i < k; ++i) {
        c = (*this)(c, col);
      }
      return c;
    }
  };

  namespace detail {
    class Enumerator {
      static constexpr std::int32_t undefined = -1;

     public:
      Enumerator(Presentation const&      P,
                 std::vector<Word> const& subgroup,
                 std::size_t              max_cosets)
          : _ngens(P.generators().size()),
            _ncols(2 * P.generators().size()),
            _max(max_cosets) {
        if (max_cosets == 0) {
          throw InvalidInput("todd_coxeter: max_cosets must be at least 1");
        }
        for (auto const& r : P.relators()) {
          _rels.push_back(compile(P, r));
        }
        for (auto const& h : subgroup) {
          _subgroup.push_back(compile(P, h));
        }
        new_coset();
      }

      CosetTable run() {
        for (auto const& h : _subgroup) {
          std::size_t zero = 0;
          reserve(h.size(), zero);
          scan_and_fill(0, h);
        }
        std::size_t a = 0;
        while (a < _p.size()) {
          if (!alive(a) || !process(a)) {
            // either dead, or renumbered/killed during a lookahead: the
            // coset now at position a starts again from the first relator
            if (!alive(a)) {
              ++a;
            }
            continue;
          }
          ++a;
        }
        compact();
        return standardize();
      }

     private:
      // Scans every relator at coset a, then fills its row. Returns false
      // if a lookahead replaced the coset at position a.
      bool process(std::size_t& a) {
        for (auto const& w : _rels) {
          if (!reserve(w.size(), a)) {
            return false;
          }
          scan_and_fill(static_cast<std::int32_t>(a), w);
          if (!alive(a)) {
            return false;
          }
        }
        for (std::size_t x = 0; x < _ncols; ++x) {
          if (!reserve(1, a)) {
            return false;
          }
          if (entry(a, x) == undefined) {
            define(static_cast<std::int32_t>(a), x);
          }
        }
        return true;
      }

      static std::size_t inv(std::size_t col) {
        return col ^ 1;
      }

      std::vector<std::size_t> compile(Presentation const& P, Word const& w) {
        std::vector<std::size_t> out;
        for (auto const& s : w.syllables()) {
          std::size_t const g   = P.generator_index(s.symbol);
          std::size_t const col = 2 * g + (s.exponent < 0 ? 1 : 0);
          std::int64_t const k  = s.exponent < 0 ? -s.exponent : s.exponent;
          out.insert(out.end(), static_cast<std::size_t>(k), col);
        }
        return out;
      }

      std::int32_t& entry(std::size_t c, std::size_t col) {
        return _table[c * _ncols + col];
      }

      bool alive(std::size_t c) const {
        return c < _p.size() && _p[c] == static_cast<std::int32_t>(c);
      }

      std::int32_t new_coset() {
        auto const c = static_cast<std::int32_t>(_p.size());
        _p.push_back(c);
        _table.resize(_table.size() + _ncols, undefined);
        ++_active;
        ++_total;
        _max_active = std::max(_max_active, _active);
        return c;
      }

      void define(std::int32_t a, std::size_t x) {
        auto const b  = new_coset();
        entry(a, x)   = b;
        entry(b, inv(x)) = a;
      }

      // Makes room for `need` new cosets; a is updated to the position of
      // the same coset after renumbering. Returns false if that coset did
      // not survive the lookahead.
      bool reserve(std::size_t need, std::size_t& a) {
        if (_p.size() + need <= _max) {
          return true;
        }
        a = compact(a);
        if (_p.size() + need <= _max) {
          return true;
        }
        lookahead();
        bool const survived = alive(a);
        a                   = compact(a);
        if (_p.size() + need > _max) {
          throw CapExceeded("todd_coxeter: coset table overflow (more than "
                            + std::to_string(_max)
                            + " cosets); the group may be infinite or too "
                              "large");
        }
        return survived;
      }

      std::int32_t rep(std::int32_t k) {
        std::int32_t l = k;
        while (_p[l] != l) {
          l = _p[l];
        }
        while (_p[k] != l) {
          auto const next = _p[k];
          _p[k]           = l;
          k               = next;
        }
        return l;
      }

      void merge(std::int32_t k, std::int32_t l) {
        auto const phi = rep(k), psi = rep(l);
        if (phi == psi) {
          return;
        }
        auto const mu = std::min(phi, psi), nu = std::max(phi, psi);
        _p[nu] = mu;
        _queue.push_back(nu);
        --_active;
      }

      void coincidence(std::int32_t a, std::int32_t b) {
        _queue.clear();
        merge(a, b);
        for (std::size_t i = 0; i < _queue.size(); ++i) {
          auto const g = _queue[i];
          for (std::size_t x = 0; x < _ncols; ++x) {
            auto const d = entry(g, x);
            if (d == undefined) {
              continue;
            }
            entry(d, inv(x)) = undefined;
            auto const mu = rep(g), nu = rep(d);
            if (entry(mu, x) != undefined) {
              merge(nu, entry(mu, x));
            } else if (entry(nu, inv(x)) != undefined) {
              merge(mu, entry(nu, inv(x)));
            } else {
              entry(mu, x)      = nu;
              entry(nu, inv(x)) = mu;
            }
          }
        }
      }

      void scan_and_fill(std::int32_t a, std::vector<std::size_t> const& w) {
        std::int32_t   f = a, b = a;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        while (true) {
          while (i <= j && entry(f, w[i]) != undefined) {
            f = entry(f, w[i++]);
          }
          if (i > j) {
            if (f != a) {
              coincidence(f, a);
            }
            return;
          }
          while (j >= i && entry(b, inv(w[j])) != undefined) {
            b = entry(b, inv(w[j--]));
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            entry(f, w[i])      = b;
            entry(b, inv(w[i])) = f;
            return;
          }
          define(f, w[i]);
        }
      }

      // Forward/backward scan without definitions.
      void scan(std::int32_t a, std::vector<std::size_t> const& w) {
        if (w.empty()) {
          return;
        }
        std::int32_t    f = a, b = a;
        std::ptrdiff_t  i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        while (i <= j && entry(f, w[i]) != undefined) {
          f = entry(f, w[i++]);
        }
        if (i > j) {
          if (f != a) {
            coincidence(f, a);
          }
          return;
        }
        while (j >= i && entry(b, inv(w[j])) != undefined) {
          b = entry(b, inv(w[j--]));
        }
        if (j < i) {
          coincidence(f, b);
        } else if (i == j) {
          entry(f, w[i])      = b;
          entry(b, inv(w[i])) = f;
        }
      }

      void lookahead() {
        for (std::size_t c = 0; c < _p.size(); ++c) {
          for (auto const& w : _rels) {
            if (!alive(c)) {
              break;
            }
            scan(static_cast<std::int32_t>(c), w);
          }
        }
      }

      // Removes dead cosets preserving order; returns the new position of
      // the first live coset at or after `keep`.
      std::size_t compact(std::size_t keep = 0) {
        std::vector<std::int32_t> renum(_p.size(), undefined);
        std::int32_t              next = 0;
        std::size_t               kept = _p.size();
        for (std::size_t c = 0; c < _p.size(); ++c) {
          if (alive(c)) {
            if (c >= keep && kept == _p.size()) {
              kept = static_cast<std::size_t>(next);
            }
            renum[c] = next++;
          }
        }
        if (kept == _p.size()) {
          kept = static_cast<std::size_t>(next);
        }
        if (static_cast<std::size_t>(next) == _p.size()) {
          return keep;
        }
        std::vector<std::int32_t> t(static_cast<std::size_t>(next) * _ncols);
        for (std::size_t c = 0; c < _p.size(); ++c) {
          if (renum[c] == undefined) {
            continue;
          }
          for (std::size_t x = 0; x < _ncols; ++x) {
            auto const d = entry(c, x);
            t[renum[c] * _ncols + x] = d == undefined ? undefined : renum[d];
          }
        }
        _table = std::move(t);
        _p.resize(static_cast<std::size_t>(next));
        for (std::int32_t c = 0; c < next; ++c) {
          _p[c] = c;
        }
        return kept;
      }

      CosetTable standardize() {
        std::size_t const         n = _p.size();
        std::vector<std::int32_t> order{0};
        std::vector<std::int32_t> renum(n, undefined);
        renum[0] = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (std::size_t x = 0; x < _ncols; ++x) {
            auto const d = entry(order[i], x);
            detail::ensure(d != undefined, "todd_coxeter: incomplete table");
            if (renum[d] == undefined) {
              renum[d] = static_cast<std::int32_t>(order.size());
              order.push_back(d);
            }
          }
        }
        detail::ensure(order.size() == n, "todd_coxeter: unreachable coset");
        CosetTable out;
        out.ngens   = _ngens;
        out.ncosets = n;
        out.table.resize(n * _ncols);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t x = 0; x < _ncols; ++x) {
            out.table[i * _ncols + x]
                = static_cast<std::uint32_t>(renum[entry(order[i], x)]);
          }
        }
        out.total_defined = _total;
        out.max_active    = _max_active;
        // every generator acts as a permutation and every relator and
        // subgroup generator closes up where required
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t x = 0; x < _ncols; ++x) {
            detail::ensure(out.table[out.table[c * _ncols + x] * _ncols + inv(x)]
                               == c,
                           "todd_coxeter: table is not a permutation table");
          }
          for (auto const& w : _rels) {
            std::size_t d = c;
            for (auto x : w) {
              d = out.table[d * _ncols + x];
            }
            detail::ensure(d == c, "todd_coxeter: relator does not close");
          }
        }
        for (auto const& w : _subgroup) {
          std::size_t d = 0;
          for (auto x : w) {
            d = out.table[d * _ncols + x];
          }
          detail::ensure(d == 0, "todd_coxeter: subgroup generator moves "
                                 "the trivial coset");
        }
        return out;
      }

      std::size_t                           _ngens;
      std::size_t                           _ncols;
      std::size_t                           _max;
      std::vector<std::vector<std::size_t>> _rels;
      std::vector<std::vector<std::size_t>> _subgroup;
      std::vector<std::int32_t>             _table;
      std::vector<std::int32_t>             _p;
      std::vector<std::int32_t>             _queue;
      std::size_t                           _active     = 0;
      std::size_t                           _total      = 0;
      std::size_t                           _max_active = 0;
    };
  }  // namespace detail

  // Enumerates the cosets of <subgroup> in the presented group. Throws
  // CapExceeded when more than max_cosets cosets would be live at once.
  inline CosetTable todd_coxeter(Presentation const&      P,
                                 std::vector<Word> const& subgroup   = {},
                                 std::size_t              max_cosets = max_cosets_from_env(),
                                 EnumerationStrategy = EnumerationStrategy::hlt) {
    return detail::Enumerator(P, subgroup, max_cosets).run();
  }

  struct EnumeratedGroup {
    FiniteGroup group;
    // generator_elements[i] is the element represented by generator i.
    std::vector<Element> generator_elements;
  };

  // The regular action on the cosets of the trivial subgroup, as a
  // Cayley table. Elements are labelled by breadth-first words.
  inline EnumeratedGroup group_from_coset_table(Presentation const& P,
                                                CosetTable const&   T) {
    std::size_t const n = T.ncosets;
    if (n > max_cayley_order) {
      throw CapExceeded("group_from_coset_table: order " + std::to_string(n)
                        + " exceeds the Cayley-table cap");
    }
    std::size_t const          ncols = 2 * T.ngens;
    std::vector<std::uint32_t> order{0}, parent(n, 0), pcol(n, 0);
    std::vector<bool>          seen(n, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < ncols; ++x) {
        auto const d = T(order[i], x);
        if (!seen[d]) {
          seen[d]   = true;
          parent[d] = order[i];
          pcol[d]   = static_cast<std::uint32_t>(x);
          order.push_back(d);
        }
      }
    }
    std::vector<Word> words(n);
    for (std::size_t i = 1; i < order.size(); ++i) {
      auto const d = order[i];
      auto const x = pcol[d];
      words[d]     = words[parent[d]]
                 * Word::generator(P.generators()[x / 2], x % 2 ? -1 : 1);
    }
    std::vector<std::string> labels(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::string s;
      for (auto const& syl : words[c].syllables()) {
        if (!s.empty()) {
          s += '*';
        }
        s += syl.symbol;
        if (syl.exponent != 1) {
          s += '^' + std::to_string(syl.exponent);
        }
      }
      labels[c] = s.empty() ? "1" : s;
    }
    std::vector<Element> table(n * n);
    for (std::size_t c = 0; c < n; ++c) {
      table[c * n] = static_cast<Element>(c);
    }
    for (std::size_t i = 1; i < order.size(); ++i) {
      auto const d = order[i];
      for (std::size_t c = 0; c < n; ++c) {
        table[c * n + d] = T(table[c * n + parent[d]], pcol[d]);
      }
    }
    FiniteGroup          G(std::move(labels), std::move(table), FiniteGroup::Check::trusted);
    std::vector<Element> gens;
    for (std::size_t g = 0; g < T.ngens; ++g) {
      gens.push_back(T(0, 2 * g));
    }
    return {G, gens};
  }

  // Enumerates the presented group itself (trivial subgroup).
  inline EnumeratedGroup enumerate_group(Presentation const& P,
                                         std::size_t max_cosets = max_cosets_from_env()) {
    return group_from_coset_table(P, todd_coxeter(P, {}, max_cosets));
  }

}  // namespace vcg
