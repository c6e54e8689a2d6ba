#pragma once

// Incremental elimination over the local ring Z/p^k for large sparse
// relation systems (bar-complex boundary matrices). Unit pivots are kept
// in Gauss-Jordan form so that each insertion only touches the few
// columns that never received a unit pivot; everything else is settled
// by an exact Smith form of the small residual block.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "vcg/error.hpp"
#include "vcg/integer.hpp"
#include "vcg/lattice.hpp"

namespace vcg {

  using SparseEntry  = std::pair<std::uint32_t, std::int64_t>;
  using SparseVector = std::vector<SparseEntry>;

  // Structure of (Z/p^k)^dim / span and the coordinate map onto it.
  class LocalQuotient {
   public:
    LocalQuotient() = default;

    std::uint64_t prime() const noexcept {
      return _p;
    }

    unsigned power() const noexcept {
      return _k;
    }

    // Exponents e_i of the cyclic summands Z/p^e_i, ascending; e_i <= k.
    std::vector<unsigned> const& exponents() const noexcept {
      return _exponents;
    }

    // Coordinates of x, entry i reduced modulo p^exponents()[i].
    std::vector<std::int64_t> coordinates(SparseVector const& x) const {
      std::vector<std::int64_t> dense(_free_cols.size(), 0);
      for (auto const& [c, v] : x) {
        accumulate(dense, c, mod_i64(v, _mod));
      }
      return finish(dense);
    }

    std::vector<std::int64_t> coordinates(IntVector const& x) const {
      std::vector<std::int64_t> dense(_free_cols.size(), 0);
      for (std::size_t c = 0; c < x.size(); ++c) {
        if (!x[c].is_zero()) {
          accumulate(dense,
                     static_cast<std::uint32_t>(c),
                     static_cast<std::int64_t>(floor_mod(x[c], Integer(_mod))));
        }
      }
      return finish(dense);
    }

   private:
    friend class LocalLattice;

    void accumulate(std::vector<std::int64_t>& dense,
                    std::uint32_t              c,
                    std::int64_t               v) const {
      if (v == 0) {
        return;
      }
      auto const pos = _position[c];
      if (pos >= 0) {
        dense[pos] = (dense[pos] + v) % _mod;
        return;
      }
      // unit column: e_c = -(row entries) in the quotient
      for (auto const& [j, r] : (*_unit_rows)[_unit_index[c]]) {
        auto const q = _position[j];
        dense[q]     = mod_i64(dense[q] - v * r, _mod);
      }
    }

    std::vector<std::int64_t> finish(std::vector<std::int64_t> const& d) const {
      std::vector<std::int64_t> out(_exponents.size());
      for (std::size_t i = 0; i < _exponents.size(); ++i) {
        std::int64_t const m = static_cast<std::int64_t>(ipow(_p, _exponents[i]));
        std::int64_t       s = 0;
        for (std::size_t j = 0; j < d.size(); ++j) {
          if (d[j] != 0 && _transform[i][j] != 0) {
            s = (s + d[j] * _transform[i][j]) % m;
          }
        }
        out[i] = mod_i64(s, m);
      }
      return out;
    }

    std::uint64_t                           _p   = 2;
    unsigned                                _k   = 1;
    std::int64_t                            _mod = 2;
    std::vector<unsigned>                   _exponents;
    std::vector<std::uint32_t>              _free_cols;
    std::vector<std::int64_t>               _position;    // col -> index in _free_cols or -1
    std::vector<std::int64_t>               _unit_index;  // col -> unit row
    std::shared_ptr<std::vector<SparseVector> const> _unit_rows;
    std::vector<std::vector<std::int64_t>>  _transform;   // rows of U, reduced
  };

  class LocalLattice {
   public:
    LocalLattice(std::uint64_t p, unsigned k, std::size_t dim)
        : _p(p),
          _k(k),
          _mod(static_cast<std::int64_t>(ipow(p, k))),
          _dim(dim),
          _unit_of_col(dim, -1),
          _col_rows(dim),
          _scratch(dim, 0) {
      if (k == 0 || ipow(p, k) > (std::uint64_t(1) << 30)) {
        throw InvalidInput("LocalLattice: modulus must be in [p, 2^30]");
      }
    }

    std::size_t dimension() const noexcept {
      return _dim;
    }

    std::size_t unit_pivots() const noexcept {
      return _unit_rows.size();
    }

    void insert(SparseVector const& v) {
      _touched.clear();
      for (auto const& [c, x] : v) {
        add_scratch(c, mod_i64(x, _mod));
      }
      // clear unit columns; only non-unit columns receive new entries
      std::size_t const n0 = _touched.size();
      for (std::size_t t = 0; t < n0; ++t) {
        auto const c = _touched[t];
        auto const a = _scratch[c];
        if (a == 0 || _unit_of_col[c] < 0) {
          continue;
        }
        _scratch[c] = 0;
        for (auto const& [j, r] : _unit_rows[_unit_of_col[c]]) {
          add_scratch(j, mod_i64(-a * r, _mod));
        }
      }
      SparseVector row;
      for (auto c : _touched) {
        if (_scratch[c] != 0 && _unit_of_col[c] < 0) {
          row.emplace_back(c, _scratch[c]);
        }
        _scratch[c] = 0;
      }
      if (row.empty()) {
        return;
      }
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
      auto unit = std::find_if(row.begin(), row.end(), [this](auto const& e) {
        return e.second % static_cast<std::int64_t>(_p) != 0;
      });
      if (unit == row.end()) {
        _nonunit.push_back(std::move(row));
        if (_nonunit.size() > 64 + 4 * free_columns()) {
          compact();
        }
        return;
      }
      add_unit_pivot(std::move(row), unit->first);
    }

    LocalQuotient quotient() {
      compact();
      LocalQuotient q;
      q._p   = _p;
      q._k   = _k;
      q._mod = _mod;
      q._position.assign(_dim, -1);
      q._unit_index.assign(_dim, -1);
      for (std::uint32_t c = 0; c < _dim; ++c) {
        if (_unit_of_col[c] < 0) {
          q._position[c] = static_cast<std::int64_t>(q._free_cols.size());
          q._free_cols.push_back(c);
        } else {
          q._unit_index[c] = _unit_of_col[c];
        }
      }
      q._unit_rows = std::make_shared<std::vector<SparseVector> const>(_unit_rows);

      std::size_t const f = q._free_cols.size();
      IntMatrix         R(f, _nonunit.size() + f);
      for (std::size_t r = 0; r < _nonunit.size(); ++r) {
        for (auto const& [c, x] : _nonunit[r]) {
          R(q._position[c], r) = x;
        }
      }
      for (std::size_t j = 0; j < f; ++j) {
        R(j, _nonunit.size() + j) = _mod;
      }
      auto snf = smith_normal_form(R, SnfTransforms::left);
      for (std::size_t i = 0; i < std::min(f, snf.rank); ++i) {
        auto const    d = static_cast<std::uint64_t>(snf.D(i, i));
        unsigned const e = valuation(d, _p);
        detail::ensure(d == ipow(_p, e), "LocalLattice: non p-power invariant");
        if (e == 0) {
          continue;
        }
        q._exponents.push_back(e);
        std::vector<std::int64_t> row(f);
        for (std::size_t j = 0; j < f; ++j) {
          row[j] = static_cast<std::int64_t>(floor_mod(snf.U(i, j), Integer(_mod)));
        }
        q._transform.push_back(std::move(row));
      }
      return q;
    }

   private:
    std::size_t free_columns() const noexcept {
      return _dim - _unit_rows.size();
    }

    void add_scratch(std::uint32_t c, std::int64_t x) {
      if (x == 0) {
        return;
      }
      if (_scratch[c] == 0) {
        _touched.push_back(c);
      }
      _scratch[c] = (_scratch[c] + x) % _mod;
    }

    // row -= a * pivot_row (pivot_row excludes its pivot column c)
    SparseVector axpy(SparseVector const& row,
                      std::uint32_t       c,
                      std::int64_t        a,
                      SparseVector const& pivot) const {
      SparseVector out;
      out.reserve(row.size() + pivot.size());
      auto i = row.begin();
      auto j = pivot.begin();
      while (i != row.end() || j != pivot.end()) {
        if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
          if (i->first != c) {
            out.push_back(*i);
          }
          ++i;
        } else if (i == row.end() || j->first < i->first) {
          auto const x = mod_i64(-a * j->second, _mod);
          if (x != 0) {
            out.emplace_back(j->first, x);
          }
          ++j;
        } else {
          auto const x = mod_i64(i->second - a * j->second, _mod);
          if (x != 0) {
            out.emplace_back(i->first, x);
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

    void add_unit_pivot(SparseVector row, std::uint32_t c) {
      std::int64_t a = 0;
      for (auto const& e : row) {
        if (e.first == c) {
          a = e.second;
        }
      }
      std::int64_t const inv = inverse_mod(a, _mod);
      SparseVector       pivot;
      pivot.reserve(row.size() - 1);
      for (auto const& [j, x] : row) {
        if (j != c) {
          pivot.emplace_back(j, (x * inv) % _mod);
        }
      }
      // eliminate column c everywhere else
      for (auto r : _col_rows[c]) {
        auto&       other = _unit_rows[r];
        auto const  it    = std::lower_bound(other.begin(), other.end(),
                                        SparseEntry(c, 0));
        if (it == other.end() || it->first != c) {
          continue;
        }
        auto const coef = it->second;
        other           = axpy(other, c, coef, pivot);
        for (auto const& [j, x] : pivot) {
          _col_rows[j].push_back(r);
        }
      }
      _col_rows[c].clear();
      _col_rows[c].shrink_to_fit();
      for (auto& other : _nonunit) {
        auto const it
            = std::lower_bound(other.begin(), other.end(), SparseEntry(c, 0));
        if (it != other.end() && it->first == c) {
          other = axpy(other, c, it->second, pivot);
        }
      }
      auto const index = static_cast<std::int64_t>(_unit_rows.size());
      for (auto const& [j, x] : pivot) {
        _col_rows[j].push_back(static_cast<std::uint32_t>(index));
      }
      _unit_of_col[c] = index;
      _unit_rows.push_back(std::move(pivot));
    }

    // Echelon form of the non-unit relations (all entries divisible by p).
    void compact() {
      std::vector<SparseVector> rows;
      for (auto& r : _nonunit) {
        if (!r.empty()) {
          rows.push_back(std::move(r));
        }
      }
      _nonunit.clear();
      while (!rows.empty()) {
        // smallest column present, then minimal valuation entry in it
        std::uint32_t col = std::numeric_limits<std::uint32_t>::max();
        for (auto const& r : rows) {
          col = std::min(col, r.front().first);
        }
        std::size_t best = rows.size();
        unsigned    bv   = _k + 1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i].front().first == col) {
            unsigned v = valuation(static_cast<std::uint64_t>(rows[i].front().second), _p);
            if (v < bv) {
              bv   = v;
              best = i;
            }
          }
        }
        SparseVector pivot = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        // normalise leading entry to p^v
        std::int64_t const pv   = static_cast<std::int64_t>(ipow(_p, bv));
        std::int64_t const unit = pivot.front().second / pv;
        std::int64_t const inv  = inverse_mod(unit, _mod);
        for (auto& e : pivot) {
          e.second = (e.second * inv) % _mod;
        }
        SparseVector tail(pivot.begin() + 1, pivot.end());
        std::vector<SparseVector> next;
        for (auto& r : rows) {
          if (r.front().first == col) {
            std::int64_t const f = r.front().second / pv;
            r                    = axpy(r, col, f, tail);
          }
          if (!r.empty()) {
            next.push_back(std::move(r));
          }
        }
        rows = std::move(next);
        _nonunit.push_back(std::move(pivot));
      }
    }

    std::uint64_t                          _p;
    unsigned                               _k;
    std::int64_t                           _mod;
    std::size_t                            _dim;
    std::vector<std::int64_t>              _unit_of_col;
    std::vector<SparseVector>              _unit_rows;
    std::vector<std::vector<std::uint32_t>> _col_rows;
    std::vector<SparseVector>              _nonunit;
    std::vector<std::int64_t>              _scratch;
    std::vector<std::uint32_t>             _touched;
  };

}  // namespace vcg
