#pragma once

// Exact integer matrix algebra: Smith normal form, cokernels of integer
// matrices, torsion/free splittings and systems of linear congruences.
//
// Convention used throughout: a matrix presents the abelian group
// Z^rows / (column space), i.e. every column is one relation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vcg/error.hpp"
#include "vcg/integer.hpp"

namespace vcg {

  using IntVector = std::vector<Integer>;

  class IntMatrix {
   public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
      IntMatrix I(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        I(i, i) = 1;
      }
      return I;
    }

    static IntMatrix
    from_rows(std::vector<std::vector<long long>> const& rows) {
      std::size_t const c = rows.empty() ? 0 : rows.front().size();
      IntMatrix         A(rows.size(), c);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) {
          throw InvalidInput("IntMatrix::from_rows: ragged rows");
        }
        for (std::size_t j = 0; j < c; ++j) {
          A(i, j) = rows[i][j];
        }
      }
      return A;
    }

    // One row per line, space-separated integers.
    static IntMatrix from_text(std::string const& text) {
      std::istringstream             in(text);
      std::string                    line;
      std::vector<std::vector<long long>> rows;
      while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<long long> row;
        long long              x;
        while (ls >> x) {
          row.push_back(x);
        }
        if (!row.empty()) {
          rows.push_back(std::move(row));
        }
      }
      return from_rows(rows);
    }

    std::string to_text() const {
      std::ostringstream out;
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          out << (j == 0 ? "" : " ") << (*this)(i, j);
        }
        out << '\n';
      }
      return out.str();
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool empty() const noexcept {
      return _data.empty();
    }

    Integer& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Integer const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    IntVector column(std::size_t j) const {
      IntVector v(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        v[i] = (*this)(i, j);
      }
      return v;
    }

    IntVector row(std::size_t i) const {
      return IntVector(_data.begin() + i * _cols,
                       _data.begin() + (i + 1) * _cols);
    }

    IntMatrix transpose() const {
      IntMatrix T(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          T(j, i) = (*this)(i, j);
        }
      }
      return T;
    }

    IntVector operator*(IntVector const& x) const {
      if (x.size() != _cols) {
        throw InvalidInput("IntMatrix * vector: dimension mismatch");
      }
      IntVector y(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          if (!x[j].is_zero() && !(*this)(i, j).is_zero()) {
            y[i] += (*this)(i, j) * x[j];
          }
        }
      }
      return y;
    }

    friend IntMatrix operator*(IntMatrix const& A, IntMatrix const& B) {
      if (A._cols != B._rows) {
        throw InvalidInput("IntMatrix product: dimension mismatch");
      }
      IntMatrix C(A._rows, B._cols);
      for (std::size_t i = 0; i < A._rows; ++i) {
        for (std::size_t k = 0; k < A._cols; ++k) {
          Integer const& a = A(i, k);
          if (a.is_zero()) {
            continue;
          }
          for (std::size_t j = 0; j < B._cols; ++j) {
            if (!B(k, j).is_zero()) {
              C(i, j) += a * B(k, j);
            }
          }
        }
      }
      return C;
    }

    friend bool operator==(IntMatrix const& A, IntMatrix const& B) {
      return A._rows == B._rows && A._cols == B._cols && A._data == B._data;
    }

    void swap_rows(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t j = 0; j < _cols; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
      }
    }

    void swap_cols(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t i = 0; i < _rows; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
      }
    }

    // row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, Integer const& q) {
      if (q.is_zero()) {
        return;
      }
      for (std::size_t j = 0; j < _cols; ++j) {
        Integer const& s = (*this)(src, j);
        if (!s.is_zero()) {
          (*this)(dst, j) += q * s;
        }
      }
    }

    // col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, Integer const& q) {
      if (q.is_zero()) {
        return;
      }
      for (std::size_t i = 0; i < _rows; ++i) {
        Integer const& s = (*this)(i, src);
        if (!s.is_zero()) {
          (*this)(i, dst) += q * s;
        }
      }
    }

    void negate_row(std::size_t i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(i, j) = -(*this)(i, j);
      }
    }

    void negate_col(std::size_t j) {
      for (std::size_t i = 0; i < _rows; ++i) {
        (*this)(i, j) = -(*this)(i, j);
      }
    }

   private:
    std::size_t      _rows = 0;
    std::size_t      _cols = 0;
    std::vector<Integer> _data;
  };

  ////////////////////////////////////////////////////////////////////////
  // FgAbelianGroup
  ////////////////////////////////////////////////////////////////////////

  // A finitely generated abelian group Z^r + Z/d1 + ... + Z/dk with
  // 1 < d1 | d2 | ... | dk.
  class FgAbelianGroup {
   public:
    FgAbelianGroup() = default;

    explicit FgAbelianGroup(std::vector<std::uint64_t> invariant_factors,
                            std::size_t                free_rank = 0)
        : _factors(std::move(invariant_factors)), _free_rank(free_rank) {
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        if (_factors[i] < 2) {
          throw InvalidInput("FgAbelianGroup: invariant factors must be > 1");
        }
        if (i > 0 && _factors[i] % _factors[i - 1] != 0) {
          throw InvalidInput("FgAbelianGroup: factors must form a "
                             "divisibility chain");
        }
      }
    }

    // Normalises an arbitrary list of cyclic orders (1s allowed, 0 = Z).
    static FgAbelianGroup from_cyclic_orders(
        std::vector<std::uint64_t> const& orders) {
      std::size_t                                  free = 0;
      std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> by_prime;
      for (auto n : orders) {
        if (n == 0) {
          ++free;
          continue;
        }
        for (auto [p, e] : factorize(n)) {
          auto it = std::find_if(by_prime.begin(), by_prime.end(),
                                 [p = p](auto const& x) { return x.first == p; });
          if (it == by_prime.end()) {
            by_prime.push_back({p, {}});
            it = by_prime.end() - 1;
          }
          it->second.push_back(e);
        }
      }
      std::size_t k = 0;
      for (auto& [p, es] : by_prime) {
        std::sort(es.begin(), es.end(), std::greater<>());
        k = std::max(k, es.size());
      }
      // factors from the largest down
      std::vector<std::uint64_t> f(k, 1);
      for (auto& [p, es] : by_prime) {
        for (std::size_t i = 0; i < es.size(); ++i) {
          f[i] *= ipow(p, es[i]);
        }
      }
      std::reverse(f.begin(), f.end());
      return FgAbelianGroup(std::move(f), free);
    }

    std::vector<std::uint64_t> const& invariant_factors() const noexcept {
      return _factors;
    }

    std::size_t free_rank() const noexcept {
      return _free_rank;
    }

    std::size_t rank() const noexcept {
      return _factors.size() + _free_rank;
    }

    bool is_finite() const noexcept {
      return _free_rank == 0;
    }

    bool is_trivial() const noexcept {
      return _free_rank == 0 && _factors.empty();
    }

    std::uint64_t torsion_order() const noexcept {
      std::uint64_t n = 1;
      for (auto d : _factors) {
        n *= d;
      }
      return n;
    }

    std::uint64_t order() const {
      if (!is_finite()) {
        throw InvalidInput("FgAbelianGroup::order: group is infinite");
      }
      return torsion_order();
    }

    std::uint64_t exponent() const noexcept {
      return _factors.empty() ? 1 : _factors.back();
    }

    // Elementary divisors (prime powers), ascending.
    std::vector<std::uint64_t> elementary_divisors() const {
      std::vector<std::uint64_t> out;
      for (auto d : _factors) {
        for (auto [p, e] : factorize(d)) {
          out.push_back(ipow(p, e));
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::string to_string() const {
      std::ostringstream out;
      out << '[';
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        out << (i == 0 ? "" : ",") << _factors[i];
      }
      out << ']';
      if (_free_rank > 0) {
        out << " + Z^" << _free_rank;
      }
      return out.str();
    }

    friend bool operator==(FgAbelianGroup const& a, FgAbelianGroup const& b) {
      return a._factors == b._factors && a._free_rank == b._free_rank;
    }

    friend bool operator!=(FgAbelianGroup const& a, FgAbelianGroup const& b) {
      return !(a == b);
    }

    friend FgAbelianGroup direct_sum(FgAbelianGroup const& a,
                                     FgAbelianGroup const& b) {
      std::vector<std::uint64_t> orders(a._factors);
      orders.insert(orders.end(), b._factors.begin(), b._factors.end());
      orders.insert(orders.end(), a._free_rank + b._free_rank, 0);
      return from_cyclic_orders(orders);
    }

   private:
    std::vector<std::uint64_t> _factors;
    std::size_t                _free_rank = 0;
  };

  // Z/m (x) Z/n = Z/gcd(m,n), extended bilinearly. Finite inputs only.
  inline FgAbelianGroup tensor_product(FgAbelianGroup const& a,
                                       FgAbelianGroup const& b) {
    if (!a.is_finite() || !b.is_finite()) {
      throw InvalidInput("tensor_product: finite groups only");
    }
    std::vector<std::uint64_t> orders;
    for (auto m : a.invariant_factors()) {
      for (auto n : b.invariant_factors()) {
        orders.push_back(std::gcd(m, n));
      }
    }
    return FgAbelianGroup::from_cyclic_orders(orders);
  }

  // Removes the summands of `part` from `whole` (finite abelian
  // cancellation on elementary divisors). Returns nullopt when `part` is
  // not a direct summand pattern of `whole`.
  inline std::optional<FgAbelianGroup> cancel_summand(FgAbelianGroup const& whole,
                                                      FgAbelianGroup const& part) {
    if (!whole.is_finite() || !part.is_finite()) {
      throw InvalidInput("cancel_summand: finite groups only");
    }
    auto w = whole.elementary_divisors();
    for (auto q : part.elementary_divisors()) {
      auto it = std::find(w.begin(), w.end(), q);
      if (it == w.end()) {
        return std::nullopt;
      }
      w.erase(it);
    }
    return FgAbelianGroup::from_cyclic_orders(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  enum class SnfTransforms : unsigned {
    none  = 0,
    left  = 1,  // U and U^-1
    right = 2,  // V and V^-1
    all   = 3
  };

  inline bool has(SnfTransforms set, SnfTransforms flag) {
    return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
  }

  // U * A * V = D with U, V unimodular and D diagonal with
  // d1 | d2 | ... | d_rank, d_i > 0, zeros after.
  struct SnfDecomposition {
    IntMatrix   D;
    IntMatrix   U;
    IntMatrix   U_inv;
    IntMatrix   V;
    IntMatrix   V_inv;
    std::size_t rank = 0;

    IntVector diagonal() const {
      IntVector d(std::min(D.rows(), D.cols()));
      for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = D(i, i);
      }
      return d;
    }
  };

  namespace detail {
    inline Integer abs_value(Integer const& x) {
      return x < 0 ? Integer(-x) : x;
    }
  }  // namespace detail

  // Deterministic pivot rule: smallest nonzero absolute value in the
  // remaining block, ties broken by lowest (row, column).
  inline SnfDecomposition smith_normal_form(IntMatrix        A,
                                            SnfTransforms track
                                            = SnfTransforms::all) {
    std::size_t const m = A.rows(), n = A.cols();
    bool const        L = has(track, SnfTransforms::left);
    bool const        R = has(track, SnfTransforms::right);

    SnfDecomposition out;
    if (L) {
      out.U     = IntMatrix::identity(m);
      out.U_inv = IntMatrix::identity(m);
    }
    if (R) {
      out.V     = IntMatrix::identity(n);
      out.V_inv = IntMatrix::identity(n);
    }

    // row[i] -= q row[t]
    auto row_op = [&](std::size_t i, std::size_t t, Integer const& q) {
      A.add_row_multiple(i, t, -q);
      if (L) {
        out.U.add_row_multiple(i, t, -q);
        out.U_inv.add_col_multiple(t, i, q);
      }
    };
    // col[j] -= q col[t]
    auto col_op = [&](std::size_t j, std::size_t t, Integer const& q) {
      A.add_col_multiple(j, t, -q);
      if (R) {
        out.V.add_col_multiple(j, t, -q);
        out.V_inv.add_row_multiple(t, j, q);
      }
    };
    auto swap_r = [&](std::size_t a, std::size_t b) {
      A.swap_rows(a, b);
      if (L) {
        out.U.swap_rows(a, b);
        out.U_inv.swap_cols(a, b);
      }
    };
    auto swap_c = [&](std::size_t a, std::size_t b) {
      A.swap_cols(a, b);
      if (R) {
        out.V.swap_cols(a, b);
        out.V_inv.swap_rows(a, b);
      }
    };

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      bool found_any = false;
      while (true) {
        // pivot search
        std::size_t pr = m, pc = n;
        Integer     best;
        for (std::size_t i = t; i < m && !(pr < m && best == 1); ++i) {
          for (std::size_t j = t; j < n; ++j) {
            Integer const& a = A(i, j);
            if (a.is_zero()) {
              continue;
            }
            Integer aa = detail::abs_value(a);
            if (pr == m || aa < best) {
              best = aa;
              pr   = i;
              pc   = j;
              if (best == 1) {
                break;
              }
            }
          }
        }
        if (pr == m) {
          break;
        }
        found_any = true;
        swap_r(t, pr);
        swap_c(t, pc);

        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (!A(i, t).is_zero()) {
            Integer q = A(i, t) / A(t, t);
            row_op(i, t, q);
            if (!A(i, t).is_zero()) {
              clean = false;
            }
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!A(t, j).is_zero()) {
            Integer q = A(t, j) / A(t, t);
            col_op(j, t, q);
            if (!A(t, j).is_zero()) {
              clean = false;
            }
          }
        }
        if (!clean) {
          continue;
        }
        // divisibility of the remaining block
        std::size_t bad = m;
        for (std::size_t i = t + 1; i < m && bad == m; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (!A(i, j).is_zero() && !Integer(A(i, j) % A(t, t)).is_zero()) {
              bad = i;
              break;
            }
          }
        }
        if (bad == m) {
          break;
        }
        row_op(t, bad, Integer(-1));  // row[t] += row[bad]
      }
      if (!found_any) {
        break;
      }
      if (A(t, t) < 0) {
        A.negate_row(t);
        if (L) {
          out.U.negate_row(t);
          out.U_inv.negate_col(t);
        }
      }
    }
    out.rank = t;
    out.D    = std::move(A);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cokernels
  ////////////////////////////////////////////////////////////////////////

  // Sends an integer vector of Z^rows to canonical coordinates of the
  // cokernel: one entry per invariant factor (reduced into [0, d)),
  // followed by one unreduced entry per free summand.
  class CoordinateMap {
   public:
    CoordinateMap() = default;
    CoordinateMap(std::vector<IntVector> rows, std::vector<Integer> moduli)
        : _rows(std::move(rows)), _moduli(std::move(moduli)) {}

    std::size_t size() const noexcept {
      return _rows.size();
    }

    std::vector<Integer> const& moduli() const noexcept {
      return _moduli;
    }

    std::vector<IntVector> const& rows() const noexcept {
      return _rows;
    }

    IntVector operator()(IntVector const& x) const {
      IntVector y(_rows.size());
      for (std::size_t i = 0; i < _rows.size(); ++i) {
        if (_rows[i].size() != x.size()) {
          throw InvalidInput("CoordinateMap: dimension mismatch");
        }
        Integer s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
          if (!x[j].is_zero() && !_rows[i][j].is_zero()) {
            s += _rows[i][j] * x[j];
          }
        }
        y[i] = _moduli[i].is_zero() ? s : floor_mod(s, _moduli[i]);
      }
      return y;
    }

   private:
    std::vector<IntVector> _rows;
    std::vector<Integer>   _moduli;  // 0 marks a free coordinate
  };

  struct Cokernel {
    FgAbelianGroup group;
    CoordinateMap  coordinates;
    // generators[i] is an integer vector whose class has coordinates e_i.
    std::vector<IntVector> generators;
  };

  // Z^rows / column-space(A).
  inline Cokernel cokernel(IntMatrix const& A) {
    auto               snf = smith_normal_form(A, SnfTransforms::left);
    std::size_t const  m   = A.rows();
    std::vector<IntVector> rows, gens;
    std::vector<Integer>   mods;
    std::vector<std::uint64_t> factors;
    for (std::size_t i = 0; i < snf.rank; ++i) {
      Integer const& d = snf.D(i, i);
      if (d == 1) {
        continue;
      }
      if (d > Integer(std::numeric_limits<std::uint64_t>::max())) {
        throw CapExceeded("cokernel: invariant factor exceeds 64 bits");
      }
      factors.push_back(static_cast<std::uint64_t>(d));
      rows.push_back(snf.U.row(i));
      mods.push_back(d);
      gens.push_back(snf.U_inv.column(i));
    }
    for (std::size_t i = snf.rank; i < m; ++i) {
      rows.push_back(snf.U.row(i));
      mods.push_back(0);
      gens.push_back(snf.U_inv.column(i));
    }
    return {FgAbelianGroup(std::move(factors), m - snf.rank),
            CoordinateMap(std::move(rows), std::move(mods)),
            std::move(gens)};
  }

  struct TorsionComplement {
    Cokernel               cokernel;
    std::vector<IntVector> torsion_basis;
    std::vector<IntVector> complement_basis;
  };

  // Splits the presented group into its torsion subgroup and a free
  // direct complement; both bases are checked through the coordinate map.
  inline TorsionComplement torsion_complement(IntMatrix const& A) {
    TorsionComplement out{cokernel(A), {}, {}};
    auto const&       ck = out.cokernel;
    std::size_t const t  = ck.group.invariant_factors().size();
    for (std::size_t i = 0; i < ck.generators.size(); ++i) {
      (i < t ? out.torsion_basis : out.complement_basis)
          .push_back(ck.generators[i]);
    }
    for (std::size_t i = 0; i < ck.generators.size(); ++i) {
      auto y = ck.coordinates(ck.generators[i]);
      for (std::size_t j = 0; j < y.size(); ++j) {
        detail::ensure(y[j] == (i == j ? 1 : 0),
                       "torsion_complement: generator coordinates");
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Linear congruences
  ////////////////////////////////////////////////////////////////////////

  // Finds x with (A x)_i = b_i mod moduli_i for every row i. Solves the
  // integer system [A | diag(moduli)] (x, y) = b through its Smith form;
  // free coordinates are set to 0 and x is reduced into [0, lcm(moduli)).
  inline std::optional<IntVector>
  solve_linear_congruences(IntMatrix const&            A,
                           IntVector const&            b,
                           std::vector<Integer> const& moduli) {
    std::size_t const m = A.rows(), n = A.cols();
    if (b.size() != m || moduli.size() != m) {
      throw InvalidInput("solve_linear_congruences: dimension mismatch");
    }
    Integer lcm = 1;
    for (auto const& q : moduli) {
      if (q <= 0) {
        throw InvalidInput("solve_linear_congruences: moduli must be positive");
      }
      lcm = lcm / boost::multiprecision::gcd(lcm, q) * q;
    }
    IntMatrix B(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        B(i, j) = A(i, j);
      }
      B(i, n + i) = moduli[i];
    }
    auto snf = smith_normal_form(B, SnfTransforms::all);
    auto c   = snf.U * b;
    IntVector w(n + m);
    for (std::size_t i = 0; i < m; ++i) {
      if (i < snf.rank) {
        Integer const& d = snf.D(i, i);
        if (!Integer(c[i] % d).is_zero()) {
          return std::nullopt;
        }
        w[i] = c[i] / d;
      } else if (!c[i].is_zero()) {
        return std::nullopt;
      }
    }
    auto      xy = snf.V * w;
    IntVector x(xy.begin(), xy.begin() + n);
    for (auto& v : x) {
      v = floor_mod(v, lcm);
    }
    return x;
  }

}  // namespace vcg
