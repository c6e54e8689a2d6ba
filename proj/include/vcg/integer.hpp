#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vcg/error.hpp"

namespace vcg {

  using Integer = boost::multiprecision::cpp_int;

  // Representative of a in [0, |m|).
  inline Integer floor_mod(Integer const& a, Integer const& m) {
    Integer r = a % m;
    if (r < 0) {
      r += (m < 0 ? Integer(-m) : m);
    }
    return r;
  }

  struct ExtendedGcd {
    Integer g;
    Integer s;
    Integer t;
  };

  // g = s*a + t*b with g = gcd(a, b) >= 0.
  inline ExtendedGcd extended_gcd(Integer a, Integer b) {
    Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
      Integer q = a / b;
      Integer r = a - q * b;
      a         = b;
      b         = r;
      Integer s = s0 - q * s1;
      s0        = s1;
      s1        = s;
      Integer t = t0 - q * t1;
      t0        = t1;
      t1        = t;
    }
    if (a < 0) {
      return {-a, -s0, -t0};
    }
    return {a, s0, t0};
  }

  inline std::int64_t mod_i64(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
  }

  // Inverse of a modulo m; a must be a unit.
  inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod_i64(a, m);
    while (a1 != 0) {
      std::int64_t q = g / a1;
      std::swap(g, a1);
      a1 -= q * g;
      std::swap(x, x1);
      x1 -= q * x;
    }
    detail::ensure(g == 1, "inverse_mod called on a non-unit");
    return mod_i64(x, m);
  }

  // Prime factorisation by trial division, ascending primes.
  inline std::vector<std::pair<std::uint64_t, unsigned>>
  factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        unsigned e = 0;
        while (n % p == 0) {
          n /= p;
          ++e;
        }
        out.emplace_back(p, e);
      }
    }
    if (n > 1) {
      out.emplace_back(n, 1);
    }
    return out;
  }

  inline unsigned valuation(std::uint64_t n, std::uint64_t p) {
    unsigned e = 0;
    while (n != 0 && n % p == 0) {
      n /= p;
      ++e;
    }
    return e;
  }

  inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

  inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace vcg
