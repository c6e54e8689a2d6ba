#pragma once

// Free products: presentations by concatenation, and normal-form
// arithmetic for free products of finite groups.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"
#include "vcg/word.hpp"

namespace vcg {

  struct FreeProductPresentation {
    Presentation presentation;
    // renaming[i] maps the symbols of factor i to symbols of the product
    std::vector<std::map<std::string, std::string>> renaming;

    Word embed(std::size_t factor, Word const& w) const {
      std::map<std::string, Word> img;
      for (auto const& [from, to] : renaming.at(factor)) {
        img.emplace(from, Word::generator(to));
      }
      return w.substitute(img);
    }
  };

  // Concatenates the presentations. A symbol that occurs in more than one
  // factor is renamed to symbol + factor number (1-based) in every factor
  // that uses it.
  inline FreeProductPresentation
  free_product_presentation(std::vector<Presentation> const& factors) {
    std::map<std::string, std::size_t> uses;
    for (auto const& P : factors) {
      for (auto const& g : P.generators()) {
        ++uses[g];
      }
    }
    std::set<std::string>    taken;
    FreeProductPresentation  out;
    std::vector<std::string> gens;
    std::vector<Word>        rels;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::map<std::string, std::string> ren;
      for (auto const& g : factors[i].generators()) {
        std::string s = uses[g] > 1 ? g + std::to_string(i + 1) : g;
        while (taken.count(s) || (s != g && uses.count(s))) {
          s += "_";
        }
        taken.insert(s);
        ren.emplace(g, s);
        gens.push_back(s);
      }
      out.renaming.push_back(ren);
      std::map<std::string, Word> img;
      for (auto const& [from, to] : ren) {
        img.emplace(from, Word::generator(to));
      }
      for (auto const& r : factors[i].relators()) {
        rels.push_back(r.substitute(img));
      }
    }
    out.presentation = Presentation(std::move(gens), std::move(rels));
    return out;
  }

  struct FreeSyllable {
    std::size_t factor;
    Element     element;

    friend bool operator==(FreeSyllable const& a, FreeSyllable const& b) {
      return a.factor == b.factor && a.element == b.element;
    }
  };

  // A reduced word in a free product of finite groups.
  class FreeProductElement {
   public:
    FreeProductElement() = default;

    // Reduces an arbitrary syllable sequence.
    FreeProductElement(std::vector<FiniteGroup> const& factors,
                       std::vector<FreeSyllable> const& syllables) {
      for (auto const& s : syllables) {
        push(factors, s);
      }
    }

    std::vector<FreeSyllable> const& syllables() const noexcept {
      return _s;
    }

    bool is_identity() const noexcept {
      return _s.empty();
    }

    std::size_t length() const noexcept {
      return _s.size();
    }

    friend bool operator==(FreeProductElement const& a,
                           FreeProductElement const& b) {
      return a._s == b._s;
    }

    friend bool operator!=(FreeProductElement const& a,
                           FreeProductElement const& b) {
      return !(a == b);
    }

    std::string to_string(std::vector<FiniteGroup> const& factors) const {
      if (_s.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t i = 0; i < _s.size(); ++i) {
        out += (i ? " " : "") + factors[_s[i].factor].label(_s[i].element)
               + "@" + std::to_string(_s[i].factor);
      }
      return out;
    }

    // Appends one syllable and re-reduces at the boundary.
    void push(std::vector<FiniteGroup> const& factors, FreeSyllable s) {
      if (s.factor >= factors.size()
          || s.element >= factors[s.factor].size()) {
        throw InvalidInput("FreeProductElement: syllable out of range");
      }
      auto const& G = factors[s.factor];
      if (s.element == G.identity()) {
        return;
      }
      if (!_s.empty() && _s.back().factor == s.factor) {
        auto const m = G.mul(_s.back().element, s.element);
        if (m == G.identity()) {
          _s.pop_back();
        } else {
          _s.back().element = m;
        }
        return;
      }
      _s.push_back(s);
    }

   private:
    std::vector<FreeSyllable> _s;
  };

  // Normal form of u * v: concatenate, merge equal-factor syllables at the
  // junction, drop identities, and cascade.
  inline FreeProductElement fp_multiply(std::vector<FiniteGroup> const& factors,
                                        FreeProductElement const&       u,
                                        FreeProductElement const&       v) {
    FreeProductElement r = u;
    for (auto const& s : v.syllables()) {
      r.push(factors, s);
    }
    return r;
  }

  inline FreeProductElement fp_inverse(std::vector<FiniteGroup> const& factors,
                                       FreeProductElement const&       u) {
    std::vector<FreeSyllable> r;
    for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it) {
      r.push_back({it->factor, factors[it->factor].inv(it->element)});
    }
    return FreeProductElement(factors, r);
  }

  inline FreeProductElement fp_generator(std::vector<FiniteGroup> const& factors,
                                         std::size_t                     factor,
                                         Element                         x) {
    return FreeProductElement(factors, {{factor, x}});
  }

  // A uniformly random reduced element with the given number of syllables.
  template <typename Rng>
  FreeProductElement random_free_product_element(
      std::vector<FiniteGroup> const& factors,
      std::size_t                     syllables,
      Rng&                            rng) {
    std::vector<FreeSyllable> s;
    std::size_t               prev = factors.size();
    for (std::size_t i = 0; i < syllables; ++i) {
      std::size_t f;
      do {
        f = std::uniform_int_distribution<std::size_t>(0, factors.size() - 1)(rng);
      } while (f == prev && factors.size() > 1);
      if (factors[f].size() < 2) {
        continue;
      }
      Element x;
      do {
        x = static_cast<Element>(std::uniform_int_distribution<std::size_t>(
            0, factors[f].size() - 1)(rng));
      } while (x == factors[f].identity());
      s.push_back({f, x});
      prev = f;
    }
    return FreeProductElement(factors, s);
  }

}  // namespace vcg
