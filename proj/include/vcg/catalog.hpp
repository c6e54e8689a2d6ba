#pragma once

// Groups given together with a presentation, the named-group catalog,
// and presentations read off from Cayley tables.
//
// Catalog names:
//   C<n>            cyclic, n >= 1 (C1 is trivial)
//   D<n>            dihedral of order n, n even, n >= 4
//   Q<n>, Dic<n>    dicyclic of order n, 4 | n, n >= 8 (Q8 quaternion)
//   S3 S4 A4 A5     symmetric / alternating
//   He3             Heisenberg group of order 27 (exponent 3)
//   SD16 M16        semidihedral, modular of order 16
//   C4:C4 C2^2:C4   split extensions of order 16
//   Pauli           central product C4 o D8
//   X^k             k-fold direct power, e.g. C2^4
//   XxY             direct products, e.g. C2^2xC3^2, D8xC2

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"
#include "vcg/free_product.hpp"
#include "vcg/todd_coxeter.hpp"
#include "vcg/word.hpp"

namespace vcg {

  struct PresentedGroup {
    std::string  name;
    Presentation presentation;
    FiniteGroup  group;
    // generator_elements[i] is the element named by generator i
    std::vector<Element> generator_elements;

    std::map<std::string, Element> assignment() const {
      std::map<std::string, Element> a;
      for (std::size_t i = 0; i < generator_elements.size(); ++i) {
        a.emplace(presentation.generators()[i], generator_elements[i]);
      }
      return a;
    }

    Element evaluate(Word const& w) const {
      return evaluate_word(w, assignment(), group);
    }

    // Breadth-first words in the generators, one per element.
    std::vector<Word> element_words() const {
      std::vector<Word> words(group.size());
      std::vector<bool> seen(group.size(), false);
      std::vector<Element> queue{group.identity()};
      seen[group.identity()] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto const x = queue[i];
        for (std::size_t g = 0; g < generator_elements.size(); ++g) {
          for (int e : {1, -1}) {
            auto const s = e > 0 ? generator_elements[g]
                                 : group.inv(generator_elements[g]);
            auto const y = group.mul(x, s);
            if (!seen[y]) {
              seen[y]  = true;
              words[y] = words[x]
                         * Word::generator(presentation.generators()[g], e);
              queue.push_back(y);
            }
          }
        }
      }
      if (queue.size() != group.size()) {
        throw InvalidInput("PresentedGroup: generators do not generate");
      }
      return words;
    }
  };

  // Enumerates the presentation; the group is the regular action.
  inline PresentedGroup presented_group(std::string const&  name,
                                        Presentation const& P,
                                        std::size_t max_cosets = max_cosets_from_env()) {
    auto e = enumerate_group(P, max_cosets);
    return {name, P, e.group, e.generator_elements};
  }

  inline PresentedGroup presented_group(std::string const& name,
                                        std::string const& text) {
    return presented_group(name, parse_presentation(text));
  }

  namespace detail {
    inline std::string generator_symbol(std::size_t i) {
      static char const* names = "abcdefghijklmnopqrstuvwyz";
      if (i < 25) {
        return std::string(1, names[i]);
      }
      return "g" + std::to_string(i);
    }
  }  // namespace detail

  // A presentation of G on the given generating elements, read off a
  // breadth-first Schreier tree of the Cayley graph: one relator per
  // non-tree edge. With prune = true, relators are dropped greedily as
  // long as the enumerated order stays |G|.
  inline PresentedGroup present(FiniteGroup const&              G,
                                std::vector<Element>            gens    = {},
                                std::vector<std::string>        symbols = {},
                                bool                            prune   = true,
                                std::string const&              name    = "") {
    if (gens.empty() && G.size() > 1) {
      gens = detail::small_generating_set(G);
    }
    if (symbols.empty()) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        symbols.push_back(detail::generator_symbol(i));
      }
    }
    if (symbols.size() != gens.size()) {
      throw InvalidInput("present: symbol/generator count mismatch");
    }
    if (gens.empty()) {
      // the trivial group on one redundant generator
      Presentation P({"a"}, {Word::generator("a")});
      return {name, P, G, {G.identity()}};
    }
    std::size_t const    n = G.size();
    std::vector<Word>    words(n);
    std::vector<bool>    seen(n, false);
    std::vector<Element> queue{G.identity()};
    seen[G.identity()] = true;
    std::vector<std::pair<Element, std::size_t>> tree_edges;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto const x = queue[i];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto const y = G.mul(x, gens[g]);
        if (!seen[y]) {
          seen[y]  = true;
          words[y] = words[x] * Word::generator(symbols[g]);
          queue.push_back(y);
        }
      }
    }
    if (queue.size() != n) {
      throw InvalidInput("present: elements do not generate the group");
    }
    std::vector<Word> rels;
    for (auto x : queue) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto const y = G.mul(x, gens[g]);
        Word       r = words[x] * Word::generator(symbols[g]) * words[y].inverse();
        if (!r.empty()) {
          rels.push_back(std::move(r));
        }
      }
    }
    std::sort(rels.begin(), rels.end(), [](Word const& a, Word const& b) {
      return a.length() < b.length()
             || (a.length() == b.length() && a.to_string() < b.to_string());
    });
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    if (prune) {
      // try to drop the longest relators first
      for (std::size_t i = rels.size(); i-- > 0;) {
        std::vector<Word> trial(rels);
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        try {
          auto T = todd_coxeter(Presentation(symbols, trial), {}, 64 * n + 256);
          if (T.ncosets == n) {
            rels = std::move(trial);
          }
        } catch (CapExceeded const&) {
        }
      }
    }
    Presentation P(symbols, rels);
    return {name, P, G, gens};
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::optional<std::uint64_t> parse_uint(std::string const& s) {
      if (s.empty() || s.size() > 9
          || !std::all_of(s.begin(), s.end(),
                          [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        return std::nullopt;
      }
      return std::stoull(s);
    }

    inline std::string basic_presentation(std::string const& name) {
      static std::map<std::string, std::string> const fixed = {
          {"S3", "a,b | a^2, b^2, (a b)^3"},
          {"S4", "a,b | a^4, b^2, (a b)^3"},
          {"A4", "a,b | a^2, b^3, (a b)^3"},
          {"A5", "a,b | a^2, b^3, (a b)^5"},
          {"He3", "x,y,z | x^3, y^3, z^3, [x,y] z^-1, [x,z], [y,z]"},
          {"SD16", "a,b | a^8, b^2, b a b^-1 a^-3"},
          {"M16", "a,b | a^8, b^2, b a b^-1 a^-5"},
          {"C4:C4", "a,b | a^4, b^4, b^-1 a b a"},
          {"C2^2:C4", "a,b,c | a^2, b^2, c^4, [a,b], c^-1 a c b^-1, c^-1 b c a^-1"},
          {"Pauli", "r,s,a | r^4, s^2, (s r)^2, a^2 r^-2, [a,r], [a,s]"},
      };
      if (auto it = fixed.find(name); it != fixed.end()) {
        return it->second;
      }
      if (name.size() > 1 && name[0] == 'C') {
        if (auto n = parse_uint(name.substr(1)); n && *n >= 1) {
          return "a | a^" + std::to_string(*n);
        }
      }
      if (name.size() > 1 && name[0] == 'D') {
        if (auto n = parse_uint(name.substr(1)); n && *n >= 4 && *n % 2 == 0) {
          return "r,s | r^" + std::to_string(*n / 2) + ", s^2, (s r)^2";
        }
      }
      std::optional<std::uint64_t> q;
      if (name.size() > 1 && name[0] == 'Q') {
        q = parse_uint(name.substr(1));
      } else if (name.size() > 3 && name.compare(0, 3, "Dic") == 0) {
        q = parse_uint(name.substr(3));
      }
      if (q && *q >= 8 && *q % 4 == 0) {
        auto const k = *q / 4;
        return "a,b | a^" + std::to_string(2 * k) + ", b^2 a^-"
               + std::to_string(k) + ", b^-1 a b a";
      }
      throw InvalidInput("unknown group name '" + name + "'");
    }

    inline std::vector<std::string> split_product(std::string const& name) {
      std::vector<std::string> parts;
      std::string              cur;
      for (char c : name) {
        if (c == 'x') {
          parts.push_back(cur);
          cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          cur += c;
        }
      }
      parts.push_back(cur);
      for (auto const& p : parts) {
        if (p.empty()) {
          throw InvalidInput("malformed group name '" + name + "'");
        }
      }
      return parts;
    }

    // Direct product of presented groups; cross commutators added.
    inline PresentedGroup product_of(std::string const&                 name,
                                     std::vector<PresentedGroup> const& parts) {
      if (parts.size() == 1) {
        auto p = parts[0];
        p.name = name;
        return p;
      }
      std::vector<Presentation> ps;
      std::vector<FiniteGroup>  gs;
      for (auto const& p : parts) {
        ps.push_back(p.presentation);
        gs.push_back(p.group);
      }
      auto                 fp = free_product_presentation(ps);
      std::vector<Word>    extra;
      std::vector<Element> gen_elems;
      auto                 dp = direct_product(gs);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t gi = 0; gi < ps[i].generators().size(); ++gi) {
          gen_elems.push_back(dp.injections[i](parts[i].generator_elements[gi]));
          auto const& a = fp.renaming[i].at(ps[i].generators()[gi]);
          for (std::size_t j = i + 1; j < parts.size(); ++j) {
            for (auto const& h : ps[j].generators()) {
              extra.push_back(commutator(Word::generator(a),
                                         Word::generator(fp.renaming[j].at(h))));
            }
          }
        }
      }
      return {name, fp.presentation.with_relators(extra), dp.group, gen_elems};
    }
  }  // namespace detail

  inline PresentedGroup catalog_group(std::string const& name) {
    auto parts = detail::split_product(name);
    std::vector<PresentedGroup> groups;
    for (auto const& part : parts) {
      // X^k powers, but C2^2:C4 is a basic name
      std::string    base = part;
      std::uint64_t  k    = 1;
      auto const     hat  = part.rfind('^');
      if (hat != std::string::npos && part.find(':') == std::string::npos) {
        auto e = detail::parse_uint(part.substr(hat + 1));
        if (!e || *e == 0 || *e > 12) {
          throw InvalidInput("malformed power in group name '" + part + "'");
        }
        base = part.substr(0, hat);
        k    = *e;
      }
      auto const g = presented_group(base, detail::basic_presentation(base));
      if (k == 1) {
        groups.push_back(g);
      } else {
        groups.push_back(
            detail::product_of(part, std::vector<PresentedGroup>(k, g)));
      }
    }
    return detail::product_of(name, groups);
  }

  inline FiniteGroup make_group(std::string const& name) {
    return catalog_group(name).group;
  }

  // Names covering every isomorphism type of order <= 12.
  inline std::vector<std::string> const& catalog_small() {
    static std::vector<std::string> const names = {
        "C1",   "C2",    "C3",   "C4",     "C2^2", "C5",  "C6",   "S3",
        "C7",   "C8",    "C2xC4", "C2^3",  "D8",   "Q8",  "C9",   "C3^2",
        "C10",  "D10",   "C11",  "C12",    "C2xC6", "D12", "A4",  "Q12"};
    return names;
  }

  // The 14 groups of order 16.
  inline std::vector<std::string> const& catalog_order16() {
    static std::vector<std::string> const names
        = {"C16",  "C2xC8", "C4^2", "C2^2xC4", "C2^4",  "D8xC2", "Q8xC2",
           "D16",  "Q16",   "SD16", "M16",     "C4:C4", "C2^2:C4", "Pauli"};
    return names;
  }

  // Every catalog group of order <= 16.
  inline std::vector<std::string> catalog_all() {
    auto out = catalog_small();
    for (auto const& n : {"C13", "C14", "D14", "C15"}) {
      out.push_back(n);
    }
    for (auto const& n : catalog_order16()) {
      out.push_back(n);
    }
    return out;
  }

}  // namespace vcg
