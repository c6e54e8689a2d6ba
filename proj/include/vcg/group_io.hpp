#pragma once

// Group input: permutation generators in cycle notation, Cayley tables
// with named elements, and textual group specs for the command line and
// system files.

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vcg/catalog.hpp"
#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"
#include "vcg/word.hpp"

namespace vcg {

  inline constexpr std::size_t max_permutation_degree = 20;

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  // Points are 0-based internally and 1-based in cycle notation.
  class Permutation {
   public:
    Permutation() {
      for (std::size_t i = 0; i < max_permutation_degree; ++i) {
        _img[i] = static_cast<std::uint8_t>(i);
      }
    }

    std::size_t operator()(std::size_t i) const {
      return _img.at(i);
    }

    void set(std::size_t i, std::size_t j) {
      _img.at(i) = static_cast<std::uint8_t>(j);
    }

    // x -> other(this(x))
    Permutation then(Permutation const& other) const {
      Permutation r;
      for (std::size_t i = 0; i < max_permutation_degree; ++i) {
        r._img[i] = other._img[_img[i]];
      }
      return r;
    }

    bool is_identity() const {
      return *this == Permutation();
    }

    std::string to_string() const {
      std::string           out;
      std::array<bool, max_permutation_degree> seen{};
      for (std::size_t i = 0; i < max_permutation_degree; ++i) {
        if (seen[i] || _img[i] == i) {
          continue;
        }
        out += "(";
        std::size_t j = i;
        do {
          seen[j] = true;
          out += (j == i ? "" : " ") + std::to_string(j + 1);
          j = _img[j];
        } while (j != i);
        out += ")";
      }
      return out.empty() ? "()" : out;
    }

    std::string key() const {
      return std::string(_img.begin(), _img.end());
    }

    bool operator==(Permutation const&) const = default;

   private:
    std::array<std::uint8_t, max_permutation_degree> _img{};
  };

  // Cycle notation such as "(1 2 3)(4 5)"; commas inside a cycle are
  // accepted as separators. "()" is the identity.
  inline Permutation parse_permutation(std::string const& text) {
    Permutation p;
    std::array<bool, max_permutation_degree> moved{};
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    auto fail = [&](std::string const& what) {
      throw InvalidInput("permutation \"" + text + "\": " + what);
    };
    skip();
    if (i == text.size()) {
      fail("empty");
    }
    while (i < text.size()) {
      if (text[i] != '(') {
        fail("expected '('");
      }
      ++i;
      std::vector<std::size_t> cycle;
      for (;;) {
        skip();
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        if (i < text.size() && text[i] == ',' && !cycle.empty()) {
          ++i;
          continue;
        }
        std::size_t v = 0, digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + std::size_t(text[i] - '0');
          ++i;
          if (++digits > 3) {
            fail("point out of range");
          }
        }
        if (digits == 0) {
          fail("expected a point or ')'");
        }
        if (v < 1 || v > max_permutation_degree) {
          fail("points must lie in 1.." + std::to_string(max_permutation_degree));
        }
        if (moved[v - 1]) {
          fail("point " + std::to_string(v) + " repeated");
        }
        moved[v - 1] = true;
        cycle.push_back(v - 1);
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        p.set(cycle[k], cycle[(k + 1) % cycle.size()]);
      }
      skip();
    }
    return p;
  }

  struct PermutationGroup {
    FiniteGroup              group;
    std::vector<Element>     generator_elements;
    std::vector<Permutation> elements;
  };

  // Closure of the generators by breadth-first search, then the full
  // multiplication table. Elements are labelled in cycle notation.
  inline PermutationGroup permutation_group(std::vector<Permutation> const& gens,
                                            std::size_t cap = max_cayley_order) {
    std::vector<Permutation>                     elems{Permutation()};
    std::unordered_map<std::string, Element>     index{{Permutation().key(), 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : gens) {
        auto const y = elems[i].then(g);
        if (index.emplace(y.key(), static_cast<Element>(elems.size())).second) {
          elems.push_back(y);
          if (elems.size() > cap) {
            throw CapExceeded("permutation closure exceeds "
                              + std::to_string(cap) + " elements");
          }
        }
      }
    }
    std::size_t const        n = elems.size();
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = elems[i].to_string();
    }
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = index.at(elems[a].then(elems[b]).key());
      }
    }
    std::vector<Element> ge;
    for (auto const& g : gens) {
      ge.push_back(index.at(g.key()));
    }
    return {FiniteGroup(std::move(labels), std::move(table)), std::move(ge),
            std::move(elems)};
  }

  struct PermutationGenerators {
    std::vector<std::string> cycles;
  };

  struct CayleyData {
    std::vector<std::string>              elements;
    std::vector<std::vector<std::string>> table;
  };

  inline FiniteGroup make_group(PermutationGenerators const& src) {
    std::vector<Permutation> gens;
    for (auto const& c : src.cycles) {
      gens.push_back(parse_permutation(c));
    }
    return permutation_group(gens).group;
  }

  // The identity is the element whose row is the identity map.
  inline FiniteGroup make_group(CayleyData const& src) {
    std::size_t const n = src.elements.size();
    if (src.table.size() != n) {
      throw InvalidInput("Cayley data: table needs one row per element");
    }
    std::map<std::string, Element> index;
    for (std::size_t i = 0; i < n; ++i) {
      if (!index.emplace(src.elements[i], static_cast<Element>(i)).second) {
        throw InvalidInput("Cayley data: duplicate element " + src.elements[i]);
      }
    }
    std::vector<Element> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (src.table[i].size() != n) {
        throw InvalidInput("Cayley data: row " + std::to_string(i) + " has wrong length");
      }
      for (std::size_t j = 0; j < n; ++j) {
        auto const it = index.find(src.table[i][j]);
        if (it == index.end()) {
          throw InvalidInput("Cayley data: unknown element " + src.table[i][j]);
        }
        table[i * n + j] = it->second;
      }
    }
    return FiniteGroup(src.elements, std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // Group specs
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Splits at commas outside parentheses.
    inline std::vector<std::string> split_top_level(std::string const& s) {
      std::vector<std::string> out;
      std::string              cur;
      int                      depth = 0;
      for (char c : s) {
        if (c == '(') {
          ++depth;
        } else if (c == ')') {
          --depth;
        }
        if (c == ',' && depth == 0) {
          out.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      out.push_back(cur);
      return out;
    }

    inline nlohmann::json read_json_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InvalidInput("cannot open " + path);
      }
      try {
        return nlohmann::json::parse(in);
      } catch (nlohmann::json::exception const& e) {
        throw InvalidInput(path + ": " + e.what());
      }
    }

    inline PresentedGroup presented_from_permutations(std::vector<std::string> const& cycles,
                                                      std::string const&              name) {
      std::vector<Permutation> gens;
      for (auto const& c : cycles) {
        gens.push_back(parse_permutation(c));
      }
      if (gens.empty()) {
        throw InvalidInput("permutation group needs at least one generator");
      }
      auto pg = permutation_group(gens);
      return present(pg.group, pg.generator_elements, {}, true, name);
    }
  }  // namespace detail

  inline PresentedGroup load_group_json(nlohmann::json const& spec,
                                        std::string const&    name = "",
                                        std::string const&    base = "");

  // A group spec is one of
  //   a catalog name                    C2xC2, D8, Q8, C2^4
  //   perm:<cycles>,<cycles>,...        perm:(1 2 3 4),(1 3)
  //   pres:<gens | relators>            pres:a,b | a^2, b^2, (a*b)^2
  //   file:<path>                       a JSON group document
  // Relative paths are taken from `base` when it is given. The result
  // carries a presentation so that maps can be given by generator images.
  inline PresentedGroup load_group(std::string const& spec, std::string const& name = "",
                                   std::string const& base = "") {
    std::string const label = name.empty() ? spec : name;
    if (spec.rfind("perm:", 0) == 0) {
      return detail::presented_from_permutations(detail::split_top_level(spec.substr(5)),
                                                 label);
    }
    if (spec.rfind("pres:", 0) == 0) {
      return presented_group(label, spec.substr(5));
    }
    if (spec.rfind("file:", 0) == 0) {
      std::filesystem::path path = spec.substr(5);
      if (path.is_relative() && !base.empty()) {
        path = std::filesystem::path(base) / path;
      }
      return load_group_json(detail::read_json_file(path.string()),
                             name.empty() ? spec.substr(5) : name, path.parent_path().string());
    }
    auto g = catalog_group(spec);
    g.name = label;
    return g;
  }

  // JSON group document: a spec string, or an object with one of
  //   "catalog": name
  //   "permutations": [cycle strings]
  //   "presentation": "gens | relators"
  //   "elements" and "table": Cayley data, element names throughout
  inline PresentedGroup load_group_json(nlohmann::json const& spec, std::string const& name,
                                        std::string const& base) {
    try {
      if (spec.is_string()) {
        return load_group(spec.get<std::string>(), name, base);
      }
      if (!spec.is_object()) {
        throw InvalidInput("group spec must be a string or an object");
      }
      if (spec.contains("catalog")) {
        return load_group(spec.at("catalog").get<std::string>(), name, base);
      }
      if (spec.contains("permutations")) {
        return detail::presented_from_permutations(
            spec.at("permutations").get<std::vector<std::string>>(), name);
      }
      if (spec.contains("presentation")) {
        return presented_group(name, spec.at("presentation").get<std::string>());
      }
      if (spec.contains("elements") && spec.contains("table")) {
        CayleyData d{spec.at("elements").get<std::vector<std::string>>(),
                     spec.at("table").get<std::vector<std::vector<std::string>>>()};
        return present(make_group(d), {}, {}, true, name);
      }
    } catch (nlohmann::json::exception const& e) {
      throw InvalidInput(std::string("group spec: ") + e.what());
    }
    throw InvalidInput("group spec: expected catalog, permutations, presentation "
                       "or elements/table");
  }

}  // namespace vcg
