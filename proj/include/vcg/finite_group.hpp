#pragma once

// Finite groups stored as full Cayley tables, together with subgroups,
// homomorphisms and the closure operations built on them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vcg/error.hpp"
#include "vcg/integer.hpp"
#include "vcg/lattice.hpp"

namespace vcg {

  using Element = std::uint32_t;

  // Largest group realised as a Cayley table (the table has n^2 entries).
  inline constexpr std::size_t max_cayley_order = 4096;

  class FiniteGroup {
    struct Data {
      std::vector<std::string>             labels;
      std::vector<Element>                 table;
      std::vector<Element>                 inverse;
      std::vector<std::uint32_t>           order;
      std::map<std::string, Element>       by_label;
      Element                              identity = 0;
      std::size_t                          n        = 1;
      bool                                 abelian  = true;
    };

   public:
    enum class Check { full, trusted };

    // The trivial group.
    FiniteGroup() : FiniteGroup({"e"}, {0}, Check::trusted) {}

    // table[i * n + j] is the index of labels[i] * labels[j].
    FiniteGroup(std::vector<std::string> labels,
                std::vector<Element>     table,
                Check                    check = Check::full) {
      auto        d = std::make_shared<Data>();
      std::size_t n = labels.size();
      if (n == 0) {
        throw InvalidInput("FiniteGroup: empty element list");
      }
      if (n > max_cayley_order) {
        throw CapExceeded("FiniteGroup: order " + std::to_string(n)
                          + " exceeds the Cayley-table cap "
                          + std::to_string(max_cayley_order));
      }
      if (table.size() != n * n) {
        throw InvalidInput("FiniteGroup: table has wrong size");
      }
      d->n      = n;
      d->labels = std::move(labels);
      d->table  = std::move(table);
      for (Element i = 0; i < n; ++i) {
        if (!d->by_label.emplace(d->labels[i], i).second) {
          throw InvalidInput("FiniteGroup: duplicate label " + d->labels[i]);
        }
      }
      _d = std::move(d);
      validate_and_fill(check);
    }

    std::size_t size() const noexcept {
      return _d->n;
    }

    Element identity() const noexcept {
      return _d->identity;
    }

    Element mul(Element a, Element b) const noexcept {
      return _d->table[std::size_t(a) * _d->n + b];
    }

    Element inv(Element a) const noexcept {
      return _d->inverse[a];
    }

    std::uint32_t order_of(Element a) const noexcept {
      return _d->order[a];
    }

    Element power(Element a, std::int64_t k) const noexcept {
      std::int64_t const o = _d->order[a];
      k                    = mod_i64(k, o);
      Element r            = identity();
      for (std::int64_t i = 0; i < k; ++i) {
        r = mul(r, a);
      }
      return r;
    }

    // g^-1 a g
    Element conj(Element a, Element g) const noexcept {
      return mul(mul(inv(g), a), g);
    }

    // a^-1 b^-1 a b
    Element comm(Element a, Element b) const noexcept {
      return mul(mul(inv(a), inv(b)), mul(a, b));
    }

    std::string const& label(Element a) const {
      return _d->labels.at(a);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _d->labels;
    }

    std::optional<Element> find(std::string const& label) const {
      auto it = _d->by_label.find(label);
      if (it == _d->by_label.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Element element(std::string const& label) const {
      auto x = find(label);
      if (!x) {
        throw InvalidInput("unknown element label: " + label);
      }
      return *x;
    }

    bool is_abelian() const noexcept {
      return _d->abelian;
    }

    std::uint64_t exponent() const {
      std::uint64_t e = 1;
      for (auto o : _d->order) {
        e = std::lcm(e, std::uint64_t(o));
      }
      return e;
    }

    std::vector<Element> const& table() const noexcept {
      return _d->table;
    }

    // Same underlying object (not an isomorphism test).
    bool same(FiniteGroup const& other) const noexcept {
      return _d == other._d;
    }

    friend bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
      return a._d == b._d || (a._d->table == b._d->table);
    }

    friend bool operator!=(FiniteGroup const& a, FiniteGroup const& b) {
      return !(a == b);
    }

   private:
    void validate_and_fill(Check check) {
      auto&             d = *std::const_pointer_cast<Data>(_d);
      std::size_t const n = d.n;
      for (auto x : d.table) {
        if (x >= n) {
          throw InvalidInput("FiniteGroup: table entry out of range");
        }
      }
      if (check == Check::full) {
        std::vector<std::uint32_t> seen(n, 0);
        std::uint32_t              stamp = 0;
        for (std::size_t i = 0; i < n; ++i) {
          ++stamp;
          for (std::size_t j = 0; j < n; ++j) {
            auto& s = seen[d.table[i * n + j]];
            if (s == stamp) {
              throw InvalidInput("FiniteGroup: table is not a Latin square "
                                 "(repeated entry in a row)");
            }
            s = stamp;
          }
        }
        for (std::size_t j = 0; j < n; ++j) {
          ++stamp;
          for (std::size_t i = 0; i < n; ++i) {
            auto& s = seen[d.table[i * n + j]];
            if (s == stamp) {
              throw InvalidInput("FiniteGroup: table is not a Latin square "
                                 "(repeated entry in a column)");
            }
            s = stamp;
          }
        }
      }
      // identity: the e with e*e = e
      bool found = false;
      for (Element i = 0; i < n; ++i) {
        if (d.table[i * n + i] == i) {
          d.identity = i;
          found      = true;
          break;
        }
      }
      if (!found) {
        throw InvalidInput("FiniteGroup: no identity element");
      }
      auto const e = d.identity;
      for (Element x = 0; x < n; ++x) {
        if (d.table[e * n + x] != x || d.table[x * n + e] != x) {
          throw InvalidInput("FiniteGroup: identity is not two-sided");
        }
      }
      d.inverse.assign(n, e);
      for (Element x = 0; x < n; ++x) {
        bool ok = false;
        for (Element y = 0; y < n; ++y) {
          if (d.table[x * n + y] == e) {
            if (d.table[y * n + x] != e) {
              throw InvalidInput("FiniteGroup: inverse is not two-sided");
            }
            d.inverse[x] = y;
            ok           = true;
            break;
          }
        }
        if (!ok) {
          throw InvalidInput("FiniteGroup: element without inverse");
        }
      }
      if (check == Check::full) {
        auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
          return d.table[d.table[a * n + b] * n + c]
                 == d.table[a * n + d.table[b * n + c]];
        };
        if (n <= 512) {
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              auto const ab = d.table[a * n + b];
              for (std::size_t c = 0; c < n; ++c) {
                if (d.table[ab * n + c] != d.table[a * n + d.table[b * n + c]]) {
                  throw InvalidInput("FiniteGroup: table is not associative");
                }
              }
            }
          }
        } else {
          std::mt19937_64                            rng(0x5eed);
          std::uniform_int_distribution<std::size_t> pick(0, n - 1);
          for (int t = 0; t < 10000; ++t) {
            if (!assoc(pick(rng), pick(rng), pick(rng))) {
              throw InvalidInput("FiniteGroup: table is not associative");
            }
          }
        }
      }
      d.order.assign(n, 1);
      for (Element x = 0; x < n; ++x) {
        Element y = x;
        while (y != e) {
          y = d.table[y * n + x];
          ++d.order[x];
        }
      }
      d.abelian = true;
      for (std::size_t a = 0; a < n && d.abelian; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (d.table[a * n + b] != d.table[b * n + a]) {
            d.abelian = false;
            break;
          }
        }
      }
    }

    std::shared_ptr<Data const> _d;
  };

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  class Subgroup {
   public:
    Subgroup() = default;

    // Members must already form a subgroup; checked unless trusted.
    Subgroup(FiniteGroup parent, std::vector<Element> members, bool trusted = false)
        : _parent(std::move(parent)), _members(std::move(members)) {
      std::sort(_members.begin(), _members.end());
      _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
      _in.assign(_parent.size(), false);
      for (auto x : _members) {
        if (x >= _parent.size()) {
          throw InvalidInput("Subgroup: element index out of range");
        }
        _in[x] = true;
      }
      if (!trusted) {
        if (!contains(_parent.identity())) {
          throw InvalidInput("Subgroup: identity missing");
        }
        for (auto a : _members) {
          if (!contains(_parent.inv(a))) {
            throw InvalidInput("Subgroup: not closed under inverses");
          }
          for (auto b : _members) {
            if (!contains(_parent.mul(a, b))) {
              throw InvalidInput("Subgroup: not closed under products");
            }
          }
        }
      }
    }

    FiniteGroup const& parent() const noexcept {
      return _parent;
    }

    std::vector<Element> const& members() const noexcept {
      return _members;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    bool contains(Element x) const noexcept {
      return x < _in.size() && _in[x];
    }

    bool is_trivial() const noexcept {
      return _members.size() == 1;
    }

    bool is_whole() const noexcept {
      return _members.size() == _parent.size();
    }

    bool is_subset_of(Subgroup const& other) const noexcept {
      return std::all_of(_members.begin(), _members.end(),
                         [&](Element x) { return other.contains(x); });
    }

    friend bool operator==(Subgroup const& a, Subgroup const& b) {
      return a._members == b._members;
    }

    friend bool operator!=(Subgroup const& a, Subgroup const& b) {
      return !(a == b);
    }

   private:
    FiniteGroup          _parent;
    std::vector<Element> _members;
    std::vector<bool>    _in;
  };

  namespace detail {
    // Grows `elems`/`in` (already a subgroup) to the subgroup generated
    // together with `gens`. Returns false if the size would exceed `cap`.
    inline bool close_under(FiniteGroup const&          G,
                            std::vector<Element>&       elems,
                            std::vector<bool>&          in,
                            std::vector<Element> const& gens,
                            std::size_t                 cap) {
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (auto s : gens) {
          auto const y = G.mul(elems[i], s);
          if (!in[y]) {
            in[y] = true;
            elems.push_back(y);
            if (elems.size() > cap) {
              return false;
            }
          }
        }
      }
      return true;
    }

    struct Closure {
      std::vector<Element> elems;
      std::vector<bool>    in;
      std::vector<Element> gens;  // irredundant generators actually used
    };

    inline Closure generate(FiniteGroup const&          G,
                            std::vector<Element> const& gens) {
      Closure c;
      c.in.assign(G.size(), false);
      c.in[G.identity()] = true;
      c.elems.push_back(G.identity());
      for (auto g : gens) {
        if (g >= G.size()) {
          throw InvalidInput("subgroup_generated: element index out of range");
        }
        if (c.in[g]) {
          continue;
        }
        c.gens.push_back(g);
        close_under(G, c.elems, c.in, c.gens, G.size());
      }
      return c;
    }
  }  // namespace detail

  inline Subgroup subgroup_generated(FiniteGroup const&          G,
                                     std::vector<Element> const& gens) {
    auto c = detail::generate(G, gens);
    return Subgroup(G, std::move(c.elems), true);
  }

  inline Subgroup whole_group(FiniteGroup const& G) {
    std::vector<Element> all(G.size());
    std::iota(all.begin(), all.end(), Element(0));
    return Subgroup(G, std::move(all), true);
  }

  inline Subgroup trivial_subgroup(FiniteGroup const& G) {
    return Subgroup(G, {G.identity()}, true);
  }

  inline bool is_normal(Subgroup const& H) {
    auto const& G = H.parent();
    // conjugating generators of H by generators of G suffices, but the
    // tables are small: check every member against every element
    auto gens = detail::generate(G, H.members()).gens;
    for (auto h : gens) {
      for (Element g = 0; g < G.size(); ++g) {
        if (!H.contains(G.conj(h, g))) {
          return false;
        }
      }
    }
    return true;
  }

  inline Subgroup normal_closure(FiniteGroup const&          G,
                                 std::vector<Element> const& gens) {
    detail::Closure c = detail::generate(G, gens);
    // add conjugates of generators until stable
    for (std::size_t i = 0; i < c.gens.size(); ++i) {
      auto const h = c.gens[i];
      for (Element g = 0; g < G.size(); ++g) {
        auto const y = G.conj(h, g);
        if (!c.in[y]) {
          c.gens.push_back(y);
          detail::close_under(G, c.elems, c.in, c.gens, G.size());
        }
      }
    }
    return Subgroup(G, std::move(c.elems), true);
  }

  inline Subgroup intersection(Subgroup const& a, Subgroup const& b) {
    std::vector<Element> out;
    for (auto x : a.members()) {
      if (b.contains(x)) {
        out.push_back(x);
      }
    }
    return Subgroup(a.parent(), std::move(out), true);
  }

  // Subgroup generated by the union of the members of a and b.
  inline Subgroup join(Subgroup const& a, Subgroup const& b) {
    std::vector<Element> gens(a.members());
    gens.insert(gens.end(), b.members().begin(), b.members().end());
    return subgroup_generated(a.parent(), gens);
  }

  // [H, K], generated by the commutators [h, k].
  inline Subgroup commutator_subgroup(Subgroup const& H, Subgroup const& K) {
    auto const&          G = H.parent();
    std::vector<bool>    seen(G.size(), false);
    std::vector<Element> gens;
    for (auto h : H.members()) {
      for (auto k : K.members()) {
        auto const c = G.comm(h, k);
        if (!seen[c]) {
          seen[c] = true;
          gens.push_back(c);
        }
      }
    }
    return subgroup_generated(G, gens);
  }

  inline Subgroup center(FiniteGroup const& G) {
    std::vector<Element> z;
    for (Element a = 0; a < G.size(); ++a) {
      bool central = true;
      for (Element b = 0; b < G.size() && central; ++b) {
        central = G.mul(a, b) == G.mul(b, a);
      }
      if (central) {
        z.push_back(a);
      }
    }
    return Subgroup(G, std::move(z), true);
  }

  inline Subgroup centralizer(FiniteGroup const& G, Element x) {
    std::vector<Element> c;
    for (Element g = 0; g < G.size(); ++g) {
      if (G.mul(g, x) == G.mul(x, g)) {
        c.push_back(g);
      }
    }
    return Subgroup(G, std::move(c), true);
  }

  inline Subgroup derived_subgroup(FiniteGroup const& G) {
    auto W = whole_group(G);
    return commutator_subgroup(W, W);
  }

  enum class SeriesKind { lower_central, upper_central, derived };

  // Terms until the series stabilises (the stable term is listed once).
  inline std::vector<Subgroup> series(FiniteGroup const& G, SeriesKind kind) {
    std::vector<Subgroup> out;
    switch (kind) {
      case SeriesKind::lower_central: {
        auto W = whole_group(G);
        out.push_back(W);
        while (true) {
          auto next = commutator_subgroup(out.back(), W);
          if (next == out.back()) {
            break;
          }
          out.push_back(std::move(next));
        }
        break;
      }
      case SeriesKind::derived: {
        out.push_back(whole_group(G));
        while (true) {
          auto next = commutator_subgroup(out.back(), out.back());
          if (next == out.back()) {
            break;
          }
          out.push_back(std::move(next));
        }
        break;
      }
      case SeriesKind::upper_central: {
        out.push_back(trivial_subgroup(G));
        while (true) {
          auto const&          Z = out.back();
          std::vector<Element> next;
          for (Element x = 0; x < G.size(); ++x) {
            bool ok = true;
            for (Element g = 0; g < G.size() && ok; ++g) {
              ok = Z.contains(G.comm(x, g));
            }
            if (ok) {
              next.push_back(x);
            }
          }
          Subgroup S(G, std::move(next), true);
          if (S == Z) {
            break;
          }
          out.push_back(std::move(S));
        }
        break;
      }
    }
    return out;
  }

  // gamma_k(G), with gamma_1 = G.
  inline Subgroup lower_central_term(FiniteGroup const& G, std::size_t k) {
    auto s = series(G, SeriesKind::lower_central);
    return s[std::min(k, s.size()) - 1];
  }

  // Z_k(G), with Z_0 = 1.
  inline Subgroup upper_central_term(FiniteGroup const& G, std::size_t k) {
    auto s = series(G, SeriesKind::upper_central);
    return s[std::min(k, s.size() - 1)];
  }

  inline bool is_nilpotent(FiniteGroup const& G) {
    return series(G, SeriesKind::lower_central).back().is_trivial();
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  class Homomorphism {
   public:
    Homomorphism() = default;

    // images[x] is the image of element x; fully checked unless trusted.
    Homomorphism(FiniteGroup          source,
                 FiniteGroup          target,
                 std::vector<Element> images,
                 bool                 trusted = false)
        : _source(std::move(source)),
          _target(std::move(target)),
          _images(std::move(images)) {
      if (_images.size() != _source.size()) {
        throw InvalidInput("Homomorphism: image list has wrong length");
      }
      for (auto y : _images) {
        if (y >= _target.size()) {
          throw InvalidInput("Homomorphism: image index out of range");
        }
      }
      if (!trusted) {
        for (Element a = 0; a < _source.size(); ++a) {
          for (Element b = 0; b < _source.size(); ++b) {
            if (_images[_source.mul(a, b)]
                != _target.mul(_images[a], _images[b])) {
              throw InvalidInput("Homomorphism: map does not respect products");
            }
          }
        }
      }
    }

    // The homomorphism determined by images of generators; throws if the
    // assignment does not extend or the generators do not generate.
    static Homomorphism from_generators(FiniteGroup const&          source,
                                        FiniteGroup const&          target,
                                        std::vector<Element> const& gens,
                                        std::vector<Element> const& gen_images) {
      auto h = try_from_generators(source, target, gens, gen_images);
      if (!h) {
        throw InvalidInput("Homomorphism: generator images do not extend "
                           "to a homomorphism");
      }
      return *h;
    }

    static std::optional<Homomorphism>
    try_from_generators(FiniteGroup const&          source,
                        FiniteGroup const&          target,
                        std::vector<Element> const& gens,
                        std::vector<Element> const& gen_images) {
      if (gens.size() != gen_images.size()) {
        throw InvalidInput("Homomorphism: generator/image count mismatch");
      }
      constexpr Element    undefined = ~Element(0);
      std::vector<Element> img(source.size(), undefined);
      std::vector<Element> queue{source.identity()};
      img[source.identity()] = target.identity();
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto const x = queue[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
          auto const y  = source.mul(x, gens[k]);
          auto const fy = target.mul(img[x], gen_images[k]);
          if (img[y] == undefined) {
            img[y] = fy;
            queue.push_back(y);
          } else if (img[y] != fy) {
            return std::nullopt;
          }
        }
      }
      if (queue.size() != source.size()) {
        throw InvalidInput("Homomorphism: listed elements do not generate "
                           "the source");
      }
      // the BFS fixes img on a spanning tree; full check for the rest
      try {
        return Homomorphism(source, target, std::move(img));
      } catch (InvalidInput const&) {
        return std::nullopt;
      }
    }

    static Homomorphism identity(FiniteGroup const& G) {
      std::vector<Element> img(G.size());
      std::iota(img.begin(), img.end(), Element(0));
      return Homomorphism(G, G, std::move(img), true);
    }

    static Homomorphism trivial(FiniteGroup const& S, FiniteGroup const& T) {
      return Homomorphism(S, T, std::vector<Element>(S.size(), T.identity()),
                          true);
    }

    FiniteGroup const& source() const noexcept {
      return _source;
    }

    FiniteGroup const& target() const noexcept {
      return _target;
    }

    std::vector<Element> const& images() const noexcept {
      return _images;
    }

    Element operator()(Element x) const {
      return _images.at(x);
    }

    // Left-to-right composition: x -> next(this(x)).
    Homomorphism then(Homomorphism const& next) const {
      if (!(next._source == _target)) {
        throw InvalidInput("Homomorphism::then: maps are not composable");
      }
      std::vector<Element> img(_images.size());
      for (std::size_t x = 0; x < img.size(); ++x) {
        img[x] = next._images[_images[x]];
      }
      return Homomorphism(_source, next._target, std::move(img), true);
    }

    Subgroup kernel() const {
      std::vector<Element> k;
      for (Element x = 0; x < _images.size(); ++x) {
        if (_images[x] == _target.identity()) {
          k.push_back(x);
        }
      }
      return Subgroup(_source, std::move(k), true);
    }

    Subgroup image() const {
      return Subgroup(_target, _images, true);
    }

    Subgroup image_of(Subgroup const& H) const {
      std::vector<Element> out;
      for (auto x : H.members()) {
        out.push_back(_images[x]);
      }
      return Subgroup(_target, std::move(out), true);
    }

    bool is_injective() const {
      return kernel().is_trivial();
    }

    bool is_surjective() const {
      return image().is_whole();
    }

    bool is_bijective() const {
      return _source.size() == _target.size() && is_injective();
    }

    Homomorphism inverse() const {
      if (!is_bijective()) {
        throw InvalidInput("Homomorphism::inverse: map is not bijective");
      }
      std::vector<Element> img(_images.size());
      for (Element x = 0; x < _images.size(); ++x) {
        img[_images[x]] = x;
      }
      return Homomorphism(_target, _source, std::move(img), true);
    }

    friend bool operator==(Homomorphism const& a, Homomorphism const& b) {
      return a._source == b._source && a._target == b._target
             && a._images == b._images;
    }

   private:
    FiniteGroup          _source;
    FiniteGroup          _target;
    std::vector<Element> _images;
  };

  // A subgroup as a group in its own right, with the inclusion map.
  struct SubgroupGroup {
    FiniteGroup  group;
    Homomorphism inclusion;
  };

  inline SubgroupGroup as_group(Subgroup const& H) {
    auto const&          G = H.parent();
    auto const&          m = H.members();
    std::vector<Element> local(G.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      local[m[i]] = static_cast<Element>(i);
    }
    std::vector<std::string> labels;
    std::vector<Element>     table(m.size() * m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      labels.push_back(G.label(m[i]));
      for (std::size_t j = 0; j < m.size(); ++j) {
        table[i * m.size() + j] = local[G.mul(m[i], m[j])];
      }
    }
    FiniteGroup S(std::move(labels), std::move(table), FiniteGroup::Check::trusted);
    return {S, Homomorphism(S, G, m, true)};
  }

  struct Quotient {
    FiniteGroup  group;
    Homomorphism projection;
  };

  // G/N with cosets labelled by their least representative.
  inline Quotient quotient_group(FiniteGroup const& G, Subgroup const& N) {
    if (!is_normal(N)) {
      throw InvalidInput("quotient_group: subgroup is not normal");
    }
    constexpr Element    undefined = ~Element(0);
    std::vector<Element> coset(G.size(), undefined);
    std::vector<Element> reps;
    for (Element x = 0; x < G.size(); ++x) {
      if (coset[x] != undefined) {
        continue;
      }
      auto const c = static_cast<Element>(reps.size());
      reps.push_back(x);
      for (auto n : N.members()) {
        coset[G.mul(x, n)] = c;
      }
    }
    std::size_t const        k = reps.size();
    std::vector<std::string> labels;
    std::vector<Element>     table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      labels.push_back(N.is_trivial() ? G.label(reps[i])
                                      : G.label(reps[i]) + "N");
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j] = coset[G.mul(reps[i], reps[j])];
      }
    }
    FiniteGroup Q(std::move(labels), std::move(table), FiniteGroup::Check::trusted);
    return {Q, Homomorphism(G, Q, std::move(coset), true)};
  }

  // A Sylow p-subgroup by greedy closure over p-elements in index order.
  // Every p-element outside the result generates a non-p-group with it,
  // so the result is a maximal, hence Sylow, p-subgroup. For nilpotent
  // groups uniqueness is checked.
  inline Subgroup sylow_subgroup(FiniteGroup const& G, std::uint64_t p) {
    if (!is_prime(p)) {
      throw InvalidInput("sylow_subgroup: p must be prime");
    }
    std::uint64_t const target = ipow(p, valuation(G.size(), p));
    std::vector<Element> elems{G.identity()};
    std::vector<bool>    in(G.size(), false);
    in[G.identity()] = true;
    std::vector<Element> gens;
    for (Element x = 0; x < G.size() && elems.size() < target; ++x) {
      if (in[x] || ipow(p, valuation(G.order_of(x), p)) != G.order_of(x)) {
        continue;
      }
      auto e2 = elems;
      auto i2 = in;
      auto g2 = gens;
      g2.push_back(x);
      if (!detail::close_under(G, e2, i2, g2, target)) {
        continue;
      }
      if (ipow(p, valuation(e2.size(), p)) != e2.size()) {
        continue;
      }
      elems = std::move(e2);
      in    = std::move(i2);
      gens  = std::move(g2);
    }
    detail::ensure(elems.size() == target, "sylow_subgroup: greedy closure "
                                           "did not reach the Sylow order");
    Subgroup P(G, std::move(elems), true);
    if (is_nilpotent(G)) {
      // the unique Sylow subgroup is the set of all p-elements
      for (Element x = 0; x < G.size(); ++x) {
        bool const p_elt
            = ipow(p, valuation(G.order_of(x), p)) == G.order_of(x);
        detail::ensure(p_elt == P.contains(x),
                       "sylow_subgroup: Sylow subgroup of a nilpotent group "
                       "is not unique");
      }
    }
    return P;
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelian invariants
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Invariant factors of an abelian group from its element orders: the
    // number of elements with x^(p^k) = 1 is p^(sum_i min(e_i, k)).
    inline FgAbelianGroup invariants_from_orders(
        std::vector<std::uint32_t> const& orders) {
      std::size_t const          n = orders.size();
      std::vector<std::uint64_t> cyclic;
      for (auto [p, a] : factorize(n)) {
        std::vector<unsigned> logs{0};
        for (unsigned k = 1; k <= a; ++k) {
          std::uint64_t const pk    = ipow(p, k);
          std::uint64_t       count = 0;
          for (auto o : orders) {
            count += (pk % o == 0);
          }
          unsigned const l = valuation(count, p);
          detail::ensure(ipow(p, l) == count,
                         "abelian_invariants: element count is not a "
                         "prime power");
          logs.push_back(l);
        }
        // at_least[k] = #{i : e_i >= k}
        for (unsigned k = 1; k <= a; ++k) {
          unsigned const ge_k  = logs[k] - logs[k - 1];
          unsigned const ge_k1 = k < a ? logs[k + 1] - logs[k] : 0;
          for (unsigned i = 0; i < ge_k - ge_k1; ++i) {
            cyclic.push_back(ipow(p, k));
          }
        }
      }
      return FgAbelianGroup::from_cyclic_orders(cyclic);
    }
  }  // namespace detail

  inline FgAbelianGroup abelian_invariants(FiniteGroup const& G) {
    if (!G.is_abelian()) {
      throw InvalidInput("abelian_invariants: group is not abelian");
    }
    std::vector<std::uint32_t> orders(G.size());
    for (Element x = 0; x < G.size(); ++x) {
      orders[x] = G.order_of(x);
    }
    return detail::invariants_from_orders(orders);
  }

  inline FgAbelianGroup abelian_invariants(Subgroup const& H) {
    auto const& G = H.parent();
    for (auto a : H.members()) {
      for (auto b : H.members()) {
        if (G.mul(a, b) != G.mul(b, a)) {
          throw InvalidInput("abelian_invariants: subgroup is not abelian");
        }
      }
    }
    std::vector<std::uint32_t> orders;
    for (auto x : H.members()) {
      orders.push_back(G.order_of(x));
    }
    return detail::invariants_from_orders(orders);
  }

  // G / [G, G]
  inline FgAbelianGroup abelianization(FiniteGroup const& G) {
    return abelian_invariants(quotient_group(G, derived_subgroup(G)).group);
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct products
  ////////////////////////////////////////////////////////////////////////

  struct DirectProduct {
    FiniteGroup               group;
    std::vector<Homomorphism> injections;
    std::vector<Homomorphism> projections;

    // Index of the tuple (x_0, ..., x_{k-1}); the last factor varies fastest.
    Element tuple(std::vector<Element> const& xs) const {
      Element idx = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        idx = idx * static_cast<Element>(projections[i].target().size()) + xs[i];
      }
      return idx;
    }
  };

  inline DirectProduct direct_product(std::vector<FiniteGroup> const& factors) {
    std::size_t n = 1;
    for (auto const& f : factors) {
      n *= f.size();
      if (n > max_cayley_order) {
        throw CapExceeded("direct_product: order exceeds the Cayley-table cap");
      }
    }
    std::size_t const k = factors.size();
    // digits[x][i] = component i of element x
    std::vector<std::vector<Element>> digits(n, std::vector<Element>(k));
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t r = x;
      for (std::size_t i = k; i-- > 0;) {
        digits[x][i] = static_cast<Element>(r % factors[i].size());
        r /= factors[i].size();
      }
    }
    auto encode = [&](std::vector<Element> const& d) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < k; ++i) {
        idx = idx * factors[i].size() + d[i];
      }
      return static_cast<Element>(idx);
    };
    std::vector<std::string> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (k == 0) {
        labels[x] = "e";
        continue;
      }
      if (k == 1) {
        labels[x] = factors[0].label(digits[x][0]);
        continue;
      }
      std::string s = "(";
      for (std::size_t i = 0; i < k; ++i) {
        s += (i ? "," : "") + factors[i].label(digits[x][i]);
      }
      labels[x] = s + ")";
    }
    std::vector<Element> table(n * n);
    std::vector<Element> d(k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < k; ++i) {
          d[i] = factors[i].mul(digits[a][i], digits[b][i]);
        }
        table[a * n + b] = encode(d);
      }
    }
    FiniteGroup   P(std::move(labels), std::move(table), FiniteGroup::Check::trusted);
    DirectProduct out{P, {}, {}};
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Element> inj(factors[i].size()), proj(n);
      std::vector<Element> e(k);
      for (std::size_t j = 0; j < k; ++j) {
        e[j] = factors[j].identity();
      }
      for (Element x = 0; x < factors[i].size(); ++x) {
        e[i]   = x;
        inj[x] = encode(e);
      }
      for (std::size_t x = 0; x < n; ++x) {
        proj[x] = digits[x][i];
      }
      out.injections.emplace_back(factors[i], P, std::move(inj), true);
      out.projections.emplace_back(P, factors[i], std::move(proj), true);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  struct IsomorphismResult {
    bool                        isomorphic = false;
    std::optional<Homomorphism> witness;
    std::string                 reason;

    explicit operator bool() const noexcept {
      return isomorphic;
    }
  };

  namespace detail {
    // Element invariants preserved by isomorphisms.
    inline std::vector<std::uint64_t> element_signatures(FiniteGroup const& G) {
      std::size_t const          n = G.size();
      std::vector<std::uint64_t> sig(n);
      std::vector<std::uint32_t> roots(n, 0);
      for (Element x = 0; x < n; ++x) {
        ++roots[G.mul(x, x)];
      }
      for (Element x = 0; x < n; ++x) {
        std::uint64_t c = 0;
        for (Element g = 0; g < n; ++g) {
          c += G.mul(g, x) == G.mul(x, g);
        }
        sig[x] = (std::uint64_t(G.order_of(x)) << 40) ^ (c << 20)
                 ^ std::uint64_t(roots[x]);
      }
      return sig;
    }

    // Greedy generating set: elements of largest order first.
    inline std::vector<Element> small_generating_set(FiniteGroup const& G) {
      std::vector<Element> byorder(G.size());
      std::iota(byorder.begin(), byorder.end(), Element(0));
      std::stable_sort(byorder.begin(), byorder.end(), [&](Element a, Element b) {
        return G.order_of(a) > G.order_of(b);
      });
      std::vector<Element> elems{G.identity()};
      std::vector<bool>    in(G.size(), false);
      in[G.identity()] = true;
      std::vector<Element> gens;
      for (auto x : byorder) {
        if (elems.size() == G.size()) {
          break;
        }
        if (!in[x]) {
          gens.push_back(x);
          close_under(G, elems, in, gens, G.size());
        }
      }
      return gens;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteGroup const& G, FiniteGroup const& H)
          : _G(G),
            _H(H),
            _sg(element_signatures(G)),
            _sh(element_signatures(H)),
            _gens(small_generating_set(G)) {}

      std::optional<Homomorphism> run() {
        std::vector<Element> img(_G.size(), undefined);
        std::vector<Element> pre(_H.size(), undefined);
        img[_G.identity()] = _H.identity();
        pre[_H.identity()] = _G.identity();
        std::vector<Element> dom{_G.identity()};
        if (search(0, img, pre, dom)) {
          return Homomorphism(_G, _H, std::move(_found));
        }
        return std::nullopt;
      }

     private:
      static constexpr Element undefined = ~Element(0);

      bool search(std::size_t           k,
                  std::vector<Element>& img,
                  std::vector<Element>& pre,
                  std::vector<Element>& dom) {
        if (k == _gens.size()) {
          if (dom.size() != _H.size()) {
            return false;
          }
          _found = img;
          return true;
        }
        auto const g = _gens[k];
        for (Element y = 0; y < _H.size(); ++y) {
          if (_sh[y] != _sg[g] || pre[y] != undefined) {
            continue;
          }
          auto img2 = img;
          auto pre2 = pre;
          auto dom2 = dom;
          if (extend(k, y, img2, pre2, dom2) && search(k + 1, img2, pre2, dom2)) {
            return true;
          }
        }
        return false;
      }

      // Extends the partial isomorphism to <gens[0..k]> with gens[k] -> y.
      bool extend(std::size_t           k,
                  Element               y,
                  std::vector<Element>& img,
                  std::vector<Element>& pre,
                  std::vector<Element>& dom) {
        std::vector<Element> gi(k + 1);
        for (std::size_t i = 0; i < k; ++i) {
          gi[i] = img[_gens[i]];
        }
        gi[k] = y;
        for (std::size_t i = 0; i < dom.size(); ++i) {
          auto const x = dom[i];
          for (std::size_t j = 0; j <= k; ++j) {
            auto const xs = _G.mul(x, _gens[j]);
            auto const ys = _H.mul(img[x], gi[j]);
            if (img[xs] == undefined) {
              if (pre[ys] != undefined || _sg[xs] != _sh[ys]) {
                return false;
              }
              img[xs] = ys;
              pre[ys] = xs;
              dom.push_back(xs);
            } else if (img[xs] != ys) {
              return false;
            }
          }
        }
        return true;
      }

      FiniteGroup const&         _G;
      FiniteGroup const&         _H;
      std::vector<std::uint64_t> _sg, _sh;
      std::vector<Element>       _gens;
      std::vector<Element>       _found;
    };
  }  // namespace detail

  inline std::size_t max_nonabelian_iso_order = 512;

  inline IsomorphismResult is_isomorphic(FiniteGroup const& G,
                                         FiniteGroup const& H) {
    IsomorphismResult r;
    if (G.size() != H.size()) {
      r.reason = "orders differ";
      return r;
    }
    if (G.is_abelian() != H.is_abelian()) {
      r.reason = "exactly one group is abelian";
      return r;
    }
    if (G.is_abelian()) {
      if (abelian_invariants(G) != abelian_invariants(H)) {
        r.reason = "invariant factors differ";
        return r;
      }
    } else if (G.size() > max_nonabelian_iso_order) {
      throw CapExceeded("is_isomorphic: nonabelian groups of order "
                        + std::to_string(G.size()) + " exceed the cap "
                        + std::to_string(max_nonabelian_iso_order));
    }
    auto sg = detail::element_signatures(G);
    auto sh = detail::element_signatures(H);
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) {
      r.reason = "element statistics differ";
      return r;
    }
    auto w = detail::IsoSearch(G, H).run();
    if (!w) {
      r.reason = "no generator assignment extends to an isomorphism";
      return r;
    }
    detail::ensure(w->is_bijective(), "is_isomorphic: witness not bijective");
    r.isomorphic = true;
    r.witness    = std::move(w);
    r.reason     = "witness found";
    return r;
  }

}  // namespace vcg
