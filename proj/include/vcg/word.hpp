#pragma once

// Words in named generators, finite presentations and the text grammar
//
//   presentation := generators '|' relators
//   generators   := ident (',' ident)*
//   relators     := word (',' word)*          (may be empty)
//   word         := factor (['*'] factor)*    | '1'
//   factor       := atom ['^' int]
//   atom         := ident | '(' word ')' | '[' word (',' word)+ ']'
//
// [w1, ..., wk] is the left-normed commutator [[w1, w2], ...] with
// [x, y] = x^-1 y^-1 x y.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"

namespace vcg {

  struct Syllable {
    std::string  symbol;
    std::int64_t exponent;

    friend bool operator==(Syllable const& a, Syllable const& b) {
      return a.symbol == b.symbol && a.exponent == b.exponent;
    }
  };

  class Word {
   public:
    Word() = default;

    explicit Word(std::vector<Syllable> syllables)
        : _s(std::move(syllables)) {
      normalize();
    }

    static Word generator(std::string symbol, std::int64_t exponent = 1) {
      return Word({{std::move(symbol), exponent}});
    }

    std::vector<Syllable> const& syllables() const noexcept {
      return _s;
    }

    bool empty() const noexcept {
      return _s.empty();
    }

    // Total number of letters (sum of |exponent|).
    std::size_t length() const noexcept {
      std::size_t n = 0;
      for (auto const& s : _s) {
        n += static_cast<std::size_t>(s.exponent < 0 ? -s.exponent : s.exponent);
      }
      return n;
    }

    Word inverse() const {
      std::vector<Syllable> r(_s.rbegin(), _s.rend());
      for (auto& s : r) {
        s.exponent = -s.exponent;
      }
      return Word(std::move(r));
    }

    Word pow(std::int64_t k) const {
      if (k < 0) {
        return inverse().pow(-k);
      }
      std::vector<Syllable> r;
      for (std::int64_t i = 0; i < k; ++i) {
        r.insert(r.end(), _s.begin(), _s.end());
      }
      return Word(std::move(r));
    }

    friend Word operator*(Word const& a, Word const& b) {
      std::vector<Syllable> r(a._s);
      r.insert(r.end(), b._s.begin(), b._s.end());
      return Word(std::move(r));
    }

    friend bool operator==(Word const& a, Word const& b) {
      return a._s == b._s;
    }

    friend bool operator!=(Word const& a, Word const& b) {
      return !(a == b);
    }

    friend bool operator<(Word const& a, Word const& b) {
      return a.to_string() < b.to_string();
    }

    // Substitutes each symbol by a word.
    Word substitute(std::map<std::string, Word> const& images) const {
      Word out;
      for (auto const& s : _s) {
        auto it = images.find(s.symbol);
        if (it == images.end()) {
          throw InvalidInput("Word::substitute: no image for " + s.symbol);
        }
        out = out * it->second.pow(s.exponent);
      }
      return out;
    }

    std::set<std::string> symbols() const {
      std::set<std::string> out;
      for (auto const& s : _s) {
        out.insert(s.symbol);
      }
      return out;
    }

    // "a^2 b^-1 a", or "1" for the empty word.
    std::string to_string() const {
      if (_s.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t i = 0; i < _s.size(); ++i) {
        if (i) {
          out += ' ';
        }
        out += _s[i].symbol;
        if (_s[i].exponent != 1) {
          out += '^' + std::to_string(_s[i].exponent);
        }
      }
      return out;
    }

   private:
    // Free reduction: merge equal adjacent symbols, drop zero exponents.
    void normalize() {
      std::vector<Syllable> st;
      for (auto& s : _s) {
        if (s.exponent == 0) {
          continue;
        }
        if (!st.empty() && st.back().symbol == s.symbol) {
          st.back().exponent += s.exponent;
          if (st.back().exponent == 0) {
            st.pop_back();
          }
        } else {
          st.push_back(std::move(s));
        }
      }
      _s = std::move(st);
    }

    std::vector<Syllable> _s;
  };

  // x^-1 y^-1 x y
  inline Word commutator(Word const& x, Word const& y) {
    return x.inverse() * y.inverse() * x * y;
  }

  // [w1, ..., wk] left-normed.
  inline Word commutator(std::vector<Word> const& ws) {
    if (ws.size() < 2) {
      throw InvalidInput("commutator: needs at least two entries");
    }
    Word c = commutator(ws[0], ws[1]);
    for (std::size_t i = 2; i < ws.size(); ++i) {
      c = commutator(c, ws[i]);
    }
    return c;
  }

  class Presentation {
   public:
    Presentation() = default;

    Presentation(std::vector<std::string> generators, std::vector<Word> relators)
        : _gens(std::move(generators)), _rels(std::move(relators)) {
      std::set<std::string> g(_gens.begin(), _gens.end());
      if (g.size() != _gens.size()) {
        throw InvalidInput("Presentation: duplicate generator symbol");
      }
      for (auto const& r : _rels) {
        for (auto const& s : r.syllables()) {
          if (!g.count(s.symbol)) {
            throw InvalidInput("Presentation: relator uses undeclared "
                               "generator "
                               + s.symbol);
          }
        }
      }
    }

    std::vector<std::string> const& generators() const noexcept {
      return _gens;
    }

    std::vector<Word> const& relators() const noexcept {
      return _rels;
    }

    std::size_t generator_index(std::string const& s) const {
      for (std::size_t i = 0; i < _gens.size(); ++i) {
        if (_gens[i] == s) {
          return i;
        }
      }
      throw InvalidInput("Presentation: unknown generator " + s);
    }

    Presentation with_relators(std::vector<Word> const& extra) const {
      auto rels = _rels;
      rels.insert(rels.end(), extra.begin(), extra.end());
      return Presentation(_gens, std::move(rels));
    }

    std::string to_string() const {
      std::string out;
      for (std::size_t i = 0; i < _gens.size(); ++i) {
        out += (i ? "," : "") + _gens[i];
      }
      out += " |";
      for (std::size_t i = 0; i < _rels.size(); ++i) {
        out += (i ? ", " : " ") + _rels[i].to_string();
      }
      return out;
    }

   private:
    std::vector<std::string> _gens;
    std::vector<Word>        _rels;
  };

  namespace detail {
    class WordParser {
     public:
      WordParser(std::string const& text, std::set<std::string> const* known)
          : _t(text), _known(known) {}

      Word word() {
        skip();
        if (peek() == '1' && !is_ident_char(peek(1))) {
          ++_i;
          return Word();
        }
        Word w = factor();
        while (true) {
          skip();
          if (peek() == '*') {
            ++_i;
            w = w * factor();
          } else if (is_ident_start(peek()) || peek() == '(' || peek() == '[') {
            w = w * factor();
          } else {
            return w;
          }
        }
      }

      std::string ident() {
        skip();
        if (!is_ident_start(peek())) {
          fail("expected a generator name");
        }
        std::size_t const start = _i;
        while (is_ident_char(peek())) {
          ++_i;
        }
        return _t.substr(start, _i - start);
      }

      void expect(char c) {
        skip();
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_i;
      }

      char peek(std::size_t ahead = 0) const {
        return _i + ahead < _t.size() ? _t[_i + ahead] : '\0';
      }

      void skip() {
        while (_i < _t.size() && std::isspace(static_cast<unsigned char>(_t[_i]))) {
          ++_i;
        }
      }

      bool at_end() {
        skip();
        return _i >= _t.size();
      }

      std::size_t& pos() {
        return _i;
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw InvalidInput("presentation syntax error at position "
                           + std::to_string(_i) + ": " + what + " in \"" + _t
                           + "\"");
      }

     private:
      static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
      }

      static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      }

      Word factor() {
        Word a = atom();
        skip();
        if (peek() == '^') {
          ++_i;
          a = a.pow(integer());
        }
        return a;
      }

      std::int64_t integer() {
        skip();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
          neg = peek() == '-';
          ++_i;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected an integer exponent");
        }
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          v = v * 10 + (peek() - '0');
          if (v > (std::int64_t(1) << 40)) {
            fail("exponent too large");
          }
          ++_i;
        }
        return neg ? -v : v;
      }

      Word atom() {
        skip();
        if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
          ++_i;
          return Word();
        }
        if (peek() == '(') {
          ++_i;
          Word w = word();
          expect(')');
          return w;
        }
        if (peek() == '[') {
          ++_i;
          std::vector<Word> parts{word()};
          skip();
          while (peek() == ',') {
            ++_i;
            parts.push_back(word());
            skip();
          }
          if (peek() != ']') {
            fail("expected ']' closing a commutator");
          }
          ++_i;
          if (parts.size() < 2) {
            fail("commutator needs at least two entries");
          }
          return commutator(parts);
        }
        auto const s = ident();
        if (_known && !_known->count(s)) {
          throw InvalidInput("unknown generator '" + s + "' in \"" + _t + "\"");
        }
        return Word::generator(s);
      }

      std::string                  _t;
      std::set<std::string> const* _known;
      std::size_t                  _i = 0;
    };
  }  // namespace detail

  // Parses a single word; symbols are unchecked unless `known` is given.
  inline Word parse_word(std::string const&           text,
                         std::set<std::string> const* known = nullptr) {
    detail::WordParser p(text, known);
    Word               w = p.word();
    if (!p.at_end()) {
      p.fail("trailing characters");
    }
    return w;
  }

  inline Presentation parse_presentation(std::string const& text) {
    auto const bar = text.find('|');
    if (bar == std::string::npos) {
      throw InvalidInput("presentation syntax error: missing '|' in \"" + text
                         + "\"");
    }
    std::vector<std::string> gens;
    {
      detail::WordParser p(text.substr(0, bar), nullptr);
      if (!p.at_end()) {
        gens.push_back(p.ident());
        while (!p.at_end()) {
          p.expect(',');
          gens.push_back(p.ident());
        }
      }
    }
    std::set<std::string> known(gens.begin(), gens.end());
    if (known.size() != gens.size()) {
      throw InvalidInput("presentation: duplicate generator in \"" + text + "\"");
    }
    std::vector<Word> rels;
    detail::WordParser p(text.substr(bar + 1), &known);
    if (!p.at_end()) {
      rels.push_back(p.word());
      while (!p.at_end()) {
        p.expect(',');
        rels.push_back(p.word());
      }
    }
    return Presentation(std::move(gens), std::move(rels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  inline Element evaluate_word(Word const&                           w,
                               std::map<std::string, Element> const& assignment,
                               FiniteGroup const&                    G) {
    Element r = G.identity();
    for (auto const& s : w.syllables()) {
      auto it = assignment.find(s.symbol);
      if (it == assignment.end()) {
        throw InvalidInput("evaluate_word: unassigned symbol " + s.symbol);
      }
      r = G.mul(r, G.power(it->second, s.exponent));
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard presentation
  ////////////////////////////////////////////////////////////////////////

  // Generator symbol of element x in the standard presentation.
  inline std::string standard_symbol(Element x) {
    return "x" + std::to_string(x);
  }

  struct StandardPresentation {
    Presentation presentation;
    // relator(x, y) = xbar ybar (xy)bar^-1, stored at index x * n + y
    std::size_t order = 1;

    Word const& relator(Element x, Element y) const {
      return presentation.relators().at(std::size_t(x) * order + y);
    }
  };

  // One generator per element (identity included), |G|^2 relators
  // r_{x,y} = xbar ybar (xy)bar^-1. Relators are kept unreduced in
  // count: r_{e,e} reduces to ebar but is still listed.
  inline StandardPresentation standard_presentation(FiniteGroup const& G) {
    std::size_t const        n = G.size();
    std::vector<std::string> gens;
    for (Element x = 0; x < n; ++x) {
      gens.push_back(standard_symbol(x));
    }
    std::vector<Word> rels;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        rels.push_back(Word({{gens[x], 1}, {gens[y], 1}, {gens[G.mul(x, y)], -1}}));
      }
    }
    return {Presentation(std::move(gens), std::move(rels)), n};
  }

}  // namespace vcg
