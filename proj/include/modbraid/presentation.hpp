#ifndef MODBRAID_PRESENTATION_HPP_
#define MODBRAID_PRESENTATION_HPP_

// Finite presentations <S | R>: a small text format, relator normalization,
// builders for the presentations of S_n, B_n, G_n and Z_n used here, and the
// generic presentation of an extension 1 -> K -> G -> Q -> 1 assembled from
// presentations of K and Q.
//
// Text format:
//
//   # comment
//   gens: a, b;
//   rels: a^2, b^2, (a b)^3, [a, b^-1], a b = b a
//
// A word is a sequence of factors, each a generator, a parenthesized word or a
// commutator [x, y] = x y x^-1 y^-1, optionally raised to an integer power.
// "1" is the empty word. A relation x = y is stored as the relator x y^-1.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ext_group.hpp"
#include "figures.hpp"
#include "pair_vector.hpp"
#include "perm.hpp"
#include "relations.hpp"

namespace modbraid {

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  // Letters are +(g + 1) for generator g and -(g + 1) for its inverse.
  using Word = std::vector<int>;

  inline int gen_letter(int g, bool inverse = false) {
    return inverse ? -(g + 1) : g + 1;
  }

  inline int letter_gen(int x) {
    return (x < 0 ? -x : x) - 1;
  }

  inline Word inverse(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& x : out) {
      x = -x;
    }
    return out;
  }

  inline Word operator*(Word u, Word const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  inline Word power(Word const& w, std::int64_t k) {
    Word const base = k < 0 ? inverse(w) : w;
    Word       out;
    for (std::int64_t m = k < 0 ? -k : k; m > 0; --m) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return out;
  }

  inline Word commutator(Word const& u, Word const& v) {
    return u * v * inverse(u) * inverse(v);
  }

  inline Word free_reduce(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  inline Word cyclic_reduce(Word const& w) {
    Word   r = free_reduce(w);
    size_t a = 0, b = r.size();
    while (b - a >= 2 && r[a] == -r[b - 1]) {
      ++a;
      --b;
    }
    return Word(r.begin() + static_cast<std::ptrdiff_t>(a),
                r.begin() + static_cast<std::ptrdiff_t>(b));
  }

  // Representative of w up to free reduction, cyclic rotation and inversion:
  // the least rotation of the cyclic reduction of w or of its inverse.
  inline Word canonical_relator(Word const& w) {
    Word const r = cyclic_reduce(w);
    if (r.empty()) {
      return r;
    }
    Word best = r;
    for (Word const& c : {r, inverse(r)}) {
      for (size_t k = 0; k < c.size(); ++k) {
        Word rot(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
        rot.insert(rot.end(), c.begin(),
                   c.begin() + static_cast<std::ptrdiff_t>(k));
        best = std::min(best, rot);
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline bool is_identifier(std::string_view s) {
      if (s.empty()
          || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }
  }  // namespace detail

  class Presentation {
   public:
    Presentation() = default;

    explicit Presentation(std::vector<std::string> generators) {
      for (auto& g : generators) {
        add_generator(std::move(g));
      }
    }

    int add_generator(std::string name) {
      if (!detail::is_identifier(name)) {
        throw InvalidArgument("invalid generator name '" + name + "'");
      }
      if (_index.contains(name)) {
        throw InvalidArgument("duplicate generator '" + name + "'");
      }
      int const g = static_cast<int>(_gens.size());
      _index.emplace(name, g);
      _gens.push_back(std::move(name));
      return g;
    }

    // Stored freely reduced.
    void add_relator(Word const& w) {
      for (int x : w) {
        if (x == 0 || letter_gen(x) >= generator_count()) {
          throw InvalidArgument("relator letter " + std::to_string(x)
                                + " does not name a generator");
        }
      }
      _rels.push_back(free_reduce(w));
    }

    void add_relation(Word const& lhs, Word const& rhs) {
      add_relator(lhs * inverse(rhs));
    }

    int generator_count() const noexcept {
      return static_cast<int>(_gens.size());
    }

    std::vector<std::string> const& generators() const noexcept {
      return _gens;
    }

    std::vector<Word> const& relators() const noexcept {
      return _rels;
    }

    std::string const& name(int g) const {
      return _gens.at(static_cast<size_t>(g));
    }

    bool has_generator(std::string const& name) const {
      return _index.contains(name);
    }

    int index(std::string const& name) const {
      auto it = _index.find(name);
      if (it == _index.end()) {
        throw InvalidArgument("unknown generator '" + name + "'");
      }
      return it->second;
    }

    // The word of a single generator.
    Word gen(std::string const& name, std::int64_t e = 1) const {
      return power(Word{gen_letter(index(name))}, e);
    }

    // "a^2 b^-1", "1" for the empty word.
    std::string format_word(Word const& w) const {
      if (w.empty()) {
        return "1";
      }
      std::string s;
      for (size_t k = 0; k < w.size();) {
        size_t m = k;
        while (m < w.size() && w[m] == w[k]) {
          ++m;
        }
        auto const e = static_cast<std::int64_t>(m - k) * (w[k] < 0 ? -1 : 1);
        s += (s.empty() ? "" : " ") + name(letter_gen(w[k]));
        if (e != 1) {
          s += "^" + std::to_string(e);
        }
        k = m;
      }
      return s;
    }

   private:
    std::vector<std::string>   _gens;
    std::map<std::string, int> _index;
    std::vector<Word>          _rels;
  };

  inline std::string format(Presentation const& p) {
    std::string s = "gens:";
    for (int g = 0; g < p.generator_count(); ++g) {
      s += (g == 0 ? " " : ", ") + p.name(g);
    }
    s += ";\nrels:";
    auto const& rels = p.relators();
    if (rels.size() == 1) {
      s += " " + p.format_word(rels[0]);
    } else {
      for (size_t k = 0; k < rels.size(); ++k) {
        s += "\n  " + p.format_word(rels[k]) + (k + 1 < rels.size() ? "," : "");
      }
    }
    return s + "\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    class PresentationParser {
     public:
      explicit PresentationParser(std::string_view text) : _s(text) {}

      Presentation parse() {
        Presentation p;
        bool         seen_gens = false, seen_rels = false;
        skip();
        while (!at_end()) {
          auto const [l, c] = position();
          auto const key    = identifier("'gens' or 'rels'");
          expect(':');
          if (key == "gens") {
            if (seen_gens || seen_rels) {
              throw ParseError("'gens' must come once, before 'rels'", l, c);
            }
            seen_gens = true;
            generators(p);
          } else if (key == "rels") {
            if (seen_rels) {
              throw ParseError("duplicate 'rels' section", l, c);
            }
            seen_rels = true;
            relators(p);
          } else {
            throw ParseError("expected 'gens' or 'rels', got '" + key + "'",
                             l, c);
          }
          if (peek() == ';') {
            ++_pos;
            skip();
          } else if (!at_end()) {
            fail("expected ';'");
          }
        }
        return p;
      }

     private:
      std::string_view _s;
      size_t           _pos = 0;

      bool at_end() const {
        return _pos >= _s.size();
      }

      char peek() const {
        return at_end() ? '\0' : _s[_pos];
      }

      std::pair<size_t, size_t> position() const {
        size_t line = 1, col = 1;
        for (size_t k = 0; k < _pos && k < _s.size(); ++k) {
          if (_s[k] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
        }
        return {line, col};
      }

      [[noreturn]] void fail(std::string const& msg) const {
        auto const [l, c] = position();
        throw ParseError(msg, l, c);
      }

      void skip() {
        while (!at_end()) {
          char const c = _s[_pos];
          if (c == '#') {
            while (!at_end() && _s[_pos] != '\n') {
              ++_pos;
            }
          } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++_pos;
          } else {
            break;
          }
        }
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
        skip();
      }

      std::string identifier(char const* what) {
        size_t const start = _pos;
        if (!at_end()
            && (std::isalpha(static_cast<unsigned char>(_s[_pos]))
                || _s[_pos] == '_')) {
          while (!at_end()
                 && (std::isalnum(static_cast<unsigned char>(_s[_pos]))
                     || _s[_pos] == '_')) {
            ++_pos;
          }
        }
        if (start == _pos) {
          fail(std::string("expected ") + what);
        }
        std::string out(_s.substr(start, _pos - start));
        skip();
        return out;
      }

      std::int64_t integer() {
        size_t const start = _pos;
        bool const   neg   = peek() == '-';
        if (neg) {
          ++_pos;
        }
        size_t const digits = _pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(_s[_pos]))) {
          ++_pos;
        }
        if (digits == _pos) {
          _pos = start;
          fail("expected an integer exponent");
        }
        auto const str = _s.substr(digits, _pos - digits);
        if (str.size() > 9) {
          _pos = start;
          fail("exponent too large");
        }
        std::int64_t v = std::stoll(std::string(str));
        skip();
        return neg ? -v : v;
      }

      void generators(Presentation& p) {
        if (peek() == ';' || at_end()) {
          return;
        }
        while (true) {
          auto const [l, c] = position();
          auto name         = identifier("a generator name");
          if (p.has_generator(name)) {
            throw ParseError("duplicate generator '" + name + "'", l, c);
          }
          p.add_generator(std::move(name));
          if (peek() != ',') {
            return;
          }
          ++_pos;
          skip();
        }
      }

      void relators(Presentation& p) {
        if (peek() == ';' || at_end()) {
          return;
        }
        while (true) {
          Word lhs = word(p);
          if (peek() == '=') {
            ++_pos;
            skip();
            p.add_relation(lhs, word(p));
          } else {
            p.add_relator(lhs);
          }
          if (peek() != ',') {
            return;
          }
          ++_pos;
          skip();
        }
      }

      static bool starts_factor(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_'
               || c == '(' || c == '[' || c == '1';
      }

      Word word(Presentation const& p) {
        if (!starts_factor(peek())) {
          fail("expected a word");
        }
        Word w;
        while (starts_factor(peek())) {
          w = w * factor(p);
        }
        return w;
      }

      Word factor(Presentation const& p) {
        Word base;
        char const c = peek();
        if (c == '(') {
          ++_pos;
          skip();
          base = word(p);
          expect(')');
        } else if (c == '[') {
          ++_pos;
          skip();
          Word x = word(p);
          expect(',');
          Word y = word(p);
          expect(']');
          base = commutator(x, y);
        } else if (c == '1') {
          ++_pos;
          if (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
            fail("unexpected character after '1'");
          }
          skip();
        } else {
          auto const [l, col] = position();
          auto const name     = identifier("a generator");
          if (!p.has_generator(name)) {
            throw ParseError("undeclared generator '" + name + "'", l, col);
          }
          base = Word{gen_letter(p.index(name))};
        }
        if (peek() == '^') {
          ++_pos;
          skip();
          base = power(base, integer());
        }
        return base;
      }
    };

  }  // namespace detail

  inline Presentation parse_presentation(std::string_view text) {
    return detail::PresentationParser(text).parse();
  }

  ////////////////////////////////////////////////////////////////////////
  // Comparison
  ////////////////////////////////////////////////////////////////////////

  // Relators of b rewritten over the generators of a, matched by name.
  inline std::vector<Word> relators_over(Presentation const& a,
                                         Presentation const& b) {
    std::vector<int> to_a(static_cast<size_t>(b.generator_count()));
    for (int g = 0; g < b.generator_count(); ++g) {
      if (!a.has_generator(b.name(g))) {
        throw InvalidArgument("generator '" + b.name(g)
                              + "' is missing from the other presentation");
      }
      to_a[static_cast<size_t>(g)] = a.index(b.name(g));
    }
    std::vector<Word> out;
    for (auto const& w : b.relators()) {
      Word r;
      for (int x : w) {
        r.push_back(gen_letter(to_a[static_cast<size_t>(letter_gen(x))], x < 0));
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  // Set of canonical relators, the empty relator dropped.
  inline std::set<Word> canonical_relators(std::vector<Word> const& rels) {
    std::set<Word> out;
    for (auto const& w : rels) {
      auto c = canonical_relator(w);
      if (!c.empty()) {
        out.insert(std::move(c));
      }
    }
    return out;
  }

  struct RelatorDiff {
    std::vector<std::string> only_left;
    std::vector<std::string> only_right;

    bool empty() const {
      return only_left.empty() && only_right.empty();
    }
  };

  // Compares relator sets up to free reduction, rotation and inversion. The
  // generator sets must agree by name; their order may differ.
  inline RelatorDiff relator_difference(Presentation const& a,
                                        Presentation const& b) {
    if (a.generator_count() != b.generator_count()) {
      throw InvalidArgument("presentations have different generator counts");
    }
    auto const ra = canonical_relators(a.relators());
    auto const rb = canonical_relators(relators_over(a, b));
    RelatorDiff d;
    for (auto const& w : ra) {
      if (!rb.contains(w)) {
        d.only_left.push_back(a.format_word(w));
      }
    }
    for (auto const& w : rb) {
      if (!ra.contains(w)) {
        d.only_right.push_back(a.format_word(w));
      }
    }
    return d;
  }

  inline bool same_relators(Presentation const& a, Presentation const& b) {
    return relator_difference(a, b).empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // Builders
  ////////////////////////////////////////////////////////////////////////

  // "s1_2", "g1_2"
  inline std::string pair_name(char prefix, UPair x) {
    return prefix + std::to_string(x.lo()) + "_" + std::to_string(x.hi());
  }

  // Symmetric group on adjacent transpositions s1..s(n-1).
  inline Presentation symmetric_adjacent_presentation(int n) {
    if (n < 1) {
      throw InvalidArgument("degree must be positive");
    }
    Presentation p;
    for (int i = 1; i < n; ++i) {
      p.add_generator("s" + std::to_string(i));
    }
    auto s = [&](int i) { return p.gen("s" + std::to_string(i)); };
    for (int i = 1; i < n; ++i) {
      p.add_relator(power(s(i), 2));
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        p.add_relator(commutator(s(i), s(j)));
      }
    }
    for (int i = 1; i + 1 < n; ++i) {
      p.add_relation(s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1));
    }
    return p;
  }

  // Symmetric group on all transpositions s{i}_{j}. The conjugation relation
  // s(i,j) s(j,k) s(i,j)^-1 = s(i,k) is written with s(i,j) and s(i,j)^-1
  // swapped when (i,j,k) is not in cyclic order, matching the band
  // presentation of B_n; in S_n the two forms are equivalent.
  inline Presentation symmetric_transposition_presentation(int n) {
    if (n < 1) {
      throw InvalidArgument("degree must be positive");
    }
    Presentation p;
    auto const   pairs = all_pairs(n);
    for (auto const& x : pairs) {
      p.add_generator(pair_name('s', x));
    }
    auto s = [&](int i, int j, std::int64_t e = 1) {
      return p.gen(pair_name('s', UPair(i, j)), e);
    };
    for (auto const& x : pairs) {
      p.add_relator(s(x.lo(), x.hi(), 2));
    }
    for (auto const& x : pairs) {
      for (auto const& y : pairs) {
        if (!x.contains(y.lo()) && !x.contains(y.hi())) {
          p.add_relator(commutator(s(x.lo(), x.hi()), s(y.lo(), y.hi())));
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k) {
            continue;
          }
          std::int64_t const e = detail::cyclic_order(i, j, k) ? 1 : -1;
          p.add_relation(s(i, j, e) * s(j, k) * s(i, j, -e), s(i, k));
        }
      }
    }
    return p;
  }

  // Artin generators b1..b(n-1).
  inline Presentation braid_artin_presentation(int n) {
    if (n < 1) {
      throw InvalidArgument("degree must be positive");
    }
    Presentation p;
    for (int i = 1; i < n; ++i) {
      p.add_generator("b" + std::to_string(i));
    }
    auto b = [&](int i) { return p.gen("b" + std::to_string(i)); };
    for (int i = 1; i + 1 < n; ++i) {
      p.add_relation(b(i) * b(i + 1) * b(i), b(i + 1) * b(i) * b(i + 1));
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        p.add_relator(commutator(b(i), b(j)));
      }
    }
    return p;
  }

  // Band generators b{i}_{j}.
  inline Presentation braid_band_presentation(int n) {
    if (n < 1) {
      throw InvalidArgument("degree must be positive");
    }
    Presentation p;
    auto const   pairs = all_pairs(n);
    for (auto const& x : pairs) {
      p.add_generator(pair_name('b', x));
    }
    auto b = [&](int i, int j, std::int64_t e = 1) {
      return p.gen(pair_name('b', UPair(i, j)), e);
    };
    for (size_t a = 0; a < pairs.size(); ++a) {
      for (size_t c = a + 1; c < pairs.size(); ++c) {
        int const i = pairs[a].lo(), j = pairs[a].hi();
        int const k = pairs[c].lo(), l = pairs[c].hi();
        if ((j - k) * (j - l) * (i - k) * (i - l) > 0) {
          p.add_relator(commutator(b(i, j), b(k, l)));
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k) {
            continue;
          }
          std::int64_t const e = detail::cyclic_order(i, j, k) ? 1 : -1;
          p.add_relation(b(i, j, e) * b(j, k) * b(i, j, -e), b(i, k));
        }
      }
    }
    return p;
  }

  // The kernel Z^(n choose 2), or Z_2^(n choose 2) with ring Z2, on g{i}_{j}.
  inline Presentation kernel_presentation(int n, Ring ring) {
    if (n < 1) {
      throw InvalidArgument("degree must be positive");
    }
    Presentation p;
    auto const   pairs = all_pairs(n);
    for (auto const& x : pairs) {
      p.add_generator(pair_name('g', x));
    }
    if (ring == Ring::Z2) {
      for (auto const& x : pairs) {
        p.add_relator(p.gen(pair_name('g', x), 2));
      }
    }
    for (size_t a = 0; a < pairs.size(); ++a) {
      for (size_t b = a + 1; b < pairs.size(); ++b) {
        p.add_relator(commutator(p.gen(pair_name('g', pairs[a])),
                                 p.gen(pair_name('g', pairs[b]))));
      }
    }
    return p;
  }

  // One generator per kernel generator g{i}_{j}, then one per half twist
  // s{i}_{j}; one relator per row instance of the table.
  inline Presentation table_presentation(RelationTable table,
                                         int           n,
                                         std::int64_t  t = 1) {
    auto const   instances = relation_instances(table, n, t);
    Presentation p;
    auto const   pairs = all_pairs(n);
    for (auto const& x : pairs) {
      p.add_generator(pair_name('g', x));
    }
    for (auto const& x : pairs) {
      p.add_generator(pair_name('s', x));
    }
    auto convert = [&](SymWord const& w) {
      Word out;
      for (auto const& x : w) {
        char const c = x.kind == SymLetter::Kind::G ? 'g' : 's';
        out = out * p.gen(pair_name(c, x.pair), x.exponent);
      }
      return out;
    };
    for (auto const& r : instances) {
      p.add_relation(convert(r.lhs), convert(r.rhs));
    }
    return p;
  }

  // Z_n on Artin generators: b_i^4, [b_i^2, b_{i+1}^2],
  // [b_{i,i+2}^2, b_{i+1,i+3}^2] for i <= n - 4, and the braid relations.
  inline Presentation z_artin_presentation(int n) {
    Presentation p = braid_artin_presentation(n);
    Presentation out;
    for (auto const& g : p.generators()) {
      out.add_generator(g);
    }
    auto b = [&](int i, std::int64_t e = 1) {
      return out.gen("b" + std::to_string(i), e);
    };
    // b_{i,j} = b_i ... b_{j-2} b_{j-1} b_{j-2}^-1 ... b_i^-1
    auto band = [&](int i, int j) {
      Word c;
      for (int k = i; k <= j - 2; ++k) {
        c = c * b(k);
      }
      return c * b(j - 1) * inverse(c);
    };
    for (int i = 1; i < n; ++i) {
      out.add_relator(b(i, 4));
    }
    for (int i = 1; i + 1 < n; ++i) {
      out.add_relator(commutator(b(i, 2), b(i + 1, 2)));
    }
    for (int i = 1; i <= n - 4; ++i) {
      out.add_relator(
          commutator(power(band(i, i + 2), 2), power(band(i + 1, i + 3), 2)));
    }
    for (auto const& r : p.relators()) {
      out.add_relator(r);
    }
    return out;
  }

  inline std::vector<std::string> builtin_presentation_names() {
    return {"sym-adjacent", "sym-transpositions", "braid-artin", "braid-band",
            "kernel",       "kernel-mod2",        "table-G",     "table-Gt",
            "table-Z",      "z-artin"};
  }

  // t is used by table-Gt only.
  inline Presentation builtin_presentation(std::string_view name,
                                           int              n,
                                           std::int64_t     t = 1) {
    if (name == "sym-adjacent") {
      return symmetric_adjacent_presentation(n);
    }
    if (name == "sym-transpositions") {
      return symmetric_transposition_presentation(n);
    }
    if (name == "braid-artin") {
      return braid_artin_presentation(n);
    }
    if (name == "braid-band") {
      return braid_band_presentation(n);
    }
    if (name == "kernel") {
      return kernel_presentation(n, Ring::Z);
    }
    if (name == "kernel-mod2") {
      return kernel_presentation(n, Ring::Z2);
    }
    if (name == "table-G") {
      return table_presentation(RelationTable::G, n);
    }
    if (name == "table-Gt") {
      return table_presentation(RelationTable::Gt, n, t);
    }
    if (name == "table-Z") {
      return table_presentation(RelationTable::Z, n);
    }
    if (name == "z-artin") {
      return z_artin_presentation(n);
    }
    throw InvalidArgument("unknown presentation '" + std::string(name) + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // Extension presentations
  ////////////////////////////////////////////////////////////////////////

  // Data for a presentation of an extension 1 -> K -> G -> Q -> 1. Words
  // called K-words are over the generators of the K presentation.
  struct ExtensionData {
    // Name of the chosen lift in G of each Q generator.
    std::map<std::string, std::string> lift;
    // (q, k, +1) -> K-word of s k s^-1 and (q, k, -1) -> K-word of s^-1 k s,
    // where s is the lift of q.
    std::map<std::tuple<std::string, std::string, int>, Word> conj;
    // K-word of each Q relator evaluated on the lifts, one per Q relator.
    std::vector<Word> lifted_values;
  };

  // Generators: those of K, then the lifts of those of Q. Relators: those of
  // K; each Q relator on the lifts times the inverse of its K value; and
  // s k s^-1 x^-1, s^-1 k s y^-1 for every lift s and K generator k.
  inline Presentation build_extension_presentation(Presentation const&  K,
                                                   Presentation const&  Q,
                                                   ExtensionData const& data) {
    Presentation out;
    for (auto const& g : K.generators()) {
      out.add_generator(g);
    }
    int const nk = K.generator_count();
    for (auto const& q : Q.generators()) {
      auto it = data.lift.find(q);
      if (it == data.lift.end()) {
        throw InvalidArgument("no lift given for generator '" + q + "'");
      }
      out.add_generator(it->second);
    }
    if (data.lifted_values.size() != Q.relators().size()) {
      throw InvalidArgument("expected a lifted value for each of the "
                            + std::to_string(Q.relators().size())
                            + " relators, got "
                            + std::to_string(data.lifted_values.size()));
    }
    auto check_k_word = [&](Word const& w) {
      for (int x : w) {
        if (x == 0 || letter_gen(x) >= nk) {
          throw InvalidArgument("K-word letter " + std::to_string(x)
                                + " does not name a generator of K");
        }
      }
    };
    auto lift_word = [&](Word const& w) {
      Word out_w;
      for (int x : w) {
        out_w.push_back(gen_letter(nk + letter_gen(x), x < 0));
      }
      return out_w;
    };

    for (auto const& r : K.relators()) {
      out.add_relator(r);
    }
    for (size_t k = 0; k < Q.relators().size(); ++k) {
      check_k_word(data.lifted_values[k]);
      out.add_relator(lift_word(Q.relators()[k])
                      * inverse(data.lifted_values[k]));
    }
    for (int q = 0; q < Q.generator_count(); ++q) {
      Word const s{gen_letter(nk + q)};
      for (int g = 0; g < nk; ++g) {
        Word const k{gen_letter(g)};
        for (int sign : {1, -1}) {
          auto it = data.conj.find({Q.name(q), K.name(g), sign});
          if (it == data.conj.end()) {
            throw InvalidArgument("no conjugation value for (" + Q.name(q)
                                  + ", " + K.name(g) + ", "
                                  + std::to_string(sign) + ")");
          }
          check_k_word(it->second);
          Word const a = sign > 0 ? s : inverse(s);
          out.add_relator(a * k * inverse(a) * inverse(it->second));
        }
      }
    }
    return out;
  }

  namespace detail {
    // "s1_2" -> {1,2} for the given prefix.
    inline UPair pair_of_name(std::string const& name, char prefix) {
      auto const us = name.find('_');
      if (name.size() < 4 || name[0] != prefix || us == std::string::npos) {
        throw InvalidArgument("generator '" + name + "' is not of the form "
                              + prefix + "i_j");
      }
      return UPair(std::stoi(name.substr(1, us - 1)),
                   std::stoi(name.substr(us + 1)));
    }
  }  // namespace detail

  // Extension data computed in the model ExtGroup G. K must be on generators
  // g{i}_{j}, Q on s{i}_{j}; each s{i}_{j} lifts to G.sigma(i,j). Kernel
  // elements are written as products of g{i}_{j}^c in pair order.
  inline ExtensionData extension_data(ExtGroup const&     G,
                                      Presentation const& K,
                                      Presentation const& Q) {
    int const n = G.degree();
    auto kernel_word = [&](ExtElement const& e) {
      if (!e.perm.is_identity()) {
        throw InvalidArgument("element " + e.to_string()
                              + " is not in the kernel");
      }
      Word w;
      for (auto const& x : all_pairs(n)) {
        auto const c = e.vec[x];
        if (c != 0) {
          w = w * K.gen(pair_name('g', x), c);
        }
      }
      return w;
    };
    std::vector<ExtElement> s, g;
    for (auto const& q : Q.generators()) {
      auto const x = detail::pair_of_name(q, 's');
      s.push_back(G.sigma(x.lo(), x.hi()));
    }
    for (auto const& k : K.generators()) {
      auto const x = detail::pair_of_name(k, 'g');
      g.push_back(G.g(x.lo(), x.hi()));
    }

    ExtensionData d;
    for (auto const& q : Q.generators()) {
      d.lift[q] = q;
    }
    for (auto const& r : Q.relators()) {
      auto v = G.identity();
      for (int x : r) {
        auto const& y = s[static_cast<size_t>(letter_gen(x))];
        v             = G.mul(v, x < 0 ? G.inv(y) : y);
      }
      d.lifted_values.push_back(kernel_word(v));
    }
    for (size_t q = 0; q < s.size(); ++q) {
      for (size_t k = 0; k < g.size(); ++k) {
        auto const& a = s[q];
        auto const  ai = G.inv(a);
        d.conj[{Q.name(static_cast<int>(q)), K.name(static_cast<int>(k)), 1}] =
            kernel_word(G.mul(G.mul(a, g[k]), ai));
        d.conj[{Q.name(static_cast<int>(q)), K.name(static_cast<int>(k)),
                -1}] = kernel_word(G.mul(G.mul(ai, g[k]), a));
      }
    }
    return d;
  }

}  // namespace modbraid

#endif  // MODBRAID_PRESENTATION_HPP_
