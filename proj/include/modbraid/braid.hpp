#ifndef MODBRAID_BRAID_HPP_
#define MODBRAID_BRAID_HPP_

// Braid words over Artin generators b_i and band generators b_{i,j}.
//
// Band letters stay symbolic inside a word; every semantic evaluation
// (permutation, crossings, Burau matrices) runs on the Artin expansion
//   b_{i,j} = b_i ... b_{j-2} b_{j-1} b_{j-2}^-1 ... b_i^-1.

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "perm.hpp"

namespace modbraid {

  struct BraidLetter {
    enum class Kind : std::uint8_t { Artin, Band };

    Kind kind;
    int  i;  // Artin index, or the smaller point of a band
    int  j;  // i + 1 for Artin letters
    int  exponent;

    static BraidLetter artin(int i, int exponent = 1) {
      check_exponent(exponent);
      return {Kind::Artin, i, i + 1, exponent};
    }

    static BraidLetter band(UPair x, int exponent = 1) {
      check_exponent(exponent);
      return {Kind::Band, x.lo(), x.hi(), exponent};
    }

    UPair pair() const {
      return UPair(i, j);
    }

    BraidLetter inverse() const {
      return {kind, i, j, -exponent};
    }

    bool operator==(BraidLetter const&) const = default;

    std::string to_string() const {
      std::string s = kind == Kind::Artin
                          ? "b" + std::to_string(i)
                          : "B(" + std::to_string(i) + "," + std::to_string(j)
                                + ")";
      return exponent == 1 ? s : s + "^-1";
    }

   private:
    static void check_exponent(int e) {
      if (e != 1 && e != -1) {
        throw InvalidArgument("braid letter exponent must be +1 or -1");
      }
    }
  };

  class BraidWord {
   public:
    explicit BraidWord(int n) : _n(n) {
      Permutation::check_degree(n);
    }

    BraidWord(int n, std::vector<BraidLetter> letters)
        : _n(n), _letters(std::move(letters)) {
      Permutation::check_degree(n);
      for (auto const& x : _letters) {
        check_letter(x);
      }
    }

    int degree() const noexcept {
      return _n;
    }

    std::vector<BraidLetter> const& letters() const noexcept {
      return _letters;
    }

    size_t size() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    BraidWord& push_back(BraidLetter x) {
      check_letter(x);
      _letters.push_back(x);
      return *this;
    }

    BraidWord& append(BraidWord const& w) {
      check_same_degree(w, "append");
      _letters.insert(_letters.end(), w._letters.begin(), w._letters.end());
      return *this;
    }

    bool operator==(BraidWord const&) const = default;

    std::string to_string() const {
      std::string out;
      for (auto const& x : _letters) {
        if (!out.empty()) {
          out += " ";
        }
        out += x.to_string();
      }
      return out;
    }

    void check_same_degree(BraidWord const& w, char const* op) const {
      if (w._n != _n) {
        throw DegreeMismatch(std::string(op) + ": braid degrees "
                             + std::to_string(_n) + " and "
                             + std::to_string(w._n));
      }
    }

   private:
    void check_letter(BraidLetter const& x) const {
      if (x.i < 1 || x.j <= x.i || x.j > _n
          || (x.kind == BraidLetter::Kind::Artin && x.j != x.i + 1)) {
        throw InvalidArgument("braid letter " + x.to_string()
                              + " out of range for degree "
                              + std::to_string(_n));
      }
    }

    int                      _n;
    std::vector<BraidLetter> _letters;
  };

  inline std::ostream& operator<<(std::ostream& os, BraidWord const& w) {
    return os << (w.empty() ? "<empty>" : w.to_string());
  }

  ////////////////////////////////////////////////////////////////////////
  // Word operations
  ////////////////////////////////////////////////////////////////////////

  inline BraidWord band_expand(UPair x, int n) {
    BraidWord w(n);
    for (int a = x.lo(); a < x.hi() - 1; ++a) {
      w.push_back(BraidLetter::artin(a, 1));
    }
    w.push_back(BraidLetter::artin(x.hi() - 1, 1));
    for (int a = x.hi() - 2; a >= x.lo(); --a) {
      w.push_back(BraidLetter::artin(a, -1));
    }
    return w;
  }

  inline BraidWord concat(BraidWord const& u, BraidWord const& v) {
    u.check_same_degree(v, "concat");
    BraidWord w = u;
    return w.append(v);
  }

  inline BraidWord operator*(BraidWord const& u, BraidWord const& v) {
    return concat(u, v);
  }

  inline BraidWord invert(BraidWord const& w) {
    std::vector<BraidLetter> out(w.letters().rbegin(), w.letters().rend());
    for (auto& x : out) {
      x = x.inverse();
    }
    return BraidWord(w.degree(), std::move(out));
  }

  // Cancels adjacent inverse letters only; no braid relations are applied.
  inline BraidWord free_reduce(BraidWord const& w) {
    std::vector<BraidLetter> stack;
    for (auto const& x : w.letters()) {
      if (!stack.empty() && stack.back() == x.inverse()) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return BraidWord(w.degree(), std::move(stack));
  }

  // Artin-only word with the same value.
  inline BraidWord expand(BraidWord const& w) {
    BraidWord out(w.degree());
    for (auto const& x : w.letters()) {
      if (x.kind == BraidLetter::Kind::Artin) {
        out.push_back(x);
      } else {
        auto b = band_expand(x.pair(), w.degree());
        out.append(x.exponent == 1 ? b : invert(b));
      }
    }
    return out;
  }

  // Image in S_n, b_i -> s(i, i+1).
  inline Permutation perm_of(BraidWord const& w) {
    // Track where each strand currently sits; the strand starting at x ends
    // at p(x).
    int const        n = w.degree();
    std::vector<int> pos_to_start(n);
    for (int i = 0; i < n; ++i) {
      pos_to_start[i] = i;
    }
    auto const artin = expand(w);
    for (auto const& x : artin.letters()) {
      std::swap(pos_to_start[x.i - 1], pos_to_start[x.i]);
    }
    std::vector<int> img(n);
    for (int pos = 0; pos < n; ++pos) {
      img[pos_to_start[pos]] = pos + 1;
    }
    return Permutation(img);
  }

  ////////////////////////////////////////////////////////////////////////
  // Convenience constructors
  ////////////////////////////////////////////////////////////////////////

  inline BraidWord artin_word(int n, int i, int exponent = 1) {
    return BraidWord(n, {BraidLetter::artin(i, exponent)});
  }

  inline BraidWord band_word(int n, UPair x, int exponent = 1) {
    return BraidWord(n, {BraidLetter::band(x, exponent)});
  }

  // b_{i,j}^2, the positive full twist of strands i and j.
  inline BraidWord full_twist(int n, UPair x, int exponent = 1) {
    auto b = band_word(n, x, exponent);
    return b * b;
  }

  inline BraidWord power(BraidWord const& w, int k) {
    BraidWord base = k < 0 ? invert(w) : w;
    BraidWord out(w.degree());
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
      out.append(base);
    }
    return out;
  }

  // [u, v] = u v u^-1 v^-1
  inline BraidWord commutator(BraidWord const& u, BraidWord const& v) {
    return u * v * invert(u) * invert(v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  // Whitespace separated tokens: b3, b3^-1, B(1,4), B(1,4)^-1, and the
  // sugar g(1,4) = B(1,4) B(1,4) (likewise g(1,4)^-1).
  inline BraidWord parse_braid_word(std::string_view text, int n) {
    BraidWord w(n);
    size_t    pos = 0;
    auto      err = [&](std::string const& msg) {
      return InvalidArgument("braid word, offset " + std::to_string(pos)
                             + ": " + msg);
    };
    auto read_int = [&]() {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (start == pos) {
        throw err("expected a number");
      }
      return std::stoi(std::string(text.substr(start, pos - start)));
    };
    auto expect = [&](char c) {
      if (pos >= text.size() || text[pos] != c) {
        throw err(std::string("expected '") + c + "'");
      }
      ++pos;
    };
    auto read_exponent = [&]() {
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (text.substr(pos, 2) != "-1") {
          throw err("only ^-1 is allowed as an exponent");
        }
        pos += 2;
        return -1;
      }
      return 1;
    };
    while (true) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos >= text.size()) {
        break;
      }
      char const c = text[pos];
      if (c == 'b') {
        ++pos;
        int i = read_int();
        w.push_back(BraidLetter::artin(i, read_exponent()));
      } else if (c == 'B' || c == 'g') {
        ++pos;
        expect('(');
        int i = read_int();
        expect(',');
        int j = read_int();
        expect(')');
        int e = read_exponent();
        w.push_back(BraidLetter::band(UPair(i, j), e));
        if (c == 'g') {
          w.push_back(BraidLetter::band(UPair(i, j), e));
        }
      } else {
        throw err(std::string("unexpected character '") + c + "'");
      }
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
        throw err("tokens must be separated by whitespace");
      }
    }
    return w;
  }

}  // namespace modbraid

#endif  // MODBRAID_BRAID_HPP_
