#ifndef MODBRAID_PERM_HPP_
#define MODBRAID_PERM_HPP_

// Permutations of {1, ..., n}, transpositions and the action of S_n on
// unordered pairs.
//
// Products are read left to right: (p * q)(x) = q(p(x)). A braid word read
// left to right therefore maps to the product of its letters in word order,
// and the strand that starts at position x ends at position p(x).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace modbraid {

  ////////////////////////////////////////////////////////////////////////
  // UPair
  ////////////////////////////////////////////////////////////////////////

  // An unordered pair {lo, hi} of distinct points, 1 <= lo < hi.
  class UPair {
   public:
    UPair(int a, int b) : _lo(std::min(a, b)), _hi(std::max(a, b)) {
      if (a == b) {
        throw InvalidArgument("UPair: the two points must be distinct, got "
                              + std::to_string(a) + " twice");
      }
      if (_lo < 1) {
        throw InvalidArgument("UPair: points are 1-based, got "
                              + std::to_string(_lo));
      }
    }

    int lo() const noexcept {
      return _lo;
    }
    int hi() const noexcept {
      return _hi;
    }

    bool contains(int x) const noexcept {
      return x == _lo || x == _hi;
    }

    // The other point of the pair; x must be a member.
    int other(int x) const noexcept {
      return x == _lo ? _hi : _lo;
    }

    bool fits(int n) const noexcept {
      return _hi <= n;
    }

    // Dense index of the pair among all pairs of {1..n}, in lexicographic
    // order {1,2}, {1,3}, ..., {1,n}, {2,3}, ...
    size_t index(int n) const noexcept {
      auto i = static_cast<size_t>(_lo);
      auto m = static_cast<size_t>(n);
      return (i - 1) * (2 * m - i) / 2 + static_cast<size_t>(_hi - _lo - 1);
    }

    auto operator<=>(UPair const&) const = default;

    std::string to_string() const {
      return std::to_string(_lo) + "," + std::to_string(_hi);
    }

   private:
    int _lo;
    int _hi;
  };

  inline size_t pair_count(int n) noexcept {
    return n < 2 ? 0 : static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2;
  }

  // All pairs of {1..n} in dense-index order.
  inline std::vector<UPair> all_pairs(int n) {
    std::vector<UPair> out;
    out.reserve(pair_count(n));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        out.emplace_back(i, j);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  class Permutation {
   public:
    // The identity of degree 1.
    Permutation() : _img{0} {}

    // images[i - 1] = p(i), 1-based.
    explicit Permutation(std::vector<int> const& images) {
      if (images.empty()) {
        throw InvalidArgument("Permutation: degree must be at least 1");
      }
      int const        n = static_cast<int>(images.size());
      std::vector<bool> seen(images.size(), false);
      _img.reserve(images.size());
      for (int x : images) {
        if (x < 1 || x > n || seen[x - 1]) {
          throw InvalidArgument("Permutation: images are not a bijection of {1.."
                                + std::to_string(n) + "}");
        }
        seen[x - 1] = true;
        _img.push_back(static_cast<std::uint8_t>(x - 1));
      }
    }

    static Permutation identity(int n) {
      check_degree(n);
      Permutation p;
      p._img.resize(n);
      std::iota(p._img.begin(), p._img.end(), std::uint8_t(0));
      return p;
    }

    static Permutation transposition(int n, UPair x) {
      if (!x.fits(n)) {
        throw InvalidArgument("transposition s(" + x.to_string()
                              + ") out of range for degree "
                              + std::to_string(n));
      }
      auto p = identity(n);
      std::swap(p._img[x.lo() - 1], p._img[x.hi() - 1]);
      return p;
    }

    static Permutation transposition(int n, int i, int j) {
      return transposition(n, UPair(i, j));
    }

    int degree() const noexcept {
      return static_cast<int>(_img.size());
    }

    // p(x), 1-based.
    int operator()(int x) const {
      return _img[x - 1] + 1;
    }

    // 0-based image, for hot loops.
    int at0(int x) const noexcept {
      return _img[x];
    }

    std::vector<int> images() const {
      std::vector<int> out(_img.size());
      std::transform(
          _img.begin(), _img.end(), out.begin(), [](auto v) { return v + 1; });
      return out;
    }

    bool is_identity() const noexcept {
      for (size_t i = 0; i < _img.size(); ++i) {
        if (_img[i] != i) {
          return false;
        }
      }
      return true;
    }

    Permutation inverse() const {
      Permutation q = *this;
      for (size_t i = 0; i < _img.size(); ++i) {
        q._img[_img[i]] = static_cast<std::uint8_t>(i);
      }
      return q;
    }

    // Lexicographic rank in [0, n!).
    size_t rank() const {
      size_t const      n = _img.size();
      size_t            r = 0;
      std::vector<bool> used(n, false);
      for (size_t i = 0; i < n; ++i) {
        size_t smaller = 0;
        for (size_t v = 0; v < _img[i]; ++v) {
          smaller += !used[v];
        }
        used[_img[i]] = true;
        r             = r * (n - i) + smaller;
      }
      return r;
    }

    static Permutation unrank(int n, size_t r) {
      check_degree(n);
      std::vector<size_t> digits(n);
      for (int i = n - 1; i >= 0; --i) {
        size_t base = static_cast<size_t>(n - i);
        digits[i]   = r % base;
        r /= base;
      }
      std::vector<std::uint8_t> pool(n);
      std::iota(pool.begin(), pool.end(), std::uint8_t(0));
      Permutation p;
      p._img.clear();
      for (int i = 0; i < n; ++i) {
        p._img.push_back(pool[digits[i]]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
      }
      return p;
    }

    auto operator<=>(Permutation const&) const = default;

    // One-line image notation, e.g. "[2,3,1]".
    std::string to_string() const {
      std::string out = "[";
      for (size_t i = 0; i < _img.size(); ++i) {
        if (i != 0) {
          out += ",";
        }
        out += std::to_string(_img[i] + 1);
      }
      return out + "]";
    }

    static void check_degree(int n) {
      if (n < 1 || n > 255) {
        throw InvalidArgument("degree must be in [1, 255], got "
                              + std::to_string(n));
      }
    }

    friend Permutation compose(Permutation const&, Permutation const&);

   private:
    std::vector<std::uint8_t> _img;
  };

  // Left-to-right product: compose(p, q)(x) = q(p(x)).
  inline Permutation compose(Permutation const& p, Permutation const& q) {
    if (p.degree() != q.degree()) {
      throw DegreeMismatch("compose: degrees " + std::to_string(p.degree())
                           + " and " + std::to_string(q.degree()));
    }
    Permutation r = p;
    for (size_t i = 0; i < r._img.size(); ++i) {
      r._img[i] = q._img[p._img[i]];
    }
    return r;
  }

  inline Permutation operator*(Permutation const& p, Permutation const& q) {
    return compose(p, q);
  }

  // The standard action on unordered pairs: {p(lo), p(hi)}.
  inline UPair pair_action(Permutation const& p, UPair x) {
    if (!x.fits(p.degree())) {
      throw InvalidArgument("pair_action: pair {" + x.to_string()
                            + "} out of range for degree "
                            + std::to_string(p.degree()));
    }
    return UPair(p(x.lo()), p(x.hi()));
  }

  // All permutations of degree n in lexicographic (= rank) order.
  inline std::vector<Permutation> all_permutations(int n) {
    Permutation::check_degree(n);
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
      out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transposition words and the normal form
  ////////////////////////////////////////////////////////////////////////

  // A product of transpositions s(lo,hi), read left to right.
  struct TranspositionWord {
    std::vector<UPair> factors;

    bool operator==(TranspositionWord const&) const = default;

    Permutation evaluate(int n) const {
      auto p = Permutation::identity(n);
      for (auto const& x : factors) {
        p = compose(p, Permutation::transposition(n, x));
      }
      return p;
    }

    std::string to_string() const {
      std::string out;
      for (auto const& x : factors) {
        if (!out.empty()) {
          out += " ";
        }
        out += "s(" + x.to_string() + ")";
      }
      return out;
    }
  };

  // Normal form s(k_1,1) s(k_2,2) ... s(k_n,n): peel off the largest point
  // first. With k_m = (current p)(m), right-multiplying by s(k_m, m) fixes m,
  // so the factors come out in decreasing m and are reversed at the end.
  // Trivial factors (k_m = m) are omitted.
  inline TranspositionWord normal_form(Permutation const& p) {
    int const          n   = p.degree();
    std::vector<int>   cur = p.images();
    TranspositionWord  out;
    for (int m = n; m >= 1; --m) {
      int const k = cur[m - 1];
      if (k == m) {
        continue;
      }
      out.factors.emplace_back(k, m);
      // cur <- cur * s(k, m): swap the values k and m in the image list.
      for (auto& v : cur) {
        if (v == k) {
          v = m;
        } else if (v == m) {
          v = k;
        }
      }
    }
    std::reverse(out.factors.begin(), out.factors.end());
    return out;
  }

  // Closed-form normal form of s(a) * s(b).
  //
  // Disjoint pairs commute, and the factor with the smaller top index comes
  // first. Pairs sharing a point i, written s(i,k) s(i,j), have the normal
  // form determined by which of i, k, j is largest:
  //   j largest: s(i,k) s(i,j)
  //   k largest: s(i,j) s(j,k)
  //   i largest: s(k,j) s(k,i)
  inline TranspositionWord pair_normal_form(UPair a, UPair b) {
    TranspositionWord out;
    if (a == b) {
      return out;
    }
    bool const shares_lo = b.contains(a.lo());
    bool const shares_hi = b.contains(a.hi());
    if (!shares_lo && !shares_hi) {
      if (a.hi() < b.hi()) {
        out.factors = {a, b};
      } else {
        out.factors = {b, a};
      }
      return out;
    }
    int const i = shares_lo ? a.lo() : a.hi();
    int const k = a.other(i);
    int const j = b.other(i);
    int const m = std::max({i, k, j});
    if (m == j) {
      out.factors = {UPair(i, k), UPair(i, j)};
    } else if (m == k) {
      out.factors = {UPair(i, j), UPair(j, k)};
    } else {
      out.factors = {UPair(k, j), UPair(k, i)};
    }
    return out;
  }

  inline std::ostream& operator<<(std::ostream& os, UPair x) {
    return os << "{" << x.to_string() << "}";
  }

  inline std::ostream& operator<<(std::ostream& os, Permutation const& p) {
    return os << p.to_string();
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::vector<int> parse_int_list(std::string_view s,
                                           std::string_view what) {
      std::vector<int> out;
      std::string      cur;
      auto             flush = [&]() {
        if (cur.empty()) {
          throw InvalidArgument(std::string(what) + ": empty entry");
        }
        out.push_back(std::stoi(cur));
        cur.clear();
      };
      for (char c : s) {
        if (c == ' ' || c == '\t') {
          continue;
        } else if (c == ',') {
          flush();
        } else if ((c >= '0' && c <= '9') || (c == '-' && cur.empty())) {
          cur += c;
        } else {
          throw InvalidArgument(std::string(what) + ": unexpected character '"
                                + c + "'");
        }
      }
      flush();
      return out;
    }
  }  // namespace detail

  // Parses "[2,3,1]".
  inline Permutation parse_permutation(std::string_view s) {
    auto const first = s.find('[');
    auto const last  = s.rfind(']');
    if (first == std::string_view::npos || last == std::string_view::npos
        || last < first) {
      throw InvalidArgument("permutation must look like [2,3,1], got '"
                            + std::string(s) + "'");
    }
    return Permutation(
        detail::parse_int_list(s.substr(first + 1, last - first - 1),
                               "permutation"));
  }

  // Parses "s(i,j)".
  inline UPair parse_transposition(std::string_view s) {
    if (s.size() < 6 || s.substr(0, 2) != "s(" || s.back() != ')') {
      throw InvalidArgument("transposition must look like s(i,j), got '"
                            + std::string(s) + "'");
    }
    auto v = detail::parse_int_list(s.substr(2, s.size() - 3), "transposition");
    if (v.size() != 2) {
      throw InvalidArgument("transposition takes two points");
    }
    return UPair(v[0], v[1]);
  }

}  // namespace modbraid

template <>
struct std::hash<modbraid::Permutation> {
  size_t operator()(modbraid::Permutation const& p) const noexcept {
    size_t h = static_cast<size_t>(p.degree());
    for (int i = 0; i < p.degree(); ++i) {
      h = h * 1099511628211ULL ^ static_cast<size_t>(p.at0(i));
    }
    return h;
  }
};

#endif  // MODBRAID_PERM_HPP_
