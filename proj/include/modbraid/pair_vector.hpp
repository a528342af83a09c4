#ifndef MODBRAID_PAIR_VECTOR_HPP_
#define MODBRAID_PAIR_VECTOR_HPP_

// Vectors indexed by the unordered pairs of {1..n}, with coefficients in Z or
// Z/2. These hold the kernel coordinates g_{i,j} of the extensions and the
// winding numbers of pure braids.

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "error.hpp"
#include "perm.hpp"

namespace modbraid {

  enum class Ring : std::uint8_t { Z, Z2 };

  inline char const* ring_name(Ring r) {
    return r == Ring::Z ? "Z" : "Z2";
  }

  class PairVector {
   public:
    // A coefficient attached to the pair {i, j}.
    struct Term {
      std::int64_t coeff;
      int          i;
      int          j;
    };

    explicit PairVector(int n = 1, Ring ring = Ring::Z)
        : _n(n), _ring(ring), _c(pair_count(n), 0) {
      Permutation::check_degree(n);
    }

    PairVector(int n, Ring ring, std::initializer_list<Term> terms)
        : PairVector(n, ring) {
      for (auto const& t : terms) {
        add(UPair(t.i, t.j), t.coeff);
      }
    }

    // The basis vector e_{i,j}.
    static PairVector unit(int n, UPair x, Ring ring = Ring::Z) {
      PairVector v(n, ring);
      v.add(x, 1);
      return v;
    }

    int degree() const noexcept {
      return _n;
    }

    Ring ring() const noexcept {
      return _ring;
    }

    size_t size() const noexcept {
      return _c.size();
    }

    std::int64_t operator[](UPair x) const {
      return _c[checked_index(x)];
    }

    std::int64_t at_index(size_t k) const {
      return _c.at(k);
    }

    PairVector& set(UPair x, std::int64_t value) {
      _c[checked_index(x)] = normalize(value);
      return *this;
    }

    PairVector& add(UPair x, std::int64_t value) {
      auto& c = _c[checked_index(x)];
      c       = normalize(detail::checked_add(c, value));
      return *this;
    }

    bool is_zero() const noexcept {
      for (auto c : _c) {
        if (c != 0) {
          return false;
        }
      }
      return true;
    }

    PairVector& operator+=(PairVector const& w) {
      check_compatible(w, "+");
      for (size_t k = 0; k < _c.size(); ++k) {
        _c[k] = normalize(detail::checked_add(_c[k], w._c[k]));
      }
      return *this;
    }

    PairVector& operator-=(PairVector const& w) {
      check_compatible(w, "-");
      for (size_t k = 0; k < _c.size(); ++k) {
        _c[k] = normalize(detail::checked_sub(_c[k], w._c[k]));
      }
      return *this;
    }

    PairVector& operator*=(std::int64_t s) {
      for (auto& c : _c) {
        c = normalize(detail::checked_mul(c, s));
      }
      return *this;
    }

    friend PairVector operator+(PairVector v, PairVector const& w) {
      return v += w;
    }

    friend PairVector operator-(PairVector v, PairVector const& w) {
      return v -= w;
    }

    friend PairVector operator-(PairVector v) {
      return v *= -1;
    }

    friend PairVector operator*(std::int64_t s, PairVector v) {
      return v *= s;
    }

    bool operator==(PairVector const&) const = default;

    // Same coefficients, other ring. Z -> Z2 is the mod 2 reduction; Z2 -> Z
    // lifts each bit to 0 or 1.
    PairVector in_ring(Ring r) const {
      PairVector out(_n, r);
      for (size_t k = 0; k < _c.size(); ++k) {
        out._c[k] = out.normalize(_c[k]);
      }
      return out;
    }

    // Nonzero entries in dense-index order.
    std::vector<std::pair<UPair, std::int64_t>> nonzero() const {
      std::vector<std::pair<UPair, std::int64_t>> out;
      size_t                                      k = 0;
      for (auto const& x : all_pairs(_n)) {
        if (_c[k] != 0) {
          out.emplace_back(x, _c[k]);
        }
        ++k;
      }
      return out;
    }

    // "e(1,3) - e(2,3)", or "0".
    std::string to_string() const {
      std::string out;
      for (auto const& [x, c] : nonzero()) {
        std::int64_t a = c < 0 ? -c : c;
        if (out.empty()) {
          out += c < 0 ? "-" : "";
        } else {
          out += c < 0 ? " - " : " + ";
        }
        if (a != 1) {
          out += std::to_string(a) + "*";
        }
        out += "e(" + x.to_string() + ")";
      }
      return out.empty() ? "0" : out;
    }

    // Object keyed "i,j" with the nonzero entries only.
    nlohmann::ordered_json to_json() const {
      auto j = nlohmann::ordered_json::object();
      for (auto const& [x, c] : nonzero()) {
        j[x.to_string()] = c;
      }
      return j;
    }

    static PairVector from_json(nlohmann::ordered_json const& j,
                                int                           n,
                                Ring                          ring = Ring::Z) {
      PairVector v(n, ring);
      for (auto const& [key, val] : j.items()) {
        auto ij = detail::parse_int_list(key, "pair key");
        if (ij.size() != 2) {
          throw InvalidArgument("pair key must look like \"i,j\", got \""
                                + key + "\"");
        }
        v.add(UPair(ij[0], ij[1]), val.get<std::int64_t>());
      }
      return v;
    }

   private:
    size_t checked_index(UPair x) const {
      if (!x.fits(_n)) {
        throw InvalidArgument("pair {" + x.to_string()
                              + "} out of range for degree "
                              + std::to_string(_n));
      }
      return x.index(_n);
    }

    void check_compatible(PairVector const& w, char const* op) const {
      if (w._n != _n) {
        throw DegreeMismatch(std::string("PairVector ") + op + ": degrees "
                             + std::to_string(_n) + " and "
                             + std::to_string(w._n));
      }
      if (w._ring != _ring) {
        throw InvalidArgument(std::string("PairVector ") + op
                              + ": ring mismatch");
      }
    }

    std::int64_t normalize(std::int64_t c) const noexcept {
      return _ring == Ring::Z2 ? (c & 1) : c;
    }

    int                       _n;
    Ring                      _ring;
    std::vector<std::int64_t> _c;
  };

  inline std::ostream& operator<<(std::ostream& os, PairVector const& v) {
    return os << v.to_string() << " over " << ring_name(v.ring());
  }

  // Coefficientwise reduction mod 2.
  inline PairVector eta(PairVector const& v) {
    return v.in_ring(Ring::Z2);
  }

  // The permutation action on coefficients, (theta(p) v)[x] = v[p(x)].
  //
  // With products read left to right, conjugating a pure braid k by a braid
  // a with permutation p gives winding(a k a^-1) = theta(p) winding(k).
  inline PairVector theta(Permutation const& p, PairVector const& v) {
    int const n = v.degree();
    if (p.degree() != n) {
      throw DegreeMismatch("theta: permutation degree "
                           + std::to_string(p.degree())
                           + " and vector degree " + std::to_string(n));
    }
    PairVector out(n, v.ring());
    for (auto const& x : all_pairs(n)) {
      out.set(x, v[pair_action(p, x)]);
    }
    return out;
  }

}  // namespace modbraid

#endif  // MODBRAID_PAIR_VECTOR_HPP_
