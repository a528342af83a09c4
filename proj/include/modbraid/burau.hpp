#ifndef MODBRAID_BURAU_HPP_
#define MODBRAID_BURAU_HPP_

// The unreduced Burau representation at t = -1, over Z (m = 0) or Z/m.
// b_i acts by the block ((2, -1), (1, 0)) on coordinates i, i+1 and the
// matrix of a word is the product of its letters' matrices in word order.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "braid.hpp"
#include "error.hpp"

namespace modbraid {

  class SquareMatrixModM {
   public:
    SquareMatrixModM(int n, std::int64_t m)
        : _n(n), _m(m), _a(static_cast<size_t>(n) * n, 0) {
      if (n < 1) {
        throw InvalidArgument("matrix dimension must be positive");
      }
      if (m < 0) {
        throw InvalidArgument("modulus must be non-negative");
      }
    }

    static SquareMatrixModM identity(int n, std::int64_t m) {
      SquareMatrixModM I(n, m);
      for (int i = 0; i < n; ++i) {
        I.set(i, i, 1);
      }
      return I;
    }

    int dim() const noexcept {
      return _n;
    }

    std::int64_t modulus() const noexcept {
      return _m;
    }

    std::int64_t operator()(int r, int c) const {
      return _a[static_cast<size_t>(r) * _n + c];
    }

    void set(int r, int c, std::int64_t v) {
      _a[static_cast<size_t>(r) * _n + c] = reduce(v);
    }

    bool is_identity() const {
      for (int r = 0; r < _n; ++r) {
        for (int c = 0; c < _n; ++c) {
          if ((*this)(r, c) != (r == c ? reduce(1) : 0)) {
            return false;
          }
        }
      }
      return true;
    }

    friend SquareMatrixModM operator*(SquareMatrixModM const& A,
                                      SquareMatrixModM const& B) {
      if (A._n != B._n || A._m != B._m) {
        throw DegreeMismatch("matrix product: shapes or moduli differ");
      }
      SquareMatrixModM C(A._n, A._m);
      for (int r = 0; r < A._n; ++r) {
        for (int k = 0; k < A._n; ++k) {
          std::int64_t const a = A(r, k);
          if (a == 0) {
            continue;
          }
          for (int c = 0; c < A._n; ++c) {
            auto& out = C._a[static_cast<size_t>(r) * A._n + c];
            out       = C.reduce(
                detail::checked_add(out, detail::checked_mul(a, B(k, c))));
          }
        }
      }
      return C;
    }

    bool operator==(SquareMatrixModM const&) const = default;

    // {"n": n, "m": m, "rows": [[...], ...]}
    nlohmann::ordered_json to_json() const {
      nlohmann::ordered_json j;
      j["n"]    = _n;
      j["m"]    = _m;
      auto rows = nlohmann::ordered_json::array();
      for (int r = 0; r < _n; ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < _n; ++c) {
          row.push_back((*this)(r, c));
        }
        rows.push_back(row);
      }
      j["rows"] = rows;
      return j;
    }

   private:
    std::int64_t reduce(std::int64_t v) const noexcept {
      return _m > 0 ? detail::mod_floor(v, _m) : v;
    }

    int                       _n;
    std::int64_t              _m;
    std::vector<std::int64_t> _a;
  };

  // Image of b_i^e, e = +1 or -1.
  inline SquareMatrixModM burau_generator(int n, int i, int e, std::int64_t m) {
    auto M = SquareMatrixModM::identity(n, m);
    int  a = i - 1, b = i;
    if (e == 1) {
      M.set(a, a, 2);
      M.set(a, b, -1);
      M.set(b, a, 1);
      M.set(b, b, 0);
    } else {
      M.set(a, a, 0);
      M.set(a, b, 1);
      M.set(b, a, -1);
      M.set(b, b, 2);
    }
    return M;
  }

  inline SquareMatrixModM burau_matrix(BraidWord const& w, std::int64_t m) {
    int const  n     = w.degree();
    auto       M     = SquareMatrixModM::identity(n, m);
    auto const artin = expand(w);
    for (auto const& x : artin.letters()) {
      M = M * burau_generator(n, x.i, x.exponent, m);
    }
    return M;
  }

  // Membership in the level-m congruence subgroup B_n[m].
  inline bool in_level(BraidWord const& w, std::int64_t m) {
    return burau_matrix(w, m).is_identity();
  }

}  // namespace modbraid

#endif  // MODBRAID_BURAU_HPP_
