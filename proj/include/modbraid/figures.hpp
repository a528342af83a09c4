#ifndef MODBRAID_FIGURES_HPP_
#define MODBRAID_FIGURES_HPP_

// Winding-number claims about small conjugates and commutators of band
// generators, instantiated over every index tuple of a given degree. Each
// case pairs a pure braid word with the winding vector it should have.

#include <string>
#include <vector>

#include "braid.hpp"
#include "pair_vector.hpp"
#include "perm.hpp"

namespace modbraid {

  struct FigureCase {
    std::string      claim;
    std::vector<int> indices;
    BraidWord        word;
    PairVector       expected;
  };

  namespace detail {
    inline bool cyclic_order(int a, int b, int c) {
      // a < b < c up to cyclic rotation
      return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
    }
  }  // namespace detail

  inline std::vector<FigureCase> figure_cases(int n) {
    std::vector<FigureCase> out;
    auto B = [n](int i, int j, int e = 1) {
      return band_word(n, UPair(i, j), e);
    };
    auto G = [n](int i, int j) { return full_twist(n, UPair(i, j)); };
    auto e = [n](int i, int j) { return PairVector::unit(n, UPair(i, j)); };

    // b_{i,j} b_{j,k} b_{i,j}^-1 b_{i,k}^-1 over ordered distinct triples.
    // It is trivial when (k, i, j) is cyclically increasing and equals
    // g_{i,j} g_{k,j}^-1 when (i, k, j) is.
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k) {
            continue;
          }
          auto w = B(i, j) * B(j, k) * B(i, j, -1) * B(i, k, -1);
          if (detail::cyclic_order(k, i, j)) {
            out.push_back({"band conjugation", {i, j, k}, w, PairVector(n)});
          } else {
            out.push_back(
                {"band conjugation defect", {i, j, k}, w, e(i, j) - e(k, j)});
          }
        }
      }
    }

    auto const pairs = all_pairs(n);
    for (auto const& a : pairs) {
      int const i = a.lo(), j = a.hi();
      auto const s = Permutation::transposition(n, a);
      for (auto const& b : pairs) {
        int const k = b.lo(), l = b.hi();
        int const shared = (a.contains(k) ? 1 : 0) + (a.contains(l) ? 1 : 0);
        auto      conj   = B(i, j) * G(k, l) * B(i, j, -1);
        if (shared == 1) {
          auto y = pair_action(s, b);
          out.push_back({"full twist conjugated, one shared strand",
                         {i, j, k, l},
                         conj,
                         e(y.lo(), y.hi())});
          continue;
        }
        out.push_back({"full twist conjugated, no shared strand",
                       {i, j, k, l},
                       conj,
                       e(k, l)});

        auto       comm = commutator(B(i, j), B(k, l));
        PairVector want(n);
        if (i < k && k < j && j < l) {
          want = e(i, k) - e(i, l) - e(j, k) + e(j, l);
        } else if (k < i && i < l && l < j) {
          want = -e(k, i) + e(k, j) + e(i, l) - e(l, j);
        }
        out.push_back(
            {"commutator of bands", {i, j, k, l}, comm, want});
      }
    }
    return out;
  }

}  // namespace modbraid

#endif  // MODBRAID_FIGURES_HPP_
