#ifndef MODBRAID_TESTS_ORACLE_HPP_
#define MODBRAID_TESTS_ORACLE_HPP_

// Small independent reference implementations used as test oracles. They
// work on plain vectors and share no code with the library.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

  // 0-based image lists.
  using Perm = std::vector<int>;

  inline Perm identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) {
      p[i] = i;
    }
    return p;
  }

  // Apply p first, then q.
  inline Perm then(Perm const& p, Perm const& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
      r[i] = q[p[i]];
    }
    return r;
  }

  inline Perm swap(int n, int a, int b) {
    auto p      = identity(n);
    p[a - 1]    = b - 1;
    p[b - 1]    = a - 1;
    return p;
  }

  // Letters as (generator index i, exponent) over Artin generators only.
  using Word = std::vector<std::pair<int, int>>;

  inline Word band(int i, int j, int e = 1) {
    if (i > j) {
      std::swap(i, j);
    }
    Word w;
    for (int a = i; a < j - 1; ++a) {
      w.emplace_back(a, 1);
    }
    w.emplace_back(j - 1, 1);
    for (int a = j - 2; a >= i; --a) {
      w.emplace_back(a, -1);
    }
    if (e == -1) {
      Word r;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        r.emplace_back(it->first, -it->second);
      }
      return r;
    }
    return w;
  }

  inline Word cat(std::initializer_list<Word> ws) {
    Word out;
    for (auto const& w : ws) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  // Linking numbers of a pure braid computed from the strand paths:
  // for every crossing we look up which strands occupy the two positions
  // by replaying the permutation prefix, then halve.
  inline std::map<std::pair<int, int>, std::int64_t> linking(int         n,
                                                             Word const& w) {
    std::map<std::pair<int, int>, std::int64_t> twice;
    Perm where = identity(n);  // where[strand] = position
    for (auto [i, e] : w) {
      int a = -1, b = -1;
      for (int s = 0; s < n; ++s) {
        if (where[s] == i - 1) {
          a = s;
        } else if (where[s] == i) {
          b = s;
        }
      }
      std::pair<int, int> key{std::min(a, b) + 1, std::max(a, b) + 1};
      twice[key] += e;
      std::swap(where[a], where[b]);
    }
    std::map<std::pair<int, int>, std::int64_t> out;
    for (auto [k, v] : twice) {
      if (v != 0) {
        out[k] = v / 2;
      }
    }
    return out;
  }

  inline Word random_word(std::mt19937& rng, int n, int max_len) {
    Word w;
    if (n < 2) {
      return w;
    }
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::bernoulli_distribution        sgn(0.5);
    int                                L = len(rng);
    for (int k = 0; k < L; ++k) {
      w.emplace_back(gen(rng), sgn(rng) ? 1 : -1);
    }
    return w;
  }

}  // namespace oracle

#endif  // MODBRAID_TESTS_ORACLE_HPP_
