#ifndef MODBRAID_STRAND_HPP_
#define MODBRAID_STRAND_HPP_

// A braid word read as a strand diagram. Crossings are attributed to the
// strands' starting positions, so for a pure braid half the signed count
// between strands i and j is their winding number.

#include <string>
#include <vector>

#include <json.hpp>

#include "braid.hpp"
#include "error.hpp"
#include "pair_vector.hpp"
#include "perm.hpp"

namespace modbraid {

  class CrossingCounts {
   public:
    explicit CrossingCounts(int n) : _counts(n, Ring::Z) {}

    int degree() const noexcept {
      return _counts.degree();
    }

    std::int64_t operator[](UPair x) const {
      return _counts[x];
    }

    void add(UPair x, std::int64_t e) {
      _counts.add(x, e);
    }

    bool all_even() const {
      for (size_t k = 0; k < _counts.size(); ++k) {
        if (_counts.at_index(k) % 2 != 0) {
          return false;
        }
      }
      return true;
    }

    PairVector const& as_vector() const noexcept {
      return _counts;
    }

    bool operator==(CrossingCounts const&) const = default;

    nlohmann::ordered_json to_json() const {
      return _counts.to_json();
    }

   private:
    PairVector _counts;
  };

  inline CrossingCounts crossing_counts(BraidWord const& w) {
    int const        n = w.degree();
    CrossingCounts   out(n);
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) {
      label[i] = i + 1;
    }
    auto const artin = expand(w);
    for (auto const& x : artin.letters()) {
      int& a = label[x.i - 1];
      int& b = label[x.i];
      out.add(UPair(a, b), x.exponent);
      std::swap(a, b);
    }
    return out;
  }

  inline bool is_pure(BraidWord const& w) {
    return perm_of(w).is_identity();
  }

  inline PairVector winding_vector(BraidWord const& w) {
    if (!is_pure(w)) {
      throw NotPure("winding_vector: the braid " + w.to_string()
                    + " induces the permutation "
                    + perm_of(w).to_string());
    }
    auto const  counts = crossing_counts(w);
    auto const& c      = counts.as_vector();
    PairVector  out(w.degree(), Ring::Z);
    for (auto const& [x, v] : c.nonzero()) {
      if (v % 2 != 0) {
        throw OddCrossing("winding_vector: odd crossing count "
                          + std::to_string(v) + " for strands {"
                          + x.to_string() + "}");
      }
      out.set(x, v / 2);
    }
    return out;
  }

}  // namespace modbraid

#endif  // MODBRAID_STRAND_HPP_
