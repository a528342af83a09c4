#ifndef MODBRAID_EXT_GROUP_HPP_
#define MODBRAID_EXT_GROUP_HPP_

// The extensions G_n, G_n^t and Z_n of S_n by the pair lattice, realized as
// pairs (p, v) standing for s(p) * iota(v): the section word of p followed
// by the kernel element v.
//
// With c(p, q) = winding(s(p) s(q) s(pq)^-1), i.e. s(p) s(q) = iota(c) s(pq),
// and iota(v) s(q) = s(q) iota(theta(q^-1) v), the product is
//
//   (p, v) (q, w) = (pq, theta((pq)^-1) c(p, q) + theta(q^-1) v + w).
//
// G_n^t uses t * c and Z_n uses c mod 2.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "braid.hpp"
#include "error.hpp"
#include "pair_vector.hpp"
#include "perm.hpp"
#include "strand.hpp"

namespace modbraid {

  ////////////////////////////////////////////////////////////////////////
  // Coefficient rings
  ////////////////////////////////////////////////////////////////////////

  struct RingTag {
    Ring         kind  = Ring::Z;
    std::int64_t scale = 1;  // only meaningful for Z

    static RingTag Z(std::int64_t t = 1) {
      if (t < 1) {
        throw InvalidArgument("scale t must be at least 1, got "
                              + std::to_string(t));
      }
      return {Ring::Z, t};
    }

    static RingTag Z2() {
      return {Ring::Z2, 1};
    }

    auto operator<=>(RingTag const&) const = default;

    std::string to_string() const {
      if (kind == Ring::Z2) {
        return "Z2";
      }
      return scale == 1 ? "Z" : "Z(t=" + std::to_string(scale) + ")";
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Elements
  ////////////////////////////////////////////////////////////////////////

  struct ExtElement {
    Permutation perm;
    PairVector  vec;
    RingTag     ring;

    int degree() const noexcept {
      return perm.degree();
    }

    bool is_identity() const {
      return perm.is_identity() && vec.is_zero();
    }

    bool operator==(ExtElement const&) const = default;

    std::string to_string() const {
      return "(" + perm.to_string() + ", " + vec.to_string() + ")";
    }
  };

  inline std::ostream& operator<<(std::ostream& os, ExtElement const& e) {
    return os << e.to_string() << " in " << e.ring.to_string();
  }

  ////////////////////////////////////////////////////////////////////////
  // Section
  ////////////////////////////////////////////////////////////////////////

  // s(p): the normal form of p with every transposition replaced by its
  // band generator.
  inline BraidWord section_word(Permutation const& p) {
    BraidWord w(p.degree());
    for (auto const& x : normal_form(p).factors) {
      w.push_back(BraidLetter::band(x, 1));
    }
    return w;
  }

  // winding(s(p) s(q) s(pq)^-1) with integer coefficients.
  inline PairVector section_defect(Permutation const& p, Permutation const& q) {
    auto const w = section_word(p) * section_word(q)
                   * invert(section_word(compose(p, q)));
    return winding_vector(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // ExtGroup
  ////////////////////////////////////////////////////////////////////////

  class ExtGroup {
   public:
    // Returns the cocycle value for (p, q) with coefficients already in the
    // group's ring.
    using CocycleFn
        = std::function<PairVector(Permutation const&, Permutation const&)>;

    ExtGroup(int n, RingTag ring) : _n(n), _ring(ring) {
      check_degree(n);
    }

    // A group with the same underlying set and a caller-supplied cocycle;
    // used for cohomologous models.
    ExtGroup(int n, RingTag ring, CocycleFn cocycle)
        : _n(n), _ring(ring), _custom(std::move(cocycle)) {
      check_degree(n);
    }

    ExtGroup(ExtGroup const&)            = delete;
    ExtGroup& operator=(ExtGroup const&) = delete;

    // A process-wide instance per (n, ring), so that every caller shares one
    // cocycle cache.
    static ExtGroup& shared(int n, RingTag ring) {
      static std::mutex mtx;
      static std::map<std::pair<int, RingTag>, std::unique_ptr<ExtGroup>>
                       registry;
      std::lock_guard  lock(mtx);
      auto&            slot = registry[{n, ring}];
      if (!slot) {
        slot = std::make_unique<ExtGroup>(n, ring);
      }
      return *slot;
    }

    int degree() const noexcept {
      return _n;
    }

    RingTag ring() const noexcept {
      return _ring;
    }

    PairVector zero() const {
      return PairVector(_n, _ring.kind);
    }

    // The cocycle, memoized. Concurrent readers share a lock; insertion is
    // serialized.
    PairVector const& cocycle(Permutation const& p, Permutation const& q) const {
      check_perm(p);
      check_perm(q);
      std::uint64_t const key
          = static_cast<std::uint64_t>(p.rank()) << 32 | q.rank();
      {
        std::shared_lock lock(_mtx);
        auto             it = _cache.find(key);
        if (it != _cache.end()) {
          return *it->second;
        }
      }
      auto value = std::make_unique<PairVector>(compute_cocycle(p, q));
      std::unique_lock lock(_mtx);
      auto [it, inserted] = _cache.try_emplace(key, std::move(value));
      return *it->second;
    }

    size_t cache_size() const {
      std::shared_lock lock(_mtx);
      return _cache.size();
    }

    ExtElement identity() const {
      return {Permutation::identity(_n), zero(), _ring};
    }

    ExtElement element(Permutation p, PairVector v) const {
      check_perm(p);
      if (v.degree() != _n) {
        throw DegreeMismatch("element: vector degree "
                             + std::to_string(v.degree()));
      }
      return {std::move(p), v.in_ring(_ring.kind), _ring};
    }

    // s(p) itself.
    ExtElement lift(Permutation p) const {
      return element(std::move(p), zero());
    }

    // The half twist lifting s(i,j).
    ExtElement sigma(int i, int j) const {
      return lift(Permutation::transposition(_n, i, j));
    }

    // The kernel generator g_{i,j}.
    ExtElement g(int i, int j) const {
      return element(Permutation::identity(_n),
                     PairVector::unit(_n, UPair(i, j), _ring.kind));
    }

    ExtElement mul(ExtElement const& a, ExtElement const& b) const {
      check_elem(a);
      check_elem(b);
      auto       pq     = compose(a.perm, b.perm);
      auto const pq_inv = pq.inverse();
      PairVector v      = theta(pq_inv, cocycle(a.perm, b.perm));
      v += theta(b.perm.inverse(), a.vec);
      v += b.vec;
      return {std::move(pq), std::move(v), _ring};
    }

    ExtElement inv(ExtElement const& a) const {
      check_elem(a);
      auto       p_inv = a.perm.inverse();
      PairVector v     = -cocycle(a.perm, p_inv);
      v -= theta(a.perm, a.vec);
      return {std::move(p_inv), std::move(v), _ring};
    }

    ExtElement pow(ExtElement const& a, int k) const {
      ExtElement base = k < 0 ? inv(a) : a;
      ExtElement out  = identity();
      for (int i = 0; i < (k < 0 ? -k : k); ++i) {
        out = mul(out, base);
      }
      return out;
    }

    // a b a^-1 b^-1
    ExtElement commutator(ExtElement const& a, ExtElement const& b) const {
      return mul(mul(a, b), mul(inv(a), inv(b)));
    }

    // Cache keys pack two permutation ranks into 64 bits.
    static constexpr int max_degree = 12;

   private:
    static void check_degree(int n) {
      if (n < 1 || n > max_degree) {
        throw InvalidArgument("extension groups support degrees 1.."
                              + std::to_string(max_degree) + ", got "
                              + std::to_string(n));
      }
    }

    PairVector compute_cocycle(Permutation const& p,
                               Permutation const& q) const {
      if (_custom) {
        auto v = _custom(p, q);
        if (v.degree() != _n || v.ring() != _ring.kind) {
          throw InvalidArgument("custom cocycle returned a vector of the "
                                "wrong degree or ring");
        }
        return v;
      }
      auto v = section_defect(p, q);
      if (_ring.kind == Ring::Z2) {
        return eta(v);
      }
      return _ring.scale * v;
    }

    void check_perm(Permutation const& p) const {
      if (p.degree() != _n) {
        throw DegreeMismatch("permutation of degree "
                             + std::to_string(p.degree())
                             + " used in a group of degree "
                             + std::to_string(_n));
      }
    }

    void check_elem(ExtElement const& a) const {
      check_perm(a.perm);
      if (a.ring != _ring) {
        throw InvalidArgument("element over " + a.ring.to_string()
                              + " used in a group over "
                              + _ring.to_string());
      }
    }

    int       _n;
    RingTag   _ring;
    CocycleFn _custom;

    mutable std::shared_mutex _mtx;
    mutable std::unordered_map<std::uint64_t, std::unique_ptr<PairVector>>
        _cache;
  };

  ////////////////////////////////////////////////////////////////////////
  // Free functions over the shared groups
  ////////////////////////////////////////////////////////////////////////

  inline PairVector bar_cocycle(Permutation const& p,
                                Permutation const& q,
                                RingTag            ring) {
    if (p.degree() != q.degree()) {
      throw DegreeMismatch("bar_cocycle: degrees "
                           + std::to_string(p.degree()) + " and "
                           + std::to_string(q.degree()));
    }
    return ExtGroup::shared(p.degree(), ring).cocycle(p, q);
  }

  inline ExtElement ext_mul(ExtElement const& a, ExtElement const& b) {
    if (a.ring != b.ring) {
      throw InvalidArgument("ext_mul: rings " + a.ring.to_string() + " and "
                            + b.ring.to_string());
    }
    if (a.degree() != b.degree()) {
      throw DegreeMismatch("ext_mul: degrees " + std::to_string(a.degree())
                           + " and " + std::to_string(b.degree()));
    }
    return ExtGroup::shared(a.degree(), a.ring).mul(a, b);
  }

  inline ExtElement ext_inv(ExtElement const& a) {
    return ExtGroup::shared(a.degree(), a.ring).inv(a);
  }

  // The image of a braid in G_n (ring Z) or Z_n (ring Z2), computed from the
  // strand diagram of s(p)^-1 w with p = perm_of(w).
  inline ExtElement elem_from_word(BraidWord const& w, RingTag ring) {
    if (ring.kind == Ring::Z && ring.scale != 1) {
      throw UnsupportedScale("elem_from_word: G_n^t with t = "
                             + std::to_string(ring.scale)
                             + " is not a quotient of the braid group");
    }
    auto p = perm_of(w);
    auto v = winding_vector(invert(section_word(p)) * w);
    return {std::move(p), v.in_ring(ring.kind), ring};
  }

}  // namespace modbraid

#endif  // MODBRAID_EXT_GROUP_HPP_
