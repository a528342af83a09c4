#ifndef MODBRAID_CHAIN_HPP_
#define MODBRAID_CHAIN_HPP_

// Low-dimensional chains over the group ring Z S_n: the resolution R_* built
// from the Cayley complex of the transposition presentation of S_n, the
// normalized bar resolution, the chain map gamma between them, and the
// cocycles phi and kappa on the 2-cells.
//
// Group elements multiply with compose(), so p q means "p, then q"; the ring
// acts on basis labels from the left.

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ext_group.hpp"
#include "figures.hpp"
#include "pair_vector.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace modbraid {

  ////////////////////////////////////////////////////////////////////////
  // Group ring
  ////////////////////////////////////////////////////////////////////////

  class GroupRingElem {
   public:
    explicit GroupRingElem(int n = 1) : _n(n) {}

    // The basis element p with coefficient c.
    GroupRingElem(Permutation const& p, std::int64_t c = 1)
        : _n(p.degree()) {
      add(p, c);
    }

    static GroupRingElem one(int n) {
      return GroupRingElem(Permutation::identity(n));
    }

    int degree() const noexcept {
      return _n;
    }

    std::map<Permutation, std::int64_t> const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    std::int64_t coefficient(Permutation const& p) const {
      auto it = _terms.find(p);
      return it == _terms.end() ? 0 : it->second;
    }

    GroupRingElem& add(Permutation const& p, std::int64_t c) {
      check(p.degree());
      if (c == 0) {
        return *this;
      }
      auto [it, fresh] = _terms.try_emplace(p, 0);
      it->second       = detail::checked_add(it->second, c);
      if (it->second == 0) {
        _terms.erase(it);
      }
      return *this;
    }

    GroupRingElem& operator+=(GroupRingElem const& x) {
      check(x._n);
      for (auto const& [p, c] : x._terms) {
        add(p, c);
      }
      return *this;
    }

    GroupRingElem& operator-=(GroupRingElem const& x) {
      check(x._n);
      for (auto const& [p, c] : x._terms) {
        add(p, detail::checked_mul(c, -1));
      }
      return *this;
    }

    friend GroupRingElem operator+(GroupRingElem a, GroupRingElem const& b) {
      return a += b;
    }

    friend GroupRingElem operator-(GroupRingElem a, GroupRingElem const& b) {
      return a -= b;
    }

    friend GroupRingElem operator-(GroupRingElem const& a) {
      return GroupRingElem(a._n) - a;
    }

    friend GroupRingElem operator*(std::int64_t s, GroupRingElem const& a) {
      GroupRingElem out(a._n);
      for (auto const& [p, c] : a._terms) {
        out.add(p, detail::checked_mul(s, c));
      }
      return out;
    }

    friend GroupRingElem operator*(GroupRingElem const& a,
                                   GroupRingElem const& b) {
      a.check(b._n);
      GroupRingElem out(a._n);
      for (auto const& [p, c] : a._terms) {
        for (auto const& [q, d] : b._terms) {
          out.add(compose(p, q), detail::checked_mul(c, d));
        }
      }
      return out;
    }

    bool operator==(GroupRingElem const&) const = default;

    // Sum of the coefficients.
    std::int64_t augmentation() const {
      std::int64_t s = 0;
      for (auto const& [p, c] : _terms) {
        s = detail::checked_add(s, c);
      }
      return s;
    }

    // "1 - 3*[2,1,3]"; the identity prints as 1.
    std::string to_string() const {
      if (_terms.empty()) {
        return "0";
      }
      std::string out;
      for (auto const& [p, c] : _terms) {
        std::int64_t a = c < 0 ? -c : c;
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (p.is_identity()) {
          out += std::to_string(a);
        } else {
          out += (a == 1 ? "" : std::to_string(a) + "*") + p.to_string();
        }
      }
      return out;
    }

   private:
    void check(int m) const {
      if (m != _n) {
        throw DegreeMismatch("group ring elements of degrees "
                             + std::to_string(_n) + " and "
                             + std::to_string(m));
      }
    }

    int                                 _n;
    std::map<Permutation, std::int64_t> _terms;
  };

  ////////////////////////////////////////////////////////////////////////
  // Basis labels
  ////////////////////////////////////////////////////////////////////////

  // The 2-cells: c(i,j) for the squaring relation, d(i,j,k,l) for the
  // commutation of disjoint transpositions, e(i,k,j) for the conjugation
  // relation s(i,j) s(j,k) s(i,j)^-1 = s(i,k).
  struct Cell2 {
    enum class Tag : std::uint8_t { C, D, E };

    Tag              tag;
    std::vector<int> idx;  // (i,j), (i,j,k,l) or (i,k,j)

    static Cell2 c(int i, int j) {
      if (!(1 <= i && i < j)) {
        throw InvalidArgument("c-cell needs 1 <= i < j");
      }
      return {Tag::C, {i, j}};
    }

    static Cell2 d(int i, int j, int k, int l) {
      if (!(1 <= i && i < j && 1 <= k && k < l)) {
        throw InvalidArgument("d-cell needs i < j and k < l");
      }
      if (i == k || i == l || j == k || j == l) {
        throw InvalidArgument("d-cell needs disjoint pairs");
      }
      return {Tag::D, {i, j, k, l}};
    }

    static Cell2 e(int i, int k, int j) {
      if (i < 1 || j < 1 || k < 1 || i == j || j == k || i == k) {
        throw InvalidArgument("e-cell needs three distinct indices");
      }
      return {Tag::E, {i, k, j}};
    }

    int max_index() const {
      int m = 0;
      for (int x : idx) {
        m = x > m ? x : m;
      }
      return m;
    }

    auto operator<=>(Cell2 const&) const = default;

    // "c:1,2", "d:1,3,2,4", "e:1,2,3"
    std::string to_string() const {
      std::string s = tag == Tag::C ? "c:" : tag == Tag::D ? "d:" : "e:";
      for (size_t k = 0; k < idx.size(); ++k) {
        s += (k ? "," : "") + std::to_string(idx[k]);
      }
      return s;
    }
  };

  inline Cell2 parse_cell(std::string_view text) {
    auto const colon = text.find(':');
    if (colon == std::string_view::npos || colon != 1) {
      throw InvalidArgument("cell must look like c:i,j, d:i,j,k,l or e:i,k,j; "
                            "got \"" + std::string(text) + "\"");
    }
    auto const v = detail::parse_int_list(text.substr(2), "cell indices");
    switch (text[0]) {
      case 'c':
        if (v.size() == 2) {
          return Cell2::c(v[0], v[1]);
        }
        break;
      case 'd':
        if (v.size() == 4) {
          return Cell2::d(v[0], v[1], v[2], v[3]);
        }
        break;
      case 'e':
        if (v.size() == 3) {
          return Cell2::e(v[0], v[1], v[2]);
        }
        break;
      default:
        throw InvalidArgument("unknown cell type '" + std::string(1, text[0])
                              + "'");
    }
    throw InvalidArgument("wrong number of indices in cell \""
                          + std::string(text) + "\"");
  }

  inline std::ostream& operator<<(std::ostream& os, Cell2 const& c) {
    return os << c.to_string();
  }

  // The 1-cell x(i,j), the edge from x0 to s(i,j) x0.
  struct Cell1 {
    UPair pair;
    auto  operator<=>(Cell1 const&) const = default;
    std::string to_string() const {
      return "x(" + pair.to_string() + ")";
    }
  };

  struct Cell0 {
    auto        operator<=>(Cell0 const&) const = default;
    std::string to_string() const {
      return "x0";
    }
  };

  // Normalized bar labels; entries are never the identity.
  struct Bar2 {
    Permutation p1, p2;
    auto        operator<=>(Bar2 const&) const = default;
    std::string to_string() const {
      return "[" + p1.to_string() + "|" + p2.to_string() + "]";
    }
  };

  struct Bar1 {
    Permutation p1;
    auto        operator<=>(Bar1 const&) const = default;
    std::string to_string() const {
      return "[" + p1.to_string() + "]";
    }
  };

  struct Bar0 {
    auto        operator<=>(Bar0 const&) const = default;
    std::string to_string() const {
      return "[ ]";
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Free modules
  ////////////////////////////////////////////////////////////////////////

  template <class Label>
  class FreeModElem {
   public:
    explicit FreeModElem(int n = 1) : _n(n) {}

    FreeModElem(GroupRingElem const& r, Label const& b) : _n(r.degree()) {
      add(b, r);
    }

    int degree() const noexcept {
      return _n;
    }

    std::map<Label, GroupRingElem> const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    GroupRingElem coefficient(Label const& b) const {
      auto it = _terms.find(b);
      return it == _terms.end() ? GroupRingElem(_n) : it->second;
    }

    FreeModElem& add(Label const& b, GroupRingElem const& r) {
      if (r.degree() != _n) {
        throw DegreeMismatch("free module coefficient of degree "
                             + std::to_string(r.degree()));
      }
      if (r.is_zero()) {
        return *this;
      }
      auto [it, fresh] = _terms.try_emplace(b, GroupRingElem(_n));
      it->second += r;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
      return *this;
    }

    FreeModElem& operator+=(FreeModElem const& x) {
      for (auto const& [b, r] : x._terms) {
        add(b, r);
      }
      return *this;
    }

    FreeModElem& operator-=(FreeModElem const& x) {
      for (auto const& [b, r] : x._terms) {
        add(b, -r);
      }
      return *this;
    }

    friend FreeModElem operator+(FreeModElem a, FreeModElem const& b) {
      return a += b;
    }

    friend FreeModElem operator-(FreeModElem a, FreeModElem const& b) {
      return a -= b;
    }

    // Left action of the group ring.
    friend FreeModElem operator*(GroupRingElem const& s, FreeModElem const& x) {
      FreeModElem out(x._n);
      for (auto const& [b, r] : x._terms) {
        out.add(b, s * r);
      }
      return out;
    }

    bool operator==(FreeModElem const&) const = default;

    std::string to_string() const {
      if (_terms.empty()) {
        return "0";
      }
      std::string out;
      for (auto const& [b, r] : _terms) {
        out += (out.empty() ? "" : " + ") + std::string("(") + r.to_string()
               + ")" + b.to_string();
      }
      return out;
    }

   private:
    int                            _n;
    std::map<Label, GroupRingElem> _terms;
  };

  template <class Label>
  std::ostream& operator<<(std::ostream& os, FreeModElem<Label> const& x) {
    return os << x.to_string();
  }

  namespace detail {
    inline Permutation tr(int n, int i, int j) {
      return Permutation::transposition(n, i, j);
    }

    inline GroupRingElem g1(int n) {
      return GroupRingElem::one(n);
    }

    inline GroupRingElem gs(int n, int i, int j) {
      return GroupRingElem(tr(n, i, j));
    }

    inline void check_cell(Cell2 const& c, int n) {
      if (c.max_index() > n) {
        throw InvalidArgument("cell " + c.to_string()
                              + " does not fit degree " + std::to_string(n));
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // The resolution R_*
  ////////////////////////////////////////////////////////////////////////

  // All 2-cells of degree n: c over pairs, d over ordered pairs of disjoint
  // pairs, e over ordered triples of distinct indices.
  inline std::vector<Cell2> all_cells(int n) {
    std::vector<Cell2> out;
    auto const         pairs = all_pairs(n);
    for (auto const& x : pairs) {
      out.push_back(Cell2::c(x.lo(), x.hi()));
    }
    for (auto const& x : pairs) {
      for (auto const& y : pairs) {
        if (!x.contains(y.lo()) && !x.contains(y.hi())) {
          out.push_back(Cell2::d(x.lo(), x.hi(), y.lo(), y.hi()));
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= n; ++j) {
          if (i != j && j != k && i != k) {
            out.push_back(Cell2::e(i, k, j));
          }
        }
      }
    }
    return out;
  }

  // The boundary of a 2-cell is read off its attaching loop. The squaring
  // cell is glued along x(i,j) followed by s(i,j) x(i,j), so its boundary is
  // (1 + s(i,j)) x(i,j).
  inline FreeModElem<Cell1> boundary_R2(Cell2 const& c, int n) {
    detail::check_cell(c, n);
    using detail::g1;
    using detail::gs;
    auto x = [](int i, int j) { return Cell1{UPair(i, j)}; };
    FreeModElem<Cell1> out(n);
    auto const&        v = c.idx;
    switch (c.tag) {
      case Cell2::Tag::C:
        out.add(x(v[0], v[1]), g1(n) + gs(n, v[0], v[1]));
        break;
      case Cell2::Tag::D: {
        int const i = v[0], j = v[1], k = v[2], l = v[3];
        out.add(x(i, j), g1(n));
        out.add(x(k, l), gs(n, i, j));
        out.add(x(i, j), -gs(n, k, l));
        out.add(x(k, l), -g1(n));
        break;
      }
      case Cell2::Tag::E: {
        int const i = v[0], k = v[1], j = v[2];
        out.add(x(i, j), g1(n));
        out.add(x(j, k), gs(n, i, j));
        out.add(x(i, j), -gs(n, i, k));
        out.add(x(i, k), -g1(n));
        break;
      }
    }
    return out;
  }

  inline FreeModElem<Cell0> boundary_R1(FreeModElem<Cell1> const& x) {
    int const          n = x.degree();
    FreeModElem<Cell0> out(n);
    for (auto const& [b, r] : x.terms()) {
      out.add(Cell0{}, r * (detail::gs(n, b.pair.lo(), b.pair.hi())
                            - detail::g1(n)));
    }
    return out;
  }

  inline FreeModElem<Cell1> boundary_R2(FreeModElem<Cell2> const& x) {
    FreeModElem<Cell1> out(x.degree());
    for (auto const& [b, r] : x.terms()) {
      out += r * boundary_R2(b, x.degree());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The normalized bar resolution
  ////////////////////////////////////////////////////////////////////////

  inline FreeModElem<Bar2> bar(Permutation const& p1, Permutation const& p2) {
    FreeModElem<Bar2> out(p1.degree());
    if (!p1.is_identity() && !p2.is_identity()) {
      out.add({p1, p2}, GroupRingElem::one(p1.degree()));
    }
    return out;
  }

  inline FreeModElem<Bar1> bar(Permutation const& p1) {
    FreeModElem<Bar1> out(p1.degree());
    if (!p1.is_identity()) {
      out.add({p1}, GroupRingElem::one(p1.degree()));
    }
    return out;
  }

  inline FreeModElem<Bar0> bar(int n) {
    return FreeModElem<Bar0>(GroupRingElem::one(n), Bar0{});
  }

  // [p1|p2] -> p1 [p2] - [p1 p2] + [p1], dropping degenerate labels.
  inline FreeModElem<Bar1> boundary_P(FreeModElem<Bar2> const& x) {
    FreeModElem<Bar1> out(x.degree());
    for (auto const& [b, r] : x.terms()) {
      out += (r * GroupRingElem(b.p1)) * bar(b.p2);
      out -= r * bar(compose(b.p1, b.p2));
      out += r * bar(b.p1);
    }
    return out;
  }

  // [p] -> (p - 1) [ ]
  inline FreeModElem<Bar0> boundary_P(FreeModElem<Bar1> const& x) {
    int const         n = x.degree();
    FreeModElem<Bar0> out(n);
    for (auto const& [b, r] : x.terms()) {
      out.add(Bar0{}, r * (GroupRingElem(b.p1) - GroupRingElem::one(n)));
    }
    return out;
  }

  inline std::int64_t augmentation(FreeModElem<Bar0> const& x) {
    return x.coefficient(Bar0{}).augmentation();
  }

  inline std::int64_t augmentation(FreeModElem<Cell0> const& x) {
    return x.coefficient(Cell0{}).augmentation();
  }

  ////////////////////////////////////////////////////////////////////////
  // The chain map gamma
  ////////////////////////////////////////////////////////////////////////

  inline FreeModElem<Bar2> gamma(Cell2 const& c, int n) {
    detail::check_cell(c, n);
    using detail::tr;
    auto const& v = c.idx;
    switch (c.tag) {
      case Cell2::Tag::C:
        return bar(tr(n, v[0], v[1]), tr(n, v[0], v[1]));
      case Cell2::Tag::D: {
        auto const a = tr(n, v[0], v[1]), b = tr(n, v[2], v[3]);
        return bar(a, b) - bar(b, a);
      }
      case Cell2::Tag::E: {
        int const i = v[0], k = v[1], j = v[2];
        return bar(tr(n, i, j), tr(n, j, k)) - bar(tr(n, i, k), tr(n, i, j));
      }
    }
    return FreeModElem<Bar2>(n);
  }

  inline FreeModElem<Bar1> gamma(FreeModElem<Cell1> const& x) {
    FreeModElem<Bar1> out(x.degree());
    for (auto const& [b, r] : x.terms()) {
      out += r * bar(Permutation::transposition(x.degree(), b.pair));
    }
    return out;
  }

  inline FreeModElem<Bar0> gamma(FreeModElem<Cell0> const& x) {
    FreeModElem<Bar0> out(x.degree());
    for (auto const& [b, r] : x.terms()) {
      out.add(Bar0{}, r);
    }
    return out;
  }

  inline FreeModElem<Bar2> gamma(FreeModElem<Cell2> const& x) {
    FreeModElem<Bar2> out(x.degree());
    for (auto const& [b, r] : x.terms()) {
      out += r * gamma(b, x.degree());
    }
    return out;
  }

  // d gamma = gamma d on every 2-cell and every 1-cell of degree n.
  inline VerificationReport check_chain_map(int n) {
    if (n < 2) {
      throw InvalidArgument("check_chain_map needs n >= 2");
    }
    VerificationReport report{"chainmap", n, std::nullopt, {}};
    for (auto const& c : all_cells(n)) {
      auto const lhs = boundary_P(gamma(c, n));
      auto const rhs = gamma(boundary_R2(c, n));
      nlohmann::ordered_json d;
      d["value"] = lhs.to_string();
      if (lhs != rhs) {
        d["other"] = rhs.to_string();
      }
      report.add("dim2 " + c.to_string(), lhs == rhs, std::move(d));
    }
    for (auto const& x : all_pairs(n)) {
      FreeModElem<Cell1> e(GroupRingElem::one(n), Cell1{x});
      auto const         lhs = boundary_P(gamma(e));
      auto const         rhs = gamma(boundary_R1(e));
      nlohmann::ordered_json d;
      d["value"] = lhs.to_string();
      if (lhs != rhs) {
        d["other"] = rhs.to_string();
      }
      report.add("dim1 x:" + x.to_string(), lhs == rhs, std::move(d));
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cocycles on 2-cells
  ////////////////////////////////////////////////////////////////////////

  // The integral cocycle classifying G_n.
  inline PairVector phi(Cell2 const& c, int n) {
    detail::check_cell(c, n);
    PairVector  out(n);
    auto const& v = c.idx;
    auto g = [&out](int a, int b, std::int64_t s) { out.add(UPair(a, b), s); };
    switch (c.tag) {
      case Cell2::Tag::C:
        g(v[0], v[1], 1);
        break;
      case Cell2::Tag::D: {
        int const i = v[0], j = v[1], k = v[2], l = v[3];
        if (i < k && k < j && j < l) {
          g(i, k, 1);
          g(i, l, -1);
          g(k, j, -1);
          g(j, l, 1);
        } else if (k < i && i < l && l < j) {
          g(i, k, -1);
          g(k, j, 1);
          g(i, l, 1);
          g(l, j, -1);
        }
        break;
      }
      case Cell2::Tag::E: {
        int const i = v[0], k = v[1], j = v[2];
        if (detail::cyclic_order(i, k, j)) {
          g(i, j, 1);
          g(k, j, -1);
        }
        break;
      }
    }
    return out;
  }

  // The mod 2 cocycle classifying Z_n.
  inline PairVector kappa(Cell2 const& c, int n) {
    detail::check_cell(c, n);
    PairVector  out(n, Ring::Z2);
    auto const& v = c.idx;
    auto g = [&out](int a, int b) { out.add(UPair(a, b), 1); };
    switch (c.tag) {
      case Cell2::Tag::C:
        g(v[0], v[1]);
        break;
      case Cell2::Tag::D: {
        int const i = v[0], j = v[1], k = v[2], l = v[3];
        if ((i < k && k < j && j < l) || (k < i && i < l && l < j)) {
          g(i, k);
          g(k, j);
          g(i, l);
          g(l, j);
        }
        break;
      }
      case Cell2::Tag::E: {
        int const i = v[0], k = v[1], j = v[2];
        if (detail::cyclic_order(i, k, j)) {
          g(i, j);
          g(j, k);
        }
        break;
      }
    }
    return out;
  }

  // A bar 2-chain evaluated on the section cocycle,
  // r [p1|p2] -> theta(r) c(p1, p2).
  inline PairVector evaluate_cocycle(FreeModElem<Bar2> const& x, RingTag ring) {
    int const  n = x.degree();
    auto const& G = ExtGroup::shared(n, ring);
    PairVector  out(n, ring.kind);
    for (auto const& [b, r] : x.terms()) {
      auto const& c = G.cocycle(b.p1, b.p2);
      for (auto const& [p, k] : r.terms()) {
        out += k * theta(p, c);
      }
    }
    return out;
  }

  // The section cocycle pulled back along gamma to a 2-cell.
  inline PairVector cocycle_via_section(Cell2 const& c, int n, RingTag ring) {
    return evaluate_cocycle(gamma(c, n), ring);
  }

}  // namespace modbraid

#endif  // MODBRAID_CHAIN_HPP_
