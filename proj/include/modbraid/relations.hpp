#ifndef MODBRAID_RELATIONS_HPP_
#define MODBRAID_RELATIONS_HPP_

// Relations of G_n, G_n^t and Z_n as symbolic words in the half twists
// s(i,j) and the kernel generators g(i,j), plus the checks built on them:
// relation tables, the splitting of G_n^t for even t, the search for a
// splitting of Z_n, the normal generators of B_n[4] and the order of Z_n.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braid.hpp"
#include "error.hpp"
#include "ext_group.hpp"
#include "figures.hpp"
#include "pair_vector.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace modbraid {

  ////////////////////////////////////////////////////////////////////////
  // Symbolic words
  ////////////////////////////////////////////////////////////////////////

  struct SymLetter {
    enum class Kind : std::uint8_t { Sigma, G };

    Kind         kind;
    UPair        pair;
    std::int64_t exponent = 1;

    bool operator==(SymLetter const&) const = default;

    // "s(1,3)", "g(2,4)^-2"
    std::string to_string() const {
      std::string s = (kind == Kind::Sigma ? "s(" : "g(") + pair.to_string()
                      + ")";
      if (exponent != 1) {
        s += "^" + std::to_string(exponent);
      }
      return s;
    }
  };

  using SymWord = std::vector<SymLetter>;

  inline SymWord sym_sigma(int i, int j, std::int64_t e = 1) {
    return {{SymLetter::Kind::Sigma, UPair(i, j), e}};
  }

  inline SymWord sym_g(int i, int j, std::int64_t e = 1) {
    return {{SymLetter::Kind::G, UPair(i, j), e}};
  }

  inline SymWord operator*(SymWord u, SymWord const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  inline SymWord sym_inverse(SymWord const& w) {
    SymWord out(w.rbegin(), w.rend());
    for (auto& x : out) {
      x.exponent = -x.exponent;
    }
    return out;
  }

  inline SymWord sym_commutator(SymWord const& u, SymWord const& v) {
    return u * v * sym_inverse(u) * sym_inverse(v);
  }

  // Product of g(x)^c over the entries, in pair order.
  inline SymWord sym_kernel(std::map<UPair, std::int64_t> const& coeffs) {
    SymWord out;
    for (auto const& [x, c] : coeffs) {
      if (c != 0) {
        out.push_back({SymLetter::Kind::G, x, c});
      }
    }
    return out;
  }

  inline std::string to_string(SymWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto const& x : w) {
      s += (s.empty() ? "" : " ") + x.to_string();
    }
    return s;
  }

  // Image of a single generator (exponent ignored) in some model of the
  // group.
  using GeneratorMap = std::function<ExtElement(SymLetter::Kind, UPair)>;

  inline GeneratorMap standard_generators(ExtGroup const& G) {
    return [&G](SymLetter::Kind k, UPair x) {
      return k == SymLetter::Kind::Sigma ? G.sigma(x.lo(), x.hi())
                                         : G.g(x.lo(), x.hi());
    };
  }

  inline ExtElement evaluate(SymWord const&     w,
                             ExtGroup const&    G,
                             GeneratorMap const& images) {
    auto out = G.identity();
    for (auto const& x : w) {
      auto const e = x.exponent;
      if (e < INT32_MIN || e > INT32_MAX) {
        throw InvalidArgument("exponent out of range: " + x.to_string());
      }
      out = G.mul(out, G.pow(images(x.kind, x.pair), static_cast<int>(e)));
    }
    return out;
  }

  inline ExtElement evaluate(SymWord const& w, ExtGroup const& G) {
    return evaluate(w, G, standard_generators(G));
  }

  // s(i,j) -> B(i,j), g(i,j) -> B(i,j)^2.
  inline BraidWord realize(SymWord const& w, int n) {
    BraidWord out(n);
    for (auto const& x : w) {
      auto const base = x.kind == SymLetter::Kind::Sigma ? band_word(n, x.pair)
                                                         : full_twist(n, x.pair);
      out.append(power(base, static_cast<int>(x.exponent)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relation tables
  ////////////////////////////////////////////////////////////////////////

  enum class RelationTable : std::uint8_t { G, Gt, Z };

  inline std::string table_name(RelationTable t) {
    switch (t) {
      case RelationTable::G: return "G_n";
      case RelationTable::Gt: return "G_n^t";
      case RelationTable::Z: return "Z_n";
    }
    return "?";
  }

  inline RingTag table_ring(RelationTable table, std::int64_t t) {
    switch (table) {
      case RelationTable::G: return RingTag::Z();
      case RelationTable::Gt: return RingTag::Z(t);
      case RelationTable::Z: return RingTag::Z2();
    }
    return RingTag::Z();
  }

  struct RelationInstance {
    std::string      relation;
    std::vector<int> indices;
    SymWord          lhs;
    SymWord          rhs;
    std::string      note;
  };

  // Every row of the table over all valid index tuples. Pairs are written
  // with i < j and k < l where the row names two pairs.
  //
  // Row 5 is instantiated over disjoint pairs: the commutator of two half
  // twists sharing one strand is not a kernel element. Row 6 is checked in
  // its general form, g(k,l) -> g(s(k),s(l)); for G_n^t and Z_n the printed
  // row only covers part of this and a note records each instance where the
  // printed right-hand side disagrees.
  inline std::vector<RelationInstance>
  relation_instances(RelationTable table, int n, std::int64_t t = 1) {
    if (n < 1) {
      throw InvalidArgument("degree must be positive");
    }
    if (table != RelationTable::Gt) {
      t = 1;
    } else if (t < 1) {
      throw InvalidArgument("scale t must be at least 1");
    }
    std::string const prefix = table == RelationTable::Gt ? "R^t"
                               : table == RelationTable::Z ? "r"
                                                           : "R";
    auto row = [&](int k) { return prefix + std::to_string(k); };

    std::vector<RelationInstance> out;
    auto const                    pairs = all_pairs(n);

    if (table == RelationTable::Z) {
      for (auto const& x : pairs) {
        out.push_back({row(0), {x.lo(), x.hi()},
                       sym_g(x.lo(), x.hi(), 2), {}, {}});
      }
    }

    for (size_t a = 0; a < pairs.size(); ++a) {
      for (size_t b = a + 1; b < pairs.size(); ++b) {
        auto const x = pairs[a], y = pairs[b];
        out.push_back({row(1),
                       {x.lo(), x.hi(), y.lo(), y.hi()},
                       sym_commutator(sym_g(x.lo(), x.hi()),
                                      sym_g(y.lo(), y.hi())),
                       {},
                       {}});
      }
    }

    for (auto const& x : pairs) {
      out.push_back({row(2), {x.lo(), x.hi()},
                     sym_sigma(x.lo(), x.hi(), 2), sym_g(x.lo(), x.hi(), t),
                     {}});
    }

    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k) {
            continue;
          }
          if (detail::cyclic_order(k, i, j)) {
            out.push_back({row(3), {i, j, k},
                           sym_sigma(i, j) * sym_sigma(k, j)
                               * sym_sigma(i, j, -1),
                           sym_sigma(i, k), {}});
          } else {
            out.push_back({row(4), {i, j, k},
                           sym_sigma(i, j, -1) * sym_sigma(j, k)
                               * sym_sigma(i, j),
                           sym_sigma(i, k), {}});
          }
        }
      }
    }

    for (auto const& x : pairs) {
      for (auto const& y : pairs) {
        if (x.contains(y.lo()) || x.contains(y.hi())) {
          continue;
        }
        int const i = x.lo(), j = x.hi(), k = y.lo(), l = y.hi();
        std::map<UPair, std::int64_t> c;
        std::int64_t const            s = table == RelationTable::Z ? 1 : t;
        if (i < k && k < j && j < l) {
          c[UPair(i, k)] += s;
          c[UPair(i, l)] -= s;
          c[UPair(j, k)] -= s;
          c[UPair(j, l)] += s;
        } else if (k < i && i < l && l < j) {
          c[UPair(k, i)] -= s;
          c[UPair(k, j)] += s;
          c[UPair(i, l)] += s;
          c[UPair(l, j)] -= s;
        }
        if (table == RelationTable::Z) {
          for (auto& [key, v] : c) {
            v = v < 0 ? -v : v;
          }
        }
        out.push_back({row(5), {i, j, k, l},
                       sym_commutator(sym_sigma(i, j), sym_sigma(k, l)),
                       sym_kernel(c), {}});
      }
    }

    for (auto const& x : pairs) {
      auto const s = Permutation::transposition(n, x);
      for (auto const& y : pairs) {
        int const i = x.lo(), j = x.hi(), k = y.lo(), l = y.hi();
        auto const img = pair_action(s, y);
        RelationInstance r{row(6), {i, j, k, l},
                           sym_sigma(i, j) * sym_g(k, l) * sym_sigma(i, j, -1),
                           sym_g(img.lo(), img.hi()), {}};
        std::optional<UPair> printed;
        bool                 undefined = false;
        if (table == RelationTable::Gt) {
          bool const one = (x.contains(k) ? 1 : 0) + (x.contains(l) ? 1 : 0)
                           == 1;
          printed = one && j == l ? UPair(i, k) : y;
        } else if (table == RelationTable::Z) {
          if (j == l) {
            if (i == k) {
              undefined = true;
            } else {
              printed = UPair(i, k);
            }
          } else {
            printed = y;
          }
        }
        if (undefined) {
          r.note = "printed right-hand side g(" + std::to_string(i) + ","
                   + std::to_string(k) + ") is undefined; general form "
                   + "checked";
        } else if (printed && *printed != img) {
          r.note = "printed right-hand side g(" + printed->to_string()
                   + ") differs from the general form g(" + img.to_string()
                   + "), which is checked";
        }
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  // Checks each instance in the model G given by the generator images. With
  // braid_ring set, both sides are also realized as braid words and compared
  // through elem_from_word in that ring.
  inline std::vector<RelationRow>
  check_relations(std::vector<RelationInstance> const& instances,
                  ExtGroup const&                      G,
                  GeneratorMap const&                  images,
                  std::optional<RingTag>               braid_ring = {}) {
    std::vector<RelationRow> rows;
    rows.reserve(instances.size());
    int const n = G.degree();
    for (auto const& r : instances) {
      auto const lhs  = evaluate(r.lhs, G, images);
      auto const rhs  = evaluate(r.rhs, G, images);
      bool       pass = lhs == rhs;
      std::string note = r.note;
      auto        add_note = [&note](std::string const& s) {
        note += (note.empty() ? "" : "; ") + s;
      };
      if (!pass) {
        add_note("lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
      }
      if (braid_ring) {
        auto const bl = elem_from_word(realize(r.lhs, n), *braid_ring);
        auto const br = elem_from_word(realize(r.rhs, n), *braid_ring);
        if (bl != br) {
          pass = false;
          add_note("braid words disagree: " + bl.to_string() + " vs "
                   + br.to_string());
        }
      }
      rows.push_back({r.relation, r.indices, pass, to_string(r.lhs),
                      to_string(r.rhs), std::move(note)});
    }
    return rows;
  }

  // Every row of the table in the cocycle model; rows of the G_n and Z_n
  // tables are also checked on braid words.
  inline RelationReport verify_relation_table(RelationTable table,
                                              int           n,
                                              std::int64_t  t = 1) {
    if (table != RelationTable::Gt) {
      t = 1;
    }
    auto const ring = table_ring(table, t);
    auto const& G   = ExtGroup::shared(n, ring);
    std::optional<RingTag> braid_ring;
    if (table != RelationTable::Gt) {
      braid_ring = ring;
    }
    RelationReport report{table_name(table), n, t, {}};
    report.rows = check_relations(relation_instances(table, n, t), G,
                                  standard_generators(G), braid_ring);
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cohomologous models
  ////////////////////////////////////////////////////////////////////////

  // The extension with cocycle shifted by the coboundary of h, where the map
  // (p, v) -> (p, v - h(p)) is an isomorphism from the standard model:
  //
  //   c'(p, q) = theta(pq) [theta((pq)^-1) c(p, q) + theta(q^-1) h(p)
  //                         + h(q) - h(pq)].
  //
  // h(identity) is taken to be zero.
  class ShiftedModel {
   public:
    using Shift = std::function<PairVector(Permutation const&)>;

    ShiftedModel(int n, RingTag ring, Shift h) : _h(std::move(h)) {
      auto const& base = ExtGroup::shared(n, ring);
      auto        hh   = [this, ring](Permutation const& p) {
        return p.is_identity() ? PairVector(p.degree(), ring.kind)
                                        : _h(p).in_ring(ring.kind);
      };
      _group = std::make_unique<ExtGroup>(
          n, ring, [&base, hh](Permutation const& p, Permutation const& q) {
            auto const pq = compose(p, q);
            PairVector v  = theta(pq.inverse(), base.cocycle(p, q));
            v += theta(q.inverse(), hh(p));
            v += hh(q);
            v -= hh(pq);
            return theta(pq, v);
          });
      _shift = hh;
    }

    ExtGroup const& group() const noexcept {
      return *_group;
    }

    PairVector shift(Permutation const& p) const {
      return _shift(p);
    }

    // Images of the standard generators under the isomorphism.
    GeneratorMap generators() const {
      return [this](SymLetter::Kind k, UPair x) {
        auto const& G = *_group;
        if (k == SymLetter::Kind::G) {
          return G.g(x.lo(), x.hi());
        }
        auto const s = Permutation::transposition(G.degree(), x);
        return G.element(s, -_shift(s));
      };
    }

   private:
    Shift                     _h;
    Shift                     _shift;
    std::unique_ptr<ExtGroup> _group;
  };

  ////////////////////////////////////////////////////////////////////////
  // Splitting of G_n^t for even t
  ////////////////////////////////////////////////////////////////////////

  // w(i) = s(i,i+1) g(i,i+1)^(-t/2), the lift of the adjacent transposition.
  inline ExtElement omega(ExtGroup const& G, int i) {
    auto const t = G.ring().scale;
    return G.element(Permutation::transposition(G.degree(), i, i + 1),
                     -(t / 2) * PairVector::unit(G.degree(), UPair(i, i + 1)));
  }

  // Checks that w(1), ..., w(n-1) satisfy the Coxeter relations of S_n in
  // G_n^t, so that they define a splitting.
  inline RelationReport omega_splitting_check(int n, std::int64_t t) {
    if (t % 2 != 0) {
      throw OddScale("the splitting needs an even scale, got t = "
                     + std::to_string(t));
    }
    auto const& G = ExtGroup::shared(n, RingTag::Z(t));
    RelationReport report{"omega", n, t, {}};
    auto w  = [&](int i) { return omega(G, i); };
    auto nm = [](int i) { return "w" + std::to_string(i); };
    auto push = [&](std::string rel, std::vector<int> idx, std::string lhs,
                    ExtElement const& value) {
      bool        pass = value.is_identity();
      std::string note = pass ? "" : "value " + value.to_string();
      report.rows.push_back(
          {std::move(rel), std::move(idx), pass, std::move(lhs), "1", note});
    };
    for (int i = 1; i < n; ++i) {
      push("square", {i}, nm(i) + " " + nm(i), G.mul(w(i), w(i)));
    }
    for (int i = 1; i + 1 < n; ++i) {
      auto const a = w(i), b = w(i + 1);
      auto const lhs = G.mul(G.mul(a, b), a);
      auto const rhs = G.mul(G.mul(b, a), b);
      push("braid", {i, i + 1},
           nm(i) + " " + nm(i + 1) + " " + nm(i) + " (" + nm(i + 1) + " "
               + nm(i) + " " + nm(i + 1) + ")^-1",
           G.mul(lhs, G.inv(rhs)));
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        push("commute", {i, j}, "[" + nm(i) + "," + nm(j) + "]",
             G.commutator(w(i), w(j)));
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Splittings of Z_n
  ////////////////////////////////////////////////////////////////////////

  inline constexpr int default_search_guard = 4;

  // Exhaustive search for lifts (s(i,i+1), v_i) of the adjacent
  // transpositions into Z_n satisfying the Coxeter relations. Returns the
  // lifts when one exists.
  inline std::optional<std::vector<ExtElement>>
  search_splitting_Zn(int n, int guard = default_search_guard) {
    if (n < 1) {
      throw InvalidArgument("degree must be positive");
    }
    if (n > guard) {
      throw SearchSpaceTooLarge("splitting search is limited to n <= "
                                + std::to_string(guard) + ", got "
                                + std::to_string(n));
    }
    auto const& Z = ExtGroup::shared(n, RingTag::Z2());
    auto const  m = pair_count(n);

    // Lifts of each generator that square to the identity.
    std::vector<std::vector<ExtElement>> cand(n);
    for (int i = 1; i < n; ++i) {
      auto const s = Permutation::transposition(n, i, i + 1);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        PairVector v(n, Ring::Z2);
        size_t     k = 0;
        for (auto const& x : all_pairs(n)) {
          v.set(x, (bits >> k++) & 1);
        }
        auto a = Z.element(s, v);
        if (Z.mul(a, a).is_identity()) {
          cand[i].push_back(std::move(a));
        }
      }
    }

    std::vector<ExtElement>                      chosen;
    std::function<bool(int)> extend = [&](int i) {
      if (i == n) {
        return true;
      }
      for (auto const& a : cand[i]) {
        bool ok = true;
        if (i >= 2) {
          auto const& b = chosen[i - 2];
          ok = Z.mul(Z.mul(b, a), b) == Z.mul(Z.mul(a, b), a);
        }
        for (int j = 1; ok && j + 1 < i; ++j) {
          ok = Z.commutator(chosen[j - 1], a).is_identity();
        }
        if (ok) {
          chosen.push_back(a);
          if (extend(i + 1)) {
            return true;
          }
          chosen.pop_back();
        }
      }
      return false;
    };
    if (extend(1)) {
      return chosen;
    }
    return std::nullopt;
  }

  // Size of the closure of the lifts of the adjacent transpositions in Z_n.
  inline std::uint64_t enumerate_Zn(int n, int guard = default_search_guard) {
    if (n < 1) {
      throw InvalidArgument("degree must be positive");
    }
    if (n > guard) {
      throw SearchSpaceTooLarge("enumeration of Z_n is limited to n <= "
                                + std::to_string(guard) + ", got "
                                + std::to_string(n));
    }
    auto const& Z   = ExtGroup::shared(n, RingTag::Z2());
    auto        key = [n](ExtElement const& a) {
      std::uint64_t bits = 0;
      for (size_t k = 0; k < pair_count(n); ++k) {
        bits |= static_cast<std::uint64_t>(a.vec.at_index(k)) << k;
      }
      return static_cast<std::uint64_t>(a.perm.rank()) << 48 | bits;
    };
    std::vector<ExtElement> gens;
    for (int i = 1; i < n; ++i) {
      gens.push_back(Z.sigma(i, i + 1));
    }
    std::unordered_set<std::uint64_t> seen{key(Z.identity())};
    std::vector<ExtElement>           frontier{Z.identity()};
    while (!frontier.empty()) {
      std::vector<ExtElement> next;
      for (auto const& a : frontier) {
        for (auto const& s : gens) {
          auto b = Z.mul(a, s);
          if (seen.insert(key(b)).second) {
            next.push_back(std::move(b));
          }
        }
      }
      frontier = std::move(next);
    }
    return seen.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal generators of B_n[4]
  ////////////////////////////////////////////////////////////////////////

  // [b_i^2, b_{i+1}^2] for i <= n-2, [b_{i,i+2}^2, b_{i+1,i+3}^2] for
  // i <= n-4, and b_i^4 for i <= n-1, in that order.
  inline std::vector<BraidWord> normal_generators_b4(int n) {
    if (n < 1) {
      throw InvalidArgument("degree must be positive");
    }
    std::vector<BraidWord> out;
    for (int i = 1; i + 1 <= n - 1; ++i) {
      out.push_back(commutator(power(artin_word(n, i), 2),
                               power(artin_word(n, i + 1), 2)));
    }
    for (int i = 1; i <= n - 4; ++i) {
      out.push_back(commutator(full_twist(n, UPair(i, i + 2)),
                               full_twist(n, UPair(i + 1, i + 3))));
    }
    for (int i = 1; i <= n - 1; ++i) {
      out.push_back(power(artin_word(n, i), 4));
    }
    return out;
  }

  // n! 2^(n(n-1)/2) (n-2) + 1: the Schreier bound on the number of
  // generators of the finite index subgroup A_n of G_n.
  inline boost::multiprecision::cpp_int schreier_bound(int n) {
    if (n < 2) {
      throw InvalidArgument("schreier_bound needs n >= 2");
    }
    boost::multiprecision::cpp_int f = 1;
    for (int k = 2; k <= n; ++k) {
      f *= k;
    }
    f <<= n * (n - 1) / 2;
    return f * (n - 2) + 1;
  }

}  // namespace modbraid

#endif  // MODBRAID_RELATIONS_HPP_
