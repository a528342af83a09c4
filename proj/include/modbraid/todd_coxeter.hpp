#ifndef MODBRAID_TODD_COXETER_HPP_
#define MODBRAID_TODD_COXETER_HPP_

// Todd-Coxeter coset enumeration over the trivial subgroup, so a complete
// table has one coset per group element.
//
// Two strategies: HLT (scan every relator from every coset in turn, defining
// cosets as needed) with a lookahead pass when the coset limit is reached,
// and Felsch (define the first undefined entry, then close up all deductions).
// Coincidences are merged with a union-find queue. Cosets keep their
// definition order through compaction, and the final table is renumbered by
// first appearance in a breadth-first walk from the subgroup coset, so the
// output depends only on the presentation and the strategy.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "presentation.hpp"

namespace modbraid {

  inline constexpr std::size_t default_coset_limit = 1'000'000;

  // MODBRAID_COSET_LIMIT if set to a positive integer, otherwise fallback.
  inline std::size_t coset_limit_from_env(
      std::size_t fallback = default_coset_limit) {
    char const* s = std::getenv("MODBRAID_COSET_LIMIT");
    if (s == nullptr || *s == '\0') {
      return fallback;
    }
    char*      end = nullptr;
    auto const v   = std::strtoull(s, &end, 10);
    if (*end != '\0' || v == 0) {
      throw InvalidArgument("MODBRAID_COSET_LIMIT must be a positive integer, "
                            "got '"
                            + std::string(s) + "'");
    }
    return static_cast<std::size_t>(v);
  }

  enum class CosetStrategy : std::uint8_t { HLT, Felsch };

  inline char const* strategy_name(CosetStrategy s) {
    return s == CosetStrategy::HLT ? "hlt" : "felsch";
  }

  inline CosetStrategy parse_strategy(std::string_view s) {
    if (s == "hlt") {
      return CosetStrategy::HLT;
    }
    if (s == "felsch") {
      return CosetStrategy::Felsch;
    }
    throw InvalidArgument("unknown strategy '" + std::string(s)
                          + "', expected hlt or felsch");
  }

  enum class CosetStatus : std::uint8_t { InProgress, Complete, Aborted };

  // Coset 0 is the subgroup coset. Column 2g is generator g, column 2g + 1
  // its inverse; -1 marks an undefined entry.
  class CosetTable {
   public:
    CosetTable() = default;
    CosetTable(int generators, std::vector<std::int32_t> rows, CosetStatus st)
        : _gens(generators), _rows(std::move(rows)), _status(st) {}

    CosetStatus status() const noexcept {
      return _status;
    }

    int generator_count() const noexcept {
      return _gens;
    }

    std::size_t size() const noexcept {
      return _gens == 0 ? (_status == CosetStatus::Complete ? 1 : 0)
                        : _rows.size() / width();
    }

    // Image of coset c under the letter x (see Word).
    std::int32_t act(std::size_t c, int x) const {
      return _rows.at(c * width() + column(x));
    }

    // Image of coset c under the word w, or -1 if the trace runs off the table.
    std::int32_t trace(std::size_t c, Word const& w) const {
      auto d = static_cast<std::int32_t>(c);
      for (int x : w) {
        d = act(static_cast<std::size_t>(d), x);
        if (d < 0) {
          return -1;
        }
      }
      return d;
    }

    std::vector<std::int32_t> const& rows() const noexcept {
      return _rows;
    }

    static std::size_t column(int x) {
      return static_cast<std::size_t>(2 * letter_gen(x) + (x < 0 ? 1 : 0));
    }

   private:
    std::size_t width() const noexcept {
      return static_cast<std::size_t>(2 * _gens);
    }

    int                       _gens = 0;
    std::vector<std::int32_t> _rows;
    CosetStatus               _status = CosetStatus::InProgress;
  };

  struct CosetResult {
    CosetTable                 table;
    std::optional<std::uint64_t> order;  // set iff complete
    std::size_t                defined  = 0;  // cosets ever defined
    std::size_t                max_live = 0;
    bool                       sound    = false;
    CosetStrategy              strategy = CosetStrategy::HLT;
  };

  // Every column a permutation, inverse columns inverse to each other, and
  // every relator closed at every coset.
  inline bool table_is_sound(CosetTable const& t, Presentation const& p) {
    if (t.status() != CosetStatus::Complete) {
      return false;
    }
    auto const n = t.size();
    for (int g = 0; g < t.generator_count(); ++g) {
      std::vector<bool> hit(n, false);
      for (std::size_t c = 0; c < n; ++c) {
        auto const d = t.act(c, gen_letter(g));
        if (d < 0 || static_cast<std::size_t>(d) >= n || hit[d]
            || t.act(static_cast<std::size_t>(d), gen_letter(g, true))
                   != static_cast<std::int32_t>(c)) {
          return false;
        }
        hit[d] = true;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      for (auto const& r : p.relators()) {
        if (t.trace(c, r) != static_cast<std::int32_t>(c)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace detail {

    class CosetEnumerator {
     public:
      CosetEnumerator(Presentation const& p, std::size_t limit, bool felsch)
          : _width(static_cast<std::size_t>(2 * p.generator_count())),
            _limit(limit),
            _felsch(felsch) {
        for (auto const& r : p.relators()) {
          auto w = cyclic_reduce(r);
          if (w.empty()) {
            continue;
          }
          Word cols;
          for (int x : w) {
            cols.push_back(static_cast<int>(CosetTable::column(x)));
          }
          _rels.push_back(std::move(cols));
        }
        if (felsch) {
          // Every rotation of every relator and its inverse, by first column.
          _by_col.resize(_width);
          for (auto const& r : _rels) {
            Word inv(r.rbegin(), r.rend());
            for (auto& x : inv) {
              x ^= 1;
            }
            for (Word const* w : std::array<Word const*, 2>{&r, &inv}) {
              for (std::size_t k = 0; k < w->size(); ++k) {
                Word rot(w->begin() + static_cast<std::ptrdiff_t>(k), w->end());
                rot.insert(rot.end(), w->begin(),
                           w->begin() + static_cast<std::ptrdiff_t>(k));
                _by_col[static_cast<std::size_t>(rot[0])].push_back(
                    std::move(rot));
              }
            }
          }
        }
        new_coset();
      }

      CosetStatus run() {
        return _felsch ? felsch() : hlt();
      }

      std::size_t defined() const noexcept {
        return _defined;
      }

      std::size_t max_live() const noexcept {
        return _max_live;
      }

      // Live cosets renumbered breadth first from coset 0.
      std::vector<std::int32_t> standardized() const {
        std::vector<std::int32_t> num(_parent.size(), -1);
        std::vector<std::int32_t> order{0};
        num[0] = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
          auto const c = static_cast<std::size_t>(order[k]);
          for (std::size_t x = 0; x < _width; ++x) {
            auto const d = entry(c, x);
            if (d >= 0 && num[static_cast<std::size_t>(d)] < 0) {
              num[static_cast<std::size_t>(d)] =
                  static_cast<std::int32_t>(order.size());
              order.push_back(d);
            }
          }
        }
        std::vector<std::int32_t> rows;
        rows.reserve(order.size() * _width);
        for (auto c : order) {
          for (std::size_t x = 0; x < _width; ++x) {
            auto const d = entry(static_cast<std::size_t>(c), x);
            rows.push_back(d < 0 ? -1 : num[static_cast<std::size_t>(d)]);
          }
        }
        return rows;
      }

     private:
      enum class Scan : std::uint8_t { Done, NoSpace };

      std::size_t               _width;
      std::size_t               _limit;
      bool                      _felsch;
      std::vector<Word>         _rels;
      std::vector<std::vector<Word>> _by_col;
      std::vector<std::int32_t> _tab;
      std::vector<std::int32_t> _parent;  // union-find; parent[c] == c if live
      std::deque<std::int32_t>  _queue;
      std::vector<std::pair<std::int32_t, int>> _deductions;
      std::size_t               _live     = 0;
      std::size_t               _defined  = 0;
      std::size_t               _max_live = 0;

      std::int32_t& entry(std::size_t c, std::size_t x) {
        return _tab[c * _width + x];
      }
      std::int32_t entry(std::size_t c, std::size_t x) const {
        return _tab[c * _width + x];
      }
      std::int32_t& entry(std::int32_t c, int x) {
        return entry(static_cast<std::size_t>(c), static_cast<std::size_t>(x));
      }

      bool live(std::int32_t c) const {
        return _parent[static_cast<std::size_t>(c)] == c;
      }

      std::size_t ids() const {
        return _parent.size();
      }

      std::int32_t new_coset() {
        auto const c = static_cast<std::int32_t>(_parent.size());
        _parent.push_back(c);
        _tab.resize(_tab.size() + _width, -1);
        ++_live;
        ++_defined;
        _max_live = std::max(_max_live, _live);
        return c;
      }

      // Defines c.x as a new coset; -1 if the limit is reached.
      std::int32_t define(std::int32_t c, int x) {
        if (_live >= _limit) {
          return -1;
        }
        auto const d = new_coset();
        entry(c, x)     = d;
        entry(d, x ^ 1) = c;
        if (_felsch) {
          _deductions.emplace_back(c, x);
        }
        return d;
      }

      void deduce(std::int32_t c, int x, std::int32_t d) {
        entry(c, x)     = d;
        entry(d, x ^ 1) = c;
        if (_felsch) {
          _deductions.emplace_back(c, x);
        }
      }

      std::int32_t rep(std::int32_t c) {
        std::int32_t r = c;
        while (_parent[static_cast<std::size_t>(r)] != r) {
          r = _parent[static_cast<std::size_t>(r)];
        }
        while (_parent[static_cast<std::size_t>(c)] != r) {
          auto const next = _parent[static_cast<std::size_t>(c)];
          _parent[static_cast<std::size_t>(c)] = r;
          c = next;
        }
        return r;
      }

      // The later of the two cosets is merged into the earlier.
      void merge(std::int32_t a, std::int32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) {
          return;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[static_cast<std::size_t>(b)] = a;
        --_live;
        _queue.push_back(b);
      }

      void coincidence(std::int32_t a, std::int32_t b) {
        merge(a, b);
        while (!_queue.empty()) {
          auto const e = _queue.front();
          _queue.pop_front();
          for (int x = 0; x < static_cast<int>(_width); ++x) {
            auto const f = entry(e, x);
            if (f < 0) {
              continue;
            }
            if (entry(f, x ^ 1) == e) {
              entry(f, x ^ 1) = -1;
            }
            auto const e1 = rep(e);
            auto const f1 = rep(f);
            if (entry(e1, x) >= 0) {
              merge(f1, entry(e1, x));
            } else if (entry(f1, x ^ 1) >= 0) {
              merge(e1, entry(f1, x ^ 1));
            } else {
              deduce(e1, x, f1);
            }
          }
        }
      }

      // Traces w from c, defining cosets as needed when fill is set.
      Scan scan(std::int32_t c, Word const& w, bool fill) {
        std::int32_t f = c, b = c;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        while (true) {
          while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) {
            f = entry(f, w[static_cast<std::size_t>(i)]);
            ++i;
          }
          if (i > j) {
            if (f != c) {
              coincidence(f, c);
            }
            return Scan::Done;
          }
          while (j >= i && entry(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) {
            b = entry(b, w[static_cast<std::size_t>(j)] ^ 1);
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return Scan::Done;
          }
          if (i == j) {
            deduce(f, w[static_cast<std::size_t>(i)], b);
            return Scan::Done;
          }
          if (!fill) {
            return Scan::Done;
          }
          if (define(f, w[static_cast<std::size_t>(i)]) < 0) {
            return Scan::NoSpace;
          }
        }
      }

      std::int32_t next_live(std::int32_t c) const {
        auto d = c + 1;
        while (static_cast<std::size_t>(d) < ids() && !live(d)) {
          ++d;
        }
        return static_cast<std::size_t>(d) < ids() ? d : -1;
      }

      // Drops dead cosets, keeping the order of the live ones; returns the new
      // number of c.
      std::int32_t compact(std::int32_t c) {
        std::vector<std::int32_t> num(ids(), -1);
        std::int32_t              k = 0;
        for (std::size_t d = 0; d < ids(); ++d) {
          if (live(static_cast<std::int32_t>(d))) {
            num[d] = k++;
          }
        }
        std::vector<std::int32_t> tab(static_cast<std::size_t>(k) * _width);
        for (std::size_t d = 0; d < ids(); ++d) {
          if (num[d] < 0) {
            continue;
          }
          for (std::size_t x = 0; x < _width; ++x) {
            auto const e = entry(d, x);
            tab[static_cast<std::size_t>(num[d]) * _width + x] =
                e < 0 ? -1 : num[static_cast<std::size_t>(e)];
          }
        }
        _tab = std::move(tab);
        _parent.resize(static_cast<std::size_t>(k));
        for (std::int32_t d = 0; d < k; ++d) {
          _parent[static_cast<std::size_t>(d)] = d;
        }
        std::vector<std::pair<std::int32_t, int>> ded;
        for (auto const& [d, x] : _deductions) {
          if (num[static_cast<std::size_t>(d)] >= 0) {
            ded.emplace_back(num[static_cast<std::size_t>(d)], x);
          }
        }
        _deductions = std::move(ded);
        return c < 0 ? c : num[static_cast<std::size_t>(c)];
      }

      bool should_compact() const {
        return ids() > _limit + _limit / 2 + 1024 && ids() > 2 * _live;
      }

      // One scan of every relator from every live coset without defining.
      void lookahead() {
        for (std::int32_t c = 0; c >= 0 && static_cast<std::size_t>(c) < ids();
             c = next_live(c)) {
          if (!live(c)) {
            continue;
          }
          for (auto const& r : _rels) {
            if (!live(c)) {
              break;
            }
            scan(c, r, false);
          }
        }
      }

      CosetStatus hlt() {
        std::int32_t c = 0;
        while (c >= 0) {
          for (std::size_t k = 0; k < _rels.size() && live(c);) {
            if (should_compact()) {
              c = compact(c);
            }
            if (scan(c, _rels[k], true) == Scan::NoSpace) {
              auto const before = _live;
              lookahead();
              if (_live >= before) {
                return CosetStatus::Aborted;
              }
              continue;
            }
            ++k;
          }
          for (int x = 0; x < static_cast<int>(_width) && live(c);) {
            if (entry(c, x) >= 0) {
              ++x;
              continue;
            }
            if (define(c, x) < 0) {
              auto const before = _live;
              lookahead();
              if (_live >= before) {
                return CosetStatus::Aborted;
              }
              continue;
            }
            ++x;
          }
          c = next_live(c);
        }
        return CosetStatus::Complete;
      }

      void process_deductions() {
        while (!_deductions.empty()) {
          auto const [c, x] = _deductions.back();
          _deductions.pop_back();
          if (!live(c)) {
            continue;
          }
          for (auto const& r : _by_col[static_cast<std::size_t>(x)]) {
            if (!live(c)) {
              break;
            }
            scan(c, r, false);
          }
          auto const d = live(c) ? entry(c, x) : -1;
          if (d < 0 || !live(d)) {
            continue;
          }
          for (auto const& r : _by_col[static_cast<std::size_t>(x ^ 1)]) {
            if (!live(d)) {
              break;
            }
            scan(d, r, false);
          }
        }
      }

      // First live coset at or after c with an undefined entry, and the
      // entry's column.
      std::pair<std::int32_t, int> first_gap(std::int32_t c) const {
        for (; c >= 0; c = next_live(c)) {
          if (!live(c)) {
            continue;
          }
          for (int x = 0; x < static_cast<int>(_width); ++x) {
            if (entry(static_cast<std::size_t>(c), static_cast<std::size_t>(x))
                < 0) {
              return {c, x};
            }
          }
        }
        return {-1, -1};
      }

      CosetStatus felsch() {
        std::int32_t c = 0;
        while (true) {
          process_deductions();
          if (should_compact()) {
            c = compact(live(c) ? c : 0);
          }
          auto gap = first_gap(c);
          if (gap.first < 0) {
            gap = first_gap(0);
          }
          if (gap.first < 0) {
            return CosetStatus::Complete;
          }
          c = gap.first;
          if (define(c, gap.second) < 0) {
            return CosetStatus::Aborted;
          }
        }
      }
    };

  }  // namespace detail

  inline CosetResult todd_coxeter(Presentation const& p,
                                  std::size_t coset_limit = default_coset_limit,
                                  CosetStrategy strategy = CosetStrategy::HLT) {
    if (coset_limit < 1) {
      throw InvalidArgument("coset limit must be at least 1");
    }
    CosetResult out;
    out.strategy = strategy;
    if (p.generator_count() == 0) {
      out.table = CosetTable(0, {}, CosetStatus::Complete);
      out.order = 1;
      out.defined = out.max_live = 1;
      out.sound = true;
      return out;
    }
    detail::CosetEnumerator e(p, coset_limit,
                              strategy == CosetStrategy::Felsch);
    auto const status = e.run();
    out.defined       = e.defined();
    out.max_live      = e.max_live();
    if (status != CosetStatus::Complete) {
      out.table = CosetTable(p.generator_count(), {}, CosetStatus::Aborted);
      return out;
    }
    out.table = CosetTable(p.generator_count(), e.standardized(),
                           CosetStatus::Complete);
    out.sound = table_is_sound(out.table, p);
    if (!out.sound) {
      throw Error("coset enumeration produced an inconsistent table");
    }
    out.order = out.table.size();
    return out;
  }

}  // namespace modbraid

#endif  // MODBRAID_TODD_COXETER_HPP_
