#include <gtest/gtest.h>

#include <random>

#include <modbraid/figures.hpp>
#include <modbraid/strand.hpp>

#include "oracle.hpp"

using namespace modbraid;

namespace {

  BraidWord from_oracle(int n, oracle::Word const& w) {
    BraidWord out(n);
    for (auto [i, e] : w) {
      out.push_back(BraidLetter::artin(i, e));
    }
    return out;
  }

  PairVector oracle_winding(int n, oracle::Word const& w) {
    PairVector v(n);
    for (auto [k, c] : oracle::linking(n, w)) {
      v.set(UPair(k.first, k.second), c);
    }
    return v;
  }

  PairVector e(int n, int i, int j) {
    return PairVector::unit(n, UPair(i, j));
  }

  // w^k where k is the order of perm_of(w); always pure.
  oracle::Word close_up(int n, oracle::Word const& w) {
    auto const p   = perm_of(from_oracle(n, w));
    auto       q   = p;
    auto       out = w;
    while (!q.is_identity()) {
      q = compose(q, p);
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  BraidWord close_up(BraidWord const& w) {
    oracle::Word ow;
    for (auto const& x : w.letters()) {
      ow.emplace_back(x.i, x.exponent);
    }
    return from_oracle(w.degree(), close_up(w.degree(), ow));
  }

}  // namespace

TEST(CrossingCounts, Examples) {
  EXPECT_EQ(crossing_counts(artin_word(2, 1))[UPair(1, 2)], 1);
  EXPECT_EQ(crossing_counts(artin_word(2, 1, -1))[UPair(1, 2)], -1);

  auto const comm = commutator(band_word(4, UPair(1, 3)),
                               band_word(4, UPair(2, 4)));
  auto const c    = crossing_counts(comm);
  EXPECT_EQ(c[UPair(1, 2)], 2);
  EXPECT_EQ(c[UPair(1, 4)], -2);
  EXPECT_EQ(c[UPair(2, 3)], -2);
  EXPECT_EQ(c[UPair(3, 4)], 2);
  EXPECT_EQ(c[UPair(1, 3)], 0);
  EXPECT_EQ(c[UPair(2, 4)], 0);
  EXPECT_EQ(c.to_json().dump(), R"({"1,2":2,"1,4":-2,"2,3":-2,"3,4":2})");
}

TEST(IsPure, Examples) {
  EXPECT_FALSE(is_pure(artin_word(2, 1)));
  EXPECT_TRUE(is_pure(parse_braid_word("b1 b1", 2)));
  EXPECT_TRUE(
      is_pure(parse_braid_word("B(1,3) B(2,3) B(1,3)^-1 B(1,2)^-1", 3)));
}

TEST(WindingVector, Examples) {
  EXPECT_EQ(winding_vector(full_twist(2, UPair(1, 2))), e(2, 1, 2));
  EXPECT_EQ(
      winding_vector(parse_braid_word("B(1,3) B(2,3) B(1,3)^-1 B(1,2)^-1", 3)),
      e(3, 1, 3) - e(3, 2, 3));
  EXPECT_EQ(winding_vector(parse_braid_word("b1 g(2,3) b1^-1", 3)),
            e(3, 1, 3));
  EXPECT_THROW(winding_vector(artin_word(3, 1)), NotPure);
}

TEST(WindingVector, MatchesPathOracle) {
  std::mt19937 rng(7);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      auto const w = close_up(n, oracle::random_word(rng, n, 6));
      ASSERT_EQ(winding_vector(from_oracle(n, w)), oracle_winding(n, w));
    }
  }
}

TEST(WindingVector, AdditiveAndOddOnInverse) {
  std::mt19937 rng(11);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      auto const u = close_up(from_oracle(n, oracle::random_word(rng, n, 6)));
      auto const v = close_up(from_oracle(n, oracle::random_word(rng, n, 6)));
      ASSERT_EQ(winding_vector(u * v), winding_vector(u) + winding_vector(v));
      ASSERT_EQ(winding_vector(invert(u)), -winding_vector(u));
    }
  }
}

TEST(WindingVector, ConjugationCovariance) {
  // For pure k, winding(a k a^-1)[x] = winding(k)[pair_action(perm_of(a), x)].
  std::mt19937 rng(13);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      auto const a = from_oracle(n, oracle::random_word(rng, n, 7));
      auto const k = close_up(from_oracle(n, oracle::random_word(rng, n, 5)));
      auto const pa = perm_of(a);
      auto const W  = winding_vector(a * k * invert(a));
      auto const K  = winding_vector(k);
      for (auto const& x : all_pairs(n)) {
        ASSERT_EQ(W[x], K[pair_action(pa, x)]);
      }
      ASSERT_EQ(W, theta(pa, K));
    }
  }
}

TEST(WindingVector, ConjugationCovarianceOtherDirectionFails) {
  // The opposite reading, W[pair_action(pa, x)] = K[x], holds for
  // involutions but not for a 3-cycle conjugating a single full twist.
  auto const a  = parse_braid_word("b1 b2", 3);
  auto const k  = full_twist(3, UPair(1, 2));
  auto const pa = perm_of(a);
  auto const W  = winding_vector(a * k * invert(a));
  auto const K  = winding_vector(k);
  bool       all_match = true;
  for (auto const& x : all_pairs(3)) {
    all_match = all_match && W[pair_action(pa, x)] == K[x];
  }
  EXPECT_FALSE(all_match);
}

TEST(Figures, AllCasesReproduce) {
  for (int n = 2; n <= 6; ++n) {
    auto const cases = figure_cases(n);
    for (auto const& c : cases) {
      ASSERT_TRUE(is_pure(c.word)) << c.claim;
      ASSERT_EQ(winding_vector(c.word), c.expected)
          << c.claim << " at " << c.word.to_string();
    }
  }
}

TEST(Figures, CaseCounts) {
  // ordered triples + pairs of pairs sharing one point + (disjoint or equal)
  // pairs, the last counted twice (conjugation and commutator)
  for (int n = 2; n <= 6; ++n) {
    size_t const P      = pair_count(n);
    size_t const triple = static_cast<size_t>(n) * (n - 1) * (n - 2);
    size_t const one    = P * 2 * (n - 2);
    size_t const rest   = P * P - one;
    ASSERT_EQ(figure_cases(n).size(), triple + one + 2 * rest);
  }
}

TEST(PairVector, RingsAndJson) {
  PairVector v(4, Ring::Z, {{1, 1, 2}, {-1, 1, 4}, {-1, 2, 3}, {1, 3, 4}});
  EXPECT_EQ(v.to_string(), "e(1,2) - e(1,4) - e(2,3) + e(3,4)");
  EXPECT_EQ(v.to_json().dump(), R"({"1,2":1,"1,4":-1,"2,3":-1,"3,4":1})");
  EXPECT_EQ(PairVector::from_json(v.to_json(), 4), v);
  auto const r = eta(v);
  EXPECT_EQ(r.ring(), Ring::Z2);
  EXPECT_EQ(r.to_json().dump(), R"({"1,2":1,"1,4":1,"2,3":1,"3,4":1})");
  EXPECT_TRUE(eta(2 * e(4, 1, 2)).is_zero());
  EXPECT_TRUE(eta(PairVector(4)).is_zero());
  EXPECT_THROW(v + r, InvalidArgument);
  EXPECT_THROW(v + PairVector(3), DegreeMismatch);
  EXPECT_THROW(v[UPair(1, 5)], InvalidArgument);
}
