#include <gtest/gtest.h>

#include <modbraid/perm.hpp>

#include "oracle.hpp"

using namespace modbraid;

namespace {

  Permutation from_oracle(oracle::Perm const& p) {
    std::vector<int> img(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
      img[i] = p[i] + 1;
    }
    return Permutation(img);
  }

  Permutation s(int n, int i, int j) {
    return Permutation::transposition(n, i, j);
  }

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<int>{1, 1}), InvalidArgument);
  EXPECT_THROW(Permutation(std::vector<int>{0, 1}), InvalidArgument);
  EXPECT_THROW(Permutation(std::vector<int>{}), InvalidArgument);
  EXPECT_THROW(UPair(2, 2), InvalidArgument);
  EXPECT_EQ(UPair(3, 1), UPair(1, 3));
}

TEST(Compose, Examples) {
  auto const p = Permutation({2, 3, 1});
  EXPECT_EQ(compose(Permutation::identity(3), p), p);
  EXPECT_TRUE(compose(s(3, 1, 2), s(3, 1, 2)).is_identity());

  auto const want = from_oracle(
      oracle::then(oracle::swap(3, 1, 2), oracle::swap(3, 1, 3)));
  EXPECT_EQ(compose(s(3, 1, 2), s(3, 1, 3)), want);
  EXPECT_EQ(want, Permutation({2, 3, 1}));
}

TEST(Compose, DegreeMismatch) {
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)),
               DegreeMismatch);
}

TEST(Compose, MatchesOracleAndIsAssociative) {
  for (int n = 1; n <= 4; ++n) {
    auto const all = all_permutations(n);
    for (auto const& p : all) {
      for (auto const& q : all) {
        oracle::Perm op(n), oq(n);
        for (int i = 0; i < n; ++i) {
          op[i] = p.at0(i);
          oq[i] = q.at0(i);
        }
        ASSERT_EQ(compose(p, q), from_oracle(oracle::then(op, oq)));
        ASSERT_EQ(compose(p, p.inverse()), Permutation::identity(n));
      }
    }
  }
}

TEST(Permutation, RankRoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    auto const all = all_permutations(n);
    for (size_t r = 0; r < all.size(); ++r) {
      ASSERT_EQ(all[r].rank(), r);
      ASSERT_EQ(Permutation::unrank(n, r), all[r]);
    }
  }
}

TEST(NormalForm, Examples) {
  EXPECT_TRUE(normal_form(Permutation::identity(4)).factors.empty());
  EXPECT_EQ(normal_form(s(3, 1, 3)).factors, std::vector<UPair>{UPair(1, 3)});
  EXPECT_EQ(normal_form(Permutation({2, 3, 1})).factors,
            (std::vector<UPair>{UPair(1, 2), UPair(1, 3)}));
}

TEST(NormalForm, ExhaustiveRoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    for (auto const& p : all_permutations(n)) {
      auto const w = normal_form(p);
      ASSERT_EQ(w.evaluate(n), p) << p.to_string();
      ASSERT_LE(static_cast<int>(w.factors.size()), n - 1);
      for (size_t k = 0; k < w.factors.size(); ++k) {
        ASSERT_LT(w.factors[k].lo(), w.factors[k].hi());
        if (k > 0) {
          ASSERT_LT(w.factors[k - 1].hi(), w.factors[k].hi());
        }
      }
    }
  }
}

TEST(PairNormalForm, Examples) {
  using V = std::vector<UPair>;
  EXPECT_EQ(pair_normal_form(UPair(1, 2), UPair(3, 4)).factors,
            (V{UPair(1, 2), UPair(3, 4)}));
  EXPECT_EQ(pair_normal_form(UPair(3, 4), UPair(1, 2)).factors,
            (V{UPair(1, 2), UPair(3, 4)}));
  EXPECT_EQ(pair_normal_form(UPair(1, 2), UPair(1, 3)).factors,
            (V{UPair(1, 2), UPair(1, 3)}));
  EXPECT_TRUE(pair_normal_form(UPair(2, 5), UPair(2, 5)).factors.empty());
}

TEST(PairNormalForm, AgreesWithNormalFormExhaustively) {
  for (int n = 2; n <= 6; ++n) {
    for (auto const& a : all_pairs(n)) {
      for (auto const& b : all_pairs(n)) {
        auto const p = compose(Permutation::transposition(n, a),
                               Permutation::transposition(n, b));
        ASSERT_EQ(pair_normal_form(a, b), normal_form(p))
            << "s(" << a.to_string() << ") s(" << b.to_string() << ")";
      }
    }
  }
}

TEST(PairAction, Examples) {
  EXPECT_EQ(pair_action(Permutation::identity(3), UPair(1, 3)), UPair(1, 3));
  EXPECT_EQ(pair_action(s(3, 1, 2), UPair(1, 3)), UPair(2, 3));
  EXPECT_EQ(pair_action(s(4, 1, 2), UPair(3, 4)), UPair(3, 4));
  EXPECT_THROW(pair_action(s(3, 1, 2), UPair(1, 4)), InvalidArgument);
}

TEST(PairAction, IsARightAction) {
  for (int n = 2; n <= 4; ++n) {
    auto const all = all_permutations(n);
    for (auto const& p : all) {
      for (auto const& q : all) {
        for (auto const& x : all_pairs(n)) {
          ASSERT_EQ(pair_action(compose(p, q), x),
                    pair_action(q, pair_action(p, x)));
        }
      }
    }
  }
}

TEST(UPair, DenseIndex) {
  for (int n = 1; n <= 8; ++n) {
    auto const ps = all_pairs(n);
    ASSERT_EQ(ps.size(), pair_count(n));
    for (size_t k = 0; k < ps.size(); ++k) {
      ASSERT_EQ(ps[k].index(n), k);
    }
  }
}

TEST(TextForm, Permutations) {
  EXPECT_EQ(parse_permutation("[2,3,1]"), Permutation({2, 3, 1}));
  EXPECT_EQ(parse_permutation(" [ 2, 1 ] "), s(2, 1, 2));
  EXPECT_EQ(Permutation({2, 3, 1}).to_string(), "[2,3,1]");
  EXPECT_EQ(parse_transposition("s(3,1)"), UPair(1, 3));
  EXPECT_EQ(normal_form(Permutation({2, 3, 1})).to_string(), "s(1,2) s(1,3)");
  EXPECT_THROW(parse_permutation("2,3,1"), InvalidArgument);
  EXPECT_THROW(parse_permutation("[2,2]"), InvalidArgument);
  EXPECT_THROW(parse_transposition("s(1)"), InvalidArgument);
}

TEST(Permutation, DegreeOneIsTrivial) {
  auto const all = all_permutations(1);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].is_identity());
  EXPECT_TRUE(normal_form(all[0]).factors.empty());
  EXPECT_TRUE(all_pairs(1).empty());
}
