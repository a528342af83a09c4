#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <modbraid/burau.hpp>
#include <modbraid/relations.hpp>

#include "oracle.hpp"

using namespace modbraid;

namespace {

  oracle::Word to_oracle(BraidWord const& w) {
    oracle::Word out;
    auto const   artin = expand(w);
    for (auto const& x : artin.letters()) {
      out.emplace_back(x.i, x.exponent);
    }
    return out;
  }

  bool oracle_pure(int n, oracle::Word const& w) {
    auto p = oracle::identity(n);
    for (auto [i, e] : w) {
      p = oracle::then(p, oracle::swap(n, i, i + 1));
    }
    return p == oracle::identity(n);
  }

  RelationInstance const* find(std::vector<RelationInstance> const& v,
                               std::string const&                   rel,
                               std::vector<int> const&              idx) {
    for (auto const& r : v) {
      if (r.relation == rel && r.indices == idx) {
        return &r;
      }
    }
    return nullptr;
  }

  size_t choose2(size_t m) {
    return m * (m - 1) / 2;
  }

}  // namespace

TEST(SymWord, Rendering) {
  EXPECT_EQ(to_string(SymWord{}), "1");
  EXPECT_EQ(to_string(sym_sigma(1, 3) * sym_g(2, 4, -2)), "s(1,3) g(2,4)^-2");
  EXPECT_EQ(to_string(sym_inverse(sym_sigma(1, 2) * sym_g(1, 3))),
            "g(1,3)^-1 s(1,2)^-1");
  EXPECT_EQ(to_string(sym_commutator(sym_g(1, 2), sym_g(3, 4))),
            "g(1,2) g(3,4) g(1,2)^-1 g(3,4)^-1");
}

TEST(SymWord, EvaluateAgreesWithBraidRealization) {
  std::mt19937 rng(11);
  for (int n = 2; n <= 5; ++n) {
    auto const& G     = ExtGroup::shared(n, RingTag::Z());
    auto const  pairs = all_pairs(n);
    for (int trial = 0; trial < 100; ++trial) {
      SymWord w;
      int     len = static_cast<int>(rng() % 6);
      for (int k = 0; k < len; ++k) {
        auto const x = pairs[rng() % pairs.size()];
        auto const e = static_cast<std::int64_t>(rng() % 5) - 2;
        w.push_back({rng() % 2 ? SymLetter::Kind::Sigma : SymLetter::Kind::G,
                     x, e});
      }
      ASSERT_EQ(evaluate(w, G), elem_from_word(realize(w, n), RingTag::Z()))
          << to_string(w);
    }
  }
}

TEST(RelationTables, Examples) {
  auto const g1 = relation_instances(RelationTable::G, 4);
  auto const* r5 = find(g1, "R5", {1, 3, 2, 4});
  ASSERT_NE(r5, nullptr);
  EXPECT_EQ(to_string(r5->lhs), "s(1,3) s(2,4) s(1,3)^-1 s(2,4)^-1");
  EXPECT_EQ(to_string(r5->rhs), "g(1,2) g(1,4)^-1 g(2,3)^-1 g(3,4)");

  auto const* r5b = find(g1, "R5", {2, 4, 1, 3});
  ASSERT_NE(r5b, nullptr);
  EXPECT_EQ(to_string(r5b->rhs), "g(1,2)^-1 g(1,4) g(2,3) g(3,4)^-1");

  auto const z = relation_instances(RelationTable::Z, 4);
  auto const* z5 = find(z, "r5", {1, 3, 2, 4});
  ASSERT_NE(z5, nullptr);
  EXPECT_EQ(to_string(z5->rhs), "g(1,2) g(1,4) g(2,3) g(3,4)");
  auto const* z5b = find(z, "r5", {1, 2, 3, 4});
  ASSERT_NE(z5b, nullptr);
  EXPECT_EQ(to_string(z5b->rhs), "1");

  auto const t2 = relation_instances(RelationTable::Gt, 3, 2);
  auto const* r2 = find(t2, "R^t2", {1, 2});
  ASSERT_NE(r2, nullptr);
  EXPECT_EQ(to_string(r2->lhs), "s(1,2)^2");
  EXPECT_EQ(to_string(r2->rhs), "g(1,2)^2");

  auto const* r3 = find(g1, "R3", {1, 2, 3});
  ASSERT_NE(r3, nullptr);
  EXPECT_EQ(to_string(r3->lhs), "s(1,2) s(2,3) s(1,2)^-1");
  auto const* r4 = find(g1, "R4", {1, 3, 2});
  ASSERT_NE(r4, nullptr);
  EXPECT_EQ(to_string(r4->lhs), "s(1,3)^-1 s(2,3) s(1,3)");
  EXPECT_EQ(to_string(r4->rhs), "s(1,2)");

  auto const* r6 = find(g1, "R6", {1, 2, 2, 3});
  ASSERT_NE(r6, nullptr);
  EXPECT_EQ(to_string(r6->rhs), "g(1,3)");
}

TEST(RelationTables, InstanceCounts) {
  for (int n = 1; n <= 6; ++n) {
    size_t const P  = choose2(n);
    size_t const tr = n >= 3 ? static_cast<size_t>(n * (n - 1) * (n - 2)) : 0;
    size_t const disjoint = P * (n >= 2 ? choose2(n - 2) : 0);
    size_t const base     = choose2(P) + P + tr + disjoint + P * P;
    EXPECT_EQ(relation_instances(RelationTable::G, n).size(), base);
    EXPECT_EQ(relation_instances(RelationTable::Gt, n, 3).size(), base);
    EXPECT_EQ(relation_instances(RelationTable::Z, n).size(), base + P);
  }
}

TEST(RelationTables, AllRowsHold) {
  for (int n = 1; n <= 5; ++n) {
    auto const g = verify_relation_table(RelationTable::G, n);
    EXPECT_TRUE(g.all_pass()) << g.to_json().dump(1);
    auto const z = verify_relation_table(RelationTable::Z, n);
    EXPECT_TRUE(z.all_pass()) << z.to_json().dump(1);
    for (std::int64_t t : {1, 2, 3}) {
      auto const r = verify_relation_table(RelationTable::Gt, n, t);
      EXPECT_TRUE(r.all_pass()) << r.to_json().dump(1);
      EXPECT_EQ(r.t, t);
    }
  }
}

TEST(RelationTables, GRowsAreTrivialByLinkingNumbers) {
  // Independent of the cocycle model: lhs * rhs^-1 must be a pure braid
  // with vanishing linking numbers (even ones for Z_n).
  for (int n = 2; n <= 5; ++n) {
    for (auto table : {RelationTable::G, RelationTable::Z}) {
      for (auto const& r : relation_instances(table, n)) {
        auto const w = to_oracle(realize(r.lhs, n) * invert(realize(r.rhs, n)));
        ASSERT_TRUE(oracle_pure(n, w)) << r.relation;
        for (auto [k, v] : oracle::linking(n, w)) {
          if (table == RelationTable::G) {
            ASSERT_EQ(v, 0) << r.relation << " at " << k.first << ","
                            << k.second;
          } else {
            ASSERT_EQ(v % 2, 0) << r.relation;
          }
        }
      }
    }
  }
}

TEST(RelationTables, PrintedRowSixNotes) {
  auto const t = relation_instances(RelationTable::Gt, 3, 2);
  // j = l with one shared index: the printed form is right.
  EXPECT_TRUE(find(t, "R^t6", {1, 3, 2, 3})->note.empty());
  // i = k: the printed form keeps g(1,3) but the image is g(2,3).
  auto const& bad = find(t, "R^t6", {1, 2, 1, 3})->note;
  EXPECT_NE(bad.find("g(1,3)"), std::string::npos);
  EXPECT_NE(bad.find("g(2,3)"), std::string::npos);

  auto const z = relation_instances(RelationTable::Z, 3);
  EXPECT_FALSE(find(z, "r6", {1, 2, 1, 2})->note.empty());
  EXPECT_TRUE(find(z, "r6", {1, 2, 1, 2})->note.find("undefined")
              != std::string::npos);
  EXPECT_TRUE(find(z, "r6", {1, 3, 2, 3})->note.empty());
  for (auto const& r : relation_instances(RelationTable::G, 4)) {
    EXPECT_TRUE(r.note.empty());
  }

  // The printed forms, used literally, are false.
  auto const& G = ExtGroup::shared(3, RingTag::Z(2));
  EXPECT_NE(evaluate(sym_sigma(1, 2) * sym_g(1, 3) * sym_sigma(1, 2, -1), G),
            evaluate(sym_g(1, 3), G));
}

TEST(RelationTables, DetectsWrongRelations) {
  auto const& G    = ExtGroup::shared(4, RingTag::Z(2));
  auto        inst = relation_instances(RelationTable::Gt, 4, 2);
  for (auto& r : inst) {
    if (r.relation == "R^t2") {
      r.rhs = sym_g(r.indices[0], r.indices[1], 1);
    }
  }
  auto const rows = check_relations(inst, G, standard_generators(G));
  size_t     bad  = 0;
  for (auto const& r : rows) {
    if (!r.pass) {
      ++bad;
      EXPECT_EQ(r.relation, "R^t2");
      EXPECT_NE(r.note.find("lhs ="), std::string::npos);
    }
  }
  EXPECT_EQ(bad, choose2(4));
}

TEST(RelationTables, ReportJson) {
  auto const r = verify_relation_table(RelationTable::G, 2);
  auto const j = r.to_json();
  EXPECT_EQ(j["table"], "G_n");
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["t"], 1);
  ASSERT_EQ(j["rows"].size(), r.rows.size());
  EXPECT_EQ(j["rows"][0]["relation"], "R2");
  EXPECT_EQ(j["rows"][0]["lhs"], "s(1,2)^2");
  EXPECT_EQ(j["rows"][0]["rhs"], "g(1,2)");
  EXPECT_EQ(j["rows"][0]["pass"], true);
}

TEST(ShiftedModel, TablesSurviveCoboundaryShift) {
  std::mt19937 rng(23);
  for (int n = 2; n <= 4; ++n) {
    for (std::int64_t t : {1, 2, 3}) {
      auto const ring = RingTag::Z(t);
      std::map<Permutation, PairVector> h;
      for (auto const& p : all_permutations(n)) {
        PairVector v(n);
        for (auto const& x : all_pairs(n)) {
          v.set(x, static_cast<std::int64_t>(rng() % 9) - 4);
        }
        h[p] = v;
      }
      ShiftedModel model(n, ring, [&h](Permutation const& p) {
        return h.at(p);
      });
      auto const rows = check_relations(relation_instances(RelationTable::Gt,
                                                           n, t),
                                        model.group(), model.generators());
      for (auto const& r : rows) {
        ASSERT_TRUE(r.pass) << r.relation << " " << r.note;
      }

      // The shifted cocycle is a different function.
      bool differs = false;
      auto const& base = ExtGroup::shared(n, ring);
      for (auto const& p : all_permutations(n)) {
        for (auto const& q : all_permutations(n)) {
          differs = differs || model.group().cocycle(p, q) != base.cocycle(p, q);
        }
      }
      EXPECT_TRUE(differs);

      // And the untransformed generators no longer satisfy the table.
      auto const plain = check_relations(
          relation_instances(RelationTable::Gt, n, t), model.group(),
          standard_generators(model.group()));
      EXPECT_TRUE(std::any_of(plain.begin(), plain.end(),
                              [](auto const& r) { return !r.pass; }));
    }
  }
}

TEST(Omega, Examples) {
  auto const& G2 = ExtGroup::shared(2, RingTag::Z(2));
  EXPECT_TRUE(G2.mul(omega(G2, 1), omega(G2, 1)).is_identity());

  auto const& G3 = ExtGroup::shared(3, RingTag::Z(2));
  auto const  a = omega(G3, 1), b = omega(G3, 2);
  EXPECT_EQ(G3.mul(G3.mul(a, b), a), G3.mul(G3.mul(b, a), b));

  auto const& G4 = ExtGroup::shared(4, RingTag::Z(2));
  EXPECT_TRUE(G4.commutator(omega(G4, 1), omega(G4, 3)).is_identity());
}

TEST(Omega, SplitsForEvenScale) {
  for (int n = 1; n <= 5; ++n) {
    for (std::int64_t t : {2, 4, 6}) {
      auto const r = omega_splitting_check(n, t);
      EXPECT_TRUE(r.all_pass()) << r.to_json().dump(1);
      size_t const m = n - 1;
      size_t const expected = m + (m > 0 ? m - 1 : 0)
                              + (m >= 2 ? choose2(m) - (m - 1) : 0);
      EXPECT_EQ(r.rows.size(), expected);
    }
  }
  EXPECT_THROW(omega_splitting_check(3, 3), OddScale);
  EXPECT_THROW(omega_splitting_check(3, 1), OddScale);
}

TEST(Omega, UncorrectedLiftsDoNotSplit) {
  auto const& G = ExtGroup::shared(3, RingTag::Z(2));
  auto const  s = G.sigma(1, 2);
  EXPECT_EQ(G.mul(s, s), G.pow(G.g(1, 2), 2));
}

TEST(SplittingSearch, Zn) {
  auto const one = search_splitting_Zn(1);
  ASSERT_TRUE(one.has_value());
  EXPECT_TRUE(one->empty());
  EXPECT_FALSE(search_splitting_Zn(2).has_value());
  EXPECT_FALSE(search_splitting_Zn(3).has_value());
  EXPECT_THROW(search_splitting_Zn(5), SearchSpaceTooLarge);
  EXPECT_THROW(search_splitting_Zn(0), InvalidArgument);
}

TEST(SplittingSearch, NoOrderTwoLiftOfATransposition) {
  // (s, v)^2 carries coefficient 1 on the swapped pair for every v.
  for (int n = 2; n <= 4; ++n) {
    auto const& Z = ExtGroup::shared(n, RingTag::Z2());
    auto const  m = pair_count(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      PairVector v(n, Ring::Z2);
      size_t     k = 0;
      for (auto const& x : all_pairs(n)) {
        v.set(x, (bits >> k++) & 1);
      }
      auto const a  = Z.element(Permutation::transposition(n, 1, 2), v);
      auto const sq = Z.mul(a, a);
      ASSERT_TRUE(sq.perm.is_identity());
      ASSERT_EQ(sq.vec[UPair(1, 2)], 1);
    }
  }
}

TEST(NormalGenerators, Examples) {
  auto const three = normal_generators_b4(3);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0], parse_braid_word(
                          "b1 b1 b2 b2 b1^-1 b1^-1 b2^-1 b2^-1", 3));
  EXPECT_EQ(three[1], parse_braid_word("b1 b1 b1 b1", 3));
  EXPECT_EQ(three[2], parse_braid_word("b2 b2 b2 b2", 3));

  auto const five = normal_generators_b4(5);
  auto const want = parse_braid_word(
      "g(1,3) g(2,4) g(1,3)^-1 g(2,4)^-1", 5);
  EXPECT_NE(std::find(five.begin(), five.end(), want), five.end());
  EXPECT_TRUE(normal_generators_b4(1).empty());
  EXPECT_EQ(normal_generators_b4(2).size(), 1u);
}

TEST(NormalGenerators, CountsAndMembership) {
  for (int n = 1; n <= 6; ++n) {
    auto const gens = normal_generators_b4(n);
    size_t const expected = std::max(0, n - 2) + std::max(0, n - 4)
                            + std::max(0, n - 1);
    EXPECT_EQ(gens.size(), expected);
    for (auto const& w : gens) {
      ASSERT_TRUE(elem_from_word(w, RingTag::Z2()).is_identity()) << w;
      ASSERT_TRUE(in_level(w, 4)) << w;
      auto const o = to_oracle(w);
      ASSERT_TRUE(oracle_pure(n, o));
      for (auto [k, v] : oracle::linking(n, o)) {
        ASSERT_EQ(v % 2, 0);
      }
    }
  }
}

TEST(SchreierBound, Values) {
  EXPECT_EQ(schreier_bound(2), 1);
  EXPECT_EQ(schreier_bound(3), 49);
  EXPECT_EQ(schreier_bound(4), 3073);
  for (int n = 2; n <= 10; ++n) {
    __int128 f = 1;
    for (int k = 2; k <= n; ++k) {
      f *= k;
    }
    f = (f << (n * (n - 1) / 2)) * (n - 2) + 1;
    std::string s;
    for (__int128 x = f; x > 0; x /= 10) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
    }
    EXPECT_EQ(schreier_bound(n).str(), s) << n;
  }
  EXPECT_THROW(schreier_bound(1), InvalidArgument);
}

TEST(EnumerateZn, Orders) {
  EXPECT_EQ(enumerate_Zn(1), 1u);
  EXPECT_EQ(enumerate_Zn(2), 4u);
  EXPECT_EQ(enumerate_Zn(3), 48u);
  EXPECT_EQ(enumerate_Zn(4), 1536u);
  EXPECT_THROW(enumerate_Zn(5), SearchSpaceTooLarge);
}
