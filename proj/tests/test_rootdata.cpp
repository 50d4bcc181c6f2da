#include "doctest.h"
#include "uqlat/rng.hpp"
#include <set>

#include "uqlat/rootdata.hpp"

using namespace uqlat;

TEST_CASE("A2 cartan data and positive roots") {
  RootSystem rs = RootSystem::build('A', 2);
  CHECK(rs.d == 3);
  CHECK(rs.num_positive == 3);
  // {a1, a2, a1+a2} with heights (1,1,2)
  std::multiset<int> heights;
  for (const Root& b : rs.positive_roots) heights.insert(b.height());
  CHECK(heights == std::multiset<int>{1, 1, 2});
}

TEST_CASE("A1 normalisation") {
  RootSystem rs = RootSystem::build('A', 1);
  CHECK(rs.d == 2);  // <w, w> = 1/2
  CHECK(rs.rho == rs.fundamental(1));
  CHECK(rs.pairing_d[0][0] == 1);
  // alpha = 2w and <w, alpha> = 1
  CHECK(rs.alpha_as_weight(1) == Weight({2}));
  CHECK(rs.pair_ww_d(rs.fundamental(1), rs.alpha_as_weight(1)) == 2);  // d * 1
}

TEST_CASE("G2 data") {
  RootSystem rs = RootSystem::build('G', 2);
  CHECK(rs.di == std::vector<int>{1, 3});
  CHECK(rs.num_positive == 6);
  CHECK(rs.d == 1);
}

TEST_CASE("B2 data") {
  RootSystem rs = RootSystem::build('B', 2);
  CHECK(rs.num_positive == 4);
  CHECK(rs.di == std::vector<int>{2, 1});
}

TEST_CASE("unsupported types rejected") {
  CHECK_THROWS_AS(RootSystem::build('A', 5), std::invalid_argument);  // rank cap
  CHECK_THROWS_AS(RootSystem::build('E', 6), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('X', 2), std::invalid_argument);
  CHECK_NOTHROW(RootSystem::build('D', 4));
  CHECK_NOTHROW(RootSystem::build('F', 4));
  CHECK_NOTHROW(RootSystem::build('C', 3));
}

TEST_CASE("longest words by greedy descent") {
  CHECK(RootSystem::build('A', 1).longest_word() == ReducedWord({1}));
  CHECK(RootSystem::build('A', 2).longest_word() == ReducedWord({1, 2, 1}));
  CHECK(RootSystem::build('B', 2).longest_word() == ReducedWord({1, 2, 1, 2}));
  RootSystem g2 = RootSystem::build('G', 2);
  ReducedWord w = g2.longest_word();
  CHECK(w.length() == 6);
  CHECK(g2.is_reduced(w));
}

TEST_CASE("beta sequence") {
  RootSystem rs = RootSystem::build('A', 2);
  auto beta = rs.beta_sequence(ReducedWord({1, 2, 1}));
  CHECK(beta[0] == Root({1, 0}));
  CHECK(beta[1] == Root({1, 1}));
  CHECK(beta[2] == Root({0, 1}));

  RootSystem a1 = RootSystem::build('A', 1);
  auto b1 = a1.beta_sequence(ReducedWord({1}));
  CHECK(b1[0].height() == 1);

  RootSystem b2 = RootSystem::build('B', 2);
  auto bs = b2.beta_sequence(ReducedWord({1, 2, 1, 2}));
  std::set<Root> as_set(bs.begin(), bs.end());
  std::set<Root> pos(b2.positive_roots.begin(), b2.positive_roots.end());
  CHECK(as_set == pos);

  CHECK_THROWS_AS(rs.beta_sequence(ReducedWord({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(rs.beta_sequence(ReducedWord({1, 1, 2})), std::invalid_argument);
}

TEST_CASE("height bookkeeping: sum of beta heights is ht(2rho)") {
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(t[0], t[1] - '0');
    auto beta = rs.beta_sequence(rs.longest_word());
    long total = 0;
    for (const Root& b : beta) {
      CHECK(b.height() >= 1);
      total += b.height();
    }
    long rho2 = 0;
    for (const Root& b : rs.positive_roots) rho2 += b.height();
    CHECK(total == rho2);
  }
}

TEST_CASE("pairing is W-invariant") {
  Rng rng(7);
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(t[0], t[1] - '0');
    for (int k = 0; k < 40; ++k) {
      std::vector<int> xc(rs.rank), yc(rs.rank);
      for (int i = 0; i < rs.rank; ++i) {
        xc[i] = static_cast<int>(rng.range(-4, 4));
        yc[i] = static_cast<int>(rng.range(-4, 4));
      }
      Weight x(xc), y(yc);
      for (int i = 1; i <= rs.rank; ++i)
        CHECK(rs.pair_ww_d(rs.simple_reflection(i, x), rs.simple_reflection(i, y)) ==
              rs.pair_ww_d(x, y));
    }
  }
}

TEST_CASE("dot action") {
  RootSystem a1 = RootSystem::build('A', 1);
  for (int n = -5; n <= 5; ++n)
    CHECK(a1.dot_action(ReducedWord({1}), Weight({n})) == Weight({-n - 2}));
  CHECK(a1.dot_action(ReducedWord{}, Weight({3})) == Weight({3}));

  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(a2.dot_action(ReducedWord{}, -a2.rho) == -a2.rho);
  CHECK(a2.dot_action(a2.longest_word(), -a2.rho) == -a2.rho);

  // composition law on random words
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    std::vector<int> w1, w2;
    for (int j = 0; j < 3; ++j) {
      w1.push_back(static_cast<int>(rng.range(1, 2)));
      w2.push_back(static_cast<int>(rng.range(1, 2)));
    }
    Weight lam({static_cast<int>(rng.range(-3, 3)), static_cast<int>(rng.range(-3, 3))});
    std::vector<int> cat = w1;
    cat.insert(cat.end(), w2.begin(), w2.end());
    CHECK(a2.dot_action(ReducedWord(cat), lam) ==
          a2.dot_action(ReducedWord(w1), a2.dot_action(ReducedWord(w2), lam)));
  }
}

TEST_CASE("dominant representative") {
  RootSystem a1 = RootSystem::build('A', 1);
  auto [rep, word] = a1.dominant_representative(Weight({-3}));
  CHECK(rep == Weight({1}));
  CHECK(word == ReducedWord({1}));
  CHECK(a1.dot_action(word, Weight({-3})) == rep);

  CHECK(a1.dominant_representative(-a1.rho).first == -a1.rho);
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(a2.dominant_representative(Weight({0, 0})).first == Weight({0, 0}));
  CHECK(a2.dominant_representative(Weight({0, 0})).second == ReducedWord{});
}

TEST_CASE("coxeter length and reducedness") {
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(a2.coxeter_length(ReducedWord({1, 1})) == 0);
  CHECK(a2.coxeter_length(ReducedWord({1, 2, 1})) == 3);
  CHECK(a2.is_reduced(ReducedWord({2, 1, 2})));
  CHECK(!a2.is_reduced(ReducedWord({1, 1})));
  CHECK(!a2.is_reduced(ReducedWord({5})));
}

TEST_CASE("root/weight coordinate conversion") {
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(a2.root_to_weight(Root({1, 0})) == Weight({2, -1}));
  CHECK(a2.weight_to_root(Weight({2, -1})) == Root({1, 0}));
  CHECK(!a2.weight_to_root(Weight({1, 0})));  // fundamental weight not in Q
  CHECK(a2.weight_to_root(Weight({0, 0})) == Root({0, 0}));
}
