#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "reflectwist/monoid.hpp"

using namespace reflectwist;

namespace {

  std::vector<BraidedSet> corpus(std::size_t max_n) {
    std::vector<BraidedSet> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto part = oracle::nondegenerate_solutions(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::vector<Word> all_words(std::size_t n, std::size_t d) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Word> next;
      for (Word const& w : out) {
        for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
          Word v = w;
          v.push_back(x);
          next.push_back(v);
        }
      }
      out = next;
    }
    return out;
  }

  // Connected components of the rewrite graph, with edges in both
  // directions, found by breadth-first search.
  std::set<std::set<Word>> naive_classes(BraidedSet const& bs,
                                         std::size_t       d) {
    std::map<Word, std::set<Word>> adj;
    for (Word const& w : all_words(bs.size(), d)) {
      for (std::size_t i = 0; i + 1 < d; ++i) {
        Word v         = w;
        auto [x, y]    = bs(w[i], w[i + 1]);
        v[i]           = x;
        v[i + 1]       = y;
        adj[w].insert(v);
        adj[v].insert(w);
      }
    }
    std::set<Word>           seen;
    std::set<std::set<Word>> out;
    for (Word const& w : all_words(bs.size(), d)) {
      if (seen.count(w)) {
        continue;
      }
      std::set<Word>   cls{w};
      std::deque<Word> todo{w};
      seen.insert(w);
      while (!todo.empty()) {
        Word x = todo.front();
        todo.pop_front();
        for (Word const& y : adj[x]) {
          if (seen.insert(y).second) {
            cls.insert(y);
            todo.push_back(y);
          }
        }
      }
      out.insert(cls);
    }
    return out;
  }

  // k̃(u v) = (u ⇀̃ k̃(v)) k̃(u ↼̃ k̃(v)) for a split at position p.
  Word split_k(BraidedSet const& bs, FiniteMap const& k, Word const& w,
               std::size_t p) {
    Word u(w.begin(), w.begin() + p), v(w.begin() + p, w.end());
    auto [v1, u1] = extend_r(bs, u, extend_k(bs, k, v));
    Word tail     = extend_k(bs, k, u1);
    v1.insert(v1.end(), tail.begin(), tail.end());
    return v1;
  }

  // Δ^{d;k} = k_d r_{d-1} ... r_1 k_d r_{d-1} ... r_2 ... k_d, the strands
  // hitting the wall from the right one after another.
  Word garside_word(BraidedSet const& bs, FiniteMap const& k, Word w) {
    std::size_t d = w.size();
    for (std::size_t start = d; start-- > 0;) {
      for (std::size_t j = start; j + 1 < d; ++j) {
        auto [x, y] = bs(w[j], w[j + 1]);
        w[j]        = x;
        w[j + 1]    = y;
      }
      w[d - 1] = k(w[d - 1]);
    }
    return w;
  }

  BraidedSet dihedral_quandle() {
    return rack_solution(Shelf::validate(fixtures::dihedral3()));
  }

}  // namespace

TEST_CASE("word codes are lexicographic") {
  auto words = all_words(3, 3);
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(word_code(words[i], 3) == i);
    CHECK(word_from_code(i, 3, 3) == words[i]);
  }
}

TEST_CASE("graded components of small solutions") {
  for (std::size_t d = 0; d <= 7; ++d) {
    CHECK(build_component(fixtures::flip(), d).class_count() == d + 1);
  }
  auto p3 = build_component(fixtures::p3(), 2);
  REQUIRE(p3.class_count() == 2);
  std::multiset<std::size_t> sizes;
  for (auto const& c : p3.classes()) {
    sizes.insert(c.size());
  }
  CHECK(sizes == std::multiset<std::size_t>{3, 6});

  auto flip2 = build_component(fixtures::flip(), 2).classes();
  CHECK(flip2 == std::vector<std::vector<Word>>{
                     {{0, 0}}, {{0, 1}, {1, 0}}, {{1, 1}}});
}

TEST_CASE("components equal the breadth-first closure") {
  auto solutions = corpus(3);
  solutions.push_back(BraidedSet::from_map(
      SquareMap(2, Word{0, 0, 0, 0})));  // degenerate
  for (BraidedSet const& bs : solutions) {
    for (std::size_t d = 1; d <= 4; ++d) {
      auto                     g = build_component(bs, d);
      std::set<std::set<Word>> got;
      for (std::size_t c = 0; c < g.class_count(); ++c) {
        auto cls = g.classes()[c];
        CHECK(cls.front() == g.representative(c));
        got.insert(std::set<Word>(cls.begin(), cls.end()));
      }
      CHECK(got == naive_classes(bs, d));
    }
  }
}

TEST_CASE("threaded build gives the same partition") {
  auto bs     = dihedral_quandle();
  auto serial = build_component(bs, 9);
  auto pooled = build_component(bs, 9, 4);
  CHECK(serial.classes() == pooled.classes());
}

TEST_CASE("component gate") {
  CHECK_THROWS_AS(build_component(fixtures::flip(3), 13), SizeLimitExceeded);
}

TEST_CASE("extend_r") {
  auto p3 = fixtures::p3();
  for (Elem a = 0; a < 3; ++a) {
    for (Elem b = 0; b < 3; ++b) {
      auto [v, u] = extend_r(p3, {a}, {b});
      CHECK(Pair{v[0], u[0]} == p3(a, b));
    }
  }
  auto flip = fixtures::flip(3);
  for (Word const& u : all_words(3, 2)) {
    for (Word const& v : all_words(3, 3)) {
      auto out = extend_r(flip, u, v);
      CHECK(out.first == v);
      CHECK(out.second == u);
    }
  }
  // (0, 1) past (2): 1 crosses first, then 0 crosses the image of 2
  auto [v, u] = extend_r(p3, {0, 1}, {2});
  CHECK(v == Word{1});  // 2 + 1 + 1 mod 3
  CHECK(u == Word{0, 1});
  CHECK(descent_check(p3, FiniteMap::identity(3), 3));
}

TEST_CASE("extend_k") {
  auto p3 = fixtures::p3();
  auto k  = fixtures::shift(3, 1);
  for (Elem a = 0; a < 3; ++a) {
    CHECK(extend_k(p3, k, {a}) == Word{k(a)});
    for (Elem b = 0; b < 3; ++b) {
      CHECK(extend_k(p3, k, {a, b}) == Word{(b + 2) % 3, (a + 1) % 3});
    }
  }
  CHECK(extend_k(p3, k, {}).empty());

  auto flip = fixtures::flip();
  auto id   = FiniteMap::identity(2);
  for (std::size_t d = 1; d <= 3; ++d) {
    auto g = build_component(flip, d);
    for (Word const& w : all_words(2, d)) {
      Word rev(w.rbegin(), w.rend());
      CHECK(extend_k(flip, id, w) == rev);
      CHECK(g.congruent(extend_k(flip, id, w), w));
    }
  }
}

TEST_CASE("extend_k is independent of the split and equals Δ") {
  for (BraidedSet const& bs : corpus(3)) {
    for (FiniteMap const& k : oracle::right_reflections(bs)) {
      for (std::size_t d = 1; d <= 4; ++d) {
        for (Word const& w : all_words(bs.size(), d)) {
          Word expected = extend_k(bs, k, w);
          for (std::size_t p = 1; p < d; ++p) {
            CHECK(split_k(bs, k, w, p) == expected);
          }
          CHECK(garside_word(bs, k, w) == expected);
        }
      }
    }
  }
}

TEST_CASE("congruent words have congruent images") {
  for (BraidedSet const& bs : corpus(3)) {
    for (FiniteMap const& k : oracle::right_reflections(bs)) {
      for (std::size_t d = 2; d <= 3; ++d) {
        CHECK(descent_check(bs, k, d));
      }
    }
  }
}

TEST_CASE("Δ is a bijection for non-degenerate solutions and bijective k") {
  for (BraidedSet const& bs : corpus(3)) {
    for (FiniteMap const& k : oracle::right_reflections(bs)) {
      if (!k.is_bijective()) {
        continue;
      }
      for (std::size_t d = 1; d <= 4; ++d) {
        CHECK(is_permutation(garside_map(bs, k, d)));
      }
    }
  }
}

TEST_CASE("Garside commutation") {
  SUBCASE("all reflections up to size 3") {
    for (BraidedSet const& bs : corpus(3)) {
      for (FiniteMap const& k : oracle::right_reflections(bs)) {
        for (std::size_t d = 1; d <= 5; ++d) {
          CHECK(garside_commutation_check(bs, k, d));
        }
      }
    }
  }
  SUBCASE("degree 2 is the reflection equation") {
    for (BraidedSet const& bs : corpus(2)) {
      for (Word const& img : oracle::all_maps(bs.size())) {
        FiniteMap k(img);
        CHECK(garside_commutation_check(bs, k, 2, Precondition::skip).ok
              == is_reflection(bs, k));
      }
    }
  }
  SUBCASE("flip and identity") {
    for (std::size_t d = 1; d <= 5; ++d) {
      CHECK(garside_commutation_check(fixtures::flip(),
                                      FiniteMap::identity(2), d));
    }
  }
  SUBCASE("perturbed shift on P3") {
    auto      p3 = fixtures::p3();
    FiniteMap bad(Word{1, 2, 2});
    CHECK_THROWS_WITH_AS(garside_commutation_check(p3, bad, 3),
                         doctest::Contains("NotAReflection"), PropertyError);
    Report rep = garside_commutation_check(p3, bad, 3, Precondition::skip);
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.witness.size() == 4);
    Word        w(rep.witness.begin(), rep.witness.begin() + 3);
    std::size_t i     = static_cast<std::size_t>(rep.witness[3]);
    Word        lhs   = w;
    auto [x, y]       = p3(lhs[i - 1], lhs[i]);
    lhs[i - 1]        = x;
    lhs[i]            = y;
    lhs               = extend_k(p3, bad, lhs);
    Word rhs          = extend_k(p3, bad, w);
    auto [x2, y2]     = p3(rhs[3 - i - 1], rhs[3 - i]);
    rhs[3 - i - 1]    = x2;
    rhs[3 - i]        = y2;
    CHECK(lhs != rhs);
  }
}

TEST_CASE("k̄ is a reflection for r̄") {
  CHECK(monoid_reflection_check(fixtures::p3(), fixtures::shift(3, 1), 4));
  auto dq = dihedral_quandle();
  auto refl = oracle::right_reflections(dq);
  CHECK(refl.size() > 1);
  for (FiniteMap const& k : refl) {
    CHECK(monoid_reflection_check(dq, k, 4));
  }
  for (BraidedSet const& bs : corpus(3)) {
    for (FiniteMap const& k : oracle::right_reflections(bs)) {
      CHECK(monoid_reflection_check(bs, k, 4));
    }
  }
  // degree pair (1, 1) alone is the set-level equation
  for (BraidedSet const& bs : corpus(2)) {
    for (Word const& img : oracle::all_maps(bs.size())) {
      FiniteMap k(img);
      CHECK(monoid_reflection_check(bs, k, 2, Precondition::skip).ok
            == is_reflection(bs, k));
    }
  }
}

TEST_CASE("BRE3 transfers from degree one") {
  auto flip = bre3_transfer_check(fixtures::flip(), FiniteMap::identity(2), 4);
  CHECK(flip.degree_one.ok);
  CHECK(flip.all_degrees.ok);

  auto dq = bre3_transfer_check(dihedral_quandle(), FiniteMap::identity(3), 4);
  CHECK_FALSE(dq.degree_one.ok);
  CHECK_FALSE(dq.all_degrees.ok);
  CHECK(dq.degree_one.axiom == "BRE3");

  std::size_t holds = 0, fails = 0;
  for (BraidedSet const& bs : corpus(3)) {
    for (FiniteMap const& k : oracle::right_reflections(bs)) {
      auto rep = bre3_transfer_check(bs, k, 4);
      CHECK(rep.consistent());
      (rep.degree_one.ok ? holds : fails) += 1;
      if (rep.degree_one.ok && !bs.is_involutive()) {
        CHECK(rep.all_degrees.ok);
      }
    }
  }
  CHECK(holds > 0);
  CHECK(fails > 0);
}
