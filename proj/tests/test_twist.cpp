#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracle.hpp"
#include "reflectwist/twist.hpp"

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

  // (a, b) -> (p(a), q(b))
  SquareMap product_map(FiniteMap const& p, FiniteMap const& q) {
    return SquareMap::from_function(p.size(), [&](Elem a, Elem b) {
      return Pair{p(a), q(b)};
    });
  }

  BraidedSet perm_z2(bool swap) {
    FiniteMap lambda(swap ? Word{1, 0} : Word{0, 1});
    return permutation_solution(lambda, FiniteMap::identity(2));
  }

  // 3-strand guitar map obtained by iterating single-strand guitar moves:
  // c is untouched, b is moved by k(c), and a by the two letters that
  // k(c) turns into once it has crossed b.
  Triple iterated_guitar(BraidedSet const& bs, FiniteMap const& k, Elem a,
                         Elem b, Elem c) {
    Pair bc = bs(b, k(c));
    Elem a1 = bs.right(a, bc.first);
    return {bs.right(a1, k(bc.second)), bc.second, c};
  }
}  // namespace

TEST_CASE("identity datum is a twist for any solution") {
  for (auto const& bs : corpus(2)) {
    CHECK(check_drinfeld_twist(bs, TwistDatum::identity(bs.size())).ok);
  }
}

TEST_CASE("non-bijective components are rejected") {
  auto       bs = fixtures::flip();
  TwistDatum t  = TwistDatum::identity(2);
  t.F           = SquareMap(2, Word{0, 0, 2, 3});
  CHECK_THROWS_AS(check_drinfeld_twist(bs, t), PropertyError);
}

TEST_CASE("translation on the swap permutation solution is not a twist") {
  auto       bs = perm_z2(true);
  TwistDatum t  = TwistDatum::identity(2);
  t.F           = product_map(fixtures::shift(2, 1), FiniteMap::identity(2));
  Report rep    = check_drinfeld_twist(bs, t);
  CHECK_FALSE(rep.ok);
  CHECK(rep.witness.size() == 3);
  CHECK_THROWS_AS(require_drinfeld_twist(bs, t), PropertyError);
}

TEST_CASE("reflection twists on every non-degenerate solution, n <= 3") {
  std::size_t count = 0;
  for (auto const& bs : corpus(3)) {
    for (auto const& k : oracle::right_reflections(bs)) {
      TwistDatum t = twist_from_reflection(bs, k);
      CHECK(check_drinfeld_twist(bs, t).ok);
      CHECK(check_ybe(conjugate(bs.as_map(), t.F)).ok);
      CubeMap j3 = CubeMap::from_function(
          bs.size(),
          [&](Elem a, Elem b, Elem c) { return iterated_guitar(bs, k, a, b, c); });
      CHECK(CubeMap::on_first_two(t.F).after(t.Psi) == j3);
      CHECK(t.F == guitar_map(bs, k));
      ++count;
    }
  }
  CHECK(count > 0);
}

TEST_CASE("P3 with k = +1 gives the identity twist") {
  auto t = twist_from_reflection(fixtures::p3(), fixtures::shift(3, 1));
  CHECK(t == TwistDatum::identity(3));
  CHECK_THROWS_AS(twist_from_reflection(fixtures::p3(), FiniteMap(Word{1, 0, 2})),
                  PropertyError);
}

TEST_CASE("composition and inversion of twists") {
  std::size_t checked = 0;
  for (auto const& bs : corpus(3)) {
    auto ks = oracle::right_reflections(bs);
    for (auto const& k : ks) {
      TwistDatum tk  = twist_from_reflection(bs, k);
      BraidedSet rk  = twisted_solution(bs, tk.F);
      TwistDatum inv = invert_twist(bs, tk);
      TwistDatum id  = compose_twists(bs, tk, inv);
      CHECK(id.F.is_identity());
      CHECK(twisted_solution(bs, id.F) == bs);
      CHECK(twisted_solution(rk, inv.F) == bs);
      CHECK(compose_twists(bs, TwistDatum::identity(bs.size()), tk) == tk);
      for (auto const& h : oracle::right_reflections(rk)) {
        TwistDatum th = twist_from_reflection(rk, h);
        TwistDatum c  = compose_twists(bs, tk, th);
        CHECK(c.F == th.F.after(tk.F));
        CHECK(conjugate(bs.as_map(), c.F) == double_conjugation(bs, k, h));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("composition of twists is associative") {
  auto d3 = rack_solution(Shelf::validate(fixtures::dihedral3()));
  auto ks = oracle::right_reflections(d3);
  REQUIRE(ks.size() >= 2);
  TwistDatum t1 = twist_from_reflection(d3, ks[1]);
  BraidedSet r1 = twisted_solution(d3, t1.F);
  for (auto const& h : oracle::right_reflections(r1)) {
    TwistDatum t2 = twist_from_reflection(r1, h);
    BraidedSet r2 = twisted_solution(r1, t2.F);
    TwistDatum t3 = invert_twist(d3, compose_twists(d3, t1, t2));
    CHECK(compose_twists(d3, compose_twists(d3, t1, t2), t3)
          == compose_twists(d3, t1, compose_twists(r1, t2, t3)));
    (void)r2;
  }
}

TEST_CASE("the conjugate-free inversion formula is not a twist in general") {
  // (F^{-1}, F23^{-1} Φ^{-1} F23, F12^{-1} Ψ^{-1} F12)
  bool found = false;
  for (auto const& bs : corpus(3)) {
    for (auto const& k : oracle::right_reflections(bs)) {
      TwistDatum t   = twist_from_reflection(bs, k);
      CubeMap    F12 = CubeMap::on_first_two(t.F);
      CubeMap    F23 = CubeMap::on_last_two(t.F);
      TwistDatum lit{t.F.inverse(),
                     compose({F23.inverse(), t.Phi.inverse(), F23}),
                     compose({F12.inverse(), t.Psi.inverse(), F12})};
      if (!check_drinfeld_twist(twisted_solution(bs, t.F), lit).ok) {
        found = true;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("twists from isomorphisms") {
  auto p = fixtures::p3();
  CHECK(twist_from_isomorphism(p, FiniteMap::identity(3))
        == TwistDatum::identity(3));
  auto t  = twist_from_isomorphism(p, fixtures::shift(3, 1));
  auto rt = twisted_solution(p, t.F);
  CHECK(rt == fixtures::p3());
  auto d3 = rack_solution(Shelf::validate(fixtures::dihedral3()));
  int  autos = 0;
  for (auto const& w : oracle::all_perms(3)) {
    FiniteMap f(w);
    auto      ff = SquareMap::from_function(3, [&](Elem a, Elem b) {
      return Pair{f(a), f(b)};
    });
    if (ff.after(d3.as_map()) == d3.as_map().after(ff)) {
      auto td = twist_from_isomorphism(d3, f);
      CHECK(twisted_solution(d3, td.F) == d3);
      ++autos;
    }
  }
  CHECK(autos == 6);
  CHECK_THROWS_AS(twist_from_isomorphism(p, FiniteMap::constant(3, 0)),
                  PropertyError);
}

TEST_CASE("find_twist_data on permutation solutions of Z2") {
  auto flip = fixtures::flip();
  auto data = find_twist_data(flip, SquareMap::identity(2));
  CHECK(std::find(data.begin(), data.end(), TwistDatum::identity(2))
        != data.end());
  auto swapF = product_map(FiniteMap(Word{1, 0}), FiniteMap::identity(2));
  CHECK_FALSE(find_twist_data(perm_z2(false), swapF).empty());
  for (auto const& t : data) {
    CHECK(check_drinfeld_twist(flip, t).ok);
  }
}

TEST_CASE("product maps on the swap permutation solution of Z2 are twists") {
  // r(a, b) = (1 - b, a), F(a, b) = (1 - a, b); hand-checked witness
  auto       bs = perm_z2(true);
  auto       F  = product_map(FiniteMap(Word{1, 0}), FiniteMap::identity(2));
  TwistDatum w{F, CubeMap::identity(2),
               CubeMap::from_function(2, [](Elem a, Elem b, Elem c) {
                 return Triple{1 - a, 1 - b, c};
               })};
  CHECK(check_drinfeld_twist(bs, w).ok);
  auto data = find_twist_data(bs, F);
  CHECK(std::find(data.begin(), data.end(), w) != data.end());
  for (auto const& p : oracle::all_perms(2)) {
    for (auto const& q : oracle::all_perms(2)) {
      auto G = product_map(FiniteMap(p), FiniteMap(q));
      CHECK_FALSE(find_twist_data(bs, G).empty());
    }
  }
}

TEST_CASE("brute force and propagation agree on n = 2") {
  auto perms = oracle::all_perms(4);
  for (auto const& bs : oracle::nondegenerate_solutions(2)) {
    for (auto const& w : perms) {
      SquareMap f(2, w);
      auto a = find_twist_data(bs, f, SearchStrategy::brute_force);
      auto b = find_twist_data(bs, f, SearchStrategy::propagation);
      CHECK(a == b);
    }
  }
}

TEST_CASE("B3 representations and conjugators") {
  auto bs  = fixtures::p3();
  auto rep = braid_rep(bs);
  auto a   = find_conjugator(rep, rep);
  REQUIRE(a.has_value());
  CHECK(a->is_identity());
  CHECK_THROWS_AS(braid_rep(SquareMap(2, Word{0, 0, 0, 1})), PropertyError);

  auto swap = perm_z2(true);
  auto F    = product_map(fixtures::shift(2, 1), FiniteMap::identity(2));
  auto rF   = conjugate(swap.as_map(), F);
  auto c    = find_conjugator(braid_rep(swap), braid_rep(rF),
                              SearchStrategy::brute_force);
  REQUIRE(c.has_value());
  CHECK(is_conjugator(braid_rep(swap), braid_rep(rF), *c));
}

TEST_CASE("F12 Psi conjugates the representations of r and r^(k)") {
  for (auto const& bs : corpus(3)) {
    for (auto const& k : oracle::right_reflections(bs)) {
      TwistDatum t = twist_from_reflection(bs, k);
      CubeMap    a = CubeMap::on_first_two(t.F).after(t.Psi);
      CHECK(is_conjugator(braid_rep(bs),
                          braid_rep(conjugate(bs.as_map(), t.F)), a));
    }
  }
}

TEST_CASE("twists and conjugators are in bijection on n = 2") {
  auto perms = oracle::all_perms(4);
  for (auto const& bs : oracle::nondegenerate_solutions(2)) {
    auto r1 = braid_rep(bs);
    for (auto const& w : perms) {
      SquareMap f(2, w);
      auto      data = find_twist_data(bs, f);
      auto      rF   = conjugate(bs.as_map(), f);
      if (!check_ybe(rF).ok) {
        CHECK(data.empty());
        continue;
      }
      auto conj = find_conjugators(r1, braid_rep(rF));
      CHECK(data.size() == conj.size());
      for (auto const& t : data) {
        CubeMap a = CubeMap::on_first_two(f).after(t.Psi);
        CHECK(std::find(conj.begin(), conj.end(), a) != conj.end());
      }
    }
  }
}

TEST_CASE("search gates") {
  auto bs = fixtures::flip(4);
  CHECK_THROWS_AS(find_twist_data(bs, SquareMap::identity(4)),
                  SizeLimitExceeded);
}
