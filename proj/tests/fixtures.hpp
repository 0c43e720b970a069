// Small solutions shared by the unit tests.

#pragma once

#include <algorithm>
#include <functional>

#include "reflectwist/braided_set.hpp"

namespace fixtures {
  using namespace reflectwist;

  inline Table table(std::size_t n, std::function<Elem(Elem, Elem)> f) {
    Table t(n, Word(n));
    for (Elem i = 0; i < static_cast<Elem>(n); ++i) {
      for (Elem j = 0; j < static_cast<Elem>(n); ++j) {
        t[i][j] = f(i, j);
      }
    }
    return t;
  }

  inline BraidedSet flip(std::size_t n = 2) {
    return BraidedSet::validate(table(n, [](Elem, Elem b) { return b; }),
                                table(n, [](Elem, Elem a) { return a; }));
  }

  // r(a, b) = (b + 1, a) on Z_3
  inline BraidedSet p3() {
    return BraidedSet::validate(
        table(3, [](Elem, Elem b) { return (b + 1) % 3; }),
        table(3, [](Elem, Elem a) { return a; }));
  }

  // a ◁ b = 2b - a on Z_3
  inline Table dihedral3() {
    return table(3, [](Elem a, Elem b) { return ((2 * b - a) % 3 + 3) % 3; });
  }

  inline FiniteMap shift(std::size_t n, Elem c) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = static_cast<Elem>((i + c) % n);
    }
    return FiniteMap(w);
  }

  // S_3 as permutations of {0,1,2}, listed in lexicographic order, with
  // element 0 the identity.
  inline Table s3_mul() {
    std::vector<Word> perms;
    Word              p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto idx = [&](Word const& q) {
      return static_cast<Elem>(std::find(perms.begin(), perms.end(), q)
                               - perms.begin());
    };
    return table(6, [&](Elem a, Elem b) {
      Word q(3);
      for (int i = 0; i < 3; ++i) {
        q[i] = perms[a][perms[b][i]];
      }
      return idx(q);
    });
  }

  inline Table cyclic_mul(std::size_t n) {
    return table(n, [n](Elem a, Elem b) {
      return static_cast<Elem>((a + b) % static_cast<Elem>(n));
    });
  }
}  // namespace fixtures
