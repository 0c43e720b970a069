#include "reflectwist/braided_set.hpp"

#include <string>

namespace reflectwist {

  namespace {

    std::size_t check_square(Table const& t, char const* what) {
      std::size_t n = t.size();
      if (n == 0) {
        throw_shape(std::string(what) + " table is empty");
      }
      for (auto const& row : t) {
        if (row.size() != n) {
          throw_shape(std::string(what) + " table is not square");
        }
        for (Elem x : row) {
          if (x < 0 || static_cast<std::size_t>(x) >= n) {
            throw_range(std::string(what) + " entry " + std::to_string(x)
                        + " out of range 0.." + std::to_string(n - 1));
          }
        }
      }
      return n;
    }

    Word flatten(Table const& t) {
      Word w;
      w.reserve(t.size() * t.size());
      for (auto const& row : t) {
        w.insert(w.end(), row.begin(), row.end());
      }
      return w;
    }

    Table unflatten(Word const& w, std::size_t n) {
      Table t(n, Word(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          t[i][j] = w[i * n + j];
        }
      }
      return t;
    }

    bool rows_are_permutations(Word const& w, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        Word row(w.begin() + i * n, w.begin() + (i + 1) * n);
        if (!is_permutation(row)) {
          return false;
        }
      }
      return true;
    }

    Word invert_rows(Word const& w, std::size_t n) {
      Word inv(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          inv[i * n + w[i * n + j]] = static_cast<Elem>(j);
        }
      }
      return inv;
    }

    std::string triple_str(Elem a, Elem b, Elem c) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + ","
             + std::to_string(c) + ")";
    }

    // k on one leg of X^2
    SquareMap leg_map(FiniteMap const& k, Side side) {
      return SquareMap::from_function(k.size(), [&](Elem a, Elem b) {
        return side == Side::right ? Pair{a, k(b)} : Pair{k(a), b};
      });
    }

    // J(a, b) = (a ↼ k(b), b) computed from an arbitrary map on X^2.
    SquareMap guitar_of(SquareMap const& r, FiniteMap const& k) {
      return SquareMap::from_function(r.size(), [&](Elem a, Elem b) {
        return Pair{r(a, k(b)).second, b};
      });
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // BraidedSet
  ////////////////////////////////////////////////////////////////////////

  BraidedSet::BraidedSet(std::size_t n, Word sigma, Word rho)
      : _n(n), _sigma(std::move(sigma)), _rho(std::move(rho)) {
    _left_nd  = rows_are_permutations(_sigma, n);
    _right_nd = rows_are_permutations(_rho, n);
    if (_left_nd) {
      _sigma_inv = invert_rows(_sigma, n);
    }
    if (_right_nd) {
      _rho_inv = invert_rows(_rho, n);
    }
    auto r      = as_map();
    _invertible = r.is_bijective();
    _involutive = r.after(r).is_identity();
  }

  BraidedSet BraidedSet::validate(Table const& sigma, Table const& rho) {
    std::size_t n = check_square(sigma, "sigma");
    if (check_square(rho, "rho") != n) {
      throw_shape("sigma and rho have different sizes");
    }
    BraidedSet bs(n, flatten(sigma), flatten(rho));
    Report     rep = check_ybe(bs.as_map());
    if (!rep) {
      throw_property("YbeViolation",
                     rep.axiom + " fails at "
                         + triple_str(rep.witness[0], rep.witness[1],
                                      rep.witness[2]),
                     rep.witness);
    }
    return bs;
  }

  BraidedSet BraidedSet::from_map(SquareMap const& r) {
    std::size_t n = r.size();
    Table       sigma(n, Word(n)), rho(n, Word(n));
    for (Elem a = 0; a < static_cast<Elem>(n); ++a) {
      for (Elem b = 0; b < static_cast<Elem>(n); ++b) {
        Pair p      = r(a, b);
        sigma[a][b] = p.first;
        rho[b][a]   = p.second;
      }
    }
    return validate(sigma, rho);
  }

  SquareMap BraidedSet::as_map() const {
    return SquareMap::from_function(
        _n, [this](Elem a, Elem b) { return (*this)(a, b); });
  }

  FiniteMap BraidedSet::left_action(Elem a) const {
    return FiniteMap(
        Word(_sigma.begin() + a * _n, _sigma.begin() + (a + 1) * _n));
  }

  FiniteMap BraidedSet::right_action(Elem b) const {
    return FiniteMap(Word(_rho.begin() + b * _n, _rho.begin() + (b + 1) * _n));
  }

  Table BraidedSet::sigma_table() const {
    return unflatten(_sigma, _n);
  }

  Table BraidedSet::rho_table() const {
    return unflatten(_rho, _n);
  }

  void BraidedSet::require_right_nondegenerate() const {
    if (!_right_nd) {
      for (Elem b = 0; b < static_cast<Elem>(_n); ++b) {
        if (!right_action(b).is_bijective()) {
          throw_property("Degenerate",
                         "right action of " + std::to_string(b)
                             + " is not bijective",
                         {b});
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // YBE
  ////////////////////////////////////////////////////////////////////////

  Report check_ybe(SquareMap const& r) {
    auto n = static_cast<Elem>(r.size());
    auto L = [&r](Elem x, Elem y) { return r(x, y).first; };
    auto R = [&r](Elem x, Elem y) { return r(x, y).second; };
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem ab_l = L(a, b);
        Elem ab_r = R(a, b);
        for (Elem c = 0; c < n; ++c) {
          Elem bc_l = L(b, c);
          Elem bc_r = R(b, c);
          Elem t    = L(ab_r, c);
          if (L(ab_l, t) != L(a, bc_l)) {
            return Report::fail("YBE1", {a, b, c});
          }
          if (R(ab_l, t) != L(R(a, bc_l), bc_r)) {
            return Report::fail("YBE2", {a, b, c});
          }
          if (R(ab_r, c) != R(R(a, bc_l), bc_r)) {
            return Report::fail("YBE3", {a, b, c});
          }
        }
      }
    }
    return Report::pass();
  }

  bool braid_relation_holds(SquareMap const& r) {
    CubeMap r12 = CubeMap::on_first_two(r);
    CubeMap r23 = CubeMap::on_last_two(r);
    return compose({r12, r23, r12}) == compose({r23, r12, r23});
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  BraidedSet permutation_solution(FiniteMap const& lambda,
                                  FiniteMap const& rho) {
    if (lambda.size() != rho.size() || lambda.size() == 0) {
      throw_shape("λ and ρ must be non-empty and of equal size");
    }
    if (!lambda.is_bijective()) {
      throw_property("NotBijective", "λ is not a permutation");
    }
    if (!rho.is_bijective()) {
      throw_property("NotBijective", "ρ is not a permutation");
    }
    std::size_t n = lambda.size();
    for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
      if (lambda(rho(x)) != rho(lambda(x))) {
        throw_property("NotCommuting", "λρ and ρλ differ", {x});
      }
    }
    Table sigma(n, Word(n)), rt(n, Word(n));
    for (Elem a = 0; a < static_cast<Elem>(n); ++a) {
      for (Elem b = 0; b < static_cast<Elem>(n); ++b) {
        sigma[a][b] = lambda(b);
        rt[b][a]    = rho(a);
      }
    }
    return BraidedSet::validate(sigma, rt);
  }

  Shelf Shelf::validate(Table const& tri) {
    std::size_t n = check_square(tri, "shelf");
    Shelf       s(n, flatten(tri));
    auto        m = static_cast<Elem>(n);
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < m; ++b) {
        for (Elem c = 0; c < m; ++c) {
          if (s(s(a, b), c) != s(s(a, c), s(b, c))) {
            throw_property("ShelfViolation",
                           "self-distributivity fails at "
                               + triple_str(a, b, c),
                           {a, b, c});
          }
        }
      }
    }
    return s;
  }

  bool Shelf::is_rack() const {
    for (Elem b = 0; b < static_cast<Elem>(_n); ++b) {
      Word col(_n);
      for (Elem a = 0; a < static_cast<Elem>(_n); ++a) {
        col[a] = (*this)(a, b);
      }
      if (!is_permutation(col)) {
        return false;
      }
    }
    return true;
  }

  BraidedSet rack_solution(Shelf const& s) {
    std::size_t n = s.size();
    Table       sigma(n, Word(n)), rho(n, Word(n));
    for (Elem a = 0; a < static_cast<Elem>(n); ++a) {
      for (Elem b = 0; b < static_cast<Elem>(n); ++b) {
        sigma[a][b] = b;
        rho[b][a]   = s(a, b);
      }
    }
    return BraidedSet::validate(sigma, rho);
  }

  BraidedSet derived_solution(BraidedSet const& bs) {
    bs.require_right_nondegenerate();
    std::size_t n = bs.size();
    Table       sigma(n, Word(n)), rho(n, Word(n));
    for (Elem a = 0; a < static_cast<Elem>(n); ++a) {
      for (Elem b = 0; b < static_cast<Elem>(n); ++b) {
        sigma[a][b] = bs.right(bs.left(bs.right_inverse(a, b), b), a);
        rho[b][a]   = a;
      }
    }
    return BraidedSet::validate(sigma, rho);
  }

  ////////////////////////////////////////////////////////////////////////
  // Reflections
  ////////////////////////////////////////////////////////////////////////

  Report check_reflection(BraidedSet const& bs, FiniteMap const& k,
                          Side side) {
    if (k.size() != bs.size()) {
      throw_shape("map and solution have different sizes");
    }
    SquareMap r   = bs.as_map();
    SquareMap kk  = leg_map(k, side);
    SquareMap lhs = kk.after(r).after(kk).after(r);
    SquareMap rhs = r.after(kk).after(r).after(kk);
    auto      n   = static_cast<Elem>(bs.size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Pair x = lhs(a, b), y = rhs(a, b);
        if (x.first != y.first) {
          return Report::fail("RE1", {a, b});
        }
        if (x.second != y.second) {
          return Report::fail("RE2", {a, b});
        }
      }
    }
    return Report::pass();
  }

  bool is_reflection(BraidedSet const& bs, FiniteMap const& k, Side side) {
    return check_reflection(bs, k, side).ok;
  }

  SquareMap guitar_map(BraidedSet const& bs, FiniteMap const& k) {
    if (k.size() != bs.size()) {
      throw_shape("map and solution have different sizes");
    }
    return guitar_of(bs.as_map(), k);
  }

  SquareMap conjugate(SquareMap const& r, SquareMap const& f) {
    return f.after(r).after(f.inverse());
  }

  SquareMap guitar_conjugate(BraidedSet const& bs, FiniteMap const& k) {
    bs.require_right_nondegenerate();
    return conjugate(bs.as_map(), guitar_map(bs, k));
  }

  namespace {
    void require_reflection(BraidedSet const& bs, FiniteMap const& k,
                            char const* name) {
      Report rep = check_reflection(bs, k, Side::right);
      if (!rep) {
        throw_property("NotAReflection",
                       std::string(name) + " fails " + rep.axiom + " at ("
                           + std::to_string(rep.witness[0]) + ","
                           + std::to_string(rep.witness[1]) + ")",
                       rep.witness);
      }
    }
  }  // namespace

  BraidedSet k_derived(BraidedSet const& bs, FiniteMap const& k,
                       Precondition pre) {
    bs.require_right_nondegenerate();
    if (pre == Precondition::check) {
      require_reflection(bs, k, "k");
    }
    SquareMap by_conjugation = guitar_conjugate(bs, k);
    SquareMap by_formula
        = SquareMap::from_function(bs.size(), [&](Elem a, Elem b) {
            Elem a1 = bs.right_inverse(a, k(b));
            Elem v  = bs.right(a1, b);
            return Pair{bs.right(bs.left(a1, b), k(v)), v};
          });
    if (!(by_conjugation == by_formula)) {
      throw_property("AssertionFailure",
                     "J r J^{-1} differs from the closed k-derived formula");
    }
    return BraidedSet::from_map(by_conjugation);
  }

  char const* to_string(ComposeVariant v) {
    return v == ComposeVariant::kh ? "kh" : "hk";
  }

  SquareMap double_conjugation(BraidedSet const& bs, FiniteMap const& k,
                               FiniteMap const& h) {
    SquareMap rk = guitar_conjugate(bs, k);
    SquareMap jh = guitar_of(rk, h);
    if (!jh.is_bijective()) {
      throw_property("Degenerate", "guitar map of r^(k) is not bijective");
    }
    return conjugate(rk, jh);
  }

  namespace {
    Elem middle(FiniteMap const& k, FiniteMap const& h, Elem b,
                ComposeVariant v) {
      return v == ComposeVariant::kh ? k(h(b)) : h(k(b));
    }

    void check_composition_pre(BraidedSet const& bs, FiniteMap const& k,
                               FiniteMap const& h, Precondition pre) {
      bs.require_right_nondegenerate();
      if (pre == Precondition::check) {
        require_reflection(bs, k, "k");
        require_reflection(k_derived(bs, k), h, "h");
      }
    }
  }  // namespace

  ComposedTwist composed_twist_explicit(BraidedSet const& bs,
                                        FiniteMap const& k, FiniteMap const& h,
                                        ComposeVariant variant,
                                        Precondition   pre) {
    check_composition_pre(bs, k, h, pre);
    SquareMap table = SquareMap::from_function(bs.size(), [&](Elem a, Elem b) {
      // x = R_b^{-1}(a) = ρ^{-1}_{k(b)} ρ_{m(b)} ρ^{-1}_{h(b)} (a)
      Elem x = bs.right_inverse(a, h(b));
      x      = bs.right(x, middle(k, h, b, variant));
      x      = bs.right_inverse(x, k(b));
      Elem v = bs.right(x, b);
      Elem u = bs.left(x, b);
      u      = bs.right(u, k(v));
      u      = bs.right_inverse(u, middle(k, h, v, variant));
      u      = bs.right(u, h(v));
      return Pair{u, v};
    });
    bool matches = table == double_conjugation(bs, k, h);
    return {std::move(table), matches};
  }

  bool composition_condition(BraidedSet const& bs, FiniteMap const& k,
                             FiniteMap const& h, FiniteMap const& ell,
                             ComposeVariant variant, Precondition pre) {
    check_composition_pre(bs, k, h, pre);
    auto n = static_cast<Elem>(bs.size());
    for (Elem b = 0; b < n; ++b) {
      Elem m = middle(k, h, b, variant);
      for (Elem a = 0; a < n; ++a) {
        Elem rhs = bs.right(bs.right_inverse(bs.right(a, k(b)), m), h(b));
        if (bs.right(a, ell(b)) != rhs) {
          return false;
        }
      }
    }
    return true;
  }

  bool check_d_homomorphism(BraidedSet const& src, BraidedSet const& dst,
                            SquareMap const& f) {
    if (src.size() != dst.size() || f.size() != src.size()) {
      throw_property("SizeMismatch", "solutions and map differ in size");
    }
    return f.after(src.as_map()) == dst.as_map().after(f);
  }

}  // namespace reflectwist
