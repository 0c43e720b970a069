#include "reflectwist/twist.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace reflectwist {

  namespace {

    std::string triple_str(Triple t) {
      return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ","
             + std::to_string(t.c) + ")";
    }

    // First triple code where two cube maps differ, or -1.
    Elem first_difference(CubeMap const& x, CubeMap const& y) {
      for (std::size_t i = 0; i < x.codes().size(); ++i) {
        if (x.code(i) != y.code(i)) {
          return static_cast<Elem>(i);
        }
      }
      return -1;
    }

    Word as_word(Triple t) {
      return {t.a, t.b, t.c};
    }

    std::uint64_t saturating_factorial(std::uint64_t n) {
      std::uint64_t f = 1;
      for (std::uint64_t i = 2; i <= n; ++i) {
        if (f > std::numeric_limits<std::uint64_t>::max() / i) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        f *= i;
      }
      return f;
    }

    constexpr std::uint64_t brute_force_gate  = 40320;
    constexpr std::uint64_t propagation_nodes = 10'000'000;

  }  // namespace

  TwistDatum TwistDatum::identity(std::size_t n) {
    return {SquareMap::identity(n), CubeMap::identity(n), CubeMap::identity(n)};
  }

  Report check_drinfeld_twist(BraidedSet const& bs, TwistDatum const& t) {
    std::size_t n = bs.size();
    if (t.F.size() != n || t.Phi.size() != n || t.Psi.size() != n) {
      throw_shape("twist datum and solution have different sizes");
    }
    if (!t.F.is_bijective()) {
      throw_property("NotBijective", "F is not bijective");
    }
    if (!t.Phi.is_bijective()) {
      throw_property("NotBijective", "Phi is not bijective");
    }
    if (!t.Psi.is_bijective()) {
      throw_property("NotBijective", "Psi is not bijective");
    }
    SquareMap r   = bs.as_map();
    CubeMap   r12 = CubeMap::on_first_two(r);
    CubeMap   r23 = CubeMap::on_last_two(r);
    CubeMap   F12 = CubeMap::on_first_two(t.F);
    CubeMap   F23 = CubeMap::on_last_two(t.F);

    struct Axiom {
      char const* name;
      CubeMap     lhs;
      CubeMap     rhs;
    };
    Axiom axioms[] = {
        {"DT1", F12.after(t.Psi), F23.after(t.Phi)},
        {"DT2", t.Psi.after(r12), r12.after(t.Psi)},
        {"DT3", t.Phi.after(r23), r23.after(t.Phi)},
    };
    for (auto const& ax : axioms) {
      Elem i = first_difference(ax.lhs, ax.rhs);
      if (i >= 0) {
        return Report::fail(ax.name, as_word(ax.lhs.decode(i)));
      }
    }
    if (!check_ybe(conjugate(r, t.F))) {
      throw_property("AssertionFailure",
                     "DT1-DT3 hold but F r F^{-1} violates YBE");
    }
    return Report::pass();
  }

  void require_drinfeld_twist(BraidedSet const& bs, TwistDatum const& t) {
    Report rep = check_drinfeld_twist(bs, t);
    if (!rep) {
      throw_property("DtViolation",
                     rep.axiom + " fails at "
                         + triple_str({rep.witness[0], rep.witness[1],
                                       rep.witness[2]}),
                     rep.witness);
    }
  }

  BraidedSet twisted_solution(BraidedSet const& bs, SquareMap const& f) {
    if (!f.is_bijective()) {
      throw_property("NotBijective", "F is not bijective");
    }
    return BraidedSet::from_map(conjugate(bs.as_map(), f));
  }

  CubeMap guitar_map3(BraidedSet const& bs, FiniteMap const& k) {
    return CubeMap::from_function(bs.size(), [&](Elem a, Elem b, Elem c) {
      // k̃(bc) = (b ⇀ k(c)) · k(b ↼ k(c)), acting on a letter by letter
      Elem x = bs.left(b, k(c));
      Elem y = k(bs.right(b, k(c)));
      return Triple{bs.right(bs.right(a, x), y), bs.right(b, k(c)), c};
    });
  }

  TwistDatum twist_from_reflection(BraidedSet const& bs, FiniteMap const& k) {
    bs.require_right_nondegenerate();
    Report rep = check_reflection(bs, k, Side::right);
    if (!rep) {
      throw_property("NotAReflection", "k fails " + rep.axiom, rep.witness);
    }
    std::size_t n = bs.size();
    TwistDatum  t;
    t.F   = guitar_map(bs, k);
    t.Psi = CubeMap::from_function(n, [&](Elem a, Elem b, Elem c) {
      return Triple{bs.right(a, bs.left(b, k(c))), bs.right(b, k(c)), c};
    });
    t.Phi = CubeMap::from_function(n, [&](Elem a, Elem b, Elem c) {
      Elem u = bs.right(bs.right(a, bs.left(b, k(c))), k(bs.right(b, k(c))));
      return Triple{u, b, c};
    });
    CubeMap j3 = guitar_map3(bs, k);
    if (!(CubeMap::on_first_two(t.F).after(t.Psi) == j3)
        || !(CubeMap::on_last_two(t.F).after(t.Phi) == j3)) {
      throw_property("AssertionFailure",
                     "F12 Psi, F23 Phi and the 3-strand guitar map differ");
    }
    require_drinfeld_twist(bs, t);
    return t;
  }

  TwistDatum compose_twists(BraidedSet const& bs, TwistDatum const& t1,
                            TwistDatum const& t2) {
    require_drinfeld_twist(bs, t1);
    BraidedSet rf = twisted_solution(bs, t1.F);
    require_drinfeld_twist(rf, t2);
    CubeMap    F12 = CubeMap::on_first_two(t1.F);
    CubeMap    F23 = CubeMap::on_last_two(t1.F);
    TwistDatum out{t2.F.after(t1.F),
                   compose({F23.inverse(), t2.Phi, F23, t1.Phi}),
                   compose({F12.inverse(), t2.Psi, F12, t1.Psi})};
    require_drinfeld_twist(bs, out);
    return out;
  }

  TwistDatum invert_twist(BraidedSet const& bs, TwistDatum const& t) {
    require_drinfeld_twist(bs, t);
    CubeMap    F12 = CubeMap::on_first_two(t.F);
    CubeMap    F23 = CubeMap::on_last_two(t.F);
    TwistDatum out{t.F.inverse(),
                   compose({F23, t.Phi.inverse(), F23.inverse()}),
                   compose({F12, t.Psi.inverse(), F12.inverse()})};
    require_drinfeld_twist(twisted_solution(bs, t.F), out);
    return out;
  }

  TwistDatum twist_from_isomorphism(BraidedSet const& bs, FiniteMap const& f) {
    if (f.size() != bs.size()) {
      throw_shape("map and solution have different sizes");
    }
    if (!f.is_bijective()) {
      throw_property("NotBijective", "f is not bijective");
    }
    std::size_t n = bs.size();
    TwistDatum  t;
    t.F = SquareMap::from_function(n, [&](Elem a, Elem b) {
      return Pair{f(a), f(b)};
    });
    t.Phi = CubeMap::from_function(n, [&](Elem a, Elem b, Elem c) {
      return Triple{f(a), b, c};
    });
    t.Psi = CubeMap::from_function(n, [&](Elem a, Elem b, Elem c) {
      return Triple{a, b, f(c)};
    });
    require_drinfeld_twist(bs, t);
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Intertwiner search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool satisfies(IntertwinerQuery const& q, Word const& a) {
      for (std::size_t i = 0; i < q.g.size(); ++i) {
        for (std::size_t x = 0; x < a.size(); ++x) {
          if (a[q.g[i][x]] != q.h[i][a[x]]) {
            return false;
          }
        }
      }
      if (q.allowed) {
        for (std::size_t x = 0; x < a.size(); ++x) {
          if (!q.allowed(static_cast<Elem>(x), a[x])) {
            return false;
          }
        }
      }
      return true;
    }

    std::vector<Word> brute_force(IntertwinerQuery const& q, std::size_t N) {
      require_gate("brute-force intertwiner search", saturating_factorial(N),
                   brute_force_gate);
      std::vector<Word> out;
      Word              a(N);
      std::iota(a.begin(), a.end(), 0);
      do {
        if (satisfies(q, a)) {
          out.push_back(a);
          if (out.size() >= q.limit) {
            break;
          }
        }
      } while (std::next_permutation(a.begin(), a.end()));
      return out;
    }

    class Propagator {
     public:
      Propagator(IntertwinerQuery const& q, std::size_t N)
          : _q(q), _n(N), _a(N, -1), _used(N, 0),
            _budget(size_gate(propagation_nodes)) {}

      std::vector<Word> run() {
        search(0);
        return std::move(_out);
      }

     private:
      bool assign(Elem x, Elem y) {
        if (_used[y] || (_q.allowed && !_q.allowed(x, y))) {
          return false;
        }
        if (++_nodes > _budget) {
          throw SizeLimitExceeded("intertwiner propagation", _nodes, _budget);
        }
        _a[x]    = y;
        _used[y] = 1;
        _trail.push_back(x);
        return true;
      }

      // Assigns x -> y and closes under A(g x) = h A(x).
      bool place(Elem x, Elem y) {
        std::size_t start = _trail.size();
        if (!assign(x, y)) {
          return false;
        }
        for (std::size_t i = start; i < _trail.size(); ++i) {
          Elem p = _trail[i];
          for (std::size_t j = 0; j < _q.g.size(); ++j) {
            Elem qp = _q.g[j][p];
            Elem v  = _q.h[j][_a[p]];
            if (_a[qp] == -1) {
              if (!assign(qp, v)) {
                return false;
              }
            } else if (_a[qp] != v) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          Elem x      = _trail.back();
          _used[_a[x]] = 0;
          _a[x]       = -1;
          _trail.pop_back();
        }
      }

      void search(std::size_t from) {
        while (from < _n && _a[from] != -1) {
          ++from;
        }
        if (from == _n) {
          _out.push_back(_a);
          return;
        }
        for (Elem y = 0; y < static_cast<Elem>(_n); ++y) {
          if (_out.size() >= _q.limit) {
            return;
          }
          if (_used[y]) {
            continue;
          }
          std::size_t mark = _trail.size();
          if (place(static_cast<Elem>(from), y)) {
            search(from + 1);
          }
          undo(mark);
        }
      }

      IntertwinerQuery const& _q;
      std::size_t             _n;
      Word                    _a;
      std::vector<char>       _used;
      std::vector<Elem>       _trail;
      std::vector<Word>       _out;
      std::uint64_t           _nodes = 0;
      std::uint64_t           _budget;
    };

  }  // namespace

  std::vector<Word> find_intertwiners(IntertwinerQuery const& q) {
    if (q.g.size() != q.h.size() || q.g.empty()) {
      throw_shape("intertwiner query needs matching generator lists");
    }
    std::size_t N = q.g.front().size();
    for (std::size_t i = 0; i < q.g.size(); ++i) {
      if (q.g[i].size() != N || q.h[i].size() != N) {
        throw_shape("intertwiner generators act on different sets");
      }
    }
    SearchStrategy s = q.strategy;
    if (s == SearchStrategy::automatic) {
      s = saturating_factorial(N) <= brute_force_gate
              ? SearchStrategy::brute_force
              : SearchStrategy::propagation;
    }
    if (s == SearchStrategy::brute_force) {
      return brute_force(q, N);
    }
    require_gate("intertwiner propagation domain", N, q.domain_gate);
    return Propagator(q, N).run();
  }

  CubeMap twist_rotation(SquareMap const& f) {
    return CubeMap::on_last_two(f).inverse().after(CubeMap::on_first_two(f));
  }

  IntertwinerQuery twist_data_query(BraidedSet const& bs, SquareMap const& f) {
    if (f.size() != bs.size()) {
      throw_shape("map and solution have different sizes");
    }
    if (!f.is_bijective()) {
      throw_property("NotBijective", "F is not bijective");
    }
    SquareMap r   = bs.as_map();
    CubeMap   r12 = CubeMap::on_first_two(r);
    CubeMap   r23 = CubeMap::on_last_two(r);
    // With Φ = F23^{-1} F12 Ψ, DT3 becomes Ψ r23 = (F12^{-1} F23 r23
    // F23^{-1} F12) Ψ.
    CubeMap          rot = twist_rotation(f);
    CubeMap          h23 = compose({rot.inverse(), r23, rot});
    IntertwinerQuery q;
    q.g = {r12.codes(), r23.codes()};
    q.h = {r12.codes(), h23.codes()};
    return q;
  }

  std::vector<TwistDatum> find_twist_data(BraidedSet const& bs,
                                          SquareMap const& f,
                                          SearchStrategy strategy,
                                          std::size_t limit) {
    IntertwinerQuery q = twist_data_query(bs, f);
    q.strategy         = strategy;
    q.limit            = limit;
    CubeMap                 rot = twist_rotation(f);
    std::vector<TwistDatum> out;
    for (Word& psi : find_intertwiners(q)) {
      CubeMap Psi(bs.size(), std::move(psi));
      out.push_back({f, rot.after(Psi), Psi});
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return std::tie(x.Phi, x.Psi) < std::tie(y.Phi, y.Psi);
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // B_3 representations
  ////////////////////////////////////////////////////////////////////////

  BraidRepresentation braid_rep(SquareMap const& r) {
    BraidRepresentation rep{CubeMap::on_first_two(r), CubeMap::on_last_two(r)};
    CubeMap lhs = compose({rep.gen12, rep.gen23, rep.gen12});
    CubeMap rhs = compose({rep.gen23, rep.gen12, rep.gen23});
    Elem    i   = first_difference(lhs, rhs);
    if (i >= 0) {
      Triple t = lhs.decode(i);
      throw_property("BraidRelationViolation",
                     "braid relation fails at " + triple_str(t), as_word(t));
    }
    return rep;
  }

  BraidRepresentation braid_rep(BraidedSet const& bs) {
    return braid_rep(bs.as_map());
  }

  std::vector<CubeMap> find_conjugators(BraidRepresentation const& r1,
                                        BraidRepresentation const& r2,
                                        SearchStrategy strategy,
                                        std::size_t limit) {
    if (r1.gen12.size() != r2.gen12.size()) {
      throw_property("SizeMismatch", "representations on different sets");
    }
    IntertwinerQuery q;
    q.g        = {r1.gen12.codes(), r1.gen23.codes()};
    q.h        = {r2.gen12.codes(), r2.gen23.codes()};
    q.strategy = strategy;
    q.limit    = limit;
    std::vector<CubeMap> out;
    for (Word& a : find_intertwiners(q)) {
      out.emplace_back(r1.gen12.size(), std::move(a));
    }
    return out;
  }

  std::optional<CubeMap> find_conjugator(BraidRepresentation const& r1,
                                         BraidRepresentation const& r2,
                                         SearchStrategy strategy) {
    auto all = find_conjugators(r1, r2, strategy, 1);
    if (all.empty()) {
      return std::nullopt;
    }
    return all.front();
  }

  bool is_conjugator(BraidRepresentation const& r1,
                     BraidRepresentation const& r2, CubeMap const& a) {
    return a.is_bijective() && a.after(r1.gen12) == r2.gen12.after(a)
           && a.after(r1.gen23) == r2.gen23.after(a);
  }

}  // namespace reflectwist
