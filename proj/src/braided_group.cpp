#include "reflectwist/braided_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

namespace reflectwist {

  namespace {

    void require_size(std::size_t n, FiniteMap const& k, char const* what) {
      if (k.size() != n) {
        throw_shape(std::string(what) + " has size " + std::to_string(k.size())
                    + ", expected " + std::to_string(n));
      }
    }

    void require_square(Table const& t, std::size_t n, char const* what) {
      if (t.size() != n) {
        throw_shape(std::string(what) + " has the wrong number of rows");
      }
      for (auto const& row : t) {
        if (row.size() != n) {
          throw_shape(std::string(what) + " is not square");
        }
        for (Elem x : row) {
          if (x < 0 || static_cast<std::size_t>(x) >= n) {
            throw_range(std::string(what) + " entry " + std::to_string(x)
                        + " out of range");
          }
        }
      }
    }

    std::string word_str(Word const& w) {
      std::string s = "(";
      for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? "," : "") + std::to_string(w[i]);
      }
      return s + ")";
    }

    [[noreturn]] void fail_with(std::string const& kind, Report const& rep) {
      throw_property(kind, rep.axiom + " fails at " + word_str(rep.witness),
                     rep.witness);
    }

    Table to_table(std::size_t n, auto&& fn) {
      Table t(n, Word(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a][b] = fn(static_cast<Elem>(a), static_cast<Elem>(b));
        }
      }
      return t;
    }

    // Elements reachable from e by right multiplication with gens.
    std::size_t closure_size(FiniteGroup const& g, Word const& gens) {
      std::vector<bool> seen(g.size());
      std::deque<Elem>  todo{g.identity()};
      seen[g.identity()] = true;
      std::size_t count  = 1;
      while (!todo.empty()) {
        Elem x = todo.front();
        todo.pop_front();
        for (Elem s : gens) {
          Elem y = g(x, s);
          if (!seen[y]) {
            seen[y] = true;
            ++count;
            todo.push_back(y);
          }
        }
      }
      return count;
    }

    // Maps determined by generator images under f(x s) = f(x) f(s)
    // (anti = false) or f(x s) = f(s) f(x) (anti = true).
    std::vector<FiniteMap> maps_from_generators(FiniteGroup const& g,
                                                bool               anti) {
      std::size_t n    = g.size();
      Word        gens = g.generators();
      std::vector<FiniteMap> out;
      Word                   img(gens.size(), 0);
      while (true) {
        Word             f(n, -1);
        std::deque<Elem> todo{g.identity()};
        f[g.identity()] = g.identity();
        bool ok         = true;
        while (ok && !todo.empty()) {
          Elem x = todo.front();
          todo.pop_front();
          for (std::size_t i = 0; i < gens.size(); ++i) {
            Elem y = g(x, gens[i]);
            Elem v = anti ? g(img[i], f[x]) : g(f[x], img[i]);
            if (f[y] < 0) {
              f[y] = v;
              todo.push_back(y);
            } else if (f[y] != v) {
              ok = false;
              break;
            }
          }
        }
        if (ok) {
          FiniteMap m(f);
          if (anti ? g.is_antihomomorphism(m) : g.is_homomorphism(m)) {
            out.push_back(std::move(m));
          }
        }
        std::size_t i = 0;
        while (i < img.size() && ++img[i] == static_cast<Elem>(n)) {
          img[i++] = 0;
        }
        if (i == img.size()) {
          break;
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    bool is_class_function(FiniteGroup const& g, FiniteMap const& k) {
      Word cls = g.conjugacy_classes();
      for (std::size_t a = 0; a < g.size(); ++a) {
        if (k(static_cast<Elem>(a)) != k(cls[a])) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  Report check_group(Table const& mul) {
    std::size_t n = mul.size();
    if (n == 0) {
      return Report::fail("Shape", {});
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (mul[a].size() != n) {
        return Report::fail("Shape", {static_cast<Elem>(a)});
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (mul[a][b] < 0 || static_cast<std::size_t>(mul[a][b]) >= n) {
          return Report::fail("Range", {static_cast<Elem>(a),
                                        static_cast<Elem>(b)});
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
            return Report::fail("NotAssociative",
                                {static_cast<Elem>(a), static_cast<Elem>(b),
                                 static_cast<Elem>(c)});
          }
        }
      }
    }
    Elem e = -1;
    for (std::size_t x = 0; x < n && e < 0; ++x) {
      bool neutral = true;
      for (std::size_t y = 0; y < n && neutral; ++y) {
        neutral = mul[x][y] == static_cast<Elem>(y)
                  && mul[y][x] == static_cast<Elem>(y);
      }
      if (neutral) {
        e = static_cast<Elem>(x);
      }
    }
    if (e < 0) {
      return Report::fail("NoIdentity", {});
    }
    for (std::size_t x = 0; x < n; ++x) {
      bool found = false;
      for (std::size_t y = 0; y < n && !found; ++y) {
        found = mul[x][y] == e && mul[y][x] == e;
      }
      if (!found) {
        return Report::fail("NoInverse", {static_cast<Elem>(x)});
      }
    }
    return Report::pass();
  }

  FiniteGroup FiniteGroup::validate(Table const& mul) {
    Report rep = check_group(mul);
    if (rep.axiom == "Shape") {
      throw_shape("group table is not square");
    }
    if (rep.axiom == "Range") {
      throw_range("group table entry out of range at " + word_str(rep.witness));
    }
    if (!rep) {
      throw_property(rep.axiom, "group axioms fail at " + word_str(rep.witness),
                     rep.witness);
    }
    std::size_t n = mul.size();
    Word        flat;
    flat.reserve(n * n);
    for (auto const& row : mul) {
      flat.insert(flat.end(), row.begin(), row.end());
    }
    // check_group passed, so the idempotent is the identity
    Elem e = 0;
    while (mul[e][e] != e) {
      ++e;
    }
    Word inv(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (mul[x][y] == e) {
          inv[x] = static_cast<Elem>(y);
        }
      }
    }
    return FiniteGroup(n, std::move(flat), e, std::move(inv));
  }

  FiniteGroup FiniteGroup::validate(Table const& mul, Elem identity) {
    FiniteGroup g = validate(mul);
    if (g.identity() != identity) {
      throw_property("IdentityMismatch",
                     "identity is " + std::to_string(g.identity()) + ", not "
                         + std::to_string(identity),
                     {g.identity()});
    }
    return g;
  }

  Table FiniteGroup::table() const {
    return to_table(_n, [&](Elem a, Elem b) { return (*this)(a, b); });
  }

  bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = a + 1; b < _n; ++b) {
        if ((*this)(a, b) != (*this)(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  Word FiniteGroup::conjugacy_classes() const {
    Word cls(_n, -1);
    for (std::size_t a = 0; a < _n; ++a) {
      if (cls[a] >= 0) {
        continue;
      }
      for (std::size_t g = 0; g < _n; ++g) {
        Elem c   = (*this)((*this)(inv(g), a), g);
        cls[c]   = static_cast<Elem>(a);
      }
    }
    return cls;
  }

  Word FiniteGroup::generators() const {
    if (_n == 1) {
      return {};
    }
    for (std::size_t r = 1; r <= _n; ++r) {
      // lexicographic r-subsets of {0..n-1}
      Word pick(r);
      for (std::size_t i = 0; i < r; ++i) {
        pick[i] = static_cast<Elem>(i);
      }
      while (true) {
        if (closure_size(*this, pick) == _n) {
          return pick;
        }
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == static_cast<Elem>(_n - r + i - 1)) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) {
          pick[j] = pick[j - 1] + 1;
        }
      }
    }
    return {};
  }

  bool FiniteGroup::is_homomorphism(FiniteMap const& f) const {
    require_size(_n, f, "map");
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = 0; b < _n; ++b) {
        if (f((*this)(a, b)) != (*this)(f(a), f(b))) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteGroup::is_antihomomorphism(FiniteMap const& f) const {
    require_size(_n, f, "map");
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = 0; b < _n; ++b) {
        if (f((*this)(a, b)) != (*this)(f(b), f(a))) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteGroup::is_isomorphism_to(FiniteGroup const& target,
                                      FiniteMap const&   f) const {
    require_size(_n, f, "map");
    if (target.size() != _n || !f.is_bijective()) {
      return false;
    }
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = 0; b < _n; ++b) {
        if (f((*this)(a, b)) != target(f(a), f(b))) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // SkewBrace and braidings
  ////////////////////////////////////////////////////////////////////////

  SkewBrace SkewBrace::validate(Table const& add, Table const& mul) {
    FiniteGroup ga = FiniteGroup::validate(add);
    FiniteGroup gm = FiniteGroup::validate(mul);
    if (ga.size() != gm.size()) {
      throw_shape("additive and multiplicative tables differ in size");
    }
    if (ga.identity() != gm.identity()) {
      throw_property("IdentityMismatch", "the two groups have different identities",
                     {ga.identity(), gm.identity()});
    }
    auto n = static_cast<Elem>(ga.size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          Elem lhs = gm(a, ga(b, c));
          Elem rhs = ga(ga(gm(a, b), ga.inv(a)), gm(a, c));
          if (lhs != rhs) {
            throw_property("BraceViolation",
                           "a(b+c) != ab-a+ac at " + word_str({a, b, c}),
                           {a, b, c});
          }
        }
      }
    }
    return SkewBrace(std::move(ga), std::move(gm));
  }

  Report check_braiding(FiniteGroup const& g, SquareMap const& r) {
    if (r.size() != g.size()) {
      throw_shape("braiding and group have different sizes");
    }
    if (!r.is_bijective()) {
      return Report::fail("Bijective", {});
    }
    auto        n = static_cast<Elem>(g.size());
    Elem        e = g.identity();
    auto left     = [&](Elem a, Elem b) { return r(a, b).first; };
    auto right    = [&](Elem a, Elem b) { return r(a, b).second; };
    for (Elem a = 0; a < n; ++a) {
      if (!(r(a, e) == Pair{e, a})) {
        return Report::fail("BG1", {a});
      }
    }
    for (Elem b = 0; b < n; ++b) {
      if (!(r(e, b) == Pair{b, e})) {
        return Report::fail("BG2", {b});
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          Elem ab = right(a, b);
          Pair want{g(left(a, b), left(ab, c)), right(ab, c)};
          if (!(r(a, g(b, c)) == want)) {
            return Report::fail("BG3", {a, b, c});
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          Elem bc = left(b, c);
          Pair want{left(a, bc), g(right(a, bc), right(b, c))};
          if (!(r(g(a, b), c) == want)) {
            return Report::fail("BG4", {a, b, c});
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (g(left(a, b), right(a, b)) != g(a, b)) {
          return Report::fail("BG5", {a, b});
        }
      }
    }
    Report ybe = check_ybe(r);
    if (!ybe) {
      return Report::fail("YBE", ybe.witness);
    }
    return Report::pass();
  }

  BraidedGroup BraidedGroup::validate(FiniteGroup g, SquareMap const& r) {
    Report rep = check_braiding(g, r);
    if (!rep) {
      fail_with("BraidingViolation", rep);
    }
    BraidedSet bs = BraidedSet::from_map(r);
    return BraidedGroup{std::move(g), std::move(bs)};
  }

  bool BraidedGroup::is_faithful() const {
    std::set<Word> rows;
    for (auto const& row : bs.rho_table()) {
      if (!rows.insert(row).second) {
        return false;
      }
    }
    return true;
  }

  Report check_braiding(BraidedGroup const& bg) {
    return check_braiding(bg.grp, bg.bs.as_map());
  }

  BraidedGroup braiding_from_skewbrace(SkewBrace const& sb) {
    FiniteGroup const& g = sb.multiplicative();
    SquareMap          r = SquareMap::from_function(sb.size(), [&](Elem a, Elem b) {
      Elem l = sb.sum(sb.neg(a), sb.prod(a, b));
      return Pair{l, g(g.inv(l), g(a, b))};
    });
    return BraidedGroup::validate(g, r);
  }

  SkewBrace skewbrace_from_braiding(BraidedGroup const& bg) {
    FiniteGroup const& g   = bg.grp;
    Table              add = to_table(g.size(), [&](Elem a, Elem b) {
      return g(a, bg.bs.left(g.inv(a), b));
    });
    return SkewBrace::validate(add, g.table());
  }

  BraidedGroup trivial_braided_group(FiniteGroup const& g) {
    SquareMap r = SquareMap::from_function(g.size(), [&](Elem a, Elem b) {
      return Pair{b, g(g(g.inv(b), a), b)};
    });
    return BraidedGroup::validate(g, r);
  }

  ////////////////////////////////////////////////////////////////////////
  // Group reflections
  ////////////////////////////////////////////////////////////////////////

  GroupReflectionReport check_group_reflection(BraidedGroup const& bg,
                                               FiniteMap const&    k) {
    require_size(bg.size(), k, "k");
    auto                  n  = static_cast<Elem>(bg.size());
    FiniteGroup const&    g  = bg.grp;
    BraidedSet const&     bs = bg.bs;
    Elem                  e  = g.identity();
    GroupReflectionReport out;
    if (k(e) != e) {
      out.bre1 = Report::fail("BRE1", {e});
    }
    for (Elem a = 0; a < n && out.bre2.ok; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem kb = k(b);
        if (k(g(a, b)) != g(bs.left(a, kb), k(bs.right(a, kb)))) {
          out.bre2 = Report::fail("BRE2", {a, b});
          break;
        }
      }
    }
    for (Elem a = 0; a < n && out.bre3.ok; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (k(a) != bs.left(bs.left(a, b), k(bs.right(a, b)))) {
          out.bre3 = Report::fail("BRE3", {a, b});
          break;
        }
      }
    }
    for (Elem a = 0; a < n && out.bre3_prime.ok; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem x = k(g(a, k(b)));
        if (g(x, x) != e) {
          out.bre3_prime = Report::fail("BRE3'", {a, b});
          break;
        }
      }
    }
    if (out.is_group_reflection()) {
      out.set_level_re = is_reflection(bs, k);
      if (!*out.set_level_re) {
        throw_property("AssertionFailure",
                       "group reflection fails the set-level reflection equation");
      }
    }
    return out;
  }

  bool is_group_reflection(BraidedGroup const& bg, FiniteMap const& k) {
    return check_group_reflection(bg, k).is_group_reflection();
  }

  Table twisted_product(BraidedGroup const& bg, FiniteMap const& k) {
    require_size(bg.size(), k, "k");
    bg.bs.require_right_nondegenerate();
    return to_table(bg.size(), [&](Elem a, Elem b) {
      return bg.grp(bg.bs.right_inverse(a, k(b)), b);
    });
  }

  namespace {

    void require_group_reflection(BraidedGroup const& bg, FiniteMap const& k,
                                  char const* name) {
      GroupReflectionReport rep = check_group_reflection(bg, k);
      for (Report const* r : {&rep.bre1, &rep.bre2, &rep.bre3}) {
        if (!*r) {
          throw_property("NotAGroupReflection",
                         std::string(name) + " fails " + r->axiom + " at "
                             + word_str(r->witness),
                         r->witness);
        }
      }
    }

  }  // namespace

  BraidedGroup twisted_braided_group(BraidedGroup const& bg,
                                     FiniteMap const&    k) {
    require_group_reflection(bg, k, "k");
    FiniteGroup const& g = bg.grp;
    Table              t = twisted_product(bg, k);
    std::optional<BraidedGroup> out;
    try {
      FiniteGroup gk = FiniteGroup::validate(t, g.identity());
      out = BraidedGroup::validate(gk, k_derived(bg.bs, k).as_map());
    } catch (PropertyError const& err) {
      throw_property("AssertionFailure",
                     std::string("twist by a group reflection: ") + err.what());
    }
    for (std::size_t a = 0; a < g.size(); ++a) {
      auto x = static_cast<Elem>(a);
      if (out->grp.inv(x) != bg.bs.right(g.inv(x), k(x))) {
        throw_property("AssertionFailure",
                       "twisted inverse differs from a^{-1} <- k(a)", {x});
      }
    }
    Report bdt = check_group_drinfeld_twist(bg, twist_from_reflection(bg.bs, k));
    if (!bdt) {
      throw_property("AssertionFailure",
                     "reflection twist fails " + bdt.axiom, bdt.witness);
    }
    return std::move(*out);
  }

  ////////////////////////////////////////////////////////////////////////
  // Group Drinfeld twists
  ////////////////////////////////////////////////////////////////////////

  namespace {

    Report check_bdt2(FiniteGroup const& g, SquareMap const& f) {
      auto n = static_cast<Elem>(g.size());
      Elem e = g.identity();
      for (Elem a = 0; a < n; ++a) {
        if (!(f(a, e) == Pair{a, e})) {
          return Report::fail("BDT2", {a, e});
        }
      }
      for (Elem b = 0; b < n; ++b) {
        if (!(f(e, b) == Pair{e, b})) {
          return Report::fail("BDT2", {e, b});
        }
      }
      return Report::pass();
    }

  }  // namespace

  Report check_group_drinfeld_twist(BraidedGroup const& bg,
                                    TwistDatum const&   t) {
    Report rep = check_drinfeld_twist(bg.bs, t);
    if (!rep) {
      return rep;
    }
    FiniteGroup const& g = bg.grp;
    auto               n = static_cast<Elem>(g.size());
    Elem               e = g.identity();
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (!(t.Phi(e, b, c) == Triple{e, b, c})) {
          return Report::fail("BDT1", {e, b, c});
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (!(t.Psi(a, b, e) == Triple{a, b, e})) {
          return Report::fail("BDT1", {a, b, e});
        }
      }
    }
    if (Report r2 = check_bdt2(g, t.F); !r2) {
      return r2;
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          Triple p = t.Phi(a, b, c);
          if (!(Pair{p.a, g(p.b, p.c)} == t.F(a, g(b, c)))) {
            return Report::fail("BDT3", {a, b, c});
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          Triple p = t.Psi(a, b, c);
          if (!(Pair{g(p.a, p.b), p.c} == t.F(g(a, b), c))) {
            return Report::fail("BDT4", {a, b, c});
          }
        }
      }
    }
    SquareMap finv = t.F.inverse();
    Table     prod = to_table(g.size(), [&](Elem a, Elem b) {
      Pair p = finv(a, b);
      return g(p.first, p.second);
    });
    Report    grp  = check_group(prod);
    if (!grp) {
      throw_property("AssertionFailure",
                     "m F^{-1} fails " + grp.axiom + " at " + word_str(grp.witness));
    }
    Report br = check_braiding(FiniteGroup::validate(prod, e),
                               conjugate(bg.bs.as_map(), t.F));
    if (!br) {
      throw_property("AssertionFailure", "F r F^{-1} fails " + br.axiom + " at "
                                             + word_str(br.witness));
    }
    return Report::pass();
  }

  BraidedGroup twist_braided_group(BraidedGroup const& bg,
                                   TwistDatum const&   t) {
    Report rep = check_group_drinfeld_twist(bg, t);
    if (!rep) {
      fail_with("BdtViolation", rep);
    }
    SquareMap finv = t.F.inverse();
    Table     prod = to_table(bg.size(), [&](Elem a, Elem b) {
      Pair p = finv(a, b);
      return bg.grp(p.first, p.second);
    });
    return BraidedGroup::validate(FiniteGroup::validate(prod),
                                  conjugate(bg.bs.as_map(), t.F));
  }

  std::vector<TwistDatum> find_group_twist_data(BraidedGroup const& bg,
                                                SquareMap const&    f,
                                                std::size_t         limit) {
    FiniteGroup const& g = bg.grp;
    if (f.size() != g.size()) {
      throw_shape("map and braided group have different sizes");
    }
    if (!check_bdt2(g, f)) {
      return {};
    }
    IntertwinerQuery q   = twist_data_query(bg.bs, f);
    CubeMap          rot = twist_rotation(f);
    Elem             e   = g.identity();
    q.allowed = [&](Elem x, Elem y) {
      Triple s = rot.decode(x);
      Triple v = rot.decode(y);
      if (!(Pair{g(v.a, v.b), v.c} == f(g(s.a, s.b), s.c))) {
        return false;  // BDT4
      }
      if (s.c == e && !(v == s)) {
        return false;  // BDT1 for Ψ
      }
      Triple p = rot.decode(rot.code(static_cast<std::size_t>(y)));
      if (!(Pair{p.a, g(p.b, p.c)} == f(s.a, g(s.b, s.c)))) {
        return false;  // BDT3
      }
      return s.a != e || p == s;  // BDT1 for Φ
    };
    q.limit       = limit;
    q.domain_gate = 512;
    std::vector<TwistDatum> out;
    for (Word& psi : find_intertwiners(q)) {
      CubeMap    Psi(g.size(), std::move(psi));
      TwistDatum t{f, rot.after(Psi), Psi};
      if (!check_group_drinfeld_twist(bg, t)) {
        throw_property("AssertionFailure",
                       "restricted twist search returned a non-twist");
      }
      out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return std::tie(x.Phi, x.Psi) < std::tie(y.Phi, y.Psi);
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Viability
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(Viability v) {
    switch (v) {
      case Viability::not_group:
        return "not_group";
      case Viability::group_only:
        return "group_only";
      case Viability::braided_group:
        return "braided_group";
    }
    return "?";
  }

  ViabilityReport classify_twist_viability(BraidedGroup const& bg,
                                           FiniteMap const&    k,
                                           Precondition        pre) {
    require_size(bg.size(), k, "k");
    ViabilityReport out{};
    out.faithful = bg.is_faithful();
    if (pre == Precondition::check && !out.faithful) {
      throw_property("NotFaithful", "the right action is not faithful");
    }
    FiniteGroup const& g  = bg.grp;
    BraidedSet const&  bs = bg.bs;
    auto               n  = static_cast<Elem>(g.size());
    Elem               e  = g.identity();

    GroupReflectionReport rep;
    rep.bre1 = k(e) == e ? Report::pass() : Report::fail("BRE1", {e});
    for (Elem a = 0; a < n && rep.bre2.ok; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem kb = k(b);
        if (k(g(a, b)) != g(bs.left(a, kb), k(bs.right(a, kb)))) {
          rep.bre2 = Report::fail("BRE2", {a, b});
          break;
        }
      }
    }
    for (Elem a = 0; a < n && out.bre3_prime.ok; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem x  = k(g(a, k(b)));
        Elem x2 = g(x, x);
        bool ok = x2 == e;
        if (!out.faithful) {
          ok = true;
          for (Elem y = 0; y < n && ok; ++y) {
            ok = bs.right(y, x2) == y;
          }
        }
        if (!ok) {
          out.bre3_prime = Report::fail("BRE3'", {a, b});
          break;
        }
      }
    }
    out.bre1 = rep.bre1;
    out.bre2 = rep.bre2;
    out.predicted = !(out.bre1 && out.bre2) ? Viability::not_group
                    : out.bre3_prime       ? Viability::braided_group
                                           : Viability::group_only;

    Table t          = twisted_product(bg, k);
    out.group_axioms = check_group(t);
    if (!out.group_axioms) {
      out.direct          = Viability::not_group;
      out.braiding_axioms = Report::fail("NotAGroup", {});
    } else {
      out.braiding_axioms = check_braiding(FiniteGroup::validate(t),
                                           guitar_conjugate(bs, k));
      out.direct = out.braiding_axioms ? Viability::braided_group
                                       : Viability::group_only;
    }
    bool if_part = out.predicted == Viability::not_group
                   || out.direct != Viability::not_group;
    if (!if_part || (out.faithful && !out.group_consistent())) {
      throw_property("AssertionFailure",
                     std::string("direct classification ") + to_string(out.direct)
                         + " but predicted " + to_string(out.predicted),
                     k.images());
    }
    return out;
  }

  TwoTorsionReport two_torsion_check(BraidedGroup const& bg,
                                     FiniteMap const&    k) {
    require_size(bg.size(), k, "k");
    if (!k.is_bijective()) {
      throw_property("NotBijective", "k is not bijective");
    }
    require_group_reflection(bg, k, "k");
    FiniteGroup const& g = bg.grp;
    auto               n = static_cast<Elem>(g.size());
    TwoTorsionReport   out{true, bg.is_faithful(), true};
    for (Elem a = 0; a < n && out.rho_level; ++a) {
      Elem s = g(k(a), k(a));
      for (Elem x = 0; x < n; ++x) {
        if (bg.bs.right(x, s) != x) {
          out.rho_level = false;
          break;
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (g(a, a) != g.identity()) {
        out.exponent_two = false;
      }
    }
    return out;
  }

  EllCandidate ell_candidate(BraidedGroup const& bg, FiniteMap const& k,
                             FiniteMap const& h, ComposeVariant variant) {
    require_group_reflection(bg, k, "k");
    BraidedGroup twisted = twisted_braided_group(bg, k);
    require_group_reflection(twisted, h, "h");
    FiniteGroup const& g = bg.grp;
    Word               img(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto a   = static_cast<Elem>(i);
      Elem mid = variant == ComposeVariant::kh ? k(h(a)) : h(k(a));
      img[i]   = g(g(k(a), g.inv(mid)), h(a));
    }
    EllCandidate out;
    out.ell                    = FiniteMap(img);
    out.group_refl_for_r       = is_group_reflection(bg, out.ell);
    out.group_refl_for_twisted = is_group_reflection(twisted, out.ell);
    out.set_refl_for_r         = is_reflection(bg.bs, out.ell);
    out.set_refl_for_twisted   = is_reflection(twisted.bs, out.ell);
    out.composition_holds = guitar_conjugate(bg.bs, out.ell)
                            == double_conjugation(bg.bs, k, h);
    if (variant == ComposeVariant::kh && !out.composition_holds) {
      throw_property("AssertionFailure",
                     "r^(l) differs from the double twist by k then h",
                     out.ell.images());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Type I and one-legged twists
  ////////////////////////////////////////////////////////////////////////

  SquareMap type1_map(FiniteGroup const& src, std::vector<FiniteMap> const& fam) {
    std::size_t n = src.size();
    if (fam.size() != n) {
      throw_shape("family needs one map per element");
    }
    for (auto const& f : fam) {
      require_size(n, f, "family member");
    }
    return SquareMap::from_function(n, [&](Elem x, Elem y) {
      FiniteMap const& f = fam[src(x, y)];
      return Pair{f(x), f(y)};
    });
  }

  TwistDatum type1_twist(FiniteGroup const& src, FiniteGroup const& dst,
                         std::vector<FiniteMap> const& fam) {
    SquareMap f = type1_map(src, fam);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      auto x = static_cast<Elem>(i);
      if (!src.is_isomorphism_to(dst, fam[i])) {
        throw_property("NotIsomorphism", "f_x is not an isomorphism", {x});
      }
      if (fam[i](x) != x) {
        throw_property("NotFixing", "f_x does not fix x", {x});
      }
    }
    BraidedGroup            bg   = trivial_braided_group(src);
    std::vector<TwistDatum> data = find_group_twist_data(bg, f, 1);
    if (data.empty()) {
      throw_property("NoTwistData", "no (Phi, Psi) makes F a group twist");
    }
    BraidedGroup out    = twist_braided_group(bg, data.front());
    BraidedGroup expect = trivial_braided_group(dst);
    if (!(out.grp == expect.grp) || !(out.bs == expect.bs)) {
      throw_property("AssertionFailure",
                     "type I twist does not land on the target trivial brace");
    }
    return data.front();
  }

  OneLeggedReport one_legged_twist_check(BraidedGroup const& bg,
                                         Table const&        varrho) {
    FiniteGroup const& g  = bg.grp;
    BraidedSet const&  bs = bg.bs;
    std::size_t        n  = g.size();
    require_square(varrho, n, "varrho");
    Elem e  = g.identity();
    auto rv = [&](Elem b, Elem a) { return varrho[b][a]; };
    for (std::size_t a = 0; a < n; ++a) {
      if (varrho[e][a] != static_cast<Elem>(a)) {
        throw_property("HypothesisViolation", "varrho_1 is not the identity",
                       {static_cast<Elem>(a)});
      }
      if (varrho[a][e] != e) {
        throw_property("HypothesisViolation", "varrho_b(1) != 1",
                       {static_cast<Elem>(a)});
      }
    }
    OneLeggedReport out{Report::pass(), std::nullopt, false};
    auto            N = static_cast<Elem>(n);
    bool            bij = true;
    for (Elem b = 0; b < N && bij; ++b) {
      if (!is_permutation(varrho[b])) {
        out.conditions = Report::fail("RhoBijective", {b});
        bij            = false;
      }
    }
    // the Ψ-leg ϱ_c(ab) ϱ_c(b)^{-1}
    auto leg = [&](Elem a, Elem b, Elem c) {
      return g(rv(c, g(a, b)), g.inv(rv(c, b)));
    };
    for (Elem a = 0; a < N && out.conditions; ++a) {
      for (Elem b = 0; b < N && out.conditions; ++b) {
        for (Elem c = 0; c < N; ++c) {
          if (rv(rv(c, b), leg(a, b, c)) != rv(g(b, c), a)) {
            out.conditions = Report::fail("DT1", {a, b, c});
            break;
          }
        }
      }
    }
    for (Elem a = 0; a < N && out.conditions; ++a) {
      for (Elem b = 0; b < N && out.conditions; ++b) {
        for (Elem c = 0; c < N; ++c) {
          Elem x   = leg(a, b, c);
          Elem y   = rv(c, b);
          Elem arb = bs.right(a, b);
          if (g(rv(c, g(a, b)), g.inv(rv(c, arb))) != bs.left(x, y)) {
            out.conditions = Report::fail("DT2-left", {a, b, c});
            break;
          }
          if (rv(c, arb) != bs.right(x, y)) {
            out.conditions = Report::fail("DT2-right", {a, b, c});
            break;
          }
        }
      }
    }
    if (bij) {
      SquareMap  j = SquareMap::from_function(n, [&](Elem a, Elem b) {
        return Pair{rv(b, a), b};
      });
      TwistDatum t;
      t.F   = j;
      t.Phi = CubeMap::from_function(n, [&](Elem a, Elem b, Elem c) {
        return Triple{rv(g(b, c), a), b, c};
      });
      t.Psi = CubeMap::from_function(n, [&](Elem a, Elem b, Elem c) {
        return Triple{leg(a, b, c), rv(c, b), c};
      });
      std::vector<TwistDatum> found = find_group_twist_data(bg, j);
      out.full_check                = !found.empty();
      if (out.conditions) {
        if (!(found.size() == 1 && found.front() == t)) {
          throw_property("AssertionFailure",
                         "one-legged data are not the unique twist data");
        }
        out.datum = std::move(t);
      }
    }
    if (out.conditions.ok != out.full_check) {
      throw_property("AssertionFailure",
                     "one-legged conditions and the full check disagree");
    }
    return out;
  }

  std::optional<Decomposition> decompose_twist(BraidedGroup const& src,
                                               BraidedGroup const& dst,
                                               TwistDatum const&   t) {
    std::size_t n = src.size();
    require_gate("twist decomposition order", n, 6);
    if (dst.size() != n || t.size() != n) {
      throw_shape("decomposition inputs have different sizes");
    }
    Report rep = check_group_drinfeld_twist(src, t);
    if (!rep) {
      fail_with("BdtViolation", rep);
    }
    BraidedGroup img = twist_braided_group(src, t);
    if (!(img.grp == dst.grp) || !(img.bs == dst.bs)) {
      throw_property("HostMismatch", "the twist does not land on dst");
    }
    FiniteGroup const& g = src.grp;
    auto               N = static_cast<Elem>(n);

    // F = g ∘ F_f with g fixing the second leg forces f_z(y) = F_2(z y^{-1}, y).
    std::vector<FiniteMap> fam;
    for (Elem z = 0; z < N; ++z) {
      Word w(n);
      for (Elem y = 0; y < N; ++y) {
        w[y] = t.F(g(z, g.inv(y)), y).second;
      }
      FiniteMap f(w);
      if (!f.is_bijective() || f(z) != z) {
        return std::nullopt;
      }
      fam.push_back(std::move(f));
    }
    FiniteMap f1inv = fam[g.identity()].inverse();
    Table     bar   = to_table(n, [&](Elem a, Elem b) {
      return fam[g.identity()](g(f1inv(a), f1inv(b)));
    });
    if (!check_group(bar)) {
      return std::nullopt;
    }
    FiniteGroup inter = FiniteGroup::validate(bar);
    for (auto const& f : fam) {
      if (!g.is_isomorphism_to(inter, f)) {
        return std::nullopt;
      }
    }
    SquareMap               ff = type1_map(g, fam);
    std::vector<TwistDatum> d1 = find_group_twist_data(src, ff, 1);
    if (d1.empty()) {
      return std::nullopt;
    }
    BraidedGroup mid  = twist_braided_group(src, d1.front());
    SquareMap    rest = t.F.after(ff.inverse());
    Table        varrho(n, Word(n));
    for (Elem a = 0; a < N; ++a) {
      for (Elem b = 0; b < N; ++b) {
        Pair p = rest(a, b);
        if (p.second != b) {
          return std::nullopt;
        }
        varrho[b][a] = p.first;
      }
    }
    OneLeggedReport ol;
    try {
      ol = one_legged_twist_check(mid, varrho);
    } catch (PropertyError const& err) {
      if (err.kind() == "HypothesisViolation") {
        return std::nullopt;
      }
      throw;
    }
    if (!ol.datum) {
      return std::nullopt;
    }
    if (!(compose_twists(src.bs, d1.front(), *ol.datum).F == t.F)) {
      throw_property("AssertionFailure", "decomposition does not recompose to F");
    }
    return Decomposition{std::move(fam), std::move(inter), d1.front(), *ol.datum,
                         std::move(varrho)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Trivial skew braces
  ////////////////////////////////////////////////////////////////////////

  std::vector<FiniteMap> antihomomorphisms(FiniteGroup const& g) {
    return maps_from_generators(g, true);
  }

  std::vector<FiniteMap> endomorphisms(FiniteGroup const& g) {
    return maps_from_generators(g, false);
  }

  std::vector<FiniteMap> trivial_brace_reflections(FiniteGroup const& g) {
    std::vector<FiniteMap> out;
    for (auto const& k : antihomomorphisms(g)) {
      if (is_class_function(g, k)) {
        out.push_back(k);
      }
    }
    BraidedGroup           bg = trivial_braided_group(g);
    std::vector<FiniteMap> brute;
    std::size_t            n = g.size();
    if (n <= 5) {
      Word w(n, 0);
      while (true) {
        FiniteMap k(w);
        if (is_group_reflection(bg, k)) {
          brute.push_back(k);
        }
        std::size_t i = 0;
        while (i < n && ++w[i] == static_cast<Elem>(n)) {
          w[i++] = 0;
        }
        if (i == n) {
          break;
        }
      }
    } else {
      std::set<FiniteMap> cand;
      for (auto const& k : endomorphisms(g)) {
        cand.insert(k);
      }
      for (auto const& k : antihomomorphisms(g)) {
        cand.insert(k);
      }
      for (auto const& k : cand) {
        if (is_group_reflection(bg, k)) {
          brute.push_back(k);
        }
      }
    }
    std::sort(brute.begin(), brute.end());
    if (brute != out) {
      throw_property("AssertionFailure",
                     "class-function antihomomorphisms differ from the brute-force "
                     "group reflections");
    }
    return out;
  }

}  // namespace reflectwist
