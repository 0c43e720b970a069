#include "reflectwist/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iterator>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <tuple>

namespace reflectwist {

  namespace {

    // Runs fn(i) for i in [0, count) on up to `jobs` threads, handing out
    // indices from a shared counter; results are returned in index order.
    template <typename T, typename Fn>
    std::vector<T> run_branches(std::size_t count, unsigned jobs, Fn fn) {
      std::vector<std::vector<T>> parts(count);
      std::atomic<std::size_t>    next{0};
      std::exception_ptr          error;
      std::mutex                  error_lock;
      auto                        worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            parts[i] = fn(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_lock);
            if (!error) {
              error = std::current_exception();
            }
          }
        }
      };
      unsigned threads = std::max(1U, std::min<unsigned>(
                                          jobs, static_cast<unsigned>(count)));
      if (threads == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
          pool.emplace_back(worker);
        }
        for (auto& t : pool) {
          t.join();
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
      std::vector<T> out;
      for (auto& p : parts) {
        std::move(p.begin(), p.end(), std::back_inserter(out));
      }
      return out;
    }

    Table to_table(Word const& flat, std::size_t n) {
      Table t(n, Word(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a][b] = flat[a * n + b];
        }
      }
      return t;
    }

    Table relabel(Table const& t, Word const& p) {
      std::size_t n   = t.size();
      Word        inv = inverse_permutation(p);
      Table       out(n, Word(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          out[a][b] = p[t[inv[a]][inv[b]]];
        }
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////
    // Solutions
    ////////////////////////////////////////////////////////////////////

    struct SolutionSearch {
      std::size_t         n;
      SolutionConstraints c;
      Word                r;  // pair code -> pair code, -1 if open

      Elem at(Elem a, Elem b) const {
        return r[static_cast<std::size_t>(a) * n + b];
      }
      // r12 or r23 applied to a triple, or false if a cell is open.
      bool apply(bool first, Triple& t) const {
        Elem x = first ? at(t.a, t.b) : at(t.b, t.c);
        if (x < 0) {
          return false;
        }
        auto m = static_cast<Elem>(n);
        if (first) {
          t.a = x / m;
          t.b = x % m;
        } else {
          t.b = x / m;
          t.c = x % m;
        }
        return true;
      }
      bool ybe_ok() const {
        auto m = static_cast<Elem>(n);
        for (Elem a = 0; a < m; ++a) {
          for (Elem b = 0; b < m; ++b) {
            for (Elem d = 0; d < m; ++d) {
              Triple x{a, b, d}, y{a, b, d};
              if (apply(true, x) && apply(false, x) && apply(true, x)
                  && apply(false, y) && apply(true, y) && apply(false, y)
                  && !(x == y)) {
                return false;
              }
            }
          }
        }
        return true;
      }
      bool local_ok(std::size_t cell) const {
        Elem v = r[cell];
        auto m = static_cast<Elem>(n);
        Elem a = static_cast<Elem>(cell / n), b = static_cast<Elem>(cell % n);
        if (c.nondegenerate) {
          for (Elem x = 0; x < m; ++x) {
            Elem u = at(a, x), w = at(x, b);
            if (x != b && u >= 0 && u / m == v / m) {
              return false;
            }
            if (x != a && w >= 0 && w % m == v % m) {
              return false;
            }
          }
        }
        if (c.involutive) {
          // cells are filled in order, so r(x) is known for x < cell
          auto here = static_cast<Elem>(cell);
          if (static_cast<std::size_t>(v) < cell && r[v] != here) {
            return false;
          }
          for (std::size_t x = 0; x < cell; ++x) {
            if (r[x] == v || (r[x] == here && v != static_cast<Elem>(x))) {
              return false;
            }
          }
        }
        return true;
      }
      void run(std::size_t cell, std::vector<Word>& out) {
        if (cell == r.size()) {
          out.push_back(r);
          return;
        }
        for (Elem v = 0; v < static_cast<Elem>(r.size()); ++v) {
          r[cell] = v;
          if (local_ok(cell) && ybe_ok()) {
            run(cell + 1, out);
          }
        }
        r[cell] = -1;
      }
    };

    Word relabel_solution(Word const& r, std::size_t n, Word const& p) {
      Word        out(r.size());
      Word        inv = inverse_permutation(p);
      auto        m   = static_cast<Elem>(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          Elem x = r[inv[a] * n + inv[b]];
          out[a * n + b] = p[x / m] * m + p[x % m];
        }
      }
      return out;
    }

    std::vector<Word> all_permutations(std::size_t n) {
      std::vector<Word> out;
      Word              p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = static_cast<Elem>(i);
      }
      do {
        out.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

    ////////////////////////////////////////////////////////////////////
    // Cayley tables with associativity (and optionally brace) propagation
    ////////////////////////////////////////////////////////////////////

    class TableSearch {
     public:
      TableSearch(std::size_t n, Table const* add)
          : _n(n), _add(add), _t(n * n, -1), _pos(n * n, -1) {
        if (add) {
          _neg.resize(n);
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              if ((*add)[a][b] == 0) {
                _neg[a] = static_cast<Elem>(b);
              }
            }
          }
        }
      }

      // Identity 0, then everything that follows.
      bool start() {
        for (std::size_t x = 0; x < _n; ++x) {
          auto e = static_cast<Elem>(x);
          if (!assign(0, e, e) || !assign(e, 0, e)) {
            return false;
          }
        }
        return propagate();
      }

      std::size_t open_cell() const {
        for (std::size_t i = 0; i < _t.size(); ++i) {
          if (_t[i] < 0) {
            return i;
          }
        }
        return _t.size();
      }

      // The values the given open cell may take, in increasing order.
      Word candidates(std::size_t cell) const {
        Word        out;
        std::size_t a = cell / _n, b = cell % _n;
        for (std::size_t v = 0; v < _n; ++v) {
          bool used = _pos[a * _n + v] >= 0;
          for (std::size_t x = 0; x < _n && !used; ++x) {
            used = _t[x * _n + b] == static_cast<Elem>(v);
          }
          if (!used) {
            out.push_back(static_cast<Elem>(v));
          }
        }
        return out;
      }

      // All completions below the current state.
      void run(std::vector<Word>& out) {
        std::size_t cell = open_cell();
        if (cell == _t.size()) {
          out.push_back(_t);
          return;
        }
        for (Elem v : candidates(cell)) {
          std::size_t mark = _trail.size();
          if (assign(static_cast<Elem>(cell / _n), static_cast<Elem>(cell % _n),
                     v)
              && propagate()) {
            run(out);
          }
          undo(mark);
        }
      }

      bool try_assign(std::size_t cell, Elem v) {
        return assign(static_cast<Elem>(cell / _n), static_cast<Elem>(cell % _n),
                      v)
               && propagate();
      }

     private:
      Elem get(Elem a, Elem b) const {
        return _t[static_cast<std::size_t>(a) * _n + b];
      }
      // b with a b = c, or -1
      Elem left_quotient(Elem a, Elem c) const {
        return _pos[static_cast<std::size_t>(a) * _n + c];
      }
      Elem sum(Elem a, Elem b) const {
        return (*_add)[a][b];
      }

      bool assign(Elem a, Elem b, Elem v) {
        std::size_t cell = static_cast<std::size_t>(a) * _n + b;
        if (_t[cell] >= 0) {
          return _t[cell] == v;
        }
        if (_pos[static_cast<std::size_t>(a) * _n + v] >= 0) {
          return false;
        }
        for (std::size_t x = 0; x < _n; ++x) {
          if (_t[x * _n + b] == v) {
            return false;
          }
        }
        _t[cell]                                   = v;
        _pos[static_cast<std::size_t>(a) * _n + v] = b;
        _trail.push_back(cell);
        _queue.push_back(cell);
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          std::size_t cell = _trail.back();
          _trail.pop_back();
          _pos[(cell / _n) * _n + _t[cell]] = -1;
          _t[cell]                          = -1;
        }
        _queue.clear();
      }

      // Enforce (uv)w = u(vw) on the two cells that are still unknown once
      // the other two are.
      bool link(Elem lhs_row, Elem lhs_col, Elem rhs_row, Elem rhs_col) {
        Elem x = get(lhs_row, lhs_col), y = get(rhs_row, rhs_col);
        if (x >= 0 && y >= 0) {
          return x == y;
        }
        if (x >= 0) {
          return assign(rhs_row, rhs_col, x);
        }
        if (y >= 0) {
          return assign(lhs_row, lhs_col, y);
        }
        return true;
      }

      bool associativity(std::size_t cell) {
        auto p   = static_cast<Elem>(cell / _n);
        auto q   = static_cast<Elem>(cell % _n);
        Elem val = _t[cell];
        auto m   = static_cast<Elem>(_n);
        for (Elem z = 0; z < m; ++z) {
          // (p q) z = p (q z)
          if (Elem qz = get(q, z); qz >= 0 && !link(val, z, p, qz)) {
            return false;
          }
          // (z p) q = z (p q)
          if (Elem zp = get(z, p); zp >= 0 && !link(zp, q, z, val)) {
            return false;
          }
          // p = z v: (z v) q = z (v q)
          if (Elem v = left_quotient(z, p); v >= 0) {
            if (Elem vq = get(v, q); vq >= 0 && !link(p, q, z, vq)) {
              return false;
            }
          }
          // q = v w: (p v) w = p (v w)
          if (Elem w = left_quotient(z, q); w >= 0) {
            if (Elem pz = get(p, z); pz >= 0 && !link(pz, w, p, q)) {
              return false;
            }
          }
        }
        return true;
      }

      // a(b + c) = ab - a + ac within row p.
      bool brace(std::size_t cell) {
        auto p = static_cast<Elem>(cell / _n);
        auto x = static_cast<Elem>(cell % _n);
        auto m = static_cast<Elem>(_n);
        auto rhs = [&](Elem ab, Elem ac) { return sum(sum(ab, _neg[p]), ac); };
        auto solve_ac = [&](Elem ab, Elem abc) {
          return sum(sum(p, _neg[ab]), abc);
        };
        auto solve_ab = [&](Elem ac, Elem abc) {
          return sum(sum(abc, _neg[ac]), p);
        };
        for (Elem y = 0; y < m; ++y) {
          // (b, c) = (x, y), (y, x), and b + c = x
          for (int role = 0; role < 3; ++role) {
            Elem b, c;
            if (role == 0) {
              b = x, c = y;
            } else if (role == 1) {
              b = y, c = x;
            } else {
              b = y, c = sum(_neg[y], x);
            }
            Elem bc = sum(b, c);
            Elem ab = get(p, b), ac = get(p, c), abc = get(p, bc);
            if (ab >= 0 && ac >= 0) {
              if (!assign(p, bc, rhs(ab, ac))) {
                return false;
              }
            } else if (ab >= 0 && abc >= 0) {
              if (!assign(p, c, solve_ac(ab, abc))) {
                return false;
              }
            } else if (ac >= 0 && abc >= 0) {
              if (!assign(p, b, solve_ab(ac, abc))) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool propagate() {
        while (!_queue.empty()) {
          std::size_t cell = _queue.back();
          _queue.pop_back();
          if (!associativity(cell) || (_add && !brace(cell))) {
            _queue.clear();
            return false;
          }
        }
        return true;
      }

      std::size_t              _n;
      Table const*             _add;
      Word                     _neg;
      Word                     _t;
      Word                     _pos;
      std::vector<std::size_t> _trail;
      std::vector<std::size_t> _queue;
    };

    // All tables completing the search, split across jobs at the first
    // open cell.
    std::vector<Word> complete_tables(std::size_t n, Table const* add,
                                      unsigned jobs) {
      TableSearch root(n, add);
      if (!root.start()) {
        return {};
      }
      std::size_t cell = root.open_cell();
      if (cell == n * n) {
        std::vector<Word> out;
        root.run(out);
        return out;
      }
      Word cand = root.candidates(cell);
      return run_branches<Word>(cand.size(), jobs, [&](std::size_t i) {
        TableSearch       s = root;
        std::vector<Word> out;
        if (s.try_assign(cell, cand[i])) {
          s.run(out);
        }
        return out;
      });
    }

    Table min_under(Table const& t, std::vector<FiniteMap> const& maps) {
      Table best = t;
      for (FiniteMap const& f : maps) {
        best = std::min(best, relabel(t, f.images()));
      }
      return best;
    }

    ////////////////////////////////////////////////////////////////////
    // Regular subgroups of the holomorph
    ////////////////////////////////////////////////////////////////////

    using Perm = Word;

    Perm compose_perm(Perm const& f, Perm const& g) {
      Perm out(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = f[g[i]];
      }
      return out;
    }

    // The subgroup generated by `gens`, or empty if two of its elements
    // send 0 to the same point.
    std::vector<Perm> semiregular_closure(std::vector<Perm> const& gens,
                                          std::size_t              n) {
      Perm id(n);
      for (std::size_t i = 0; i < n; ++i) {
        id[i] = static_cast<Elem>(i);
      }
      std::vector<Perm> elems{id};
      std::vector<char> hit(n, 0);
      hit[0] = 1;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (Perm const& g : gens) {
          Perm x = compose_perm(g, elems[i]);
          if (std::find(elems.begin(), elems.end(), x) != elems.end()) {
            continue;
          }
          if (hit[x[0]]) {
            return {};
          }
          hit[x[0]] = 1;
          elems.push_back(x);
        }
      }
      std::sort(elems.begin(), elems.end());
      return elems;
    }

    void regular_subgroups(std::vector<Perm> const& gens,
                           std::vector<Perm> const& elems,
                           std::vector<std::vector<Perm>> const& seeds,
                           std::set<std::vector<Perm>>& seen,
                           std::vector<std::vector<Perm>>& out) {
      std::size_t       n = seeds.size();
      std::vector<char> hit(n, 0);
      for (Perm const& e : elems) {
        hit[e[0]] = 1;
      }
      std::size_t a = 0;
      while (a < n && hit[a]) {
        ++a;
      }
      if (a == n) {
        out.push_back(elems);
        return;
      }
      for (Perm const& s : seeds[a]) {
        auto more = gens;
        more.push_back(s);
        auto next = semiregular_closure(more, n);
        if (next.empty() || !seen.insert(next).second) {
          continue;
        }
        regular_subgroups(more, next, seeds, seen, out);
      }
    }

    std::vector<Word> holomorph_tables(FiniteGroup const& add,
                                       std::vector<FiniteMap> const& aut,
                                       unsigned jobs) {
      std::size_t n = add.size();
      // seeds[a]: the holomorph elements x -> a + α(x)
      std::vector<std::vector<Perm>> seeds(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (FiniteMap const& alpha : aut) {
          Perm s(n);
          for (std::size_t x = 0; x < n; ++x) {
            s[x] = add(static_cast<Elem>(a), alpha(static_cast<Elem>(x)));
          }
          seeds[a].push_back(s);
        }
      }
      Perm id(n);
      for (std::size_t i = 0; i < n; ++i) {
        id[i] = static_cast<Elem>(i);
      }
      std::vector<std::vector<Perm>> groups;
      if (n == 1) {
        groups.push_back({id});
      } else {
        groups = run_branches<std::vector<Perm>>(
            seeds[1].size(), jobs, [&](std::size_t i) {
              std::vector<Perm>              gens{seeds[1][i]};
              std::vector<std::vector<Perm>> found;
              auto first = semiregular_closure(gens, n);
              if (!first.empty()) {
                std::set<std::vector<Perm>> seen{first};
                regular_subgroups(gens, first, seeds, seen, found);
              }
              return found;
            });
      }
      std::vector<Word> out;
      for (auto const& g : groups) {
        std::vector<Perm const*> by_point(n);
        for (Perm const& p : g) {
          by_point[p[0]] = &p;
        }
        Word mul(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            mul[a * n + b] = (*by_point[a])[b];
          }
        }
        out.push_back(mul);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////
    // Group reflections by propagation through BRE2
    ////////////////////////////////////////////////////////////////////

    struct ReflectionSearch {
      BraidedGroup const& bg;
      std::size_t         n;
      Word                k;

      // k(ab) = (a ⇀ k(b)) k(a ↼ k(b)), to a fixpoint.
      bool propagate() {
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t b = 0; b < n; ++b) {
            if (k[b] < 0) {
              continue;
            }
            for (std::size_t a = 0; a < n; ++a) {
              Elem ka = k[bg.bs.right(static_cast<Elem>(a), k[b])];
              if (ka < 0) {
                continue;
              }
              Elem v  = bg.grp(bg.bs.left(static_cast<Elem>(a), k[b]), ka);
              Elem ab = bg.grp(static_cast<Elem>(a), static_cast<Elem>(b));
              if (k[ab] < 0) {
                k[ab]   = v;
                changed = true;
              } else if (k[ab] != v) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void run(Word const& order, std::vector<FiniteMap>& out) {
        if (!propagate()) {
          return;
        }
        auto open = std::find_if(order.begin(), order.end(),
                                 [&](Elem x) { return k[x] < 0; });
        if (open == order.end()) {
          FiniteMap f(k);
          if (is_group_reflection(bg, f)) {
            out.push_back(f);
          }
          return;
        }
        Word saved = k;
        for (Elem v = 0; v < static_cast<Elem>(n); ++v) {
          k[*open] = v;
          run(order, out);
          k = saved;
        }
      }
    };

    void require_order(std::string const& what, std::size_t n) {
      require_gate(what, n, 8);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////

  std::vector<BraidedSet> enumerate_solutions(std::size_t n,
                                              SolutionConstraints c,
                                              unsigned jobs) {
    if (n == 0) {
      throw_shape("carrier must be non-empty");
    }
    require_gate("solution search size", n, c.nondegenerate ? 4 : 3);
    SolutionSearch root{n, c, Word(n * n, -1)};
    auto           tables = run_branches<Word>(
        n * n, jobs, [&](std::size_t v) {
          SolutionSearch    s = root;
          std::vector<Word> out;
          s.r[0] = static_cast<Elem>(v);
          if (s.local_ok(0) && s.ybe_ok()) {
            s.run(1, out);
          }
          return out;
        });
    if (c.up_to_iso) {
      auto           perms = all_permutations(n);
      std::set<Word> reps;
      for (Word const& t : tables) {
        Word best = t;
        for (Word const& p : perms) {
          best = std::min(best, relabel_solution(t, n, p));
        }
        reps.insert(best);
      }
      tables.assign(reps.begin(), reps.end());
    }
    std::sort(tables.begin(), tables.end());
    std::vector<BraidedSet> out;
    for (Word const& t : tables) {
      out.push_back(BraidedSet::from_map(SquareMap(n, t)));
    }
    return out;
  }

  std::vector<FiniteMap> enumerate_reflections(BraidedSet const& bs,
                                               Side side) {
    std::size_t n = bs.size();
    require_order("reflection search size", n);
    Word k(n, -1);
    // one side of the RE on (a, b), or false while a needed k is open
    auto leg = [&](Pair& p) {
      Elem& x = side == Side::right ? p.second : p.first;
      if (k[x] < 0) {
        return false;
      }
      x = k[x];
      return true;
    };
    auto step = [&](Pair& p) { p = bs(p.first, p.second); };
    auto ok   = [&]() {
      for (Elem a = 0; a < static_cast<Elem>(n); ++a) {
        for (Elem b = 0; b < static_cast<Elem>(n); ++b) {
          Pair x{a, b}, y{a, b};
          step(x);
          if (!leg(x)) {
            continue;
          }
          step(x);
          if (!leg(x) || !leg(y)) {
            continue;
          }
          step(y);
          if (!leg(y)) {
            continue;
          }
          step(y);
          if (!(x == y)) {
            return false;
          }
        }
      }
      return true;
    };
    std::vector<FiniteMap>        out;
    std::function<void(std::size_t)> run = [&](std::size_t i) {
      if (i == n) {
        out.emplace_back(k);
        return;
      }
      for (Elem v = 0; v < static_cast<Elem>(n); ++v) {
        k[i] = v;
        if (ok()) {
          run(i + 1);
        }
      }
      k[i] = -1;
    };
    run(0);
    return out;  // generated in lexicographic order
  }

  Table canonical_group_table(FiniteGroup const& g) {
    std::size_t n    = g.size();
    std::size_t r    = g.generators().size();
    if (r == 0) {
      return g.table();
    }
    std::optional<Table> best;
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < r; ++i) {
      tuples *= n;
    }
    for (std::uint64_t code = 0; code < tuples; ++code) {
      Word          gens(r);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < r; ++i, c /= n) {
        gens[i] = static_cast<Elem>(c % n);
      }
      Word label(n, -1);
      Word order{g.identity()};
      label[g.identity()] = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (Elem s : gens) {
          Elem x = g(order[i], s);
          if (label[x] < 0) {
            label[x] = static_cast<Elem>(order.size());
            order.push_back(x);
          }
        }
      }
      if (order.size() == n) {
        Table t = relabel(g.table(), label);
        if (!best || t < *best) {
          best = std::move(t);
        }
      }
    }
    return *best;
  }

  std::vector<FiniteGroup> enumerate_groups(std::size_t n, unsigned jobs) {
    if (n == 0) {
      throw_shape("order must be positive");
    }
    require_order("group search order", n);
    std::set<Table> seen;
    for (Word const& t : complete_tables(n, nullptr, jobs)) {
      seen.insert(canonical_group_table(FiniteGroup::validate(to_table(t, n))));
    }
    std::vector<FiniteGroup> out;
    for (Table const& t : seen) {
      out.push_back(FiniteGroup::validate(t));
    }
    return out;
  }

  std::vector<FiniteMap> automorphisms(FiniteGroup const& g) {
    std::vector<FiniteMap> out;
    for (FiniteMap const& f : endomorphisms(g)) {
      if (f.is_bijective()) {
        out.push_back(f);
      }
    }
    return out;
  }

  char const* to_string(BraceStrategy s) {
    return s == BraceStrategy::holomorph ? "holomorph" : "direct";
  }

  std::vector<SkewBrace> enumerate_skew_braces(std::size_t   n,
                                               BraceStrategy strategy,
                                               unsigned      jobs) {
    if (n == 0) {
      throw_shape("order must be positive");
    }
    require_order("skew brace search order", n);
    std::vector<SkewBrace> out;
    for (FiniteGroup const& a : enumerate_groups(n, jobs)) {
      Table add = a.table();
      auto  aut = automorphisms(a);
      std::vector<Word> raw = strategy == BraceStrategy::direct
                                  ? complete_tables(n, &add, jobs)
                                  : holomorph_tables(a, aut, jobs);
      std::set<Table> reps;
      for (Word const& m : raw) {
        reps.insert(min_under(to_table(m, n), aut));
      }
      for (Table const& m : reps) {
        out.push_back(SkewBrace::validate(add, m));
      }
    }
    return out;
  }

  std::vector<FiniteMap> enumerate_group_reflections(BraidedGroup const& bg) {
    std::size_t n = bg.size();
    require_order("group reflection search order", n);
    Word order = bg.grp.generators();
    for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
      if (std::find(order.begin(), order.end(), x) == order.end()) {
        order.push_back(x);
      }
    }
    ReflectionSearch s{bg, n, Word(n, -1)};
    s.k[bg.grp.identity()] = bg.grp.identity();
    std::vector<FiniteMap> out;
    s.run(order, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<FiniteMap> enumerate_group_reflections(SkewBrace const& sb) {
    return enumerate_group_reflections(braiding_from_skewbrace(sb));
  }

  std::vector<FiniteMap> naive_group_reflections(BraidedGroup const& bg) {
    std::size_t   n     = bg.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= n;
    }
    require_gate("maps in the naive group reflection sweep", total,
                 10'000'000);
    std::vector<FiniteMap> out;
    for (std::uint64_t code = 0; code < total; ++code) {
      Word          img(n);
      std::uint64_t c = code;
      for (std::size_t i = n; i-- > 0; c /= n) {
        img[i] = static_cast<Elem>(c % n);
      }
      FiniteMap k(img);
      if (is_group_reflection(bg, k)) {
        out.push_back(k);
      }
    }
    return out;
  }

  char const* to_string(EllFailure f) {
    return f == EllFailure::for_original ? "not_group_reflection_for_original"
                                         : "not_group_reflection_for_twisted";
  }

  std::vector<EllCounterexample> find_ell_counterexamples(
      std::size_t min_order, std::size_t max_order, bool require_bijective_k,
      unsigned jobs, EllSearchStats* stats, ComposeVariant variant) {
    std::vector<EllCounterexample> out;
    EllSearchStats                 total;
    for (std::size_t m = std::max<std::size_t>(min_order, 1); m <= max_order;
         ++m) {
      auto                  braces = enumerate_skew_braces(m,
                                                           BraceStrategy::direct,
                                                           jobs);
      std::vector<std::size_t> pairs(braces.size(), 0);
      auto found = run_branches<EllCounterexample>(
          braces.size(), jobs, [&](std::size_t i) {
            std::vector<EllCounterexample> local;
            BraidedGroup bg = braiding_from_skewbrace(braces[i]);
            for (FiniteMap const& k : enumerate_group_reflections(bg)) {
              if (require_bijective_k && !k.is_bijective()) {
                continue;
              }
              BraidedGroup tw = twisted_braided_group(bg, k);
              for (FiniteMap const& h : enumerate_group_reflections(tw)) {
                ++pairs[i];
                EllCandidate c = ell_candidate(bg, k, h, variant);
                if (!c.group_refl_for_r) {
                  local.push_back({i, braces[i], k, h, c.ell,
                                   EllFailure::for_original, c});
                }
                if (!c.group_refl_for_twisted) {
                  local.push_back({i, braces[i], k, h, c.ell,
                                   EllFailure::for_twisted, c});
                }
              }
            }
            return local;
          });
      total.braces += braces.size();
      for (std::size_t p : pairs) {
        total.pairs += p;
      }
      out.insert(out.end(), found.begin(), found.end());
    }
    auto key = [](EllCounterexample const& e) {
      return std::tuple(e.brace.size(), e.brace_index, e.k, e.h, e.kind);
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](auto const& x, auto const& y) { return key(x) < key(y); });
    if (stats) {
      *stats = total;
    }
    return out;
  }

}  // namespace reflectwist
