#include "reflectwist/monoid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

namespace reflectwist {

  namespace {

    constexpr std::uint64_t component_gate = 1'000'000;

    std::uint64_t power(std::size_t n, std::size_t d) {
      std::uint64_t p = 1;
      for (std::size_t i = 0; i < d; ++i) {
        if (p > (std::uint64_t{1} << 40)) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        p *= n;
      }
      return p;
    }

    void require_letters(Word const& w, std::size_t n) {
      for (Elem x : w) {
        if (x < 0 || static_cast<std::size_t>(x) >= n) {
          throw_range("letter " + std::to_string(x) + " out of range 0.."
                      + std::to_string(n - 1));
        }
      }
    }

    void require_map(BraidedSet const& bs, FiniteMap const& k) {
      if (k.size() != bs.size()) {
        throw_shape("map and solution have different sizes");
      }
    }

    void require_reflection(BraidedSet const& bs, FiniteMap const& k) {
      Report rep = check_reflection(bs, k, Side::right);
      if (!rep) {
        throw_property("NotAReflection", "k is not a right reflection",
                       rep.witness);
      }
    }

    // Crossing at positions i, i+1 of w, in place.
    void cross(BraidedSet const& bs, Word& w, std::size_t i) {
      Pair p   = bs(w[i], w[i + 1]);
      w[i]     = p.first;
      w[i + 1] = p.second;
    }

    struct UnionFind {
      std::vector<std::uint32_t> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0U);
      }
      std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          // smaller root wins, so roots are class minima
          if (x < y) {
            parent[y] = x;
          } else {
            parent[x] = y;
          }
        }
      }
    };

    void rewrite_range(BraidedSet const& bs, std::size_t d,
                       std::uint64_t begin, std::uint64_t end, UnionFind& uf) {
      std::size_t n = bs.size();
      for (std::uint64_t c = begin; c < end; ++c) {
        Word w = word_from_code(c, n, d);
        for (std::size_t i = 0; i + 1 < d; ++i) {
          Word v = w;
          cross(bs, v, i);
          uf.unite(static_cast<std::uint32_t>(c),
                   static_cast<std::uint32_t>(word_code(v, n)));
        }
      }
    }

    Word concat(Word u, Word const& v) {
      u.insert(u.end(), v.begin(), v.end());
      return u;
    }

    std::vector<GradedComponent> components(BraidedSet const& bs,
                                            std::size_t dmax) {
      std::vector<GradedComponent> out;
      for (std::size_t d = 0; d <= dmax; ++d) {
        out.push_back(build_component(bs, d));
      }
      return out;
    }

  }  // namespace

  std::uint64_t word_code(Word const& w, std::size_t n) {
    std::uint64_t c = 0;
    for (Elem x : w) {
      c = c * n + static_cast<std::uint64_t>(x);
    }
    return c;
  }

  Word word_from_code(std::uint64_t code, std::size_t n, std::size_t d) {
    Word w(d);
    for (std::size_t i = d; i-- > 0;) {
      w[i] = static_cast<Elem>(code % n);
      code /= n;
    }
    return w;
  }

  std::size_t GradedComponent::class_of(Word const& w) const {
    if (w.size() != _d) {
      throw_shape("word of length " + std::to_string(w.size())
                  + " in a degree " + std::to_string(_d) + " component");
    }
    require_letters(w, _n);
    return _class[word_code(w, _n)];
  }

  Word GradedComponent::representative(std::size_t c) const {
    return word_from_code(_reps.at(c), _n, _d);
  }

  std::vector<std::vector<Word>> GradedComponent::classes() const {
    std::vector<std::vector<Word>> out(_reps.size());
    for (std::uint64_t c = 0; c < _class.size(); ++c) {
      out[_class[c]].push_back(word_from_code(c, _n, _d));
    }
    return out;
  }

  GradedComponent build_component(BraidedSet const& bs, std::size_t d,
                                  unsigned jobs) {
    std::size_t   n     = bs.size();
    std::uint64_t words = power(n, d);
    require_gate("words in the graded component", words, component_gate);

    UnionFind uf(words);
    if (jobs <= 1 || words < 4096) {
      rewrite_range(bs, d, 0, words, uf);
    } else {
      std::vector<UnionFind>   local(jobs, UnionFind(words));
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back([&, j] {
          rewrite_range(bs, d, words * j / jobs, words * (j + 1) / jobs,
                        local[j]);
        });
      }
      for (auto& t : pool) {
        t.join();
      }
      for (auto& l : local) {
        for (std::uint32_t x = 0; x < words; ++x) {
          uf.unite(x, l.find(x));
        }
      }
    }

    GradedComponent g;
    g._n = n;
    g._d = d;
    g._class.resize(words);
    std::vector<std::uint32_t> id(words, 0);
    for (std::uint32_t x = 0; x < words; ++x) {
      std::uint32_t root = uf.find(x);
      if (root == x) {
        id[x] = static_cast<std::uint32_t>(g._reps.size());
        g._reps.push_back(x);
      }
      g._class[x] = id[root];
    }
    return g;
  }

  std::pair<Word, Word> extend_r(BraidedSet const& bs, Word const& u,
                                 Word const& v) {
    require_letters(u, bs.size());
    require_letters(v, bs.size());
    Word        w = concat(u, v);
    std::size_t p = u.size(), q = v.size();
    for (std::size_t i = p; i-- > 0;) {
      for (std::size_t j = i; j < i + q; ++j) {
        cross(bs, w, j);
      }
    }
    return {Word(w.begin(), w.begin() + q), Word(w.begin() + q, w.end())};
  }

  Word extend_k(BraidedSet const& bs, FiniteMap const& k, Word const& w) {
    require_map(bs, k);
    require_letters(w, bs.size());
    // innermost first: reflect the tail, then carry each earlier letter
    // across it and reflect it at the end
    Word out;
    for (std::size_t i = w.size(); i-- > 0;) {
      out.insert(out.begin(), w[i]);
      for (std::size_t j = 0; j + 1 < out.size(); ++j) {
        cross(bs, out, j);
      }
      out.back() = k(out.back());
    }
    return out;
  }

  Word garside_map(BraidedSet const& bs, FiniteMap const& k, std::size_t d) {
    std::size_t   n     = bs.size();
    std::uint64_t words = power(n, d);
    require_gate("words of the given degree", words, component_gate);
    Word table(words);
    for (std::uint64_t c = 0; c < words; ++c) {
      table[c] = static_cast<Elem>(
          word_code(extend_k(bs, k, word_from_code(c, n, d)), n));
    }
    return table;
  }

  Report garside_commutation_check(BraidedSet const& bs, FiniteMap const& k,
                                   std::size_t d, Precondition pre) {
    require_map(bs, k);
    if (pre == Precondition::check) {
      require_reflection(bs, k);
    }
    std::size_t n     = bs.size();
    Word        delta = garside_map(bs, k, d);
    for (std::uint64_t c = 0; c < delta.size(); ++c) {
      Word w = word_from_code(c, n, d);
      for (std::size_t i = 1; i < d; ++i) {
        Word lhs = w;
        cross(bs, lhs, i - 1);
        lhs      = word_from_code(delta[word_code(lhs, n)], n, d);
        Word rhs = word_from_code(delta[c], n, d);
        cross(bs, rhs, d - i - 1);
        if (lhs != rhs) {
          w.push_back(static_cast<Elem>(i));
          return Report::fail("Garside", w);
        }
      }
    }
    return Report::pass();
  }

  Report descent_check(BraidedSet const& bs, FiniteMap const& k,
                       std::size_t d) {
    require_map(bs, k);
    std::size_t n     = bs.size();
    auto        comps = components(bs, d);
    std::uint64_t words = power(n, d);
    for (std::uint64_t c = 0; c < words; ++c) {
      Word w = word_from_code(c, n, d);
      for (std::size_t i = 0; i + 1 < d; ++i) {
        Word w2 = w;
        cross(bs, w2, i);
        if (!comps[d].congruent(extend_k(bs, k, w), extend_k(bs, k, w2))) {
          Word wit = w;
          wit.push_back(static_cast<Elem>(i));
          return Report::fail("KDescends", wit);
        }
        for (std::size_t p = 1; p < d; ++p) {
          if (i + 1 == p) {
            continue;  // the rewrite straddles the split
          }
          auto split = [p](Word const& x) {
            return std::pair{Word(x.begin(), x.begin() + p),
                             Word(x.begin() + p, x.end())};
          };
          auto [u1, v1] = split(w);
          auto [u2, v2] = split(w2);
          auto r1 = extend_r(bs, u1, v1);
          auto r2 = extend_r(bs, u2, v2);
          if (!comps[d - p].congruent(r1.first, r2.first)
              || !comps[p].congruent(r1.second, r2.second)) {
            Word wit = w;
            wit.push_back(static_cast<Elem>(i));
            wit.push_back(static_cast<Elem>(p));
            return Report::fail("RDescends", wit);
          }
        }
      }
    }
    return Report::pass();
  }

  Report monoid_reflection_check(BraidedSet const& bs, FiniteMap const& k,
                                 std::size_t dmax, Precondition pre) {
    require_map(bs, k);
    if (pre == Precondition::check) {
      require_reflection(bs, k);
    }
    if (dmax < 2) {
      return Report::pass();
    }
    auto comps = components(bs, dmax - 1);
    auto r     = [&](std::pair<Word, Word> const& p) {
      return extend_r(bs, p.first, p.second);
    };
    auto k2 = [&](std::pair<Word, Word> p) {
      p.second = extend_k(bs, k, p.second);
      return p;
    };
    for (std::size_t d1 = 1; d1 < dmax; ++d1) {
      for (std::size_t d2 = 1; d1 + d2 <= dmax; ++d2) {
        for (std::size_t c1 = 0; c1 < comps[d1].class_count(); ++c1) {
          for (std::size_t c2 = 0; c2 < comps[d2].class_count(); ++c2) {
            std::pair<Word, Word> x{comps[d1].representative(c1),
                                    comps[d2].representative(c2)};
            auto lhs = k2(r(k2(r(x))));
            auto rhs = r(k2(r(k2(x))));
            if (!comps[d1].congruent(lhs.first, rhs.first)
                || !comps[d2].congruent(lhs.second, rhs.second)) {
              return Report::fail("RE", concat(x.first, x.second));
            }
          }
        }
      }
    }
    return Report::pass();
  }

  Bre3TransferReport bre3_transfer_check(BraidedSet const& bs,
                                         FiniteMap const& k,
                                         std::size_t      dmax) {
    require_map(bs, k);
    require_reflection(bs, k);
    dmax       = std::max<std::size_t>(dmax, 2);
    auto comps = components(bs, dmax - 1);

    Bre3TransferReport out;
    for (std::size_t d1 = 1; d1 < dmax; ++d1) {
      for (std::size_t d2 = 1; d1 + d2 <= dmax; ++d2) {
        Report* slot = (d1 == 1 && d2 == 1) ? &out.degree_one : nullptr;
        for (std::size_t c1 = 0; c1 < comps[d1].class_count(); ++c1) {
          for (std::size_t c2 = 0; c2 < comps[d2].class_count(); ++c2) {
            Word w = comps[d1].representative(c1);
            Word v = comps[d2].representative(c2);
            auto [wv, wr] = extend_r(bs, w, v);
            Word rhs = extend_r(bs, wv, extend_k(bs, k, wr)).first;
            if (!comps[d1].congruent(extend_k(bs, k, w), rhs)) {
              Report fail = Report::fail("BRE3", concat(w, v));
              if (slot && slot->ok) {
                *slot = fail;
              }
              if (out.all_degrees.ok) {
                out.all_degrees = fail;
              }
            }
          }
        }
      }
    }
    return out;
  }

}  // namespace reflectwist
