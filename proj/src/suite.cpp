#include "reflectwist/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>

#include "reflectwist/monoid.hpp"
#include "reflectwist/search.hpp"

namespace reflectwist {

  using io::Json;

  namespace {

    bool quick(SuiteOptions const& o) {
      return o.level == SuiteLevel::quick;
    }

    std::vector<FiniteMap> all_maps(std::size_t n) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) {
        total *= n;
      }
      std::vector<FiniteMap> out;
      out.reserve(total);
      Word w(n, 0);
      for (std::size_t c = 0; c < total; ++c) {
        std::size_t x = c;
        for (std::size_t i = n; i-- > 0;) {
          w[i] = static_cast<Elem>(x % n);
          x /= n;
        }
        out.emplace_back(w);
      }
      return out;
    }

    SquareMap product_map(FiniteMap const& p, FiniteMap const& q) {
      return SquareMap::from_function(p.size(), [&](Elem a, Elem b) {
        return Pair{p(a), q(b)};
      });
    }

    BraidedSet perm_z2(bool swap) {
      return permutation_solution(FiniteMap(swap ? Word{1, 0} : Word{0, 1}),
                                  FiniteMap::identity(2));
    }

    Json pair_json(Pair p) {
      return Json::array({p.first, p.second});
    }

    Json ell_json(EllCounterexample const& c) {
      return {{"order", c.brace.size()},
              {"brace_index", c.brace_index},
              {"brace", io::to_json(c.brace)},
              {"k", c.k.images()},
              {"h", c.h.images()},
              {"ell", c.ell.images()},
              {"kind", to_string(c.kind)}};
    }

    // Shared, lazily built inputs.
    class Context {
     public:
      explicit Context(SuiteOptions const& o) : _opt(o) {}

      SuiteOptions const& opt() const {
        return _opt;
      }

      std::vector<BraidedSet> const& nondegenerate(std::size_t n) {
        auto it = _nd.find(n);
        if (it == _nd.end()) {
          it = _nd.emplace(n, enumerate_solutions(n, {true}, _opt.jobs)).first;
        }
        return it->second;
      }

      // Non-degenerate solutions of size <= 3, labelled.
      std::vector<BraidedSet> corpus3() {
        std::vector<BraidedSet> out;
        for (std::size_t n = 1; n <= 3; ++n) {
          auto const& part = nondegenerate(n);
          out.insert(out.end(), part.begin(), part.end());
        }
        return out;
      }

      std::vector<SkewBrace> const& braces(std::size_t n) {
        auto it = _braces.find(n);
        if (it == _braces.end()) {
          it = _braces
                   .emplace(n, enumerate_skew_braces(n, BraceStrategy::direct,
                                                     _opt.jobs))
                   .first;
        }
        return it->second;
      }

     private:
      SuiteOptions                                  _opt;
      std::map<std::size_t, std::vector<BraidedSet>> _nd;
      std::map<std::size_t, std::vector<SkewBrace>>  _braces;
    };

    ////////////////////////////////////////////////////////////////////
    // 1. Guitar maps are twists
    ////////////////////////////////////////////////////////////////////

    void guitar_twist(Context& ctx, CriterionResult& res) {
      std::size_t solutions = 0, pairs = 0, failures = 0;
      Json        witness;
      for (BraidedSet const& bs : ctx.corpus3()) {
        ++solutions;
        for (FiniteMap const& k : enumerate_reflections(bs)) {
          ++pairs;
          Report rep;
          try {
            TwistDatum t = twist_from_reflection(bs, k);
            rep          = check_drinfeld_twist(bs, t);
            if (rep.ok) {
              rep = check_ybe(k_derived(bs, k).as_map());
            }
          } catch (Error const& e) {
            rep = Report::fail(e.kind(), e.witness());
          }
          if (!rep.ok && failures++ == 0) {
            witness = {{"solution", io::to_json(bs)},
                       {"k", k.images()},
                       {"report", io::to_json(rep)}};
          }
        }
      }
      res.pass    = failures == 0 && pairs > 0;
      res.summary = std::to_string(pairs) + " reflection twists on "
                    + std::to_string(solutions) + " solutions, "
                    + std::to_string(failures) + " failures";
      res.details = {{"solutions", solutions}, {"pairs", pairs},
                     {"failures", failures}};
      if (failures) {
        res.details["witness"] = witness;
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 2. Closed form of the double twist
    ////////////////////////////////////////////////////////////////////

    struct VariantStats {
      std::size_t matches = 0;
      Json        witness;
    };

    template <typename Fn>
    void for_each_triple(std::vector<BraidedSet> const& sols, Fn&& fn) {
      for (BraidedSet const& bs : sols) {
        for (FiniteMap const& k : enumerate_reflections(bs)) {
          BraidedSet rk = k_derived(bs, k);
          for (FiniteMap const& h : enumerate_reflections(rk)) {
            fn(bs, k, h);
          }
        }
      }
    }

    Json triple_json(BraidedSet const& bs, FiniteMap const& k,
                     FiniteMap const& h) {
      return {{"solution", io::to_json(bs)}, {"k", k.images()},
              {"h", h.images()}};
    }

    // First pair where the closed form and the double conjugation differ.
    Json mismatch_json(BraidedSet const& bs, FiniteMap const& k,
                       FiniteMap const& h, ComposeVariant v) {
      SquareMap ex = composed_twist_explicit(bs, k, h, v, Precondition::skip)
                         .table;
      SquareMap dc = double_conjugation(bs, k, h);
      Json      w  = triple_json(bs, k, h);
      auto      n  = static_cast<Elem>(bs.size());
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (!(ex(a, b) == dc(a, b))) {
            w["pair"]               = {a, b};
            w["closed_form"]        = pair_json(ex(a, b));
            w["double_conjugation"] = pair_json(dc(a, b));
            return w;
          }
        }
      }
      return w;
    }

    struct CompositeScan {
      std::size_t  triples = 0;
      VariantStats kh, hk;
    };

    CompositeScan scan_composite(std::vector<BraidedSet> const& sols) {
      CompositeScan s;
      for_each_triple(sols, [&](BraidedSet const& bs, FiniteMap const& k,
                                FiniteMap const& h) {
        ++s.triples;
        for (auto v : {ComposeVariant::kh, ComposeVariant::hk}) {
          VariantStats& st = v == ComposeVariant::kh ? s.kh : s.hk;
          if (composed_twist_explicit(bs, k, h, v, Precondition::skip)
                  .matches_double_conjugation) {
            ++st.matches;
          } else if (st.witness.is_null()) {
            st.witness = mismatch_json(bs, k, h, v);
          }
        }
      });
      return s;
    }

    void explicit_composite(Context& ctx, CriterionResult& res) {
      std::vector<BraidedSet> sols = ctx.corpus3();
      if (!quick(ctx.opt())) {
        auto four = enumerate_solutions(4, {true, false, true}, ctx.opt().jobs);
        sols.insert(sols.end(), four.begin(), four.end());
      }
      CompositeScan s = scan_composite(sols);

      std::optional<ComposeVariant> selected;
      if (s.kh.matches == s.triples) {
        selected = ComposeVariant::kh;
      } else if (s.hk.matches == s.triples) {
        selected = ComposeVariant::hk;
      }

      // The displayed condition on ℓ against r^(ℓ) = (r^(k))^(h), over
      // every self-map ℓ.
      std::size_t                               checked = 0, disagree = 0;
      Json                                      dis_witness;
      std::map<std::size_t, std::vector<FiniteMap>> maps;
      if (selected) {
        for_each_triple(sols, [&](BraidedSet const& bs, FiniteMap const& k,
                                  FiniteMap const& h) {
          auto& ls = maps[bs.size()];
          if (ls.empty()) {
            ls = all_maps(bs.size());
          }
          SquareMap dc = double_conjugation(bs, k, h);
          for (FiniteMap const& l : ls) {
            ++checked;
            bool cond = composition_condition(bs, k, h, l, *selected,
                                              Precondition::skip);
            bool tab  = guitar_conjugate(bs, l) == dc;
            if (cond != tab && disagree++ == 0) {
              dis_witness        = triple_json(bs, k, h);
              dis_witness["ell"] = l.images();
            }
          }
        });
      }

      res.pass = selected.has_value() && disagree == 0 && s.triples > 0;
      res.summary =
          std::to_string(s.triples) + " triples: kh matches "
          + std::to_string(s.kh.matches) + ", hk matches "
          + std::to_string(s.hk.matches) + "; selected "
          + (selected ? to_string(*selected) : "none") + "; condition agrees on "
          + std::to_string(checked - disagree) + "/" + std::to_string(checked)
          + " maps";
      res.details = {
          {"max_size", quick(ctx.opt()) ? 3 : 4},
          {"size_4_up_to_isomorphism", !quick(ctx.opt())},
          {"triples", s.triples},
          {"kh_matches", s.kh.matches},
          {"hk_matches", s.hk.matches},
          {"selected", selected ? Json(to_string(*selected)) : Json()},
          {"condition_maps_checked", checked},
          {"condition_disagreements", disagree}};
      if (!s.hk.witness.is_null()) {
        res.details["hk_witness"] = s.hk.witness;
      }
      if (!s.kh.witness.is_null()) {
        res.details["kh_witness"] = s.kh.witness;
      }
      if (disagree) {
        res.details["condition_witness"] = dis_witness;
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 3. Twists of permutation solutions on Z_2
    ////////////////////////////////////////////////////////////////////

    struct PermutationCase {
      std::size_t               data = 0;
      bool                      conjugator = false;
      std::optional<TwistDatum> first;
      std::optional<CubeMap>    conj;
    };

    PermutationCase permutation_case(bool swap_lambda) {
      BraidedSet bs = perm_z2(swap_lambda);
      SquareMap  F  = product_map(FiniteMap(Word{1, 0}), FiniteMap::identity(2));
      PermutationCase out;
      auto data = find_twist_data(bs, F, SearchStrategy::brute_force);
      out.data  = data.size();
      if (!data.empty()) {
        out.first = data.front();
      }
      out.conj = find_conjugator(braid_rep(bs),
                                 braid_rep(conjugate(bs.as_map(), F)),
                                 SearchStrategy::brute_force);
      out.conjugator = out.conj.has_value();
      return out;
    }

    Json permutation_case_json(PermutationCase const& c) {
      Json j = {{"twist_data", c.data}, {"conjugator", c.conjugator}};
      if (c.first) {
        j["first_twist"] = io::to_json(*c.first);
      }
      if (c.conj) {
        j["first_conjugator"] = c.conj->codes();
      }
      return j;
    }

    void permutation_obstruction(Context&, CriterionResult& res) {
      PermutationCase sw = permutation_case(true);
      PermutationCase id = permutation_case(false);
      bool empty_half     = sw.data == 0 && !sw.conjugator;
      bool nonempty_half  = id.data > 0 && id.conjugator;
      res.pass            = empty_half && nonempty_half;
      res.summary = "lambda = swap: " + std::to_string(sw.data)
                    + " twist data, conjugator "
                    + (sw.conjugator ? "found" : "none")
                    + " (expected none); lambda = id: "
                    + std::to_string(id.data) + " twist data, conjugator "
                    + (id.conjugator ? "found" : "none");
      res.details = {{"swap", permutation_case_json(sw)},
                     {"identity", permutation_case_json(id)},
                     {"empty_half", empty_half},
                     {"nonempty_half", nonempty_half}};
    }

    ////////////////////////////////////////////////////////////////////
    // 4. B_3 representations
    ////////////////////////////////////////////////////////////////////

    void braid_representation(Context& ctx, CriterionResult& res) {
      std::size_t twists = 0, bad = 0;
      for (BraidedSet const& bs : ctx.corpus3()) {
        auto r1 = braid_rep(bs);
        for (FiniteMap const& k : enumerate_reflections(bs)) {
          TwistDatum t = twist_from_reflection(bs, k);
          CubeMap    a = CubeMap::on_first_two(t.F).after(t.Psi);
          ++twists;
          bad += !is_conjugator(r1, braid_rep(k_derived(bs, k).as_map()), a);
        }
      }

      std::vector<Word> perms;
      Word              p{0, 1, 2, 3};
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::size_t pairs = 0, agree = 0, with_twist = 0;
      Json        witness;
      for (BraidedSet const& bs : enumerate_solutions(2)) {
        auto r1 = braid_rep(bs);
        for (Word const& w : perms) {
          SquareMap f(2, w);
          SquareMap rf = conjugate(bs.as_map(), f);
          bool tw = !find_twist_data(bs, f, SearchStrategy::automatic, 1).empty();
          bool cj = braid_relation_holds(rf)
                    && find_conjugator(r1, braid_rep(rf)).has_value();
          ++pairs;
          with_twist += tw;
          if (tw == cj) {
            ++agree;
          } else if (witness.is_null()) {
            witness = {{"solution", io::to_json(bs)}, {"F", w},
                       {"twist", tw}, {"conjugator", cj}};
          }
        }
      }
      res.pass    = bad == 0 && agree == pairs && twists > 0;
      res.summary = std::to_string(twists - bad) + "/" + std::to_string(twists)
                    + " reflection twists conjugate; n = 2 existence agrees on "
                    + std::to_string(agree) + "/" + std::to_string(pairs)
                    + " (solution, F) pairs";
      res.details = {{"reflection_twists", twists},
                     {"non_conjugating", bad},
                     {"n2_pairs", pairs},
                     {"n2_agree", agree},
                     {"n2_with_twist", with_twist}};
      if (!witness.is_null()) {
        res.details["witness"] = witness;
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 5. Braided groups and their twists
    ////////////////////////////////////////////////////////////////////

    void braided_group_twist(Context& ctx, CriterionResult& res) {
      std::size_t braces = 0, roundtrip_bad = 0;
      for (std::size_t n = 1; n <= 6; ++n) {
        for (SkewBrace const& sb : ctx.braces(n)) {
          ++braces;
          BraidedGroup bg = braiding_from_skewbrace(sb);
          SkewBrace    back = skewbrace_from_braiding(bg);
          BraidedGroup again = braiding_from_skewbrace(back);
          roundtrip_bad += !(back == sb) || !(again.bs == bg.bs);
        }
      }
      std::size_t max_order = quick(ctx.opt()) ? 4 : 8;
      std::size_t refl = 0, bad = 0;
      Json        witness;
      for (std::size_t n = 1; n <= max_order; ++n) {
        for (SkewBrace const& sb : ctx.braces(n)) {
          BraidedGroup bg = braiding_from_skewbrace(sb);
          for (FiniteMap const& k : enumerate_group_reflections(bg)) {
            ++refl;
            Report rep;
            try {
              BraidedGroup tw = twisted_braided_group(bg, k);
              rep             = check_group(tw.grp.table());
              if (rep.ok) {
                rep = check_braiding(tw);
              }
              if (rep.ok) {
                rep = check_group_drinfeld_twist(
                    bg, twist_from_reflection(bg.bs, k));
              }
            } catch (Error const& e) {
              rep = Report::fail(e.kind(), e.witness());
            }
            if (!rep.ok && bad++ == 0) {
              witness = {{"brace", io::to_json(sb)}, {"k", k.images()},
                         {"report", io::to_json(rep)}};
            }
          }
        }
      }
      res.pass = roundtrip_bad == 0 && bad == 0;
      res.summary = "round trip exact on " + std::to_string(braces - roundtrip_bad)
                    + "/" + std::to_string(braces)
                    + " skew braces of order <= 6; "
                    + std::to_string(refl - bad) + "/" + std::to_string(refl)
                    + " group reflections (order <= "
                    + std::to_string(max_order) + ") twist to braided groups";
      res.details = {{"braces", braces},
                     {"roundtrip_failures", roundtrip_bad},
                     {"max_order", max_order},
                     {"group_reflections", refl},
                     {"twist_failures", bad}};
      if (bad) {
        res.details["witness"] = witness;
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 6. Viability of k-twisting
    ////////////////////////////////////////////////////////////////////

    void twist_viability(Context& ctx, CriterionResult& res) {
      std::size_t faithful = 0, maps = 0, group_bad = 0, braided_bad = 0;
      std::size_t bre3 = 0, implication_bad = 0, loose_maps = 0;
      std::size_t loose_rho_bad = 0, loose_full_bad = 0;
      std::map<std::size_t, std::size_t> faithful_by_order;
      Json braided_witness, implication_witness;
      for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<FiniteMap> ks = all_maps(n);
        for (SkewBrace const& sb : ctx.braces(n)) {
          BraidedGroup bg = braiding_from_skewbrace(sb);
          bool         f  = bg.is_faithful();
          if (n >= 5 && !f && quick(ctx.opt())) {
            continue;
          }
          faithful += f;
          faithful_by_order[n] += f;
          Elem e = bg.grp.identity();
          for (FiniteMap const& k : ks) {
            if (n >= 5 && k(e) != e) {
              continue;
            }
            ViabilityReport rep = classify_twist_viability(
                bg, k, f ? Precondition::check : Precondition::skip);
            if (f) {
              ++maps;
              group_bad += !rep.group_consistent();
              if (!rep.consistent() && braided_bad++ == 0) {
                braided_witness = {{"brace", io::to_json(sb)},
                                   {"k", k.images()},
                                   {"direct", to_string(rep.direct)},
                                   {"predicted", to_string(rep.predicted)},
                                   {"bre3_prime", io::to_json(rep.bre3_prime)}};
              }
            } else {
              ++loose_maps;
            }
            if (rep.bre1.ok && rep.bre2.ok) {
              GroupReflectionReport gr = check_group_reflection(bg, k);
              if (!gr.is_group_reflection()) {
                continue;
              }
              if (!f) {
                // only the ρ-level form is expected here
                loose_rho_bad += !rep.bre3_prime.ok;
                loose_full_bad += !gr.bre3_prime.ok;
                continue;
              }
              ++bre3;
              if (!gr.bre3_prime.ok && implication_bad++ == 0) {
                implication_witness = {{"brace", io::to_json(sb)},
                                       {"k", k.images()},
                                       {"bre3_prime", io::to_json(gr.bre3_prime)}};
              }
            }
          }
        }
      }
      res.pass = group_bad == 0 && braided_bad == 0 && implication_bad == 0;
      res.summary =
          std::to_string(faithful) + " faithful braided groups, "
          + std::to_string(maps) + " maps: group level disagrees on "
          + std::to_string(group_bad) + ", braided level on "
          + std::to_string(braided_bad) + "; BRE3 without BRE3' on "
          + std::to_string(implication_bad) + "/" + std::to_string(bre3)
          + " faithful group reflections";
      Json by_order = Json::object();
      for (auto [n, c] : faithful_by_order) {
        by_order[std::to_string(n)] = c;
      }
      res.details = {{"faithful_instances", faithful},
                     {"faithful_by_order", by_order},
                     {"faithful_maps", maps},
                     {"non_faithful_maps", loose_maps},
                     {"orders_5_6", "maps fixing the identity"},
                     {"group_level_disagreements", group_bad},
                     {"braided_level_disagreements", braided_bad},
                     {"faithful_group_reflections", bre3},
                     {"bre3_without_bre3_prime", implication_bad},
                     {"non_faithful_bre3_without_rho_level_bre3_prime",
                      loose_rho_bad},
                     {"non_faithful_bre3_without_bre3_prime", loose_full_bad}};
      if (braided_bad) {
        res.details["braided_witness"] = braided_witness;
      }
      if (implication_bad) {
        res.details["implication_witness"] = implication_witness;
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 7. Bijective group reflections and 2-torsion
    ////////////////////////////////////////////////////////////////////

    void two_torsion(Context& ctx, CriterionResult& res) {
      std::size_t max_order = quick(ctx.opt()) ? 4 : 8;
      std::size_t bijective = 0, faithful = 0, bad = 0, loose_rho_bad = 0;
      Json        witnesses = Json::array();
      for (std::size_t n = 1; n <= max_order; ++n) {
        auto const& braces = ctx.braces(n);
        for (std::size_t i = 0; i < braces.size(); ++i) {
          BraidedGroup bg = braiding_from_skewbrace(braces[i]);
          for (FiniteMap const& k : enumerate_group_reflections(bg)) {
            if (!k.is_bijective()) {
              continue;
            }
            ++bijective;
            TwoTorsionReport rep = two_torsion_check(bg, k);
            if (!rep.faithful) {
              loose_rho_bad += !rep.rho_level;
              continue;
            }
            ++faithful;
            if (!rep.exponent_two) {
              ++bad;
              witnesses.push_back({{"order", n},
                                   {"brace_index", i},
                                   {"brace", io::to_json(braces[i])},
                                   {"k", k.images()},
                                   {"rho_level", rep.rho_level}});
            }
          }
        }
      }
      res.pass    = bad == 0;
      res.summary = std::to_string(faithful)
                    + " faithful instances with a bijective group reflection, "
                    + std::to_string(bad) + " not 2-torsion ("
                    + std::to_string(bijective) + " bijective in total, orders <= "
                    + std::to_string(max_order) + ")";
      res.details = {{"max_order", max_order},
                     {"bijective_group_reflections", bijective},
                     {"faithful_instances", faithful},
                     {"failures", bad},
                     {"non_faithful_rho_level_failures", loose_rho_bad}};
      if (bad) {
        res.details["witnesses"] = witnesses;
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 8. Counterexamples for the composite candidate
    ////////////////////////////////////////////////////////////////////

    void composite_counterexamples(Context& ctx, CriterionResult& res) {
      struct Part {
        char const* name;
        std::size_t lo, hi;
        bool        bijective;
        bool        expect_empty;
        bool        need_both_kinds;
      };
      std::vector<Part> parts = {
          {"orders 1-5 empty", 1, 5, false, true, false},
          {"order 6 has both kinds", 6, 6, false, false, true},
          {"bijective k, orders <= 7, empty", 1, 7, true, true, false},
      };
      if (!quick(ctx.opt())) {
        parts.push_back({"bijective k, order 8, non-empty", 8, 8, true, false,
                         false});
      }
      bool        pass = true;
      Json        out  = Json::array();
      std::string summary;
      for (Part const& p : parts) {
        EllSearchStats stats;
        auto found = find_ell_counterexamples(p.lo, p.hi, p.bijective,
                                              ctx.opt().jobs, &stats);
        std::set<std::string> kinds;
        for (auto const& c : found) {
          kinds.insert(to_string(c.kind));
        }
        bool ok = p.expect_empty ? found.empty()
                                 : !found.empty()
                                       && (!p.need_both_kinds || kinds.size() == 2);
        pass = pass && ok;
        Json j = {{"part", p.name},
                  {"min_order", p.lo},
                  {"max_order", p.hi},
                  {"bijective_k", p.bijective},
                  {"expected", p.expect_empty ? "empty" : "non-empty"},
                  {"found", found.size()},
                  {"kinds", kinds},
                  {"braces", stats.braces},
                  {"pairs", stats.pairs},
                  {"pass", ok}};
        std::map<std::size_t, std::size_t> by_order;
        for (auto const& c : found) {
          ++by_order[c.brace.size()];
        }
        Json bo = Json::object();
        for (auto [n, c] : by_order) {
          bo[std::to_string(n)] = c;
        }
        j["found_by_order"] = bo;
        if (!found.empty()) {
          j["witness"] = ell_json(found.front());
        }
        out.push_back(std::move(j));
        summary += (summary.empty() ? "" : "; ") + std::string(p.name) + ": "
                   + std::to_string(found.size()) + (ok ? " ok" : " FAIL");
      }
      if (quick(ctx.opt())) {
        summary += "; order 8 part runs at full level";
      }
      res.pass    = pass;
      res.summary = summary;
      res.details = {{"parts", out}, {"variant", "kh"}};
    }

    ////////////////////////////////////////////////////////////////////
    // 9. Skew brace enumeration
    ////////////////////////////////////////////////////////////////////

    void brace_enumeration(Context& ctx, CriterionResult& res) {
      Json        counts = Json::object();
      bool        agree  = true;
      std::size_t c6 = 0, c8 = 0;
      for (std::size_t n = 1; n <= 8; ++n) {
        auto const& d = ctx.braces(n);
        counts[std::to_string(n)] = d.size();
        if (n <= 6) {
          agree = agree
                  && enumerate_skew_braces(n, BraceStrategy::holomorph,
                                           ctx.opt().jobs)
                         == d;
        }
        c6 = n == 6 ? d.size() : c6;
        c8 = n == 8 ? d.size() : c8;
      }
      res.pass    = agree && c6 >= 5 && c8 >= 34;
      res.summary = std::string("strategies ") + (agree ? "agree" : "differ")
                    + " for n <= 6; order 6: " + std::to_string(c6)
                    + " classes (>= 5), order 8: " + std::to_string(c8)
                    + " classes (>= 34)";
      res.details = {{"strategies_agree", agree}, {"counts", counts}};
    }

    ////////////////////////////////////////////////////////////////////
    // 10. Structure monoid
    ////////////////////////////////////////////////////////////////////

    void structure_monoid(Context& ctx, CriterionResult& res) {
      bool        q         = quick(ctx.opt());
      std::size_t flip_deg  = q ? 3 : 7;
      std::size_t gars_deg  = q ? 3 : 5;
      std::size_t re_deg    = q ? 3 : 4;
      BraidedSet  flip      = BraidedSet::validate({{0, 1}, {0, 1}},
                                                   {{0, 1}, {0, 1}});
      bool        flip_ok   = true;
      for (std::size_t d = 0; d <= flip_deg; ++d) {
        flip_ok = flip_ok && build_component(flip, d).class_count() == d + 1;
      }
      BraidedSet p3 = BraidedSet::validate({{1, 2, 0}, {1, 2, 0}, {1, 2, 0}},
                                           {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
      std::size_t p3_classes = build_component(p3, 2).class_count();

      std::size_t pairs = 0, gars_bad = 0, re_bad = 0, transfer_bad = 0;
      std::size_t holds = 0;
      Json        witness;
      for (BraidedSet const& bs : ctx.corpus3()) {
        for (FiniteMap const& k : enumerate_reflections(bs)) {
          ++pairs;
          for (std::size_t d = 1; d <= gars_deg; ++d) {
            Report r = garside_commutation_check(bs, k, d);
            if (!r.ok && gars_bad++ == 0) {
              witness = {{"check", "garside"}, {"solution", io::to_json(bs)},
                         {"k", k.images()}, {"report", io::to_json(r)}};
            }
          }
          Report re = monoid_reflection_check(bs, k, re_deg);
          if (!re.ok && re_bad++ == 0 && witness.is_null()) {
            witness = {{"check", "reflection"}, {"solution", io::to_json(bs)},
                       {"k", k.images()}, {"report", io::to_json(re)}};
          }
          Bre3TransferReport tr = bre3_transfer_check(bs, k, re_deg);
          holds += tr.degree_one.ok;
          if (!tr.consistent() && transfer_bad++ == 0 && witness.is_null()) {
            witness = {{"check", "transfer"}, {"solution", io::to_json(bs)},
                       {"k", k.images()}};
          }
        }
      }
      res.pass = flip_ok && p3_classes == 2 && gars_bad == 0 && re_bad == 0
                 && transfer_bad == 0;
      res.summary = std::string("flip classes d+1 for d <= ")
                    + std::to_string(flip_deg) + (flip_ok ? "" : " FAILS")
                    + "; P3 degree 2: " + std::to_string(p3_classes)
                    + " classes; " + std::to_string(pairs)
                    + " reflections: Garside (d <= " + std::to_string(gars_deg)
                    + ") failures " + std::to_string(gars_bad)
                    + ", monoid RE (degree <= " + std::to_string(re_deg)
                    + ") failures " + std::to_string(re_bad)
                    + ", BRE3 transfer inconsistencies "
                    + std::to_string(transfer_bad);
      res.details = {{"flip_ok", flip_ok},
                     {"flip_max_degree", flip_deg},
                     {"p3_degree2_classes", p3_classes},
                     {"reflections", pairs},
                     {"garside_max_degree", gars_deg},
                     {"garside_failures", gars_bad},
                     {"reflection_max_degree", re_deg},
                     {"reflection_failures", re_bad},
                     {"transfer_inconsistent", transfer_bad},
                     {"transfer_degree_one_holds", holds}};
      if (!witness.is_null()) {
        res.details["witness"] = witness;
      }
    }

    ////////////////////////////////////////////////////////////////////
    // 11. Trivial skew braces
    ////////////////////////////////////////////////////////////////////

    std::vector<std::vector<FiniteMap>> self_fixing_families(
        FiniteGroup const& g) {
      std::size_t                         n     = g.size();
      std::vector<FiniteMap>              autos = automorphisms(g);
      std::vector<std::vector<FiniteMap>> opts(n);
      for (FiniteMap const& a : autos) {
        for (std::size_t x = 0; x < n; ++x) {
          if (a(static_cast<Elem>(x)) == static_cast<Elem>(x)) {
            opts[x].push_back(a);
          }
        }
      }
      std::vector<std::vector<FiniteMap>> out;
      std::vector<std::size_t>            idx(n, 0);
      while (true) {
        std::vector<FiniteMap> fam;
        for (std::size_t x = 0; x < n; ++x) {
          fam.push_back(opts[x][idx[x]]);
        }
        out.push_back(std::move(fam));
        std::size_t i = 0;
        while (i < n && ++idx[i] == opts[i].size()) {
          idx[i++] = 0;
        }
        if (i == n) {
          return out;
        }
      }
    }

    void trivial_brace(Context&, CriterionResult& res) {
      std::size_t groups = 0, agree = 0, maps = 0;
      for (std::size_t n = 1; n <= 6; ++n) {
        for (FiniteGroup const& g : enumerate_groups(n)) {
          ++groups;
          auto naive = naive_group_reflections(trivial_braided_group(g));
          auto chars = trivial_brace_reflections(g);
          maps += naive.size();
          agree += naive == chars;
        }
      }
      std::size_t compositions = 0, comp_bad = 0;
      for (FiniteGroup const& g : enumerate_groups(4)) {
        BraidedGroup bg   = trivial_braided_group(g);
        auto         fams = self_fixing_families(g);
        std::vector<TwistDatum> t;
        for (auto const& f : fams) {
          t.push_back(type1_twist(g, g, f));
        }
        for (std::size_t i = 0; i < fams.size(); ++i) {
          for (std::size_t j = 0; j < fams.size(); ++j) {
            std::vector<FiniteMap> hf;
            for (std::size_t x = 0; x < g.size(); ++x) {
              hf.push_back(fams[j][x].after(fams[i][x]));
            }
            ++compositions;
            TwistDatum c = compose_twists(bg.bs, t[i], t[j]);
            comp_bad += !(c.F == type1_map(g, hf)) || !(c == type1_twist(g, g, hf));
          }
        }
      }
      res.pass    = agree == groups && comp_bad == 0 && compositions > 0;
      res.summary = "brute force equals the characterization on "
                    + std::to_string(agree) + "/" + std::to_string(groups)
                    + " groups of order <= 6 (" + std::to_string(maps)
                    + " maps); type I composition holds on "
                    + std::to_string(compositions - comp_bad) + "/"
                    + std::to_string(compositions) + " order 4 family pairs";
      res.details = {{"groups", groups},
                     {"groups_agree", agree},
                     {"group_reflections", maps},
                     {"family_pairs", compositions},
                     {"composition_failures", comp_bad}};
    }

    ////////////////////////////////////////////////////////////////////
    // 12. Discrepancy record
    ////////////////////////////////////////////////////////////////////

    Json discrepancy_record(Context& ctx) {
      Json out = Json::array();

      // Twist data for a non-identity λ.
      {
        BraidedSet bs = perm_z2(true);
        SquareMap F = product_map(FiniteMap(Word{1, 0}), FiniteMap::identity(2));
        auto data   = find_twist_data(bs, F, SearchStrategy::brute_force);
        Json e = {{"id", "permutation-twist-obstruction"},
                  {"claim", "product maps are twists of a permutation "
                            "solution only when its lambda is the identity"},
                  {"search", "all 40320 bijections of X^3, Z_2, lambda = swap, "
                             "F = swap x id"},
                  {"twist_data_found", data.size()},
                  {"verdict", data.empty() ? "confirmed" : "contradicted"}};
        if (!data.empty()) {
          e["witness"] = {{"solution", io::to_json(bs)},
                          {"twist", io::to_json(data.front())},
                          {"replay", io::to_json(check_drinfeld_twist(bs, data.front()))}};
        }
        out.push_back(std::move(e));
      }

      // kh or hk.
      {
        CompositeScan s = scan_composite(ctx.corpus3());
        Json          e = {{"id", "composite-middle-factor"},
                           {"claim", "closed form of (r^(k))^(h) and the "
                                     "composition condition use h(k(b))"},
                           {"search", "every (solution, k, h) with a "
                                      "non-degenerate solution of size <= 3"},
                           {"triples", s.triples},
                           {"kh_matches", s.kh.matches},
                           {"hk_matches", s.hk.matches},
                           {"verdict",
                            s.kh.matches == s.triples && s.hk.matches < s.triples
                                ? "kh"
                                : s.hk.matches == s.triples ? "hk" : "neither"}};
        if (!s.hk.witness.is_null()) {
          e["witness"] = s.hk.witness;
        }
        out.push_back(std::move(e));
      }

      // The twisted braiding without BRE3'.
      {
        FiniteGroup s3 = enumerate_groups(6).back();
        if (s3.is_abelian()) {
          s3 = enumerate_groups(6).front();
        }
        BraidedGroup    bg  = trivial_braided_group(s3);
        ViabilityReport rep = classify_twist_viability(bg, FiniteMap::identity(6));
        out.push_back(
            {{"id", "twisted-braiding-without-bre3-prime"},
             {"claim", "for faithful braided groups the k-twist is braided "
                       "exactly when BRE3' holds"},
             {"witness", {{"group", io::to_json(s3)},
                          {"k", FiniteMap::identity(6).images()},
                          {"faithful", rep.faithful},
                          {"direct", to_string(rep.direct)},
                          {"predicted", to_string(rep.predicted)},
                          {"bre3_prime", io::to_json(rep.bre3_prime)}}},
             {"verdict", rep.consistent() ? "confirmed" : "contradicted"}});
      }

      // Bijective group reflections on faithful braided groups.
      {
        std::optional<Json> witness;
        for (std::size_t n = 1; n <= 8 && !witness; ++n) {
          auto const& braces = ctx.braces(n);
          for (std::size_t i = 0; i < braces.size() && !witness; ++i) {
            BraidedGroup bg = braiding_from_skewbrace(braces[i]);
            if (!bg.is_faithful()) {
              continue;
            }
            for (FiniteMap const& k : enumerate_group_reflections(bg)) {
              if (k.is_bijective() && !two_torsion_check(bg, k).exponent_two) {
                witness = Json{{"order", n},
                               {"brace_index", i},
                               {"brace", io::to_json(braces[i])},
                               {"k", k.images()},
                               {"twisted_is_braided_group",
                                check_braiding(twisted_braided_group(bg, k)).ok}};
                break;
              }
            }
          }
        }
        Json e = {{"id", "bijective-reflection-two-torsion"},
                  {"claim", "a faithful braided group with a bijective group "
                            "reflection has exponent dividing 2"},
                  {"search", "every bijective group reflection of every skew "
                             "brace of order <= 8"},
                  {"verdict", witness ? "contradicted" : "confirmed"}};
        if (witness) {
          e["witness"] = *witness;
        }
        out.push_back(std::move(e));
      }

      // The smallest composite counterexample.
      {
        auto found = find_ell_counterexamples(1, 5, false, ctx.opt().jobs);
        Json e     = {{"id", "composite-counterexample-order"},
                      {"claim", "the composite candidate fails to be a group "
                                "reflection first at order 6"},
                      {"orders_1_5_found", found.size()},
                      {"verdict", found.empty() ? "confirmed" : "contradicted"}};
        if (!found.empty()) {
          e["witness"] = ell_json(found.front());
        }
        out.push_back(std::move(e));
      }
      return out;
    }

    void discrepancy_ledger(Context& ctx, CriterionResult& res,
                            Json& record) {
      record = discrepancy_record(ctx);
      // Both adjudicated entries must carry a replayable witness.
      bool perm_ok = false, variant_ok = false;
      for (Json const& e : record) {
        if (e["id"] == "permutation-twist-obstruction") {
          perm_ok = e["verdict"] == "confirmed"
                    || (e.contains("witness")
                        && e["witness"]["replay"]["ok"] == true);
        }
        if (e["id"] == "composite-middle-factor") {
          variant_ok = e["verdict"] != "neither" && e.contains("witness");
        }
      }
      res.pass    = perm_ok && variant_ok;
      res.summary = std::to_string(record.size()) + " entries; ";
      for (Json const& e : record) {
        res.summary += e["id"].get<std::string>() + ": "
                       + e["verdict"].get<std::string>() + "; ";
      }
      res.summary.resize(res.summary.size() - 2);
      res.details = {{"entries", record.size()}};
    }

    struct Criterion {
      int         id;
      char const* key;
      void (*run)(Context&, CriterionResult&);
    };

    Criterion const criteria[] = {
        {1, "guitar-twist", guitar_twist},
        {2, "explicit-composite", explicit_composite},
        {3, "permutation-twist-obstruction", permutation_obstruction},
        {4, "braid-representation", braid_representation},
        {5, "braided-group-twist", braided_group_twist},
        {6, "twist-viability", twist_viability},
        {7, "two-torsion", two_torsion},
        {8, "composite-counterexamples", composite_counterexamples},
        {9, "brace-enumeration", brace_enumeration},
        {10, "structure-monoid", structure_monoid},
        {11, "trivial-brace", trivial_brace},
        {12, "discrepancy-ledger", nullptr},
    };

  }  // namespace

  char const* to_string(SuiteLevel l) {
    return l == SuiteLevel::quick ? "quick" : "full";
  }

  bool SuiteResult::all_pass() const {
    for (auto const& c : criteria) {
      if (!c.pass) {
        return false;
      }
    }
    return true;
  }

  Json SuiteResult::to_json() const {
    Json list = Json::array();
    for (auto const& c : criteria) {
      list.push_back({{"id", c.id},
                      {"key", c.key},
                      {"pass", c.pass},
                      {"summary", c.summary},
                      {"details", c.details}});
    }
    return io::versioned({{"level", to_string(level)},
                          {"criteria", std::move(list)},
                          {"all_pass", all_pass()},
                          {"discrepancies", discrepancies}});
  }

  SuiteResult run_suite(SuiteOptions const&                          opt,
                        std::function<void(CriterionResult const&)> on_result) {
    Context     ctx(opt);
    SuiteResult out;
    out.level = opt.level;
    for (Criterion const& c : criteria) {
      if (!opt.only.empty()
          && std::find(opt.only.begin(), opt.only.end(), c.id)
                 == opt.only.end()) {
        continue;
      }
      CriterionResult res;
      res.id     = c.id;
      res.key    = c.key;
      auto start = std::chrono::steady_clock::now();
      try {
        if (c.run) {
          c.run(ctx, res);
        } else {
          discrepancy_ledger(ctx, res, out.discrepancies);
        }
      } catch (Error const& e) {
        res.pass    = false;
        res.summary = std::string("error: ") + e.what();
        res.details = {{"error", io::to_json(e)}};
      }
      res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      if (on_result) {
        on_result(res);
      }
      out.criteria.push_back(std::move(res));
    }
    return out;
  }

}  // namespace reflectwist
