// Finite groups, skew braces and braided groups, group reflections, and
// group Drinfeld twists.

#ifndef REFLECTWIST_BRAIDED_GROUP_HPP_
#define REFLECTWIST_BRAIDED_GROUP_HPP_

#include <optional>
#include <vector>

#include "reflectwist/braided_set.hpp"
#include "reflectwist/twist.hpp"

namespace reflectwist {

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  // Total check of the group axioms on a square table: "Shape", "Range",
  // "NoIdentity", "NoInverse" (witness x) or "NotAssociative" (a, b, c).
  Report check_group(Table const& mul);

  class FiniteGroup {
   public:
    // Throws InputError or PropertyError with the kind from check_group.
    static FiniteGroup validate(Table const& mul);
    // As above, and also throws IdentityMismatch unless `identity` is the
    // neutral element.
    static FiniteGroup validate(Table const& mul, Elem identity);

    std::size_t size() const noexcept {
      return _n;
    }
    Elem operator()(Elem a, Elem b) const noexcept {
      return _mul[static_cast<std::size_t>(a) * _n + b];
    }
    Elem inv(Elem a) const noexcept {
      return _inv[a];
    }
    Elem identity() const noexcept {
      return _e;
    }
    Table table() const;
    bool  is_abelian() const;
    // Orbit of a under conjugation, as a class id per element.
    Word conjugacy_classes() const;
    // A generating set of minimum size, lexicographically first among those.
    Word generators() const;

    bool is_homomorphism(FiniteMap const& f) const;
    bool is_antihomomorphism(FiniteMap const& f) const;
    // f is an isomorphism from *this onto `target`.
    bool is_isomorphism_to(FiniteGroup const& target,
                           FiniteMap const&   f) const;

    friend bool operator==(FiniteGroup const& x, FiniteGroup const& y) {
      return x._n == y._n && x._mul == y._mul;
    }

   private:
    FiniteGroup(std::size_t n, Word mul, Elem e, Word inv)
        : _n(n), _mul(std::move(mul)), _e(e), _inv(std::move(inv)) {}

    std::size_t _n = 0;
    Word        _mul;
    Elem        _e = 0;
    Word        _inv;
  };

  ////////////////////////////////////////////////////////////////////////
  // SkewBrace
  ////////////////////////////////////////////////////////////////////////

  class SkewBrace {
   public:
    // Throws the group errors, IdentityMismatch, or BraceViolation (a, b, c)
    // for a(b + c) != ab - a + ac.
    static SkewBrace validate(Table const& add, Table const& mul);

    std::size_t size() const noexcept {
      return _add.size();
    }
    FiniteGroup const& additive() const noexcept {
      return _add;
    }
    FiniteGroup const& multiplicative() const noexcept {
      return _mul;
    }
    Elem sum(Elem a, Elem b) const noexcept {
      return _add(a, b);
    }
    Elem prod(Elem a, Elem b) const noexcept {
      return _mul(a, b);
    }
    Elem neg(Elem a) const noexcept {
      return _add.inv(a);
    }
    bool is_brace() const {
      return _add.is_abelian();
    }
    bool is_trivial() const {
      return _add == _mul;
    }

    friend bool operator==(SkewBrace const&, SkewBrace const&) = default;

   private:
    SkewBrace(FiniteGroup add, FiniteGroup mul)
        : _add(std::move(add)), _mul(std::move(mul)) {}
    FiniteGroup _add;
    FiniteGroup _mul;
  };

  ////////////////////////////////////////////////////////////////////////
  // BraidedGroup
  ////////////////////////////////////////////////////////////////////////

  // "Bijective", then BG1-BG5 in order; witness is the first failing tuple.
  Report check_braiding(FiniteGroup const& g, SquareMap const& r);

  struct BraidedGroup {
    FiniteGroup grp;
    BraidedSet  bs;

    // Throws BraidingViolation if check_braiding fails.
    static BraidedGroup validate(FiniteGroup g, SquareMap const& r);

    std::size_t size() const noexcept {
      return grp.size();
    }
    // b -> ρ_b is injective.
    bool is_faithful() const;
  };

  Report check_braiding(BraidedGroup const& bg);

  // a ⇀ b = -a + ab, a ↼ b = (a ⇀ b)^{-1} ab on (G, ·).
  BraidedGroup braiding_from_skewbrace(SkewBrace const& sb);
  // a + b = a (a^{-1} ⇀ b).
  SkewBrace skewbrace_from_braiding(BraidedGroup const& bg);
  // (a, b) -> (b, b^{-1} a b)
  BraidedGroup trivial_braided_group(FiniteGroup const& g);

  ////////////////////////////////////////////////////////////////////////
  // Group reflections
  ////////////////////////////////////////////////////////////////////////

  struct GroupReflectionReport {
    Report bre1;
    Report bre2;
    Report bre3;
    Report bre3_prime;
    // The set-level RE, checked whenever BRE1-BRE3 all hold.
    std::optional<bool> set_level_re;

    bool is_group_reflection() const {
      return bre1.ok && bre2.ok && bre3.ok;
    }
  };

  // Throws AssertionFailure if BRE1-3 hold but the set-level RE does not.
  GroupReflectionReport check_group_reflection(BraidedGroup const& bg,
                                               FiniteMap const&    k);
  bool is_group_reflection(BraidedGroup const& bg, FiniteMap const& k);

  // a ·_k b = ρ^{-1}_{k(b)}(a) b, i.e. m ∘ J^{-1}.
  Table twisted_product(BraidedGroup const& bg, FiniteMap const& k);

  // (G^J, J r J^{-1}); throws NotAGroupReflection, and AssertionFailure if
  // the result is not a braided group, the inverse of a is not
  // a^{-1} ↼ k(a), or (J, Φ, Ψ) fails BDT1-4.
  BraidedGroup twisted_braided_group(BraidedGroup const& bg,
                                     FiniteMap const&    k);

  ////////////////////////////////////////////////////////////////////////
  // Group Drinfeld twists
  ////////////////////////////////////////////////////////////////////////

  // Set-level DT1-3 first (their report is returned on failure), then BDT1-4.
  // When all hold, (G, m F^{-1}) must be a group on which F r F^{-1} is a
  // braiding (AssertionFailure otherwise).
  Report check_group_drinfeld_twist(BraidedGroup const& bg,
                                    TwistDatum const&   t);

  // (G, m F^{-1}, F r F^{-1}); throws BdtViolation.
  BraidedGroup twist_braided_group(BraidedGroup const& bg,
                                   TwistDatum const&   t);

  // Every (Φ, Ψ) making F a group Drinfeld twist for bg, sorted.
  std::vector<TwistDatum> find_group_twist_data(
      BraidedGroup const& bg, SquareMap const& f,
      std::size_t limit = std::numeric_limits<std::size_t>::max());

  ////////////////////////////////////////////////////////////////////////
  // Viability of k-twisting
  ////////////////////////////////////////////////////////////////////////

  enum class Viability { not_group, group_only, braided_group };
  char const* to_string(Viability v);

  struct ViabilityReport {
    Viability direct;     // by checking the twisted structure itself
    Viability predicted;  // from BRE1, BRE2 and BRE3'
    bool      faithful;
    Report    bre1;
    Report    bre2;
    Report    bre3_prime;  // the ρ-level form when not faithful
    Report    group_axioms;
    Report    braiding_axioms;

    bool consistent() const {
      return direct == predicted;
    }
    // Agreement on whether the twisted product is a group at all.
    bool group_consistent() const {
      return (direct == Viability::not_group)
             == (predicted == Viability::not_group);
    }
  };

  // Throws NotFaithful when pre == check and ↼ is not faithful; with
  // pre == skip the weaker ρ_{k(a k(b))^2} = ρ_1 form is used instead.
  // Throws AssertionFailure if BRE1 and BRE2 hold but the twisted product is
  // not a group, or (faithful case) if the converse fails. Disagreement at
  // the braided level is only reported.
  ViabilityReport classify_twist_viability(
      BraidedGroup const& bg, FiniteMap const& k,
      Precondition pre = Precondition::check);

  struct TwoTorsionReport {
    bool rho_level;     // ρ_{k(a)^2} = ρ_1 for all a
    bool faithful;
    bool exponent_two;  // a a = 1 for all a
    bool ok() const {
      return rho_level && (!faithful || exponent_two);
    }
  };

  // Throws NotBijective or NotAGroupReflection.
  TwoTorsionReport two_torsion_check(BraidedGroup const& bg,
                                     FiniteMap const&    k);

  struct EllCandidate {
    FiniteMap ell;
    bool      group_refl_for_r;
    bool      group_refl_for_twisted;
    bool      set_refl_for_r;
    bool      set_refl_for_twisted;
    // r^(ℓ) == (r^(k))^(h) as tables
    bool composition_holds;
  };

  // ℓ(a) = k(a) · kh(a)^{-1} · h(a) in (G, ·), or with h(k(a)) in the
  // middle for the hk variant. Throws NotAGroupReflection unless k is a
  // group reflection for bg and h one for the k-twist. For kh, throws
  // AssertionFailure if r^(ℓ) is not the double twist.
  EllCandidate ell_candidate(BraidedGroup const& bg, FiniteMap const& k,
                             FiniteMap const&  h,
                             ComposeVariant variant = ComposeVariant::kh);

  ////////////////////////////////////////////////////////////////////////
  // Type I and one-legged twists
  ////////////////////////////////////////////////////////////////////////

  // F(x, y) = (f_{xy}(x), f_{xy}(y)).
  SquareMap type1_map(FiniteGroup const& src, std::vector<FiniteMap> const& fam);

  // Twist datum for the type I map between trivial braided groups on src and
  // dst. Throws NotIsomorphism(x), NotFixing(x), or NoTwistData.
  TwistDatum type1_twist(FiniteGroup const& src, FiniteGroup const& dst,
                         std::vector<FiniteMap> const& fam);

  struct OneLeggedReport {
    Report                    conditions;  // bijectivity and the three equations
    std::optional<TwistDatum> datum;       // when the conditions hold
    bool                      full_check;  // check_group_drinfeld_twist
  };

  // varrho[b][a] = ϱ_b(a). Throws HypothesisViolation unless ϱ_1 = id and
  // ϱ_b(1) = 1, and AssertionFailure if the conditions and the full check
  // disagree.
  OneLeggedReport one_legged_twist_check(BraidedGroup const& bg,
                                         Table const&        varrho);

  struct Decomposition {
    std::vector<FiniteMap> family;        // f_x, x in G
    FiniteGroup            intermediate;  // (G, ·̄)
    TwistDatum             type1;
    TwistDatum             type2;
    Table                  varrho;        // of the one-legged part
  };

  // Splits F = g ∘ F_f with F_f of type I and g one-legged. The family is
  // forced: f_z(y) = F_2(z y^{-1}, y). Returns nullopt if any piece fails
  // to be a group twist for its host. Throws SizeLimitExceeded above
  // order 6.
  std::optional<Decomposition> decompose_twist(BraidedGroup const& src,
                                               BraidedGroup const& dst,
                                               TwistDatum const&   t);

  // Class-function antihomomorphisms G -> G, sorted. Throws
  // AssertionFailure if a brute-force check_group_reflection sweep (all n^n
  // maps when n <= 5, all endomorphism candidates otherwise) disagrees.
  std::vector<FiniteMap> trivial_brace_reflections(FiniteGroup const& g);

  // All maps k with k(ab) = k(b)k(a) (resp. k(a)k(b)), enumerated from the
  // images of the generators; sorted.
  std::vector<FiniteMap> antihomomorphisms(FiniteGroup const& g);
  std::vector<FiniteMap> endomorphisms(FiniteGroup const& g);

}  // namespace reflectwist

#endif  // REFLECTWIST_BRAIDED_GROUP_HPP_
