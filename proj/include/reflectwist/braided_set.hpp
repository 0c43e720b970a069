// Finite braided sets (set-theoretic solutions of the Yang-Baxter equation),
// reflections, guitar maps and k-derived solutions.
//
// Table conventions. A solution is written r(a, b) = (a ⇀ b, a ↼ b), and
// is stored as two n x n tables
//
//   sigma[a][b] = a ⇀ b        (row a is the left action σ_a)
//   rho[b][a]   = a ↼ b        (row b is the right action ρ_b)
//
// so that the ACTING element is always the first index and both kinds of
// non-degeneracy are "every row is a permutation". Beware: rho is indexed
// [b][a], the opposite of the infix notation.

#ifndef REFLECTWIST_BRAIDED_SET_HPP_
#define REFLECTWIST_BRAIDED_SET_HPP_

#include <vector>

#include "reflectwist/core.hpp"

namespace reflectwist {

  using Table = std::vector<Word>;  // row-major square table

  class BraidedSet {
   public:
    // Throws ShapeError, RangeError, or YbeViolation (witness = first
    // violating triple in lexicographic order).
    static BraidedSet validate(Table const& sigma, Table const& rho);
    static BraidedSet from_map(SquareMap const& r);

    std::size_t size() const noexcept {
      return _n;
    }
    // a ⇀ b
    Elem left(Elem a, Elem b) const noexcept {
      return _sigma[static_cast<std::size_t>(a) * _n + b];
    }
    // a ↼ b
    Elem right(Elem a, Elem b) const noexcept {
      return _rho[static_cast<std::size_t>(b) * _n + a];
    }
    // ρ_b^{-1}(a); only valid when right non-degenerate.
    Elem right_inverse(Elem a, Elem b) const noexcept {
      return _rho_inv[static_cast<std::size_t>(b) * _n + a];
    }
    // σ_a^{-1}(b); only valid when left non-degenerate.
    Elem left_inverse(Elem a, Elem b) const noexcept {
      return _sigma_inv[static_cast<std::size_t>(a) * _n + b];
    }
    Pair operator()(Elem a, Elem b) const noexcept {
      return {left(a, b), right(a, b)};
    }

    SquareMap as_map() const;
    FiniteMap left_action(Elem a) const;   // σ_a
    FiniteMap right_action(Elem b) const;  // ρ_b
    Table     sigma_table() const;
    Table     rho_table() const;

    bool is_invertible() const noexcept {
      return _invertible;
    }
    bool is_involutive() const noexcept {
      return _involutive;
    }
    bool is_left_nondegenerate() const noexcept {
      return _left_nd;
    }
    bool is_right_nondegenerate() const noexcept {
      return _right_nd;
    }
    bool is_nondegenerate() const noexcept {
      return _left_nd && _right_nd;
    }

    // Throws Degenerate unless right non-degenerate.
    void require_right_nondegenerate() const;

    friend bool operator==(BraidedSet const& x, BraidedSet const& y) {
      return x._n == y._n && x._sigma == y._sigma && x._rho == y._rho;
    }

   private:
    BraidedSet(std::size_t n, Word sigma, Word rho);

    std::size_t _n = 0;
    Word        _sigma;      // [a*n + b] = a ⇀ b
    Word        _rho;        // [b*n + a] = a ↼ b
    Word        _sigma_inv;  // inverse rows, when left non-degenerate
    Word        _rho_inv;    // inverse rows, when right non-degenerate
    bool        _invertible = false;
    bool        _involutive = false;
    bool        _left_nd    = false;
    bool        _right_nd   = false;
  };

  // Componentwise YBE1-3 scan of an arbitrary map on X^2.
  Report check_ybe(SquareMap const& r);
  // The braid relation r12 r23 r12 = r23 r12 r23 checked as maps on X^3.
  bool braid_relation_holds(SquareMap const& r);

  // r: (a, b) -> (λ(b), ρ(a)); throws NotBijective or NotCommuting.
  BraidedSet permutation_solution(FiniteMap const& lambda,
                                  FiniteMap const& rho);

  class Shelf {
   public:
    // tri[a][b] = a ◁ b. Throws ShelfViolation(a, b, c).
    static Shelf validate(Table const& tri);

    std::size_t size() const noexcept {
      return _n;
    }
    Elem operator()(Elem a, Elem b) const noexcept {
      return _tri[static_cast<std::size_t>(a) * _n + b];
    }
    bool is_rack() const;

   private:
    Shelf(std::size_t n, Word tri) : _n(n), _tri(std::move(tri)) {}
    std::size_t _n;
    Word        _tri;
  };

  // r(a, b) = (b, a ◁ b)
  BraidedSet rack_solution(Shelf const& s);

  // r'(a, b) = (((a ↼ b^{-1}) ⇀ b) ↼ a, a); throws Degenerate.
  BraidedSet derived_solution(BraidedSet const& bs);

  enum class Side { left, right };

  // Right: k2 r k2 r = r k2 r k2; left: k1 r k1 r = r k1 r k1. On failure,
  // axiom is "RE1" or "RE2" (first or second component) and witness is the
  // first violating pair.
  Report check_reflection(BraidedSet const& bs, FiniteMap const& k,
                          Side side = Side::right);
  bool   is_reflection(BraidedSet const& bs, FiniteMap const& k,
                       Side side = Side::right);

  // J(a, b) = (a ↼ k(b), b)
  SquareMap guitar_map(BraidedSet const& bs, FiniteMap const& k);

  // F r F^{-1} for a bijective F.
  SquareMap conjugate(SquareMap const& r, SquareMap const& f);

  // J r J^{-1}, the table only, with no reflection check.
  SquareMap guitar_conjugate(BraidedSet const& bs, FiniteMap const& k);

  // The k-derived solution, computed both as J r J^{-1} and by the closed
  // componentwise formula; throws AssertionFailure if they differ, Degenerate
  // if bs is not right non-degenerate, NotAReflection if k fails RE (unless
  // pre == skip) and YbeViolation if the result is not a solution.
  BraidedSet k_derived(BraidedSet const& bs, FiniteMap const& k,
                       Precondition pre = Precondition::check);

  // Which element indexes the middle ρ in the composed-twist formula:
  // ρ_{k(h(b))} or ρ_{h(k(b))}.
  enum class ComposeVariant { kh, hk };

  char const* to_string(ComposeVariant v);

  struct ComposedTwist {
    SquareMap table;
    bool      matches_double_conjugation;
  };

  // The closed form of (r^(k))^(h), cross-checked against two successive
  // guitar conjugations.
  ComposedTwist composed_twist_explicit(BraidedSet const& bs,
                                        FiniteMap const& k, FiniteMap const& h,
                                        ComposeVariant variant,
                                        Precondition pre = Precondition::check);

  // (r^(k))^(h) by two successive guitar conjugations.
  SquareMap double_conjugation(BraidedSet const& bs, FiniteMap const& k,
                               FiniteMap const& h);

  // ρ_{ℓ(b)} = ρ_{h(b)} ρ^{-1}_{m(b)} ρ_{k(b)} for all b, with m = kh or hk.
  bool composition_condition(BraidedSet const& bs, FiniteMap const& k,
                             FiniteMap const& h, FiniteMap const& ell,
                             ComposeVariant variant = ComposeVariant::kh,
                             Precondition   pre     = Precondition::check);

  // F ∘ r == s ∘ F; throws SizeMismatch.
  bool check_d_homomorphism(BraidedSet const& src, BraidedSet const& dst,
                            SquareMap const& f);

}  // namespace reflectwist

#endif  // REFLECTWIST_BRAIDED_SET_HPP_
