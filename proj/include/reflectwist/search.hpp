// Exhaustive enumeration of small solutions, reflections, groups, skew
// braces and group reflections, plus the search for composite-candidate
// counterexamples.
//
// Every enumerator returns a canonically sorted list, so the output does
// not depend on `jobs` or on traversal order.

#ifndef REFLECTWIST_SEARCH_HPP_
#define REFLECTWIST_SEARCH_HPP_

#include <string>
#include <vector>

#include "reflectwist/braided_group.hpp"

namespace reflectwist {

  struct SolutionConstraints {
    bool nondegenerate = false;
    bool involutive    = false;
    bool up_to_iso     = false;
  };

  // Backtracking over r(a, b) with YBE checked on every fully defined
  // triple. Gates: n <= 3 without constraints, n <= 4 when non-degenerate.
  // With up_to_iso, each class is represented by its least table (codes of
  // r) under relabelling. Sorted by the codes of r.
  std::vector<BraidedSet> enumerate_solutions(std::size_t         n,
                                              SolutionConstraints c = {},
                                              unsigned            jobs = 1);

  // All maps k satisfying the RE on the given side, sorted. Gate n <= 8.
  std::vector<FiniteMap> enumerate_reflections(BraidedSet const& bs,
                                               Side side = Side::right);

  // Canonical form: the least table obtained by numbering elements in
  // breadth-first order from a minimum-size generating tuple.
  Table canonical_group_table(FiniteGroup const& g);

  // One canonical table per isomorphism type, sorted. Gate n <= 8.
  std::vector<FiniteGroup> enumerate_groups(std::size_t n, unsigned jobs = 1);

  // All automorphisms of g, sorted.
  std::vector<FiniteMap> automorphisms(FiniteGroup const& g);

  enum class BraceStrategy { holomorph, direct };
  char const* to_string(BraceStrategy s);

  // One skew brace per isomorphism class: the additive group is a
  // canonical table from enumerate_groups and the multiplicative table is
  // the least under Aut(+). Sorted by (additive, multiplicative). Gate
  // n <= 8.
  std::vector<SkewBrace> enumerate_skew_braces(std::size_t   n,
                                               BraceStrategy strategy,
                                               unsigned      jobs = 1);

  // Group reflections: values on the generators of (G, ·) are chosen, the
  // rest is propagated through BRE2 (branching where propagation stalls),
  // and each completed map is checked against BRE1-3. Sorted. Gate n <= 8.
  std::vector<FiniteMap> enumerate_group_reflections(BraidedGroup const& bg);
  std::vector<FiniteMap> enumerate_group_reflections(SkewBrace const& sb);

  // Every map satisfying BRE1-3, by checking all n^n maps. Gate n^n <= 10^7.
  std::vector<FiniteMap> naive_group_reflections(BraidedGroup const& bg);

  enum class EllFailure { for_original, for_twisted };
  char const* to_string(EllFailure f);

  struct EllCounterexample {
    std::size_t  brace_index;  // position in enumerate_skew_braces(order)
    SkewBrace    brace;
    FiniteMap    k;
    FiniteMap    h;
    FiniteMap    ell;
    EllFailure   kind;
    EllCandidate detail;
  };

  struct EllSearchStats {
    std::size_t braces = 0;
    std::size_t pairs  = 0;  // (k, h) pairs examined
  };

  // For every skew brace of each order in [min_order, max_order], every
  // group reflection k (bijective only, if requested) and every group
  // reflection h of the k-twisted braided group, records each way in which
  // ℓ fails to be a group reflection. Sorted by (order, brace, k, h, kind).
  // `variant` selects the middle factor of ℓ (see ell_candidate).
  std::vector<EllCounterexample> find_ell_counterexamples(
      std::size_t min_order, std::size_t max_order, bool require_bijective_k,
      unsigned jobs = 1, EllSearchStats* stats = nullptr,
      ComposeVariant variant = ComposeVariant::kh);

}  // namespace reflectwist

#endif  // REFLECTWIST_SEARCH_HPP_
