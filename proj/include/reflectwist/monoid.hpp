// The graded structure monoid M(X, r) in bounded degree, the extensions of
// r and of a reflection k to words, and the extension checks for k̄.
//
// A word of length d over {0..n-1} is encoded in base n with the first
// letter most significant, so numeric order on codes is lexicographic
// order on words. The defining relations are xy = (x ⇀ y)(x ↼ y).

#ifndef REFLECTWIST_MONOID_HPP_
#define REFLECTWIST_MONOID_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "reflectwist/braided_set.hpp"

namespace reflectwist {

  std::uint64_t word_code(Word const& w, std::size_t n);
  Word          word_from_code(std::uint64_t code, std::size_t n, std::size_t d);

  class GradedComponent {
   public:
    std::size_t size() const noexcept {
      return _n;
    }
    std::size_t degree() const noexcept {
      return _d;
    }
    std::size_t word_count() const noexcept {
      return _class.size();
    }
    std::size_t class_count() const noexcept {
      return _reps.size();
    }
    // Classes are numbered in order of their representatives.
    std::size_t class_of(Word const& w) const;
    std::size_t class_of_code(std::uint64_t code) const noexcept {
      return _class[code];
    }
    // The lexicographically smallest word of class c.
    Word representative(std::size_t c) const;
    bool congruent(Word const& u, Word const& v) const {
      return class_of(u) == class_of(v);
    }
    // Each class as its sorted list of words; classes ordered as above.
    std::vector<std::vector<Word>> classes() const;

   private:
    friend GradedComponent build_component(BraidedSet const&, std::size_t,
                                           unsigned);
    std::size_t                _n = 0;
    std::size_t                _d = 0;
    std::vector<std::uint32_t> _class;
    std::vector<std::uint64_t> _reps;
  };

  // Union-find over all n^d words under single-position rewrites. Gate:
  // n^d <= 10^6. `jobs` splits the rewrites across threads; the partition
  // does not depend on it.
  GradedComponent build_component(BraidedSet const& bs, std::size_t d,
                                  unsigned jobs = 1);

  // r̃(u, v) = (v', u'): each letter of u, last first, crosses all of v.
  std::pair<Word, Word> extend_r(BraidedSet const& bs, Word const& u,
                                 Word const& v);

  // k̃(ε) = ε, k̃(x) = k(x), k̃(x v) = (x ⇀̃ k̃(v)) k(x ↼̃ k̃(v)).
  Word extend_k(BraidedSet const& bs, FiniteMap const& k, Word const& w);

  // Δ^{d;k} as a table on word codes.
  Word garside_map(BraidedSet const& bs, FiniteMap const& k, std::size_t d);

  // Δ^{d;k} r_i = r_{d-i} Δ^{d;k} on X^d for i = 1..d-1; the witness is the
  // word followed by i. With pre == check, throws NotAReflection unless k
  // is a right reflection.
  Report garside_commutation_check(BraidedSet const& bs, FiniteMap const& k,
                                   std::size_t  d,
                                   Precondition pre = Precondition::check);

  // r̃ and k̃ send congruent words to congruent words, for every word of
  // total degree d (every split (u, v) for r̃). "RDescends" or "KDescends",
  // witnessing the word and the rewrite position.
  Report descent_check(BraidedSet const& bs, FiniteMap const& k,
                       std::size_t d);

  // k̄_2 r̄ k̄_2 r̄ = r̄ k̄_2 r̄ k̄_2 on pairs of class representatives of
  // degrees (d1, d2), d1 + d2 <= dmax. Axiom "RE", witness u then v.
  // Throws NotAReflection (pre == check).
  Report monoid_reflection_check(BraidedSet const& bs, FiniteMap const& k,
                                 std::size_t  dmax,
                                 Precondition pre = Precondition::check);

  struct Bre3TransferReport {
    Report degree_one;   // (d1, d2) = (1, 1)
    Report all_degrees;  // every (d1, d2) with d1 + d2 <= dmax
    bool   consistent() const {
      return degree_one.ok == all_degrees.ok;
    }
  };

  // k̄(w) ∼ (w ⇀̄ v) ⇀̄ k̄(w ↼̄ v) on pairs of class representatives.
  // Throws NotAReflection.
  Bre3TransferReport bre3_transfer_check(BraidedSet const& bs,
                                         FiniteMap const& k, std::size_t dmax);

}  // namespace reflectwist

#endif  // REFLECTWIST_MONOID_HPP_
