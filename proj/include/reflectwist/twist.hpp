// Set-level Drinfeld twists (F, Φ, Ψ), their algebra, and the equivalent
// language of B_3 representations on X^3.

#ifndef REFLECTWIST_TWIST_HPP_
#define REFLECTWIST_TWIST_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "reflectwist/braided_set.hpp"

namespace reflectwist {

  struct TwistDatum {
    SquareMap F;
    CubeMap   Phi;
    CubeMap   Psi;

    static TwistDatum identity(std::size_t n);
    std::size_t       size() const noexcept {
      return F.size();
    }
    friend bool operator==(TwistDatum const&, TwistDatum const&) = default;
  };

  // DT1: F12 Ψ = F23 Φ, DT2: Ψ r12 = r12 Ψ, DT3: Φ r23 = r23 Φ. Throws
  // NotBijective naming the offending map. When all three hold, F r F^{-1}
  // is also checked against YBE (AssertionFailure if it fails).
  Report check_drinfeld_twist(BraidedSet const& bs, TwistDatum const& t);

  // Throws DtViolation unless check_drinfeld_twist passes.
  void require_drinfeld_twist(BraidedSet const& bs, TwistDatum const& t);

  // F r F^{-1} as a braided set.
  BraidedSet twisted_solution(BraidedSet const& bs, SquareMap const& f);

  // The 3-strand guitar map (a, b, c) -> (a ↼ k̃(bc), b ↼ k(c), c).
  CubeMap guitar_map3(BraidedSet const& bs, FiniteMap const& k);

  // (J, Φ, Ψ) for a right reflection k. Throws Degenerate, NotAReflection,
  // and AssertionFailure if F12 Ψ, F23 Φ and the 3-strand guitar map are
  // not one and the same map.
  TwistDatum twist_from_reflection(BraidedSet const& bs, FiniteMap const& k);

  // t1 = (F, Φ, Ψ) is a twist for bs, t2 = (G, φ, ψ) a twist for r^F.
  // Returns (GF, F23^{-1} φ F23 Φ, F12^{-1} ψ F12 Ψ), a twist for bs.
  TwistDatum compose_twists(BraidedSet const& bs, TwistDatum const& t1,
                            TwistDatum const& t2);

  // The twist for r^F undoing t: (F^{-1}, F23 Φ^{-1} F23^{-1},
  // F12 Ψ^{-1} F12^{-1}).
  TwistDatum invert_twist(BraidedSet const& bs, TwistDatum const& t);

  // (f x f, f x id x id, id x id x f). Throws NotBijective.
  TwistDatum twist_from_isomorphism(BraidedSet const& bs, FiniteMap const& f);

  ////////////////////////////////////////////////////////////////////////
  // Intertwiner search
  ////////////////////////////////////////////////////////////////////////

  enum class SearchStrategy { automatic, brute_force, propagation };

  struct IntertwinerQuery {
    // Find bijections A of {0..N-1} with A(g[i](x)) = h[i](A(x)).
    std::vector<Word> g;
    std::vector<Word> h;
    // Optional restriction on individual values A(x) = y.
    std::function<bool(Elem, Elem)> allowed;
    SearchStrategy                  strategy = SearchStrategy::automatic;
    std::size_t limit = std::numeric_limits<std::size_t>::max();
    // Default for the largest N accepted by propagation.
    std::uint64_t domain_gate = 27;
  };

  // Gates: brute force runs when N! <= gate (default 40320); propagation
  // runs when N <= gate (default q.domain_gate) and gives up after a node
  // budget (default 10^7). Both throw SizeLimitExceeded.
  std::vector<Word> find_intertwiners(IntertwinerQuery const& q);

  // The query whose solutions are the Ψ of twist data for F; the matching
  // Φ is twist_rotation(F) ∘ Ψ.
  IntertwinerQuery twist_data_query(BraidedSet const& bs, SquareMap const& f);
  // F23^{-1} F12
  CubeMap twist_rotation(SquareMap const& f);

  // All (Φ, Ψ) making F a Drinfeld twist for bs, sorted by (Φ, Ψ).
  std::vector<TwistDatum> find_twist_data(
      BraidedSet const& bs, SquareMap const& f,
      SearchStrategy strategy = SearchStrategy::automatic,
      std::size_t    limit    = std::numeric_limits<std::size_t>::max());

  ////////////////////////////////////////////////////////////////////////
  // B_3 representations
  ////////////////////////////////////////////////////////////////////////

  struct BraidRepresentation {
    CubeMap gen12;
    CubeMap gen23;
  };

  // (r12, r23); throws BraidRelationViolation.
  BraidRepresentation braid_rep(SquareMap const& r);
  BraidRepresentation braid_rep(BraidedSet const& bs);

  // Permutations a of X^3 with a ∘ r1.gen = r2.gen ∘ a for both generators.
  std::vector<CubeMap> find_conjugators(
      BraidRepresentation const& r1, BraidRepresentation const& r2,
      SearchStrategy strategy = SearchStrategy::automatic,
      std::size_t    limit    = std::numeric_limits<std::size_t>::max());

  std::optional<CubeMap> find_conjugator(
      BraidRepresentation const& r1, BraidRepresentation const& r2,
      SearchStrategy strategy = SearchStrategy::automatic);

  bool is_conjugator(BraidRepresentation const& r1,
                     BraidRepresentation const& r2, CubeMap const& a);

}  // namespace reflectwist

#endif  // REFLECTWIST_TWIST_HPP_
