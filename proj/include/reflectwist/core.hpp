// Basic value types shared by every module: carrier elements, self-maps of
// X, maps on X^2 and X^3, error types and check reports.
//
// Carriers are always {0, ..., n-1}. A pair (a, b) is encoded as a*n + b and
// a triple (a, b, c) as a*n*n + b*n + c, so lexicographic order on tuples is
// numeric order on codes.

#ifndef REFLECTWIST_CORE_HPP_
#define REFLECTWIST_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflectwist {

  using Elem = std::int32_t;
  using Word = std::vector<Elem>;

  struct Pair {
    Elem first;
    Elem second;
    friend bool operator==(Pair const&, Pair const&) = default;
  };

  struct Triple {
    Elem a;
    Elem b;
    Elem c;
    friend bool operator==(Triple const&, Triple const&) = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Errors
  ////////////////////////////////////////////////////////////////////////

  // Root of every exception thrown by the library. `witness` carries the
  // offending tuple (possibly empty) so that failures can be replayed.
  class Error : public std::runtime_error {
   public:
    Error(std::string kind, std::string const& msg, Word witness = {})
        : std::runtime_error(kind + ": " + msg),
          _kind(std::move(kind)),
          _witness(std::move(witness)) {}

    std::string const& kind() const noexcept {
      return _kind;
    }
    Word const& witness() const noexcept {
      return _witness;
    }

   private:
    std::string _kind;
    Word        _witness;
  };

  // Malformed input: ragged tables, mismatched sizes, entries out of range.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // A mathematical property required by the operation does not hold.
  class PropertyError : public Error {
   public:
    using Error::Error;
  };

  // The requested computation is beyond the configured size gate.
  class SizeLimitExceeded : public Error {
   public:
    SizeLimitExceeded(std::string const& what, std::uint64_t requested,
                      std::uint64_t gate)
        : Error("SizeLimitExceeded",
                what + " needs " + std::to_string(requested)
                    + " states, gate is " + std::to_string(gate)) {}
  };

  [[noreturn]] void throw_shape(std::string const& msg);
  [[noreturn]] void throw_range(std::string const& msg);
  [[noreturn]] void throw_property(std::string const& kind,
                                   std::string const& msg, Word witness = {});

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  // The outcome of a total check. When `ok` is false, `axiom` names the
  // first failing condition and `witness` is the lexicographically first
  // violating tuple.
  struct Report {
    bool        ok = true;
    std::string axiom;
    Word        witness;

    static Report pass() {
      return {};
    }
    static Report fail(std::string axiom, Word witness) {
      return {false, std::move(axiom), std::move(witness)};
    }
    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Whether an operation verifies its mathematical preconditions.
  enum class Precondition { check, skip };

  // Default gates can be overridden by the REFLECTWIST_SIZE_GATE environment
  // variable, which then replaces every default.
  std::uint64_t size_gate(std::uint64_t default_gate);
  void          require_gate(std::string const& what, std::uint64_t requested,
                             std::uint64_t default_gate);

  ////////////////////////////////////////////////////////////////////////
  // FiniteMap: a self-map of {0, ..., n-1}
  ////////////////////////////////////////////////////////////////////////

  class FiniteMap {
   public:
    FiniteMap() = default;
    explicit FiniteMap(Word images);

    static FiniteMap identity(std::size_t n);
    static FiniteMap constant(std::size_t n, Elem c);

    std::size_t size() const noexcept {
      return _images.size();
    }
    Elem operator()(Elem x) const noexcept {
      return _images[static_cast<std::size_t>(x)];
    }
    Word const& images() const noexcept {
      return _images;
    }

    bool      is_bijective() const;
    bool      is_identity() const;
    FiniteMap inverse() const;  // throws NotBijective
    // (*this ∘ other)(x) = (*this)(other(x))
    FiniteMap after(FiniteMap const& other) const;

    friend bool operator==(FiniteMap const&, FiniteMap const&) = default;
    friend auto operator<=>(FiniteMap const& a, FiniteMap const& b) {
      return a._images <=> b._images;
    }

   private:
    Word _images;
  };

  ////////////////////////////////////////////////////////////////////////
  // SquareMap: a map X^2 -> X^2
  ////////////////////////////////////////////////////////////////////////

  class SquareMap {
   public:
    SquareMap() = default;
    // `codes[a*n + b]` is the code of the image of (a, b).
    SquareMap(std::size_t n, Word codes);

    static SquareMap identity(std::size_t n);
    template <typename Fn>
    static SquareMap from_function(std::size_t n, Fn&& fn) {
      Word codes(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          Pair p = fn(static_cast<Elem>(a), static_cast<Elem>(b));
          codes[a * n + b] = static_cast<Elem>(p.first * n + p.second);
        }
      }
      return SquareMap(n, std::move(codes));
    }

    std::size_t size() const noexcept {
      return _n;
    }
    Pair operator()(Elem a, Elem b) const noexcept {
      Elem c = _codes[static_cast<std::size_t>(a) * _n + b];
      return {static_cast<Elem>(c / _n), static_cast<Elem>(c % _n)};
    }
    Elem code(std::size_t pair_code) const noexcept {
      return _codes[pair_code];
    }
    Word const& codes() const noexcept {
      return _codes;
    }

    bool      is_bijective() const;
    bool      is_identity() const;
    SquareMap inverse() const;  // throws NotBijective
    SquareMap after(SquareMap const& other) const;

    friend bool operator==(SquareMap const&, SquareMap const&) = default;

   private:
    std::size_t _n = 0;
    Word        _codes;
  };

  ////////////////////////////////////////////////////////////////////////
  // CubeMap: a map X^3 -> X^3
  ////////////////////////////////////////////////////////////////////////

  class CubeMap {
   public:
    CubeMap() = default;
    CubeMap(std::size_t n, Word codes);

    static CubeMap identity(std::size_t n);
    // F_{12} = F x id and F_{23} = id x F.
    static CubeMap on_first_two(SquareMap const& f);
    static CubeMap on_last_two(SquareMap const& f);
    template <typename Fn>
    static CubeMap from_function(std::size_t n, Fn&& fn) {
      Word codes(n * n * n);
      std::size_t i = 0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c, ++i) {
            Triple t = fn(static_cast<Elem>(a), static_cast<Elem>(b),
                          static_cast<Elem>(c));
            codes[i] = static_cast<Elem>((t.a * n + t.b) * n + t.c);
          }
        }
      }
      return CubeMap(n, std::move(codes));
    }

    std::size_t size() const noexcept {
      return _n;
    }
    Triple operator()(Elem a, Elem b, Elem c) const noexcept {
      return decode(_codes[(static_cast<std::size_t>(a) * _n + b) * _n + c]);
    }
    Triple decode(Elem code) const noexcept {
      auto n = static_cast<Elem>(_n);
      return {code / (n * n), (code / n) % n, code % n};
    }
    Elem code(std::size_t triple_code) const noexcept {
      return _codes[triple_code];
    }
    Word const& codes() const noexcept {
      return _codes;
    }

    bool    is_bijective() const;
    bool    is_identity() const;
    CubeMap inverse() const;  // throws NotBijective
    CubeMap after(CubeMap const& other) const;

    friend bool operator==(CubeMap const&, CubeMap const&) = default;
    friend auto operator<=>(CubeMap const& a, CubeMap const& b) {
      return a._codes <=> b._codes;
    }

   private:
    std::size_t _n = 0;
    Word        _codes;
  };

  // Composite of a list of maps on a common domain, applied right to left:
  // compose({f, g, h}) = f ∘ g ∘ h.
  CubeMap compose(std::initializer_list<CubeMap> maps);

  // Helpers for encoded tables.
  bool is_permutation(Word const& w);
  Word inverse_permutation(Word const& w);

}  // namespace reflectwist

#endif  // REFLECTWIST_CORE_HPP_
