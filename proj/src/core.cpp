#include "reflectwist/core.hpp"

#include <cstdlib>
#include <numeric>

namespace reflectwist {

  void throw_shape(std::string const& msg) {
    throw InputError("ShapeError", msg);
  }

  void throw_range(std::string const& msg) {
    throw InputError("RangeError", msg);
  }

  void throw_property(std::string const& kind, std::string const& msg,
                      Word witness) {
    throw PropertyError(kind, msg, std::move(witness));
  }

  std::uint64_t size_gate(std::uint64_t default_gate) {
    char const* env = std::getenv("REFLECTWIST_SIZE_GATE");
    if (env == nullptr || *env == '\0') {
      return default_gate;
    }
    char* end = nullptr;
    auto  v   = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      return default_gate;
    }
    return v;
  }

  void require_gate(std::string const& what, std::uint64_t requested,
                    std::uint64_t default_gate) {
    auto gate = size_gate(default_gate);
    if (requested > gate) {
      throw SizeLimitExceeded(what, requested, gate);
    }
  }

  bool is_permutation(Word const& w) {
    std::vector<char> seen(w.size(), 0);
    for (Elem x : w) {
      if (x < 0 || static_cast<std::size_t>(x) >= w.size() || seen[x]) {
        return false;
      }
      seen[x] = 1;
    }
    return true;
  }

  Word inverse_permutation(Word const& w) {
    if (!is_permutation(w)) {
      throw_property("NotBijective", "map is not a bijection");
    }
    Word inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      inv[w[i]] = static_cast<Elem>(i);
    }
    return inv;
  }

  namespace {
    bool is_identity_table(Word const& w) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != static_cast<Elem>(i)) {
          return false;
        }
      }
      return true;
    }

    void check_codes(Word const& codes, std::size_t bound, char const* what) {
      for (Elem c : codes) {
        if (c < 0 || static_cast<std::size_t>(c) >= bound) {
          throw_range(std::string(what) + " entry " + std::to_string(c)
                      + " out of range");
        }
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteMap
  ////////////////////////////////////////////////////////////////////////

  FiniteMap::FiniteMap(Word images) : _images(std::move(images)) {
    check_codes(_images, _images.size(), "map");
  }

  FiniteMap FiniteMap::identity(std::size_t n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 0);
    return FiniteMap(std::move(w));
  }

  FiniteMap FiniteMap::constant(std::size_t n, Elem c) {
    return FiniteMap(Word(n, c));
  }

  bool FiniteMap::is_bijective() const {
    return is_permutation(_images);
  }

  bool FiniteMap::is_identity() const {
    return is_identity_table(_images);
  }

  FiniteMap FiniteMap::inverse() const {
    return FiniteMap(inverse_permutation(_images));
  }

  FiniteMap FiniteMap::after(FiniteMap const& other) const {
    if (other.size() != size()) {
      throw_shape("composing maps of different sizes");
    }
    Word w(size());
    for (std::size_t i = 0; i < size(); ++i) {
      w[i] = _images[other._images[i]];
    }
    return FiniteMap(std::move(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // SquareMap
  ////////////////////////////////////////////////////////////////////////

  SquareMap::SquareMap(std::size_t n, Word codes)
      : _n(n), _codes(std::move(codes)) {
    if (_codes.size() != n * n) {
      throw_shape("square map needs n^2 entries");
    }
    check_codes(_codes, n * n, "square map");
  }

  SquareMap SquareMap::identity(std::size_t n) {
    Word w(n * n);
    std::iota(w.begin(), w.end(), 0);
    return SquareMap(n, std::move(w));
  }

  bool SquareMap::is_bijective() const {
    return is_permutation(_codes);
  }

  bool SquareMap::is_identity() const {
    return is_identity_table(_codes);
  }

  SquareMap SquareMap::inverse() const {
    return SquareMap(_n, inverse_permutation(_codes));
  }

  SquareMap SquareMap::after(SquareMap const& other) const {
    if (other._n != _n) {
      throw_shape("composing square maps of different sizes");
    }
    Word w(_codes.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = _codes[other._codes[i]];
    }
    return SquareMap(_n, std::move(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // CubeMap
  ////////////////////////////////////////////////////////////////////////

  CubeMap::CubeMap(std::size_t n, Word codes)
      : _n(n), _codes(std::move(codes)) {
    if (_codes.size() != n * n * n) {
      throw_shape("cube map needs n^3 entries");
    }
    check_codes(_codes, n * n * n, "cube map");
  }

  CubeMap CubeMap::identity(std::size_t n) {
    Word w(n * n * n);
    std::iota(w.begin(), w.end(), 0);
    return CubeMap(n, std::move(w));
  }

  CubeMap CubeMap::on_first_two(SquareMap const& f) {
    return from_function(f.size(), [&f](Elem a, Elem b, Elem c) {
      Pair p = f(a, b);
      return Triple{p.first, p.second, c};
    });
  }

  CubeMap CubeMap::on_last_two(SquareMap const& f) {
    return from_function(f.size(), [&f](Elem a, Elem b, Elem c) {
      Pair p = f(b, c);
      return Triple{a, p.first, p.second};
    });
  }

  bool CubeMap::is_bijective() const {
    return is_permutation(_codes);
  }

  bool CubeMap::is_identity() const {
    return is_identity_table(_codes);
  }

  CubeMap CubeMap::inverse() const {
    return CubeMap(_n, inverse_permutation(_codes));
  }

  CubeMap CubeMap::after(CubeMap const& other) const {
    if (other._n != _n) {
      throw_shape("composing cube maps of different sizes");
    }
    Word w(_codes.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = _codes[other._codes[i]];
    }
    return CubeMap(_n, std::move(w));
  }

  CubeMap compose(std::initializer_list<CubeMap> maps) {
    if (maps.size() == 0) {
      throw_shape("empty composite");
    }
    auto    it  = maps.end();
    CubeMap acc = *--it;
    while (it != maps.begin()) {
      --it;
      acc = it->after(acc);
    }
    return acc;
  }

}  // namespace reflectwist
