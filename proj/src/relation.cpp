#include "splitpre/relation.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "splitpre/error.hpp"

namespace splitpre {

  namespace detail {

    BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows),
          _cols(cols),
          _words((cols + word_bits - 1) / word_bits),
          _data(rows * _words, 0) {}

    std::size_t BitMatrix::count() const noexcept {
      std::size_t n = 0;
      for (auto w : _data) {
        n += std::popcount(w);
      }
      return n;
    }

    void or_into(std::span<BitMatrix::word_type>       dst,
                 std::span<BitMatrix::word_type const> src) noexcept {
      for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] |= src[i];
      }
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // FiniteRelation
  ////////////////////////////////////////////////////////////////////////

  FiniteRelation::FiniteRelation(std::size_t size) : _bits(size, size) {}

  FiniteRelation::FiniteRelation(std::size_t size, std::initializer_list<Pair> pairs)
      : FiniteRelation(size, std::span<Pair const>(pairs.begin(), pairs.size())) {}

  FiniteRelation::FiniteRelation(std::size_t size, std::span<Pair const> pairs)
      : _bits(size, size) {
    for (auto [i, j] : pairs) {
      insert(i, j);
    }
  }

  FiniteRelation FiniteRelation::diagonal(std::size_t size) {
    FiniteRelation r(size);
    for (std::size_t i = 0; i < size; ++i) {
      r._bits.set(i, i);
    }
    return r;
  }

  FiniteRelation FiniteRelation::full(std::size_t size) {
    FiniteRelation r(size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        r._bits.set(i, j);
      }
    }
    return r;
  }

  void FiniteRelation::check(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) {
      throw std::out_of_range("pair (" + std::to_string(i) + ", "
                              + std::to_string(j)
                              + ") outside universe of size "
                              + std::to_string(size()));
    }
  }

  bool FiniteRelation::contains(std::size_t i, std::size_t j) const {
    check(i, j);
    return _bits.test(i, j);
  }

  void FiniteRelation::insert(std::size_t i, std::size_t j) {
    check(i, j);
    _bits.set(i, j);
  }

  void FiniteRelation::erase(std::size_t i, std::size_t j) {
    check(i, j);
    _bits.set(i, j, false);
  }

  std::vector<Pair> FiniteRelation::pairs() const {
    std::vector<Pair> out;
    out.reserve(count());
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (_bits.test(i, j)) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  bool FiniteRelation::is_subset_of(FiniteRelation const& other) const {
    if (size() != other.size()) {
      return false;
    }
    for (std::size_t i = 0; i < size(); ++i) {
      auto a = row(i);
      auto b = other.row(i);
      for (std::size_t w = 0; w < a.size(); ++w) {
        if ((a[w] & ~b[w]) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteRelation& FiniteRelation::operator|=(FiniteRelation const& other) {
    if (size() != other.size()) {
      throw SizeMismatch("union of relations on universes of size "
                         + std::to_string(size()) + " and "
                         + std::to_string(other.size()));
    }
    for (std::size_t i = 0; i < size(); ++i) {
      detail::or_into(_bits.row(i), other._bits.row(i));
    }
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closures and predicates
  ////////////////////////////////////////////////////////////////////////

  FiniteRelation transitive_closure(FiniteRelation const& r) {
    FiniteRelation out = r;
    auto&          m   = out._bits;
    std::size_t    n   = out.size();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (m.test(i, k)) {
          detail::or_into(m.row(i), m.row(k));
        }
      }
    }
    return out;
  }

  FiniteRelation reflexive_closure(FiniteRelation const& r) {
    FiniteRelation out = r;
    out |= FiniteRelation::diagonal(r.size());
    return out;
  }

  FiniteRelation symmetric_closure(FiniteRelation const& r) {
    FiniteRelation out = r;
    out |= converse(r);
    return out;
  }

  FiniteRelation reflexive_transitive_closure(FiniteRelation const& r) {
    return transitive_closure(reflexive_closure(r));
  }

  FiniteRelation strictify(FiniteRelation const& r) {
    FiniteRelation out = r;
    for (std::size_t i = 0; i < r.size(); ++i) {
      out.erase(i, i);
    }
    return out;
  }

  FiniteRelation converse(FiniteRelation const& r) {
    FiniteRelation out(r.size());
    for (auto [i, j] : r.pairs()) {
      out.insert(j, i);
    }
    return out;
  }

  bool is_reflexive(FiniteRelation const& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!r.contains(i, i)) {
        return false;
      }
    }
    return true;
  }

  bool is_irreflexive(FiniteRelation const& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r.contains(i, i)) {
        return false;
      }
    }
    return true;
  }

  bool is_symmetric(FiniteRelation const& r) {
    return r == converse(r);
  }

  bool is_transitive(FiniteRelation const& r) {
    return transitive_closure(r) == r;
  }

  bool is_preorder(FiniteRelation const& r) {
    return is_reflexive(r) && is_transitive(r);
  }

  bool is_equivalence(FiniteRelation const& r) {
    return is_preorder(r) && is_symmetric(r);
  }

  bool is_strictly_transitive(FiniteRelation const& r) {
    if (!is_irreflexive(r)) {
      return false;
    }
    std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!r.contains(x, y)) {
          continue;
        }
        for (std::size_t z = 0; z < n; ++z) {
          if (x != z && r.contains(y, z) && !r.contains(x, z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  void for_each_preorder(std::size_t                                       size,
                         std::function<void(FiniteRelation const&)> const& f) {
    if (size > max_enumeration_size) {
      throw BoundExceeded("preorder enumeration is limited to universes of size "
                          + std::to_string(max_enumeration_size) + ", got "
                          + std::to_string(size));
    }
    std::vector<Pair> off_diagonal;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (i != j) {
          off_diagonal.emplace_back(i, j);
        }
      }
    }
    std::uint64_t const limit = std::uint64_t(1) << off_diagonal.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      FiniteRelation r = FiniteRelation::diagonal(size);
      for (std::size_t b = 0; b < off_diagonal.size(); ++b) {
        if ((mask >> b) & 1U) {
          r.insert(off_diagonal[b].first, off_diagonal[b].second);
        }
      }
      if (is_transitive(r)) {
        f(r);
      }
    }
  }

  std::vector<FiniteRelation> enumerate_preorders(std::size_t size) {
    std::vector<FiniteRelation> out;
    for_each_preorder(size, [&out](FiniteRelation const& r) { out.push_back(r); });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relation
  ////////////////////////////////////////////////////////////////////////

  Relation::Relation(std::size_t dom, std::size_t cod) : _bits(dom, cod) {}

  Relation::Relation(std::size_t dom, std::size_t cod, std::initializer_list<Pair> pairs)
      : Relation(dom, cod) {
    for (auto [x, y] : pairs) {
      insert(x, y);
    }
  }

  Relation Relation::identity(std::size_t n) {
    Relation r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      r._bits.set(i, i);
    }
    return r;
  }

  void Relation::check(std::size_t x, std::size_t y) const {
    if (x >= dom() || y >= cod()) {
      throw std::out_of_range("pair (" + std::to_string(x) + ", "
                              + std::to_string(y) + ") outside "
                              + std::to_string(dom()) + " x "
                              + std::to_string(cod()));
    }
  }

  bool Relation::contains(std::size_t x, std::size_t y) const {
    check(x, y);
    return _bits.test(x, y);
  }

  void Relation::insert(std::size_t x, std::size_t y) {
    check(x, y);
    _bits.set(x, y);
  }

  std::vector<Pair> Relation::pairs() const {
    std::vector<Pair> out;
    out.reserve(count());
    for (std::size_t x = 0; x < dom(); ++x) {
      for (std::size_t y = 0; y < cod(); ++y) {
        if (_bits.test(x, y)) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  Relation compose_plain(Relation const& first, Relation const& second) {
    if (first.cod() != second.dom()) {
      throw SizeMismatch("cannot compose relation " + std::to_string(first.dom())
                         + " -> " + std::to_string(first.cod()) + " with "
                         + std::to_string(second.dom()) + " -> "
                         + std::to_string(second.cod()));
    }
    Relation out(first.dom(), second.cod());
    for (std::size_t x = 0; x < first.dom(); ++x) {
      auto dst = out._bits.row(x);
      for (std::size_t z = 0; z < first.cod(); ++z) {
        if (first._bits.test(x, z)) {
          detail::or_into(dst, second._bits.row(z));
        }
      }
    }
    return out;
  }

}  // namespace splitpre
