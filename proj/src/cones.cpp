#include "splitpre/cones.hpp"

#include <string>

#include "splitpre/error.hpp"

namespace splitpre::cones {

  Chain::Chain(std::size_t size) : _size(size) {
    if (size < 2) {
      throw PreconditionError("a chain needs at least the elements 0 and 1, got size "
                              + std::to_string(size));
    }
  }

  code_type function_count(std::size_t domain_size, Chain const& chain, code_type cap) {
    code_type total = 1;
    for (std::size_t i = 0; i < domain_size; ++i) {
      total *= chain.size();
      if (total > cap) {
        throw BoundExceeded(std::to_string(chain.size()) + "^" + std::to_string(domain_size)
                            + " functions exceed the cap of " + std::to_string(cap));
      }
    }
    return total;
  }

  code_type FuncTable::code(Chain const& chain) const {
    code_type c     = 0;
    code_type place = 1;
    for (auto v : _values) {
      if (v >= chain.size()) {
        throw PreconditionError("value " + std::to_string(v) + " is not in the chain of size "
                                + std::to_string(chain.size()));
      }
      c += v * place;
      place *= chain.size();
    }
    return c;
  }

  FuncTable FuncTable::decode(code_type code, std::size_t domain_size, Chain const& chain) {
    std::vector<std::size_t> values(domain_size);
    for (auto& v : values) {
      v = code % chain.size();
      code /= chain.size();
    }
    if (code != 0) {
      throw PreconditionError("code out of range for " + std::to_string(chain.size()) + "^"
                              + std::to_string(domain_size));
    }
    return FuncTable(std::move(values));
  }

  FuncTable cone_char(FiniteRelation const& r, std::size_t x, Chain const&) {
    if (x >= r.size()) {
      throw PreconditionError("cone apex " + std::to_string(x) + " outside universe of size "
                              + std::to_string(r.size()));
    }
    std::vector<std::size_t> values(r.size());
    for (std::size_t y = 0; y < r.size(); ++y) {
      values[y] = r.contains(x, y) ? 1 : 0;
    }
    return FuncTable(std::move(values));
  }

  bool is_monotone(FiniteRelation const& r, FuncTable const& f) {
    if (f.domain_size() != r.size()) {
      throw SizeMismatch("function on " + std::to_string(f.domain_size())
                         + " points against relation on " + std::to_string(r.size()));
    }
    for (auto [x, y] : r.pairs()) {
      if (f[x] > f[y]) {
        return false;
      }
    }
    return true;
  }

  std::vector<FuncTable> monotone_set(FiniteRelation const& r, Chain const& chain, code_type cap) {
    code_type const        total = function_count(r.size(), chain, cap);
    auto const             pairs = r.pairs();
    std::vector<FuncTable> out;
    for (code_type c = 0; c < total; ++c) {
      auto f  = FuncTable::decode(c, r.size(), chain);
      bool ok = true;
      for (auto [x, y] : pairs) {
        if (f[x] > f[y]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  bool check_prop1(FiniteRelation const& r, Chain const& chain, code_type cap) {
    function_count(r.size(), chain, cap);
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (cone_char(r, x, chain)[x] != 1) {
        return false;
      }
    }
    return true;
  }

  bool check_prop2(FiniteRelation const& r, Chain const& chain, code_type cap) {
    function_count(r.size(), chain, cap);
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (!is_monotone(r, cone_char(r, x, chain))) {
        return false;
      }
    }
    return true;
  }

  bool check_prop3_star(FiniteRelation const& r, Chain const& chain, code_type cap) {
    auto const fs = monotone_set(r, chain, cap);
    for (std::size_t x = 0; x < r.size(); ++x) {
      for (std::size_t y = 0; y < r.size(); ++y) {
        bool below_everywhere = true;
        for (auto const& f : fs) {
          if (f[x] > f[y]) {
            below_everywhere = false;
            break;
          }
        }
        if (r.contains(x, y) != below_everywhere) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace splitpre::cones
