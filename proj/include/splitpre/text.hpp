#pragma once

// Plain-text and DOT renderings of split preorders.
//
// The text format is a header line "split <m> <n>" followed by one line per
// pair, written as two node tokens such as "s0 t3" or "t1 s0".  Blank lines
// and lines starting with '#' are ignored.  The loader takes the
// reflexive-transitive closure of the listed pairs, so a file may list
// generators only; the emitter always writes the complete strict part in
// sorted order (sources before targets, then by index).

#include <cstddef>
#include <string>
#include <string_view>

#include "splitpre/error.hpp"
#include "splitpre/relation.hpp"
#include "splitpre/split_preorder.hpp"

namespace splitpre::text {

  class FormatError : public Error {
   public:
    FormatError(std::string const& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  SplitPreorder parse_split_preorder(std::string_view text);
  std::string   to_text(SplitPreorder const& r);

  // "rel <dom> <cod>" followed by sorted "<x> <y>" lines.
  std::string to_text(Relation const& r);

  // Sources ranked on top, targets at the bottom, one edge per strict pair.
  // A pair related both ways is drawn once, as a two-headed edge.
  std::string to_dot(SplitPreorder const& r);

}  // namespace splitpre::text
