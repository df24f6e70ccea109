#include "splitpre/text.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace splitpre::text {

  namespace {

    std::vector<std::string_view> tokens(std::string_view line) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
          ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
          ++i;
        }
        if (i > start) {
          out.push_back(line.substr(start, i - start));
        }
      }
      return out;
    }

    bool parse_index(std::string_view s, std::size_t& out) {
      if (s.empty()) {
        return false;
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && ptr == s.data() + s.size();
    }

    Node parse_node(std::string_view token, std::size_t line) {
      std::size_t index = 0;
      if (token.size() < 2 || (token[0] != 's' && token[0] != 't')
          || !parse_index(token.substr(1), index)) {
        throw FormatError("bad node '" + std::string(token) + "', expected s<i> or t<i>", line);
      }
      return token[0] == 's' ? source(index) : target(index);
    }

  }  // namespace

  SplitPreorder parse_split_preorder(std::string_view text) {
    std::optional<SplitRelation> rel;
    std::size_t                  line_no = 0;
    std::size_t                  pos     = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      pos                   = end + 1;
      ++line_no;

      auto toks = tokens(line);
      if (toks.empty() || toks[0].front() == '#') {
        continue;
      }
      if (!rel) {
        std::size_t m = 0, n = 0;
        if (toks.size() != 3 || toks[0] != "split" || !parse_index(toks[1], m)
            || !parse_index(toks[2], n)) {
          throw FormatError("expected header 'split <m> <n>'", line_no);
        }
        rel.emplace(m, n);
        continue;
      }
      if (toks.size() != 2) {
        throw FormatError("expected two node tokens, got " + std::to_string(toks.size()),
                          line_no);
      }
      Node u = parse_node(toks[0], line_no);
      Node v = parse_node(toks[1], line_no);
      for (Node w : {u, v}) {
        std::size_t bound = w.tag == Tag::source ? rel->src() : rel->tgt();
        if (w.index >= bound) {
          throw FormatError("node " + to_string(w) + " out of range for split "
                                + std::to_string(rel->src()) + " " + std::to_string(rel->tgt()),
                            line_no);
        }
      }
      rel->insert(u, v);
    }
    if (!rel) {
      throw FormatError("missing header 'split <m> <n>'", line_no);
    }
    return SplitPreorder::closure_of(*rel);
  }

  std::string to_text(SplitPreorder const& r) {
    std::ostringstream out;
    out << "split " << r.src() << ' ' << r.tgt() << '\n';
    for (auto const& [u, v] : r.strict_pairs()) {
      out << to_string(u) << ' ' << to_string(v) << '\n';
    }
    return out.str();
  }

  std::string to_text(Relation const& r) {
    std::ostringstream out;
    out << "rel " << r.dom() << ' ' << r.cod() << '\n';
    for (auto [x, y] : r.pairs()) {
      out << x << ' ' << y << '\n';
    }
    return out.str();
  }

  std::string to_dot(SplitPreorder const& r) {
    std::ostringstream out;
    out << "digraph splitpreorder {\n";
    if (r.src() > 0) {
      out << "  { rank=source;";
      for (std::size_t i = 0; i < r.src(); ++i) {
        out << ' ' << to_string(source(i)) << ';';
      }
      out << " }\n";
    }
    if (r.tgt() > 0) {
      out << "  { rank=sink;";
      for (std::size_t i = 0; i < r.tgt(); ++i) {
        out << ' ' << to_string(target(i)) << ';';
      }
      out << " }\n";
    }
    for (auto const& [u, v] : r.strict_pairs()) {
      bool const both = r.contains(v, u);
      if (both && v < u) {
        continue;
      }
      out << "  " << to_string(u) << " -> " << to_string(v);
      if (both) {
        out << " [dir=both]";
      }
      out << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace splitpre::text
