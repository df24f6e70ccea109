#include "splitpre/logic/parser.hpp"

#include <cctype>
#include <string>

#include "splitpre/error.hpp"

namespace splitpre::logic {

  namespace {

    bool ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    bool ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      Formula formula() {
        Formula left = conjunction();
        while (accept("\\/")) {
          left = Formula::disj(std::move(left), conjunction());
        }
        return left;
      }

      Derivation derivation() {
        skip_space();
        std::size_t const start = _pos;
        std::string const word  = identifier("derivation constructor");

        if (word == "comp" || word == "pair" || word == "copair") {
          expect("(");
          Derivation first = derivation();
          expect(",");
          Derivation second = derivation();
          expect(")");
          if (word == "comp") {
            return Derivation::comp(std::move(first), std::move(second));
          }
          if (word == "pair") {
            return Derivation::pair(std::move(first), std::move(second));
          }
          return Derivation::copair(std::move(first), std::move(second));
        }
        if (word == "id" || word == "bang" || word == "abort") {
          expect("{");
          Formula a = formula();
          expect("}");
          if (word == "id") {
            return Derivation::id(std::move(a));
          }
          if (word == "bang") {
            return Derivation::k_top(std::move(a));
          }
          return Derivation::k_bot(std::move(a));
        }
        if (word == "pi1" || word == "pi2" || word == "inl" || word == "inr") {
          expect("{");
          Formula a = formula();
          expect(",");
          Formula b = formula();
          expect("}");
          if (word == "pi1") {
            return Derivation::k1_conj(std::move(a), std::move(b));
          }
          if (word == "pi2") {
            return Derivation::k2_conj(std::move(a), std::move(b));
          }
          if (word == "inl") {
            return Derivation::k1_disj(std::move(a), std::move(b));
          }
          return Derivation::k2_disj(std::move(a), std::move(b));
        }
        throw ParseError("unknown derivation constructor '" + word + "'", start);
      }

      void finish() {
        skip_space();
        if (_pos != _text.size()) {
          throw ParseError("unexpected trailing input '" + std::string(_text.substr(_pos)) + "'",
                           _pos);
        }
      }

     private:
      Formula conjunction() {
        Formula left = atom();
        while (accept("/\\")) {
          left = Formula::conj(std::move(left), atom());
        }
        return left;
      }

      Formula atom() {
        skip_space();
        if (accept("(")) {
          Formula inner = formula();
          expect(")");
          return inner;
        }
        std::string const word = identifier("formula");
        if (word == "T") {
          return Formula::truth();
        }
        if (word == "F") {
          return Formula::falsum();
        }
        return Formula::var(word);
      }

      std::string identifier(char const* what) {
        skip_space();
        if (_pos >= _text.size() || !ident_start(_text[_pos])) {
          throw ParseError(std::string("expected ") + what + ", found "
                               + (_pos >= _text.size() ? std::string("end of input")
                                                       : "'" + std::string(1, _text[_pos]) + "'"),
                           _pos);
        }
        std::size_t const start = _pos;
        while (_pos < _text.size() && ident_char(_text[_pos])) {
          ++_pos;
        }
        return std::string(_text.substr(start, _pos - start));
      }

      bool accept(std::string_view token) {
        skip_space();
        if (_text.substr(_pos, token.size()) == token) {
          _pos += token.size();
          return true;
        }
        return false;
      }

      void expect(std::string_view token) {
        if (!accept(token)) {
          throw ParseError("expected '" + std::string(token) + "'", _pos);
        }
      }

      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

  }  // namespace

  Formula parse_formula(std::string_view text) {
    Parser  p(text);
    Formula a = p.formula();
    p.finish();
    return a;
  }

  Derivation parse_derivation(std::string_view text) {
    Parser     p(text);
    Derivation d = p.derivation();
    p.finish();
    return d;
  }

  Formula parse_formula(std::string_view text, Fragment fragment) {
    Formula a = parse_formula(text);
    check_fragment(a, fragment);
    return a;
  }

  Derivation parse_derivation(std::string_view text, Fragment fragment) {
    Derivation d = parse_derivation(text);
    check_fragment(d, fragment);
    return d;
  }

}  // namespace splitpre::logic
