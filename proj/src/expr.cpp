#include <cctype>
#include <charconv>
#include <optional>
#include <string>

#include "g2/diagram.hpp"

namespace g2 {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  Morphism parse() {
    Morphism m = expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return m;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      skip();
      throw ParseError(std::string("expected '") + c + "'", i_);
    }
  }
  Morphism expr() {
    bool negate = accept('-');
    if (!negate) accept('+');
    Morphism acc = term();
    if (negate) acc = -acc;
    for (;;) {
      std::size_t at = (skip(), i_);
      bool plus = accept('+');
      bool minus = !plus && accept('-');
      if (!plus && !minus) break;
      Morphism rhs = term();
      if (rhs.source() != acc.source() || rhs.target() != acc.target())
        throw ArityMismatch("sum of Mor(" + std::to_string(acc.source()) + "," +
                            std::to_string(acc.target()) + ") and Mor(" +
                            std::to_string(rhs.source()) + "," + std::to_string(rhs.target()) +
                            ") at position " + std::to_string(at));
      acc = plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Morphism term() {
    skip();
    std::optional<RatFunc> scale;
    if (i_ < s_.size() && s_[i_] == '[') scale = scalar();
    Morphism acc = factor();
    for (;;) {
      skip();
      std::size_t at = i_;
      if (accept('.')) {
        Morphism rhs = factor();
        if (rhs.target() != acc.source())
          throw ArityMismatch("composition of Mor(" + std::to_string(acc.source()) + "," +
                              std::to_string(acc.target()) + ") after Mor(" +
                              std::to_string(rhs.source()) + "," + std::to_string(rhs.target()) +
                              ") at position " + std::to_string(at));
        acc = compose(acc, rhs);
      } else if (accept('*')) {
        acc = tensor(acc, factor());
      } else {
        break;
      }
    }
    return scale ? *scale * acc : acc;
  }

  RatFunc scalar() {
    std::size_t open = i_++;
    std::size_t close = s_.find(']', i_);
    if (close == std::string_view::npos) throw ParseError("unterminated scalar", open);
    std::string_view body = s_.substr(i_, close - i_);
    RatFunc value;
    try {
      value = RatFunc::parse(body);
    } catch (const ParseError& e) {
      throw ParseError("bad scalar", i_ + e.pos);
    }
    i_ = close + 1;
    return value;
  }

  std::string word() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  int integer() {
    skip();
    int v = 0;
    auto [p, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc()) throw ParseError("expected a nonnegative integer", i_);
    i_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }

  Morphism factor() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of expression", i_);
    if (accept('(')) {
      Morphism m = expr();
      expect(')');
      return m;
    }
    std::size_t at = i_;
    std::string name = word();
    if (name.empty()) throw ParseError("expected a generator or '('", at);
    expect('(');
    if (name == "adj" || name == "rot" || name == "tr") {
      Morphism m = expr();
      expect(')');
      try {
        if (name == "adj") return adjoint(m);
        if (name == "rot") return rotate(m);
        return trace_close(m);
      } catch (const ArityMismatch& e) {
        throw ArityMismatch(std::string(e.what()) + " at position " + std::to_string(at));
      }
    }
    int n = integer();
    int i = 0;
    if (name != "id") {
      expect(',');
      i = integer();
    }
    expect(')');
    try {
      if (name == "id") return Morphism(Diagram::identity(n));
      if (name == "cup") return Morphism(Diagram::cup(n, i));
      if (name == "cap") return Morphism(Diagram::cap(n, i));
      if (name == "split") return Morphism(Diagram::split(n, i));
      if (name == "merge") return Morphism(Diagram::merge(n, i));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
    throw ParseError("unknown generator '" + name + "'", at);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Morphism parse_expression(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace g2
