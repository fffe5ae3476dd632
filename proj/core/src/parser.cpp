#include "hlgf/parser.hpp"

#include <cctype>

#include "hlgf/errors.hpp"

namespace hlgf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SkeletalComplex& c) : text_(text), complex_(c) {}

  GlobeWord parse() {
    GlobeWord w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  int integer() {
    if (!at_digit()) fail("expected an integer");
    long value = 0;
    while (at_digit()) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1'000'000) fail("integer too large");
    }
    return static_cast<int>(value);
  }

  int single_digit() {
    if (!at_digit()) fail("expected a level digit");
    return text_[pos_++] - '0';
  }

  GlobeWord word() {
    GlobeWord acc = primary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!consume("o")) return acc;
      const int level = integer();
      GlobeWord rhs = primary();
      try {
        acc = compose(acc, rhs, level);
      } catch (const Error& e) {
        fail(e.what(), at);
      }
    }
  }

  GlobeWord primary() {
    skip_space();
    const std::size_t at = pos_;
    if (consume("(")) {
      GlobeWord w = word();
      expect(")");
      return w;
    }
    if (consume("inv")) {
      const int level = integer();
      expect("(");
      GlobeWord w = word();
      expect(")");
      try {
        return invert(w, level);
      } catch (const Error& e) {
        fail(e.what(), at);
      }
    }
    if (consume("s")) {
      const int from = single_digit();
      const int to = single_digit();
      expect("(");
      GlobeWord w = word();
      expect(")");
      try {
        return degenerate(w, from, to);
      } catch (const Error& e) {
        fail(e.what(), at);
      }
    }
    if (consume("v")) {
      const int v = integer();
      if (!complex_.contains({v})) fail("unknown vertex v" + std::to_string(v), at);
      return GlobeWord::vertex(v);
    }
    if (consume("G")) {
      Simplex s;
      if (consume("[")) {
        s.push_back(integer());
        while (consume(",")) s.push_back(integer());
        expect("]");
      } else {
        if (!at_digit()) fail("expected generator digits");
        while (at_digit()) s.push_back(text_[pos_++] - '0');
      }
      if (!complex_.contains(s)) fail("unknown simplex " + simplex_key(s), at);
      return GlobeWord::generator(s);
    }
    fail("expected a word");
  }

  std::string_view text_;
  const SkeletalComplex& complex_;
  std::size_t pos_ = 0;
};

}  // namespace

GlobeWord parse_word(std::string_view text, const SkeletalComplex& c) {
  return Parser(text, c).parse();
}

}  // namespace hlgf
