#include <cctype>
#include <optional>
#include <string>

#include "lpakk/error.hpp"
#include "lpakk/path_algebra.hpp"

namespace lpakk {

namespace {

// A parsed value is either a bare integer (kept apart so that "2 e" scales
// rather than multiplying by 2 * 1) or an algebra element.
struct Value {
  std::optional<BigInt> scalar;
  std::optional<AlgebraElement> element;
};

class Parser {
 public:
  Parser(std::string_view src, const PathAlgebra& alg) : src_(src), alg_(alg) {}

  AlgebraElement run() {
    Value v = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return as_element(std::move(v));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("syntax_error", what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    return c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
  }

  AlgebraElement as_element(Value v) const {
    if (v.element) return std::move(*v.element);
    return *v.scalar * AlgebraElement::one(alg_);
  }

  Value add(Value a, Value b, bool subtract) const {
    if (a.scalar && b.scalar) {
      BigInt sum = subtract ? BigInt(*a.scalar - *b.scalar) : BigInt(*a.scalar + *b.scalar);
      return {std::move(sum), {}};
    }
    AlgebraElement x = as_element(std::move(a));
    AlgebraElement y = as_element(std::move(b));
    if (subtract)
      x -= y;
    else
      x += y;
    return {std::nullopt, std::move(x)};
  }

  static Value mul(Value a, Value b) {
    if (a.scalar && b.scalar) return {*a.scalar * *b.scalar, {}};
    if (a.scalar) return {std::nullopt, *a.scalar * *b.element};
    if (b.scalar) return {std::nullopt, *b.scalar * *a.element};
    return {std::nullopt, *a.element * *b.element};
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+'))
        v = add(std::move(v), term(), false);
      else if (accept('-'))
        v = add(std::move(v), term(), true);
      else
        return v;
    }
  }

  Value term() {
    const bool negate = accept('-');
    Value v = factor();
    for (;;) {
      if (accept('.')) {
        v = mul(std::move(v), factor());
      } else if (starts_primary()) {
        v = mul(std::move(v), factor());
      } else {
        break;
      }
    }
    if (negate) v = mul(Value{BigInt(-1), {}}, std::move(v));
    return v;
  }

  Value factor() {
    Value v = primary();
    while (accept('*')) {
      if (v.element) v.element = v.element->star();
    }
    return v;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= src_.size() || !ident_start(src_[pos_])) fail("expected identifier");
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Value primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {BigInt(std::string(src_.substr(start, pos_ - start))), {}};
    }
    const std::size_t start = pos_;
    const std::string name = identifier();
    const Graph& g = alg_.graph();
    if (name == "q" && accept('[')) {
      const std::string v = identifier();
      if (!accept(']')) fail("expected ']'");
      const auto idx = g.index_of(v);
      if (!idx) throw DomainError("unknown_identifier", "unknown vertex '" + v + "'");
      return {std::nullopt, AlgebraElement::q(alg_, *idx)};
    }
    if (auto v = g.index_of(name)) return {std::nullopt, AlgebraElement::vertex(alg_, *v)};
    if (auto e = g.edge_index(name)) return {std::nullopt, AlgebraElement::edge(alg_, *e)};
    pos_ = start;
    throw DomainError("unknown_identifier",
                      "unknown identifier '" + name + "' at offset " + std::to_string(start));
  }

  std::string_view src_;
  const PathAlgebra& alg_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse(std::string_view expr, const PathAlgebra& algebra) {
  return Parser(expr, algebra).run();
}

}  // namespace lpakk
