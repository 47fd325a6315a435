#include <cctype>
#include <string>

#include "locgad/polynomial.hpp"

namespace locgad {
namespace {

// Recursive-descent parser over the shared grammar, extended with
// parentheses so that factored forms such as x^2*(y+z) can be entered.
class Parser {
 public:
  using Names = std::vector<std::pair<std::string, std::size_t>>;

  Parser(std::string_view text, std::size_t nvars, Names names)
      : text_(text), nvars_(nvars), names_(std::move(names)) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) throw Error("empty polynomial text");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  Polynomial expr() {
    Polynomial acc(nvars_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    if (!starts_factor()) fail("expected a term");
    Polynomial acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (peek('/')) {
        ++pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= 1 / d.constant_term();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("malformed exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 0xFFFFu) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(nvars_, number());
    if (std::isalpha(static_cast<unsigned char>(c))) return Polynomial::variable(nvars_, variable());
    fail("unexpected character");
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num(text_.substr(start, pos_ - start));
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("malformed rational");
      Rational q = parse_rational(num + "/" + std::string(text_.substr(dstart, pos_ - dstart)));
      return q;
    }
    pos_ = save;
    return parse_rational(num);
  }

  std::size_t variable() {
    // Longest ring name matching at the current position.
    std::size_t best = 0, best_len = 0;
    for (const auto& [name, index] : names_) {
      if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
        best = index;
        best_len = name.size();
      }
    }
    if (best_len == 0) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    pos_ += best_len;
    return best;
  }

  std::string_view text_;
  std::size_t nvars_;
  Names names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  Parser::Names names;
  for (std::size_t i = 0; i < ring.nvars(); ++i) names.emplace_back(ring.names[i], i);
  return Parser(text, ring.nvars(), std::move(names)).parse();
}

Polynomial parse_form(std::string_view text, std::size_t min_vars) {
  // Letters x, y, z, u alias x0..x3.
  Parser::Names names;
  for (std::size_t i = 0; i < 10; ++i) names.emplace_back("x" + std::to_string(i), i);
  const char* letters[] = {"x", "y", "z", "u"};
  for (std::size_t i = 0; i < 4; ++i) names.emplace_back(letters[i], i);
  Polynomial raw = Parser(text, 10, std::move(names)).parse();
  std::size_t used = min_vars;
  for (const auto& t : raw.terms())
    for (std::size_t i = 0; i < 10; ++i)
      if (t.monomial[i] && i + 1 > used) used = i + 1;
  std::vector<Term> terms;
  for (const auto& t : raw.terms()) {
    Monomial m(used);
    for (std::size_t i = 0; i < used; ++i) m.set(i, t.monomial[i]);
    terms.push_back({m, t.coeff});
  }
  return Polynomial(used, std::move(terms));
}

}  // namespace locgad
