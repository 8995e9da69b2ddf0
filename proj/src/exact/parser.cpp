#include "exact/parser.hpp"

#include <cctype>

#include "exact/errors.hpp"

namespace azinv {

namespace {

class Parser {
 public:
  Parser(RingPtr ring, std::string_view text, std::size_t offset)
      : ring_(std::move(ring)), s_(text), off_(offset) {}

  Elem parse_all() {
    Elem e = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, off_ + pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Elem expr() {
    Elem acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Elem term() {
    Elem acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Elem d = unary();
        std::string witness;
        auto inv = ring_->try_inverse(d, &witness);
        if (!inv) {
          pos_ = at;
          error("division by non-unit " + d.to_string());
        }
        acc = acc * *inv;
      } else {
        return acc;
      }
    }
  }

  Elem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  long signed_int() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    bool paren = eat('(');
    if (paren && eat('-')) neg = !neg;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer exponent");
    if (pos_ - start > 9) error("exponent too large");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !eat(')')) error("expected ')'");
    return neg ? -v : v;
  }

  Elem power() {
    Elem base = atom();
    if (eat('^')) {
      std::size_t at = pos_;
      long e = signed_int();
      if (e < 0 && !ring_->try_inverse(base, nullptr)) {
        pos_ = at;
        error("negative power of non-unit " + base.to_string());
      }
      return base.pow(e);
    }
    return base;
  }

  Elem atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of expression");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpq_class v(mpz_class(std::string(s_.substr(start, pos_ - start))));
      return ring_->from_scalar(Scalar(ring_->base(), v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (auto e = ring_->symbol(name)) return *e;
      pos_ = start;
      error("unknown symbol '" + std::string(name) + "' in " + ring_->signature());
    }
    if (c == '(') {
      std::size_t open = pos_;
      std::size_t bar = find_bar(open);
      if (bar != std::string_view::npos) return product_literal(open, bar);
      ++pos_;
      Elem e = expr();
      if (!eat(')')) error("expected ')'");
      return e;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  // Position of a '|' at depth one inside the parenthesis opened at 'open', or npos.
  std::size_t find_bar(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < s_.size(); ++i) {
      if (s_[i] == '(') ++depth;
      if (s_[i] == ')' && --depth == 0) return std::string_view::npos;
      if (s_[i] == '|' && depth == 1) return i;
    }
    return std::string_view::npos;
  }

  Elem product_literal(std::size_t open, std::size_t bar) {
    auto factors = ring_->product_factors();
    if (!factors) {
      pos_ = open;
      error("product literal in " + ring_->signature() + ", which is not a product");
    }
    int depth = 1;
    std::size_t close = bar + 1;
    for (; close < s_.size(); ++close) {
      if (s_[close] == '(') ++depth;
      if (s_[close] == ')' && --depth == 0) break;
      if (s_[close] == '|' && depth == 1) {
        pos_ = close;
        error("more than one '|' in product literal");
      }
    }
    if (close >= s_.size()) {
      pos_ = s_.size();
      error("expected ')'");
    }
    Elem a = Parser(factors->first, s_.substr(open + 1, bar - open - 1), off_ + open + 1).parse_all();
    Elem b = Parser(factors->second, s_.substr(bar + 1, close - bar - 1), off_ + bar + 1).parse_all();
    pos_ = close + 1;
    return ring_->from_factors(a, b);
  }

  RingPtr ring_;
  std::string_view s_;
  std::size_t off_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem parse_element(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text, 0).parse_all();
}

std::vector<std::vector<std::string>> split_matrix_text(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  std::vector<std::vector<std::string>> rows;
  expect('[');
  skip();
  if (i < text.size() && text[i] == ']') throw ParseError("empty matrix", i);
  for (;;) {
    expect('[');
    std::vector<std::string> row;
    for (;;) {
      std::size_t start = i;
      int depth = 0;
      while (i < text.size()) {
        char c = text[i];
        if (c == '(' || c == '[') ++depth;
        if ((c == ')' || c == ']') && depth == 0) break;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) break;
        ++i;
      }
      if (i >= text.size()) throw ParseError("unterminated row", i);
      std::string entry(text.substr(start, i - start));
      if (entry.find_first_not_of(" \t\n") == std::string::npos) throw ParseError("empty matrix entry", start);
      row.push_back(std::move(entry));
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] != ']') throw ParseError("expected ']'", i);
      ++i;
      break;
    }
    rows.push_back(std::move(row));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    expect(']');
    break;
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters after matrix", i);
  return rows;
}

}  // namespace azinv
