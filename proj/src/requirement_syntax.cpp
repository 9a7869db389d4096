#include "argcsp/requirement_syntax.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace argcsp {

namespace {

struct Token {
  enum Kind { Name, Not, And, Or, Open, Close, End } kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    auto single = [&](Token::Kind k) {
      out.push_back({k, std::string(1, ch), i});
      ++i;
    };
    switch (ch) {
      case '!': single(Token::Not); continue;
      case '&': single(Token::And); continue;
      case '|': single(Token::Or); continue;
      case '(': single(Token::Open); continue;
      case ')': single(Token::Close); continue;
      default: break;
    }
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Name, std::string(s.substr(start, i - start)), start});
      continue;
    }
    throw RequirementSyntaxError("unexpected character '" + std::string(1, ch) + "' at offset " + std::to_string(i));
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const Framework& f, std::vector<Token> tokens) : f_(f), toks_(std::move(tokens)) {}

  UserRequirement requirement() {
    UserRequirement r;
    if (peek_keyword("if")) {
      ++pos_;
      r.guard = cnf();
      if (!peek_keyword("then")) fail("expected 'then'");
      ++pos_;
      r.consequence = cnf();
    } else {
      r.consequence = cnf();
    }
    end();
    return r;
  }

  Cnf formula() {
    Cnf c = cnf();
    end();
    return c;
  }

 private:
  [[nodiscard]] const Token& cur() const { return toks_[pos_]; }
  [[nodiscard]] bool peek_keyword(std::string_view kw) const { return cur().kind == Token::Name && cur().text == kw; }

  [[noreturn]] void fail(const std::string& what) const {
    throw RequirementSyntaxError(what + " at offset " + std::to_string(cur().offset));
  }

  void end() const {
    if (cur().kind != Token::End) fail("unexpected '" + cur().text + "'");
  }

  Cnf cnf() {
    Cnf out;
    out.push_back(clause());
    while (cur().kind == Token::And) {
      ++pos_;
      out.push_back(clause());
    }
    return out;
  }

  Clause clause() {
    bool paren = cur().kind == Token::Open;
    if (paren) ++pos_;
    Clause out;
    out.push_back(literal());
    while (cur().kind == Token::Or) {
      ++pos_;
      out.push_back(literal());
    }
    if (paren) {
      if (cur().kind != Token::Close) fail("expected ')'");
      ++pos_;
    }
    return out;
  }

  Literal literal() {
    bool negated = false;
    while (cur().kind == Token::Not) {
      negated = !negated;
      ++pos_;
    }
    if (cur().kind != Token::Name || cur().text == "then") fail("expected an argument name");
    auto id = f_.find(cur().text);
    if (!id) fail("unknown argument '" + cur().text + "'");
    ++pos_;
    return Literal{*id, !negated};
  }

  const Framework& f_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

UserRequirement parse_requirement(const Framework& f, std::string_view text) {
  return Parser(f, tokenize(text)).requirement();
}

UserRequirement parse_prohibition(const Framework& f, std::string_view text) {
  UserRequirement r;
  r.guard = Parser(f, tokenize(text)).formula();
  r.consequence = Cnf{Clause{}};
  return r;
}

}  // namespace argcsp
