#include <cctype>
#include <string>
#include <vector>

#include "rmlogic/errors.hpp"
#include "rmlogic/formula.hpp"

namespace rmlogic {

namespace {

enum class Tok {
  End,
  Ident,
  Zero,
  Half,
  One,
  Join,    // #
  Meet,    // &
  Vee,     // |
  Arrow,   // ~>
  Neg,     // !
  Nabla,   // N
  Delta,   // T
  Flip,    // F
  DOpen,   // d(
  LParen,
  RParen,
  Comma,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Tok k) {
      out.push_back({k, start, std::string(1, c)});
      ++i;
    };
    switch (c) {
      case '#': single(Tok::Join); continue;
      case '&': single(Tok::Meet); continue;
      case '|': single(Tok::Vee); continue;
      case '!': single(Tok::Neg); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '~':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Arrow, start, "~>"});
          i += 2;
          continue;
        }
        throw ParseError("unknown token '~' at position " + std::to_string(start) + " (did you mean '~>'?)",
                         start, {"~>"});
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string num(s.substr(start, i - start));
      if (num == "1" && s.substr(i, 2) == "/2") {
        i += 2;
        out.push_back({Tok::Half, start, "1/2"});
      } else if (num == "0") {
        out.push_back({Tok::Zero, start, num});
      } else if (num == "1") {
        out.push_back({Tok::One, start, num});
      } else {
        throw ParseError("unknown token '" + num + "' at position " + std::to_string(start) +
                             " (constants are 0, h, 1/2, 1)",
                         start, {"0", "h", "1/2", "1"});
      }
      continue;
    }
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      if (word == "h") {
        out.push_back({Tok::Half, start, word});
      } else if (word == "N") {
        out.push_back({Tok::Nabla, start, word});
      } else if (word == "T") {
        out.push_back({Tok::Delta, start, word});
      } else if (word == "F") {
        out.push_back({Tok::Flip, start, word});
      } else if (word == "d") {
        std::size_t j = i;
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j >= s.size() || s[j] != '(') {
          throw ParseError("expected '(' after 'd' at position " + std::to_string(j), j, {"("});
        }
        i = j + 1;
        out.push_back({Tok::DOpen, start, "d("});
      } else {
        out.push_back({Tok::Ident, start, word});
      }
      continue;
    }
    throw ParseError(std::string("unknown token '") + c + "' at position " + std::to_string(start), start,
                     {});
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

std::string join_expected(const std::vector<std::string>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ", ";
    s += e[i];
  }
  return s;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const VarMap& vars) : toks_(std::move(toks)), vars_(vars) {}

  Formula parse_formula_eof() {
    Formula f = parse_arrow();
    if (peek().kind != Tok::End) {
      fail({"~>", "|", "#", "&", "end of input"});
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError("syntax error at position " + std::to_string(t.pos) + ": unexpected " + describe(t) +
                         "; expected one of: " + join_expected(expected),
                     t.pos, std::move(expected));
  }

  void expect(Tok k, const char* text) {
    if (peek().kind != k) fail({text});
    ++pos_;
  }

  template <typename Next>
  Formula left_assoc(Tok tok, Op op, Next next_level) {
    Formula f = (this->*next_level)();
    while (peek().kind == tok) {
      ++pos_;
      f = Formula::make(op, {f, (this->*next_level)()});
    }
    return f;
  }

  Formula parse_arrow() { return left_assoc(Tok::Arrow, Op::Arrow, &Parser::parse_or); }
  Formula parse_or() { return left_assoc(Tok::Vee, Op::Vee, &Parser::parse_join); }
  Formula parse_join() { return left_assoc(Tok::Join, Op::Join, &Parser::parse_and); }
  Formula parse_and() { return left_assoc(Tok::Meet, Op::Meet, &Parser::parse_unary); }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Neg: ++pos_; return Formula::neg(parse_unary());
      case Tok::Nabla: ++pos_; return Formula::nabla(parse_unary());
      case Tok::Delta: ++pos_; return Formula::delta(parse_unary());
      case Tok::Flip: ++pos_; return Formula::flip(parse_unary());
      default: return parse_atom();
    }
  }

  Formula parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero: ++pos_; return Formula::zero();
      case Tok::Half: ++pos_; return Formula::half();
      case Tok::One: ++pos_; return Formula::one();
      case Tok::Ident: {
        ++pos_;
        auto idx = vars_.find(t.text);
        if (!idx) {
          throw ParseError("unknown variable '" + t.text + "' at position " + std::to_string(t.pos), t.pos,
                           {});
        }
        return Formula::var(t.text, *idx);
      }
      case Tok::LParen: {
        ++pos_;
        Formula f = parse_arrow();
        expect(Tok::RParen, ")");
        return f;
      }
      case Tok::DOpen: {
        ++pos_;
        Formula a = parse_arrow();
        expect(Tok::Comma, ",");
        Formula b = parse_arrow();
        expect(Tok::RParen, ")");
        return Formula::dpar(a, b);
      }
      default:
        fail({"0", "h", "1/2", "1", "identifier", "(", "d(", "!", "N", "T", "F"});
    }
  }

  std::vector<Token> toks_;
  const VarMap& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> identifiers(std::string_view text) {
  std::vector<std::string> names;
  for (const auto& t : lex(text)) {
    if (t.kind != Tok::Ident) continue;
    bool seen = false;
    for (const auto& n : names) seen = seen || n == t.text;
    if (!seen) names.push_back(t.text);
  }
  return names;
}

Formula parse_with(std::string_view text, const VarMap& map) { return Parser(lex(text), map).parse_formula_eof(); }

std::vector<Formula> parse_all(const std::vector<std::string>& texts, VarMap* map_out) {
  std::vector<std::string> names;
  for (const auto& t : texts) {
    for (auto& n : identifiers(t)) {
      bool seen = false;
      for (const auto& m : names) seen = seen || m == n;
      if (!seen) names.push_back(std::move(n));
    }
  }
  const VarMap map = VarMap::from_names(names);
  std::vector<Formula> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_with(t, map));
  if (map_out) *map_out = map;
  return out;
}

Formula parse(std::string_view text) { return parse_all({std::string(text)}).front(); }

}  // namespace rmlogic
