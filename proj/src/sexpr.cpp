#include "stlc/sexpr.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace stlc {

std::string print(const Type& type) {
  switch (type.kind()) {
    case TypeKind::Base: return "(b " + type.name() + ")";
    case TypeKind::Unit: return "unit";
    case TypeKind::Empty: return "empty";
    case TypeKind::Prod: return "(prod " + print(type.left()) + " " + print(type.right()) + ")";
    case TypeKind::Sum: return "(sum " + print(type.left()) + " " + print(type.right()) + ")";
    case TypeKind::Arrow: return "(arr " + print(type.left()) + " " + print(type.right()) + ")";
  }
  return "?";
}

namespace {

void print_into(std::string& out, const Term& t) {
  auto kids = [&](std::size_t from) {
    for (std::size_t i = from; i < t.arity(); ++i) {
      out += ' ';
      print_into(out, t.child(i));
    }
    out += ')';
  };
  switch (t.kind()) {
    case TermKind::Var: out += "(var " + std::to_string(t.index()) + ")"; return;
    case TermKind::Cst: out += "(cst " + t.name() + ")"; return;
    case TermKind::Star: out += "star"; return;
    case TermKind::Pair: out += "(pair"; break;
    case TermKind::Proj: out += t.component() == 1 ? "(proj1" : "(proj2"; break;
    case TermKind::App: out += "(app"; break;
    case TermKind::Lam: out += "(lam " + print(t.annotation()); break;
    case TermKind::Raise: out += "(raise " + print(t.annotation()); break;
    case TermKind::Inl: out += "(inl " + print(t.annotation()); break;
    case TermKind::Inr: out += "(inr " + print(t.annotation()); break;
    case TermKind::Case: out += "(case " + print(t.annotation()); break;
  }
  kids(0);
}

struct Token {
  enum Kind { Open, Close, Atom, End } kind;
  std::string text;
  std::size_t line, column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip();
    Token tok{Token::End, "", line_, column_};
    if (pos_ >= text_.size()) return tok;
    char c = text_[pos_];
    if (c == '(' || c == ')') {
      tok.kind = c == '(' ? Token::Open : Token::Close;
      tok.text = std::string(1, c);
      advance();
      return tok;
    }
    tok.kind = Token::Atom;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')' && text_[pos_] != '#') {
      tok.text += text_[pos_];
      advance();
    }
    return tok;
  }

  Token peek() {
    Lexer copy = *this;
    return copy.next();
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Type type() {
    Token tok = lex_.next();
    if (tok.kind == Token::Atom) {
      if (tok.text == "unit") return Type::unit();
      if (tok.text == "empty") return Type::empty();
      fail(tok, "expected a type, found '" + tok.text + "'");
    }
    if (tok.kind != Token::Open) fail(tok, "expected a type");
    Token head = expect_atom("type constructor");
    Type out = Type::unit();
    if (head.text == "b") {
      out = Type::base(name());
    } else if (head.text == "prod" || head.text == "sum" || head.text == "arr") {
      Type a = type();
      Type b = type();
      out = head.text == "prod" ? Type::prod(a, b) : head.text == "sum" ? Type::sum(a, b) : Type::arrow(a, b);
    } else {
      fail(head, "unknown type constructor '" + head.text + "'");
    }
    close();
    return out;
  }

  Term term() {
    Token tok = lex_.next();
    if (tok.kind == Token::Atom) {
      if (tok.text == "star") return Term::star();
      fail(tok, "expected a term, found '" + tok.text + "'");
    }
    if (tok.kind != Token::Open) fail(tok, "expected a term");
    Token head = expect_atom("term constructor");
    const std::string& h = head.text;
    std::optional<Term> out;
    if (h == "var") {
      Token n = expect_atom("variable index");
      std::size_t index = 0;
      auto [ptr, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), index);
      if (ec != std::errc() || ptr != n.text.data() + n.text.size()) fail(n, "bad variable index '" + n.text + "'");
      out = Term::var(index);
    } else if (h == "cst") {
      out = Term::cst(name());
    } else if (h == "pair" || h == "app") {
      Term a = term();
      Term b = term();
      out = h == "pair" ? Term::pair(a, b) : Term::app(a, b);
    } else if (h == "proj1" || h == "proj2") {
      out = Term::proj(h == "proj1" ? 1 : 2, term());
    } else if (h == "lam" || h == "raise") {
      Type a = type();
      Term b = term();
      out = h == "lam" ? Term::lam(a, b) : Term::raise(a, b);
    } else if (h == "inl" || h == "inr") {
      Token at = lex_.peek();
      Type s = type();
      if (!s.is(TypeKind::Sum)) fail(at, h + " annotation must be a sum type");
      Term b = term();
      out = h == "inl" ? Term::inl(s, b) : Term::inr(s, b);
    } else if (h == "case") {
      Type m = type();
      Term s = term();
      Term l = term();
      Term r = term();
      out = Term::case_of(m, s, l, r);
    } else {
      fail(head, "unknown term constructor '" + h + "'");
    }
    close();
    return *out;
  }

  bool at_end() { return lex_.peek().kind == Token::End; }

  void end() {
    Token tok = lex_.next();
    if (tok.kind != Token::End) fail(tok, "unexpected trailing input '" + tok.text + "'");
  }

 private:
  std::string name() { return expect_atom("name").text; }

  Token expect_atom(const std::string& what) {
    Token tok = lex_.next();
    if (tok.kind != Token::Atom) fail(tok, "expected " + what);
    return tok;
  }

  void close() {
    Token tok = lex_.next();
    if (tok.kind != Token::Close) fail(tok, "expected ')'");
  }

  [[noreturn]] static void fail(const Token& tok, const std::string& msg) {
    throw ParseError(tok.line, tok.column, msg);
  }

  Lexer lex_;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::string print(const Term& term) {
  std::string out;
  print_into(out, term);
  return out;
}

std::string print(const Context& gamma) {
  std::string out;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i) out += ' ';
    out += print(gamma[i]);
  }
  return out;
}

std::string print(const Language& lang) {
  std::string out;
  for (const auto& b : lang.base_types()) out += "base " + b + "\n";
  for (const auto& [c, ty] : lang.constants()) out += "const " + c + " : " + print(ty) + "\n";
  return out;
}

Type parse_type(std::string_view text) {
  Parser p(text);
  Type t = p.type();
  p.end();
  return t;
}

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.end();
  return t;
}

Context parse_context(std::string_view text) {
  Parser p(text);
  std::vector<Type> entries;
  while (!p.at_end()) entries.push_back(p.type());
  return Context(std::move(entries));
}

Language parse_language(std::string_view text) {
  Language lang;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    ++line_no;
    std::string_view raw = text.substr(start, stop - start);
    start = stop + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto space = line.find_first_of(" \t");
    std::string keyword = line.substr(0, space);
    std::string rest = space == std::string::npos ? "" : trim(std::string_view(line).substr(space));
    if (keyword == "base") {
      if (rest.empty() || rest.find_first_of(" \t():#") != std::string::npos)
        throw ParseError(line_no, 1, "expected 'base NAME'");
      lang.add_base(rest);
    } else if (keyword == "const") {
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw ParseError(line_no, 1, "expected 'const NAME : TYPE'");
      std::string name = trim(std::string_view(rest).substr(0, colon));
      if (name.empty() || name.find_first_of(" \t()") != std::string::npos)
        throw ParseError(line_no, 1, "bad constant name '" + name + "'");
      Type ty = Type::unit();
      try {
        ty = parse_type(std::string_view(rest).substr(colon + 1));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.column(), e.what());
      }
      try {
        lang.add_constant(name, ty);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, 1, e.what());
      }
    } else {
      throw ParseError(line_no, 1, "unknown declaration '" + keyword + "'");
    }
    if (stop == text.size()) break;
  }
  return lang;
}

}  // namespace stlc
