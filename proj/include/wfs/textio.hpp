#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wfs/core.hpp"

namespace wfs::textio {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_no(line),
        column(column),
        message(message) {}

  std::size_t line_no;
  std::size_t column;
  std::string message;
};

namespace detail {

// rule := atom (":-" body)? "." ; body := lit ("," lit)* ;
// lit := atom | "not" WS+ atom ; atom := [A-Za-z_][A-Za-z0-9_]* ;
// "%" comments to end of line; "not" is reserved.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  enum class Tok { Atom, Implies, Comma, Dot, End };

  Tok next() {
    skip_ws();
    tok_line_ = line_;
    tok_col_ = col_;
    if (pos_ >= text_.size()) return Tok::End;
    char c = text_[pos_];
    if (c == '.') {
      advance();
      return Tok::Dot;
    }
    if (c == ',') {
      advance();
      return Tok::Comma;
    }
    if (c == ':') {
      advance();
      if (pos_ >= text_.size() || text_[pos_] != '-')
        fail("expected '-' after ':'");
      advance();
      return Tok::Implies;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        advance();
      atom_text_ = text_.substr(start, pos_ - start);
      return Tok::Atom;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view atom_text() const { return atom_text_; }
  std::size_t line() const { return tok_line_; }
  std::size_t col() const { return tok_col_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_line_, tok_col_, msg);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
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
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
  std::size_t tok_line_ = 1, tok_col_ = 1;
  std::string_view atom_text_;
};

}  // namespace detail

inline Program parse(std::string_view text) {
  detail::Lexer lex(text);
  ProgramBuilder b;
  for (;;) {
    auto t = lex.next();
    if (t == detail::Lexer::Tok::End) break;
    if (t != detail::Lexer::Tok::Atom) lex.fail("expected atom at rule start");
    if (lex.atom_text() == "not") lex.fail("'not' is reserved");
    Rule r;
    r.head = b.intern(lex.atom_text());
    t = lex.next();
    if (t == detail::Lexer::Tok::Implies) {
      for (;;) {
        t = lex.next();
        if (t != detail::Lexer::Tok::Atom) lex.fail("expected body literal");
        if (lex.atom_text() == "not") {
          t = lex.next();
          if (t != detail::Lexer::Tok::Atom || lex.atom_text() == "not")
            lex.fail("expected atom after 'not'");
          r.neg_body.push_back(b.intern(lex.atom_text()));
        } else {
          r.pos_body.push_back(b.intern(lex.atom_text()));
        }
        t = lex.next();
        if (t == detail::Lexer::Tok::Dot) break;
        if (t != detail::Lexer::Tok::Comma)
          lex.fail("expected ',' or '.' after literal");
      }
    } else if (t != detail::Lexer::Tok::Dot) {
      lex.fail("expected ':-' or '.' after rule head");
    }
    b.add_rule(std::move(r));
  }
  return b.finish();
}

inline std::string serialize_program(const Program& p) {
  std::ostringstream out;
  for (const Rule& r : p.rules()) {
    out << p.atom_name(r.head);
    if (!r.pos_body.empty() || !r.neg_body.empty()) {
      out << " :- ";
      bool first = true;
      for (AtomId a : r.pos_body) {
        if (!first) out << ", ";
        out << p.atom_name(a);
        first = false;
      }
      for (AtomId a : r.neg_body) {
        if (!first) out << ", ";
        out << "not " << p.atom_name(a);
        first = false;
      }
    }
    out << ".\n";
  }
  return out.str();
}

inline std::vector<std::string> sorted_names(const Program& p,
                                             const std::vector<AtomId>& atoms) {
  std::vector<std::string> names;
  names.reserve(atoms.size());
  for (AtomId a : atoms) names.push_back(p.atom_name(a));
  std::sort(names.begin(), names.end());
  return names;
}

enum class ResultFormat { Text, Json };

inline std::string serialize_result(const Program& p, const WfsResult& r,
                                    ResultFormat format) {
  auto t = sorted_names(p, r.true_set.to_vector());
  auto f = sorted_names(p, r.false_set.to_vector());
  auto u = sorted_names(p, r.unknown_atoms());
  std::ostringstream out;
  if (format == ResultFormat::Text) {
    auto line = [&](const char* label, const std::vector<std::string>& xs) {
      out << label << ':';
      for (const auto& x : xs) out << ' ' << x;
      out << '\n';
    };
    line("true", t);
    line("false", f);
    line("unknown", u);
  } else {
    auto arr = [&](const std::vector<std::string>& xs) {
      out << '[';
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << '"' << xs[i] << '"';
      }
      out << ']';
    };
    out << "{\"true\":";
    arr(t);
    out << ",\"false\":";
    arr(f);
    out << ",\"unknown\":";
    arr(u);
    out << '}';
  }
  return out.str();
}

}  // namespace wfs::textio
