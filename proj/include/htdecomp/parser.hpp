#ifndef HTDECOMP_PARSER_HPP
#define HTDECOMP_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <htdecomp/hypergraph.hpp>

namespace htdecomp {

class ParseError : public HypergraphError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : HypergraphError(message + " at line " + std::to_string(line) + ", column " +
                        std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class MissingTerminatorError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Parses the edge-term hypergraph format:
//
//   % comment
//   e1(a,b), e2(b,c),
//   e3(c,a).
//
// Edge terms `name(v1,...,vn)` are separated by commas and the list ends with
// a period. Names match [A-Za-z0-9_:]+; whitespace and newlines carry no
// meaning; `%` starts a line comment.
inline Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t pos = 0, line = 1, column = 1;

  auto at_end = [&] { return pos >= text.size(); };
  auto peek = [&] { return text[pos]; };
  auto advance = [&] {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  };
  auto skip = [&] {
    while (!at_end()) {
      char c = peek();
      if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  };
  auto is_name_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':';
  };
  auto read_name = [&] {
    if (at_end() || !is_name_char(peek()))
      throw ParseError("expected a name", line, column);
    std::string name;
    while (!at_end() && is_name_char(peek())) {
      name += peek();
      advance();
    }
    return name;
  };
  auto expect = [&](char c, const char* what) {
    if (at_end() || peek() != c)
      throw ParseError(std::string("expected ") + what, line, column);
    advance();
  };

  std::vector<NamedEdge> edges;
  skip();
  if (at_end()) throw MissingTerminatorError("missing terminating '.'", line, column);
  if (peek() != '.') {
    while (true) {
      std::string name = read_name();
      skip();
      expect('(', "'('");
      skip();
      std::vector<std::string> vertices;
      if (!at_end() && peek() == ')') {
        advance();
      } else {
        while (true) {
          vertices.push_back(read_name());
          skip();
          if (!at_end() && peek() == ',') {
            advance();
            skip();
            continue;
          }
          expect(')', "',' or ')'");
          break;
        }
      }
      edges.emplace_back(std::move(name), std::move(vertices));
      skip();
      if (at_end())
        throw MissingTerminatorError("missing terminating '.'", line, column);
      if (peek() == ',') {
        advance();
        skip();
        continue;
      }
      if (peek() == '.') break;
      throw ParseError("expected ',' or '.'", line, column);
    }
  }
  advance();  // consume '.'
  skip();
  if (!at_end()) throw ParseError("unexpected content after '.'", line, column);
  return build_hypergraph(edges);
}

}  // namespace htdecomp

#endif  // HTDECOMP_PARSER_HPP
