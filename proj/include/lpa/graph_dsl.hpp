#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// Syntax or semantic error in a text input, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

enum class DslToken { identifier, colon, semicolon, comma, arrow, lbrace, rbrace, end };

struct DslLexeme {
  DslToken kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<DslLexeme> lex_graph_dsl(std::string_view text) {
  std::vector<DslLexeme> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({DslToken::identifier, std::string(text.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({DslToken::arrow, "->", line, col});
      advance(2);
    } else {
      DslToken kind;
      switch (c) {
        case ':': kind = DslToken::colon; break;
        case ';': kind = DslToken::semicolon; break;
        case ',': kind = DslToken::comma; break;
        case '{': kind = DslToken::lbrace; break;
        case '}': kind = DslToken::rbrace; break;
        default:
          throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
      out.push_back({kind, std::string(1, c), line, col});
      advance(1);
    }
  }
  out.push_back({DslToken::end, "end of input", line, col});
  return out;
}

class GraphDslParser {
 public:
  explicit GraphDslParser(std::string_view text) : tokens_(lex_graph_dsl(text)) {}

  Graph parse() {
    bool braced = false;
    if (is_word("graph")) {
      next();
      expect(DslToken::identifier, "graph name");
      expect(DslToken::lbrace, "'{'");
      braced = true;
    }
    while (true) {
      const auto& t = peek();
      if (t.kind == DslToken::end) {
        if (braced) fail(t, "'}'");
        break;
      }
      if (t.kind == DslToken::rbrace && braced) {
        next();
        if (peek().kind != DslToken::end) fail(peek(), "end of input");
        break;
      }
      if (is_word("vertices")) {
        next();
        id_list(vertices_, vertex_pos_);
      } else if (is_word("edges")) {
        next();
        edge_section();
      } else if (is_word("infinite")) {
        next();
        id_list(infinite_, infinite_pos_);
      } else if (t.kind == DslToken::semicolon) {
        next();
      } else {
        fail(t, "'vertices', 'edges' or 'infinite'");
      }
    }
    return build();
  }

 private:
  static bool is_keyword(const std::string& s) {
    return s == "graph" || s == "vertices" || s == "edges" || s == "infinite";
  }

  const DslLexeme& peek() const { return tokens_[pos_]; }
  const DslLexeme& next() { return tokens_[pos_++]; }
  bool is_word(const char* w) const {
    return peek().kind == DslToken::identifier && peek().text == w;
  }

  [[noreturn]] static void fail(const DslLexeme& t, const std::string& expected) {
    throw ParseError(t.line, t.column, "expected " + expected + ", found '" + t.text + "'");
  }

  const DslLexeme& expect(DslToken kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), what);
    return next();
  }

  const DslLexeme& expect_id(const std::string& what) {
    if (peek().kind != DslToken::identifier || is_keyword(peek().text)) fail(peek(), what);
    return next();
  }

  void id_list(std::vector<std::string>& out, std::vector<const DslLexeme*>& pos) {
    if (peek().kind == DslToken::colon) next();
    while (peek().kind == DslToken::identifier && !is_keyword(peek().text)) {
      pos.push_back(&peek());
      out.push_back(next().text);
      if (peek().kind == DslToken::comma) next();
    }
    expect(DslToken::semicolon, "identifier or ';'");
  }

  // edges: f1: v2 -> v1; f2: v2 -> v3; ;
  // The section ends at an empty ';', a keyword, '}' or end of input.
  void edge_section() {
    if (peek().kind == DslToken::colon) next();
    while (true) {
      const auto& t = peek();
      if (t.kind == DslToken::semicolon) {
        next();
        return;
      }
      if (t.kind != DslToken::identifier || is_keyword(t.text)) return;
      const auto& id = next();
      expect(DslToken::colon, "':' after edge id");
      const auto& src = expect_id("source vertex");
      expect(DslToken::arrow, "'->'");
      const auto& dst = expect_id("range vertex");
      edges_.emplace_back(id.text, src.text, dst.text);
      edge_pos_.push_back({&id, &src, &dst});
      if (peek().kind == DslToken::comma) {
        next();
        continue;
      }
      if (peek().kind == DslToken::rbrace || peek().kind == DslToken::end) return;
      expect(DslToken::semicolon, "';' after edge declaration");
    }
  }

  Graph build() {
    // Semantic checks here so errors carry the offending token's position.
    std::map<std::string, const DslLexeme*> seen;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!seen.emplace(vertices_[i], vertex_pos_[i]).second)
        throw ParseError(vertex_pos_[i]->line, vertex_pos_[i]->column,
                         "duplicate id '" + vertices_[i] + "'");
    }
    std::map<std::string, std::size_t> out_degree;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& [id, src, dst] = edges_[i];
      const auto& [id_tok, src_tok, dst_tok] = edge_pos_[i];
      if (!seen.emplace(id, id_tok).second)
        throw ParseError(id_tok->line, id_tok->column, "duplicate id '" + id + "'");
      for (const DslLexeme* end : {src_tok, dst_tok}) {
        auto it = seen.find(end->text);
        bool is_vertex = std::find(vertices_.begin(), vertices_.end(), end->text) !=
                         vertices_.end();
        if (it == seen.end() || !is_vertex)
          throw ParseError(end->line, end->column,
                           "edge '" + id + "' uses undeclared vertex '" + end->text + "'");
      }
      ++out_degree[src];
    }
    for (std::size_t i = 0; i < infinite_.size(); ++i) {
      const auto* t = infinite_pos_[i];
      if (std::find(vertices_.begin(), vertices_.end(), infinite_[i]) == vertices_.end())
        throw ParseError(t->line, t->column,
                         "infinite emitter '" + infinite_[i] + "' is not a declared vertex");
      if (out_degree[infinite_[i]] < 2)
        throw ParseError(t->line, t->column,
                         "infinite emitter '" + infinite_[i] +
                             "' needs at least 2 listed sample edges");
    }
    std::sort(infinite_.begin(), infinite_.end());
    infinite_.erase(std::unique(infinite_.begin(), infinite_.end()), infinite_.end());
    return Graph(vertices_, edges_, infinite_);
  }

  std::vector<DslLexeme> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> vertices_;
  std::vector<const DslLexeme*> vertex_pos_;
  std::vector<std::tuple<std::string, std::string, std::string>> edges_;
  std::vector<std::tuple<const DslLexeme*, const DslLexeme*, const DslLexeme*>> edge_pos_;
  std::vector<std::string> infinite_;
  std::vector<const DslLexeme*> infinite_pos_;
};

}  // namespace detail

/// Parses the graph description language:
///
///     graph name {
///       vertices: v1 v2 v3;
///       edges: f1: v2 -> v1; f2: v2 -> v3;
///       infinite: v2;
///     }
///
/// The `graph name { ... }` wrapper and the colons after section keywords
/// are optional, so `vertices v; edges;` is a complete graph. Throws
/// ParseError naming the first offending position.
inline Graph parse_graph(std::string_view text) {
  return detail::GraphDslParser(text).parse();
}

/// Renders g back into the description language.
inline std::string render_graph(const Graph& g, std::string_view name = "g") {
  std::string out = "graph " + std::string(name) + " {\n  vertices:";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out += " " + g.vertex_id(v);
  out += ";\n  edges:";
  for (const auto& e : g.edges())
    out += " " + e.id + ": " + g.vertex_id(e.source) + " -> " + g.vertex_id(e.range) + ";";
  out += " ;\n";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.is_infinite_emitter(v)) out += "  infinite: " + g.vertex_id(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace lpa
