#include "lpakk/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "lpakk/error.hpp"

namespace lpakk {

using nlohmann::json;

Graph graph_from_json(const json& j) {
  try {
    if (!j.is_object()) throw DomainError("invalid_graph", "graph JSON must be an object");
    std::vector<VertexId> vertices = j.at("vertices").get<std::vector<VertexId>>();
    std::vector<EdgeRecord> edges;
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        EdgeRecord rec;
        rec.src = e.at("src").get<std::string>();
        rec.dst = e.at("dst").get<std::string>();
        if (e.contains("mult")) {
          const auto m = e.at("mult").get<long long>();
          if (m < 1) throw DomainError("invalid_graph", "edge multiplicity must be >= 1");
          rec.mult = static_cast<std::uint64_t>(m);
        }
        if (e.contains("names")) rec.names = e.at("names").get<std::vector<std::string>>();
        edges.push_back(std::move(rec));
      }
    }
    std::vector<VertexId> infinite;
    if (j.contains("infinite_emitters"))
      infinite = j.at("infinite_emitters").get<std::vector<VertexId>>();
    return Graph(std::move(vertices), std::move(edges), std::move(infinite));
  } catch (const json::exception& e) {
    throw DomainError("invalid_graph", std::string("malformed graph JSON: ") + e.what());
  }
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& rec : g.edge_records())
    edges.push_back({{"src", rec.src}, {"dst", rec.dst}, {"mult", rec.mult}, {"names", rec.names}});
  return {{"vertices", g.vertices()}, {"edges", edges}, {"infinite_emitters", g.infinite_emitters()}};
}

namespace {

// Minimal DOT tokenizer: identifiers, quoted strings, and punctuation.
class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  struct Token {
    enum Kind { ident, punct, end } kind;
    std::string text;
    std::size_t pos;
  };

  Token next() {
    skip_space();
    if (pos_ >= text_.size()) return {Token::end, "", pos_};
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '"') {
      std::string out;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        out += text_[pos_++];
      }
      if (pos_ >= text_.size()) fail("unterminated string", start);
      ++pos_;
      return {Token::ident, out, start};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '.'))
        ++pos_;
      return {Token::ident, std::string(text_.substr(start, pos_ - start)), start};
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return {Token::punct, "->", start};
    }
    if (std::string_view("{}[];,=").find(c) != std::string_view::npos) {
      ++pos_;
      return {Token::punct, std::string(1, c), start};
    }
    fail(std::string("unexpected character '") + c + "'", start);
  }

  [[noreturn]] static void fail(const std::string& what, std::size_t pos) {
    throw DomainError("syntax_error", "DOT: " + what + " at offset " + std::to_string(pos));
  }

 private:
  void skip_space() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (text_.substr(pos_, 2) == "//" || (pos_ < text_.size() && text_[pos_] == '#')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.substr(pos_, 2) == "/*") {
        const auto close = text_.find("*/", pos_ + 2);
        pos_ = close == std::string_view::npos ? text_.size() : close + 2;
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph graph_from_dot(std::string_view text) {
  using Token = DotLexer::Token;
  DotLexer lex(text);
  Token tok = lex.next();
  auto expect_punct = [&](const char* p) {
    if (tok.kind != Token::punct || tok.text != p)
      DotLexer::fail(std::string("expected '") + p + "'", tok.pos);
    tok = lex.next();
  };

  if (tok.kind == Token::ident && tok.text == "strict") tok = lex.next();
  if (tok.kind != Token::ident || tok.text != "digraph") DotLexer::fail("expected 'digraph'", tok.pos);
  tok = lex.next();
  if (tok.kind == Token::ident) tok = lex.next();
  expect_punct("{");

  std::vector<VertexId> vertices;
  std::map<std::string, bool> seen;
  std::vector<VertexId> infinite;
  std::vector<EdgeRecord> edges;
  auto mention = [&](const std::string& v) {
    if (seen.emplace(v, true).second) vertices.push_back(v);
  };
  auto read_attrs = [&]() {
    std::map<std::string, std::string> attrs;
    if (tok.kind != Token::punct || tok.text != "[") return attrs;
    tok = lex.next();
    while (!(tok.kind == Token::punct && tok.text == "]")) {
      if (tok.kind != Token::ident) DotLexer::fail("expected attribute name", tok.pos);
      std::string key = tok.text;
      tok = lex.next();
      expect_punct("=");
      if (tok.kind != Token::ident) DotLexer::fail("expected attribute value", tok.pos);
      attrs[key] = tok.text;
      tok = lex.next();
      if (tok.kind == Token::punct && (tok.text == "," || tok.text == ";")) tok = lex.next();
    }
    tok = lex.next();
    return attrs;
  };

  while (!(tok.kind == Token::punct && tok.text == "}")) {
    if (tok.kind == Token::end) DotLexer::fail("unexpected end of input", tok.pos);
    if (tok.kind != Token::ident) DotLexer::fail("expected statement", tok.pos);
    if (tok.text == "graph" || tok.text == "node" || tok.text == "edge") {
      tok = lex.next();
      read_attrs();
    } else {
      std::vector<std::string> chain{tok.text};
      tok = lex.next();
      if (tok.kind == Token::punct && tok.text == "=") {  // graph attribute a = b
        tok = lex.next();
        tok = lex.next();
      } else {
        while (tok.kind == Token::punct && tok.text == "->") {
          tok = lex.next();
          if (tok.kind != Token::ident) DotLexer::fail("expected vertex after '->'", tok.pos);
          chain.push_back(tok.text);
          tok = lex.next();
        }
        auto attrs = read_attrs();
        for (const auto& v : chain) mention(v);
        if (chain.size() == 1) {
          auto it = attrs.find("infinite");
          if (it != attrs.end() && (it->second == "true" || it->second == "1"))
            infinite.push_back(chain.front());
        } else {
          auto label = attrs.find("label");
          if (label != attrs.end() && chain.size() != 2)
            DotLexer::fail("edge label on an edge chain", tok.pos);
          for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            EdgeRecord rec{chain[k], chain[k + 1], 1, {}};
            if (label != attrs.end()) rec.names.push_back(label->second);
            edges.push_back(std::move(rec));
          }
        }
      }
    }
    if (tok.kind == Token::punct && (tok.text == ";" || tok.text == ",")) tok = lex.next();
  }
  return Graph(std::move(vertices), std::move(edges), std::move(infinite));
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("io_error", "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".dot" || ext == ".gv") return graph_from_dot(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError("invalid_json", "'" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

}  // namespace lpakk
