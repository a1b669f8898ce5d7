#include "quiverlab/dsl.hpp"

#include <cctype>
#include <set>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](char ch) {
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') advance(text[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(ch);
      ++i;
      continue;
    }
    if (ch == '{' || ch == '}' || ch == '=') {
      tokens.push_back({std::string(1, ch), line, col});
      advance(ch);
      ++i;
      continue;
    }
    int start_col = col;
    std::string word;
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' || c == '=' ||
          c == '#')
        break;
      word.push_back(c);
      advance(c);
      ++i;
    }
    tokens.push_back({std::move(word), line, start_col});
  }
  return tokens;
}

class Parser {
public:
  explicit Parser(std::string_view text) : m_tokens(tokenize(text)) {}

  QuiverFile parse() {
    expect_keyword("quiver");
    expect_symbol("{");
    expect_keyword("vertices");

    std::set<std::string> vertex_ids, arrow_ids;
    std::vector<std::string> vertices;
    while (!at_end() && peek() != "{" && peek() != "}" && peek() != "arrow") {
      const Token& t = take("vertex identifier");
      if (!valid_identifier(t.text))
        throw ParseError(ParseError::Kind::InvalidId,
                         "invalid vertex identifier '" + t.text + "'", t.line, t.column);
      if (!vertex_ids.insert(t.text).second)
        throw ParseError(ParseError::Kind::DuplicateId,
                         "duplicate vertex identifier '" + t.text + "'", t.line, t.column);
      vertices.push_back(t.text);
    }
    if (vertices.empty()) fail("expected at least one vertex identifier");

    std::vector<std::array<std::string, 3>> arrows;
    while (!at_end() && peek() == "arrow") {
      next();
      const Token& id = take("arrow identifier");
      if (!valid_identifier(id.text))
        throw ParseError(ParseError::Kind::InvalidId,
                         "invalid arrow identifier '" + id.text + "'", id.line, id.column);
      if (vertex_ids.count(id.text) || !arrow_ids.insert(id.text).second)
        throw ParseError(ParseError::Kind::DuplicateId,
                         "duplicate identifier '" + id.text + "'", id.line, id.column);
      const Token& tail = take("tail vertex");
      if (!vertex_ids.count(tail.text))
        throw ParseError(ParseError::Kind::UnknownVertex,
                         "unknown vertex '" + tail.text + "'", tail.line, tail.column);
      const Token& head = take("head vertex");
      if (!vertex_ids.count(head.text))
        throw ParseError(ParseError::Kind::UnknownVertex,
                         "unknown vertex '" + head.text + "'", head.line, head.column);
      arrows.push_back({id.text, tail.text, head.text});
    }
    expect_symbol("}");

    QuiverFile file;
    file.quiver = Quiver::make(std::move(vertices), arrows);

    while (!at_end()) {
      const Token& kw = take("'alpha' or 'lambda' block");
      if (kw.text == "alpha") {
        parse_block(kw, file.quiver, /*rational=*/false, file.alpha, file.lambda);
      } else if (kw.text == "lambda") {
        parse_block(kw, file.quiver, /*rational=*/true, file.alpha, file.lambda);
      } else {
        fail_at(kw, "expected 'alpha' or 'lambda', got '" + kw.text + "'");
      }
    }
    return file;
  }

private:
  void parse_block(const Token& kw, const Quiver& q, bool rational,
                   std::optional<IntVec>& alpha, std::optional<RatVec>& lambda) {
    if (rational) {
      if (lambda) fail_at(kw, "duplicate lambda block");
      lambda = RatVec(q.vertex_count(), Rat(0));
    } else {
      if (alpha) fail_at(kw, "duplicate alpha block");
      alpha = IntVec(q.vertex_count(), Int(0));
    }
    std::vector<bool> seen(q.vertex_count(), false);
    bool any = false;
    while (!at_end() && peek() != "alpha" && peek() != "lambda") {
      const Token& vid = take("vertex identifier");
      int v = q.vertex_index(vid.text);
      if (v < 0)
        throw ParseError(ParseError::Kind::UnknownVertex, "unknown vertex '" + vid.text + "'",
                         vid.line, vid.column);
      if (seen[v])
        throw ParseError(ParseError::Kind::DuplicateId,
                         "vertex '" + vid.text + "' assigned twice", vid.line, vid.column);
      seen[v] = true;
      expect_symbol("=");
      const Token& val = take("value");
      try {
        if (rational)
          (*lambda)[v] = parse_rational(val.text);
        else {
          Int n = parse_int(val.text);
          if (n < 0) fail_at(val, "alpha entries must be nonnegative");
          (*alpha)[v] = n;
        }
      } catch (const ParseError& e) {
        throw ParseError(e.kind(), e.what(), val.line, val.column);
      }
      any = true;
    }
    if (!any) fail_at(kw, "empty assignment block");
  }

  bool at_end() const { return m_pos >= m_tokens.size(); }
  const std::string& peek() const { return m_tokens[m_pos].text; }
  void next() { ++m_pos; }

  const Token& take(const std::string& what) {
    if (at_end()) fail("unexpected end of input, expected " + what);
    return m_tokens[m_pos++];
  }

  void expect_keyword(const std::string& kw) {
    const Token& t = take("'" + kw + "'");
    if (t.text != kw) fail_at(t, "expected '" + kw + "', got '" + t.text + "'");
  }

  void expect_symbol(const std::string& sym) { expect_keyword(sym); }

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 0, col = 0;
    if (!m_tokens.empty()) {
      const Token& t = m_tokens[std::min(m_pos, m_tokens.size() - 1)];
      line = t.line;
      col = t.column;
    }
    throw ParseError(ParseError::Kind::Syntax, msg, line, col);
  }

  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
    throw ParseError(ParseError::Kind::Syntax, msg, t.line, t.column);
  }

  std::vector<Token> m_tokens;
  std::size_t m_pos = 0;
};

}  // namespace

QuiverFile parse_quiver_file(std::string_view text) { return Parser(text).parse(); }

Quiver parse_quiver(std::string_view text) { return parse_quiver_file(text).quiver; }

}  // namespace quiverlab
