#include "tflm/parser.hpp"

#include <cctype>
#include <set>

#include "tflm/errors.hpp"

namespace tflm {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
  bool is_word;  // identifier or keyword
};

const std::set<std::string> kKeywords = {"if",     "else",  "while",   "for",
                                         "return", "break", "continue"};

// Structural tokens that do not make a line executable on their own. Mirrors
// the gcov convention: brace-only and bare-else lines are not counted.
const std::set<std::string> kNonExecutableTokens = {"{", "}", "else"};

std::vector<Token> lex(const std::string& source) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  std::size_t i = 0;
  const std::size_t n = source.size();
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < n) {
    const char c = source[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < n && source[i + 1] == '/') {
      while (i < n && source[i] != '\n') advance(1);
      continue;
    }
    const int tok_line = line, tok_col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(source[j])) ||
                       source[j] == '_'))
        ++j;
      tokens.push_back({source.substr(i, j - i), tok_line, tok_col, true});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && (std::isdigit(static_cast<unsigned char>(source[j])) ||
                       source[j] == '.'))
        ++j;
      tokens.push_back({source.substr(i, j - i), tok_line, tok_col, false});
      advance(j - i);
      continue;
    }
    // two-char operators first
    if (i + 1 < n) {
      const std::string two = source.substr(i, 2);
      if (two == "==" || two == "!=" || two == "<=" || two == ">=" ||
          two == "&&" || two == "||") {
        tokens.push_back({two, tok_line, tok_col, false});
        advance(2);
        continue;
      }
    }
    const std::string one(1, c);
    if (one.find_first_of("+-*/%<>=!(){};,&|") != std::string::npos) {
      tokens.push_back({one, tok_line, tok_col, false});
      advance(1);
      continue;
    }
    fail(ErrorCode::SyntaxError, "line " + std::to_string(tok_line) + ", col " +
                                     std::to_string(tok_col) +
                                     ": unexpected character '" + one + "'");
  }
  return tokens;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Grammar& grammar)
      : tokens_(std::move(tokens)), grammar_(grammar) {}

  std::vector<AstNode> parse() {
    const int root = open_node();
    const int list = parse_stmt_list();
    close_node(root, "program", "program -> stmt_list", {list});
    if (pos_ < tokens_.size())
      error_here("expected end of input");
    return std::move(nodes_);
  }

 private:
  std::vector<Token> tokens_;
  const Grammar& grammar_;
  std::vector<AstNode> nodes_;
  std::size_t pos_ = 0;

  [[noreturn]] void error_here(const std::string& what) {
    if (pos_ < tokens_.size()) {
      const Token& t = tokens_[pos_];
      fail(ErrorCode::SyntaxError, "line " + std::to_string(t.line) + ", col " +
                                       std::to_string(t.col) + ": " + what +
                                       " (got '" + t.text + "')");
    }
    const int last_line = tokens_.empty() ? 1 : tokens_.back().line;
    fail(ErrorCode::SyntaxError,
         "line " + std::to_string(last_line) + ": " + what +
             " (got end of input)");
  }

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  bool next_is(const std::string& text) const {
    return !at_end() && tokens_[pos_].text == text;
  }
  bool next2_is(const std::string& text) const {
    return pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].text == text;
  }
  bool next_is_ident() const {
    return !at_end() && peek().is_word && !kKeywords.count(peek().text);
  }

  const Token& expect(const std::string& text) {
    if (!next_is(text)) error_here("expected '" + text + "'");
    return tokens_[pos_++];
  }

  const Token& expect_ident() {
    if (!next_is_ident()) error_here("expected identifier");
    return tokens_[pos_++];
  }

  // Pre-order id assignment: reserve the node at entry, fill it at exit.
  int open_node() {
    if (at_end()) error_here("expected statement");
    AstNode node;
    node.node_id = static_cast<int>(nodes_.size());
    node.first_line = peek().line;
    nodes_.push_back(node);
    return node.node_id;
  }

  void close_node(int id, const std::string& symbol, const std::string& rule_id,
                  std::vector<int> children) {
    AstNode& node = nodes_[id];
    node.symbol = symbol;
    node.rule_index = grammar_.rule_index_by_id(rule_id);
    node.children = std::move(children);
    node.last_line = tokens_[pos_ - 1].line;
  }

  bool starts_stmt() const {
    if (at_end()) return false;
    const std::string& t = peek().text;
    return t == "if" || t == "while" || t == "for" || t == "{" ||
           t == "return" || t == "break" || t == "continue" || next_is_ident();
  }

  int parse_stmt_list() {
    const int id = open_node();
    const int first = parse_stmt();
    if (starts_stmt()) {
      const int rest = parse_stmt_list();
      close_node(id, "stmt_list", "stmt_list -> stmt stmt_list", {first, rest});
    } else {
      close_node(id, "stmt_list", "stmt_list -> stmt", {first});
    }
    return id;
  }

  int parse_stmt() {
    const int id = open_node();
    const std::string& t = peek().text;
    if (t == "if") {
      const int child = parse_if();
      const std::string& sym = nodes_[child].symbol;
      close_node(id, "stmt", "stmt -> " + sym, {child});
    } else if (t == "while") {
      close_node(id, "stmt", "stmt -> while_stmt", {parse_while()});
    } else if (t == "for") {
      close_node(id, "stmt", "stmt -> for_stmt", {parse_for()});
    } else if (t == "{") {
      close_node(id, "stmt", "stmt -> block", {parse_block()});
    } else if (t == "return") {
      close_node(id, "stmt", "stmt -> return_stmt", {parse_return()});
    } else if (t == "break") {
      close_node(id, "stmt", "stmt -> break_stmt", {parse_break()});
    } else if (t == "continue") {
      close_node(id, "stmt", "stmt -> continue_stmt", {parse_continue()});
    } else if (next_is_ident()) {
      if (next2_is("=")) {
        close_node(id, "stmt", "stmt -> assign_stmt", {parse_assign()});
      } else if (next2_is("(")) {
        close_node(id, "stmt", "stmt -> call_stmt", {parse_call()});
      } else {
        ++pos_;
        error_here("expected '=' or '(' after identifier");
      }
    } else {
      error_here("expected statement");
    }
    return id;
  }

  // if_stmt and if_else_stmt share a prefix; the symbol is only known once
  // we see whether an 'else' follows the first block.
  int parse_if() {
    const int id = open_node();
    expect("if");
    expect("(");
    const int cond = parse_condition(")");
    expect(")");
    const int then_block = parse_block();
    if (next_is("else")) {
      expect("else");
      const int else_block = parse_block();
      close_node(id, "if_else_stmt",
                 "if_else_stmt -> 'if' '(' condition ')' block 'else' block",
                 {cond, then_block, else_block});
    } else {
      close_node(id, "if_stmt", "if_stmt -> 'if' '(' condition ')' block",
                 {cond, then_block});
    }
    return id;
  }

  int parse_while() {
    const int id = open_node();
    expect("while");
    expect("(");
    const int cond = parse_condition(")");
    expect(")");
    const int body = parse_block();
    close_node(id, "while_stmt", "while_stmt -> 'while' '(' condition ')' block",
               {cond, body});
    return id;
  }

  int parse_for() {
    const int id = open_node();
    expect("for");
    expect("(");
    const int init = parse_assign();
    const int cond = parse_condition(";");
    expect(";");
    expect_ident();
    expect("=");
    parse_expr_run(")", 1);
    expect(")");
    const int body = parse_block();
    close_node(
        id, "for_stmt",
        "for_stmt -> 'for' '(' assign_stmt condition ';' IDENT '=' EXPR ')' block",
        {init, cond, body});
    return id;
  }

  int parse_block() {
    const int id = open_node();
    expect("{");
    if (next_is("}")) {
      expect("}");
      close_node(id, "block", "block -> '{' '}'", {});
    } else {
      const int list = parse_stmt_list();
      expect("}");
      close_node(id, "block", "block -> '{' stmt_list '}'", {list});
    }
    return id;
  }

  int parse_assign() {
    const int id = open_node();
    expect_ident();
    expect("=");
    parse_expr_run(";", 1);
    expect(";");
    close_node(id, "assign_stmt", "assign_stmt -> IDENT '=' EXPR ';'", {});
    return id;
  }

  int parse_return() {
    const int id = open_node();
    expect("return");
    if (next_is(";")) {
      expect(";");
      close_node(id, "return_stmt", "return_stmt -> 'return' ';'", {});
    } else {
      parse_expr_run(";", 1);
      expect(";");
      close_node(id, "return_stmt", "return_stmt -> 'return' EXPR ';'", {});
    }
    return id;
  }

  int parse_break() {
    const int id = open_node();
    expect("break");
    expect(";");
    close_node(id, "break_stmt", "break_stmt -> 'break' ';'", {});
    return id;
  }

  int parse_continue() {
    const int id = open_node();
    expect("continue");
    expect(";");
    close_node(id, "continue_stmt", "continue_stmt -> 'continue' ';'", {});
    return id;
  }

  int parse_call() {
    const int id = open_node();
    expect_ident();
    expect("(");
    parse_expr_run(")", 0);
    expect(")");
    expect(";");
    close_node(id, "call_stmt", "call_stmt -> IDENT '(' EXPR ')' ';'", {});
    return id;
  }

  // A '!' lookahead selects the negation rule, so a plain EXPR condition may
  // not start with '!'. That keeps the grammar unambiguous.
  int parse_condition(const std::string& stop) {
    const int id = open_node();
    if (next_is("!")) {
      expect("!");
      expect("(");
      const int inner = parse_condition(")");
      expect(")");
      close_node(id, "condition", "condition -> '!' '(' condition ')'",
                 {inner});
    } else {
      parse_expr_run(stop, 1);
      close_node(id, "condition", "condition -> EXPR", {});
    }
    return id;
  }

  // EXPR token class: consume a balanced token run until `stop` appears at
  // paren depth 0. The stop token itself is not consumed.
  void parse_expr_run(const std::string& stop, int min_tokens) {
    int depth = 0;
    int consumed = 0;
    while (!at_end()) {
      const std::string& t = peek().text;
      if (depth == 0 && t == stop) break;
      if (t == "{" || t == "}")
        error_here("unexpected '" + t + "' inside expression");
      if (t == ";" && stop != ";")
        error_here("unexpected ';' inside expression");
      if (t == "(") ++depth;
      if (t == ")") {
        if (depth == 0) error_here("unbalanced ')'");
        --depth;
      }
      ++pos_;
      ++consumed;
    }
    if (at_end()) error_here("expected '" + stop + "'");
    if (consumed < min_tokens) error_here("expected expression");
  }
};

}  // namespace

ParsedProgram parse_program(const std::string& source, const Grammar& grammar) {
  std::vector<Token> tokens = lex(source);
  if (tokens.empty()) fail(ErrorCode::EmptyProgram, "no tokens in input");

  // executable-line computation wants per-line token texts before the token
  // vector moves into the parser
  std::map<int, std::vector<std::string>> tokens_by_line;
  for (const Token& t : tokens) tokens_by_line[t.line].push_back(t.text);

  ParsedProgram program;
  program.source = source;
  program.line_count = 1;
  for (char c : source)
    if (c == '\n') ++program.line_count;

  Parser parser(std::move(tokens), grammar);
  program.nodes = parser.parse();

  for (const auto& [line, texts] : tokens_by_line) {
    bool executable = false;
    for (const auto& t : texts)
      if (!kNonExecutableTokens.count(t)) {
        executable = true;
        break;
      }
    if (executable) program.executable_lines.push_back(line);
  }
  return program;
}

std::vector<int> node_depths(const ParsedProgram& program) {
  std::vector<int> depth(program.nodes.size(), 0);
  for (const auto& node : program.nodes)
    for (int child : node.children) depth[child] = depth[node.node_id] + 1;
  return depth;
}

std::map<int, int> finest_enclosing_nodes(const ParsedProgram& program) {
  const std::vector<int> depth = node_depths(program);
  std::map<int, int> finest;
  for (int line : program.executable_lines) {
    int best = -1;
    for (const auto& node : program.nodes) {
      if (node.first_line > line || node.last_line < line) continue;
      if (best < 0 || depth[node.node_id] > depth[best]) best = node.node_id;
    }
    if (best >= 0) finest[line] = best;
  }
  return finest;
}

}  // namespace tflm
