#include "vlsikit/logic.hpp"

#include <algorithm>
#include <cctype>

#include "vlsikit/error.hpp"

namespace vk {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input: return "input";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::Solver: return "solver";
    case ErrorKind::Size: return "size";
  }
  return "unknown";
}

BoolExpr BoolExpr::var(std::string n) {
  BoolExpr e;
  e.op = Op::Var;
  e.name = std::move(n);
  return e;
}

BoolExpr BoolExpr::constant(bool v) {
  BoolExpr e;
  e.op = Op::Const;
  e.value = v;
  return e;
}

BoolExpr BoolExpr::lnot(BoolExpr a) {
  BoolExpr e;
  e.op = Op::Not;
  e.args.push_back(std::move(a));
  return e;
}

namespace {

BoolExpr nary(BoolExpr::Op op, std::vector<BoolExpr> es) {
  require(!es.empty(), "empty operand list");
  if (es.size() == 1) return std::move(es.front());
  BoolExpr e;
  e.op = op;
  for (auto& a : es) {
    // flatten nested nodes of the same associative operator
    if (a.op == op) {
      for (auto& k : a.args) e.args.push_back(std::move(k));
    } else {
      e.args.push_back(std::move(a));
    }
  }
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BoolExpr parse() {
    auto e = parse_or();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  [[noreturn]] void error(const std::string& m) {
    fail(ErrorKind::Input, "expression '" + std::string(s_) + "': " + m + " at " + std::to_string(pos_));
  }
  bool starts_operand() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == '!' ||
           c == '~' || c == '0' || c == '1';
  }

  BoolExpr parse_or() {
    std::vector<BoolExpr> terms{parse_xor()};
    while (peek('+') || peek('|')) {
      ++pos_;
      terms.push_back(parse_xor());
    }
    return nary(BoolExpr::Op::Or, std::move(terms));
  }
  BoolExpr parse_xor() {
    std::vector<BoolExpr> terms{parse_and()};
    while (peek('^')) {
      ++pos_;
      terms.push_back(parse_and());
    }
    return nary(BoolExpr::Op::Xor, std::move(terms));
  }
  BoolExpr parse_and() {
    std::vector<BoolExpr> terms{parse_unary()};
    for (;;) {
      if (peek('*') || peek('&') || peek('.')) {
        ++pos_;
        terms.push_back(parse_unary());
      } else if (starts_operand()) {
        terms.push_back(parse_unary());
      } else {
        break;
      }
    }
    return nary(BoolExpr::Op::And, std::move(terms));
  }
  BoolExpr parse_unary() {
    if (peek('!') || peek('~')) {
      ++pos_;
      return BoolExpr::lnot(parse_unary());
    }
    auto e = parse_primary();
    while (peek('\'')) {
      ++pos_;
      e = BoolExpr::lnot(std::move(e));
    }
    return e;
  }
  BoolExpr parse_primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = parse_or();
      if (!peek(')')) error("missing ')'");
      ++pos_;
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return BoolExpr::constant(c == '1');
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return BoolExpr::var(std::string(s_.substr(start, pos_ - start)));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void collect(const BoolExpr& e, std::vector<std::string>& out) {
  if (e.op == BoolExpr::Op::Var) {
    if (std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
    return;
  }
  for (const auto& a : e.args) collect(a, out);
}

}  // namespace

BoolExpr BoolExpr::land(std::vector<BoolExpr> es) { return nary(Op::And, std::move(es)); }
BoolExpr BoolExpr::lor(std::vector<BoolExpr> es) { return nary(Op::Or, std::move(es)); }
BoolExpr BoolExpr::lxor(std::vector<BoolExpr> es) { return nary(Op::Xor, std::move(es)); }

BoolExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const BoolExpr& e) {
  using Op = BoolExpr::Op;
  switch (e.op) {
    case Op::Var: return e.name;
    case Op::Const: return e.value ? "1" : "0";
    case Op::Not: {
      const auto& a = e.args.front();
      if (a.op == Op::Var || a.op == Op::Const) return to_string(a) + "'";
      return "(" + to_string(a) + ")'";
    }
    default: break;
  }
  const char* sep = e.op == Op::And ? "*" : e.op == Op::Or ? " + " : " ^ ";
  std::string out;
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    const auto& a = e.args[i];
    bool wrap = a.args.size() > 1;
    if (i) out += sep;
    out += wrap ? "(" + to_string(a) + ")" : to_string(a);
  }
  return out;
}

std::vector<std::string> variables(const BoolExpr& e) {
  std::vector<std::string> out;
  collect(e, out);
  return out;
}

bool evaluate(const BoolExpr& e, const std::map<std::string, bool>& assignment) {
  using Op = BoolExpr::Op;
  switch (e.op) {
    case Op::Var: {
      auto it = assignment.find(e.name);
      require(it != assignment.end(), "no value for variable '" + e.name + "'");
      return it->second;
    }
    case Op::Const: return e.value;
    case Op::Not: return !evaluate(e.args.front(), assignment);
    case Op::And:
      return std::all_of(e.args.begin(), e.args.end(),
                         [&](const BoolExpr& a) { return evaluate(a, assignment); });
    case Op::Or:
      return std::any_of(e.args.begin(), e.args.end(),
                         [&](const BoolExpr& a) { return evaluate(a, assignment); });
    case Op::Xor: {
      bool v = false;
      for (const auto& a : e.args) v ^= evaluate(a, assignment);
      return v;
    }
  }
  return false;
}

CompiledExpr::CompiledExpr(const BoolExpr& e, const std::vector<std::string>& order)
    : arity_(order.size()) {
  root_ = build(e, order);
}

int CompiledExpr::build(const BoolExpr& e, const std::vector<std::string>& order) {
  Node n;
  n.op = e.op;
  if (e.op == BoolExpr::Op::Var) {
    auto it = std::find(order.begin(), order.end(), e.name);
    require(it != order.end(), "no value for variable '" + e.name + "'");
    n.var = static_cast<int>(it - order.begin());
  }
  n.value = e.value;
  for (const auto& a : e.args) n.kids.push_back(build(a, order));
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

bool CompiledExpr::eval(int i, std::uint64_t bits) const {
  const Node& n = nodes_[i];
  switch (n.op) {
    case BoolExpr::Op::Var: return (bits >> n.var) & 1u;
    case BoolExpr::Op::Const: return n.value;
    case BoolExpr::Op::Not: return !eval(n.kids.front(), bits);
    case BoolExpr::Op::And:
      for (int k : n.kids)
        if (!eval(k, bits)) return false;
      return true;
    case BoolExpr::Op::Or:
      for (int k : n.kids)
        if (eval(k, bits)) return true;
      return false;
    case BoolExpr::Op::Xor: {
      bool v = false;
      for (int k : n.kids) v ^= eval(k, bits);
      return v;
    }
  }
  return false;
}

bool CompiledExpr::operator()(std::uint64_t bits) const { return eval(root_, bits); }

}  // namespace vk
