#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vk {

// Boolean expression tree. Variables are named; `Const` carries `value`.
struct BoolExpr {
  enum class Op { Var, Const, Not, And, Or, Xor };

  Op op = Op::Const;
  std::string name;
  bool value = false;
  std::vector<BoolExpr> args;

  static BoolExpr var(std::string n);
  static BoolExpr constant(bool v);
  static BoolExpr lnot(BoolExpr e);
  static BoolExpr land(std::vector<BoolExpr> es);
  static BoolExpr lor(std::vector<BoolExpr> es);
  static BoolExpr lxor(std::vector<BoolExpr> es);
};

// Grammar: '+' or '|' is OR, '^' is XOR, '*', '&', '.' or juxtaposition is AND,
// prefix '!'/'~' and postfix '\'' negate. Identifiers are [A-Za-z_][A-Za-z0-9_]*,
// so "AB" is one variable; write "A B" or "A*B" for a product.
BoolExpr parse_expr(std::string_view text);

std::string to_string(const BoolExpr& e);

// Variables in order of first appearance.
std::vector<std::string> variables(const BoolExpr& e);

bool evaluate(const BoolExpr& e, const std::map<std::string, bool>& assignment);

// Expression compiled against a fixed variable order; bit i of `bits` is variable i.
class CompiledExpr {
 public:
  CompiledExpr(const BoolExpr& e, const std::vector<std::string>& order);
  bool operator()(std::uint64_t bits) const;
  std::size_t arity() const { return arity_; }

 private:
  struct Node {
    BoolExpr::Op op;
    int var = -1;
    bool value = false;
    std::vector<int> kids;
  };
  int build(const BoolExpr& e, const std::vector<std::string>& order);
  bool eval(int n, std::uint64_t bits) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  std::size_t arity_ = 0;
};

}  // namespace vk
