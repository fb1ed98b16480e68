#include "horizon/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>

namespace horizon {
namespace detail {

enum class Kind {
  kConstant,
  kCoord,
  kParam,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kNeg,
  kPow,
  kCall,
};

enum class Func { kSin, kCos, kTan, kExp, kLog, kSqrt, kAtan };

struct ExprNode {
  Kind kind;
  double value = 0.0;  // kConstant
  int slot = -1;       // kCoord / kParam
  Func func = Func::kSin;
  double exp_num = 0.0, exp_den = 1.0;  // kPow
  NodePtr a, b;
};

namespace {

const char* func_name(Func f) {
  switch (f) {
    case Func::kSin: return "sin";
    case Func::kCos: return "cos";
    case Func::kTan: return "tan";
    case Func::kExp: return "exp";
    case Func::kLog: return "log";
    case Func::kSqrt: return "sqrt";
    case Func::kAtan: return "atan";
  }
  return "?";
}

bool lookup_func(std::string_view name, Func& out) {
  static constexpr std::pair<std::string_view, Func> table[] = {
      {"sin", Func::kSin}, {"cos", Func::kCos},   {"tan", Func::kTan},
      {"exp", Func::kExp}, {"log", Func::kLog},   {"sqrt", Func::kSqrt},
      {"atan", Func::kAtan}};
  for (const auto& [n, f] : table)
    if (n == name) {
      out = f;
      return true;
    }
  return false;
}

NodePtr make_constant(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::kConstant;
  n->value = v;
  return n;
}

NodePtr make_ref(Kind kind, int slot) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->slot = slot;
  return n;
}

bool is_const(const NodePtr& n) { return n->kind == Kind::kConstant; }

double apply_func(Func f, double x) {
  switch (f) {
    case Func::kSin: return std::sin(x);
    case Func::kCos: return std::cos(x);
    case Func::kTan:
      if (std::cos(x) == 0.0) throw DomainError("tan at a pole");
      return std::tan(x);
    case Func::kExp: return std::exp(x);
    case Func::kLog:
      if (x <= 0.0) throw DomainError("log of a non-positive value");
      return std::log(x);
    case Func::kSqrt:
      if (x < 0.0) throw DomainError("sqrt of a negative value");
      return std::sqrt(x);
    case Func::kAtan: return std::atan(x);
  }
  return 0.0;
}

// Folding factories: collapse constant subtrees where the fold is safe;
// domain failures stay unfolded and surface at evaluation.
NodePtr make_binary(Kind kind, NodePtr a, NodePtr b) {
  if (is_const(a) && is_const(b)) {
    switch (kind) {
      case Kind::kAdd: return make_constant(a->value + b->value);
      case Kind::kSub: return make_constant(a->value - b->value);
      case Kind::kMul: return make_constant(a->value * b->value);
      case Kind::kDiv:
        if (b->value != 0.0) return make_constant(a->value / b->value);
        break;
      default: break;
    }
  }
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr make_neg(NodePtr a) {
  if (is_const(a)) return make_constant(-a->value);
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::kNeg;
  n->a = std::move(a);
  return n;
}

NodePtr make_pow(NodePtr base, double num, double den) {
  const double e = num / den;
  if (is_const(base)) {
    const double x = base->value;
    if (x > 0.0 || (e == std::floor(e) && x != 0.0) || (x == 0.0 && e > 0.0))
      return make_constant(std::pow(x, e));
  }
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::kPow;
  n->a = std::move(base);
  n->exp_num = num;
  n->exp_den = den;
  return n;
}

NodePtr make_call(Func f, NodePtr a) {
  if (is_const(a)) {
    try {
      return make_constant(apply_func(f, a->value));
    } catch (const DomainError&) {
      // leave unfolded
    }
  }
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::kCall;
  n->func = f;
  n->a = std::move(a);
  return n;
}

// ---------------------------------------------------------------------------
// Tokenizer + recursive descent parser.

struct Token {
  enum class Type { kNumber, kIdent, kOp, kEnd } type;
  std::size_t offset;
  double number = 0.0;
  char op = 0;
  std::string ident;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_;

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    tok_.offset = pos_;
    if (pos_ >= src_.size()) {
      tok_.type = Token::Type::kEnd;
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      std::size_t end = pos_;
      while (end < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[end])))
        ++end;
      if (end < src_.size() && src_[end] == '.') {
        ++end;
        while (end < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[end])))
          ++end;
      }
      if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
        std::size_t e = end + 1;
        if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
        if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
          ++e;
          while (e < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[e])))
            ++e;
          end = e;
        }
      }
      tok_.type = Token::Type::kNumber;
      tok_.number = std::stod(std::string(src_.substr(pos_, end - pos_)));
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) ||
              src_[end] == '_'))
        ++end;
      tok_.type = Token::Type::kIdent;
      tok_.ident = std::string(src_.substr(pos_, end - pos_));
      pos_ = end;
      return;
    }
    if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      tok_.type = Token::Type::kOp;
      tok_.op = c;
      ++pos_;
      return;
    }
    throw ParseError(pos_, "a token", "syntax error at offset " +
                                          std::to_string(pos_) +
                                          ": unexpected character '" +
                                          std::string(1, c) + "'");
  }
};

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& coords,
         const std::vector<std::string>& params)
      : lex_(src), coords_(coords), params_(params) {}

  NodePtr run() {
    NodePtr e = parse_expr();
    const Token& t = lex_.peek();
    if (t.type != Token::Type::kEnd)
      fail(t.offset, "end of input or an operator");
    return e;
  }

 private:
  Lexer lex_;
  const std::vector<std::string>& coords_;
  const std::vector<std::string>& params_;

  [[noreturn]] void fail(std::size_t offset, const std::string& expected) {
    throw ParseError(offset, expected,
                     "syntax error at offset " + std::to_string(offset) +
                         ": expected " + expected);
  }

  bool peek_op(char c) const {
    return lex_.peek().type == Token::Type::kOp && lex_.peek().op == c;
  }

  void expect_op(char c, const std::string& what) {
    if (!peek_op(c)) fail(lex_.peek().offset, what);
    lex_.take();
  }

  NodePtr parse_expr() {
    bool negate = false;
    if (peek_op('-')) {
      lex_.take();
      negate = true;
    }
    NodePtr e = parse_term();
    if (negate) e = make_neg(std::move(e));
    while (peek_op('+') || peek_op('-')) {
      const char op = lex_.take().op;
      NodePtr rhs = parse_term();
      e = make_binary(op == '+' ? Kind::kAdd : Kind::kSub, std::move(e),
                      std::move(rhs));
    }
    return e;
  }

  NodePtr parse_term() {
    NodePtr e = parse_factor();
    while (peek_op('*') || peek_op('/')) {
      const char op = lex_.take().op;
      NodePtr rhs = parse_factor();
      e = make_binary(op == '*' ? Kind::kMul : Kind::kDiv, std::move(e),
                      std::move(rhs));
    }
    return e;
  }

  NodePtr parse_factor() {
    NodePtr base = parse_base();
    if (peek_op('^')) {
      lex_.take();
      double num = 0.0, den = 1.0;
      parse_rational(num, den);
      base = make_pow(std::move(base), num, den);
    }
    return base;
  }

  void parse_rational(double& num, double& den) {
    bool paren = false;
    if (peek_op('(')) {
      lex_.take();
      paren = true;
    }
    double sign = 1.0;
    if (peek_op('-')) {
      lex_.take();
      sign = -1.0;
    }
    const Token& t = lex_.peek();
    if (t.type != Token::Type::kNumber)
      fail(t.offset, "a rational literal exponent");
    num = sign * lex_.take().number;
    den = 1.0;
    // A fraction exponent must be parenthesized: x^(1/2). An unparenthesized
    // '/' after the exponent belongs to the enclosing term, as in a^2/b.
    if (paren && peek_op('/')) {
      lex_.take();
      const Token& d = lex_.peek();
      if (d.type != Token::Type::kNumber)
        fail(d.offset, "a denominator literal");
      den = lex_.take().number;
      if (den == 0.0) fail(d.offset, "a non-zero denominator");
    }
    if (paren) expect_op(')', "')' closing the exponent");
  }

  NodePtr parse_base() {
    const Token& t = lex_.peek();
    switch (t.type) {
      case Token::Type::kNumber:
        return make_constant(lex_.take().number);
      case Token::Type::kIdent: {
        Token id = lex_.take();
        Func f;
        if (lookup_func(id.ident, f)) {
          expect_op('(', "'(' after function name '" + id.ident + "'");
          NodePtr arg = parse_expr();
          expect_op(')', "')' closing call to '" + id.ident + "'");
          return make_call(f, std::move(arg));
        }
        for (std::size_t i = 0; i < coords_.size(); ++i)
          if (coords_[i] == id.ident)
            return make_ref(Kind::kCoord, static_cast<int>(i));
        for (std::size_t i = 0; i < params_.size(); ++i)
          if (params_[i] == id.ident)
            return make_ref(Kind::kParam, static_cast<int>(i));
        throw ParseError(id.offset, "a declared coordinate or parameter",
                         "unknown identifier '" + id.ident + "' at offset " +
                             std::to_string(id.offset));
      }
      case Token::Type::kOp:
        if (t.op == '(') {
          lex_.take();
          NodePtr e = parse_expr();
          expect_op(')', "')'");
          return e;
        }
        fail(t.offset, "a number, identifier or '('");
      case Token::Type::kEnd:
        fail(t.offset, "a number, identifier or '('");
    }
    fail(t.offset, "a number, identifier or '('");
  }
};

// ---------------------------------------------------------------------------
// Evaluation.

struct JetEnv {
  std::span<const double> point;
  std::span<const double> params;
  int order;
  int jet_dim;
  std::span<const int> coord_slots;  // empty => identity seeding
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::string print_node(const ExprNode& n, const std::vector<std::string>& coords,
                       const std::vector<std::string>& params) {
  switch (n.kind) {
    case Kind::kConstant: {
      if (n.value < 0.0) return "(" + format_double(n.value) + ")";
      return format_double(n.value);
    }
    case Kind::kCoord: return coords[n.slot];
    case Kind::kParam: return params[n.slot];
    case Kind::kAdd:
      return "(" + print_node(*n.a, coords, params) + " + " +
             print_node(*n.b, coords, params) + ")";
    case Kind::kSub:
      return "(" + print_node(*n.a, coords, params) + " - " +
             print_node(*n.b, coords, params) + ")";
    case Kind::kMul:
      return "(" + print_node(*n.a, coords, params) + "*" +
             print_node(*n.b, coords, params) + ")";
    case Kind::kDiv:
      return "(" + print_node(*n.a, coords, params) + "/" +
             print_node(*n.b, coords, params) + ")";
    case Kind::kNeg:
      return "(-" + print_node(*n.a, coords, params) + ")";
    case Kind::kPow: {
      std::string e;
      if (n.exp_den == 1.0 && n.exp_num >= 0.0) {
        e = format_double(n.exp_num);
      } else if (n.exp_den == 1.0) {
        e = "(" + format_double(n.exp_num) + ")";
      } else {
        e = "(" + format_double(n.exp_num) + "/" + format_double(n.exp_den) +
            ")";
      }
      return print_node(*n.a, coords, params) + "^" + e;
    }
    case Kind::kCall:
      return std::string(func_name(n.func)) + "(" +
             print_node(*n.a, coords, params) + ")";
  }
  return "?";
}

// Attaches the offending subexpression and evaluation point to a raw domain
// error; outer nodes pass an already annotated message through unchanged.
[[noreturn]] void rethrow_domain(const DomainError& e, const ExprNode& n,
                                 const JetEnv& env,
                                 const std::vector<std::string>& coords,
                                 const std::vector<std::string>& params) {
  const std::string what = e.what();
  if (what.rfind("domain error", 0) == 0) throw;
  std::string msg = "domain error in '" + print_node(n, coords, params) +
                    "' at point (";
  for (std::size_t i = 0; i < env.point.size(); ++i)
    msg += (i ? ", " : "") + coords[i] + "=" + format_double(env.point[i]);
  throw DomainError(msg + "): " + what);
}

Jet eval_node(const ExprNode& n, const JetEnv& env,
              const std::vector<std::string>& coords,
              const std::vector<std::string>& params) {
  switch (n.kind) {
    case Kind::kConstant:
      return Jet::constant(n.value, env.jet_dim, env.order);
    case Kind::kCoord: {
      const int slot = env.coord_slots.empty() ? n.slot : env.coord_slots[n.slot];
      if (slot < 0)
        return Jet::constant(env.point[n.slot], env.jet_dim, env.order);
      return Jet::variable(env.point[n.slot], slot, env.jet_dim, env.order);
    }
    case Kind::kParam:
      return Jet::constant(env.params[n.slot], env.jet_dim, env.order);
    case Kind::kAdd:
      return eval_node(*n.a, env, coords, params) +
             eval_node(*n.b, env, coords, params);
    case Kind::kSub:
      return eval_node(*n.a, env, coords, params) -
             eval_node(*n.b, env, coords, params);
    case Kind::kMul:
      return eval_node(*n.a, env, coords, params) *
             eval_node(*n.b, env, coords, params);
    case Kind::kDiv:
      try {
        return eval_node(*n.a, env, coords, params) /
               eval_node(*n.b, env, coords, params);
      } catch (const DomainError& e) {
        rethrow_domain(e, n, env, coords, params);
      }
    case Kind::kNeg:
      return -eval_node(*n.a, env, coords, params);
    case Kind::kPow:
      try {
        return pow(eval_node(*n.a, env, coords, params),
                   n.exp_num / n.exp_den);
      } catch (const DomainError& e) {
        rethrow_domain(e, n, env, coords, params);
      }
    case Kind::kCall:
      try {
        Jet arg = eval_node(*n.a, env, coords, params);
        switch (n.func) {
          case Func::kSin: return sin(arg);
          case Func::kCos: return cos(arg);
          case Func::kTan: return tan(arg);
          case Func::kExp: return exp(arg);
          case Func::kLog: return log(arg);
          case Func::kSqrt: return sqrt(arg);
          case Func::kAtan: return atan(arg);
        }
        break;
      } catch (const DomainError& e) {
        rethrow_domain(e, n, env, coords, params);
      }
  }
  throw Error("corrupt expression node");
}

double eval_node_value(const ExprNode& n, std::span<const double> point,
                       std::span<const double> params) {
  switch (n.kind) {
    case Kind::kConstant: return n.value;
    case Kind::kCoord: return point[n.slot];
    case Kind::kParam: return params[n.slot];
    case Kind::kAdd:
      return eval_node_value(*n.a, point, params) +
             eval_node_value(*n.b, point, params);
    case Kind::kSub:
      return eval_node_value(*n.a, point, params) -
             eval_node_value(*n.b, point, params);
    case Kind::kMul:
      return eval_node_value(*n.a, point, params) *
             eval_node_value(*n.b, point, params);
    case Kind::kDiv: {
      const double d = eval_node_value(*n.b, point, params);
      if (d == 0.0) throw DomainError("division by zero");
      return eval_node_value(*n.a, point, params) / d;
    }
    case Kind::kNeg: return -eval_node_value(*n.a, point, params);
    case Kind::kPow: {
      const double x = eval_node_value(*n.a, point, params);
      const double e = n.exp_num / n.exp_den;
      if (x <= 0.0 && e != std::floor(e))
        throw DomainError("non-integer power of a non-positive value");
      if (x == 0.0 && e < 0.0) throw DomainError("negative power of zero");
      return std::pow(x, e);
    }
    case Kind::kCall:
      return apply_func(n.func, eval_node_value(*n.a, point, params));
  }
  throw Error("corrupt expression node");
}

bool nodes_equal(const ExprNode& x, const ExprNode& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Kind::kConstant: return x.value == y.value;
    case Kind::kCoord:
    case Kind::kParam: return x.slot == y.slot;
    case Kind::kPow:
      return x.exp_num == y.exp_num && x.exp_den == y.exp_den &&
             nodes_equal(*x.a, *y.a);
    case Kind::kNeg: return nodes_equal(*x.a, *y.a);
    case Kind::kCall: return x.func == y.func && nodes_equal(*x.a, *y.a);
    default:
      return nodes_equal(*x.a, *y.a) && nodes_equal(*x.b, *y.b);
  }
}

NodePtr substitute_node(const ExprNode& n,
                        const std::vector<Expression>& repl,
                        const std::vector<detail::NodePtr>& repl_roots) {
  switch (n.kind) {
    case Kind::kConstant: return make_constant(n.value);
    case Kind::kCoord: return repl_roots[n.slot];
    case Kind::kParam: return make_ref(Kind::kParam, n.slot);
    case Kind::kNeg:
      return make_neg(substitute_node(*n.a, repl, repl_roots));
    case Kind::kPow:
      return make_pow(substitute_node(*n.a, repl, repl_roots), n.exp_num,
                      n.exp_den);
    case Kind::kCall:
      return make_call(n.func, substitute_node(*n.a, repl, repl_roots));
    default:
      return make_binary(n.kind, substitute_node(*n.a, repl, repl_roots),
                         substitute_node(*n.b, repl, repl_roots));
  }
}

}  // namespace
}  // namespace detail

using detail::ExprNode;

Expression::Expression(detail::NodePtr root, std::vector<std::string> coords,
                       std::vector<std::string> params)
    : root_(std::move(root)),
      coords_(std::move(coords)),
      params_(std::move(params)) {}

Expression Expression::parse(std::string_view source,
                             std::vector<std::string> coords,
                             std::vector<std::string> params) {
  detail::Parser parser(source, coords, params);
  detail::NodePtr root = parser.run();
  return Expression(std::move(root), std::move(coords), std::move(params));
}

Expression Expression::constant(double v, std::vector<std::string> coords,
                                std::vector<std::string> params) {
  return Expression(detail::make_constant(v), std::move(coords),
                    std::move(params));
}

Jet Expression::eval_jet(std::span<const double> point,
                         std::span<const double> params, int order) const {
  detail::JetEnv env{point, params, order, static_cast<int>(coords_.size()), {}};
  return detail::eval_node(*root_, env, coords_, params_);
}

Jet Expression::eval_jet_seeded(std::span<const double> point,
                                std::span<const double> params, int order,
                                int jet_dim,
                                std::span<const int> coord_slots) const {
  detail::JetEnv env{point, params, order, jet_dim, coord_slots};
  return detail::eval_node(*root_, env, coords_, params_);
}

double Expression::eval(std::span<const double> point,
                        std::span<const double> params) const {
  return detail::eval_node_value(*root_, point, params);
}

std::string Expression::str() const {
  return detail::print_node(*root_, coords_, params_);
}

bool Expression::structurally_equal(const Expression& other) const {
  return detail::nodes_equal(*root_, *other.root_);
}

Expression Expression::substituted(
    const std::vector<Expression>& replacements) const {
  if (replacements.size() != coords_.size())
    throw Error("substitution needs one replacement per coordinate");
  std::vector<detail::NodePtr> roots;
  roots.reserve(replacements.size());
  for (const Expression& r : replacements) {
    if (r.params_ != params_)
      throw Error("substitution must preserve the parameter list");
    roots.push_back(r.root_);
  }
  return Expression(detail::substitute_node(*root_, replacements, roots),
                    replacements.front().coords_, params_);
}

void Expression::check_same_chart(const Expression& o) const {
  if (coords_ != o.coords_ || params_ != o.params_)
    throw Error("expression operands live on different charts");
}

Expression operator+(const Expression& a, const Expression& b) {
  a.check_same_chart(b);
  return Expression(detail::make_binary(detail::Kind::kAdd, a.root_, b.root_),
                    a.coords_, a.params_);
}

Expression operator-(const Expression& a, const Expression& b) {
  a.check_same_chart(b);
  return Expression(detail::make_binary(detail::Kind::kSub, a.root_, b.root_),
                    a.coords_, a.params_);
}

Expression operator*(const Expression& a, const Expression& b) {
  a.check_same_chart(b);
  return Expression(detail::make_binary(detail::Kind::kMul, a.root_, b.root_),
                    a.coords_, a.params_);
}

Expression operator/(const Expression& a, const Expression& b) {
  a.check_same_chart(b);
  return Expression(detail::make_binary(detail::Kind::kDiv, a.root_, b.root_),
                    a.coords_, a.params_);
}

Expression operator-(const Expression& a) {
  return Expression(detail::make_neg(a.root_), a.coords_, a.params_);
}

Expression operator*(double s, const Expression& a) {
  return Expression(
      detail::make_binary(detail::Kind::kMul, detail::make_constant(s), a.root_),
      a.coords_, a.params_);
}

}  // namespace horizon
