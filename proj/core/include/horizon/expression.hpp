#ifndef HORIZON_EXPRESSION_HPP
#define HORIZON_EXPRESSION_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horizon/jet.hpp"

namespace horizon {

namespace detail {
struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;
}  // namespace detail

/// A parsed analytic expression over named chart coordinates and parameters.
///
/// Grammar (infix, standard precedence, `^` restricted to rational literal
/// exponents, unary minus allowed at the head of an expression):
///
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := base ('^' rational)?
///   base     := number | ident | '(' expr ')' | func '(' expr ')'
///   func     := sin | cos | tan | exp | log | sqrt | atan
///   rational := ['-'] number | '(' ['-'] number ['/' number] ')'
///
/// Constant subexpressions are folded at parse time. Expressions are
/// immutable and safe to share across threads; evaluation is pure.
class Expression {
 public:
  Expression() = default;

  static Expression parse(std::string_view source,
                          std::vector<std::string> coords,
                          std::vector<std::string> params);
  static Expression constant(double v, std::vector<std::string> coords,
                             std::vector<std::string> params);

  bool valid() const { return root_ != nullptr; }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<std::string>& params() const { return params_; }

  /// Jet of the expression at `point`, seeding every coordinate as an
  /// independent jet variable (jet dimension = number of coordinates).
  Jet eval_jet(std::span<const double> point, std::span<const double> params,
               int order) const;

  /// Jet with a custom seeding: coordinate i becomes jet variable
  /// coord_slots[i], or a constant if coord_slots[i] < 0. Used to
  /// differentiate along a submanifold (e.g. horizon coordinates only).
  Jet eval_jet_seeded(std::span<const double> point,
                      std::span<const double> params, int order, int jet_dim,
                      std::span<const int> coord_slots) const;

  /// Plain double evaluation (no derivatives).
  double eval(std::span<const double> point,
              std::span<const double> params) const;

  /// Re-parseable text form; print(parse(s)) re-parses to an equal tree.
  std::string str() const;

  bool structurally_equal(const Expression& other) const;

  /// Substitutes coordinate i by replacement[i]; the replacements must all
  /// live on one common chart, which becomes the chart of the result. The
  /// parameter list must be unchanged. Used for coordinate changes.
  Expression substituted(const std::vector<Expression>& replacements) const;

  // Algebraic combinators. Operands must share coordinate/parameter lists.
  friend Expression operator+(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a, const Expression& b);
  friend Expression operator*(const Expression& a, const Expression& b);
  friend Expression operator/(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a);
  friend Expression operator*(double s, const Expression& a);

 private:
  detail::NodePtr root_;
  std::vector<std::string> coords_;
  std::vector<std::string> params_;

  Expression(detail::NodePtr root, std::vector<std::string> coords,
             std::vector<std::string> params);
  void check_same_chart(const Expression& o) const;
};

}  // namespace horizon

#endif
