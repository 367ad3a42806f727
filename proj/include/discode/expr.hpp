#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "discode/series.hpp"

namespace discode {

using Complex = std::complex<double>;

enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Exp, Log, Sqrt, Sin, Cos };

struct Node {
  Op op = Op::Const;
  Complex value{};
  double exponent = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

struct Tape;

/// Immutable closed-form analytic function of the variable z.
///
/// Principal branches are used for log, sqrt and real powers. Each expression
/// carries its declared singular set: an explicit (possibly empty) list of
/// points outside of which the function is analytic, or "unknown", in which
/// case the unit circle is treated as the natural boundary. Evaluation goes
/// through a flattened tape built once per expression and shared by copies,
/// so concurrent evaluation of a shared Expr is safe.
class Expr {
 public:
  Expr();
  Expr(Complex c);  // NOLINT(google-explicit-constructor)
  Expr(double c);   // NOLINT(google-explicit-constructor)
  explicit Expr(std::shared_ptr<const Node> node,
                std::optional<std::vector<Complex>> singularities = std::nullopt);

  static Expr z();

  const Node& node() const { return *node_; }
  const std::shared_ptr<const Node>& node_ptr() const { return node_; }
  bool is_constant() const { return node_->op == Op::Const; }
  bool is_zero() const { return is_constant() && node_->value == Complex{}; }

  /// Value at z; throws EvaluationError when the result is not finite.
  Complex operator()(Complex z) const;
  /// Value at z without the finiteness check (NaN/inf propagate).
  Complex eval_raw(Complex z) const;
  /// Taylor coefficients of the expansion about center, through degree.
  Series series_at(Complex center, std::size_t degree) const;

  const std::optional<std::vector<Complex>>& singularities() const { return singular_; }
  Expr with_singularities(std::vector<Complex> points) const;
  /// Radius of the largest disc about center on which the expression is known
  /// to be analytic (infinity for entire expressions).
  double analytic_radius(Complex center) const;

  std::string to_string() const;
  std::size_t tape_size() const;

 private:
  const Tape& tape() const;

  std::shared_ptr<const Node> node_;
  std::optional<std::vector<Complex>> singular_;
  struct TapeCache;
  std::shared_ptr<TapeCache> cache_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr sqrt(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
/// Real power with the principal branch; small integer exponents expand to products.
Expr pow(const Expr& a, double p);

/// Exact symbolic derivative d/dz.
Expr diff(const Expr& f);

/// Checked evaluation: requires |z| < 1 and a finite result.
Complex eval(const Expr& f, Complex z);

}  // namespace discode
