#include "discode/expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "discode/errors.hpp"

namespace discode {

struct Instr {
  Op op;
  int lhs = -1;
  int rhs = -1;
  Complex value{};
  double exponent = 0.0;
};

struct Tape {
  std::vector<Instr> code;
};

struct Expr::TapeCache {
  std::once_flag once;
  Tape tape;
};

namespace {

using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr make_const(Complex c) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = c;
  return n;
}

int emit(const Node* n, Tape& t, std::unordered_map<const Node*, int>& seen) {
  if (auto it = seen.find(n); it != seen.end()) return it->second;
  Instr ins{n->op};
  ins.value = n->value;
  ins.exponent = n->exponent;
  if (n->lhs) ins.lhs = emit(n->lhs.get(), t, seen);
  if (n->rhs) ins.rhs = emit(n->rhs.get(), t, seen);
  t.code.push_back(ins);
  const int idx = static_cast<int>(t.code.size()) - 1;
  seen.emplace(n, idx);
  return idx;
}

Complex real_power(Complex a, double p) { return std::exp(p * std::log(a)); }
Series real_power(const Series& a, double p) { return pow(a, p); }

Complex constant_like(Complex c, const Complex&) { return c; }
Series constant_like(Complex c, const Series& like) { return Series(like.degree(), c); }

template <class S>
void run(const Tape& t, const S& z, std::vector<S>& v) {
  v.resize(t.code.size());
  for (std::size_t i = 0; i < t.code.size(); ++i) {
    const Instr& in = t.code[i];
    switch (in.op) {
      case Op::Const: v[i] = constant_like(in.value, z); break;
      case Op::Var: v[i] = z; break;
      case Op::Add: v[i] = v[in.lhs] + v[in.rhs]; break;
      case Op::Sub: v[i] = v[in.lhs] - v[in.rhs]; break;
      case Op::Mul: v[i] = v[in.lhs] * v[in.rhs]; break;
      case Op::Div: v[i] = v[in.lhs] / v[in.rhs]; break;
      case Op::Neg: v[i] = -v[in.lhs]; break;
      case Op::Pow: v[i] = real_power(v[in.lhs], in.exponent); break;
      case Op::Exp: v[i] = exp(v[in.lhs]); break;
      case Op::Log: v[i] = log(v[in.lhs]); break;
      case Op::Sqrt: v[i] = sqrt(v[in.lhs]); break;
      case Op::Sin: v[i] = sin(v[in.lhs]); break;
      case Op::Cos: v[i] = cos(v[in.lhs]); break;
    }
  }
}

using SingularSet = std::optional<std::vector<Complex>>;

SingularSet merge(const SingularSet& a, const SingularSet& b) {
  if (!a || !b) return std::nullopt;
  std::vector<Complex> out = *a;
  for (const Complex& p : *b) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](Complex q) { return std::abs(p - q) < 1e-15; });
    if (!dup) out.push_back(p);
  }
  return out;
}

bool is_const(const Expr& e, Complex c) { return e.is_constant() && e.node().value == c; }

Expr unary(Op op, const Expr& a, SingularSet sing) { return Expr(make_node(op, a.node_ptr()), std::move(sing)); }

void print(const Node& n, std::ostream& os) {
  auto fn = [&](const char* name) {
    os << name << '(';
    print(*n.lhs, os);
    os << ')';
  };
  auto bin = [&](const char* sym) {
    os << '(';
    print(*n.lhs, os);
    os << sym;
    print(*n.rhs, os);
    os << ')';
  };
  switch (n.op) {
    case Op::Const:
      if (n.value.imag() == 0.0) {
        os << n.value.real();
      } else {
        os << '(' << n.value.real() << (n.value.imag() < 0 ? "-" : "+") << std::abs(n.value.imag()) << "i)";
      }
      break;
    case Op::Var: os << 'z'; break;
    case Op::Add: bin("+"); break;
    case Op::Sub: bin("-"); break;
    case Op::Mul: bin("*"); break;
    case Op::Div: bin("/"); break;
    case Op::Neg:
      os << "(-";
      print(*n.lhs, os);
      os << ')';
      break;
    case Op::Pow:
      os << '(';
      print(*n.lhs, os);
      os << '^' << n.exponent << ')';
      break;
    case Op::Exp: fn("exp"); break;
    case Op::Log: fn("log"); break;
    case Op::Sqrt: fn("sqrt"); break;
    case Op::Sin: fn("sin"); break;
    case Op::Cos: fn("cos"); break;
  }
}

}  // namespace

Expr::Expr() : Expr(Complex{}) {}
Expr::Expr(Complex c) : node_(make_const(c)), singular_(std::vector<Complex>{}), cache_(std::make_shared<TapeCache>()) {}
Expr::Expr(double c) : Expr(Complex{c, 0.0}) {}
Expr::Expr(std::shared_ptr<const Node> node, std::optional<std::vector<Complex>> singularities)
    : node_(std::move(node)), singular_(std::move(singularities)), cache_(std::make_shared<TapeCache>()) {}

Expr Expr::z() { return Expr(make_node(Op::Var), std::vector<Complex>{}); }

const Tape& Expr::tape() const {
  std::call_once(cache_->once, [this] {
    std::unordered_map<const Node*, int> seen;
    emit(node_.get(), cache_->tape, seen);
  });
  return cache_->tape;
}

std::size_t Expr::tape_size() const { return tape().code.size(); }

Complex Expr::eval_raw(Complex z) const {
  thread_local std::vector<Complex> buf;
  run(tape(), z, buf);
  return buf.back();
}

Complex Expr::operator()(Complex z) const {
  const Complex v = eval_raw(z);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os << "non-finite value at z = " << z;
    throw EvaluationError(os.str());
  }
  return v;
}

Series Expr::series_at(Complex center, std::size_t degree) const {
  std::vector<Series> buf;
  run(tape(), Series::variable(degree, center), buf);
  Series out = buf.back();
  for (const Complex& c : out.coefficients()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      std::ostringstream os;
      os << "series expansion is singular at center " << center;
      throw EvaluationError(os.str());
    }
  }
  return out;
}

Expr Expr::with_singularities(std::vector<Complex> points) const { return Expr(node_, std::move(points)); }

double Expr::analytic_radius(Complex center) const {
  if (!singular_) return 1.0 - std::abs(center);
  double d = std::numeric_limits<double>::infinity();
  for (const Complex& p : *singular_) d = std::min(d, std::abs(p - center));
  return d;
}

std::string Expr::to_string() const {
  std::ostringstream os;
  os.precision(17);
  print(*node_, os);
  return os.str();
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.node().value + b.node().value);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Expr(make_node(Op::Add, a.node_ptr(), b.node_ptr()), merge(a.singularities(), b.singularities()));
}

Expr operator-(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.node().value - b.node().value);
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return Expr(make_node(Op::Sub, a.node_ptr(), b.node_ptr()), merge(a.singularities(), b.singularities()));
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.node().value * b.node().value);
  if (a.is_zero() || b.is_zero()) return Expr(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  return Expr(make_node(Op::Mul, a.node_ptr(), b.node_ptr()), merge(a.singularities(), b.singularities()));
}

Expr operator/(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.node().value / b.node().value);
  if (a.is_zero()) return Expr(0.0);
  if (is_const(b, 1.0)) return a;
  // A quotient by a non-constant introduces unknown poles unless the caller declares them.
  SingularSet s = b.is_constant() ? a.singularities() : std::nullopt;
  return Expr(make_node(Op::Div, a.node_ptr(), b.node_ptr()), std::move(s));
}

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr(-a.node().value);
  if (a.node().op == Op::Neg) return Expr(a.node().lhs, a.singularities());
  return unary(Op::Neg, a, a.singularities());
}

Expr exp(const Expr& a) {
  if (a.is_constant()) return Expr(std::exp(a.node().value));
  return unary(Op::Exp, a, a.singularities());
}

Expr log(const Expr& a) {
  if (a.is_constant()) return Expr(std::log(a.node().value));
  return unary(Op::Log, a, std::nullopt);
}

Expr sqrt(const Expr& a) {
  if (a.is_constant()) return Expr(std::sqrt(a.node().value));
  return unary(Op::Sqrt, a, std::nullopt);
}

Expr sin(const Expr& a) {
  if (a.is_constant()) return Expr(std::sin(a.node().value));
  return unary(Op::Sin, a, a.singularities());
}

Expr cos(const Expr& a) {
  if (a.is_constant()) return Expr(std::cos(a.node().value));
  return unary(Op::Cos, a, a.singularities());
}

Expr pow(const Expr& a, double p) {
  if (p == 0.0) return Expr(1.0);
  if (p == 1.0) return a;
  if (a.is_constant()) return Expr(real_power(a.node().value, p));
  if (p == std::floor(p) && std::abs(p) <= 16.0) {
    auto n = static_cast<int>(std::abs(p));
    Expr base = a;
    Expr acc(1.0);
    while (n > 0) {
      if (n & 1) acc = acc * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return p > 0 ? acc : Expr(1.0) / acc;
  }
  auto node = std::make_shared<Node>();
  node->op = Op::Pow;
  node->exponent = p;
  node->lhs = a.node_ptr();
  return Expr(node, std::nullopt);
}

namespace {

Expr diff_node(const NodePtr& n, std::unordered_map<const Node*, Expr>& memo) {
  if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
  // Singular sets are re-attached by diff(); the raw derivative tree does not track them.
  auto wrap = [](const NodePtr& p) { return Expr(p, std::vector<Complex>{}); };
  Expr d;
  switch (n->op) {
    case Op::Const: d = Expr(0.0); break;
    case Op::Var: d = Expr(1.0); break;
    case Op::Add: d = diff_node(n->lhs, memo) + diff_node(n->rhs, memo); break;
    case Op::Sub: d = diff_node(n->lhs, memo) - diff_node(n->rhs, memo); break;
    case Op::Mul:
      d = diff_node(n->lhs, memo) * wrap(n->rhs) + wrap(n->lhs) * diff_node(n->rhs, memo);
      break;
    case Op::Div: {
      const Expr u = wrap(n->lhs), v = wrap(n->rhs);
      d = (diff_node(n->lhs, memo) * v - u * diff_node(n->rhs, memo)) / (v * v);
      break;
    }
    case Op::Neg: d = -diff_node(n->lhs, memo); break;
    case Op::Pow:
      d = Expr(n->exponent) * pow(wrap(n->lhs), n->exponent - 1.0) * diff_node(n->lhs, memo);
      break;
    case Op::Exp: d = wrap(n) * diff_node(n->lhs, memo); break;
    case Op::Log: d = diff_node(n->lhs, memo) / wrap(n->lhs); break;
    case Op::Sqrt: d = diff_node(n->lhs, memo) / (Expr(2.0) * wrap(n)); break;
    case Op::Sin: d = cos(wrap(n->lhs)) * diff_node(n->lhs, memo); break;
    case Op::Cos: d = -(sin(wrap(n->lhs)) * diff_node(n->lhs, memo)); break;
  }
  memo.emplace(n.get(), d);
  return d;
}

}  // namespace

Expr diff(const Expr& f) {
  std::unordered_map<const Node*, Expr> memo;
  const Expr d = diff_node(f.node_ptr(), memo);
  return Expr(d.node_ptr(), f.singularities());
}

Complex eval(const Expr& f, Complex z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("eval requires |z| < 1");
  return f(z);
}

}  // namespace discode
