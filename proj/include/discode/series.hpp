#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace discode {

using Complex = std::complex<double>;

/// Truncated power series c_0 + c_1 h + ... + c_N h^N in a local variable h.
///
/// All arithmetic is closed at the fixed degree N of the operands; mixing
/// degrees is a logic error. Transcendental functions use the standard
/// first-order recurrences (b' = a' b for exp, etc.), so every coefficient is
/// exact up to floating-point rounding.
class Series {
 public:
  Series() = default;
  Series(std::size_t degree, Complex c0) : c_(degree + 1, Complex{}) { c_[0] = c0; }

  static Series variable(std::size_t degree, Complex center);

  std::size_t degree() const { return c_.size() - 1; }
  const std::vector<Complex>& coefficients() const { return c_; }
  std::vector<Complex>& coefficients() { return c_; }
  Complex operator[](std::size_t k) const { return c_[k]; }
  Complex& operator[](std::size_t k) { return c_[k]; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);

 private:
  std::vector<Complex> c_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator-(Series a);
Series operator*(const Series& a, const Series& b);
Series operator/(const Series& a, const Series& b);

Series exp(const Series& a);
Series log(const Series& a);
/// Principal real power a^p; requires a[0] != 0.
Series pow(const Series& a, double p);
Series sqrt(const Series& a);
Series sin(const Series& a);
Series cos(const Series& a);

}  // namespace discode
