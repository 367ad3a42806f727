#include "discode/series.hpp"

#include <cassert>
#include <cmath>

namespace discode {

Series Series::variable(std::size_t degree, Complex center) {
  Series s(degree, center);
  if (degree >= 1) s.c_[1] = 1.0;
  return s;
}

Series& Series::operator+=(const Series& o) {
  assert(o.c_.size() == c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  assert(o.c_.size() == c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }

Series operator-(Series a) {
  for (auto& c : a.coefficients()) c = -c;
  return a;
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = a.degree();
  Series out(n, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    out[k] = acc;
  }
  return out;
}

Series operator/(const Series& a, const Series& b) {
  const std::size_t n = a.degree();
  Series q(n, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex acc = a[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

Series exp(const Series& a) {
  const std::size_t n = a.degree();
  Series b(n, std::exp(a[0]));
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * b[k - j];
    b[k] = acc / static_cast<double>(k);
  }
  return b;
}

Series log(const Series& a) {
  const std::size_t n = a.degree();
  Series b(n, std::log(a[0]));
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 1; j < k; ++j) acc += static_cast<double>(k - j) * a[j] * b[k - j];
    b[k] = (a[k] - acc / static_cast<double>(k)) / a[0];
  }
  return b;
}

namespace {

Series power_from(const Series& a, double p, Complex b0) {
  const std::size_t n = a.degree();
  Series b(n, b0);
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      const double w = p * static_cast<double>(j) - static_cast<double>(k - j);
      acc += w * a[j] * b[k - j];
    }
    b[k] = acc / (static_cast<double>(k) * a[0]);
  }
  return b;
}

}  // namespace

Series pow(const Series& a, double p) {
  return power_from(a, p, std::exp(p * std::log(a[0])));
}

Series sqrt(const Series& a) { return power_from(a, 0.5, std::sqrt(a[0])); }

namespace {

void sin_cos(const Series& a, Series& s, Series& c) {
  const std::size_t n = a.degree();
  s = Series(n, std::sin(a[0]));
  c = Series(n, std::cos(a[0]));
  for (std::size_t k = 1; k <= n; ++k) {
    Complex as = 0.0, ac = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      const Complex ja = static_cast<double>(j) * a[j];
      as += ja * c[k - j];
      ac -= ja * s[k - j];
    }
    s[k] = as / static_cast<double>(k);
    c[k] = ac / static_cast<double>(k);
  }
}

}  // namespace

Series sin(const Series& a) {
  Series s, c;
  sin_cos(a, s, c);
  return s;
}

Series cos(const Series& a) {
  Series s, c;
  sin_cos(a, s, c);
  return c;
}

}  // namespace discode
