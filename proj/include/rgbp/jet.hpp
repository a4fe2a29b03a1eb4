#pragma once

// Truncated Taylor series in d = z - z0, carrying coefficients of d^0..d^(N-1).
// Arithmetic on jets is the chain rule done once, exactly, to fixed order:
// derivative(k) of any composite equals k! times its k-th coefficient.

#include <array>
#include <complex>
#include <cstddef>
#include <type_traits>

namespace rgbp {

template <typename T, std::size_t N>
class Jet {
  static_assert(N >= 1);

 public:
  using value_type = T;
  static constexpr std::size_t order = N;

  Jet() { c_.fill(T(0)); }
  Jet(T constant) {  // NOLINT: implicit promotion of scalars is intended
    c_.fill(T(0));
    c_[0] = constant;
  }

  // z itself expanded at z0: z0 + d.
  static Jet variable(T z0) {
    Jet j(z0);
    if constexpr (N > 1) j.c_[1] = T(1);
    return j;
  }

  static Jet from_coefficients(const std::array<T, N>& c) {
    Jet j;
    j.c_ = c;
    return j;
  }

  T operator[](std::size_t k) const { return c_[k]; }
  T& operator[](std::size_t k) { return c_[k]; }
  T value() const { return c_[0]; }
  const std::array<T, N>& coefficients() const { return c_; }

  // k-th derivative with respect to z at z0.
  T derivative(std::size_t k) const {
    T f(1);
    for (std::size_t i = 2; i <= k; ++i) f *= T(double(i));
    return c_[k] * f;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t i = 0; i < N; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t i = 0; i < N; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    std::array<T, N> r;
    r.fill(T(0));
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; i + j < N; ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = r;
    return *this;
  }
  Jet& operator/=(const Jet& o) { return *this *= o.reciprocal(); }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator-(Jet a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  template <typename S>
    requires std::is_arithmetic_v<S>
  friend Jet operator*(Jet a, S s) {
    for (auto& x : a.c_) x *= T(s);
    return a;
  }
  template <typename S>
    requires std::is_arithmetic_v<S>
  friend Jet operator*(S s, Jet a) { return a * s; }
  template <typename S>
    requires std::is_arithmetic_v<S>
  friend Jet operator/(Jet a, S s) {
    for (auto& x : a.c_) x /= T(s);
    return a;
  }
  template <typename S>
    requires std::is_arithmetic_v<S>
  friend Jet operator/(S s, const Jet& a) { return a.reciprocal() * s; }
  template <typename S>
    requires std::is_arithmetic_v<S>
  friend Jet operator+(Jet a, S s) {
    a.c_[0] += T(s);
    return a;
  }
  template <typename S>
    requires std::is_arithmetic_v<S>
  friend Jet operator+(S s, Jet a) { return a + s; }
  template <typename S>
    requires std::is_arithmetic_v<S>
  friend Jet operator-(Jet a, S s) {
    a.c_[0] -= T(s);
    return a;
  }
  template <typename S>
    requires std::is_arithmetic_v<S>
  friend Jet operator-(S s, const Jet& a) { return -a + s; }

  Jet reciprocal() const {
    std::array<T, N> r;
    r[0] = T(1) / c_[0];
    for (std::size_t n = 1; n < N; ++n) {
      T s(0);
      for (std::size_t k = 1; k <= n; ++k) s += c_[k] * r[n - k];
      r[n] = -s * r[0];
    }
    return from_coefficients(r);
  }

  // this^p where the constant term of the result is supplied by the caller,
  // which fixes the branch: base0 must be a valid value of c_[0]^p.
  Jet pow(double p, T base0) const {
    std::array<T, N> r;
    r[0] = base0;
    for (std::size_t n = 1; n < N; ++n) {
      T s(0);
      for (std::size_t k = 1; k <= n; ++k) s += T((p + 1.0) * double(k) - double(n)) * c_[k] * r[n - k];
      r[n] = s / (T(double(n)) * c_[0]);
    }
    return from_coefficients(r);
  }

  // Antiderivative whose constant term is c0.
  Jet integral(T c0) const {
    std::array<T, N> r;
    r[0] = c0;
    for (std::size_t k = 1; k < N; ++k) r[k] = c_[k - 1] / T(double(k));
    return from_coefficients(r);
  }

  // The jet without its constant term.
  Jet increment() const {
    Jet j = *this;
    j.c_[0] = T(0);
    return j;
  }

 private:
  std::array<T, N> c_;
};

// f(x0 + d) = sum_k f^(k)(x0) d^k / k!, given f^(k)(x0) for k = 0..N-1 and a
// jet x whose constant term is x0.
template <typename T, std::size_t N>
Jet<T, N> compose(const std::array<T, N>& derivs_at_x0, const Jet<T, N>& x) {
  const Jet<T, N> d = x.increment();
  Jet<T, N> power(T(1));
  Jet<T, N> result;
  T fact(1);
  for (std::size_t k = 0; k < N; ++k) {
    if (k > 0) {
      fact *= T(double(k));
      power *= d;
    }
    Jet<T, N> term = power;
    for (std::size_t i = 0; i < N; ++i) term[i] *= derivs_at_x0[k] / fact;
    result += term;
  }
  return result;
}

}  // namespace rgbp
