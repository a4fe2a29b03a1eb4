#pragma once

// Finite sums  sum c * phi^k * sin(phi)^m * cos(phi)^j  with j in {0, 1}.
//
// The canonical form keeps at most one power of cos: every cos^2 is rewritten
// as 1 - sin^2 at construction time, so two series that agree as functions
// have identical term maps (up to coefficient rounding). The set is closed
// under +, *, d/dphi and the antiderivative that vanishes at phi = 0.

#include <cmath>
#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <vector>

namespace rgbp {

struct PhiMonomial {
  int phi = 0;  // power of phi
  int sin = 0;  // power of sin(phi)
  int cos = 0;  // power of cos(phi), 0 or 1 once canonical

  auto operator<=>(const PhiMonomial&) const = default;
};

template <typename Coeff>
class BasicPhiSeries {
 public:
  using coeff_type = Coeff;
  using term_map = std::map<PhiMonomial, Coeff>;

  BasicPhiSeries() = default;

  static BasicPhiSeries constant(Coeff c) { return monomial(0, 0, 0, c); }

  // c * phi^k sin^m cos^j; any j >= 0 is accepted and reduced.
  static BasicPhiSeries monomial(int k, int m, int j, Coeff c = Coeff(1)) {
    BasicPhiSeries s;
    s.accumulate(k, m, j, c);
    s.prune();
    return s;
  }

  static BasicPhiSeries sin_power(int m) { return monomial(0, m, 0); }
  static BasicPhiSeries cos_power(int j) { return monomial(0, 0, j); }
  static BasicPhiSeries phi_power(int k) { return monomial(k, 0, 0); }

  const term_map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  Coeff coefficient(const PhiMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  int max_phi_power() const noexcept {
    int k = 0;
    for (const auto& [mono, c] : terms_) k = std::max(k, mono.phi);
    return k;
  }

  BasicPhiSeries& operator+=(const BasicPhiSeries& rhs) {
    for (const auto& [mono, c] : rhs.terms_) terms_[mono] += c;
    prune();
    return *this;
  }

  BasicPhiSeries& operator-=(const BasicPhiSeries& rhs) {
    for (const auto& [mono, c] : rhs.terms_) terms_[mono] -= c;
    prune();
    return *this;
  }

  BasicPhiSeries& operator*=(Coeff s) {
    for (auto& [mono, c] : terms_) c *= s;
    prune();
    return *this;
  }

  friend BasicPhiSeries operator+(BasicPhiSeries p, const BasicPhiSeries& q) { return p += q; }
  friend BasicPhiSeries operator-(BasicPhiSeries p, const BasicPhiSeries& q) { return p -= q; }
  friend BasicPhiSeries operator*(BasicPhiSeries p, Coeff s) { return p *= s; }
  friend BasicPhiSeries operator*(Coeff s, BasicPhiSeries p) { return p *= s; }
  friend BasicPhiSeries operator-(BasicPhiSeries p) { return p *= Coeff(-1); }

  friend BasicPhiSeries operator*(const BasicPhiSeries& p, const BasicPhiSeries& q) {
    BasicPhiSeries r;
    for (const auto& [a, ca] : p.terms_) {
      for (const auto& [b, cb] : q.terms_) {
        r.accumulate(a.phi + b.phi, a.sin + b.sin, a.cos + b.cos, ca * cb);
      }
    }
    r.prune();
    return r;
  }

  friend bool operator==(const BasicPhiSeries&, const BasicPhiSeries&) = default;

  BasicPhiSeries derivative() const {
    BasicPhiSeries r;
    for (const auto& [mono, c] : terms_) {
      const auto [k, m, j] = mono;
      if (k > 0) r.accumulate(k - 1, m, j, c * Coeff(k));
      if (j == 0) {
        if (m > 0) r.accumulate(k, m - 1, 1, c * Coeff(m));
      } else {
        // d(s^m c) = m s^(m-1) c^2 - s^(m+1) = m s^(m-1) - (m+1) s^(m+1)
        if (m > 0) r.accumulate(k, m - 1, 0, c * Coeff(m));
        r.accumulate(k, m + 1, 0, c * Coeff(-(m + 1)));
      }
    }
    r.prune();
    return r;
  }

  // F with F' = *this and F(0) = 0.
  BasicPhiSeries antiderivative() const {
    BasicPhiSeries r;
    for (const auto& [mono, c] : terms_) {
      r += integrate_monomial(mono.phi, mono.sin, mono.cos) * c;
    }
    return r;
  }

  // Evaluate with caller-supplied sin/cos, which lets callers pin the branch.
  template <typename Arg>
  auto evaluate(const Arg& phi, const Arg& s, const Arg& c) const {
    using R = decltype(Coeff(1) * phi);
    R total(0);
    for (const auto& [mono, coef] : terms_) {
      R t = coef;
      if (mono.phi) t *= ipow(phi, mono.phi);
      if (mono.sin) t *= ipow(s, mono.sin);
      if (mono.cos) t *= ipow(c, mono.cos);
      total += t;
    }
    return total;
  }

  template <typename Arg>
  auto evaluate(const Arg& phi) const {
    using std::cos;
    using std::sin;
    return evaluate(phi, Arg(sin(phi)), Arg(cos(phi)));
  }

 private:
  template <typename Arg>
  static Arg ipow(const Arg& x, int e) {
    Arg r(1);
    Arg b = x;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  void accumulate(int k, int m, int j, Coeff c) {
    // cos^j = cos^(j mod 2) * (1 - sin^2)^(j div 2)
    if (j >= 2) {
      accumulate(k, m, j - 2, c);
      accumulate(k, m + 2, j - 2, -c);
      return;
    }
    terms_[PhiMonomial{k, m, j}] += c;
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = (it->second == Coeff(0)) ? terms_.erase(it) : std::next(it);
    }
  }

  // Antiderivative of phi^k sin^m cos^j vanishing at 0 (j in {0,1}).
  static BasicPhiSeries integrate_monomial(int k, int m, int j) {
    if (k == 0) {
      if (j == 1) return monomial(0, m + 1, 0, Coeff(1.0 / (m + 1)));
      if (m == 0) return phi_power(1);
      if (m == 1) return constant(Coeff(1)) - cos_power(1);
      // int s^m = -s^(m-1) c / m + (m-1)/m int s^(m-2)
      return monomial(0, m - 1, 1, Coeff(-1.0 / m)) +
             integrate_monomial(0, m - 2, 0) * Coeff(double(m - 1) / m);
    }
    if (m == 0 && j == 0) return monomial(k + 1, 0, 0, Coeff(1.0 / (k + 1)));
    // By parts: int phi^k g = phi^k G - k int phi^(k-1) G, with G(0) = 0.
    const BasicPhiSeries g = integrate_monomial(0, m, j);
    BasicPhiSeries r;
    for (const auto& [mono, c] : g.terms_) {
      r.accumulate(mono.phi + k, mono.sin, mono.cos, c);
      r -= integrate_monomial(mono.phi + k - 1, mono.sin, mono.cos) * (c * Coeff(k));
    }
    r.prune();
    return r;
  }

  term_map terms_;
};

using PhiSeries = BasicPhiSeries<std::complex<double>>;

template <typename C>
BasicPhiSeries<C> add(const BasicPhiSeries<C>& p, const BasicPhiSeries<C>& q) {
  return p + q;
}

template <typename C>
BasicPhiSeries<C> multiply(const BasicPhiSeries<C>& p, const BasicPhiSeries<C>& q) {
  return p * q;
}

template <typename C>
BasicPhiSeries<C> differentiate(const BasicPhiSeries<C>& p) {
  return p.derivative();
}

template <typename C>
BasicPhiSeries<C> integrate(const BasicPhiSeries<C>& p) {
  return p.antiderivative();
}

template <typename C, typename Arg>
auto evaluate(const BasicPhiSeries<C>& p, const Arg& phi) {
  return p.evaluate(phi);
}

}  // namespace rgbp
