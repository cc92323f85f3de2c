#include "eps/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eps {

namespace {

void check_same_hbar(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  if (a.hbar() != b.hbar()) {
    throw std::invalid_argument(
        "OperatorPolynomial: operands carry different hbar values");
  }
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

OperatorPolynomial::OperatorPolynomial(double hbar) : hbar_(hbar) {
  if (!(hbar > 0.0)) {
    throw std::invalid_argument("OperatorPolynomial: hbar must be positive");
  }
}

OperatorPolynomial OperatorPolynomial::constant(Complex value, double hbar) {
  OperatorPolynomial r(hbar);
  r.add_term({0, 0, 0, 0}, value);
  return r;
}

OperatorPolynomial OperatorPolynomial::monomial(const MonomialKey& key,
                                                Complex coeff, double hbar) {
  for (int e : key) {
    if (e < 0) {
      throw std::invalid_argument("OperatorPolynomial: negative exponent");
    }
  }
  OperatorPolynomial r(hbar);
  r.add_term(key, coeff);
  return r;
}

OperatorPolynomial OperatorPolynomial::q(double hbar) {
  return monomial({1, 0, 0, 0}, 1.0, hbar);
}
OperatorPolynomial OperatorPolynomial::p(double hbar) {
  return monomial({0, 1, 0, 0}, 1.0, hbar);
}
OperatorPolynomial OperatorPolynomial::pi_q(double hbar) {
  return monomial({0, 0, 1, 0}, 1.0, hbar);
}
OperatorPolynomial OperatorPolynomial::pi_p(double hbar) {
  return monomial({0, 0, 0, 1}, 1.0, hbar);
}

Complex OperatorPolynomial::coefficient(const MonomialKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

int OperatorPolynomial::pi_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key[2] + key[3]);
  return d;
}

int OperatorPolynomial::qp_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key[0] + key[1]);
  return d;
}

double OperatorPolynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void OperatorPolynomial::add_term(const MonomialKey& key, Complex coeff) {
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (coeff != Complex(0.0)) terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == Complex(0.0)) terms_.erase(it);
}

OperatorPolynomial& OperatorPolynomial::operator+=(
    const OperatorPolynomial& rhs) {
  check_same_hbar(*this, rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

OperatorPolynomial& OperatorPolynomial::operator-=(
    const OperatorPolynomial& rhs) {
  check_same_hbar(*this, rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

OperatorPolynomial& OperatorPolynomial::operator*=(Complex scalar) {
  if (scalar == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

OperatorPolynomial OperatorPolynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("OperatorPolynomial::pow: n < 0");
  OperatorPolynomial r = constant(1.0, hbar_);
  for (int i = 0; i < n; ++i) r = multiply(r, *this);
  return r;
}

bool OperatorPolynomial::operator==(const OperatorPolynomial& rhs) const {
  return hbar_ == rhs.hbar_ && terms_ == rhs.terms_;
}

double OperatorPolynomial::max_relative_deviation(
    const OperatorPolynomial& rhs) const {
  check_same_hbar(*this, rhs);
  const double scale =
      std::max(max_abs_coefficient(), rhs.max_abs_coefficient());
  if (scale == 0.0) return 0.0;
  double dev = 0.0;
  for (const auto& [key, c] : terms_) {
    dev = std::max(dev, std::abs(c - rhs.coefficient(key)));
  }
  for (const auto& [key, c] : rhs.terms_) {
    dev = std::max(dev, std::abs(c - coefficient(key)));
  }
  return dev / scale;
}

bool OperatorPolynomial::approx_equal(const OperatorPolynomial& rhs,
                                      double rel_tol) const {
  return max_relative_deviation(rhs) <= rel_tol;
}

OperatorPolynomial operator+(OperatorPolynomial lhs,
                             const OperatorPolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

OperatorPolynomial operator-(OperatorPolynomial lhs,
                             const OperatorPolynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

OperatorPolynomial operator*(OperatorPolynomial lhs, Complex scalar) {
  lhs *= scalar;
  return lhs;
}

OperatorPolynomial operator*(Complex scalar, OperatorPolynomial rhs) {
  rhs *= scalar;
  return rhs;
}

// Product of two normal-ordered monomials. Moving pi_q^c1 across q^a2 uses
//   pi_q^c q^a = sum_k k! C(a,k) C(c,k) (-i hbar)^k q^(a-k) pi_q^(c-k),
// and likewise pi_p^d1 across p^b2; all remaining factor pairs commute.
OperatorPolynomial multiply(const OperatorPolynomial& lhs,
                            const OperatorPolynomial& rhs) {
  check_same_hbar(lhs, rhs);
  const Complex mih(0.0, -lhs.hbar());  // -i*hbar
  OperatorPolynomial out(lhs.hbar());
  for (const auto& [kl, cl] : lhs.terms_) {
    const auto [a1, b1, c1, d1] = kl;
    for (const auto& [kr, cr] : rhs.terms_) {
      const auto [a2, b2, c2, d2] = kr;
      const Complex base = cl * cr;
      Complex qfac = 1.0;
      for (int k = 0; k <= std::min(a2, c1); ++k) {
        if (k > 0) qfac *= mih;
        const Complex wq = factorial(k) * binomial(a2, k) * binomial(c1, k) * qfac;
        Complex pfac = 1.0;
        for (int l = 0; l <= std::min(b2, d1); ++l) {
          if (l > 0) pfac *= mih;
          const Complex wp =
              factorial(l) * binomial(b2, l) * binomial(d1, l) * pfac;
          out.add_term({a1 + a2 - k, b1 + b2 - l, c1 + c2 - k, d1 + d2 - l},
                       base * wq * wp);
        }
      }
    }
  }
  return out;
}

OperatorPolynomial operator*(const OperatorPolynomial& lhs,
                             const OperatorPolynomial& rhs) {
  return multiply(lhs, rhs);
}

OperatorPolynomial commutator(const OperatorPolynomial& lhs,
                              const OperatorPolynomial& rhs) {
  return multiply(lhs, rhs) - multiply(rhs, lhs);
}

}  // namespace eps
