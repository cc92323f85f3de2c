#include "eps/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace eps {

void QpPolynomial::add(int a, int b, Complex coeff) {
  if (a < 0 || b < 0) throw std::invalid_argument("QpPolynomial: negative exponent");
  auto key = std::array<int, 2>{a, b};
  auto it = terms.find(key);
  if (it == terms.end()) {
    if (coeff != Complex(0.0)) terms.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == Complex(0.0)) terms.erase(it);
}

Complex QpPolynomial::eval(double q, double p) const {
  Complex r = 0.0;
  for (const auto& [key, c] : terms) {
    r += c * std::pow(q, key[0]) * std::pow(p, key[1]);
  }
  return r;
}

int QpPolynomial::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms) d = std::max(d, key[0] + key[1]);
  return d;
}

bool QpPolynomial::approx_equal(const QpPolynomial& rhs, double rel_tol) const {
  double scale = 0.0;
  for (const auto& [k, c] : terms) scale = std::max(scale, std::abs(c));
  for (const auto& [k, c] : rhs.terms) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return true;
  double dev = 0.0;
  auto get = [](const QpPolynomial& poly, const std::array<int, 2>& k) {
    auto it = poly.terms.find(k);
    return it == poly.terms.end() ? Complex(0.0) : it->second;
  };
  for (const auto& [k, c] : terms) dev = std::max(dev, std::abs(c - get(rhs, k)));
  for (const auto& [k, c] : rhs.terms) dev = std::max(dev, std::abs(c - get(*this, k)));
  return dev / scale <= rel_tol;
}

HamiltonianSpec HamiltonianSpec::kanai_a_gauge(PhysicalParams params,
                                               HarmonicDrive drive) {
  params.validate();
  drive.validate();
  return HamiltonianSpec(HamiltonianKind::KanaiAGauge, params, drive);
}

HamiltonianSpec HamiltonianSpec::kanai_phi_gauge(PhysicalParams params,
                                                 HarmonicDrive drive) {
  params.validate();
  drive.validate();
  return HamiltonianSpec(HamiltonianKind::KanaiPhiGauge, params, drive);
}

HamiltonianSpec HamiltonianSpec::custom(
    std::function<QpPolynomial(double)> coeffs, PhysicalParams params) {
  params.validate();
  HamiltonianSpec spec(HamiltonianKind::CustomPolynomial, params,
                       HarmonicDrive{});
  spec.custom_ = std::move(coeffs);
  return spec;
}

QpPolynomial HamiltonianSpec::qp_polynomial(double t) const {
  QpPolynomial h;
  const double damp = std::exp(-params_.alpha * t);
  switch (kind_) {
    case HamiltonianKind::KanaiAGauge: {
      // (1/2m) [p - (e/c) A(t)]^2 e^{-alpha t}, phi = 0.
      const Complex ea_over_c =
          (params_.e / params_.c) * a_gauge_potential(drive_, params_, t);
      h.add(0, 2, damp / (2.0 * params_.m));
      h.add(0, 1, -ea_over_c * damp / params_.m);
      h.add(0, 0, ea_over_c * ea_over_c * damp / (2.0 * params_.m));
      break;
    }
    case HamiltonianKind::KanaiPhiGauge: {
      // p^2 e^{-alpha t}/2m + e phi(q,t) e^{alpha t}, phi = -q E(t).
      h.add(0, 2, damp / (2.0 * params_.m));
      h.add(1, 0, -params_.e * drive_.field(t) * std::exp(params_.alpha * t));
      break;
    }
    case HamiltonianKind::CustomPolynomial:
      h = custom_(t);
      break;
  }
  return h;
}

OperatorPolynomial sn_hamiltonian_from_qp(const QpPolynomial& h, double hbar) {
  OperatorPolynomial out(hbar);
  for (const auto& [key, c] : h.terms) {
    const auto [a, b] = key;
    // sum_n (1/n!) d^n H/dp^n pi_q^n  -  sum_n (1/n!) d^n H/dq^n pi_p^n
    for (int n = 1; n <= b; ++n) {
      out += OperatorPolynomial::monomial({a, b - n, n, 0}, c * binomial(b, n),
                                          hbar);
    }
    for (int n = 1; n <= a; ++n) {
      out -= OperatorPolynomial::monomial({a - n, b, 0, n}, c * binomial(a, n),
                                          hbar);
    }
  }
  return out;
}

OperatorPolynomial build_sn_hamiltonian(const HamiltonianSpec& h, double t) {
  return sn_hamiltonian_from_qp(h.qp_polynomial(t), h.params().hbar);
}

OperatorPolynomial wigner_hamiltonian_from_qp(const QpPolynomial& h,
                                              double hbar) {
  OperatorPolynomial out(hbar);
  for (const auto& [key, c] : h.terms) {
    const auto [a, b] = key;
    // Double shift series with pi factors rightmost; terms with j+n even
    // cancel between the two half-shifted copies.
    for (int j = 0; j <= a; ++j) {
      for (int n = 0; n <= b; ++n) {
        if ((j + n) % 2 == 0) continue;
        const double sign = (n % 2 == 1) ? 2.0 : -2.0;
        const Complex w = c * binomial(a, j) * binomial(b, n) * sign *
                          std::pow(0.5, j + n);
        out += OperatorPolynomial::monomial({a - j, b - n, n, j}, w, hbar);
      }
    }
  }
  return out;
}

OperatorPolynomial build_wigner_hamiltonian(const HamiltonianSpec& h, double t) {
  return wigner_hamiltonian_from_qp(h.qp_polynomial(t), h.params().hbar);
}

namespace {

// Truncated series sum_n ad_X^n(a)/n!.
OperatorPolynomial adjoint_series(const OperatorPolynomial& generator,
                                  const OperatorPolynomial& a) {
  OperatorPolynomial result = a;
  OperatorPolynomial term = a;
  const double scale = std::max(a.max_abs_coefficient(), 1e-300);
  for (int n = 1; n <= 64; ++n) {
    term = commutator(generator, term) * Complex(1.0 / n);
    if (term.is_zero()) return result;
    result += term;
    if (term.max_abs_coefficient() < 1e-12 * scale) return result;
  }
  throw std::runtime_error(
      "conjugate_by_wigner_unitary: adjoint series did not converge within 64 "
      "terms");
}

OperatorPolynomial unitary_generator(int sign, double hbar) {
  // X = -(i*sign / 2 hbar) pi_q pi_p
  return OperatorPolynomial::monomial({0, 0, 1, 1},
                                      Complex(0.0, -0.5 * sign / hbar), hbar);
}

int determine_sign() {
  // Fix the generator sign empirically on a reference quadratic Hamiltonian:
  // the admissible sign is the one whose conjugation maps the SN Hamiltonian
  // onto the Wigner one.
  const double hbar = 1.0;
  QpPolynomial h;
  h.add(0, 2, 0.5);
  h.add(2, 0, 0.5);
  h.add(1, 1, 0.25);
  const OperatorPolynomial hsn = sn_hamiltonian_from_qp(h, hbar);
  const OperatorPolynomial hw = wigner_hamiltonian_from_qp(h, hbar);
  for (int sign : {+1, -1}) {
    const OperatorPolynomial conj =
        adjoint_series(unitary_generator(sign, hbar), hsn);
    if (conj.approx_equal(hw, 1e-12)) return sign;
  }
  throw std::logic_error(
      "wigner_unitary_sign: neither generator sign reproduces the Wigner "
      "Hamiltonian");
}

}  // namespace

int wigner_unitary_sign() {
  static const int sign = determine_sign();
  return sign;
}

OperatorPolynomial conjugate_by_wigner_unitary(const OperatorPolynomial& a) {
  const double hbar = a.hbar();
  const OperatorPolynomial x = unitary_generator(wigner_unitary_sign(), hbar);

  // Route (i): derive the substitution images of the generators from their
  // (exactly terminating) commutator series, then extend as a homomorphism.
  const OperatorPolynomial q_img = adjoint_series(x, OperatorPolynomial::q(hbar));
  const OperatorPolynomial p_img = adjoint_series(x, OperatorPolynomial::p(hbar));
  OperatorPolynomial substituted(hbar);
  for (const auto& [key, c] : a.terms()) {
    OperatorPolynomial term = OperatorPolynomial::constant(c, hbar);
    term = term * q_img.pow(key[0]);
    term = term * p_img.pow(key[1]);
    term = term * OperatorPolynomial::pi_q(hbar).pow(key[2]);
    term = term * OperatorPolynomial::pi_p(hbar).pow(key[3]);
    substituted += term;
  }

  // Route (ii): the truncated series on the full operand.
  const OperatorPolynomial series = adjoint_series(x, a);

  if (!substituted.approx_equal(series, 1e-12)) {
    throw std::runtime_error(
        "conjugate_by_wigner_unitary: substitution and series routes disagree");
  }
  return substituted;
}

TransportPolynomials transport_coefficients(const OperatorPolynomial& hw) {
  TransportPolynomials field;
  for (const auto& [key, c] : hw.terms()) {
    const int pi_deg = key[2] + key[3];
    if (pi_deg != 1) {
      throw std::domain_error(
          "transport_coefficients: non-transport generator (term with "
          "pi-degree != 1); use the residual-check path");
    }
    if (key[2] == 1) {
      field.vq.add(key[0], key[1], c);
    } else {
      field.vp.add(key[0], key[1], c);
    }
  }
  return field;
}

}  // namespace eps
