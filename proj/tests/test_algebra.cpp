#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brute_force_algebra.hpp"
#include "eps/algebra.hpp"
#include "eps/hamiltonian.hpp"

using eps::Complex;
using eps::OperatorPolynomial;

namespace {

const double kHbar = 1.0;

OperatorPolynomial Q() { return OperatorPolynomial::q(kHbar); }
OperatorPolynomial P() { return OperatorPolynomial::p(kHbar); }
OperatorPolynomial PiQ() { return OperatorPolynomial::pi_q(kHbar); }
OperatorPolynomial PiP() { return OperatorPolynomial::pi_p(kHbar); }
OperatorPolynomial C(Complex v) { return OperatorPolynomial::constant(v, kHbar); }

OperatorPolynomial random_integer_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, 2);
  OperatorPolynomial poly(kHbar);
  for (int term = 0; term < 4; ++term) {
    eps::MonomialKey key{expo(rng), expo(rng), expo(rng), expo(rng)};
    if (key[0] + key[1] + key[2] + key[3] > 4) continue;
    const int c = coeff(rng);
    if (c != 0) {
      poly += OperatorPolynomial::monomial(key, Complex(c), kHbar);
    }
  }
  return poly;
}

}  // namespace

TEST_CASE("reordering identities") {
  // pi_q q = q pi_q - i hbar
  auto lhs = PiQ() * Q();
  auto expected = Q() * PiQ();
  // build q*pi_q directly as a monomial to avoid relying on the multiply
  expected = OperatorPolynomial::monomial({1, 0, 1, 0}, 1.0, kHbar);
  expected += C(Complex(0.0, -kHbar));
  CHECK(lhs == expected);

  // pi_q^2 q^2 = q^2 pi_q^2 - 4 i hbar q pi_q - 2 hbar^2
  auto lhs2 = PiQ().pow(2) * Q().pow(2);
  OperatorPolynomial exp2(kHbar);
  exp2 += OperatorPolynomial::monomial({2, 0, 2, 0}, 1.0, kHbar);
  exp2 += OperatorPolynomial::monomial({1, 0, 1, 0}, Complex(0.0, -4.0 * kHbar),
                                       kHbar);
  exp2 += C(Complex(-2.0 * kHbar * kHbar, 0.0));
  CHECK(lhs2 == exp2);

  // commuting pairs keep plain monomial products
  CHECK(P() * Q() == OperatorPolynomial::monomial({1, 1, 0, 0}, 1.0, kHbar));
  CHECK(PiP() * Q() == OperatorPolynomial::monomial({1, 0, 0, 1}, 1.0, kHbar));
  CHECK(PiP() * PiQ() == OperatorPolynomial::monomial({0, 0, 1, 1}, 1.0, kHbar));
}

TEST_CASE("canonical commutators") {
  const auto minus_ih = C(Complex(0.0, -kHbar));
  CHECK(eps::commutator(PiQ(), Q()) == minus_ih);
  CHECK(eps::commutator(PiP(), P()) == minus_ih);
  CHECK(eps::commutator(Q(), P()).is_zero());
  CHECK(eps::commutator(PiQ(), PiP()).is_zero());
  CHECK(eps::commutator(PiQ(), P()).is_zero());
  CHECK(eps::commutator(PiP(), Q()).is_zero());

  // a composite one: [pi_q pi_p, q] = -i hbar pi_p
  auto lhs = eps::commutator(PiQ() * PiP(), Q());
  auto rhs = PiP() * Complex(0.0, -kHbar);
  CHECK(lhs == rhs);
}

TEST_CASE("multiply matches brute-force normal ordering") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_integer_poly(rng);
    const auto b = random_integer_poly(rng);
    const auto fast = eps::multiply(a, b);
    const auto slow = eps_test::brute_force_multiply(a, b);
    CHECK(fast.approx_equal(slow, 1e-12));
  }
}

TEST_CASE("algebraic properties on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_integer_poly(rng);
    const auto b = random_integer_poly(rng);
    const auto c = random_integer_poly(rng);

    // antisymmetry
    auto ab = eps::commutator(a, b);
    auto ba = eps::commutator(b, a);
    CHECK((ab + ba).is_zero());

    // associativity of the product
    CHECK((a * b) * c == a * (b * c));

    // bilinearity
    const Complex s(2.0, -1.0);
    CHECK(eps::commutator(a * s + b, c) ==
          eps::commutator(a, c) * s + eps::commutator(b, c));

    // Jacobi identity
    auto jac = eps::commutator(a, eps::commutator(b, c)) +
               eps::commutator(b, eps::commutator(c, a)) +
               eps::commutator(c, eps::commutator(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("mismatched hbar is rejected") {
  auto a = OperatorPolynomial::q(1.0);
  auto b = OperatorPolynomial::p(2.0);
  CHECK_THROWS_AS(eps::multiply(a, b), std::invalid_argument);
  CHECK_THROWS_AS(a += b, std::invalid_argument);
}

TEST_CASE("extended Hamiltonian: kinetic and linear terms") {
  const double m = 1.5;
  eps::QpPolynomial kinetic;
  kinetic.add(0, 2, 1.0 / (2.0 * m));
  auto hsn = eps::sn_hamiltonian_from_qp(kinetic, kHbar);
  OperatorPolynomial expected(kHbar);
  expected += OperatorPolynomial::monomial({0, 1, 1, 0}, 1.0 / m, kHbar);
  expected += OperatorPolynomial::monomial({0, 0, 2, 0}, 1.0 / (2.0 * m), kHbar);
  CHECK(hsn.approx_equal(expected, 1e-14));

  eps::QpPolynomial linear_q;
  linear_q.add(1, 0, 1.0);
  auto hq = eps::sn_hamiltonian_from_qp(linear_q, kHbar);
  CHECK(hq == PiP() * Complex(-1.0));

  eps::QpPolynomial quad_q;
  const double k = 0.8;
  quad_q.add(2, 0, 0.5 * k);
  auto hk = eps::sn_hamiltonian_from_qp(quad_q, kHbar);
  OperatorPolynomial expk(kHbar);
  expk += OperatorPolynomial::monomial({1, 0, 0, 1}, -k, kHbar);
  expk += OperatorPolynomial::monomial({0, 0, 0, 2}, -0.5 * k, kHbar);
  CHECK(hk.approx_equal(expk, 1e-14));
}

TEST_CASE("extended Hamiltonian: cross-check against operator products") {
  // H(p+pi_q, q) with q's on the left equals q^a (p+pi_q)^b as an operator
  // product; H(p, q+pi_p) with the pi's rightmost equals p^b (q+pi_p)^a.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> expo(0, 3);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    eps::QpPolynomial h;
    OperatorPolynomial oracle(kHbar);
    for (int term = 0; term < 3; ++term) {
      const int a = expo(rng);
      const int b = expo(rng);
      const Complex c(coeff(rng), coeff(rng));
      h.add(a, b, c);
      auto qa = OperatorPolynomial::monomial({a, 0, 0, 0}, 1.0, kHbar);
      auto pb = OperatorPolynomial::monomial({0, b, 0, 0}, 1.0, kHbar);
      auto p_plus_piq = (P() + PiQ()).pow(b);
      auto q_plus_pip = (Q() + PiP()).pow(a);
      oracle += (qa * p_plus_piq - pb * q_plus_pip) * c;
    }
    const auto hsn = eps::sn_hamiltonian_from_qp(h, kHbar);
    CHECK(hsn.approx_equal(oracle, 1e-12));
  }
}

TEST_CASE("Wigner Hamiltonian: closed forms") {
  const double m = 2.0;
  eps::QpPolynomial kinetic;
  kinetic.add(0, 2, 1.0 / (2.0 * m));
  auto hw = eps::wigner_hamiltonian_from_qp(kinetic, kHbar);
  CHECK(hw == OperatorPolynomial::monomial({0, 1, 1, 0}, 1.0 / m, kHbar));

  eps::QpPolynomial linear_q;
  linear_q.add(1, 0, 1.0);
  CHECK(eps::wigner_hamiltonian_from_qp(linear_q, kHbar) == PiP() * Complex(-1.0));

  // harmonic term 0.5 k q^2 -> -k q pi_p
  eps::QpPolynomial quad_q;
  quad_q.add(2, 0, 0.5 * 3.0);
  CHECK(eps::wigner_hamiltonian_from_qp(quad_q, kHbar) ==
        OperatorPolynomial::monomial({1, 0, 0, 1}, -3.0, kHbar));

  // cross term b q p -> b (q pi_q - p pi_p)
  eps::QpPolynomial cross;
  cross.add(1, 1, 0.7);
  OperatorPolynomial expc(kHbar);
  expc += OperatorPolynomial::monomial({1, 0, 1, 0}, 0.7, kHbar);
  expc += OperatorPolynomial::monomial({0, 1, 0, 1}, -0.7, kHbar);
  CHECK(eps::wigner_hamiltonian_from_qp(cross, kHbar).approx_equal(expc, 1e-14));
}

TEST_CASE("Wigner Hamiltonian of quadratic H has pi-degree <= 1") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    eps::QpPolynomial h;
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; a + b <= 2; ++b) {
        h.add(a, b, Complex(coeff(rng), coeff(rng)));
      }
    }
    const auto hw = eps::wigner_hamiltonian_from_qp(h, kHbar);
    CHECK(hw.pi_degree() <= 1);
  }
}

TEST_CASE("unitary conjugation maps SN picture onto Wigner picture") {
  // generators stay fixed
  CHECK(eps::conjugate_by_wigner_unitary(PiQ()) == PiQ());
  CHECK(eps::conjugate_by_wigner_unitary(PiP()) == PiP());

  // q and p pick up a half shift in the conjugate pi
  const auto ad_q = eps::conjugate_by_wigner_unitary(Q());
  const auto ad_p = eps::conjugate_by_wigner_unitary(P());
  const Complex shift_q = ad_q.coefficient({0, 0, 0, 1});
  const Complex shift_p = ad_p.coefficient({0, 0, 1, 0});
  CHECK(ad_q.coefficient({1, 0, 0, 0}) == Complex(1.0));
  CHECK(ad_p.coefficient({0, 1, 0, 0}) == Complex(1.0));
  CHECK(std::abs(shift_q) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(shift_p) == doctest::Approx(0.5).epsilon(1e-14));

  // full Hamiltonians, both gauges, several times
  eps::PhysicalParams params;
  params.alpha = 0.5;
  eps::HarmonicDrive drive;
  drive.amplitude = 0.1;
  drive.omega = 2.0;
  const auto spec_a = eps::HamiltonianSpec::kanai_a_gauge(params, drive);
  const auto spec_phi = eps::HamiltonianSpec::kanai_phi_gauge(params, drive);
  for (double t : {0.0, 0.4, 1.3, 2.9, 7.7}) {
    for (const auto* spec : {&spec_a, &spec_phi}) {
      const auto hsn = eps::build_sn_hamiltonian(*spec, t);
      const auto hw = eps::build_wigner_hamiltonian(*spec, t);
      const auto mapped = eps::conjugate_by_wigner_unitary(hsn);
      CHECK(mapped.max_relative_deviation(hw) < 1e-12);
    }
  }
}

TEST_CASE("unitary conjugation on random quadratic Hamiltonians") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    eps::QpPolynomial h;
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; a + b <= 2; ++b) {
        h.add(a, b, Complex(coeff(rng), coeff(rng)));
      }
    }
    const auto hsn = eps::sn_hamiltonian_from_qp(h, kHbar);
    const auto hw = eps::wigner_hamiltonian_from_qp(h, kHbar);
    const auto mapped = eps::conjugate_by_wigner_unitary(hsn);
    CHECK(mapped.max_relative_deviation(hw) < 1e-12);
  }
  CHECK((eps::wigner_unitary_sign() == 1 || eps::wigner_unitary_sign() == -1));
}

TEST_CASE("transport readoff") {
  eps::PhysicalParams params;
  params.m = 1.3;
  params.alpha = 0.5;
  eps::HarmonicDrive drive;
  drive.amplitude = 0.1;
  drive.omega = 2.0;

  const double t = 0.9;
  {
    const auto spec = eps::HamiltonianSpec::kanai_phi_gauge(params, drive);
    const auto tp = eps::transport_coefficients(
        eps::build_wigner_hamiltonian(spec, t));
    const double decay = std::exp(-params.alpha * t);
    const double field = drive.field(t).real();
    // vq = p e^{-alpha t} / m, vp = e E(t) e^{alpha t}
    CHECK(tp.vq.eval(0.0, 2.0).real() ==
          doctest::Approx(2.0 * decay / params.m).epsilon(1e-13));
    CHECK(tp.vq.eval(5.0, 2.0).real() ==
          doctest::Approx(2.0 * decay / params.m).epsilon(1e-13));
    CHECK(tp.vp.eval(3.0, -1.0).real() ==
          doctest::Approx(params.e * field / decay).epsilon(1e-13));
  }
  {
    const auto spec = eps::HamiltonianSpec::kanai_a_gauge(params, drive);
    const auto tp = eps::transport_coefficients(
        eps::build_wigner_hamiltonian(spec, t));
    const double decay = std::exp(-params.alpha * t);
    const double a_pot = eps::a_gauge_potential(drive, params, t).real();
    const double expected =
        decay * (2.0 - (params.e / params.c) * a_pot) / params.m;
    CHECK(tp.vq.eval(0.0, 2.0).real() == doctest::Approx(expected).epsilon(1e-13));
    CHECK(tp.vp.empty());
  }
}

TEST_CASE("transport readoff is hbar independent") {
  eps::PhysicalParams params;
  params.alpha = 0.5;
  eps::HarmonicDrive drive;
  drive.amplitude = 0.1;
  drive.omega = 2.0;
  eps::QpPolynomial h;
  h.add(0, 2, 0.4);
  h.add(2, 0, 0.3);
  h.add(1, 1, -0.2);
  h.add(1, 0, 0.9);
  const auto tp1 = eps::transport_coefficients(
      eps::wigner_hamiltonian_from_qp(h, 1.0));
  const auto tp2 = eps::transport_coefficients(
      eps::wigner_hamiltonian_from_qp(h, 10.0));
  CHECK(tp1.vq.approx_equal(tp2.vq, 1e-13));
  CHECK(tp1.vp.approx_equal(tp2.vp, 1e-13));
}

TEST_CASE("non-transport generators are rejected") {
  CHECK_THROWS_AS(eps::transport_coefficients(PiQ().pow(2)), std::domain_error);
  CHECK_THROWS_AS(eps::transport_coefficients(Q()), std::domain_error);
  CHECK_THROWS_AS(
      eps::transport_coefficients(
          OperatorPolynomial::monomial({0, 0, 1, 1}, 1.0, kHbar)),
      std::domain_error);
}
