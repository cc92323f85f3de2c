#pragma once

#include <functional>
#include <map>

#include "eps/algebra.hpp"
#include "eps/gauges.hpp"

namespace eps {

/** Commuting polynomial in (q,p), keyed by exponents (a,b) -> coefficient. */
struct QpPolynomial {
  std::map<std::array<int, 2>, Complex> terms;

  void add(int a, int b, Complex coeff);
  Complex eval(double q, double p) const;
  int degree() const;
  bool empty() const { return terms.empty(); }

  bool approx_equal(const QpPolynomial& rhs, double rel_tol) const;
};

enum class HamiltonianKind { KanaiAGauge, KanaiPhiGauge, CustomPolynomial };

/**
 * A time-dependent Hamiltonian H(p,q,t) given by its (q,p)-monomial
 * coefficients, evaluable at any time. The two Kanai kinds realize the
 * damped charged particle in the A- and phi-gauge; CustomPolynomial wraps a
 * caller-supplied coefficient function.
 */
class HamiltonianSpec {
 public:
  static HamiltonianSpec kanai_a_gauge(PhysicalParams params,
                                       HarmonicDrive drive);
  static HamiltonianSpec kanai_phi_gauge(PhysicalParams params,
                                         HarmonicDrive drive);
  static HamiltonianSpec custom(std::function<QpPolynomial(double)> coeffs,
                                PhysicalParams params);

  HamiltonianKind kind() const { return kind_; }
  const PhysicalParams& params() const { return params_; }
  const HarmonicDrive& drive() const { return drive_; }

  /** H(p,q,t) as a (q,p)-polynomial at time t. Deterministic in t. */
  QpPolynomial qp_polynomial(double t) const;

 private:
  HamiltonianSpec(HamiltonianKind kind, PhysicalParams params,
                  HarmonicDrive drive)
      : kind_(kind), params_(params), drive_(drive) {}

  HamiltonianKind kind_;
  PhysicalParams params_;
  HarmonicDrive drive_;
  std::function<QpPolynomial(double)> custom_;
};

/**
 * Extended Hamiltonian H(p+pi_q, q) - H(p, q+pi_p), built from the finite
 * single-variable shift series with the pi factors rightmost.
 */
OperatorPolynomial sn_hamiltonian_from_qp(const QpPolynomial& h, double hbar);
OperatorPolynomial build_sn_hamiltonian(const HamiltonianSpec& h, double t);

/**
 * Wigner extended Hamiltonian H(p+pi_q/2, q-pi_p/2) - H(p-pi_q/2, q+pi_p/2),
 * normal ordered. For H of (q,p)-degree <= 2 the even shift orders cancel and
 * the result is degree <= 1 in {pi_q, pi_p}.
 */
OperatorPolynomial wigner_hamiltonian_from_qp(const QpPolynomial& h,
                                              double hbar);
OperatorPolynomial build_wigner_hamiltonian(const HamiltonianSpec& h, double t);

/**
 * Adjoint action Ad_U for U = exp(X), X = -(i s / 2 hbar) pi_q pi_p, with the
 * sign s fixed so that Ad_U maps the SN Hamiltonian onto the Wigner one.
 * Computed both by the derived linear substitution and by the truncated
 * commutator series; throws if the two routes disagree beyond 1e-12 relative
 * or the series fails to converge within 64 terms.
 */
OperatorPolynomial conjugate_by_wigner_unitary(const OperatorPolynomial& a);

/** Sign convention chosen for the unitary's generator (+1 or -1). */
int wigner_unitary_sign();

/** Advection velocities (dq/dt, dp/dt) of the first-order transport PDE. */
struct TransportPolynomials {
  QpPolynomial vq;
  QpPolynomial vp;
};

/**
 * Reads the advection velocity fields off a degree-<=1-in-pi Wigner
 * Hamiltonian via pi_q = -i hbar d/dq, pi_p = -i hbar d/dp. The result
 * carries no hbar dependence. Throws for generators that are not pure
 * first-order transport.
 */
TransportPolynomials transport_coefficients(const OperatorPolynomial& hw);

}  // namespace eps
