#pragma once

#include <array>
#include <complex>
#include <map>

namespace eps {

using Complex = std::complex<double>;

/** Exponents (a,b,c,d) of the normal-ordered monomial q^a p^b pi_q^c pi_p^d. */
using MonomialKey = std::array<int, 4>;

/**
 * Normal-ordered noncommutative polynomial over the four extended-phase-space
 * variables {q, p, pi_q, pi_p} with complex coefficients.
 *
 * The only nonzero commutators are [pi_q, q] = [pi_p, p] = -i*hbar; every
 * other pair commutes. Products are normal ordered with q before p before
 * pi_q before pi_p, so two polynomials built from the same expression in
 * different association orders compare equal term by term.
 */
class OperatorPolynomial {
 public:
  using TermMap = std::map<MonomialKey, Complex>;

  explicit OperatorPolynomial(double hbar);

  static OperatorPolynomial constant(Complex value, double hbar);
  static OperatorPolynomial monomial(const MonomialKey& key, Complex coeff,
                                     double hbar);
  static OperatorPolynomial q(double hbar);
  static OperatorPolynomial p(double hbar);
  static OperatorPolynomial pi_q(double hbar);
  static OperatorPolynomial pi_p(double hbar);

  double hbar() const { return hbar_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Complex coefficient(const MonomialKey& key) const;
  /** Largest total degree in pi_q and pi_p over all terms (0 if zero poly). */
  int pi_degree() const;
  /** Largest total degree in q and p over all terms (0 if zero poly). */
  int qp_degree() const;
  double max_abs_coefficient() const;

  OperatorPolynomial& operator+=(const OperatorPolynomial& rhs);
  OperatorPolynomial& operator-=(const OperatorPolynomial& rhs);
  OperatorPolynomial& operator*=(Complex scalar);

  OperatorPolynomial pow(int n) const;

  bool operator==(const OperatorPolynomial& rhs) const;

  /**
   * Coefficient-wise comparison: max |a_k - b_k| over the union of monomials,
   * relative to the larger of the two polynomials' coefficient scales.
   */
  bool approx_equal(const OperatorPolynomial& rhs, double rel_tol) const;
  double max_relative_deviation(const OperatorPolynomial& rhs) const;

 private:
  void add_term(const MonomialKey& key, Complex coeff);
  friend OperatorPolynomial multiply(const OperatorPolynomial&,
                                     const OperatorPolynomial&);
  friend OperatorPolynomial operator+(OperatorPolynomial,
                                      const OperatorPolynomial&);
  friend OperatorPolynomial operator-(OperatorPolynomial,
                                      const OperatorPolynomial&);

  TermMap terms_;
  double hbar_;
};

OperatorPolynomial operator+(OperatorPolynomial lhs,
                             const OperatorPolynomial& rhs);
OperatorPolynomial operator-(OperatorPolynomial lhs,
                             const OperatorPolynomial& rhs);
OperatorPolynomial operator*(OperatorPolynomial lhs, Complex scalar);
OperatorPolynomial operator*(Complex scalar, OperatorPolynomial rhs);

/** Normal-ordered operator product. Throws if the operands' hbar differ. */
OperatorPolynomial multiply(const OperatorPolynomial& lhs,
                            const OperatorPolynomial& rhs);
OperatorPolynomial operator*(const OperatorPolynomial& lhs,
                             const OperatorPolynomial& rhs);

/** [lhs, rhs] = lhs*rhs - rhs*lhs, normal ordered. */
OperatorPolynomial commutator(const OperatorPolynomial& lhs,
                              const OperatorPolynomial& rhs);

double binomial(int n, int k);

}  // namespace eps
