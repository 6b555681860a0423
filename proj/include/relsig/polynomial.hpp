#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "relsig/binomial.hpp"
#include "relsig/errors.hpp"
#include "relsig/rational.hpp"

namespace relsig {

// Dense univariate polynomial with exact rational coefficients.
//
// degree_bound is the ambient degree, not the effective one: trailing zero
// coefficients are kept. The distinction matters because the n-reflection
// reverses the coefficient list of the *ambient* degree-n polynomial, so two
// equal polynomial values can reflect to different results under different
// bounds.
class Polynomial {
 public:
  Polynomial() : coeffs_(1) {}

  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
  }

  static Polynomial zero(int degree_bound) {
    return Polynomial(std::vector<Rational>(static_cast<std::size_t>(degree_bound) + 1));
  }

  static Polynomial constant(Rational value) {
    std::vector<Rational> c(1);
    c[0] = std::move(value);
    return Polynomial(std::move(c));
  }

  static Polynomial monomial(Rational coeff, int power) {
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
    c[static_cast<std::size_t>(power)] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Largest power with a nonzero coefficient; -1 for the zero polynomial.
  int effective_degree() const {
    for (int k = degree_bound(); k >= 0; --k)
      if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
    return -1;
  }

  const Rational& coeff(int k) const {
    static const Rational kZero;
    if (k < 0 || k > degree_bound()) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  void set_coeff(int k, Rational value) {
    if (k > degree_bound()) coeffs_.resize(static_cast<std::size_t>(k) + 1);
    coeffs_[static_cast<std::size_t>(k)] = std::move(value);
  }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Same value, new ambient degree. Rejects bounds below the effective degree.
  Polynomial with_degree_bound(int n) const {
    if (n < effective_degree())
      throw ValidationError(ValidationError::Kind::bad_argument,
                            "degree bound " + std::to_string(n) +
                                " is below the effective degree " +
                                std::to_string(effective_degree()));
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= std::min(n, degree_bound()); ++k) c[static_cast<std::size_t>(k)] = coeff(k);
    return Polynomial(std::move(c));
  }

  // Exact Horner evaluation.
  Rational operator()(const Rational& x) const {
    Rational acc;
    for (int k = degree_bound(); k >= 0; --k) acc = acc * x + coeffs_[static_cast<std::size_t>(k)];
    return acc;
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
  }

  Polynomial& operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }

  // Value equality: degree bounds and trailing zeros are ignored.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    const int top = std::max(a.degree_bound(), b.degree_bound());
    for (int k = 0; k <= top; ++k)
      if (a.coeff(k) != b.coeff(k)) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies x^k; size = degree_bound + 1
};

inline Polynomial poly_derivative(const Polynomial& p) {
  const int bound = std::max(p.degree_bound() - 1, 0);
  std::vector<Rational> c(static_cast<std::size_t>(bound) + 1);
  for (int k = 1; k <= p.degree_bound(); ++k)
    c[static_cast<std::size_t>(k - 1)] = p.coeff(k) * k;
  return Polynomial(std::move(c));
}

// The antiderivative q with q(0) = 0 and q' = p.
inline Polynomial poly_antiderivative_from_zero(const Polynomial& p) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree_bound()) + 2);
  for (int k = 0; k <= p.degree_bound(); ++k)
    c[static_cast<std::size_t>(k + 1)] = p.coeff(k) / Rational(k + 1);
  return Polynomial(std::move(c));
}

// n-reflection: swaps the coefficients of x^k and x^(n-k). Equals x^n p(1/x).
inline Polynomial poly_reflect(const Polynomial& p, int n) {
  if (p.effective_degree() > n)
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "cannot take the " + std::to_string(n) +
                              "-reflection of a polynomial of degree " +
                              std::to_string(p.effective_degree()));
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = p.coeff(n - k);
  return Polynomial(std::move(c));
}

// p(a*x + b), expanded exactly via binomial rows; keeps p's degree bound.
inline Polynomial poly_compose_affine(const Polynomial& p, const Rational& a, const Rational& b) {
  const int n = p.degree_bound();
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  // Powers of a and b up to n.
  std::vector<Rational> apow(static_cast<std::size_t>(n) + 1), bpow(apow);
  apow[0] = 1;
  bpow[0] = 1;
  for (int k = 1; k <= n; ++k) {
    apow[static_cast<std::size_t>(k)] = apow[static_cast<std::size_t>(k - 1)] * a;
    bpow[static_cast<std::size_t>(k)] = bpow[static_cast<std::size_t>(k - 1)] * b;
  }
  for (int k = 0; k <= n; ++k) {
    if (p.coeff(k) == 0) continue;
    const auto& row = binomial_row(k);
    for (int j = 0; j <= k; ++j) {
      out[static_cast<std::size_t>(j)] +=
          p.coeff(k) * Rational(row[static_cast<std::size_t>(j)]) *
          apow[static_cast<std::size_t>(j)] * bpow[static_cast<std::size_t>(k - j)];
    }
  }
  return Polynomial(std::move(out));
}

inline Polynomial poly_shift_plus_one(const Polynomial& p) {
  return poly_compose_affine(p, Rational(1), Rational(1));
}

inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

// Integral of t^(n-k) (1-t)^k over [0,1] = 1 / ((n+1) C(n,k)).
inline Rational beta_integral(int n, int k) {
  if (k < 0 || k > n)
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "beta_integral requires 0 <= k <= n");
  return Rational(Int(1), Int(n + 1) * binomial(n, k));
}

// Polynomial in t whose coefficients are polynomials in x.
class BiPolynomial {
 public:
  BiPolynomial() : coeffs_t_(1) {}

  explicit BiPolynomial(std::vector<Polynomial> coeffs_in_t) : coeffs_t_(std::move(coeffs_in_t)) {
    if (coeffs_t_.empty()) coeffs_t_.resize(1);
  }

  int degree_bound_t() const { return static_cast<int>(coeffs_t_.size()) - 1; }

  int effective_degree_t() const {
    for (int k = degree_bound_t(); k >= 0; --k)
      if (coeffs_t_[static_cast<std::size_t>(k)].effective_degree() >= 0) return k;
    return -1;
  }

  const Polynomial& coeff_t(int k) const {
    static const Polynomial kZero;
    if (k < 0 || k > degree_bound_t()) return kZero;
    return coeffs_t_[static_cast<std::size_t>(k)];
  }

  void set_coeff_t(int k, Polynomial value) {
    if (k > degree_bound_t()) coeffs_t_.resize(static_cast<std::size_t>(k) + 1);
    coeffs_t_[static_cast<std::size_t>(k)] = std::move(value);
  }

  friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) {
    const int top = std::max(a.degree_bound_t(), b.degree_bound_t());
    for (int k = 0; k <= top; ++k)
      if (a.coeff_t(k) != b.coeff_t(k)) return false;
    return true;
  }
  friend bool operator!=(const BiPolynomial& a, const BiPolynomial& b) { return !(a == b); }

 private:
  std::vector<Polynomial> coeffs_t_;
};

// n-reflection with respect to t: swaps the x-polynomials at t^k and t^(n-k).
inline BiPolynomial bipoly_reflect_in_t(const BiPolynomial& f, int n) {
  if (f.effective_degree_t() > n)
    throw ValidationError(ValidationError::Kind::bad_argument,
                          "cannot take the " + std::to_string(n) +
                              "-reflection in t of a polynomial of t-degree " +
                              std::to_string(f.effective_degree_t()));
  std::vector<Polynomial> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = f.coeff_t(n - k);
  return BiPolynomial(std::move(c));
}

// Integrates t over [0,1] exactly (t^k contributes 1/(k+1)) and sums the
// x-polynomials.
inline Polynomial bipoly_integrate_t_unit(const BiPolynomial& f) {
  Polynomial acc;
  for (int k = 0; k <= f.degree_bound_t(); ++k)
    acc += f.coeff_t(k) * Rational(Int(1), Int(k + 1));
  return acc;
}

}  // namespace relsig
