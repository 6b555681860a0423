#pragma once

#include <utility>
#include <vector>

#include "relsig/binomial.hpp"
#include "relsig/convert.hpp"
#include "relsig/errors.hpp"
#include "relsig/polynomial.hpp"
#include "relsig/vectors.hpp"

namespace relsig {

namespace detail {

// Reliability polynomials satisfy h(0) = 0 and h(1) = 1 and have degree <= n.
inline void require_reliability_polynomial(const Polynomial& h, int n, const char* op) {
  if (n < 1)
    throw ValidationError(ValidationError::Kind::precondition,
                          std::string(op) + ": component count must be at least 1");
  if (h.coeff(0) != 0)
    throw ValidationError(ValidationError::Kind::precondition,
                          std::string(op) + ": polynomial must vanish at 0");
  if (h(Rational(1)) != 1)
    throw ValidationError(ValidationError::Kind::precondition,
                          std::string(op) + ": polynomial must equal 1 at 1");
  if (h.effective_degree() > n)
    throw ValidationError(ValidationError::Kind::precondition,
                          std::string(op) + ": polynomial degree exceeds component count");
}

inline std::vector<Polynomial> powers_of_one_minus_x(int top) {
  std::vector<Polynomial> powers;
  powers.reserve(static_cast<std::size_t>(top) + 1);
  powers.push_back(Polynomial::constant(Rational(1)));
  const Polynomial one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
  for (int k = 1; k <= top; ++k) powers.push_back(powers.back() * one_minus_x);
  return powers;
}

// u((t-1)x + 1) as a polynomial in t with x-polynomial coefficients:
// the coefficient of t^j is sum_{k >= j} u_k C(k,j) x^j (1-x)^(k-j).
inline BiPolynomial substitute_affine_in_t(const Polynomial& u) {
  const int top = u.degree_bound();
  const auto ominus = powers_of_one_minus_x(top);
  std::vector<Polynomial> coeffs_t(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) {
    Polynomial acc;
    for (int k = j; k <= top; ++k) {
      if (u.coeff(k) == 0) continue;
      acc += (u.coeff(k) * Rational(binomial(k, j))) * ominus[static_cast<std::size_t>(k - j)];
    }
    coeffs_t[static_cast<std::size_t>(j)] = acc * Polynomial::monomial(Rational(1), j);
  }
  return BiPolynomial(std::move(coeffs_t));
}

}  // namespace detail

// Coefficient extraction: C(n,k) S_k = [x^k] (R^n h)(x+1).
inline TailSignature tail_from_polynomial(const Polynomial& h, int n) {
  detail::require_reliability_polynomial(h, n, "tail_from_polynomial");
  const Polynomial a = poly_shift_plus_one(poly_reflect(h, n));
  std::vector<Rational> tail(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    tail[static_cast<std::size_t>(k)] = a.coeff(k) / Rational(binomial(n, k));
  return TailSignature(n, std::move(tail));
}

// Coefficient extraction: k C(n,k) s_k = [x^(k-1)] (R^(n-1) h')(x+1).
inline SignatureVector signature_from_polynomial(const Polynomial& h, int n) {
  detail::require_reliability_polynomial(h, n, "signature_from_polynomial");
  const Polynomial a = poly_shift_plus_one(poly_reflect(poly_derivative(h), n - 1));
  std::vector<Rational> s(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    s[static_cast<std::size_t>(k - 1)] = a.coeff(k - 1) / (Rational(k) * Rational(binomial(n, k)));
  return SignatureVector(n, std::move(s));
}

// sum_k C(n,k) s_k x^k as the antiderivative of (R^(n-1) h')(x+1).
inline Polynomial binomial_signature_gf(const Polynomial& h, int n) {
  detail::require_reliability_polynomial(h, n, "binomial_signature_gf");
  return poly_antiderivative_from_zero(poly_shift_plus_one(poly_reflect(poly_derivative(h), n - 1)));
}

// Generating function of s by symbolic integration:
//   sum_k s_k x^k = integral over [0,1] of x * R^(n-1)_t((R^(n-1) h')((t-1)x + 1)).
inline Polynomial signature_gf_via_integral(const Polynomial& h, int n) {
  detail::require_reliability_polynomial(h, n, "signature_gf_via_integral");
  const Polynomial reflected = poly_reflect(poly_derivative(h), n - 1);
  BiPolynomial f = detail::substitute_affine_in_t(reflected);
  const Polynomial x = Polynomial::monomial(Rational(1), 1);
  for (int j = 0; j <= f.degree_bound_t(); ++j) f.set_coeff_t(j, f.coeff_t(j) * x);
  return bipoly_integrate_t_unit(bipoly_reflect_in_t(f, n - 1));
}

// Generating function of S:
//   sum_k S_k x^k = integral over [0,1] of (n+1) R^n_t((R^n h)((t-1)x + 1)).
inline Polynomial tail_gf_via_integral(const Polynomial& h, int n) {
  detail::require_reliability_polynomial(h, n, "tail_gf_via_integral");
  const BiPolynomial f = detail::substitute_affine_in_t(poly_reflect(h, n));
  return bipoly_integrate_t_unit(bipoly_reflect_in_t(f, n)) * Rational(n + 1);
}

// Rebuild the signature from its generating function sum s_k x^k.
inline SignatureVector signature_from_gf(const Polynomial& gf, int n, Role role = Role::structural) {
  if (gf.coeff(0) != 0 || gf.effective_degree() > n)
    throw ValidationError(ValidationError::Kind::precondition,
                          "not a signature generating function");
  std::vector<Rational> s(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) s[static_cast<std::size_t>(k - 1)] = gf.coeff(k);
  return SignatureVector(n, std::move(s), role);
}

inline TailSignature tail_from_gf(const Polynomial& gf, int n, Role role = Role::structural) {
  if (gf.effective_degree() > n)
    throw ValidationError(ValidationError::Kind::precondition,
                          "not a tail generating function");
  std::vector<Rational> tail(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) tail[static_cast<std::size_t>(k)] = gf.coeff(k);
  return TailSignature(n, std::move(tail), role);
}

// h(x) from the tail signature. The closed route is the Bernstein sum
//   h(x) = sum_k S_{n-k} C(n,k) x^k (1-x)^(n-k);
// the table route runs the operator recurrence on polynomial-valued cells
//   D_j(x) := x D_{j+1}(x) + (1-x) D_j(x), seeded with D_j = S_{n-j}.
inline Polynomial polynomial_from_tail(const TailSignature& tail, Route route = Route::table) {
  const int n = tail.n();
  if (route == Route::closed) {
    const auto ominus = detail::powers_of_one_minus_x(n);
    const auto& row = binomial_row(n);
    Polynomial h = Polynomial::zero(n);
    for (int k = 0; k <= n; ++k) {
      const Rational weight = tail.at(n - k) * Rational(row[static_cast<std::size_t>(k)]);
      if (weight == 0) continue;
      h += weight * (Polynomial::monomial(Rational(1), k) * ominus[static_cast<std::size_t>(n - k)]);
    }
    return h.with_degree_bound(n);
  }
  if (route == Route::table) {
    const Polynomial x = Polynomial::monomial(Rational(1), 1);
    const Polynomial one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
    std::vector<Polynomial> cells(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
      cells[static_cast<std::size_t>(j)] = Polynomial::constant(tail.at(n - j));
    for (int k = 1; k <= n; ++k)
      for (int j = 0; j <= n - k; ++j)
        cells[static_cast<std::size_t>(j)] = x * cells[static_cast<std::size_t>(j) + 1] +
                                             one_minus_x * cells[static_cast<std::size_t>(j)];
    return cells[0].with_degree_bound(n);
  }
  detail::reject_route("polynomial_from_tail", route);
}

// h'(x) from the signature. Closed route:
//   h'(x) = sum_k s_k k C(n,k) x^(n-k) (1-x)^(k-1);
// table route: d_j(x) := x d_{j+1}(x) + (1-x) d_j(x) on n * s_{n-j+1} seeds,
// with h'(x) = n-fold recursion's top cell.
inline Polynomial derivative_from_signature(const SignatureVector& s, Route route = Route::table) {
  const int n = s.n();
  if (route == Route::closed) {
    const auto ominus = detail::powers_of_one_minus_x(n - 1);
    const auto& row = binomial_row(n);
    Polynomial acc = Polynomial::zero(n - 1);
    for (int k = 1; k <= n; ++k) {
      const Rational weight = s.at(k) * Rational(k) * Rational(row[static_cast<std::size_t>(k)]);
      if (weight == 0) continue;
      acc += weight *
             (Polynomial::monomial(Rational(1), n - k) * ominus[static_cast<std::size_t>(k - 1)]);
    }
    return acc.with_degree_bound(n - 1);
  }
  if (route == Route::table) {
    const Polynomial x = Polynomial::monomial(Rational(1), 1);
    const Polynomial one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
    std::vector<Polynomial> cells(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
      cells[static_cast<std::size_t>(j - 1)] = Polynomial::constant(Rational(n) * s.at(n - j + 1));
    for (int k = 2; k <= n; ++k)
      for (int j = 1; j <= n - k + 1; ++j)
        cells[static_cast<std::size_t>(j - 1)] = x * cells[static_cast<std::size_t>(j)] +
                                                 one_minus_x * cells[static_cast<std::size_t>(j - 1)];
    return cells[0].with_degree_bound(n - 1);
  }
  detail::reject_route("derivative_from_signature", route);
}

// h(x) = sum_k s_k I_x(n-k+1, k), with the regularized beta polynomial
// expanded exactly as I_x(n-k+1, k) = sum_{i=n-k+1}^n C(n,i) x^i (1-x)^(n-i).
inline Polynomial polynomial_from_signature(const SignatureVector& s) {
  const int n = s.n();
  const auto ominus = detail::powers_of_one_minus_x(n);
  const auto& row = binomial_row(n);
  // Partial Bernstein sums, built from the top power down.
  Polynomial h = Polynomial::zero(n);
  Polynomial partial = Polynomial::zero(n);
  for (int k = 1; k <= n; ++k) {
    const int i = n - k + 1;  // new term entering I_x(n-k+1, k)
    partial += Rational(row[static_cast<std::size_t>(i)]) *
               (Polynomial::monomial(Rational(1), i) * ominus[static_cast<std::size_t>(n - i)]);
    if (s.at(k) == 0) continue;
    h += s.at(k) * partial;
  }
  return h.with_degree_bound(n);
}

// Degree criterion: h has full degree n iff the odd and even C(n-1,k-1)-
// weighted sums of s differ (equivalently, the signed domination d_n != 0).
inline bool is_full_degree(const SignatureVector& s) {
  const int n = s.n();
  const auto& row = binomial_row(n - 1);
  Rational odd, even;
  for (int k = 1; k <= n; ++k) {
    const Rational term = Rational(row[static_cast<std::size_t>(k - 1)]) * s.at(k);
    if (k % 2 == 1)
      odd += term;
    else
      even += term;
  }
  return odd != even;
}

}  // namespace relsig
