#pragma once

#include <utility>
#include <vector>

#include "relsig/binomial.hpp"
#include "relsig/convert.hpp"
#include "relsig/errors.hpp"
#include "relsig/polynomial.hpp"
#include "relsig/polyroute.hpp"
#include "relsig/vectors.hpp"

namespace relsig {

namespace detail {

inline Role flip_dual(Role role) {
  if (role == Role::structural) return Role::dual;
  if (role == Role::dual) return Role::structural;
  throw ValidationError(ValidationError::Kind::role_mismatch,
                        "probability vectors have no dual counterpart here");
}

}  // namespace detail

// Domination vector of the dual structure:
//   d^D_k = delta_{k,0} - (-1)^k sum_{j>=k} C(j,k) d_j.
// The same formula applied to a dual vector recovers the primal one, so the
// role tag simply flips.
inline DominationVector dual_domination(const DominationVector& d) {
  const int n = d.n();
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational acc;
    for (int j = k; j <= n; ++j) acc += Rational(binomial(j, k)) * d.at(j);
    if (k % 2 == 0) acc = -acc;
    if (k == 0) acc += 1;
    out[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return DominationVector(n, std::move(out), detail::flip_dual(d.role()));
}

// Primal tail signature from the dual domination vector:
//   S_k = 1 - sum_{j<=k} C(k,j)/C(n,j) d^D_j.
inline TailSignature tail_from_dual_domination(const DominationVector& dual) {
  detail::require_role(dual.role(), Role::dual, "tail_from_dual_domination");
  const int n = dual.n();
  std::vector<Rational> tail(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const auto& ck = binomial_row(k);
    Rational acc(1);
    for (int j = 0; j <= k; ++j)
      acc -= Rational(ck[static_cast<std::size_t>(j)], binomial(n, j)) * dual.at(j);
    tail[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return TailSignature(n, std::move(tail));
}

// Primal signature from the dual domination vector:
//   s_k = sum_{j=1}^{k} C(k-1,j-1)/C(n,j) d^D_j.
inline SignatureVector signature_from_dual_domination(const DominationVector& dual) {
  detail::require_role(dual.role(), Role::dual, "signature_from_dual_domination");
  const int n = dual.n();
  std::vector<Rational> s(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const auto& ck1 = binomial_row(k - 1);
    Rational acc;
    for (int j = 1; j <= k; ++j)
      acc += Rational(ck1[static_cast<std::size_t>(j - 1)], binomial(n, j)) * dual.at(j);
    s[static_cast<std::size_t>(k - 1)] = std::move(acc);
  }
  return SignatureVector(n, std::move(s));
}

// Dual domination straight from the primal tail:
//   d^D_k = delta_{k,0} - C(n,k) * (k-th forward difference of S_i at i = 0).
inline DominationVector dual_domination_from_tail(const TailSignature& tail) {
  detail::require_role(tail.role(), Role::structural, "dual_domination_from_tail");
  const int n = tail.n();
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const auto& ck = binomial_row(k);
    Rational diff;
    for (int j = 0; j <= k; ++j) {
      const Rational term = Rational(ck[static_cast<std::size_t>(j)]) * tail.at(j);
      if ((k - j) % 2 == 0)
        diff += term;
      else
        diff -= term;
    }
    Rational value = -Rational(binomial(n, k)) * diff;
    if (k == 0) value += 1;
    out[static_cast<std::size_t>(k)] = std::move(value);
  }
  return DominationVector(n, std::move(out), Role::dual);
}

// Dual domination straight from the primal signature:
//   d^D_k = C(n,k) * ((k-1)-th forward difference of s_i at i = 1).
inline DominationVector dual_domination_from_signature(const SignatureVector& s) {
  detail::require_role(s.role(), Role::structural, "dual_domination_from_signature");
  const int n = s.n();
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    const auto& ck1 = binomial_row(k - 1);
    Rational diff;
    for (int j = 0; j <= k - 1; ++j) {
      const Rational term = Rational(ck1[static_cast<std::size_t>(j)]) * s.at(1 + j);
      if ((k - 1 - j) % 2 == 0)
        diff += term;
      else
        diff -= term;
    }
    out[static_cast<std::size_t>(k)] = Rational(binomial(n, k)) * diff;
  }
  return DominationVector(n, std::move(out), Role::dual);
}

// Diagonal reliability polynomial of the dual structure, 1 - h(1 - x).
inline Polynomial dual_polynomial(const Polynomial& h, int n) {
  detail::require_reliability_polynomial(h, n, "dual_polynomial");
  const Polynomial composed = poly_compose_affine(h.with_degree_bound(n), Rational(-1), Rational(1));
  return (Polynomial::constant(Rational(1)) - composed).with_degree_bound(n);
}

// Generating function of the path-set counts:
//   sum_k phi_k x^k = R^n((R^n h)(x+1)) = (x+1)^n h(x / (x+1)).
inline Polynomial pathcount_generating_function(const Polynomial& h, int n) {
  detail::require_reliability_polynomial(h, n, "pathcount_generating_function");
  return poly_reflect(poly_shift_plus_one(poly_reflect(h, n)), n);
}

// Same function by way of the dual structure: (x+1)^n - (R^n h^D)(x+1).
inline Polynomial pathcount_generating_function_via_dual(const Polynomial& h, int n) {
  detail::require_reliability_polynomial(h, n, "pathcount_generating_function_via_dual");
  const auto& row = binomial_row(n);
  Polynomial x_plus_one_to_n = Polynomial::zero(n);
  for (int k = 0; k <= n; ++k) x_plus_one_to_n.set_coeff(k, Rational(row[static_cast<std::size_t>(k)]));
  return x_plus_one_to_n - poly_shift_plus_one(poly_reflect(dual_polynomial(h, n), n));
}

}  // namespace relsig
