#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "relsig/binomial.hpp"
#include "relsig/errors.hpp"
#include "relsig/polynomial.hpp"
#include "relsig/rational.hpp"
#include "relsig/vectors.hpp"

namespace relsig {

// Alternative formulas for the same conversion. Where several exist they are
// all implemented and cross-checked; the redundancy is the verification
// surface.
enum class Route { table, closed, reflect, integral };

inline const char* route_name(Route route) {
  switch (route) {
    case Route::table: return "table";
    case Route::closed: return "closed";
    case Route::reflect: return "reflect";
    case Route::integral: return "integral";
  }
  return "?";
}

// Counts the combining steps of the difference-table algorithms (one per
// updated cell). The seeding pass is not counted.
struct StepCounter {
  std::size_t combines = 0;
};

namespace detail {

inline void bump(StepCounter* counter) {
  if (counter) ++counter->combines;
}

[[noreturn]] inline void reject_route(const char* op, Route route) {
  throw ValidationError(ValidationError::Kind::bad_argument,
                        std::string(op) + ": no " + route_name(route) + " formula");
}

}  // namespace detail

// Tail sums: S_k = s_{k+1} + ... + s_n.
inline TailSignature tail_from_signature(const SignatureVector& s) {
  std::vector<Rational> tail(static_cast<std::size_t>(s.n()) + 1);
  for (int k = s.n() - 1; k >= 0; --k)
    tail[static_cast<std::size_t>(k)] = tail[static_cast<std::size_t>(k) + 1] + s.at(k + 1);
  return TailSignature(s.n(), std::move(tail), s.role());
}

// Differences: s_k = S_{k-1} - S_k.
inline SignatureVector signature_from_tail(const TailSignature& tail) {
  std::vector<Rational> s(static_cast<std::size_t>(tail.n()));
  for (int k = 1; k <= tail.n(); ++k)
    s[static_cast<std::size_t>(k - 1)] = tail.at(k - 1) - tail.at(k);
  return SignatureVector(tail.n(), std::move(s), tail.role());
}

// d_k = C(n,k) * k-th forward difference of S_{n-i} at i = 0, computed on a
// single row updated in place; n(n+1)/2 combining steps. The closed route
// evaluates the alternating binomial sum directly.
inline DominationVector domination_from_tail(const TailSignature& tail,
                                             Route route = Route::table,
                                             StepCounter* counter = nullptr) {
  const int n = tail.n();
  std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
  if (route == Route::table) {
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) row[static_cast<std::size_t>(j)] = tail.at(n - j);
    d[0] = row[0];
    for (int k = 1; k <= n; ++k) {
      const Rational factor(n - k + 1, k);
      for (int j = 0; j <= n - k; ++j) {
        row[static_cast<std::size_t>(j)] =
            factor * (row[static_cast<std::size_t>(j) + 1] - row[static_cast<std::size_t>(j)]);
        detail::bump(counter);
      }
      d[static_cast<std::size_t>(k)] = row[0];
    }
  } else if (route == Route::closed) {
    const auto& cn = binomial_row(n);
    for (int k = 0; k <= n; ++k) {
      const auto& ck = binomial_row(k);
      Rational acc;
      for (int j = 0; j <= k; ++j) {
        const Rational term = Rational(ck[static_cast<std::size_t>(j)]) * tail.at(n - j);
        if ((k - j) % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      d[static_cast<std::size_t>(k)] = Rational(cn[static_cast<std::size_t>(k)]) * acc;
    }
  } else {
    detail::reject_route("domination_from_tail", route);
  }
  return DominationVector(n, std::move(d), tail.role());
}

// S_{n-k} = sum over i of C(k,i)/C(n,i) d_i, accumulated by the in-place row
// recurrence; n(n+1)/2 combining steps.
inline TailSignature tail_from_domination(const DominationVector& d,
                                          Route route = Route::table,
                                          StepCounter* counter = nullptr) {
  const int n = d.n();
  std::vector<Rational> tail(static_cast<std::size_t>(n) + 1);
  if (route == Route::table) {
    std::vector<Rational> row(d.values());
    tail[static_cast<std::size_t>(n)] = row[0];
    for (int k = 1; k <= n; ++k) {
      for (int j = 0; j <= n - k; ++j) {
        row[static_cast<std::size_t>(j)] +=
            Rational(j + 1, n - j) * row[static_cast<std::size_t>(j) + 1];
        detail::bump(counter);
      }
      tail[static_cast<std::size_t>(n - k)] = row[0];
    }
  } else if (route == Route::closed) {
    for (int k = 0; k <= n; ++k) {
      const auto& cnk = binomial_row(n - k);
      Rational acc;
      for (int j = 0; j <= n - k; ++j)
        acc += Rational(cnk[static_cast<std::size_t>(j)], binomial(n, j)) * d.at(j);
      tail[static_cast<std::size_t>(k)] = std::move(acc);
    }
  } else {
    detail::reject_route("tail_from_domination", route);
  }
  return TailSignature(n, std::move(tail), d.role());
}

// d_k = C(n,k) * (k-1)-th forward difference of s_{n-i} at i = 0; the row is
// seeded with n * s_{n-j+1}, then n(n-1)/2 combining steps.
inline DominationVector domination_from_signature(const SignatureVector& s,
                                                  Route route = Route::table,
                                                  StepCounter* counter = nullptr) {
  const int n = s.n();
  std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
  if (route == Route::table) {
    std::vector<Rational> row(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
      row[static_cast<std::size_t>(j - 1)] = Rational(n) * s.at(n - j + 1);
    d[1] = row[0];
    for (int k = 2; k <= n; ++k) {
      const Rational factor(n - k + 1, k);
      for (int j = 1; j <= n - k + 1; ++j) {
        row[static_cast<std::size_t>(j - 1)] =
            factor * (row[static_cast<std::size_t>(j)] - row[static_cast<std::size_t>(j - 1)]);
        detail::bump(counter);
      }
      d[static_cast<std::size_t>(k)] = row[0];
    }
  } else if (route == Route::closed) {
    const auto& cn = binomial_row(n);
    for (int k = 1; k <= n; ++k) {
      const auto& ck1 = binomial_row(k - 1);
      Rational acc;
      for (int j = 0; j <= k - 1; ++j) {
        const Rational term = Rational(ck1[static_cast<std::size_t>(j)]) * s.at(n - j);
        if ((k - 1 - j) % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      d[static_cast<std::size_t>(k)] = Rational(cn[static_cast<std::size_t>(k)]) * acc;
    }
  } else {
    detail::reject_route("domination_from_signature", route);
  }
  return DominationVector(n, std::move(d), s.role());
}

// s_{n-k+1} accumulates C(n-k,j-1)/C(n,j) d_j on a row seeded with d_j / n.
inline SignatureVector signature_from_domination(const DominationVector& d,
                                                 Route route = Route::table,
                                                 StepCounter* counter = nullptr) {
  const int n = d.n();
  std::vector<Rational> s(static_cast<std::size_t>(n));
  if (route == Route::table) {
    std::vector<Rational> row(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) row[static_cast<std::size_t>(j - 1)] = d.at(j) / Rational(n);
    s[static_cast<std::size_t>(n - 1)] = row[0];
    for (int k = 2; k <= n; ++k) {
      for (int j = 1; j <= n - k + 1; ++j) {
        row[static_cast<std::size_t>(j - 1)] +=
            Rational(j + 1, n - j) * row[static_cast<std::size_t>(j)];
        detail::bump(counter);
      }
      s[static_cast<std::size_t>(n - k)] = row[0];
    }
  } else if (route == Route::closed) {
    for (int k = 1; k <= n; ++k) {
      const auto& cnk = binomial_row(n - k);
      Rational acc;
      for (int j = 1; j <= n - k + 1; ++j)
        acc += Rational(cnk[static_cast<std::size_t>(j - 1)], binomial(n, j)) * d.at(j);
      s[static_cast<std::size_t>(k - 1)] = std::move(acc);
    }
  } else {
    detail::reject_route("signature_from_domination", route);
  }
  return SignatureVector(n, std::move(s), d.role());
}

// phi_k = sum_j C(n-j, k-j) d_j. Integral for structural dominations; the
// rational overload also serves the pseudo-Boolean level sums of the
// dependent case.
inline std::vector<Rational> phi_from_domination(const DominationVector& d) {
  const int n = d.n();
  std::vector<Rational> phi(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational acc;
    for (int j = 0; j <= k; ++j) acc += Rational(binomial(n - j, k - j)) * d.at(j);
    phi[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return phi;
}

inline std::vector<Rational> domination_values_from_level_sums(
    const std::vector<Rational>& levels) {
  const int n = static_cast<int>(levels.size()) - 1;
  std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational acc;
    for (int j = 0; j <= k; ++j) {
      const Rational term = Rational(binomial(n - j, k - j)) * levels[static_cast<std::size_t>(j)];
      if ((k - j) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    d[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return d;
}

// d_k = sum_j (-1)^(k-j) C(n-j, k-j) phi_j, the inverse of phi_from_domination.
inline DominationVector domination_from_phi(const PhiVector& phi, Role role = Role::structural) {
  return DominationVector(phi.n(), domination_values_from_level_sums(phi.as_rationals()), role);
}

// S_k = phi_{n-k} / C(n,k).
inline TailSignature tail_from_phi(const PhiVector& phi) {
  const int n = phi.n();
  std::vector<Rational> tail(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    tail[static_cast<std::size_t>(k)] = Rational(phi.at(n - k), binomial(n, k));
  return TailSignature(n, std::move(tail));
}

inline Polynomial signature_generating_polynomial(const SignatureVector& s) {
  Polynomial p = Polynomial::zero(s.n());
  for (int k = 1; k <= s.n(); ++k) p.set_coeff(k, s.at(k));
  return p;
}

inline Polynomial tail_generating_polynomial(const TailSignature& tail) {
  Polynomial p = Polynomial::zero(tail.n());
  for (int k = 0; k <= tail.n(); ++k) p.set_coeff(k, tail.at(k));
  return p;
}

// Generating-function identity linking s and S:
//   sum s_k x^k = 1 + (x - 1) sum S_k x^k.
inline bool check_generating_identity(const SignatureVector& s, const TailSignature& tail) {
  if (s.n() != tail.n()) return false;
  const Polynomial lhs = signature_generating_polynomial(s);
  Polynomial x_minus_one(std::vector<Rational>{Rational(-1), Rational(1)});
  const Polynomial rhs = Polynomial::constant(Rational(1)) +
                         x_minus_one * tail_generating_polynomial(tail);
  return lhs == rhs;
}

}  // namespace relsig
