#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relsig/binomial.hpp"
#include "relsig/convert.hpp"
#include "relsig/errors.hpp"
#include "relsig/polynomial.hpp"
#include "relsig/polyroute.hpp"
#include "relsig/structure.hpp"
#include "relsig/vectors.hpp"

namespace relsig {

// Subset-indexed rational set functions are stored densely, so keep the
// exponent well below the truth-table cap.
inline constexpr int kMaxQualityComponents = 20;

// Enumerating the uniform distribution walks all n! orders.
inline constexpr int kMaxUniformOrderComponents = 8;

namespace detail {

inline void require_quality_size(int n) {
  if (n < 1)
    throw ValidationError(ValidationError::Kind::precondition,
                          "component count must be at least 1");
  if (n > kMaxQualityComponents)
    throw CapError("component count " + std::to_string(n) +
                   " exceeds the dependent-case cap of " +
                   std::to_string(kMaxQualityComponents));
}

}  // namespace detail

// A distribution over component failure orders. A permutation lists
// components in failure order: position 1 fails first, so for every k the
// last k positions are the best k components. The uniform distribution over
// all n! orders is kept implicit.
class OrderDistribution {
 public:
  OrderDistribution(int n, std::vector<std::pair<std::vector<int>, Rational>> entries)
      : n_(n), entries_(std::move(entries)) {
    detail::require_quality_size(n_);
    if (entries_.empty())
      throw ValidationError(ValidationError::Kind::precondition,
                            "order distribution needs at least one order");
    Rational total;
    std::set<std::vector<int>> seen;
    for (const auto& [perm, prob] : entries_) {
      if (static_cast<int>(perm.size()) != n_ || !is_permutation(perm))
        throw ValidationError(ValidationError::Kind::precondition,
                              "order is not a permutation of 1..n");
      if (prob < 0)
        throw ValidationError(ValidationError::Kind::precondition,
                              "order probabilities must be nonnegative");
      if (!seen.insert(perm).second)
        throw ValidationError(ValidationError::Kind::precondition,
                              "duplicate order in distribution");
      total += prob;
    }
    if (total != 1)
      throw ValidationError(ValidationError::Kind::precondition,
                            "order probabilities must sum to 1");
  }

  static OrderDistribution uniform(int n) {
    detail::require_quality_size(n);
    if (n > kMaxUniformOrderComponents)
      throw CapError("uniform order distribution capped at " +
                     std::to_string(kMaxUniformOrderComponents) + " components");
    OrderDistribution dist;
    dist.n_ = n;
    dist.uniform_ = true;
    return dist;
  }

  int n() const { return n_; }
  bool is_uniform() const { return uniform_; }
  const std::vector<std::pair<std::vector<int>, Rational>>& entries() const { return entries_; }

  // Visits every (order, probability) pair, expanding the implicit uniform
  // case into all n! orders.
  template <class Visitor>
  void for_each_order(Visitor&& visit) const {
    if (uniform_) {
      std::vector<int> perm(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
      Int factorial = 1;
      for (int i = 2; i <= n_; ++i) factorial *= i;
      const Rational prob(Int(1), factorial);
      do {
        visit(perm, prob);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (const auto& [perm, prob] : entries_) visit(perm, prob);
  }

 private:
  OrderDistribution() = default;

  static bool is_permutation(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
      if (v < 1 || v > static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(v - 1)])
        return false;
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return true;
  }

  int n_ = 0;
  bool uniform_ = false;
  std::vector<std::pair<std::vector<int>, Rational>> entries_;
};

// Relative quality function: q(A) is the probability that the best |A|
// components are exactly those in A. Every size level sums to 1.
class RelativeQuality {
 public:
  RelativeQuality(int n, std::vector<Rational> q) : n_(n), q_(std::move(q)) {
    detail::require_quality_size(n_);
    if (q_.size() != (std::size_t(1) << n_))
      throw ValidationError(ValidationError::Kind::precondition,
                            "relative quality needs one value per subset");
    for (const auto& value : q_)
      if (value < 0)
        throw ValidationError(ValidationError::Kind::precondition,
                              "relative quality values must be nonnegative");
    std::vector<Rational> level(static_cast<std::size_t>(n_) + 1);
    for (std::size_t mask = 0; mask < q_.size(); ++mask)
      level[static_cast<std::size_t>(mask_popcount(static_cast<SubsetMask>(mask)))] += q_[mask];
    for (int k = 0; k <= n_; ++k)
      if (level[static_cast<std::size_t>(k)] != 1)
        throw ValidationError(ValidationError::Kind::level_sum,
                              "relative quality values of size " + std::to_string(k) +
                                  " sum to " + relsig::to_string(level[static_cast<std::size_t>(k)]) +
                                  ", expected 1");
  }

  // Exchangeable lifetimes: q(A) = 1 / C(n, |A|).
  static RelativeQuality exchangeable(int n) {
    detail::require_quality_size(n);
    std::vector<Rational> q(std::size_t(1) << n);
    for (std::size_t mask = 0; mask < q.size(); ++mask)
      q[mask] = Rational(Int(1), binomial(n, mask_popcount(static_cast<SubsetMask>(mask))));
    return RelativeQuality(n, std::move(q));
  }

  int n() const { return n_; }
  const Rational& at(SubsetMask mask) const { return q_[mask]; }
  const std::vector<Rational>& values() const { return q_; }

 private:
  int n_;
  std::vector<Rational> q_;
};

// q(A) = total probability of the orders whose surviving set, after n - |A|
// failures, is exactly A.
inline RelativeQuality quality_from_order_distribution(const OrderDistribution& dist) {
  std::vector<Rational> q(std::size_t(1) << dist.n());
  dist.for_each_order([&](const std::vector<int>& perm, const Rational& prob) {
    SubsetMask survivors = 0;
    q[survivors] += prob;
    for (auto it = perm.rbegin(); it != perm.rend(); ++it) {
      survivors |= SubsetMask(1) << (*it - 1);
      q[survivors] += prob;
    }
  });
  return RelativeQuality(dist.n(), std::move(q));
}

// Normalized relative quality: q~(A) = C(n,|A|) q(A); identically 1 in the
// exchangeable case.
inline std::vector<Rational> normalized_quality(const RelativeQuality& q) {
  std::vector<Rational> out(q.values());
  for (std::size_t mask = 0; mask < out.size(); ++mask)
    out[mask] *= Rational(binomial(q.n(), mask_popcount(static_cast<SubsetMask>(mask))));
  return out;
}

// q-structure function psi(A) = q~(A) phi(A): the pseudo-Boolean surrogate
// that carries the dependence structure through the conversion formulas.
class QStructure {
 public:
  QStructure(int n, std::vector<Rational> psi) : n_(n), psi_(std::move(psi)) {
    detail::require_quality_size(n_);
    if (psi_.size() != (std::size_t(1) << n_))
      throw ValidationError(ValidationError::Kind::precondition,
                            "q-structure needs one value per subset");
  }

  int n() const { return n_; }
  const Rational& at(SubsetMask mask) const { return psi_[mask]; }
  const std::vector<Rational>& values() const { return psi_; }

 private:
  int n_;
  std::vector<Rational> psi_;
};

inline QStructure q_structure(const StructureFunction& phi, const RelativeQuality& q) {
  if (phi.n() != q.n())
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "structure has " + std::to_string(phi.n()) +
                              " components but the quality function has " +
                              std::to_string(q.n()));
  std::vector<Rational> psi(q.values());
  for (std::size_t mask = 0; mask < psi.size(); ++mask) {
    if (phi.value(static_cast<SubsetMask>(mask)))
      psi[mask] *= Rational(binomial(q.n(), mask_popcount(static_cast<SubsetMask>(mask))));
    else
      psi[mask] = 0;
  }
  return QStructure(q.n(), std::move(psi));
}

// Multilinear coefficients c(A) of the extension g of psi.
inline MultilinearForm g_multilinear(const QStructure& psi) {
  return mobius_transform(psi.n(), psi.values());
}

// Level sums psi_k = sum over |A| = k of psi(A).
inline std::vector<Rational> psi_level_sums(const QStructure& psi) {
  std::vector<Rational> levels(static_cast<std::size_t>(psi.n()) + 1);
  for (std::size_t mask = 0; mask < psi.values().size(); ++mask)
    levels[static_cast<std::size_t>(mask_popcount(static_cast<SubsetMask>(mask)))] += psi.at(
        static_cast<SubsetMask>(mask));
  return levels;
}

// Tail of the probability signature: P_k = psi_{n-k} / C(n,k).
inline TailSignature probability_tail(const QStructure& psi) {
  const int n = psi.n();
  const auto levels = psi_level_sums(psi);
  std::vector<Rational> tail(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    tail[static_cast<std::size_t>(k)] =
        levels[static_cast<std::size_t>(n - k)] / Rational(binomial(n, k));
  return TailSignature(n, std::move(tail), Role::probability);
}

// Probability signature p_k = P_{k-1} - P_k via the level sums of psi.
inline SignatureVector probability_signature(const QStructure& psi) {
  return signature_from_tail(probability_tail(psi));
}

// The same vector straight from the defining double sum:
//   p_k = sum_{|A| = n-k+1} q(A) phi(A) - sum_{|A| = n-k} q(A) phi(A).
inline SignatureVector probability_signature_direct(const StructureFunction& phi,
                                                    const RelativeQuality& q) {
  if (phi.n() != q.n())
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "structure and quality component counts disagree");
  const int n = phi.n();
  std::vector<Rational> weighted_level(static_cast<std::size_t>(n) + 1);
  for (std::size_t mask = 0; mask < phi.table_size(); ++mask)
    if (phi.value(static_cast<SubsetMask>(mask)))
      weighted_level[static_cast<std::size_t>(mask_popcount(static_cast<SubsetMask>(mask)))] +=
          q.at(static_cast<SubsetMask>(mask));
  std::vector<Rational> p(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    p[static_cast<std::size_t>(k - 1)] = weighted_level[static_cast<std::size_t>(n - k + 1)] -
                                         weighted_level[static_cast<std::size_t>(n - k)];
  return SignatureVector(n, std::move(p), Role::probability);
}

// Diagonal section g(x) = sum_k c_k x^k of the multilinear extension of psi.
inline Polynomial g_polynomial(const QStructure& psi) {
  return diagonal_section(g_multilinear(psi)).with_degree_bound(psi.n());
}

// Binomial-weighted generating function of the probability signature,
//   sum_k C(n,k) p_k x^k = integral from 0 to x of (R^(n-1) g')(t+1) dt,
// the substituted version of the structural identity.
inline Polynomial probability_signature_gf(const QStructure& psi) {
  return binomial_signature_gf(g_polynomial(psi), psi.n());
}

// Extracts p from the binomial-weighted generating function.
inline SignatureVector probability_signature_from_gf(const Polynomial& gf, int n) {
  std::vector<Rational> p(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    p[static_cast<std::size_t>(k - 1)] = gf.coeff(k) / Rational(binomial(n, k));
  return SignatureVector(n, std::move(p), Role::probability);
}

}  // namespace relsig
