#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relsig/dependent.hpp"
#include "relsig/errors.hpp"
#include "relsig/rational.hpp"
#include "relsig/structure.hpp"
#include "relsig/vectors.hpp"

// Brute-force reference implementations, kept formula-literal and slow on
// purpose. They deliberately share no binomial tables or subset iteration
// helpers with the fast conversion paths.
namespace relsig::oracle {

inline constexpr int kMaxBolandComponents = 12;
inline constexpr int kMaxEnumerationComponents = 5;

namespace detail {

// Additive-recursion binomials, independent of the Pascal-row cache used by
// the conversion modules.
inline Int choose(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  std::vector<std::vector<Int>> table(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    table[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Int(0));
    table[static_cast<std::size_t>(i)][0] = 1;
    table[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int j = 1; j < i; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Recursive enumeration of all size-k subsets of {1..n}, emitted as masks.
template <class Visitor>
void visit_subsets_of_size(int n, int k, int first, SubsetMask acc, Visitor& visit) {
  if (k == 0) {
    visit(acc);
    return;
  }
  for (int c = first; c <= n - k + 1; ++c)
    visit_subsets_of_size(n, k - 1, c + 1, acc | (SubsetMask(1) << (c - 1)), visit);
}

}  // namespace detail

// Boland's formula, evaluated as the literal double sum
//   s_k = sum_{|A| = n-k+1} phi(A)/C(n,|A|) - sum_{|A| = n-k} phi(A)/C(n,|A|).
inline SignatureVector boland_signature(const StructureFunction& phi) {
  const int n = phi.n();
  if (n > kMaxBolandComponents)
    throw CapError("boland_signature capped at " + std::to_string(kMaxBolandComponents) +
                   " components");
  std::vector<Rational> s(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Rational upper, lower;
    auto add_upper = [&](SubsetMask mask) {
      if (phi.value(mask)) upper += Rational(Int(1), detail::choose(n, n - k + 1));
    };
    detail::visit_subsets_of_size(n, n - k + 1, 1, 0, add_upper);
    if (n - k >= 1) {
      auto add_lower = [&](SubsetMask mask) {
        if (phi.value(mask)) lower += Rational(Int(1), detail::choose(n, n - k));
      };
      detail::visit_subsets_of_size(n, n - k, 1, 0, add_lower);
    } else if (phi.value(0)) {
      lower += 1;
    }
    s[static_cast<std::size_t>(k - 1)] = upper - lower;
  }
  return SignatureVector::unchecked(n, std::move(s));
}

// Failure-step enumeration: walk each order, removing components one by one;
// the system dies at the first step where the survivor set stops being a
// path set.
inline SignatureVector permutation_signature(const StructureFunction& phi,
                                             const OrderDistribution& dist) {
  if (phi.n() != dist.n())
    throw ValidationError(ValidationError::Kind::dimension_mismatch,
                          "structure and order distribution sizes disagree");
  const int n = phi.n();
  std::vector<Rational> p(static_cast<std::size_t>(n));
  dist.for_each_order([&](const std::vector<int>& perm, const Rational& prob) {
    SubsetMask survivors = full_mask(n);
    for (int step = 1; step <= n; ++step) {
      survivors &= ~(SubsetMask(1) << (perm[static_cast<std::size_t>(step - 1)] - 1));
      if (!phi.value(survivors)) {
        p[static_cast<std::size_t>(step - 1)] += prob;
        break;
      }
    }
  });
  return SignatureVector::unchecked(n, std::move(p), Role::probability);
}

// Every monotone Boolean function on n variables with phi(empty) = 0 and
// phi(C) = 1, built by gluing monotone functions on n-1 variables: f is
// monotone iff both restrictions f0, f1 are monotone and f0 <= f1 pointwise.
inline std::vector<StructureFunction> enumerate_semicoherent(int n) {
  if (n < 1 || n > kMaxEnumerationComponents)
    throw CapError("enumerate_semicoherent requires 1 <= n <= " +
                   std::to_string(kMaxEnumerationComponents));
  // Tables as bitsets: bit A holds the value at subset mask A.
  std::vector<std::uint64_t> monotone = {0u, 1u};  // the two 0-variable functions
  for (int k = 1; k <= n; ++k) {
    const int half = 1 << (k - 1);
    std::vector<std::uint64_t> next;
    for (std::uint64_t low : monotone)
      for (std::uint64_t high : monotone)
        if ((low & ~high) == 0) next.push_back(low | (high << half));
    monotone.swap(next);
  }
  std::vector<StructureFunction> out;
  const std::size_t size = std::size_t(1) << n;
  for (std::uint64_t bits : monotone) {
    if ((bits & 1u) != 0) continue;                         // phi(empty) must be 0
    if (((bits >> (size - 1)) & 1u) == 0) continue;         // phi(C) must be 1
    std::vector<bool> table(size);
    for (std::size_t mask = 0; mask < size; ++mask) table[mask] = (bits >> mask) & 1u;
    out.emplace_back(n, std::move(table));
  }
  return out;
}

}  // namespace relsig::oracle
