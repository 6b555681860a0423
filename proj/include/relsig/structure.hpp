#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relsig/errors.hpp"
#include "relsig/polynomial.hpp"
#include "relsig/rational.hpp"
#include "relsig/vectors.hpp"

namespace relsig {

// Component subsets as bit masks: bit i set iff component i+1 is in the set.
using SubsetMask = std::uint32_t;

// Truth tables are the exponential-space layer; everything past them is
// quadratic. 2^26 bits is about 8 MB.
inline constexpr int kMaxTableComponents = 26;

inline int mask_popcount(SubsetMask mask) { return std::popcount(mask); }

inline SubsetMask full_mask(int n) {
  return static_cast<SubsetMask>((std::uint64_t(1) << n) - 1);
}

// Sorted 1-based component list of a mask.
inline std::vector<int> mask_components(SubsetMask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i + 1);
  return out;
}

// A system definition as a list of path sets (not necessarily minimal;
// duplicates and supersets are absorbed by the coproduct semantics).
struct PathSetSpec {
  int n = 0;
  std::vector<SubsetMask> path_sets;
};

inline PathSetSpec make_pathset_spec(int n, const std::vector<std::vector<int>>& sets) {
  if (n < 1) throw ParseError("component count must be at least 1");
  if (n > kMaxTableComponents)
    throw CapError("component count " + std::to_string(n) + " exceeds the truth-table cap of " +
                   std::to_string(kMaxTableComponents));
  if (sets.empty()) throw ParseError("path-set list must not be empty");
  PathSetSpec spec;
  spec.n = n;
  for (const auto& set : sets) {
    if (set.empty()) throw ParseError("empty path set");
    SubsetMask mask = 0;
    for (int component : set) {
      if (component < 1 || component > n)
        throw ParseError("component index " + std::to_string(component) +
                         " out of range 1.." + std::to_string(n));
      mask |= SubsetMask(1) << (component - 1);
    }
    spec.path_sets.push_back(mask);
  }
  return spec;
}

// Boolean structure function phi on n components, stored as a 2^n truth table
// indexed by subset mask.
class StructureFunction {
 public:
  StructureFunction(int n, std::vector<bool> table) : n_(n), table_(std::move(table)) {
    if (n_ < 1) throw ValidationError(ValidationError::Kind::precondition,
                                      "structure function needs at least one component");
    if (n_ > kMaxTableComponents)
      throw CapError("component count " + std::to_string(n_) +
                     " exceeds the truth-table cap of " + std::to_string(kMaxTableComponents));
    if (table_.size() != (std::size_t(1) << n_))
      throw ValidationError(ValidationError::Kind::precondition,
                            "truth table must have 2^n entries");
  }

  int n() const { return n_; }
  std::size_t table_size() const { return table_.size(); }
  bool value(SubsetMask mask) const { return table_[mask]; }

  friend bool operator==(const StructureFunction& a, const StructureFunction& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  int n_;
  std::vector<bool> table_;
};

// phi(A) = 1 iff A contains at least one listed path set; monotone by
// construction.
inline StructureFunction structure_from_pathsets(const PathSetSpec& spec) {
  std::vector<bool> table(std::size_t(1) << spec.n, false);
  for (SubsetMask mask = 0; mask < table.size(); ++mask) {
    for (SubsetMask ps : spec.path_sets) {
      if ((mask & ps) == ps) {
        table[mask] = true;
        break;
      }
    }
  }
  return StructureFunction(spec.n, std::move(table));
}

// Checks phi(empty) = 0, phi(C) = 1, and monotonicity; throws a distinct
// ValidationError for each, with a witness pair for monotonicity.
inline void validate_semicoherent(const StructureFunction& phi) {
  if (phi.value(0))
    throw ValidationError(ValidationError::Kind::empty_set_nonzero,
                          "structure function must vanish on the empty set");
  if (!phi.value(full_mask(phi.n())))
    throw ValidationError(ValidationError::Kind::full_set_not_one,
                          "structure function must be 1 on the full component set");
  for (std::size_t m = 0; m < phi.table_size(); ++m) {
    const SubsetMask mask = static_cast<SubsetMask>(m);
    if (!phi.value(mask)) continue;
    for (int i = 0; i < phi.n(); ++i) {
      const SubsetMask bit = SubsetMask(1) << i;
      if (mask & bit) continue;
      if (!phi.value(mask | bit)) {
        auto components = mask_components(mask);
        std::string witness = "{";
        for (std::size_t j = 0; j < components.size(); ++j)
          witness += (j ? "," : "") + std::to_string(components[j]);
        witness += "}";
        throw ValidationError(ValidationError::Kind::not_monotone,
                              "not monotone: phi(" + witness + ") = 1 but adding component " +
                                  std::to_string(i + 1) + " gives 0",
                              mask, i + 1);
      }
    }
  }
}

// In-place fast zeta transform: f[A] becomes the sum of f over subsets of A.
template <class T>
void subset_zeta_inplace(std::vector<T>& f, int n) {
  for (int d = 0; d < n; ++d) {
    const std::size_t bit = std::size_t(1) << d;
    for (std::size_t mask = 0; mask < f.size(); ++mask)
      if (mask & bit) f[mask] += f[mask ^ bit];
  }
}

// In-place fast Moebius transform, the inverse of subset_zeta_inplace.
template <class T>
void subset_mobius_inplace(std::vector<T>& f, int n) {
  for (int d = 0; d < n; ++d) {
    const std::size_t bit = std::size_t(1) << d;
    for (std::size_t mask = 0; mask < f.size(); ++mask)
      if (mask & bit) f[mask] -= f[mask ^ bit];
  }
}

// Coefficients of the standard multilinear form, indexed by subset. Sparse:
// zero coefficients are omitted. std::map keeps iteration order (and hence
// serialization) deterministic.
struct MultilinearForm {
  int n = 0;
  std::map<SubsetMask, Rational> coeffs;

  const Rational& at(SubsetMask mask) const {
    static const Rational kZero;
    auto it = coeffs.find(mask);
    return it == coeffs.end() ? kZero : it->second;
  }

  friend bool operator==(const MultilinearForm& a, const MultilinearForm& b) {
    return a.n == b.n && a.coeffs == b.coeffs;
  }
};

// Multilinear coefficients of phi via the fast subset Moebius transform.
// Boolean tables keep the transform in machine integers (the coefficients of
// a 0/1 function on <= 26 components fit comfortably).
inline MultilinearForm mobius_transform(const StructureFunction& phi) {
  std::vector<long long> f(phi.table_size());
  for (SubsetMask mask = 0; mask < f.size(); ++mask) f[mask] = phi.value(mask) ? 1 : 0;
  subset_mobius_inplace(f, phi.n());
  MultilinearForm form;
  form.n = phi.n();
  for (SubsetMask mask = 0; mask < f.size(); ++mask)
    if (f[mask] != 0) form.coeffs.emplace(mask, Rational(f[mask]));
  return form;
}

// Rational-valued variant used for the pseudo-Boolean functions of the
// dependent case.
inline MultilinearForm mobius_transform(int n, const std::vector<Rational>& values) {
  std::vector<Rational> f = values;
  subset_mobius_inplace(f, n);
  MultilinearForm form;
  form.n = n;
  for (SubsetMask mask = 0; mask < f.size(); ++mask)
    if (f[mask] != 0) form.coeffs.emplace(mask, std::move(f[mask]));
  return form;
}

// Result of inverting a multilinear form back into a set function. The sums
// need not be Boolean (the dependent case produces genuinely fractional set
// functions), so a non-Boolean result is flagged, not rejected.
struct ZetaResult {
  int n = 0;
  std::vector<Rational> values;  // indexed by mask
  bool is_boolean = false;

  StructureFunction to_structure() const {
    if (!is_boolean)
      throw ValidationError(ValidationError::Kind::precondition,
                            "set function is not 0/1-valued");
    std::vector<bool> table(values.size());
    for (std::size_t mask = 0; mask < values.size(); ++mask) table[mask] = values[mask] == 1;
    return StructureFunction(n, std::move(table));
  }
};

inline ZetaResult zeta_transform(const MultilinearForm& form) {
  ZetaResult result;
  result.n = form.n;
  result.values.assign(std::size_t(1) << form.n, Rational(0));
  for (const auto& [mask, coeff] : form.coeffs) result.values[mask] = coeff;
  subset_zeta_inplace(result.values, form.n);
  result.is_boolean = true;
  for (const auto& v : result.values)
    if (v != 0 && v != 1) {
      result.is_boolean = false;
      break;
    }
  return result;
}

// Level counts phi_k = number of path sets of size k.
inline PhiVector phi_vector(const StructureFunction& phi) {
  std::vector<Int> counts(static_cast<std::size_t>(phi.n()) + 1);
  for (SubsetMask mask = 0; mask < phi.table_size(); ++mask)
    if (phi.value(mask)) counts[static_cast<std::size_t>(mask_popcount(mask))] += 1;
  return PhiVector::unchecked(std::move(counts));
}

// Diagonal section: coefficient of x^k is the sum of the coefficients over
// all subsets of size k.
inline Polynomial diagonal_section(const MultilinearForm& form) {
  Polynomial p = Polynomial::zero(form.n);
  for (const auto& [mask, coeff] : form.coeffs) {
    const int k = mask_popcount(mask);
    p.set_coeff(k, p.coeff(k) + coeff);
  }
  return p;
}

// Dual structure: phi_D(A) = 1 - phi(C \ A).
inline StructureFunction dual_structure(const StructureFunction& phi) {
  const SubsetMask all = full_mask(phi.n());
  std::vector<bool> table(phi.table_size());
  for (SubsetMask mask = 0; mask < phi.table_size(); ++mask)
    table[mask] = !phi.value(all & ~mask);
  return StructureFunction(phi.n(), std::move(table));
}

}  // namespace relsig
