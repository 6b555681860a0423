#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "relsig/binomial.hpp"
#include "relsig/errors.hpp"
#include "relsig/rational.hpp"

namespace relsig {

// Distinguishes primal/structural vectors, their dual-structure counterparts,
// and the probability-signature vectors of the dependent case. Conversions
// check the tag so a dual domination vector cannot silently stand in for a
// primal one.
enum class Role { structural, dual, probability };

inline const char* role_name(Role role) {
  switch (role) {
    case Role::structural: return "structural";
    case Role::dual: return "dual";
    case Role::probability: return "probability";
  }
  return "?";
}

namespace detail {

inline void require_role(Role actual, Role expected, const char* what) {
  if (actual != expected)
    throw ValidationError(ValidationError::Kind::role_mismatch,
                          std::string(what) + ": expected a " + role_name(expected) +
                              " vector, got a " + role_name(actual) + " one");
}

inline Rational sum(const std::vector<Rational>& values) {
  return std::accumulate(values.begin(), values.end(), Rational(0));
}

}  // namespace detail

// s_1..s_n with sum 1. Entries may be negative: the conversion algebra is
// valid on the whole affine slice, and nonnegativity is a theorem about
// vectors derived from semicoherent structures, not a precondition.
class SignatureVector {
 public:
  SignatureVector(int n, std::vector<Rational> s, Role role = Role::structural)
      : SignatureVector(n, std::move(s), role, /*check=*/true) {}

  static SignatureVector unchecked(int n, std::vector<Rational> s, Role role = Role::structural) {
    return SignatureVector(n, std::move(s), role, /*check=*/false);
  }

  int n() const { return n_; }
  Role role() const { return role_; }

  // 1-based, matching s_k.
  const Rational& at(int k) const { return s_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<Rational>& values() const { return s_; }

  friend bool operator==(const SignatureVector& a, const SignatureVector& b) {
    return a.n_ == b.n_ && a.s_ == b.s_;
  }

 private:
  SignatureVector(int n, std::vector<Rational> s, Role role, bool check)
      : n_(n), s_(std::move(s)), role_(role) {
    if (n_ < 1 || s_.size() != static_cast<std::size_t>(n_))
      throw ValidationError(ValidationError::Kind::precondition,
                            "signature vector must have n >= 1 entries");
    if (check && detail::sum(s_) != 1)
      throw ValidationError(ValidationError::Kind::precondition,
                            "signature entries must sum to 1");
  }

  int n_;
  std::vector<Rational> s_;
  Role role_;
};

// Tail sums S_0..S_n with S_0 = 1 and S_n = 0.
class TailSignature {
 public:
  TailSignature(int n, std::vector<Rational> tail, Role role = Role::structural)
      : TailSignature(n, std::move(tail), role, /*check=*/true) {}

  static TailSignature unchecked(int n, std::vector<Rational> tail, Role role = Role::structural) {
    return TailSignature(n, std::move(tail), role, /*check=*/false);
  }

  int n() const { return n_; }
  Role role() const { return role_; }

  // 0-based, matching S_k.
  const Rational& at(int k) const { return tail_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& values() const { return tail_; }

  friend bool operator==(const TailSignature& a, const TailSignature& b) {
    return a.n_ == b.n_ && a.tail_ == b.tail_;
  }

 private:
  TailSignature(int n, std::vector<Rational> tail, Role role, bool check)
      : n_(n), tail_(std::move(tail)), role_(role) {
    if (n_ < 1 || tail_.size() != static_cast<std::size_t>(n_) + 1)
      throw ValidationError(ValidationError::Kind::precondition,
                            "tail signature must have n + 1 entries");
    if (check) {
      if (tail_.front() != 1)
        throw ValidationError(ValidationError::Kind::precondition,
                              "tail signature must start at 1");
      if (tail_.back() != 0)
        throw ValidationError(ValidationError::Kind::precondition,
                              "tail signature must end at 0");
    }
  }

  int n_;
  std::vector<Rational> tail_;
  Role role_;
};

// d_0..d_n with d_0 = 0 and sum 1; the coefficient list of the diagonal
// reliability polynomial. Integer-valued in the structural case, but stored
// as rationals so the dependent case can reuse it.
class DominationVector {
 public:
  DominationVector(int n, std::vector<Rational> d, Role role = Role::structural)
      : DominationVector(n, std::move(d), role, /*check=*/true) {}

  static DominationVector unchecked(int n, std::vector<Rational> d, Role role = Role::structural) {
    return DominationVector(n, std::move(d), role, /*check=*/false);
  }

  int n() const { return n_; }
  Role role() const { return role_; }

  // 0-based, matching d_k.
  const Rational& at(int k) const { return d_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& values() const { return d_; }

  friend bool operator==(const DominationVector& a, const DominationVector& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }

 private:
  DominationVector(int n, std::vector<Rational> d, Role role, bool check)
      : n_(n), d_(std::move(d)), role_(role) {
    if (n_ < 1 || d_.size() != static_cast<std::size_t>(n_) + 1)
      throw ValidationError(ValidationError::Kind::precondition,
                            "domination vector must have n + 1 entries");
    if (check) {
      if (d_.front() != 0)
        throw ValidationError(ValidationError::Kind::precondition,
                              "domination vector must have d_0 = 0");
      if (detail::sum(d_) != 1)
        throw ValidationError(ValidationError::Kind::precondition,
                              "domination entries must sum to 1");
    }
  }

  int n_;
  std::vector<Rational> d_;
  Role role_;
};

// Path-set counts by size: phi_k = number of path sets of cardinality k.
// The bounds 0 <= phi_k <= C(n,k) and the monotone proportion phi_k/C(n,k)
// hold for every semicoherent structure and are checked in tests, not here.
class PhiVector {
 public:
  explicit PhiVector(std::vector<Int> values) : PhiVector(std::move(values), /*check=*/true) {}

  static PhiVector unchecked(std::vector<Int> values) {
    return PhiVector(std::move(values), /*check=*/false);
  }

  int n() const { return static_cast<int>(values_.size()) - 1; }
  const Int& at(int k) const { return values_[static_cast<std::size_t>(k)]; }
  const std::vector<Int>& values() const { return values_; }

  std::vector<Rational> as_rationals() const {
    return std::vector<Rational>(values_.begin(), values_.end());
  }

  friend bool operator==(const PhiVector& a, const PhiVector& b) {
    return a.values_ == b.values_;
  }

 private:
  PhiVector(std::vector<Int> values, bool check) : values_(std::move(values)) {
    if (values_.size() < 2)
      throw ValidationError(ValidationError::Kind::precondition,
                            "path-set count vector must have n + 1 >= 2 entries");
    if (check) {
      if (values_.front() != 0)
        throw ValidationError(ValidationError::Kind::precondition,
                              "path-set count of the empty set must be 0");
      if (values_.back() != 1)
        throw ValidationError(ValidationError::Kind::precondition,
                              "path-set count of the full set must be 1");
    }
  }

  std::vector<Int> values_;
};

}  // namespace relsig
