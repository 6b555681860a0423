#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "relsig/relsig.hpp"

// Shared fixtures and generators for the test suites.
namespace testutil {

using namespace relsig;

inline std::vector<Rational> rationals(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const char* v : values) out.push_back(parse_rational(v));
  return out;
}

inline Polynomial poly(std::initializer_list<const char*> coeffs) {
  return Polynomial(rationals(coeffs));
}

// The five-component bridge, the running example of the whole suite.
inline PathSetSpec bridge_spec() {
  return make_pathset_spec(5, {{1, 4}, {2, 5}, {1, 3, 5}, {2, 3, 4}});
}

inline StructureFunction bridge() { return structure_from_pathsets(bridge_spec()); }

inline Polynomial bridge_h() { return poly({"0", "0", "2", "2", "-5", "2"}); }

inline std::vector<Rational> bridge_d() { return rationals({"0", "0", "2", "2", "-5", "2"}); }

inline std::vector<Rational> bridge_tail() {
  return rationals({"1", "1", "4/5", "1/5", "0", "0"});
}

inline std::vector<Rational> bridge_s() { return rationals({"0", "1/5", "3/5", "1/5", "0"}); }

// 2-out-of-3 system: every pair is a path set.
inline StructureFunction two_out_of_three() {
  return structure_from_pathsets(make_pathset_spec(3, {{1, 2}, {1, 3}, {2, 3}}));
}

inline StructureFunction series(int n) {
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return structure_from_pathsets(make_pathset_spec(n, {all}));
}

inline StructureFunction parallel(int n) {
  std::vector<std::vector<int>> singletons;
  for (int i = 1; i <= n; ++i) singletons.push_back({i});
  return structure_from_pathsets(make_pathset_spec(n, singletons));
}

inline Rational random_rational(std::mt19937_64& gen, int num_bound = 9, int den_bound = 9) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return Rational(num(gen), den(gen));
}

// Random point on the affine slice sum = 1 (entries may be negative).
inline SignatureVector random_signature(std::mt19937_64& gen, int n) {
  std::vector<Rational> s(static_cast<std::size_t>(n));
  Rational sum;
  for (int k = 0; k + 1 < n; ++k) {
    s[static_cast<std::size_t>(k)] = random_rational(gen);
    sum += s[static_cast<std::size_t>(k)];
  }
  s[static_cast<std::size_t>(n - 1)] = Rational(1) - sum;
  return SignatureVector(n, std::move(s));
}

inline TailSignature random_tail(std::mt19937_64& gen, int n) {
  std::vector<Rational> tail(static_cast<std::size_t>(n) + 1);
  tail[0] = 1;
  for (int k = 1; k < n; ++k) tail[static_cast<std::size_t>(k)] = random_rational(gen);
  tail[static_cast<std::size_t>(n)] = 0;
  return TailSignature(n, std::move(tail));
}

inline DominationVector random_domination(std::mt19937_64& gen, int n) {
  std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
  Rational sum;
  for (int k = 1; k + 1 <= n; ++k) {
    d[static_cast<std::size_t>(k)] = random_rational(gen);
    sum += d[static_cast<std::size_t>(k)];
  }
  d[static_cast<std::size_t>(n)] = Rational(1) - sum;
  return DominationVector(n, std::move(d));
}

// Random semicoherent structure built from random path sets (semicoherent by
// construction).
inline StructureFunction random_structure(std::mt19937_64& gen, int n) {
  std::uniform_int_distribution<int> set_count(1, 4);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<std::vector<int>> sets;
  const int count = set_count(gen);
  for (int i = 0; i < count; ++i) {
    std::vector<int> set;
    for (int c = 1; c <= n; ++c)
      if (bit(gen)) set.push_back(c);
    if (set.empty()) set.push_back(1 + static_cast<int>(gen() % n));
    sets.push_back(std::move(set));
  }
  return structure_from_pathsets(make_pathset_spec(n, sets));
}

// Random relative quality from a random order distribution over a few
// distinct permutations.
inline OrderDistribution random_order_distribution(std::mt19937_64& gen, int n) {
  std::vector<int> base;
  for (int i = 1; i <= n; ++i) base.push_back(i);
  std::vector<std::vector<int>> perms;
  int count = 1 + static_cast<int>(gen() % 3);
  if (n <= 2) count = std::min(count, n);  // only n! distinct orders exist
  while (static_cast<int>(perms.size()) < count) {
    std::vector<int> perm = base;
    std::shuffle(perm.begin(), perm.end(), gen);
    bool duplicate = false;
    for (const auto& existing : perms) duplicate = duplicate || existing == perm;
    if (!duplicate) perms.push_back(std::move(perm));
  }
  // Random positive weights normalized to sum 1.
  std::vector<Rational> weights;
  Rational total;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    Rational w(1 + static_cast<long long>(gen() % 5), 1 + static_cast<long long>(gen() % 5));
    weights.push_back(w);
    total += w;
  }
  std::vector<std::pair<std::vector<int>, Rational>> entries;
  for (std::size_t i = 0; i < perms.size(); ++i)
    entries.emplace_back(perms[i], weights[i] / total);
  return OrderDistribution(n, std::move(entries));
}

}  // namespace testutil
