#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpakk/int_matrix.hpp"

namespace lpakk {

/// A finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk held in
/// invariant-factor form: every di >= 2 and di divides d(i+1). Two values
/// compare equal exactly when the groups are isomorphic.
class FgAbGroup {
 public:
  FgAbGroup() = default;

  static FgAbGroup free(std::size_t rank);
  /// Z/n; n = 0 gives Z and n = +-1 the trivial group.
  static FgAbGroup cyclic(const BigInt& n);
  /// Canonicalizes an arbitrary direct sum of cyclic groups. Zero orders
  /// count as free summands, units are dropped, signs are ignored.
  static FgAbGroup from_cyclic_orders(std::size_t rank, std::vector<BigInt> orders);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return rank_ == 0; }
  bool is_free() const noexcept { return torsion_.empty(); }
  /// Group order; nullopt when the group is infinite.
  std::optional<BigInt> order() const;

  /// "Z^2 + Z/2 + Z/6"; the trivial group renders as "0".
  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<BigInt> torsion_;
};

FgAbGroup direct_sum(std::span<const FgAbGroup> groups);
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
/// n-fold direct sum of a with itself.
FgAbGroup power(const FgAbGroup& a, std::size_t n);

FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup ext1(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tor1(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);

FgAbGroup torsion_part(const FgAbGroup& a);
/// a[d] = { x : d x = 0 }. d must be non-negative; a[0] = a.
FgAbGroup d_torsion(const FgAbGroup& a, const BigInt& d);
/// a / d a. d must be non-negative; a / 0 = a.
FgAbGroup mod_d(const FgAbGroup& a, const BigInt& d);

inline bool is_iso(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

}  // namespace lpakk
