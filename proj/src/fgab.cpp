#include "lpakk/fgab.hpp"

#include <algorithm>
#include <sstream>

#include "lpakk/error.hpp"

namespace lpakk {

namespace {

BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

void require_non_negative(const BigInt& d) {
  if (sgn(d) < 0) throw DomainError("invalid_argument", "multiplier must be non-negative");
}

// Cyclic orders gcd(t, u) over all torsion pairs; shared by Hom, Ext, Tor and tensor.
void append_pairwise_gcds(const FgAbGroup& a, const FgAbGroup& b, std::vector<BigInt>& out) {
  for (const auto& t : a.torsion())
    for (const auto& u : b.torsion()) out.push_back(gcd_of(t, u));
}

void append_repeated(const std::vector<BigInt>& orders, std::size_t times,
                     std::vector<BigInt>& out) {
  for (std::size_t k = 0; k < times; ++k) out.insert(out.end(), orders.begin(), orders.end());
}

}  // namespace

FgAbGroup FgAbGroup::free(std::size_t rank) {
  FgAbGroup g;
  g.rank_ = rank;
  return g;
}

FgAbGroup FgAbGroup::cyclic(const BigInt& n) { return from_cyclic_orders(0, {n}); }

FgAbGroup FgAbGroup::from_cyclic_orders(std::size_t rank, std::vector<BigInt> orders) {
  FgAbGroup g;
  g.rank_ = rank;
  std::vector<BigInt> finite;
  finite.reserve(orders.size());
  for (auto& n : orders) {
    if (sgn(n) == 0) {
      ++g.rank_;
      continue;
    }
    BigInt m = abs(n);
    if (m != 1) finite.push_back(std::move(m));
  }
  std::sort(finite.begin(), finite.end());
  // After row i is processed, finite[i] divides every later entry.
  for (std::size_t i = 0; i < finite.size(); ++i) {
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      if (mpz_divisible_p(finite[j].get_mpz_t(), finite[i].get_mpz_t())) continue;
      BigInt gg = gcd_of(finite[i], finite[j]);
      BigInt l = finite[i] / gg * finite[j];
      finite[i] = std::move(gg);
      finite[j] = std::move(l);
    }
  }
  for (auto& n : finite)
    if (n != 1) g.torsion_.push_back(std::move(n));
  return g;
}

std::optional<BigInt> FgAbGroup::order() const {
  if (rank_ != 0) return std::nullopt;
  BigInt n = 1;
  for (const auto& t : torsion_) n *= t;
  return n;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << "Z^" << rank_;
    first = false;
  }
  for (const auto& t : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

FgAbGroup direct_sum(std::span<const FgAbGroup> groups) {
  std::size_t rank = 0;
  std::vector<BigInt> orders;
  for (const auto& g : groups) {
    rank += g.rank();
    orders.insert(orders.end(), g.torsion().begin(), g.torsion().end());
  }
  return FgAbGroup::from_cyclic_orders(rank, std::move(orders));
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  const FgAbGroup both[] = {a, b};
  return direct_sum(both);
}

FgAbGroup power(const FgAbGroup& a, std::size_t n) {
  std::vector<BigInt> orders;
  append_repeated(a.torsion(), n, orders);
  return FgAbGroup::from_cyclic_orders(a.rank() * n, std::move(orders));
}

// Hom(Z^r + T, Z^s + U) = Z^{rs} + U^r + sum Z/gcd(t, u).
FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<BigInt> orders;
  append_repeated(b.torsion(), a.rank(), orders);
  append_pairwise_gcds(a, b, orders);
  return FgAbGroup::from_cyclic_orders(a.rank() * b.rank(), std::move(orders));
}

// Ext(Z^r + T, Z^s + U) = T^s + sum Z/gcd(t, u).
FgAbGroup ext1(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<BigInt> orders;
  append_repeated(a.torsion(), b.rank(), orders);
  append_pairwise_gcds(a, b, orders);
  return FgAbGroup::from_cyclic_orders(0, std::move(orders));
}

FgAbGroup tor1(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<BigInt> orders;
  append_pairwise_gcds(a, b, orders);
  return FgAbGroup::from_cyclic_orders(0, std::move(orders));
}

// (Z^r + T) (x) (Z^s + U) = Z^{rs} + U^r + T^s + sum Z/gcd(t, u).
FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<BigInt> orders;
  append_repeated(b.torsion(), a.rank(), orders);
  append_repeated(a.torsion(), b.rank(), orders);
  append_pairwise_gcds(a, b, orders);
  return FgAbGroup::from_cyclic_orders(a.rank() * b.rank(), std::move(orders));
}

FgAbGroup torsion_part(const FgAbGroup& a) { return FgAbGroup::from_cyclic_orders(0, a.torsion()); }

FgAbGroup d_torsion(const FgAbGroup& a, const BigInt& d) {
  require_non_negative(d);
  if (sgn(d) == 0) return a;
  std::vector<BigInt> orders;
  for (const auto& t : a.torsion()) orders.push_back(gcd_of(t, d));
  return FgAbGroup::from_cyclic_orders(0, std::move(orders));
}

FgAbGroup mod_d(const FgAbGroup& a, const BigInt& d) {
  require_non_negative(d);
  if (sgn(d) == 0) return a;
  std::vector<BigInt> orders(a.rank(), d);
  for (const auto& t : a.torsion()) orders.push_back(gcd_of(t, d));
  return FgAbGroup::from_cyclic_orders(0, std::move(orders));
}

}  // namespace lpakk
