#include "lpakk/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace lpakk {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in a[t:, t:].
std::optional<Position> min_abs_entry(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      if (!best || mpz_cmpabs(a(i, j).get_mpz_t(), a(best->row, best->col).get_mpz_t()) < 0) best = Position{i, j};
    }
  return best;
}

// Smallest nonzero |entry| in row t or column t, excluding the pivot itself.
std::optional<Position> min_abs_in_cross(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (sgn(a(i, j)) == 0) return;
    if (!best || mpz_cmpabs(a(i, j).get_mpz_t(), a(best->row, best->col).get_mpz_t()) < 0) best = Position{i, j};
  };
  for (std::size_t i = t + 1; i < a.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < a.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace

SnfDecomposition snf(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix p = IntMatrix::identity(m.rows());
  IntMatrix q = IntMatrix::identity(m.cols());
  const std::size_t bound = std::min(m.rows(), m.cols());

  std::size_t t = 0;
  BigInt quot;
  for (; t < bound; ++t) {
    auto pivot = min_abs_entry(a, t);
    if (!pivot) break;
    a.swap_rows(t, pivot->row);
    p.swap_rows(t, pivot->row);
    a.swap_cols(t, pivot->col);
    q.swap_cols(t, pivot->col);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        quot = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -quot);
        p.add_row_multiple(i, t, -quot);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        quot = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -quot);
        q.add_col_multiple(j, t, -quot);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (clean) break;
      // Remainders are strictly smaller than the pivot: promote the smallest.
      auto next = min_abs_in_cross(a, t);
      a.swap_rows(t, next->row);
      p.swap_rows(t, next->row);
      a.swap_cols(t, next->col);
      q.swap_cols(t, next->col);
    }
    if (sgn(a(t, t)) < 0) {
      a.negate_row(t);
      p.negate_row(t);
    }
  }
  const std::size_t k = t;

  // Divisibility pass: diag(x, y) -> diag(gcd, lcm) by a 2x2 unimodular pair.
  BigInt g, s, u;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const BigInt x = a(i, i);
      const BigInt y = a(j, j);
      if (mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) continue;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      const BigInt yg = y / g;
      const BigInt xg = x / g;
      a.combine_rows(i, j, s, u, -yg, xg);
      p.combine_rows(i, j, s, u, -yg, xg);
      const BigInt one = 1;
      const BigInt z = -u * yg;
      const BigInt w = s * xg;
      a.combine_cols(i, j, one, one, z, w);
      q.combine_cols(i, j, one, one, z, w);
    }
  }

  SnfDecomposition out;
  out.invariant_factors.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.invariant_factors.push_back(a(i, i));
  out.d = std::move(a);
  out.p = std::move(p);
  out.q = std::move(q);
  return out;
}

std::size_t rank(const IntMatrix& m) { return snf(m).rank(); }

IntMatrix kernel_basis(const IntMatrix& m) {
  const SnfDecomposition s = snf(m);
  // M x = 0 iff D (Q^-1 x) = 0, so the trailing columns of Q span the kernel.
  return s.q.submatrix(0, s.rank(), m.cols(), m.cols() - s.rank());
}

FgAbGroup cokernel(const SnfDecomposition& s) {
  return FgAbGroup::from_cyclic_orders(s.d.rows() - s.rank(), s.invariant_factors);
}

FgAbGroup cokernel(const IntMatrix& m) { return cokernel(snf(m)); }

HermiteForm hermite(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  BigInt g, s, t, quot;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    std::size_t first = r;
    while (first < h.rows() && sgn(h(first, c)) == 0) ++first;
    if (first == h.rows()) continue;
    h.swap_rows(r, first);
    u.swap_rows(r, first);
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (sgn(h(i, c)) == 0) continue;
      const BigInt a = h(r, c);
      const BigInt b = h(i, c);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const BigInt bg = -(b / g);
      const BigInt ag = a / g;
      h.combine_rows(r, i, s, t, bg, ag);
      u.combine_rows(r, i, s, t, bg, ag);
    }
    if (sgn(h(r, c)) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(quot.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      h.add_row_multiple(i, r, -quot);
      u.add_row_multiple(i, r, -quot);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

FgAbGroup cokernel_via_hermite(const IntMatrix& m) {
  IntMatrix a = m;
  // Each round either clears a pivot cross or shrinks a pivot, so this ends.
  while (!a.is_diagonal()) {
    a = hermite(a).h;
    if (a.is_diagonal()) break;
    a = transpose(hermite(transpose(a)).h);
  }
  std::vector<BigInt> orders;
  const std::size_t bound = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < bound; ++i)
    if (sgn(a(i, i)) != 0) orders.push_back(a(i, i));
  const std::size_t free_rank = a.rows() - orders.size();
  return FgAbGroup::from_cyclic_orders(free_rank, std::move(orders));
}

}  // namespace lpakk
