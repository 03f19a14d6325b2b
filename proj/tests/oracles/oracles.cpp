#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lpakk/smith.hpp"

namespace oracle {

using lpakk::cokernel_via_hermite;
using lpakk::kernel_basis;
using lpakk::snf;

FgAbGroup homology(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (!lpakk::matmul(d_out, d_in).is_zero()) throw std::logic_error("homology: d^2 != 0");
  const IntMatrix k = kernel_basis(d_out);
  const std::size_t n = k.rows();
  const std::size_t dim = k.cols();
  // Left inverse of the kernel basis: P K Q = [I; 0] because a kernel is a
  // saturated sublattice, hence L = Q [I 0] P.
  const auto s = snf(k);
  for (const auto& d : s.invariant_factors)
    if (d != 1) throw std::logic_error("homology: kernel basis not saturated");
  IntMatrix proj(dim, n);
  for (std::size_t i = 0; i < dim; ++i) proj(i, i) = 1;
  const IntMatrix left = lpakk::matmul(s.q, lpakk::matmul(proj, s.p));
  const IntMatrix coords = lpakk::matmul(left, d_in);
  if (!(lpakk::matmul(k, coords) == d_in)) throw std::logic_error("homology: image not in kernel");
  return cokernel_via_hermite(coords);
}

IntMatrix presentation(const FgAbGroup& a) {
  const std::size_t t = a.torsion().size();
  IntMatrix d(a.rank() + t, t);
  for (std::size_t i = 0; i < t; ++i) d(a.rank() + i, i) = a.torsion()[i];
  return d;
}

namespace {

// Row-major flattening of a block of matrices into one coordinate vector.
std::vector<BigInt> flatten(std::initializer_list<const IntMatrix*> blocks) {
  std::vector<BigInt> out;
  for (const IntMatrix* m : blocks)
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j) out.push_back((*m)(i, j));
  return out;
}

struct Shape {
  std::size_t rows;
  std::size_t cols;
  std::size_t size() const { return rows * cols; }
};

// Matrix of a linear map from a direct sum of matrix spaces, found by
// applying the map to every unit matrix.
IntMatrix matrix_of(const std::vector<Shape>& domain, std::size_t codim,
                    const std::function<std::vector<BigInt>(const std::vector<IntMatrix>&)>& f) {
  std::size_t dim = 0;
  for (const auto& s : domain) dim += s.size();
  IntMatrix out(codim, dim);
  std::size_t col = 0;
  for (std::size_t b = 0; b < domain.size(); ++b)
    for (std::size_t i = 0; i < domain[b].rows; ++i)
      for (std::size_t j = 0; j < domain[b].cols; ++j, ++col) {
        std::vector<IntMatrix> args;
        for (const auto& s : domain) args.emplace_back(s.rows, s.cols);
        args[b](i, j) = 1;
        const auto image = f(args);
        if (image.size() != codim) throw std::logic_error("matrix_of: bad image size");
        for (std::size_t r = 0; r < codim; ++r) out(r, col) = image[r];
      }
  return out;
}

IntMatrix scaled(const IntMatrix& m, long c) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= c;
  return out;
}

// Total complex of P_A (x) P_B, elements of A_i (x) B_j written as
// (dim A_i) x (dim B_j) matrices.
struct TensorComplex {
  IntMatrix d2;  // A1(x)B1 -> A0(x)B1 + A1(x)B0
  IntMatrix d1;  // A0(x)B1 + A1(x)B0 -> A0(x)B0
};

TensorComplex tensor_complex(const FgAbGroup& a, const FgAbGroup& b) {
  using lpakk::matmul;
  using lpakk::transpose;
  const IntMatrix da = presentation(a);
  const IntMatrix db = presentation(b);
  const Shape a0b0{da.rows(), db.rows()}, a0b1{da.rows(), db.cols()}, a1b0{da.cols(), db.rows()},
      a1b1{da.cols(), db.cols()};
  TensorComplex c;
  c.d1 = matrix_of({a0b1, a1b0}, a0b0.size(), [&](const std::vector<IntMatrix>& x) {
    const IntMatrix y = matmul(x[0], transpose(db)) + matmul(da, x[1]);
    return flatten({&y});
  });
  c.d2 = matrix_of({a1b1}, a0b1.size() + a1b0.size(), [&](const std::vector<IntMatrix>& x) {
    const IntMatrix u = matmul(da, x[0]);
    const IntMatrix v = scaled(matmul(x[0], transpose(db)), -1);
    return flatten({&u, &v});
  });
  return c;
}

// Total complex Hom(P_A, P_B): degree -1 is Hom(A0, B1), degree 0 is
// Hom(A0, B0) + Hom(A1, B1), degree 1 is Hom(A1, B0).
struct HomComplex {
  IntMatrix dm1;  // f |-> (Db f, f Da)
  IntMatrix d0;   // (g, h) |-> g Da - Db h
};

HomComplex hom_complex(const FgAbGroup& a, const FgAbGroup& b) {
  using lpakk::matmul;
  const IntMatrix da = presentation(a);
  const IntMatrix db = presentation(b);
  const Shape h01{db.cols(), da.rows()}, h00{db.rows(), da.rows()}, h11{db.cols(), da.cols()},
      h10{db.rows(), da.cols()};
  HomComplex c;
  c.dm1 = matrix_of({h01}, h00.size() + h11.size(), [&](const std::vector<IntMatrix>& f) {
    const IntMatrix g = matmul(db, f[0]);
    const IntMatrix h = matmul(f[0], da);
    return flatten({&g, &h});
  });
  c.d0 = matrix_of({h00, h11}, h10.size(), [&](const std::vector<IntMatrix>& x) {
    const IntMatrix y = matmul(x[0], da) - matmul(db, x[1]);
    return flatten({&y});
  });
  return c;
}

}  // namespace

FgAbGroup tensor_via_resolution(const FgAbGroup& a, const FgAbGroup& b) {
  const TensorComplex c = tensor_complex(a, b);
  return homology(c.d1, IntMatrix(0, c.d1.rows()));
}

FgAbGroup tor_via_resolution(const FgAbGroup& a, const FgAbGroup& b) {
  const TensorComplex c = tensor_complex(a, b);
  return homology(c.d2, c.d1);
}

FgAbGroup hom_via_resolution(const FgAbGroup& a, const FgAbGroup& b) {
  const HomComplex c = hom_complex(a, b);
  return homology(c.dm1, c.d0);
}

FgAbGroup ext_via_resolution(const FgAbGroup& a, const FgAbGroup& b) {
  const HomComplex c = hom_complex(a, b);
  return homology(c.d0, IntMatrix(0, c.d0.rows()));
}

// ---- enumeration ----

namespace {

using Element = std::vector<std::uint64_t>;

void for_each_element(const std::vector<std::uint64_t>& orders,
                      const std::function<void(const Element&)>& fn) {
  Element x(orders.size(), 0);
  for (;;) {
    fn(x);
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == orders[i]) x[i++] = 0;
    if (i == x.size()) return;
  }
}

Element times(const std::vector<std::uint64_t>& orders, const Element& x, std::uint64_t m) {
  Element y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] * (m % orders[i])) % orders[i];
  return y;
}

bool is_zero(const Element& x) {
  return std::all_of(x.begin(), x.end(), [](std::uint64_t v) { return v == 0; });
}

std::uint64_t element_order(const std::vector<std::uint64_t>& orders, const Element& x) {
  std::uint64_t m = 1;
  Element y = x;
  while (!is_zero(y)) {
    ++m;
    y = times(orders, x, m);
  }
  return m;
}

}  // namespace

OrderProfile product_profile(const OrderProfile& a, const OrderProfile& b) {
  OrderProfile out;
  for (const auto& [oa, ca] : a)
    for (const auto& [ob, cb] : b) out[std::lcm(oa, ob)] += ca * cb;
  return out;
}

OrderProfile enumerate_profile(const std::vector<std::uint64_t>& orders) {
  // Each cyclic factor is enumerated; factors are combined with
  // product_profile so large products never get listed element by element.
  OrderProfile total{{1, 1}};
  for (std::uint64_t n : orders) {
    OrderProfile cyc;
    for_each_element({n}, [&](const Element& x) { ++cyc[element_order({n}, x)]; });
    total = product_profile(total, cyc);
  }
  return total;
}

OrderProfile profile_of(const FgAbGroup& g) {
  if (!g.is_finite()) throw std::logic_error("profile_of: infinite group");
  std::vector<std::uint64_t> orders;
  for (const auto& t : g.torsion()) orders.push_back(t.get_ui());
  return enumerate_profile(orders);
}

OrderProfile killed_by(const std::vector<std::uint64_t>& b, std::uint64_t a) {
  OrderProfile out;
  for_each_element(b, [&](const Element& x) {
    if (is_zero(times(b, x, a))) ++out[element_order(b, x)];
  });
  return out;
}

OrderProfile quotient_by_multiple(const std::vector<std::uint64_t>& b, std::uint64_t a) {
  std::set<Element> sub;
  for_each_element(b, [&](const Element& x) { sub.insert(times(b, x, a)); });
  OrderProfile raw;
  for_each_element(b, [&](const Element& x) {
    std::uint64_t m = 1;
    while (!sub.count(times(b, x, m))) ++m;
    ++raw[m];
  });
  OrderProfile out;
  for (const auto& [o, c] : raw) out[o] = c / sub.size();
  return out;
}

OrderProfile brute_hom(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  OrderProfile total{{1, 1}};
  for (std::uint64_t ai : a) total = product_profile(total, killed_by(b, ai));
  return total;
}

OrderProfile brute_quotient(const std::vector<std::uint64_t>& a,
                            const std::vector<std::uint64_t>& b) {
  OrderProfile total{{1, 1}};
  for (std::uint64_t ai : a) total = product_profile(total, quotient_by_multiple(b, ai));
  return total;
}

namespace {

void partitions(std::uint64_t n, std::uint64_t max_part, std::vector<std::uint64_t>& cur,
                std::vector<std::vector<std::uint64_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> groups_of_order(std::uint64_t n) {
  // Elementary divisors per prime, combined over primes.
  std::vector<std::vector<std::vector<std::uint64_t>>> per_prime;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; m > 1; ++p) {
    std::uint64_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e == 0) continue;
    std::vector<std::vector<std::uint64_t>> parts;
    std::vector<std::uint64_t> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> powers;
    for (const auto& part : parts) {
      std::vector<std::uint64_t> pw;
      for (std::uint64_t k : part) {
        std::uint64_t q = 1;
        for (std::uint64_t i = 0; i < k; ++i) q *= p;
        pw.push_back(q);
      }
      powers.push_back(pw);
    }
    per_prime.push_back(powers);
  }
  std::vector<std::vector<std::uint64_t>> out{{}};
  for (const auto& choices : per_prime) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& base : out)
      for (const auto& c : choices) {
        auto v = base;
        v.insert(v.end(), c.begin(), c.end());
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

// ---- matrices ----

BigInt permutation_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::logic_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    BigInt term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += inversions % 2 ? BigInt(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BigInt> determinantal_divisor_factors(const IntMatrix& m) {
  std::vector<BigInt> factors;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        const BigInt d = permutation_determinant(m.select_rows(r).select_cols(c));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

// ---- graphs ----

IntMatrix boundary_from_edges(const lpakk::Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> out_degree(n, 0);
  for (const auto& e : g.edges()) ++out_degree[e.src];
  std::vector<std::size_t> regular;
  for (std::size_t v = 0; v < n; ++v)
    if (out_degree[v] > 0 && !g.is_infinite_emitter(v)) regular.push_back(v);
  IntMatrix m(n, regular.size());
  for (std::size_t j = 0; j < regular.size(); ++j) {
    m(regular[j], j) += 1;
    for (const auto& e : g.edges())
      if (e.src == regular[j]) m(e.dst, j) -= 1;
  }
  return m;
}

}  // namespace oracle
