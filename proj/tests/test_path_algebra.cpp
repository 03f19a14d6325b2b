#include <doctest.h>

#include "lpakk/error.hpp"
#include "lpakk/graph.hpp"
#include "lpakk/path_algebra.hpp"
#include "lpakk/random.hpp"

using namespace lpakk;

namespace {

Graph rose_named(std::vector<std::string> names) {
  const std::uint64_t n = names.size();
  return Graph({"v"}, {{"v", "v", n, std::move(names)}});
}

Graph toeplitz() { return Graph({"v", "w"}, {{"v", "v", 1, {"e"}}, {"v", "w", 1, {"f"}}}); }

std::string eval(const Graph& g, AlgebraMode mode, const std::string& expr) {
  return parse(expr, PathAlgebra(g, mode)).to_string();
}

Word random_word(Rng& rng, const PathAlgebra& alg, std::size_t max_len) {
  const Graph& g = alg.graph();
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> kind(0, 3);
  Word w;
  for (std::size_t n = len(rng); n > 0; --n) {
    switch (kind(rng)) {
      case 0:
        w.push_back({LetterKind::vertex, std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng)});
        break;
      case 1:
        w.push_back({LetterKind::edge, std::uniform_int_distribution<std::size_t>(0, g.edges().size() - 1)(rng)});
        break;
      case 2:
        w.push_back({LetterKind::ghost, std::uniform_int_distribution<std::size_t>(0, g.edges().size() - 1)(rng)});
        break;
      default: {
        std::vector<std::size_t> reg;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
          if (alg.is_regular(v)) reg.push_back(v);
        w.push_back({LetterKind::q, reg[std::uniform_int_distribution<std::size_t>(0, reg.size() - 1)(rng)]});
      }
    }
  }
  return w;
}

AlgebraElement random_element(Rng& rng, const PathAlgebra& alg) {
  AlgebraElement x(alg);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int k = 0; k < 3; ++k) x += AlgebraElement::from_word(alg, random_word(rng, alg, 3), coeff(rng));
  return x;
}

}  // namespace

TEST_CASE("parsing and printing") {
  const Graph r2 = rose_named({"e", "f"});
  CHECK(eval(r2, AlgebraMode::leavitt, "e*e") == "v");
  CHECK(eval(r2, AlgebraMode::leavitt, "e* f") == "0");
  CHECK(eval(r2, AlgebraMode::leavitt, "e e* + f f*") == "v");
  CHECK(eval(r2, AlgebraMode::cohn, "e e* + f f*") == "v - q[v]");
  CHECK(eval(r2, AlgebraMode::cohn, "f f*") == "f f*");
  CHECK(eval(r2, AlgebraMode::leavitt, "e e*") == "v - f f*");
  CHECK(eval(r2, AlgebraMode::leavitt, "2 e . f - 2 e f") == "0");
  CHECK(eval(r2, AlgebraMode::leavitt, "(e + f)*") == "e* + f*");
  CHECK(eval(r2, AlgebraMode::leavitt, "e**") == "e");
  CHECK(eval(r2, AlgebraMode::leavitt, "3") == "3 v");
  CHECK(eval(r2, AlgebraMode::leavitt, "-f + e") == "e - f");
  CHECK(eval(r2, AlgebraMode::cohn, "q[v] e") == "0");
  CHECK(eval(r2, AlgebraMode::cohn, "e* q[v]") == "0");
  CHECK(eval(r2, AlgebraMode::cohn, "f q[v] f*") == "f q[v] f*");
  CHECK(eval(r2, AlgebraMode::leavitt, "q[v]") == "0");
  CHECK(eval(toeplitz(), AlgebraMode::cohn, "q[w]") == "w");
  CHECK(eval(toeplitz(), AlgebraMode::leavitt, "f* e") == "0");
}

TEST_CASE("parse errors carry codes") {
  const PathAlgebra alg(rose_named({"e", "f"}), AlgebraMode::leavitt);
  auto code = [&](const std::string& s) {
    try {
      parse(s, alg);
    } catch (const DomainError& e) {
      return e.code();
    }
    return std::string();
  };
  CHECK(code("e + x") == "unknown_identifier");
  CHECK(code("q[w]") == "unknown_identifier");
  CHECK(code("(e + f") == "syntax_error");
  CHECK(code("e +") == "syntax_error");
  CHECK(code("e ] f") == "syntax_error");
  CHECK(code("") == "syntax_error");
}

TEST_CASE("printing round-trips through the parser") {
  Rng rng(5);
  for (const Graph& g : {rose_named({"e", "f"}), toeplitz(), cuntz_splice(rose(2), "v")})
    for (AlgebraMode mode : {AlgebraMode::cohn, AlgebraMode::leavitt}) {
      const PathAlgebra alg(g, mode);
      for (int k = 0; k < 50; ++k) {
        const AlgebraElement x = random_element(rng, alg);
        CHECK(parse(x.to_string(), alg) == x);
      }
    }
}

TEST_CASE("relation suite") {
  for (const Graph& g : {rose_named({"e", "f"}), rose(3), toeplitz(), cuntz_splice(rose(2), "v")})
    for (AlgebraMode mode : {AlgebraMode::cohn, AlgebraMode::leavitt}) {
      const auto checks = check_relations(PathAlgebra(g, mode));
      CHECK(checks.size() == (mode == AlgebraMode::leavitt ? 8u : 7u));
      for (const auto& c : checks) {
        CAPTURE(c.name);
        CHECK(c.holds);
      }
    }
}

TEST_CASE("infinite emitters") {
  const Graph g({"u", "v"}, {{"u", "v", 2, {"a", "b"}}, {"v", "v", 1, {"c"}}}, {"u"});
  const PathAlgebra alg(g, AlgebraMode::leavitt);
  // No (CK2) at u, so a a* + b b* is already reduced.
  CHECK(parse("a a* + b b*", alg).to_string() == "a a* + b b*");
  CHECK(parse("a* a", alg).to_string() == "v");
  CHECK_THROWS_AS(parse("q[u]", alg), DomainError);
  CHECK_THROWS_AS(AlgebraElement::m(alg, 0), DomainError);
  for (const auto& c : check_relations(alg)) CHECK(c.holds);
  CHECK_THROWS_AS(rho_truncated(parse("c", PathAlgebra(g, AlgebraMode::cohn)), 2), DomainError);
}

TEST_CASE("rewriting strategies agree") {
  Rng rng(99);
  for (const Graph& g : {rose_named({"e", "f"}), rose(3), toeplitz(), cuntz_splice(rose(2), "v")})
    for (AlgebraMode mode : {AlgebraMode::cohn, AlgebraMode::leavitt}) {
      const PathAlgebra alg(g, mode);
      for (int k = 0; k < 100; ++k) {
        const Word w = random_word(rng, alg, 5);
        CHECK(alg.reduce(w, 1, RewriteStrategy::leftmost) == alg.reduce(w, 1, RewriteStrategy::rightmost));
      }
    }
}

TEST_CASE("multiplication is associative and the involution is anti-multiplicative") {
  Rng rng(12);
  for (const Graph& g : {rose_named({"e", "f"}), toeplitz(), cuntz_splice(rose(2), "v")})
    for (AlgebraMode mode : {AlgebraMode::cohn, AlgebraMode::leavitt}) {
      const PathAlgebra alg(g, mode);
      const AlgebraElement one = AlgebraElement::one(alg);
      for (int k = 0; k < 40; ++k) {
        const AlgebraElement a = random_element(rng, alg), b = random_element(rng, alg),
                             c = random_element(rng, alg);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).star() == b.star() * a.star());
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(one * a == a);
        CHECK(a * one == a);
        CHECK(multiply(a, b, RewriteStrategy::rightmost) == a * b);
      }
    }
}

TEST_CASE("paths and rho") {
  const Graph t = toeplitz();
  const auto paths = enumerate_paths(t, 2);
  // v, w, e, f, ee, ef.
  REQUIRE(paths.size() == 6);
  CHECK(paths[4].edges == std::vector<std::size_t>{0, 0});
  CHECK(paths[5].edges == std::vector<std::size_t>{0, 1});

  const PathAlgebra alg(t, AlgebraMode::cohn);
  const TruncatedRho v = rho_truncated(parse("v", alg), 2);
  // rho(v) is the projection onto paths that start at v.
  for (std::size_t i = 0; i < v.index.size(); ++i) CHECK(v.matrix(i, i) == (v.index[i].source == 0 ? 1 : 0));
  const TruncatedRho q = rho_truncated(parse("q[v]", alg), 2);
  CHECK(q.matrix(0, 0) == 1);
  CHECK(q.matrix.is_diagonal());
  BigInt trace = 0;
  for (std::size_t i = 0; i < q.index.size(); ++i) trace += q.matrix(i, i);
  CHECK(trace == 1);
  CHECK_THROWS_AS(rho_truncated(parse("v", PathAlgebra(t, AlgebraMode::leavitt)), 2), DomainError);
}

TEST_CASE("rho is multiplicative on the safe window") {
  Rng rng(31);
  for (const Graph& g : {rose_named({"e", "f"}), toeplitz(), cuntz_splice(rose(2), "v")}) {
    const PathAlgebra alg(g, AlgebraMode::cohn);
    for (int k = 0; k < 30; ++k) {
      const AlgebraElement a = random_element(rng, alg), b = random_element(rng, alg);
      const std::size_t maxlen = 4;
      const std::size_t deg = std::max(a.degree(), b.degree());
      if (deg > maxlen) continue;
      const TruncatedRho ra = rho_truncated(a, maxlen), rb = rho_truncated(b, maxlen),
                         rab = rho_truncated(a * b, maxlen);
      const IntMatrix prod = matmul(ra.matrix, rb.matrix);
      for (std::size_t i = 0; i < rab.index.size(); ++i)
        for (std::size_t j = 0; j < rab.index.size(); ++j)
          if (rab.index[i].length() + deg <= maxlen && rab.index[j].length() + deg <= maxlen)
            CHECK(prod(i, j) == rab.matrix(i, j));
    }
  }
}
