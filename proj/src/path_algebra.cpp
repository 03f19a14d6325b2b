#include "lpakk/path_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "lpakk/error.hpp"

namespace lpakk {

std::strong_ordering compare_paths(const Path& a, const Path& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = a.edges <=> b.edges; c != 0) return c;
  return a.source <=> b.source;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (auto c = compare_paths(a.alpha, b.alpha); c != 0) return c < 0;
  if (auto c = compare_paths(a.beta, b.beta); c != 0) return c < 0;
  return a.q < b.q;
}

PathAlgebra::PathAlgebra(Graph g, AlgebraMode mode) {
  auto ctx = std::make_shared<Context>();
  const VertexClass vc = classify_vertices(g);
  const std::size_t n = g.vertex_count();
  ctx->regular.assign(n, false);
  ctx->special.assign(n, std::nullopt);
  for (std::size_t v = 0; v < n; ++v) {
    if (vc.kind[v] != VertexKind::regular) continue;
    ctx->regular[v] = true;
    ctx->special[v] = g.out_edges(v).front();
  }
  ctx->graph = std::move(g);
  ctx->mode = mode;
  ctx_ = std::move(ctx);
}

std::size_t PathAlgebra::range(const Path& p) const {
  return p.edges.empty() ? p.source : edge_range(p.edges.back());
}

namespace {

using Replacement = std::vector<std::pair<Word, int>>;

Letter V(std::size_t v) { return {LetterKind::vertex, v}; }
Letter E(std::size_t e) { return {LetterKind::edge, e}; }
Letter G(std::size_t e) { return {LetterKind::ghost, e}; }
Letter Q(std::size_t v) { return {LetterKind::q, v}; }

Replacement keep(Letter l, bool cond) {
  if (!cond) return {};
  return {{Word{l}, 1}};
}

}  // namespace

// Two-letter rewrite rules. nullopt means the pair is irreducible; an empty
// replacement means the product is zero.
static std::optional<Replacement> rewrite_pair(const PathAlgebra& alg, Letter x, Letter y) {
  const auto s = [&](std::size_t e) { return alg.edge_source(e); };
  const auto r = [&](std::size_t e) { return alg.edge_range(e); };
  switch (x.kind) {
    case LetterKind::vertex:
      switch (y.kind) {
        case LetterKind::vertex: return keep(x, x.id == y.id);
        case LetterKind::edge: return keep(y, s(y.id) == x.id);
        case LetterKind::ghost: return keep(y, r(y.id) == x.id);
        case LetterKind::q: return keep(y, x.id == y.id);
      }
      break;
    case LetterKind::edge:
      switch (y.kind) {
        case LetterKind::vertex: return keep(x, r(x.id) == y.id);
        case LetterKind::edge:
          if (r(x.id) != s(y.id)) return Replacement{};
          return std::nullopt;
        case LetterKind::ghost: {
          if (r(x.id) != r(y.id)) return Replacement{};
          const std::size_t v = s(x.id);
          if (x.id != y.id || alg.special_edge(v) != x.id) return std::nullopt;
          Replacement out{{Word{V(v)}, 1}, {Word{Q(v)}, -1}};
          for (std::size_t f : alg.graph().out_edges(v))
            if (f != x.id) out.push_back({Word{E(f), G(f)}, -1});
          return out;
        }
        case LetterKind::q:
          if (r(x.id) != y.id) return Replacement{};
          return std::nullopt;
      }
      break;
    case LetterKind::ghost:
      switch (y.kind) {
        case LetterKind::vertex: return keep(x, s(x.id) == y.id);
        case LetterKind::edge: return keep(V(r(x.id)), x.id == y.id);
        case LetterKind::ghost:
          if (s(x.id) != r(y.id)) return Replacement{};
          return std::nullopt;
        case LetterKind::q: return Replacement{};
      }
      break;
    case LetterKind::q:
      switch (y.kind) {
        case LetterKind::vertex: return keep(x, x.id == y.id);
        case LetterKind::edge: return Replacement{};
        case LetterKind::ghost:
          if (r(y.id) != x.id) return Replacement{};
          return std::nullopt;
        case LetterKind::q: return keep(x, x.id == y.id);
      }
      break;
  }
  return std::nullopt;
}

std::optional<std::size_t> PathAlgebra::find_redex(const Word& w, RewriteStrategy strategy,
                                                   bool& single) const {
  const bool leavitt = mode() == AlgebraMode::leavitt;
  auto single_at = [&](std::size_t i) { return leavitt && w[i].kind == LetterKind::q; };
  auto pair_at = [&](std::size_t i) { return rewrite_pair(*this, w[i], w[i + 1]).has_value(); };
  const std::size_t n = w.size();
  if (strategy == RewriteStrategy::leftmost) {
    for (std::size_t i = 0; i < n; ++i) {
      if (single_at(i)) return single = true, i;
      if (i + 1 < n && pair_at(i)) return single = false, i;
    }
  } else {
    for (std::size_t i = n; i-- > 0;) {
      if (single_at(i)) return single = true, i;
      if (i > 0 && pair_at(i - 1)) return single = false, i - 1;
    }
  }
  return std::nullopt;
}

// Irreducible non-empty words are a single vertex or E^a [Q] G^b.
Monomial PathAlgebra::to_monomial(const Word& w) const {
  Monomial m;
  if (w.size() == 1 && w[0].kind == LetterKind::vertex) {
    m.alpha.source = m.beta.source = w[0].id;
    return m;
  }
  std::size_t i = 0;
  for (; i < w.size() && w[i].kind == LetterKind::edge; ++i) m.alpha.edges.push_back(w[i].id);
  std::optional<std::size_t> qv;
  if (i < w.size() && w[i].kind == LetterKind::q) {
    qv = w[i].id;
    m.q = true;
    ++i;
  }
  for (; i < w.size(); ++i) {
    if (w[i].kind != LetterKind::ghost)
      throw std::logic_error("to_monomial: word is not in normal form");
    m.beta.edges.push_back(w[i].id);
  }
  std::reverse(m.beta.edges.begin(), m.beta.edges.end());
  std::size_t mid = 0;
  if (!m.alpha.edges.empty())
    mid = edge_range(m.alpha.edges.back());
  else if (qv)
    mid = *qv;
  else
    mid = edge_range(m.beta.edges.back());
  m.alpha.source = m.alpha.edges.empty() ? mid : edge_source(m.alpha.edges.front());
  m.beta.source = m.beta.edges.empty() ? mid : edge_source(m.beta.edges.front());
  return m;
}

Word PathAlgebra::to_word(const Monomial& m) const {
  Word w;
  for (std::size_t e : m.alpha.edges) w.push_back(E(e));
  if (m.q) w.push_back(Q(range(m.alpha)));
  for (auto it = m.beta.edges.rbegin(); it != m.beta.edges.rend(); ++it) w.push_back(G(*it));
  if (w.empty()) w.push_back(V(m.alpha.source));
  return w;
}

std::string PathAlgebra::to_string(const Monomial& m) const {
  const Graph& g = graph();
  std::string out;
  for (const Letter& l : to_word(m)) {
    if (!out.empty()) out += ' ';
    switch (l.kind) {
      case LetterKind::vertex: out += g.vertices()[l.id]; break;
      case LetterKind::edge: out += g.edges()[l.id].name; break;
      case LetterKind::ghost: out += g.edges()[l.id].name + "*"; break;
      case LetterKind::q: out += "q[" + g.vertices()[l.id] + "]"; break;
    }
  }
  return out;
}

std::map<Monomial, BigInt> PathAlgebra::reduce(const Word& word, const BigInt& coeff,
                                               RewriteStrategy strategy) const {
  std::map<Monomial, BigInt> result;
  std::vector<std::pair<Word, BigInt>> stack;
  if (!word.empty() && sgn(coeff) != 0) stack.emplace_back(word, coeff);
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    bool single = false;
    const auto pos = find_redex(w, strategy, single);
    if (!pos) {
      BigInt& slot = result[to_monomial(w)];
      slot += c;
      continue;
    }
    const std::size_t i = *pos;
    if (single) continue;  // q_v = 0 in the Leavitt quotient
    const auto repl = *rewrite_pair(*this, w[i], w[i + 1]);
    for (const auto& [middle, factor] : repl) {
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      next.insert(next.end(), middle.begin(), middle.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
      stack.emplace_back(std::move(next), c * factor);
    }
  }
  std::erase_if(result, [](const auto& kv) { return sgn(kv.second) == 0; });
  return result;
}

AlgebraElement::AlgebraElement(PathAlgebra algebra, Terms terms)
    : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

AlgebraElement AlgebraElement::from_word(const PathAlgebra& a, const Word& w, const BigInt& coeff,
                                         RewriteStrategy strategy) {
  return AlgebraElement(a, a.reduce(w, coeff, strategy));
}

AlgebraElement AlgebraElement::vertex(const PathAlgebra& a, std::size_t v) {
  return from_word(a, {V(v)});
}

AlgebraElement AlgebraElement::edge(const PathAlgebra& a, std::size_t e) {
  return from_word(a, {E(e)});
}

AlgebraElement AlgebraElement::ghost(const PathAlgebra& a, std::size_t e) {
  return from_word(a, {G(e)});
}

AlgebraElement AlgebraElement::q(const PathAlgebra& a, std::size_t v) {
  if (a.graph().is_infinite_emitter(v))
    throw DomainError("infinite_emitter",
                      "q_v is undefined at infinite emitter '" + a.graph().vertices()[v] + "'");
  if (!a.is_regular(v)) return vertex(a, v);
  return from_word(a, {Q(v)});
}

AlgebraElement AlgebraElement::m(const PathAlgebra& a, std::size_t v) {
  if (a.graph().is_infinite_emitter(v))
    throw DomainError("infinite_emitter",
                      "m_v is undefined at infinite emitter '" + a.graph().vertices()[v] + "'");
  AlgebraElement out(a);
  for (std::size_t e : a.graph().out_edges(v)) out += from_word(a, {E(e), G(e)});
  return out;
}

AlgebraElement AlgebraElement::one(const PathAlgebra& a) {
  AlgebraElement out(a);
  for (std::size_t v = 0; v < a.graph().vertex_count(); ++v) out += vertex(a, v);
  return out;
}

std::size_t AlgebraElement::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void AlgebraElement::add_term(const Monomial& m, const BigInt& c) {
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

static void require_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.algebra() == b.algebra()))
    throw DomainError("algebra_mismatch", "elements belong to different algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

AlgebraElement operator*(const BigInt& c, const AlgebraElement& a) {
  AlgebraElement out(a.algebra_);
  if (sgn(c) == 0) return out;
  out.terms_ = a.terms_;
  for (auto& [m, x] : out.terms_) x *= c;
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, RewriteStrategy strategy) {
  require_same(a, b);
  const PathAlgebra& alg = a.algebra();
  AlgebraElement out(alg);
  for (const auto& [ma, ca] : a.terms()) {
    const Word wa = alg.to_word(ma);
    for (const auto& [mb, cb] : b.terms()) {
      Word w = wa;
      const Word wb = alg.to_word(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      out += AlgebraElement(alg, alg.reduce(w, ca * cb, strategy));
    }
  }
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement AlgebraElement::star() const {
  AlgebraElement out(algebra_);
  for (const auto& [m, c] : terms_) {
    // (alpha [q] beta^*)^* = beta [q] alpha^*; q_v is self-adjoint.
    Monomial s{m.beta, m.alpha, m.q};
    out.add_term(s, c);
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    const BigInt mag = abs(c);
    if (mag != 1) os << mag.get_str() << ' ';
    os << algebra_.to_string(m);
    first = false;
  }
  return os.str();
}

std::vector<Path> enumerate_paths(const Graph& g, std::size_t maxlen) {
  std::vector<Path> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(Path{v, {}});
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    const std::size_t end = out.size();
    std::vector<Path> level;
    for (std::size_t k = begin; k < end; ++k) {
      const Path& p = out[k];
      const std::size_t r = p.edges.empty() ? p.source : g.edges()[p.edges.back()].dst;
      for (std::size_t e : g.out_edges(r)) {
        Path next = p;
        if (next.edges.empty()) next.source = g.edges()[e].src;
        next.edges.push_back(e);
        level.push_back(std::move(next));
      }
    }
    std::sort(level.begin(), level.end(),
              [](const Path& a, const Path& b) { return compare_paths(a, b) < 0; });
    begin = end;
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

TruncatedRho rho_truncated(const AlgebraElement& a, std::size_t maxlen) {
  const PathAlgebra& alg = a.algebra();
  const Graph& g = alg.graph();
  if (alg.mode() != AlgebraMode::cohn)
    throw DomainError("unsupported_mode", "rho is defined on the Cohn algebra only");
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.is_infinite_emitter(v))
      throw DomainError("infinite_emitter", "rho requires a graph without infinite emitters");

  TruncatedRho out{enumerate_paths(g, maxlen), IntMatrix()};
  const std::size_t n = out.index.size();
  out.matrix = IntMatrix(n, n);
  auto cmp = [](const Path& x, const Path& y) { return compare_paths(x, y) < 0; };
  std::map<Path, std::size_t, decltype(cmp)> pos(cmp);
  for (std::size_t k = 0; k < n; ++k) pos.emplace(out.index[k], k);

  auto concat = [](const Path& x, const Path& theta) {
    if (x.edges.empty()) return theta;
    Path p = x;
    p.edges.insert(p.edges.end(), theta.edges.begin(), theta.edges.end());
    return p;
  };

  for (const auto& [m, c] : a.terms()) {
    const std::size_t la = m.alpha.length();
    const std::size_t lb = m.beta.length();
    if (la > maxlen || lb > maxlen) continue;
    if (m.q) {
      // q_v spans the complement of the paths through an edge at v.
      out.matrix(pos.at(m.alpha), pos.at(m.beta)) += c;
      continue;
    }
    const std::size_t mid = alg.range(m.alpha);
    const std::size_t room = maxlen - std::max(la, lb);
    for (const Path& theta : out.index) {
      if (theta.length() > room) break;
      if (theta.source != mid) continue;
      out.matrix(pos.at(concat(m.alpha, theta)), pos.at(concat(m.beta, theta))) += c;
    }
  }
  return out;
}

std::vector<RelationCheck> check_relations(const PathAlgebra& alg) {
  using AE = AlgebraElement;
  const Graph& g = alg.graph();
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edges().size();
  const AE zero(alg);
  std::vector<RelationCheck> out;

  bool ok = true;
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w = 0; w < nv; ++w)
      ok = ok && AE::vertex(alg, v) * AE::vertex(alg, w) == (v == w ? AE::vertex(alg, v) : zero);
  out.push_back({"V", ok});

  ok = true;
  for (std::size_t e = 0; e < ne; ++e) {
    const AE x = AE::edge(alg, e);
    ok = ok && AE::vertex(alg, alg.edge_source(e)) * x == x && x * AE::vertex(alg, alg.edge_range(e)) == x;
  }
  out.push_back({"E1", ok});

  ok = true;
  for (std::size_t e = 0; e < ne; ++e) {
    const AE x = AE::ghost(alg, e);
    ok = ok && AE::vertex(alg, alg.edge_range(e)) * x == x && x * AE::vertex(alg, alg.edge_source(e)) == x;
  }
  out.push_back({"E2", ok});

  ok = true;
  for (std::size_t e = 0; e < ne; ++e)
    for (std::size_t f = 0; f < ne; ++f)
      ok = ok && AE::ghost(alg, e) * AE::edge(alg, f) ==
                     (e == f ? AE::vertex(alg, alg.edge_range(e)) : zero);
  out.push_back({"CK1", ok});

  ok = true;
  for (std::size_t e = 0; e < ne; ++e) {
    const AE x = AE::edge(alg, e);
    ok = ok && (x * AE::ghost(alg, e)).star() == x * AE::ghost(alg, e) &&
         (x * x).star() == x.star() * x.star();
  }
  out.push_back({"involution", ok});

  ok = true;
  for (std::size_t v = 0; v < nv; ++v) {
    if (g.is_infinite_emitter(v)) continue;
    const AE mv = AE::m(alg, v);
    ok = ok && mv.star() == mv && mv * mv == mv;
    for (std::size_t w = 0; w < nv; ++w)
      ok = ok && mv * AE::vertex(alg, w) == (v == w ? mv : zero);
    for (std::size_t e = 0; e < ne; ++e)
      ok = ok && mv * AE::edge(alg, e) == (alg.edge_source(e) == v ? AE::edge(alg, e) : zero);
  }
  out.push_back({"m_v", ok});

  ok = true;
  for (std::size_t v = 0; v < nv; ++v) {
    if (g.is_infinite_emitter(v)) continue;
    const AE q = AE::q(alg, v);
    ok = ok && q == AE::vertex(alg, v) - AE::m(alg, v) && q * q == q && q.star() == q;
    for (std::size_t e : g.out_edges(v)) ok = ok && q * AE::edge(alg, e) == zero;
    if (alg.mode() == AlgebraMode::cohn && alg.is_regular(v)) ok = ok && !q.is_zero();
  }
  out.push_back({"q_v", ok});

  if (alg.mode() == AlgebraMode::leavitt) {
    ok = true;
    for (std::size_t v = 0; v < nv; ++v)
      if (alg.is_regular(v)) ok = ok && AE::m(alg, v) == AE::vertex(alg, v);
    out.push_back({"CK2", ok});
  }
  return out;
}

}  // namespace lpakk
