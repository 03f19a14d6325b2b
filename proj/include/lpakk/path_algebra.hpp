#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpakk/graph.hpp"
#include "lpakk/int_matrix.hpp"

namespace lpakk {

enum class AlgebraMode { cohn, leavitt };

/// A finite path: its start vertex and a composable edge sequence. Length-0
/// paths are vertices.
struct Path {
  std::size_t source = 0;
  std::vector<std::size_t> edges;

  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Length-lexicographic: shorter first, then edge indices, then start vertex.
std::strong_ordering compare_paths(const Path& a, const Path& b);

/// alpha beta^* (q == false) or alpha q_v beta^* with v = r(alpha) = r(beta).
struct Monomial {
  Path alpha;
  Path beta;
  bool q = false;

  std::size_t degree() const noexcept { return alpha.length() + beta.length(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b);
};

enum class LetterKind { vertex, edge, ghost, q };

/// Generator of the free algebra: a vertex, an edge e, a ghost edge e^*, or
/// q_v = v - sum_{s(e)=v} e e^* at a regular vertex v.
struct Letter {
  LetterKind kind;
  std::size_t id;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Order in which redexes are contracted when normalizing a word.
enum class RewriteStrategy { leftmost, rightmost };

/// Cohn or Leavitt path algebra of a graph over the integers.
///
/// Normal forms use the basis made of alpha beta^* where alpha and beta do not
/// both end in the distinguished ("special") edge of a regular vertex, plus,
/// in Cohn mode, alpha q_v beta^* for regular v. The special edge of a regular
/// vertex is its first listed outgoing edge. The rewrite e e^* -> v - q_v -
/// sum_{f != e} f f^* for special e, together with (V), (E1), (E2), (CK1) and
/// the q_v absorption rules, reduces every word to this basis; in Leavitt mode
/// q_v is additionally sent to 0.
class PathAlgebra {
 public:
  PathAlgebra(Graph g, AlgebraMode mode);

  const Graph& graph() const noexcept { return ctx_->graph; }
  AlgebraMode mode() const noexcept { return ctx_->mode; }

  bool is_regular(std::size_t v) const { return ctx_->regular[v]; }
  std::optional<std::size_t> special_edge(std::size_t v) const { return ctx_->special[v]; }
  std::size_t edge_source(std::size_t e) const { return graph().edges()[e].src; }
  std::size_t edge_range(std::size_t e) const { return graph().edges()[e].dst; }
  std::size_t range(const Path& p) const;

  /// Contracts one redex per step under `strategy` until the word is
  /// irreducible; returns the resulting linear combination of normal monomials.
  std::map<Monomial, BigInt> reduce(const Word& w, const BigInt& coeff,
                                    RewriteStrategy strategy = RewriteStrategy::leftmost) const;

  Word to_word(const Monomial& m) const;
  std::string to_string(const Monomial& m) const;

  friend bool operator==(const PathAlgebra& a, const PathAlgebra& b) { return a.ctx_ == b.ctx_; }

 private:
  struct Context {
    Graph graph;
    AlgebraMode mode;
    std::vector<bool> regular;
    std::vector<std::optional<std::size_t>> special;
  };

  std::optional<std::size_t> find_redex(const Word& w, RewriteStrategy strategy, bool& single) const;
  Monomial to_monomial(const Word& w) const;

  std::shared_ptr<const Context> ctx_;
};

/// Finite integer combination of normal monomials.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, BigInt>;

  explicit AlgebraElement(PathAlgebra algebra) : algebra_(std::move(algebra)) {}
  AlgebraElement(PathAlgebra algebra, Terms terms);

  static AlgebraElement vertex(const PathAlgebra& a, std::size_t v);
  static AlgebraElement edge(const PathAlgebra& a, std::size_t e);
  static AlgebraElement ghost(const PathAlgebra& a, std::size_t e);
  /// q_v = v - m_v; equals v at a sink, 0 at a regular vertex in Leavitt mode.
  /// Undefined (DomainError) at infinite emitters.
  static AlgebraElement q(const PathAlgebra& a, std::size_t v);
  /// m_v = sum_{s(e)=v} e e^* (0 at a sink). DomainError at infinite emitters.
  static AlgebraElement m(const PathAlgebra& a, std::size_t v);
  /// Sum of all vertices, the unit.
  static AlgebraElement one(const PathAlgebra& a);
  /// Normal form of an arbitrary word.
  static AlgebraElement from_word(const PathAlgebra& a, const Word& w, const BigInt& coeff = 1,
                                  RewriteStrategy strategy = RewriteStrategy::leftmost);

  const PathAlgebra& algebra() const noexcept { return algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest monomial degree |alpha| + |beta|; 0 for the zero element.
  std::size_t degree() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const BigInt& c, const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  /// The involution: reverses words and swaps e with e^*.
  AlgebraElement star() const;

  /// Terms in monomial order, e.g. "2 e1 e2* - q[v] + w"; zero prints "0".
  std::string to_string() const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void add_term(const Monomial& m, const BigInt& c);

  PathAlgebra algebra_;
  Terms terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        RewriteStrategy strategy = RewriteStrategy::leftmost);

/// Parses `expr` against the algebra's graph. Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := '-'? factor ('.'? factor)*
///   factor  := primary '*'*
///   primary := integer | identifier | 'q' '[' identifier ']' | '(' expr ')'
/// Identifiers name vertices or edges; postfix '*' applies the involution.
/// Throws DomainError with code "syntax_error" (message carries the offset)
/// or "unknown_identifier".
AlgebraElement parse(std::string_view expr, const PathAlgebra& algebra);

/// All paths of length <= maxlen, shortest first, then by edge indices.
std::vector<Path> enumerate_paths(const Graph& g, std::size_t maxlen);

/// rho(a) restricted to rows and columns indexed by paths of length <=
/// maxlen, where rho(v) = sum over paths alpha starting at v of
/// eps(alpha, alpha) and rho(e) = sum over alpha starting at r(e) of
/// eps(e alpha, alpha). Requires Cohn mode and no infinite emitters.
struct TruncatedRho {
  std::vector<Path> index;
  IntMatrix matrix;
};

TruncatedRho rho_truncated(const AlgebraElement& a, std::size_t maxlen);

struct RelationCheck {
  std::string name;
  bool holds;
};

/// Evaluates (V), (E1), (E2), (CK1), the m_v identities, the q_v identities
/// and, in Leavitt mode, (CK2) on every vertex and edge of the graph.
std::vector<RelationCheck> check_relations(const PathAlgebra& algebra);

}  // namespace lpakk
