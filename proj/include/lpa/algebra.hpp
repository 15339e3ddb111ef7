#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/ring.hpp"

namespace lpa {

/// The formal expression alpha beta^*, with r(alpha) = r(beta).
///
/// A vertex v is (v, v); an edge f is (f, r(f)); a ghost edge f^* is
/// (r(f), f).
struct Monomial {
  Path alpha;
  Path beta;

  static Monomial vertex(VertexIndex v) { return {Path::vertex(v), Path::vertex(v)}; }

  [[nodiscard]] std::size_t total_length() const { return alpha.length() + beta.length(); }

  /// Canonical term order: (|alpha| + |beta|, alpha, beta).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_length() <=> b.total_length(); c != 0) return c;
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    return a.beta <=> b.beta;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  /// beta alpha^*.
  [[nodiscard]] Monomial adjoint() const { return {beta, alpha}; }
};

/// A finite R-linear combination of normal-form monomials. The empty map is
/// zero; stored coefficients are never zero. Build and combine Elements
/// through LeavittAlgebra, which maintains those invariants.
template <CoefficientRing R>
class Element {
 public:
  using Scalar = typename R::Scalar;
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;
  explicit Element(Terms terms) : terms_(std::move(terms)) {}

  [[nodiscard]] const Terms& terms() const& { return terms_; }
  [[nodiscard]] Terms terms() && { return std::move(terms_); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  friend bool operator==(const Element& a, const Element& b) = default;

 private:
  Terms terms_;
};

/// Arithmetic in the Leavitt path algebra L_R(E).
///
/// Normal form: for each regular vertex v fix the special edge gamma_v, the
/// out-edge of v with the smallest id. A monomial is normal unless alpha and
/// beta both end in the same edge gamma_v; such a monomial is rewritten with
///
///     gamma_v gamma_v^* = v - sum_{f in s^{-1}(v), f != gamma_v} f f^*
///
/// until none remain. Flagged (infinite) emitters are never rewritten.
template <CoefficientRing R>
class LeavittAlgebra {
 public:
  using Scalar = typename R::Scalar;
  using ElementType = Element<R>;
  using RawTerms = std::vector<std::pair<Monomial, Scalar>>;

  LeavittAlgebra(Graph graph, R ring = R{})
      : graph_(std::make_shared<const Graph>(std::move(graph))), ring_(std::move(ring)) {
    init();
  }
  LeavittAlgebra(std::shared_ptr<const Graph> graph, R ring = R{})
      : graph_(std::move(graph)), ring_(std::move(ring)) {
    init();
  }

  [[nodiscard]] const Graph& graph() const { return *graph_; }
  [[nodiscard]] const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  [[nodiscard]] const R& ring() const { return ring_; }

  [[nodiscard]] std::optional<EdgeIndex> special_edge(VertexIndex v) const {
    return special_.at(v);
  }

  /// Validated monomial alpha beta^*.
  [[nodiscard]] Monomial monomial(Path alpha, Path beta) const {
    if (!graph_->is_valid(alpha) || !graph_->is_valid(beta))
      throw GraphError("invalid path in monomial");
    if (graph_->range(alpha) != graph_->range(beta))
      throw GraphError("r(alpha) != r(beta) in " + graph_->render(alpha) + " (" +
                       graph_->render(beta) + ")*");
    return {std::move(alpha), std::move(beta)};
  }

  [[nodiscard]] bool is_normal(const Monomial& m) const {
    if (m.alpha.edges.empty() || m.beta.edges.empty()) return true;
    const EdgeIndex e = m.alpha.edges.back();
    if (e != m.beta.edges.back()) return true;
    return special_[graph_->edge(e).source] != e;
  }

  // Generators and constructors.

  [[nodiscard]] ElementType zero() const { return {}; }
  [[nodiscard]] ElementType vertex(VertexIndex v) const {
    return term(Monomial::vertex(v), ring_.one());
  }
  [[nodiscard]] ElementType edge(EdgeIndex e) const {
    const auto& ed = graph_->edge(e);
    return term(Monomial{Path{ed.source, {e}}, Path::vertex(ed.range)}, ring_.one());
  }
  [[nodiscard]] ElementType ghost(EdgeIndex e) const {
    const auto& ed = graph_->edge(e);
    return term(Monomial{Path::vertex(ed.range), Path{ed.source, {e}}}, ring_.one());
  }
  /// c * m, normalized.
  [[nodiscard]] ElementType term(const Monomial& m, const Scalar& c) const {
    Accumulator acc(*this);
    acc.add(m, c);
    return acc.finish();
  }
  [[nodiscard]] ElementType from_monomial(const Monomial& m) const { return term(m, ring_.one()); }

  /// Sum of all vertices; the multiplicative identity when E^0 is finite.
  [[nodiscard]] ElementType identity() const {
    Accumulator acc(*this);
    for (VertexIndex v = 0; v < graph_->vertex_count(); ++v)
      acc.add(Monomial::vertex(v), ring_.one());
    return acc.finish();
  }

  /// Normal form of a raw combination of well-formed monomials.
  [[nodiscard]] ElementType normal_form(const RawTerms& raw) const {
    Accumulator acc(*this);
    for (const auto& [m, c] : raw) acc.add(m, c);
    return acc.finish();
  }

  /// (alpha beta^*)(gamma delta^*): zero unless beta and gamma are
  /// prefix-comparable, then a single monomial brought to normal form.
  [[nodiscard]] ElementType mono_mul(const Monomial& x, const Monomial& y) const {
    Accumulator acc(*this);
    acc.add_product(x, y, ring_.one());
    return acc.finish();
  }

  [[nodiscard]] ElementType mul(const ElementType& a, const ElementType& b) const {
    Accumulator acc(*this);
    for (const auto& [x, c] : a.terms())
      for (const auto& [y, d] : b.terms()) acc.add_product(x, y, ring_.mul(c, d));
    return acc.finish();
  }

  [[nodiscard]] ElementType add(const ElementType& a, const ElementType& b) const {
    auto terms = a.terms();
    for (const auto& [m, c] : b.terms()) merge(terms, m, c);
    drop_zeros(terms);
    return ElementType(std::move(terms));
  }

  [[nodiscard]] ElementType sub(const ElementType& a, const ElementType& b) const {
    return add(a, neg(b));
  }

  [[nodiscard]] ElementType neg(const ElementType& a) const {
    return scalar_mul(ring_.neg(ring_.one()), a);
  }

  [[nodiscard]] ElementType scalar_mul(const Scalar& s, const ElementType& a) const {
    typename ElementType::Terms terms;
    for (const auto& [m, c] : a.terms()) {
      auto p = ring_.mul(s, c);
      if (!ring_.is_zero(p)) terms.emplace(m, std::move(p));
    }
    return ElementType(std::move(terms));
  }

  /// (alpha beta^*)^* = beta alpha^*, coefficients unchanged. The swap
  /// preserves normal form.
  [[nodiscard]] ElementType involution(const ElementType& a) const {
    typename ElementType::Terms terms;
    for (const auto& [m, c] : a.terms()) terms.emplace(m.adjoint(), c);
    return ElementType(std::move(terms));
  }

  [[nodiscard]] bool equals(const ElementType& a, const ElementType& b) const {
    if (a.size() != b.size()) return false;
    auto it = b.terms().begin();
    for (const auto& [m, c] : a.terms()) {
      if (!(m == it->first) || !ring_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  // Rendering. Round-trips through parse_element.

  [[nodiscard]] std::string render(const Monomial& m) const {
    const auto& g = *graph_;
    if (m.beta.is_vertex()) return g.render(m.alpha);
    std::string ghost = m.beta.length() == 1 ? g.render(m.beta) + "*"
                                             : "(" + g.render(m.beta) + ")*";
    if (m.alpha.is_vertex()) return ghost;
    return g.render(m.alpha) + "." + ghost;
  }

  [[nodiscard]] std::string render(const ElementType& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
      const bool negative = ring_.is_negative(c);
      const Scalar magnitude = negative ? ring_.neg(c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (!ring_.equal(magnitude, ring_.one())) out += ring_.render(magnitude) + "*";
      out += render(m);
      first = false;
    }
    return out;
  }

 private:
  /// Collects normalized terms; zero coefficients are dropped at the end.
  class Accumulator {
   public:
    explicit Accumulator(const LeavittAlgebra& alg) : alg_(alg) {}

    void add(Monomial m, Scalar c) {
      if (alg_.ring_.is_zero(c)) return;
      const auto& g = *alg_.graph_;
      while (!m.alpha.edges.empty() && !m.beta.edges.empty()) {
        const EdgeIndex e = m.alpha.edges.back();
        if (e != m.beta.edges.back()) break;
        const VertexIndex v = g.edge(e).source;
        if (alg_.special_[v] != e) break;
        m.alpha.edges.pop_back();
        m.beta.edges.pop_back();
        // Replacement terms end in a non-special edge, hence are normal.
        const Scalar minus_c = alg_.ring_.neg(c);
        for (EdgeIndex f : g.out_edges(v)) {
          if (f == e) continue;
          Monomial t = m;
          t.alpha.edges.push_back(f);
          t.beta.edges.push_back(f);
          alg_.merge(terms_, std::move(t), minus_c);
        }
      }
      alg_.merge(terms_, std::move(m), c);
    }

    void add_product(const Monomial& x, const Monomial& y, const Scalar& c) {
      if (alg_.ring_.is_zero(c)) return;
      const auto& g = *alg_.graph_;
      if (is_initial_subpath(g, x.beta, y.alpha)) {
        // gamma = beta gamma'
        Path alpha = x.alpha;
        alpha.edges.insert(alpha.edges.end(), y.alpha.edges.begin() + x.beta.length(),
                           y.alpha.edges.end());
        add(Monomial{std::move(alpha), y.beta}, c);
      } else if (is_initial_subpath(g, y.alpha, x.beta)) {
        // beta = gamma beta'
        Path beta = y.beta;
        beta.edges.insert(beta.edges.end(), x.beta.edges.begin() + y.alpha.length(),
                          x.beta.edges.end());
        add(Monomial{x.alpha, std::move(beta)}, c);
      }
    }

    ElementType finish() {
      alg_.drop_zeros(terms_);
      return ElementType(std::move(terms_));
    }

   private:
    const LeavittAlgebra& alg_;
    typename ElementType::Terms terms_;
  };

  friend class Accumulator;

  /// Adds c to the coefficient of m; may leave a zero coefficient behind.
  void merge(typename ElementType::Terms& terms, Monomial m, const Scalar& c) const {
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(std::move(m), c);
    } else {
      it->second = ring_.add(it->second, c);
    }
  }

  void drop_zeros(typename ElementType::Terms& terms) const {
    std::erase_if(terms, [&](const auto& kv) { return ring_.is_zero(kv.second); });
  }

  void init() {
    special_.assign(graph_->vertex_count(), std::nullopt);
    for (VertexIndex v = 0; v < graph_->vertex_count(); ++v)
      if (graph_->is_regular(v)) special_[v] = graph_->out_edges(v).front();
  }

  std::shared_ptr<const Graph> graph_;
  R ring_;
  std::vector<std::optional<EdgeIndex>> special_;
};

}  // namespace lpa
