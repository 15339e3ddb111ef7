#pragma once

// Independent reference for Leavitt path algebra arithmetic on words of
// generators. Rewrites adjacent letter pairs one redex at a time in a
// random order. Shares no code with the library's normal form beyond the
// Graph and Monomial types used to report the result.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lpa/algebra.hpp"

namespace lpa::oracle {

enum class Kind { vertex, edge, ghost };

struct Letter {
  Kind kind;
  std::uint32_t index;  // vertex index or edge index
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

template <CoefficientRing R>
class WordRewriter {
 public:
  using Scalar = typename R::Scalar;
  using Terms = std::vector<std::pair<Word, Scalar>>;

  WordRewriter(const Graph& g, R ring) : g_(g), ring_(std::move(ring)) {
    // Special edge: smallest id by string comparison, found by scanning.
    special_.assign(g.vertex_count(), std::nullopt);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (g.is_infinite_emitter(v)) continue;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).source != v) continue;
        if (!special_[v] || g.edge(e).id < g.edge(*special_[v]).id) special_[v] = e;
      }
    }
  }

  /// Word of a monomial alpha beta^*: alpha's edges then beta's ghosts reversed.
  Word word_of(const Monomial& m) const {
    Word w;
    if (m.alpha.edges.empty() && m.beta.edges.empty()) return {{Kind::vertex, m.alpha.base}};
    for (EdgeIndex e : m.alpha.edges) w.push_back({Kind::edge, e});
    for (auto it = m.beta.edges.rbegin(); it != m.beta.edges.rend(); ++it)
      w.push_back({Kind::ghost, *it});
    return w;
  }

  /// Rewrites to terminal words in a random order, then reads monomials.
  Element<R> reduce(Terms terms, std::mt19937_64& rng) const {
    Terms done;
    while (!terms.empty()) {
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, terms.size() - 1)(rng);
      auto [word, coef] = std::move(terms[i]);
      terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(i));
      std::vector<std::size_t> redexes;
      for (std::size_t k = 0; k + 1 < word.size(); ++k)
        if (is_redex(word[k], word[k + 1])) redexes.push_back(k);
      if (redexes.empty()) {
        done.emplace_back(std::move(word), std::move(coef));
        continue;
      }
      const std::size_t k =
          redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
      for (auto& [replacement, c] : rewrite(word[k], word[k + 1])) {
        Word w(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
        w.insert(w.end(), replacement.begin(), replacement.end());
        w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(k + 2), word.end());
        terms.emplace_back(std::move(w), ring_.mul(coef, c));
      }
    }
    typename Element<R>::Terms out;
    for (auto& [w, c] : done) {
      auto m = monomial_of(w);
      auto it = out.find(m);
      if (it == out.end())
        out.emplace(std::move(m), c);
      else
        it->second = ring_.add(it->second, c);
    }
    std::erase_if(out, [&](const auto& kv) { return ring_.is_zero(kv.second); });
    return Element<R>(std::move(out));
  }

 private:
  VertexIndex start(const Letter& l) const {
    switch (l.kind) {
      case Kind::vertex: return l.index;
      case Kind::edge: return g_.edge(l.index).source;
      case Kind::ghost: return g_.edge(l.index).range;
    }
    return 0;
  }
  VertexIndex end(const Letter& l) const {
    switch (l.kind) {
      case Kind::vertex: return l.index;
      case Kind::edge: return g_.edge(l.index).range;
      case Kind::ghost: return g_.edge(l.index).source;
    }
    return 0;
  }

  bool is_ck2(const Letter& a, const Letter& b) const {
    return a.kind == Kind::edge && b.kind == Kind::ghost && a.index == b.index &&
           special_[g_.edge(a.index).source] == a.index;
  }

  bool is_redex(const Letter& a, const Letter& b) const {
    if (a.kind == Kind::vertex || b.kind == Kind::vertex) return true;
    if (end(a) != start(b)) return true;  // product is zero
    if (a.kind == Kind::ghost && b.kind == Kind::edge) return true;
    return is_ck2(a, b);
  }

  /// Replacement words with coefficients; empty means the pair is zero.
  std::vector<std::pair<Word, Scalar>> rewrite(const Letter& a, const Letter& b) const {
    const Scalar one = ring_.one();
    if (end(a) != start(b)) return {};
    if (a.kind == Kind::vertex) return {{Word{b}, one}};
    if (b.kind == Kind::vertex) return {{Word{a}, one}};
    if (a.kind == Kind::ghost && b.kind == Kind::edge) {
      if (a.index != b.index) return {};
      return {{Word{{Kind::vertex, g_.edge(a.index).range}}, one}};
    }
    // CK2: gamma gamma^* = v - sum over the other edges f out of v of f f^*.
    const VertexIndex v = g_.edge(a.index).source;
    std::vector<std::pair<Word, Scalar>> out{{Word{{Kind::vertex, v}}, one}};
    for (EdgeIndex f = 0; f < g_.edge_count(); ++f)
      if (g_.edge(f).source == v && f != a.index)
        out.push_back({Word{{Kind::edge, f}, {Kind::ghost, f}}, ring_.neg(one)});
    return out;
  }

  Monomial monomial_of(const Word& w) const {
    if (w.size() == 1 && w[0].kind == Kind::vertex) return Monomial::vertex(w[0].index);
    Path alpha, beta;
    for (const auto& l : w) (l.kind == Kind::edge ? alpha : beta).edges.push_back(l.index);
    std::reverse(beta.edges.begin(), beta.edges.end());
    const VertexIndex meet = alpha.edges.empty() ? g_.edge(beta.edges.back()).range
                                                 : g_.edge(alpha.edges.back()).range;
    alpha.base = alpha.edges.empty() ? meet : g_.edge(alpha.edges.front()).source;
    beta.base = beta.edges.empty() ? meet : g_.edge(beta.edges.front()).source;
    return {alpha, beta};
  }

  const Graph& g_;
  R ring_;
  std::vector<std::optional<EdgeIndex>> special_;
};

/// A random word of 1..max_len generator letters.
inline Word random_word(const Graph& g, std::size_t max_len, std::mt19937_64& rng) {
  auto pick = [&](std::size_t n) {
    return static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  };
  const std::size_t len = 1 + pick(max_len);
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    const auto k = g.edge_count() == 0 ? 0 : pick(5);
    if (k == 0)
      w.push_back({Kind::vertex, pick(g.vertex_count())});
    else
      w.push_back({k <= 2 ? Kind::edge : Kind::ghost, pick(g.edge_count())});
  }
  return w;
}

/// The same word evaluated by library multiplication of generators.
template <CoefficientRing R>
Element<R> evaluate(const LeavittAlgebra<R>& alg, const Word& w) {
  Element<R> acc = alg.identity();
  for (const auto& l : w) {
    switch (l.kind) {
      case Kind::vertex: acc = alg.mul(acc, alg.vertex(l.index)); break;
      case Kind::edge: acc = alg.mul(acc, alg.edge(l.index)); break;
      case Kind::ghost: acc = alg.mul(acc, alg.ghost(l.index)); break;
    }
  }
  return acc;
}

}  // namespace lpa::oracle
