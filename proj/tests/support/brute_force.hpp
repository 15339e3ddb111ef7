#pragma once

// Brute-force reference for the order theory on X_g under integer-valued
// edge degrees (Z, or Z/n when modulus > 0). X_g here contains every
// monomial alpha beta^*, normal or not; the minimal alphas coincide with
// those of the normal-form enumeration because stripping a shared special
// edge keeps the degree and shortens alpha.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "support/word_oracle.hpp"

namespace lpa::brute {

inline std::int64_t reduce(std::int64_t x, std::int64_t modulus) {
  if (modulus == 0) return x;
  return ((x % modulus) + modulus) % modulus;
}

/// Integer degree of a path under per-edge degrees.
inline std::int64_t path_degree(const Path& p, const std::vector<std::int64_t>& edge_deg) {
  std::int64_t d = 0;
  for (EdgeIndex e : p.edges) d += edge_deg[e];
  return d;
}

/// alphas of all monomials alpha beta^* of degree g with |alpha|, |beta| <= bound.
inline std::set<std::vector<std::string>> alphas_of_degree(const Graph& g,
                                                           const std::vector<std::int64_t>& deg,
                                                           std::int64_t target, std::size_t bound,
                                                           std::int64_t modulus) {
  std::set<std::vector<std::string>> out;
  const auto paths = enumerate_paths(g, bound);
  for (const auto& a : paths)
    for (const auto& b : paths)
      if (g.range(a) == g.range(b) &&
          reduce(path_degree(a, deg) - path_degree(b, deg), modulus) == reduce(target, modulus)) {
        // Path as a string list; a vertex path is its vertex id prefixed by '@'.
        std::vector<std::string> key;
        if (a.is_vertex()) key.push_back("@" + g.vertex_id(a.base));
        for (EdgeIndex e : a.edges) key.push_back(g.edge(e).id);
        out.insert(key);
      }
  return out;
}

/// Naive "is x an initial subpath of y" on string keys.
inline bool prefix_of(const Graph& g, const std::vector<std::string>& x,
                      const std::vector<std::string>& y) {
  if (!x.empty() && x[0][0] == '@') {
    if (!y.empty() && y[0][0] == '@') return x == y;
    return g.vertex_id(g.edge(*g.find_edge(y[0])).source) == x[0].substr(1);
  }
  if (!y.empty() && y[0][0] == '@') return false;
  return x.size() <= y.size() && std::equal(x.begin(), x.end(), y.begin());
}

inline std::vector<std::vector<std::string>> minimal_alphas(
    const Graph& g, const std::set<std::vector<std::string>>& alphas) {
  std::vector<std::vector<std::string>> out;
  for (const auto& a : alphas) {
    bool minimal = true;
    for (const auto& b : alphas)
      if (b != a && prefix_of(g, b, a)) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

/// Sum over minimal alphas of alpha alpha^*, reduced by the word rewriter.
template <CoefficientRing R>
Element<R> epsilon(const LeavittAlgebra<R>& alg, const std::vector<std::int64_t>& deg,
                   std::int64_t target, std::size_t bound, std::int64_t modulus) {
  const Graph& g = alg.graph();
  oracle::WordRewriter<R> rw(g, alg.ring());
  typename oracle::WordRewriter<R>::Terms terms;
  for (const auto& a : minimal_alphas(g, alphas_of_degree(g, deg, target, bound, modulus))) {
    oracle::Word w;
    if (a[0][0] == '@') {
      w.push_back({oracle::Kind::vertex, *g.find_vertex(a[0].substr(1))});
    } else {
      for (const auto& id : a) w.push_back({oracle::Kind::edge, *g.find_edge(id)});
      for (auto it = a.rbegin(); it != a.rend(); ++it)
        w.push_back({oracle::Kind::ghost, *g.find_edge(*it)});
    }
    terms.emplace_back(std::move(w), alg.ring().one());
  }
  std::mt19937_64 rng(0);
  return rw.reduce(terms, rng);
}

}  // namespace lpa::brute
