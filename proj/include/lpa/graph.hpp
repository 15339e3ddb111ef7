#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace lpa {

/// Index of a vertex inside its Graph. Vertices are stored sorted by id, so
/// index order coincides with lexicographic id order.
using VertexIndex = std::uint32_t;
/// Index of an edge inside its Graph, sorted by id like vertices.
using EdgeIndex = std::uint32_t;

struct Edge {
  std::string id;
  VertexIndex source = 0;
  VertexIndex range = 0;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A path mu = mu_1 ... mu_n, or the length-0 path at `base`.
///
/// For a nonempty path `base` is the source of the first edge; keeping it
/// populated makes source() uniform for both cases.
struct Path {
  VertexIndex base = 0;
  std::vector<EdgeIndex> edges;

  static Path vertex(VertexIndex v) { return Path{v, {}}; }

  [[nodiscard]] std::size_t length() const { return edges.size(); }
  [[nodiscard]] bool is_vertex() const { return edges.empty(); }

  /// Deterministic path order: length first, then lexicographic by edge id
  /// (vertex id for length 0).
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.edges.size() <=> b.edges.size(); c != 0) return c;
    if (a.edges.empty()) return a.base <=> b.base;
    return std::lexicographical_compare_three_way(a.edges.begin(), a.edges.end(),
                                                  b.edges.begin(), b.edges.end());
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.edges == b.edges && (!a.edges.empty() || a.base == b.base);
  }
};

/// Directed graph E = (E^0, E^1, r, s) with optional infinite-emitter flags.
///
/// A flagged vertex stands for a vertex emitting infinitely many edges; the
/// listed edges out of it are samples of that family. Immutable after
/// construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from ids. Vertices and edges share one namespace.
  Graph(std::vector<std::string> vertex_ids,
        std::vector<std::tuple<std::string, std::string, std::string>> edge_specs,
        std::vector<std::string> infinite_ids = {}) {
    std::sort(vertex_ids.begin(), vertex_ids.end());
    for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
      if (vertex_ids[i].empty()) throw GraphError("empty vertex id");
      if (i > 0 && vertex_ids[i] == vertex_ids[i - 1])
        throw GraphError("duplicate id '" + vertex_ids[i] + "'");
      vertex_index_.emplace(vertex_ids[i], static_cast<VertexIndex>(i));
    }
    vertices_ = std::move(vertex_ids);

    std::sort(edge_specs.begin(), edge_specs.end());
    for (const auto& [id, src, dst] : edge_specs) {
      if (id.empty()) throw GraphError("empty edge id");
      if (vertex_index_.contains(id) || edge_index_.contains(id))
        throw GraphError("duplicate id '" + id + "'");
      Edge e{id, lookup_vertex(src, id), lookup_vertex(dst, id)};
      edge_index_.emplace(id, static_cast<EdgeIndex>(edges_.size()));
      edges_.push_back(std::move(e));
    }

    out_.assign(vertices_.size(), {});
    for (EdgeIndex e = 0; e < edges_.size(); ++e) out_[edges_[e].source].push_back(e);

    infinite_.assign(vertices_.size(), false);
    for (const auto& id : infinite_ids) {
      auto it = vertex_index_.find(id);
      if (it == vertex_index_.end())
        throw GraphError("infinite emitter '" + id + "' is not a declared vertex");
      if (out_[it->second].size() < 2)
        throw GraphError("infinite emitter '" + id +
                         "' needs at least 2 listed sample edges");
      infinite_[it->second] = true;
    }
  }

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::string& vertex_id(VertexIndex v) const { return vertices_.at(v); }
  [[nodiscard]] const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

  /// Listed edges with source v, in id order.
  [[nodiscard]] const std::vector<EdgeIndex>& out_edges(VertexIndex v) const {
    return out_.at(v);
  }
  [[nodiscard]] bool is_infinite_emitter(VertexIndex v) const { return infinite_.at(v); }
  [[nodiscard]] bool has_infinite_emitters() const {
    return std::find(infinite_.begin(), infinite_.end(), true) != infinite_.end();
  }

  [[nodiscard]] bool is_sink(VertexIndex v) const {
    return out_.at(v).empty() && !infinite_.at(v);
  }
  /// Emits a nonempty finite edge set, so relation (CK2) applies there.
  [[nodiscard]] bool is_regular(VertexIndex v) const {
    return !out_.at(v).empty() && !infinite_.at(v);
  }

  [[nodiscard]] std::optional<VertexIndex> find_vertex(std::string_view id) const {
    auto it = vertex_index_.find(std::string(id));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] std::optional<EdgeIndex> find_edge(std::string_view id) const {
    auto it = edge_index_.find(std::string(id));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] VertexIndex source(const Path& p) const {
    return p.edges.empty() ? p.base : edges_[p.edges.front()].source;
  }
  [[nodiscard]] VertexIndex range(const Path& p) const {
    return p.edges.empty() ? p.base : edges_[p.edges.back()].range;
  }

  [[nodiscard]] bool is_valid(const Path& p) const {
    if (p.edges.empty()) return p.base < vertices_.size();
    if (p.base != edges_.at(p.edges.front()).source) return false;
    for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
      if (edges_.at(p.edges[i]).range != edges_.at(p.edges[i + 1]).source) return false;
    }
    return edges_.at(p.edges.back()).range < vertices_.size();
  }

  /// Path consisting of the given edges; throws if they do not compose.
  [[nodiscard]] Path make_path(std::vector<EdgeIndex> edges) const {
    if (edges.empty()) throw GraphError("make_path needs at least one edge");
    Path p{edges_.at(edges.front()).source, std::move(edges)};
    if (!is_valid(p)) throw GraphError("edges do not form a path: " + render(p));
    return p;
  }

  /// Concatenation ab; requires r(a) = s(b).
  [[nodiscard]] Path concat(const Path& a, const Path& b) const {
    if (b.edges.empty()) return a;
    if (a.edges.empty()) return b;
    Path out = a;
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    return out;
  }

  /// Edge ids joined by '.', or the vertex id for a length-0 path.
  [[nodiscard]] std::string render(const Path& p) const {
    if (p.edges.empty()) return vertices_.at(p.base);
    std::string out;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (i) out += '.';
      out += edges_.at(p.edges[i]).id;
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices_ != b.vertices_ || a.infinite_ != b.infinite_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto& x = a.edges_[i];
      const auto& y = b.edges_[i];
      if (x.id != y.id || x.source != y.source || x.range != y.range) return false;
    }
    return true;
  }

 private:
  VertexIndex lookup_vertex(const std::string& id, const std::string& edge_id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
      throw GraphError("edge '" + edge_id + "' uses undeclared vertex '" + id + "'");
    return it->second;
  }

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<bool> infinite_;
  std::map<std::string, VertexIndex, std::less<>> vertex_index_;
  std::map<std::string, EdgeIndex, std::less<>> edge_index_;
};

/// Vertices with no outgoing edges, listed or flagged.
inline std::vector<VertexIndex> sinks(const Graph& g) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) out.push_back(v);
  return out;
}

inline std::vector<VertexIndex> regular_vertices(const Graph& g) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.is_regular(v)) out.push_back(v);
  return out;
}

/// All paths of length <= max_len over listed edges, ordered by length and
/// then lexicographically. Length-0 paths are the vertices.
inline std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len) {
  std::vector<Path> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.push_back(Path::vertex(v));
  if (max_len == 0) return out;

  std::vector<Path> layer;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    layer.push_back(Path{g.edge(e).source, {e}});
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == max_len) break;
    // Extending a lex-sorted layer edge by edge (edges in id order) keeps it sorted.
    std::vector<Path> next;
    for (const auto& p : layer) {
      for (EdgeIndex e : g.out_edges(g.range(p))) {
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// True iff a's edges are a prefix of b's; a length-0 path must be s(b).
inline bool is_initial_subpath(const Graph& g, const Path& a, const Path& b) {
  if (a.edges.empty()) return a.base == g.source(b);
  if (a.edges.size() > b.edges.size()) return false;
  return std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
}

}  // namespace lpa
