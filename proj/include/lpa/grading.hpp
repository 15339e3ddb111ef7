#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/group.hpp"
#include "lpa/report.hpp"

namespace lpa {

/// A standard G-grading: one group element per edge. Vertices have degree
/// e and a ghost edge f^* has degree deg(f)^{-1}.
class DegreeMap {
 public:
  DegreeMap(GroupSpec group, std::vector<GroupElement> edge_degrees)
      : group_(std::move(group)), edge_degrees_(std::move(edge_degrees)) {}

  /// Every edge gets the group's generator (1 for Z and Z/n).
  static DegreeMap canonical(const Graph& g, GroupSpec group = GroupSpec::integers()) {
    return DegreeMap(group, std::vector<GroupElement>(g.edge_count(), group.generator()));
  }

  [[nodiscard]] const GroupSpec& group() const { return group_; }
  [[nodiscard]] std::size_t edge_count() const { return edge_degrees_.size(); }

  [[nodiscard]] const GroupElement& edge_degree(EdgeIndex e) const {
    if (e >= edge_degrees_.size())
      throw GroupError("no degree for edge index " + std::to_string(e));
    return edge_degrees_[e];
  }

  [[nodiscard]] GroupElement ghost_degree(EdgeIndex e) const {
    if (auto it = ghost_override_.find(e); it != ghost_override_.end()) return it->second;
    return group_.inverse(edge_degree(e));
  }

  [[nodiscard]] GroupElement path_degree(const Path& p) const {
    GroupElement d = group_.identity();
    for (EdgeIndex e : p.edges) d = group_.compose(d, edge_degree(e));
    return d;
  }

  /// deg(p^*) = deg(p_n^*) ... deg(p_1^*).
  [[nodiscard]] GroupElement ghost_path_degree(const Path& p) const {
    GroupElement d = group_.identity();
    for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it)
      d = group_.compose(d, ghost_degree(*it));
    return d;
  }

  /// True for the canonical Z-grading (every edge has degree 1 in Z).
  [[nodiscard]] bool is_canonical_z() const {
    if (group_.kind() != GroupSpec::Kind::integers || !ghost_override_.empty()) return false;
    for (const auto& d : edge_degrees_)
      if (d.coords != std::vector<std::int64_t>{1}) return false;
    return true;
  }

  /// Copy whose ghost edge e^* gets `degree` instead of deg(e)^{-1}. The
  /// result no longer describes a grading of the algebra; it exists so that
  /// check_grading_axiom can be shown to catch a broken degree assignment.
  [[nodiscard]] DegreeMap with_ghost_degree(EdgeIndex e, GroupElement degree) const {
    DegreeMap out = *this;
    out.ghost_override_[e] = std::move(degree);
    return out;
  }

 private:
  GroupSpec group_;
  std::vector<GroupElement> edge_degrees_;
  std::map<EdgeIndex, GroupElement> ghost_override_;
};

/// deg(alpha) deg(beta)^{-1}.
inline GroupElement degree_of(const Monomial& m, const DegreeMap& d) {
  return d.group().compose(d.path_degree(m.alpha), d.ghost_path_degree(m.beta));
}

/// Parses a degree-map file:
///
///     group Z            # or Z^k, Z/n, table <file>
///     deg f1 = 1
///     deg * = 1          # default for edges not listed
///
/// `read_file` resolves the table file named by a `group table` header.
inline DegreeMap parse_degree_map(
    std::string_view text, const Graph& g,
    const std::function<std::string(const std::string&)>& read_file = {}) {
  std::optional<GroupSpec> group;
  std::map<EdgeIndex, std::string> assigned;
  std::optional<std::string> fallback;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw GroupError("degree map line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword == "group") {
      std::string kind;
      words >> kind;
      if (group) fail("duplicate group header");
      if (kind == "Z") {
        group = GroupSpec::integers();
      } else if (kind.rfind("Z^", 0) == 0) {
        group = GroupSpec::lattice(std::stoul(kind.substr(2)));
      } else if (kind.rfind("Z/", 0) == 0) {
        group = GroupSpec::cyclic(std::stoll(kind.substr(2)));
      } else if (kind == "table") {
        std::string file;
        words >> file;
        if (file.empty()) fail("'group table' needs a file name");
        if (!read_file) fail("no file access for group table '" + file + "'");
        group = GroupSpec::parse_table(read_file(file));
      } else {
        fail("unknown group '" + kind + "'");
      }
    } else if (keyword == "deg") {
      std::string edge_id, eq;
      words >> edge_id >> eq;
      std::string rest;
      std::getline(words, rest);
      if (eq != "=" || rest.find_first_not_of(" \t") == std::string::npos)
        fail("expected 'deg <edge> = <element>'");
      if (edge_id == "*") {
        fallback = rest;
        continue;
      }
      auto e = g.find_edge(edge_id);
      if (!e) fail("unknown edge '" + edge_id + "'");
      if (!assigned.emplace(*e, rest).second) fail("edge '" + edge_id + "' assigned twice");
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!group) throw GroupError("degree map has no group header");
  std::vector<GroupElement> degrees;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    auto it = assigned.find(e);
    if (it != assigned.end()) {
      degrees.push_back(group->parse(it->second));
    } else if (fallback) {
      degrees.push_back(group->parse(*fallback));
    } else {
      throw GroupError("no degree for edge '" + g.edge(e).id + "'");
    }
  }
  return DegreeMap(*group, std::move(degrees));
}

/// S = sum_g S_g: the parts of an element by degree. Zero parts are absent.
template <CoefficientRing R>
struct HomogeneousDecomposition {
  std::map<GroupElement, Element<R>> parts;
};

template <CoefficientRing R>
HomogeneousDecomposition<R> decompose(const Element<R>& a, const DegreeMap& d) {
  std::map<GroupElement, typename Element<R>::Terms> buckets;
  for (const auto& [m, c] : a.terms()) buckets[degree_of(m, d)].emplace(m, c);
  HomogeneousDecomposition<R> out;
  for (auto& [g, terms] : buckets) out.parts.emplace(g, Element<R>(std::move(terms)));
  return out;
}

/// The degree of a nonzero homogeneous element, or nullopt if a is zero or
/// not homogeneous.
template <CoefficientRing R>
std::optional<GroupElement> homogeneous_degree(const Element<R>& a, const DegreeMap& d) {
  std::optional<GroupElement> deg;
  for (const auto& [m, c] : a.terms()) {
    auto g = degree_of(m, d);
    if (deg && *deg != g) return std::nullopt;
    deg = std::move(g);
  }
  return deg;
}

/// Bounded enumeration of normal-form monomials alpha beta^* with
/// |alpha|, |beta| <= bound. Paths are computed once and bucketed by
/// (range, degree of beta^*), so each X_g query costs O(|X_g|).
template <CoefficientRing R>
class MonomialEnumerator {
 public:
  MonomialEnumerator(const LeavittAlgebra<R>& alg, const DegreeMap& d, std::size_t bound)
      : alg_(alg), d_(d), bound_(bound), paths_(enumerate_paths(alg.graph(), bound)) {
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      path_degree_.push_back(d_.path_degree(paths_[i]));
      buckets_[{alg.graph().range(paths_[i]), d_.ghost_path_degree(paths_[i])}].push_back(i);
    }
  }

  [[nodiscard]] std::size_t bound() const { return bound_; }
  [[nodiscard]] const std::vector<Path>& paths() const { return paths_; }
  [[nodiscard]] const DegreeMap& degrees() const { return d_; }

  /// X_g restricted to the bound, in canonical monomial order.
  [[nodiscard]] std::vector<Monomial> monomials(const GroupElement& g) const {
    std::vector<Monomial> out;
    const auto& group = d_.group();
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      // deg(alpha) deg(beta^*) = g  <=>  deg(beta^*) = deg(alpha)^{-1} g
      const GroupElement need = group.compose(group.inverse(path_degree_[i]), g);
      auto it = buckets_.find({alg_.graph().range(paths_[i]), need});
      if (it == buckets_.end()) continue;
      for (std::size_t j : it->second) {
        Monomial m{paths_[i], paths_[j]};
        if (alg_.is_normal(m)) out.push_back(std::move(m));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Every normal-form monomial within the bound, in canonical order.
  [[nodiscard]] std::vector<Monomial> all_monomials() const {
    std::map<VertexIndex, std::vector<std::size_t>> by_range;
    for (std::size_t i = 0; i < paths_.size(); ++i)
      by_range[alg_.graph().range(paths_[i])].push_back(i);
    std::vector<Monomial> out;
    for (const auto& [v, idx] : by_range)
      for (std::size_t i : idx)
        for (std::size_t j : idx) {
          Monomial m{paths_[i], paths_[j]};
          if (alg_.is_normal(m)) out.push_back(std::move(m));
        }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Degrees g with X_g nonempty within the bound.
  [[nodiscard]] std::vector<GroupElement> occurring_degrees() const {
    std::set<GroupElement> out;
    for (const auto& m : all_monomials()) out.insert(degree_of(m, d_));
    return {out.begin(), out.end()};
  }

 private:
  const LeavittAlgebra<R>& alg_;
  DegreeMap d_;
  std::size_t bound_;
  std::vector<Path> paths_;
  std::vector<GroupElement> path_degree_;
  std::map<std::pair<VertexIndex, GroupElement>, std::vector<std::size_t>> buckets_;
};

template <CoefficientRing R>
std::vector<Monomial> enumerate_Xg(const LeavittAlgebra<R>& alg, const GroupElement& g,
                                   const DegreeMap& d, std::size_t len_bound) {
  return MonomialEnumerator<R>(alg, d, len_bound).monomials(g);
}

/// Checks S_g S_h in S_{gh} on all pairs of monomials within the bound.
template <CoefficientRing R>
Report check_grading_axiom(const LeavittAlgebra<R>& alg, const DegreeMap& d,
                           std::size_t len_bound) {
  Report rep;
  rep.property = "grading";
  rep.bound = len_bound;
  const auto monos = MonomialEnumerator<R>(alg, d, len_bound).all_monomials();
  std::vector<GroupElement> degs;
  for (const auto& m : monos) degs.push_back(degree_of(m, d));
  std::size_t products = 0;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const auto expected = d.group().compose(degs[i], degs[j]);
      const auto p = alg.mono_mul(monos[i], monos[j]);
      ++products;
      for (const auto& [m, c] : p.terms()) {
        const auto got = degree_of(m, d);
        if (got != expected) {
          rep.verdict = "FAIL";
          rep.status = Status::fail;
          rep.degree = d.group().render(expected);
          rep.witness = "(" + alg.render(alg.from_monomial(monos[i])) + ") . (" +
                        alg.render(alg.from_monomial(monos[j])) + ") has term " +
                        alg.render(alg.term(m, c)) + " of degree " +
                        d.group().render(got) + ", expected " + d.group().render(expected);
          return rep;
        }
      }
    }
  }
  rep.verdict = "PASS";
  rep.notes.push_back(std::to_string(products) + " products checked");
  return rep;
}

}  // namespace lpa
