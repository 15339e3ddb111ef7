#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/grading.hpp"
#include "lpa/report.hpp"

namespace lpa {

/// Precondition violations: degree mismatch, zero or non-homogeneous input.
class GradingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A class of X_g under ~. Two monomials are equivalent iff their alpha
/// parts agree, so alpha is the class key.
struct ClassRep {
  Monomial representative;
  Path alpha;
};

enum class ClassVerdict { complete, bound_exhausted, infinite_witness };

inline const char* to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::complete: return "complete";
    case ClassVerdict::bound_exhausted: return "bound-exhausted";
    case ClassVerdict::infinite_witness: return "infinite-witness";
  }
  return "?";
}

/// Minimal elements of X_g / ~ found within a length bound.
///
/// `complete` means every path of length exactly `bound_used` extends a
/// listed class, so no longer alpha can be minimal. `infinite_witness`
/// means two minimal classes differ only in which sample edge of one
/// infinite emitter they use; every further edge of that emitter yields
/// another incomparable class.
struct MinimalClassSet {
  std::vector<ClassRep> classes;
  std::size_t bound_used = 0;
  ClassVerdict verdict = ClassVerdict::complete;
  std::optional<std::pair<Path, Path>> witness;
  std::optional<Path> undominated;  // a frontier path when bound-exhausted
};

/// [x] <= [y] iff alpha_x is an initial subpath of alpha_y. Both must lie
/// in the same X_g.
inline bool class_leq(const Graph& graph, const DegreeMap& d, const Monomial& x,
                      const Monomial& y) {
  if (degree_of(x, d) != degree_of(y, d))
    throw GradingError("class_leq: monomials have different degrees " +
                       d.group().render(degree_of(x, d)) + " and " +
                       d.group().render(degree_of(y, d)));
  return is_initial_subpath(graph, x.alpha, y.alpha);
}

namespace detail {

/// True iff some proper initial subpath of p (including the vertex s(p))
/// is in `keys`.
inline bool has_proper_prefix_in(const Graph& graph, const Path& p, const std::set<Path>& keys) {
  if (p.is_vertex()) return false;
  if (keys.contains(Path::vertex(graph.source(p)))) return true;
  Path prefix{p.base, {}};
  for (std::size_t k = 0; k + 1 < p.length(); ++k) {
    prefix.edges.push_back(p.edges[k]);
    if (keys.contains(prefix)) return true;
  }
  return false;
}

/// Minimal classes among the given monomials, ordered by alpha.
inline std::vector<ClassRep> minimal_among(const Graph& graph, const std::vector<Monomial>& xs) {
  std::map<Path, Monomial> reps;
  for (const auto& x : xs) reps.try_emplace(x.alpha, x);
  std::set<Path> keys;
  for (const auto& [alpha, rep] : reps) keys.insert(alpha);
  std::vector<ClassRep> out;
  for (const auto& [alpha, rep] : reps)
    if (!has_proper_prefix_in(graph, alpha, keys)) out.push_back({rep, alpha});
  return out;
}

/// Two alphas of equal length differing in exactly one position, where both
/// edges there are samples out of the same infinite emitter.
inline bool sibling_samples(const Graph& graph, const Path& a, const Path& b) {
  if (a.length() != b.length() || a.is_vertex()) return false;
  std::size_t diff = 0, at = 0;
  for (std::size_t i = 0; i < a.length(); ++i)
    if (a.edges[i] != b.edges[i]) {
      ++diff;
      at = i;
    }
  if (diff != 1) return false;
  const auto& ea = graph.edge(a.edges[at]);
  const auto& eb = graph.edge(b.edges[at]);
  return ea.source == eb.source && graph.is_infinite_emitter(ea.source);
}

}  // namespace detail

template <CoefficientRing R>
MinimalClassSet minimal_classes(const LeavittAlgebra<R>& alg, const MonomialEnumerator<R>& xg,
                                const GroupElement& g) {
  const Graph& graph = alg.graph();
  MinimalClassSet out;
  out.bound_used = xg.bound();
  out.classes = detail::minimal_among(graph, xg.monomials(g));

  for (std::size_t i = 0; i < out.classes.size() && !out.witness; ++i)
    for (std::size_t j = i + 1; j < out.classes.size(); ++j)
      if (detail::sibling_samples(graph, out.classes[i].alpha, out.classes[j].alpha)) {
        out.witness = {out.classes[i].alpha, out.classes[j].alpha};
        break;
      }
  if (out.witness) {
    out.verdict = ClassVerdict::infinite_witness;
    return out;
  }

  std::set<Path> keys;
  for (const auto& c : out.classes) keys.insert(c.alpha);
  for (const auto& p : xg.paths()) {
    if (p.length() != xg.bound()) continue;
    if (!keys.contains(p) && !detail::has_proper_prefix_in(graph, p, keys)) {
      out.verdict = ClassVerdict::bound_exhausted;
      out.undominated = p;
      return out;
    }
  }
  out.verdict = ClassVerdict::complete;
  return out;
}

template <CoefficientRing R>
MinimalClassSet minimal_classes(const LeavittAlgebra<R>& alg, const GroupElement& g,
                                const DegreeMap& d, std::size_t len_bound) {
  if (len_bound < 1) throw GradingError("minimal_classes needs bound >= 1");
  return minimal_classes(alg, MonomialEnumerator<R>(alg, d, len_bound), g);
}

/// n(x) = x x^* = alpha alpha^*, in normal form. Depends only on [x].
template <CoefficientRing R>
Element<R> nmap(const LeavittAlgebra<R>& alg, const Monomial& x) {
  return alg.mono_mul(x, x.adjoint());
}

/// A factorization sum_i x_i y_i with monomial factors.
using Factorization = std::vector<std::pair<Monomial, Monomial>>;

template <CoefficientRing R>
std::string render_factorization(const LeavittAlgebra<R>& alg, const Factorization& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [x, y] : f) {
    if (!out.empty()) out += " + ";
    out += "(" + alg.render(x) + ")(" + alg.render(y) + ")";
  }
  return out;
}

template <CoefficientRing R>
struct EpsilonReport {
  GroupElement g;
  std::optional<Element<R>> epsilon;
  std::string absent_reason;
  /// epsilon = sum x_i y_i with x_i in X_g, y_i = x_i^* in X_{g^-1}.
  Factorization certificate;
  std::size_t identity_checked_on = 0;
  std::size_t bound_used = 0;
  MinimalClassSet classes;
  /// Set when the identity check found a monomial that epsilon fails to fix.
  std::string failure;

  [[nodiscard]] bool present() const { return epsilon.has_value(); }
};

/// epsilon_g = sum of n(m_i) over the minimal classes [m_i] of X_g, checked
/// as a left identity on X_g and a right identity on X_{g^-1} within the
/// bound. Absent when the minimal set is infinite or undetermined.
template <CoefficientRing R>
EpsilonReport<R> epsilon(const LeavittAlgebra<R>& alg, const MonomialEnumerator<R>& xg,
                         const GroupElement& g) {
  const auto& d = xg.degrees();
  EpsilonReport<R> rep;
  rep.g = g;
  rep.bound_used = xg.bound();
  rep.classes = minimal_classes(alg, xg, g);

  const Graph& graph = alg.graph();
  switch (rep.classes.verdict) {
    case ClassVerdict::infinite_witness: {
      const auto& [a, b] = *rep.classes.witness;
      rep.absent_reason = "infinite minimal set: classes " + graph.render(a) + " and " +
                          graph.render(b) + " differ only in sample edges of an infinite emitter";
      return rep;
    }
    case ClassVerdict::bound_exhausted:
      rep.absent_reason = "undetermined at bound " + std::to_string(xg.bound()) +
                          ": path " + graph.render(*rep.classes.undominated) +
                          " extends no minimal class";
      return rep;
    case ClassVerdict::complete:
      break;
  }

  Element<R> eps;
  for (const auto& c : rep.classes.classes) {
    eps = alg.add(eps, nmap(alg, c.representative));
    rep.certificate.emplace_back(c.representative, c.representative.adjoint());
  }

  for (const auto& x : xg.monomials(g)) {
    const auto xe = alg.from_monomial(x);
    ++rep.identity_checked_on;
    if (!alg.equals(alg.mul(eps, xe), xe)) {
      rep.failure = "epsilon."  + alg.render(x) + " != " + alg.render(x);
      break;
    }
  }
  if (rep.failure.empty()) {
    for (const auto& y : xg.monomials(d.group().inverse(g))) {
      const auto ye = alg.from_monomial(y);
      ++rep.identity_checked_on;
      if (!alg.equals(alg.mul(ye, eps), ye)) {
        rep.failure = alg.render(y) + ".epsilon != " + alg.render(y);
        break;
      }
    }
  }
  if (!rep.failure.empty()) {
    rep.absent_reason = "identity check failed: " + rep.failure;
    return rep;
  }
  rep.epsilon = std::move(eps);
  return rep;
}

template <CoefficientRing R>
EpsilonReport<R> epsilon(const LeavittAlgebra<R>& alg, const GroupElement& g, const DegreeMap& d,
                         std::size_t len_bound) {
  if (len_bound < 1) throw GradingError("epsilon needs bound >= 1");
  return epsilon(alg, MonomialEnumerator<R>(alg, d, len_bound), g);
}

/// Element-specific local units: left * s = s = s * right, with left in
/// S_g S_{g^-1} and right in S_{g^-1} S_g.
template <CoefficientRing R>
struct LocalUnitPair {
  Element<R> s;
  GroupElement degree;
  Element<R> left;
  Factorization left_certificate;
  Element<R> right;
  Factorization right_certificate;
};

namespace detail {

template <CoefficientRing R>
std::pair<Element<R>, Factorization> left_unit_of_support(const LeavittAlgebra<R>& alg,
                                                          const std::vector<Monomial>& support) {
  Element<R> unit;
  Factorization cert;
  for (const auto& c : minimal_among(alg.graph(), support)) {
    unit = alg.add(unit, nmap(alg, c.representative));
    cert.emplace_back(c.representative, c.representative.adjoint());
  }
  return {std::move(unit), std::move(cert)};
}

template <CoefficientRing R>
std::vector<Monomial> support(const Element<R>& a) {
  std::vector<Monomial> out;
  for (const auto& [m, c] : a.terms()) out.push_back(m);
  return out;
}

template <CoefficientRing R>
GroupElement require_homogeneous(const Element<R>& s, const DegreeMap& d, const char* op) {
  if (s.is_zero()) throw GradingError(std::string(op) + ": element is zero");
  auto deg = homogeneous_degree(s, d);
  if (!deg) throw GradingError(std::string(op) + ": element is not homogeneous");
  return *deg;
}

}  // namespace detail

/// Builds epsilon_g(s) from the minimal classes among s's own monomials and
/// epsilon'_g(s) = epsilon_{g^-1}(s^*). Needs no length bound.
template <CoefficientRing R>
LocalUnitPair<R> local_units(const LeavittAlgebra<R>& alg, const Element<R>& s,
                             const DegreeMap& d) {
  LocalUnitPair<R> out;
  out.s = s;
  out.degree = detail::require_homogeneous(s, d, "local_units");
  std::tie(out.left, out.left_certificate) =
      detail::left_unit_of_support(alg, detail::support(s));
  std::tie(out.right, out.right_certificate) =
      detail::left_unit_of_support(alg, detail::support(alg.involution(s)));
  if (!alg.equals(alg.mul(out.left, s), s) || !alg.equals(alg.mul(s, out.right), s))
    throw std::logic_error("local unit construction failed for " + alg.render(s));
  return out;
}

enum class Side { left, right };

/// One element acting as a one-sided identity on every listed element, built
/// from the minimal classes of the combined support.
template <CoefficientRing R>
Element<R> common_local_unit(const LeavittAlgebra<R>& alg, const std::vector<Element<R>>& list,
                             Side side, const DegreeMap& d) {
  if (list.empty()) throw GradingError("common_local_unit: empty list");
  std::optional<GroupElement> deg;
  std::vector<Monomial> combined;
  for (const auto& a : list) {
    auto g = detail::require_homogeneous(a, d, "common_local_unit");
    if (deg && *deg != g)
      throw GradingError("common_local_unit: mixed degrees " + d.group().render(*deg) +
                         " and " + d.group().render(g));
    deg = g;
    for (const auto& [m, c] : a.terms())
      combined.push_back(side == Side::left ? m : m.adjoint());
  }
  auto unit = detail::left_unit_of_support(alg, combined).first;
  for (const auto& a : list) {
    const auto p = side == Side::left ? alg.mul(unit, a) : alg.mul(a, unit);
    if (!alg.equals(p, a))
      throw std::logic_error("common local unit does not fix " + alg.render(a));
  }
  return unit;
}

/// m = m m^* m for every monomial within the bound.
template <CoefficientRing R>
Report check_symmetric(const LeavittAlgebra<R>& alg, const DegreeMap& d, std::size_t len_bound) {
  Report rep;
  rep.property = "symmetric";
  rep.bound = len_bound;
  std::size_t checked = 0;
  for (const auto& m : MonomialEnumerator<R>(alg, d, len_bound).all_monomials()) {
    const auto me = alg.from_monomial(m);
    const auto triple = alg.mul(alg.mul(me, alg.involution(me)), me);
    ++checked;
    if (!alg.equals(triple, me)) {
      rep.verdict = "FAIL";
      rep.status = Status::fail;
      rep.degree = d.group().render(degree_of(m, d));
      rep.witness = "m m* m = " + alg.render(triple) + " for m = " + alg.render(m);
      return rep;
    }
  }
  rep.verdict = "PASS";
  rep.notes.push_back(std::to_string(checked) + " monomials checked");
  return rep;
}

namespace detail {

inline void require_window(const GroupSpec& group, const std::vector<GroupElement>& window) {
  const std::set<GroupElement> w(window.begin(), window.end());
  if (!w.contains(group.identity())) throw GradingError("degree window must contain e");
  for (const auto& g : w)
    if (!w.contains(group.inverse(g)))
      throw GradingError("degree window is not closed under inverse: missing " +
                         group.render(group.inverse(g)));
}

inline std::vector<GroupElement> sorted_unique(std::vector<GroupElement> w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

}  // namespace detail

/// Runs epsilon over a degree window. EPSILON_STRONG when every epsilon_g
/// exists and is verified; NOT_EPSILON_STRONG on an infinite witness;
/// UNDETERMINED when the bound runs out first.
template <CoefficientRing R>
Report check_epsilon_strong(const LeavittAlgebra<R>& alg, const DegreeMap& d,
                            std::vector<GroupElement> window, std::size_t len_bound) {
  detail::require_window(d.group(), window);
  window = detail::sorted_unique(std::move(window));
  const MonomialEnumerator<R> xg(alg, d, len_bound);
  const auto& group = d.group();

  Report rep;
  rep.property = "epsilon-strong";
  rep.bound = len_bound;
  std::optional<std::string> undetermined;
  for (const auto& g : window) {
    auto e = epsilon(alg, xg, g);
    const std::string label = "epsilon[" + group.render(g) + "]";
    if (e.classes.verdict == ClassVerdict::infinite_witness) {
      rep.verdict = "NOT_EPSILON_STRONG";
      rep.status = Status::fail;
      rep.degree = group.render(g);
      const auto& [a, b] = *e.classes.witness;
      rep.witness = "minimal classes " + alg.graph().render(a) + " and " +
                    alg.graph().render(b) +
                    " differ only in sibling sample edges of an infinite emitter";
      return rep;
    }
    if (!e.failure.empty()) {
      rep.verdict = "IDENTITY_CHECK_FAILED";
      rep.status = Status::fail;
      rep.degree = group.render(g);
      rep.witness = e.failure;
      return rep;
    }
    if (!e.present()) {
      if (!undetermined) undetermined = group.render(g) + ": " + e.absent_reason;
      continue;
    }
    rep.certificate.emplace_back(label, alg.render(*e.epsilon));
    rep.certificate.emplace_back(label + " factorization", render_factorization(alg, e.certificate));
  }
  if (undetermined) {
    rep.verdict = "UNDETERMINED";
    rep.status = Status::undetermined;
    rep.witness = *undetermined;
    return rep;
  }
  rep.verdict = "EPSILON_STRONG";
  // With no path of length `bound`, every path (hence every X_g) was
  // enumerated; covering all occurring degrees then settles the question.
  bool all_paths = std::none_of(xg.paths().begin(), xg.paths().end(),
                                [&](const Path& p) { return p.length() == len_bound; });
  bool covered = true;
  if (all_paths)
    for (const auto& g : xg.occurring_degrees())
      covered = covered && std::binary_search(window.begin(), window.end(), g);
  if (all_paths && covered && !alg.graph().has_infinite_emitters())
    rep.notes.push_back("unconditional: window covers every degree with nonempty X_g");
  else
    rep.notes.push_back("bounded: verified on the window at the stated bound");
  return rep;
}

/// Verdicts of the two independent strong-grading arms.
struct StrongGradingResult {
  Report report;
  /// Sink criterion; set only for finite unflagged graphs under the
  /// canonical Z-grading.
  std::optional<bool> structural;
  /// epsilon_g == sum of vertices on the window; unset when undetermined.
  std::optional<bool> computational;
};

template <CoefficientRing R>
StrongGradingResult check_strongly_graded(const LeavittAlgebra<R>& alg, const DegreeMap& d,
                                          std::vector<GroupElement> window,
                                          std::size_t len_bound) {
  detail::require_window(d.group(), window);
  window = detail::sorted_unique(std::move(window));
  const auto& graph = alg.graph();
  const auto& group = d.group();
  StrongGradingResult out;
  Report& rep = out.report;
  rep.property = "strong";
  rep.bound = len_bound;

  if (!graph.has_infinite_emitters() && d.is_canonical_z()) {
    const auto s = sinks(graph);
    out.structural = s.empty();
    std::string listed;
    for (auto v : s) listed += (listed.empty() ? "" : " ") + graph.vertex_id(v);
    rep.certificate.emplace_back("structural", s.empty() ? "STRONG (no sinks)"
                                                         : "NOT_STRONG (sinks: " + listed + ")");
  }

  const MonomialEnumerator<R> xg(alg, d, len_bound);
  const auto one = alg.identity();
  std::optional<std::string> failure;
  std::optional<std::string> undetermined;
  for (const auto& g : window) {
    auto e = epsilon(alg, xg, g);
    if (e.present()) {
      if (!alg.equals(*e.epsilon, one) && !failure)
        failure = "epsilon[" + group.render(g) + "] = " + alg.render(*e.epsilon) +
                  " is not the identity " + alg.render(one);
    } else if (e.classes.verdict == ClassVerdict::infinite_witness ||
               !e.failure.empty()) {
      if (!failure) failure = "epsilon[" + group.render(g) + "] absent: " + e.absent_reason;
    } else if (!undetermined) {
      undetermined = "epsilon[" + group.render(g) + "]: " + e.absent_reason;
    }
  }
  if (failure) {
    out.computational = false;
    rep.certificate.emplace_back("computational", "NOT_STRONG (" + *failure + ")");
  } else if (!undetermined) {
    out.computational = true;
    rep.certificate.emplace_back("computational", "STRONG (every epsilon_g is the identity)");
  } else {
    rep.certificate.emplace_back("computational", "UNDETERMINED (" + *undetermined + ")");
  }

  if (out.structural && out.computational && *out.structural != *out.computational) {
    rep.verdict = "ARMS_DISAGREE";
    rep.status = Status::fail;
    rep.witness = "sink criterion and epsilon computation disagree";
    return out;
  }
  std::optional<bool> strong = out.computational ? out.computational : out.structural;
  if (!strong) {
    rep.verdict = "UNDETERMINED";
    rep.status = Status::undetermined;
    rep.witness = *undetermined;
  } else if (*strong) {
    rep.verdict = "STRONG";
  } else {
    rep.verdict = "NOT_STRONG";
    rep.status = Status::fail;
    rep.witness = failure ? *failure : "graph has a sink";
  }
  return out;
}

/// Constructs and verifies local units for every nonzero sample.
template <CoefficientRing R>
Report check_nearly_epsilon(const LeavittAlgebra<R>& alg, const DegreeMap& d,
                            const std::vector<Element<R>>& samples) {
  Report rep;
  rep.property = "nearly-epsilon";
  std::size_t checked = 0, skipped = 0;
  for (const auto& s : samples) {
    if (s.is_zero()) {
      ++skipped;
      continue;
    }
    try {
      local_units(alg, s, d);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const GradingError*>(&e)) throw;
      rep.verdict = "IMPLEMENTATION_ERROR";
      rep.status = Status::fail;
      rep.witness = e.what();
      return rep;
    }
    ++checked;
  }
  rep.verdict = "PASS";
  rep.notes.push_back(std::to_string(checked) + " samples certified, " + std::to_string(skipped) +
                      " zero samples skipped");
  return rep;
}

/// Explicit non-degeneracy certificate: s * right = s != 0 with right in
/// S_{g^-1} S_g, and left * s = s with left in S_g S_{g^-1}.
template <CoefficientRing R>
struct NondegeneracyWitness {
  Element<R> right;
  Element<R> left;
};

template <CoefficientRing R>
NondegeneracyWitness<R> check_nondegenerate(const LeavittAlgebra<R>& alg, const Element<R>& s,
                                            const DegreeMap& d) {
  auto units = local_units(alg, s, d);
  // local_units already verified both products.
  return {std::move(units.right), std::move(units.left)};
}

}  // namespace lpa
