#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lpa/epsilon.hpp"

namespace lpa {

class FrobeniusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (E, x_j, y_j) for the extension L_R(E) / L_R(E)_e, where E is the
/// projection onto degree e and the pairs come from the epsilon_g
/// factorizations over the whole (finite) group.
template <CoefficientRing R>
struct FrobeniusSystem {
  struct Pair {
    Element<R> x;
    Element<R> y;
    GroupElement degree;  // of x; y has the inverse degree
  };

  std::vector<Pair> pairs;
  DegreeMap trace;
  /// sum over g of epsilon_g, which must equal sum_j x_j y_j.
  Element<R> epsilon_sum;
};

/// The degree-e part of a.
template <CoefficientRing R>
Element<R> projection_e(const Element<R>& a, const DegreeMap& d) {
  typename Element<R>::Terms terms;
  const auto e = d.group().identity();
  for (const auto& [m, c] : a.terms())
    if (degree_of(m, d) == e) terms.emplace(m, c);
  return Element<R>(std::move(terms));
}

template <CoefficientRing R>
FrobeniusSystem<R> build_frobenius_system(const LeavittAlgebra<R>& alg, const DegreeMap& d,
                                          std::size_t len_bound) {
  const auto& group = d.group();
  if (!group.is_finite())
    throw FrobeniusError("Frobenius system needs a finite group, got " + group.name());
  if (alg.graph().has_infinite_emitters())
    throw FrobeniusError("Frobenius system needs a graph without infinite emitters");
  if (len_bound < 1) throw FrobeniusError("Frobenius system needs bound >= 1");

  const MonomialEnumerator<R> xg(alg, d, len_bound);
  FrobeniusSystem<R> sys{{}, d, {}};
  for (const auto& g : group.elements()) {
    auto e = epsilon(alg, xg, g);
    if (!e.present())
      throw FrobeniusError("epsilon[" + group.render(g) + "] absent: " + e.absent_reason);
    for (const auto& [x, y] : e.certificate)
      sys.pairs.push_back({alg.from_monomial(x), alg.from_monomial(y), g});
    sys.epsilon_sum = alg.add(sys.epsilon_sum, *e.epsilon);
  }
  Element<R> check;
  for (const auto& p : sys.pairs) check = alg.add(check, alg.mul(p.x, p.y));
  if (!alg.equals(check, sys.epsilon_sum))
    throw std::logic_error("sum of x_j y_j differs from the sum of epsilon_g");
  return sys;
}

/// Checks s = sum_j x_j E(y_j s) = sum_j E(s x_j) y_j on every sample, and
/// E(t a t') = t E(a) t' on every (t, a, t') triple.
template <CoefficientRing R>
Report verify_frobenius(const LeavittAlgebra<R>& alg, const FrobeniusSystem<R>& sys,
                        const std::vector<Element<R>>& samples,
                        const std::vector<std::tuple<Element<R>, Element<R>, Element<R>>>&
                            bimodule_triples = {}) {
  Report rep;
  rep.property = "frobenius";
  const auto& d = sys.trace;
  auto fail = [&](std::string witness) {
    rep.verdict = "FAIL";
    rep.status = Status::fail;
    rep.witness = std::move(witness);
    return rep;
  };
  for (const auto& s : samples) {
    Element<R> left, right;
    for (const auto& p : sys.pairs) {
      left = alg.add(left, alg.mul(p.x, projection_e(alg.mul(p.y, s), d)));
      right = alg.add(right, alg.mul(projection_e(alg.mul(s, p.x), d), p.y));
    }
    if (!alg.equals(left, s))
      return fail("sum x_j E(y_j s) = " + alg.render(left) + " for s = " + alg.render(s));
    if (!alg.equals(right, s))
      return fail("sum E(s x_j) y_j = " + alg.render(right) + " for s = " + alg.render(s));
  }
  for (const auto& [t, a, t2] : bimodule_triples) {
    const auto lhs = projection_e(alg.mul(alg.mul(t, a), t2), d);
    const auto rhs = alg.mul(alg.mul(t, projection_e(a, d)), t2);
    if (!alg.equals(lhs, rhs))
      return fail("E(t a t') != t E(a) t' for t = " + alg.render(t) + ", a = " + alg.render(a) +
                  ", t' = " + alg.render(t2));
  }
  rep.verdict = "PASS";
  rep.certificate.emplace_back("pairs", std::to_string(sys.pairs.size()));
  for (const auto& p : sys.pairs)
    rep.certificate.emplace_back("pair[" + d.group().render(p.degree) + "]",
                                 "(" + alg.render(p.x) + ", " + alg.render(p.y) + ")");
  rep.notes.push_back(std::to_string(samples.size()) + " samples, " +
                      std::to_string(bimodule_triples.size()) + " bimodule triples");
  return rep;
}

}  // namespace lpa
