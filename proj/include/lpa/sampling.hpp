#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "lpa/grading.hpp"

namespace lpa {

/// Seeded pseudorandom elements with bounded support, drawn from the
/// normal-form monomials within a length bound. Same seed, same sequence.
template <CoefficientRing R>
class ElementSampler {
 public:
  ElementSampler(const LeavittAlgebra<R>& alg, const DegreeMap& d, std::size_t len_bound,
                 std::uint64_t seed)
      : alg_(alg), rng_(seed) {
    for (auto& m : MonomialEnumerator<R>(alg, d, len_bound).all_monomials()) {
      auto g = degree_of(m, d);
      all_.push_back(m);
      by_degree_[g].push_back(std::move(m));
    }
    for (const auto& [g, ms] : by_degree_) degrees_.push_back(g);
  }

  [[nodiscard]] const std::vector<GroupElement>& degrees() const { return degrees_; }

  /// Random nonzero-coefficient combination of up to max_support monomials
  /// of one randomly chosen degree. May be zero only in small rings.
  Element<R> homogeneous(std::size_t max_support) {
    const auto& g = degrees_[pick(degrees_.size())];
    return combination(by_degree_.at(g), max_support);
  }

  Element<R> homogeneous_of_degree(const GroupElement& g, std::size_t max_support) {
    auto it = by_degree_.find(g);
    if (it == by_degree_.end()) return {};
    return combination(it->second, max_support);
  }

  /// Random combination of monomials of any degrees.
  Element<R> any(std::size_t max_support) { return combination(all_, max_support); }

 private:
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  Element<R> combination(const std::vector<Monomial>& pool, std::size_t max_support) {
    if (pool.empty() || max_support == 0) return {};
    const std::size_t k = 1 + pick(max_support);
    typename LeavittAlgebra<R>::RawTerms raw;
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t c = std::uniform_int_distribution<std::int64_t>(-3, 2)(rng_);
      if (c >= 0) ++c;  // [-3, 3] without 0
      raw.emplace_back(pool[pick(pool.size())], alg_.ring().from_int(c));
    }
    return alg_.normal_form(raw);
  }

  const LeavittAlgebra<R>& alg_;
  std::mt19937_64 rng_;
  std::vector<Monomial> all_;
  std::map<GroupElement, std::vector<Monomial>> by_degree_;
  std::vector<GroupElement> degrees_;
};

}  // namespace lpa
