#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpa {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact, commutative, unital coefficient ring. Scalars are plain values;
/// the ring object carries whatever runtime data (a modulus) the arithmetic
/// needs.
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::Scalar& a,
                                   const typename R::Scalar& b, std::string_view text) {
  typename R::Scalar;
  { r.zero() } -> std::same_as<typename R::Scalar>;
  { r.one() } -> std::same_as<typename R::Scalar>;
  { r.add(a, b) } -> std::same_as<typename R::Scalar>;
  { r.mul(a, b) } -> std::same_as<typename R::Scalar>;
  { r.neg(a) } -> std::same_as<typename R::Scalar>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.equal(a, b) } -> std::convertible_to<bool>;
  { r.is_negative(a) } -> std::convertible_to<bool>;
  { r.from_int(std::int64_t{}) } -> std::same_as<typename R::Scalar>;
  { r.parse(text) } -> std::same_as<typename R::Scalar>;
  { r.render(a) } -> std::same_as<std::string>;
  { r.name() } -> std::same_as<std::string>;
};

namespace detail {

inline boost::multiprecision::cpp_int parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw RingError("not an integer: '" + std::string(text) + "'");
  return boost::multiprecision::cpp_int(std::string(text));
}

/// Splits "a/b" into numerator and denominator text; no '/' means b = 1.
inline std::pair<std::string_view, std::string_view> split_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {text, "1"};
  return {text.substr(0, slash), text.substr(slash + 1)};
}

}  // namespace detail

/// The integers, arbitrary precision.
struct Integers {
  using Scalar = boost::multiprecision::cpp_int;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }
  bool is_negative(const Scalar& a) const { return a < 0; }
  Scalar from_int(std::int64_t v) const { return v; }
  Scalar parse(std::string_view text) const {
    auto [num, den] = detail::split_fraction(text);
    Scalar n = detail::parse_integer(num);
    Scalar d = detail::parse_integer(den);
    if (d.is_zero()) throw RingError("zero denominator in '" + std::string(text) + "'");
    if (n % d != 0)
      throw RingError("'" + std::string(text) + "' is not an integer");
    return n / d;
  }
  std::string render(const Scalar& a) const { return a.str(); }
  std::string name() const { return "z"; }
};

/// The rationals, arbitrary precision, always in lowest terms.
struct Rationals {
  using Scalar = boost::multiprecision::cpp_rational;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }
  bool is_negative(const Scalar& a) const { return a < 0; }
  Scalar from_int(std::int64_t v) const { return v; }
  Scalar parse(std::string_view text) const {
    auto [num, den] = detail::split_fraction(text);
    auto n = detail::parse_integer(num);
    auto d = detail::parse_integer(den);
    if (d.is_zero()) throw RingError("zero denominator in '" + std::string(text) + "'");
    return Scalar(n, d);
  }
  std::string render(const Scalar& a) const { return a.str(); }
  std::string name() const { return "q"; }
};

/// Z/mZ with m >= 2. Scalars are the residues 0..m-1.
class IntegersMod {
 public:
  using Scalar = std::int64_t;

  explicit IntegersMod(std::int64_t modulus) : m_(modulus) {
    if (modulus < 2) throw RingError("modulus must be at least 2");
  }

  std::int64_t modulus() const { return m_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar add(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<__int128>(a) + b) % m_);
  }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<__int128>(a) * b) % m_);
  }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : m_ - a; }
  bool is_zero(Scalar a) const { return a == 0; }
  bool equal(Scalar a, Scalar b) const { return a == b; }
  bool is_negative(Scalar) const { return false; }
  Scalar from_int(std::int64_t v) const {
    auto r = v % m_;
    return r < 0 ? r + m_ : r;
  }
  Scalar parse(std::string_view text) const {
    using boost::multiprecision::cpp_int;
    auto [num, den] = detail::split_fraction(text);
    cpp_int m = m_;
    cpp_int n = detail::parse_integer(num) % m;
    cpp_int d = detail::parse_integer(den) % m;
    if (n < 0) n += m;
    if (d < 0) d += m;
    // d^{-1} mod m by extended Euclid.
    cpp_int a = d, b = m, x0 = 1, x1 = 0;
    while (b != 0) {
      cpp_int q = a / b;
      cpp_int r = a - q * b;
      a = b;
      b = r;
      cpp_int x = x0 - q * x1;
      x0 = x1;
      x1 = x;
    }
    if (a != 1)
      throw RingError("denominator in '" + std::string(text) + "' is not invertible mod " +
                      std::to_string(m_));
    cpp_int r = (n * x0) % m;
    if (r < 0) r += m;
    return static_cast<Scalar>(r);
  }
  std::string render(Scalar a) const { return std::to_string(a); }
  std::string name() const { return "z/" + std::to_string(m_); }

 private:
  std::int64_t m_;
};

static_assert(CoefficientRing<Integers>);
static_assert(CoefficientRing<Rationals>);
static_assert(CoefficientRing<IntegersMod>);

}  // namespace lpa
