#pragma once

// Exact scalar arithmetic: prime fields F_p with machine-word p, and
// arbitrary-precision rationals. Every operation is exact; nothing in the
// library ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gradres {

/// Bad user-supplied data (malformed tables, dimension mismatches, ...).
/// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation the engine refuses to attempt (unsupported radical
/// strategy, enumeration bound exceeded, dimension cap hit, ...).
/// Never a wrong answer. The CLI maps this to exit code 3.
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A validated object failed a downstream consistency re-check. Indicates a
/// bug in the caller or in the library, not bad user input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// F_p for a prime machine integer p. Elements are canonical residues in
/// [0, p); p is capped below 2^31 so products fit in int64 without overflow.
class PrimeField {
 public:
  using Element = std::int64_t;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (p < 2 || p >= (std::int64_t{1} << 31)) {
      throw input_error("prime field: p out of range: " + std::to_string(p));
    }
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) {
      throw input_error("prime field: p is not prime: " + std::to_string(p));
    }
  }

  std::int64_t p() const { return p_; }
  std::int64_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element from_int(std::int64_t n) const {
    Element r = n % p_;
    return r < 0 ? r + p_ : r;
  }

  Element add(Element a, Element b) const {
    Element r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Element sub(Element a, Element b) const {
    Element r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }

  Element inv(Element a) const {
    if (a == 0) throw input_error("prime field: inverse of zero");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t            -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    return t < 0 ? t + p_ : t;
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  std::string to_string(Element a) const { return std::to_string(a); }

  Element parse(const std::string& s) const {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw input_error("prime field: bad scalar '" + s + "'");
    return from_int(v);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::int64_t p_;
};

/// The rationals with arbitrary-precision numerator and denominator.
class RationalField {
 public:
  using Element = boost::multiprecision::cpp_rational;

  std::int64_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element from_int(std::int64_t n) const { return Element(n); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw input_error("rationals: inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a / b; }

  std::string to_string(const Element& a) const { return a.str(); }

  Element parse(const std::string& s) const {
    try {
      return Element(s);
    } catch (const std::exception&) {
      throw input_error("rationals: bad scalar '" + s + "'");
    }
  }

  bool operator==(const RationalField&) const { return true; }
};

template <class F>
concept FieldLike = requires(const F f, typename F::Element a) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Element>;
  { f.characteristic() } -> std::convertible_to<std::int64_t>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

/// Runtime description of the ground field, as it appears in JSON inputs.
struct FieldSpec {
  enum class Kind { prime, rationals };
  Kind kind = Kind::prime;
  std::int64_t p = 2;

  static FieldSpec primes(std::int64_t p) { return {Kind::prime, p}; }
  static FieldSpec rationals() { return {Kind::rationals, 0}; }
};

/// Calls fn with the concrete field object selected by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::prime) {
    return fn(PrimeField(spec.p));
  }
  return fn(RationalField{});
}

}  // namespace gradres
