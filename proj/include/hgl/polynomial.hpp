#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hgl/monomial.hpp"
#include "hgl/scalar.hpp"

namespace hgl {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial mono;
  Scalar coef;
};

struct PolyParseError : std::runtime_error {
  PolyParseError(size_t offset_, std::string msg)
      : std::runtime_error(std::move(msg)), offset(offset_) {}
  size_t offset;  // byte offset into the parsed text
};

/// Sparse multivariate polynomial in canonical form: terms strictly
/// descending in the ring's monomial order, no zero coefficients.
/// Ring relations are never reduced here; a Polynomial is an element of
/// the ambient free polynomial ring.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring);
  static Polynomial of_int(RingPtr ring, long long n);
  static Polynomial from_scalar(RingPtr ring, Scalar c);
  static Polynomial term(RingPtr ring, Monomial m, Scalar c);
  static Polynomial variable(RingPtr ring, size_t var);

  /// Sorted (mono, coef) pairs are combined and zeros dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }
  const Term& leading() const;

  bool is_constant() const;
  /// Nonzero scalar constant (a unit); false for zero.
  bool is_unit_constant() const;

  long long degree() const;  // max weighted degree over terms; -1 for zero
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial negated() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial term_mul(const Term& t) const;  // order-preserving, O(n)

  /// this -= t * o, the reduction step workhorse.
  void sub_mul(const Term& t, const Polynomial& o);

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Re-express over a ring with the same coefficient field, mapping
  /// variables by name; missing variables must not occur.
  Polynomial transport(const RingPtr& target) const;

  std::string str() const;

  /// Text syntax: integer coefficients, named variables, `+ - *` and `^`,
  /// no implicit multiplication. Throws PolyParseError.
  static Polynomial parse(const RingPtr& ring, std::string_view text);

 private:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  void check_compatible(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace hgl
