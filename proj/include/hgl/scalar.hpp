#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hgl {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

bool is_odd_prime(long long p);

/// Exact field element: F_p for an odd prime p, or Q when the
/// characteristic is zero. Scalars carry their characteristic so that
/// mixed-field arithmetic is rejected instead of silently coerced.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(long long p);
  static Scalar one(long long p);
  static Scalar of_int(long long p, long long n);
  static Scalar of_rational(Rational q);

  long long characteristic() const { return p_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar negated() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Residue in [0,p) for prime fields; throws in characteristic zero.
  long long fp_value() const;
  const Rational& rat_value() const;

  std::string str() const;

 private:
  void check_same_field(const Scalar& o) const;

  long long p_ = 0;
  long long v_ = 0;  // value when p_ > 0
  Rational q_;       // value when p_ == 0
};

}  // namespace hgl
