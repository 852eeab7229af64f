#include "hgl/scalar.hpp"

namespace hgl {

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace {

long long mod_norm(long long n, long long p) {
  long long r = n % p;
  return r < 0 ? r + p : r;
}

// extended Euclid inverse of a mod p, a != 0
long long mod_inverse(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("scalar not invertible");
  return mod_norm(t, p);
}

}  // namespace

Scalar Scalar::zero(long long p) {
  Scalar s;
  s.p_ = p;
  return s;
}

Scalar Scalar::one(long long p) { return of_int(p, 1); }

Scalar Scalar::of_int(long long p, long long n) {
  Scalar s;
  s.p_ = p;
  if (p > 0)
    s.v_ = mod_norm(n, p);
  else
    s.q_ = n;
  return s;
}

Scalar Scalar::of_rational(Rational q) {
  Scalar s;
  s.p_ = 0;
  s.q_ = std::move(q);
  return s;
}

bool Scalar::is_zero() const { return p_ > 0 ? v_ == 0 : q_.is_zero(); }

bool Scalar::is_one() const { return p_ > 0 ? v_ == 1 : q_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ > 0)
    s.v_ = mod_norm(v_ + o.v_, p_);
  else
    s.q_ = q_ + o.q_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ > 0)
    s.v_ = mod_norm(v_ - o.v_, p_);
  else
    s.q_ = q_ - o.q_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.p_ = p_;
  if (p_ > 0)
    s.v_ = mod_norm(v_ * o.v_, p_);
  else
    s.q_ = q_ * o.q_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::negated() const {
  Scalar s;
  s.p_ = p_;
  if (p_ > 0)
    s.v_ = v_ == 0 ? 0 : p_ - v_;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s;
  s.p_ = p_;
  if (p_ > 0)
    s.v_ = mod_inverse(v_, p_);
  else
    s.q_ = Rational(1) / q_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ > 0 ? v_ == o.v_ : q_ == o.q_;
}

long long Scalar::fp_value() const {
  if (p_ == 0) throw std::logic_error("fp_value in characteristic zero");
  return v_;
}

const Rational& Scalar::rat_value() const {
  if (p_ != 0) throw std::logic_error("rat_value in positive characteristic");
  return q_;
}

std::string Scalar::str() const {
  if (p_ > 0) return std::to_string(v_);
  return q_.str();
}

}  // namespace hgl
