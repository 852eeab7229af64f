#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "hgl/groebner.hpp"

namespace hgl {

/// Finitely generated ideal of R = S/(relations), with a lazily computed,
/// write-once, shareable reduced Groebner basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The irrelevant maximal ideal (all variables).
  static Ideal irrelevant(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  const GroebnerBasis& groebner() const;

  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit() const;

 private:
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const GroebnerBasis> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// All degree-n products of the generators, redundant products pruned by
/// normal form. n = 0 yields the unit ideal by convention.
Ideal ideal_power(const Ideal& I, long long n);

/// (J : g) = { r : r g in J }, via syzygies over the quotient ring.
Ideal colon(const Ideal& J, const Polynomial& g);
/// (J : K) as the intersection of the element colons.
Ideal colon(const Ideal& J, const Ideal& K);

/// (J : K^inf) by iterated colon; second component is the first index at
/// which the chain stabilizes.
std::pair<Ideal, int> saturate(const Ideal& J, const Ideal& K);

/// Elimination method: t J1 + (1-t) J2 in R[t], t eliminated.
Ideal intersect(const Ideal& a, const Ideal& b);

/// Krull dimension of S/(J + ring relations); unit ideal gives -1.
int krull_dim(const Ideal& J);

/// lambda(R/J) as a k-dimension; nullopt means infinite.
std::optional<long long> quotient_length(const Ideal& J);

/// dim_k of the degree-d piece of R/J (J homogeneous).
long long quotient_hilbert(const Ideal& J, long long d);

}  // namespace hgl
