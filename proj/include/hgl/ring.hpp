#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hgl/order.hpp"
#include "hgl/polynomial.hpp"

namespace hgl {

constexpr long long kDefaultCharacteristic = 32003;

/// Presentation of the ambient ring: a polynomial ring S = k[x_1..x_v]
/// with a weighted grading and a term order, together with defining
/// relations. User-facing rings are either free (no relations) or a
/// hypersurface S/(f); internal elimination rings may carry more.
class Ring {
 public:
  static RingPtr make(std::vector<std::string> vars,
                      long long characteristic = kDefaultCharacteristic,
                      std::vector<int> weights = {},
                      MonomialOrder order = MonomialOrder::grevlex());

  /// New ring sharing this signature with relations attached.
  /// `hypersurface_check` enforces the user-facing invariant (at most one
  /// relation, nonzero and homogeneous).
  RingPtr with_relations(std::vector<Polynomial> relations,
                         bool hypersurface_check = true) const;

  /// Same variables/characteristic/weights under a different term order.
  RingPtr with_order(MonomialOrder order) const;

  const std::vector<std::string>& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  long long characteristic() const { return characteristic_; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  bool is_quotient() const { return !relations_.empty(); }

  int var_index(const std::string& name) const;  // -1 if absent

  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, weights_);
  }

  /// Structural compatibility for polynomial arithmetic: same variables,
  /// characteristic, weights and order (relations are a quotient concern).
  bool same_signature(const Ring& o) const;

  Scalar scalar_of_int(long long n) const { return Scalar::of_int(characteristic_, n); }
  Monomial monomial(std::vector<int> exps) const {
    return Monomial::make(std::move(exps), weights_);
  }

  long long weighted_degree(const Monomial& m) const;

 private:
  Ring() = default;

  std::vector<std::string> vars_;
  long long characteristic_ = kDefaultCharacteristic;
  std::vector<int> weights_;
  MonomialOrder order_;
  std::vector<Polynomial> relations_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace hgl
