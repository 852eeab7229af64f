#include "hgl/ring.hpp"

#include <set>

namespace hgl {

RingPtr Ring::make(std::vector<std::string> vars, long long characteristic,
                   std::vector<int> weights, MonomialOrder order) {
  if (vars.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable name: " + v);
  }
  if (characteristic != 0 && !is_odd_prime(characteristic))
    throw std::invalid_argument("characteristic must be 0 or an odd prime");
  if (characteristic > (1LL << 31))
    throw std::invalid_argument("characteristic too large");
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size())
    throw std::invalid_argument("one weight per variable required");
  for (int w : weights)
    if (w <= 0) throw std::invalid_argument("weights must be positive");

  auto r = std::shared_ptr<Ring>(new Ring());
  r->vars_ = std::move(vars);
  r->characteristic_ = characteristic;
  r->weights_ = std::move(weights);
  r->order_ = order;
  return r;
}

RingPtr Ring::with_relations(std::vector<Polynomial> relations,
                             bool hypersurface_check) const {
  if (hypersurface_check) {
    if (relations.size() > 1)
      throw std::invalid_argument("at most one defining relation (hypersurface)");
    for (const auto& f : relations) {
      if (f.is_zero()) throw std::invalid_argument("zero relation");
      if (!f.is_homogeneous())
        throw std::invalid_argument("relation must be homogeneous for the declared weights");
    }
  }
  auto r = std::shared_ptr<Ring>(new Ring());
  r->vars_ = vars_;
  r->characteristic_ = characteristic_;
  r->weights_ = weights_;
  r->order_ = order_;
  r->relations_ = std::move(relations);
  return r;
}

RingPtr Ring::with_order(MonomialOrder order) const {
  auto r = std::shared_ptr<Ring>(new Ring());
  r->vars_ = vars_;
  r->characteristic_ = characteristic_;
  r->weights_ = weights_;
  r->order_ = order;
  auto out = RingPtr(r);
  for (const auto& f : relations_) r->relations_.push_back(f.transport(out));
  return out;
}

int Ring::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool Ring::same_signature(const Ring& o) const {
  return vars_ == o.vars_ && characteristic_ == o.characteristic_ &&
         weights_ == o.weights_ && order_ == o.order_;
}

long long Ring::weighted_degree(const Monomial& m) const {
  long long d = 0;
  for (size_t i = 0; i < m.nvars(); ++i)
    d += static_cast<long long>(m.exp(i)) * weights_[i];
  return d;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_signature(*b);
}

}  // namespace hgl
