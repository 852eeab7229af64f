#pragma once

#include <optional>
#include <vector>

#include "hgl/polynomial.hpp"
#include "hgl/ring.hpp"

namespace hgl {

/// Element of a free module R^rank, stored as one polynomial per
/// basis component.
class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(RingPtr ring, int rank);

  static ModuleElement basis_vector(const RingPtr& ring, int rank, int j);
  static ModuleElement single(const RingPtr& ring, int rank, int j, Polynomial p);
  static ModuleElement from_poly(Polynomial p);  // rank-1 embedding

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(comp_.size()); }
  const Polynomial& comp(int j) const { return comp_[j]; }
  Polynomial& comp(int j) { return comp_[j]; }

  bool is_zero() const;

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  ModuleElement negated() const;
  ModuleElement scaled(const Scalar& c) const;
  ModuleElement term_mul(const Term& t) const;
  ModuleElement poly_mul(const Polynomial& p) const;
  void sub_mul(const Term& t, const ModuleElement& o);

  bool operator==(const ModuleElement& o) const { return comp_ == o.comp_; }

  /// All nonzero terms have the same twisted degree (component shifts).
  bool is_homogeneous(const std::vector<long long>& shifts) const;
  std::optional<long long> homogeneous_degree(const std::vector<long long>& shifts) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> comp_;
};

/// Leading term of a module element: component plus the term.
struct LeadTerm {
  int comp = -1;  // -1 for the zero element
  Monomial mono;
  Scalar coef;
};

/// Order on free-module terms. Plain elements use a TOP or POT
/// extension of the ring order; syzygy computations use a two-block
/// order in which ambient components dominate tag components and the
/// tag block carries the Schreyer order induced by the input leads.
class ModuleOrder {
 public:
  enum class Kind { TermOverPosition, PositionOverTerm };

  static ModuleOrder top() { return ModuleOrder(Kind::TermOverPosition); }
  static ModuleOrder pot() { return ModuleOrder(Kind::PositionOverTerm); }
  static ModuleOrder graph(Kind base, int ambient_rank,
                           std::vector<LeadTerm> tag_images);

  /// +1 if (m1,c1) > (m2,c2).
  int compare(const Ring& ring, const Monomial& m1, int c1, const Monomial& m2,
              int c2) const;

  bool is_graph() const { return ambient_rank_ >= 0; }
  int ambient_rank() const { return ambient_rank_; }

 private:
  explicit ModuleOrder(Kind k) : kind_(k) {}

  Kind kind_ = Kind::TermOverPosition;
  int ambient_rank_ = -1;  // >= 0 marks a graph order
  std::vector<LeadTerm> tag_images_;
};

LeadTerm lead_term(const ModuleElement& v, const ModuleOrder& ord);

}  // namespace hgl
