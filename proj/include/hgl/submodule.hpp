#pragma once

#include "hgl/ideal.hpp"

namespace hgl {

/// Finitely generated submodule or subquotient of R^rank: span(gens) when
/// rels is empty, otherwise span(gens)/span(rels) with rels inside the span.
class Submodule {
 public:
  Submodule() = default;

  static Submodule span(RingPtr ring, int rank, std::vector<ModuleElement> gens);
  static Submodule cokernel(RingPtr ring, int rank, std::vector<ModuleElement> rels);
  static Submodule subquotient(RingPtr ring, int rank, std::vector<ModuleElement> gens,
                               std::vector<ModuleElement> rels);
  static Submodule free_module(RingPtr ring, int rank);
  static Submodule quotient_by_ideal(const Ideal& J);   // R/J as rank-1 cokernel
  static Submodule ideal_as_module(const Ideal& J);     // span of J inside R^1

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<ModuleElement>& gens() const { return gens_; }
  const std::vector<ModuleElement>& rels() const { return rels_; }
  bool is_cokernel_form() const;  // gens are exactly the standard basis

  const GroebnerBasis& span_groebner() const;  // GB of span(gens)

 private:
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const GroebnerBasis> gb;
  };

  RingPtr ring_;
  int rank_ = 0;
  std::vector<ModuleElement> gens_;
  std::vector<ModuleElement> rels_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Cokernel presentation of a subquotient: the free module on the input
/// generators modulo the lifted relations (syzygies included). Throws if
/// some relation is not contained in the span of the generators.
struct CokernelPresentation {
  RingPtr ring;
  int rank = 0;                         // number of generators presented
  std::vector<ModuleElement> relations;
  std::vector<long long> shifts;        // generator degrees; valid iff homogeneous
  bool shifts_valid = false;

  Submodule as_submodule() const;
};

CokernelPresentation present_subquotient(const Submodule& M);

/// lambda(M) for a subquotient; nullopt means infinite length.
std::optional<long long> length(const Submodule& M);

/// dim_k of the degree-d piece of a graded subquotient.
long long hilbert_function(const Submodule& M, long long d);

/// Span intersection via the syzygy method.
Submodule intersect(const Submodule& A, const Submodule& B);

/// Span of { p*g : p in gens(I), g in gens(M) }.
Submodule multiply(const Ideal& I, const Submodule& M);

/// ann(M) = { r : r * gens(M) is contained in span(rels(M)) }.
Ideal annihilator(const Submodule& M);

/// Span equality by mutual Groebner membership.
bool span_equal(const Submodule& A, const Submodule& B);
bool span_contains(const Submodule& A, const ModuleElement& v);

struct ArtinReesResult {
  bool certified = false;
  int index = -1;
  int window_max = 0;
  std::vector<long long> checked_n;  // the n at which equality was certified
};

/// Smallest k <= window_max with I^n M ∩ N = I^(n-k)(I^k M ∩ N) for every
/// n in [k, window_max], each side compared by mutual membership.
ArtinReesResult artin_rees_index(const Submodule& M, const Submodule& N,
                                 const Ideal& I, int window_max);

/// Standard-monomial counting against a Groebner basis: the whole count
/// (nullopt = infinite) and the count in a fixed twisted degree.
std::optional<long long> standard_monomial_count(const GroebnerBasis& gb);
long long standard_monomial_count_degree(const GroebnerBasis& gb,
                                         const std::vector<long long>& shifts,
                                         long long d);

}  // namespace hgl
