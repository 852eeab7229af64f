#pragma once

#include <functional>

#include "hgl/submodule.hpp"

namespace hgl {

/// Partial free resolution F_L -> ... -> F_1 -> F_0 of a subquotient,
/// built by iterated syzygies over R = S/(relations) and pruned so that
/// no differential carries a nonzero constant entry.
struct FreeResolution {
  RingPtr ring;
  std::vector<int> ranks;                        // ranks of F_0..F_L
  std::vector<std::vector<ModuleElement>> diff;  // diff[k] = columns of d_(k+1) in F_k

  int length() const { return static_cast<int>(diff.size()); }
  const Polynomial& entry(int step, int row, int col) const {
    return diff[step][col].comp(row);  // step k holds d_(k+1)
  }
};

FreeResolution free_resolution(const Submodule& M, int len);

/// d_i o d_(i+1) = 0 over the quotient ring; checked on construction,
/// exposed for the property suites.
bool resolution_is_complex(const FreeResolution& F);

struct Homology {
  Submodule pres;  // subquotient presentation of the homology module
  int index = 0;
  std::optional<long long> len;  // nullopt = infinite
};

enum class FunctorKind { Ext, Tor };

/// H^i(Hom(F_., B)) for F_. a resolution of A; resolves the first argument.
Homology ext_module(int i, const Submodule& A, const Submodule& B);
Homology ext_module(int i, const FreeResolution& RA, const Submodule& B);

/// H_i(F_. ⊗ B).
Homology tor_module(int i, const Submodule& A, const Submodule& B);
Homology tor_module(int i, const FreeResolution& RA, const Submodule& B);

/// (J : m^inf)/J presented as a subquotient.
Homology local_cohomology_h0(const Ideal& J, const Ideal& m);

/// m-saturation of P^n (valid when the non-P-primary part of P^n is
/// supported at the irrelevant maximal ideal).
Ideal symbolic_power(const Ideal& P, long long n);

Homology composed_functor(int j, FunctorKind kind, const Submodule& L,
                          const Homology& inner);
Homology composed_functor(int j, FunctorKind kind, const FreeResolution& RL,
                          const Homology& inner);

/// N/I^n N as a cokernel; N must be in cokernel form (or free).
Submodule power_quotient(const Submodule& N, const Ideal& I, long long n);

struct LengthSequence {
  long long n0 = 1;
  std::vector<std::optional<long long>> values;
  std::string provenance;

  bool all_finite() const {
    for (const auto& v : values)
      if (!v) return false;
    return true;
  }
};

/// Evaluate n -> lambda(value(n)) over [n0, n1], optionally in parallel;
/// assembly order is deterministic regardless of evaluation order.
LengthSequence map_lengths(long long n0, long long n1,
                           const std::function<std::optional<long long>(long long)>& eval,
                           bool parallel, std::string provenance);

struct LengthFunctorSpec {
  FunctorKind kind = FunctorKind::Ext;
  int i = 0;
  bool powered_first = true;  // the powered quotient is the resolved argument
  Submodule N;                // module whose power quotients are taken
  Ideal I;
  Submodule other;            // the fixed argument
  std::optional<FunctorKind> compose_kind;
  int compose_j = 0;
  Submodule compose_L;
};

LengthSequence length_sequence(const LengthFunctorSpec& spec, long long n0,
                               long long n1, bool parallel = true);

}  // namespace hgl
