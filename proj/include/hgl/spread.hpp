#pragma once

#include "hgl/submodule.hpp"

namespace hgl {

/// Defining relations of the Rees algebra R[It]: the kernel of
/// R[y_1..y_s] -> R[It], y_i -> f_i t, computed by eliminating t.
struct ReesPresentation {
  RingPtr yring;                    // S[y] carrying the ring relations
  std::vector<Polynomial> relations;  // t-free kernel generators
  int ngens = 0;                    // s = number of ideal generators
};

ReesPresentation rees_presentation(const Ideal& I);

/// Defining ideal of the fiber cone k[y]/(...) = R[It]/mR[It].
struct FiberCone {
  RingPtr yonly;  // k[y_1..y_s]
  std::vector<Polynomial> defining;
};

FiberCone fiber_cone(const Ideal& I, const std::vector<Polynomial>& extra_relations);

/// Analytic spread l(I) = dim of the fiber cone.
int analytic_spread(const Ideal& I);

/// l_N(I) computed over R/ann(N).
int analytic_spread_on(const Ideal& I, const Submodule& N);

}  // namespace hgl
