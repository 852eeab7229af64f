#pragma once

#include <vector>

#include "hgl/element.hpp"

namespace hgl {

/// Reduced Groebner basis of a submodule of R^rank where R = S/(relations):
/// concretely a basis of the preimage submodule of the free S-module,
/// with the relation multiples adjoined. Unique for its module and order.
struct GroebnerBasis {
  RingPtr ring;
  int rank = 1;
  ModuleOrder order = ModuleOrder::top();
  std::vector<ModuleElement> gens;
  bool reduced = true;

  bool contains_unit_in(int comp) const;
};

GroebnerBasis buchberger(std::vector<ModuleElement> gens, const RingPtr& ring,
                         int rank, ModuleOrder order = ModuleOrder::top());

GroebnerBasis buchberger_ideal(const std::vector<Polynomial>& gens,
                               const RingPtr& ring);

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Generators of { c in R^m : sum c_i gens_i = 0 } over R = S/(relations);
/// Schreyer-type elimination on the tagged module, relation coordinates
/// projected away. Interreduced, not necessarily minimal.
std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens,
                                    const RingPtr& ring, int rank);

/// Every S-pair of the basis reduces to zero (test/diagnostic hook).
bool buchberger_criterion_holds(const GroebnerBasis& gb);

}  // namespace hgl
