#pragma once

#include "hgl/monomial.hpp"

namespace hgl {

/// Term order on ring monomials. Graded orders compare the weighted
/// degree first; Block is the elimination order that makes the first
/// `split` variables dominate (used to eliminate auxiliary variables).
struct MonomialOrder {
  enum class Kind { GrevLex, Lex, Block };

  Kind kind = Kind::GrevLex;
  int split = 0;                        // Block: vars [0, split) are eliminated
  Kind first_block = Kind::GrevLex;     // order within the eliminated block
  Kind rest_block = Kind::GrevLex;      // order within the remaining block

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0, Kind::GrevLex, Kind::GrevLex}; }
  static MonomialOrder elimination(int split) {
    return {Kind::Block, split, Kind::GrevLex, Kind::GrevLex};
  }

  /// +1 if a > b, -1 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b,
              const std::vector<int>& weights) const;

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && split == o.split && first_block == o.first_block &&
           rest_block == o.rest_block;
  }
};

}  // namespace hgl
