#pragma once

#include <random>
#include <vector>

#include "hgl/ring.hpp"

namespace hgltest {

inline hgl::RingPtr ring_xy(long long p = hgl::kDefaultCharacteristic) {
  return hgl::Ring::make({"x", "y"}, p);
}

inline hgl::RingPtr ring_xyz(long long p = hgl::kDefaultCharacteristic) {
  return hgl::Ring::make({"x", "y", "z"}, p);
}

// k[U,V,W]/(V^2 - UW), the squares subring of k[X,Y]
inline hgl::RingPtr ring_veronese(long long p = hgl::kDefaultCharacteristic) {
  auto base = hgl::Ring::make({"U", "V", "W"}, p);
  return base->with_relations({hgl::Polynomial::parse(base, "V^2 - U*W")});
}

inline hgl::Polynomial pp(const hgl::RingPtr& R, const std::string& s) {
  return hgl::Polynomial::parse(R, s);
}

// deterministic random polynomial generator for property tests
class PolyGen {
 public:
  PolyGen(hgl::RingPtr ring, unsigned seed) : ring_(std::move(ring)), rng_(seed) {}

  hgl::Polynomial next(int max_terms = 4, int max_exp = 3, int max_coef = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> coefd(-max_coef, max_coef);
    std::vector<hgl::Term> terms;
    int k = nterms(rng_);
    for (int t = 0; t < k; ++t) {
      std::vector<int> e(ring_->nvars());
      for (auto& x : e) x = expd(rng_);
      terms.push_back({ring_->monomial(std::move(e)),
                       ring_->scalar_of_int(coefd(rng_))});
    }
    return hgl::Polynomial::from_terms(ring_, std::move(terms));
  }

  long long next_int(long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    return d(rng_);
  }

 private:
  hgl::RingPtr ring_;
  std::mt19937 rng_;
};

}  // namespace hgltest
