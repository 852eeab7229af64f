#include "hgl/spread.hpp"

namespace hgl {

namespace {

std::vector<std::string> y_names(int s) {
  std::vector<std::string> out;
  for (int i = 1; i <= s; ++i) out.push_back("@y" + std::to_string(i));
  return out;
}

// kernel of S[y,t] -> Rees made t-free: GB under an order eliminating @t,
// keeping the elements without @t
std::vector<Polynomial> eliminate_t(const Ideal& I,
                                    const std::vector<Polynomial>& extra_relations,
                                    const RingPtr& sy) {
  const RingPtr& R = I.ring();
  const int s = static_cast<int>(I.gens().size());

  std::vector<std::string> vars{"@t"};
  std::vector<int> weights{1};
  for (size_t i = 0; i < R->nvars(); ++i) {
    vars.push_back(R->vars()[i]);
    weights.push_back(R->weights()[i]);
  }
  for (const auto& y : y_names(s)) {
    vars.push_back(y);
    weights.push_back(1);
  }
  RingPtr base = Ring::make(vars, R->characteristic(), weights,
                            MonomialOrder::elimination(1));
  std::vector<Polynomial> rels;
  for (const auto& f : R->relations()) rels.push_back(f.transport(base));
  for (const auto& f : extra_relations) rels.push_back(f.transport(base));
  RingPtr E = base->with_relations(std::move(rels), false);

  Polynomial t = Polynomial::variable(E, 0);
  std::vector<Polynomial> gens;
  for (int i = 0; i < s; ++i) {
    Polynomial yi = Polynomial::variable(E, R->nvars() + 1 + i);
    gens.push_back(yi - t * I.gens()[i].transport(E));
  }
  GroebnerBasis gb = buchberger_ideal(gens, E);

  std::vector<Polynomial> out;
  for (const auto& v : gb.gens) {
    const Polynomial& p = v.comp(0);
    bool has_t = false;
    for (const auto& term : p.terms())
      if (term.mono.exp(0) > 0) {
        has_t = true;
        break;
      }
    if (!has_t && !p.is_zero()) out.push_back(p.transport(sy));
  }
  return out;
}

RingPtr make_sy(const Ideal& I, int s) {
  const RingPtr& R = I.ring();
  std::vector<std::string> vars = R->vars();
  std::vector<int> weights = R->weights();
  for (const auto& y : y_names(s)) {
    vars.push_back(y);
    weights.push_back(1);
  }
  return Ring::make(vars, R->characteristic(), weights, MonomialOrder::grevlex());
}

}  // namespace

ReesPresentation rees_presentation(const Ideal& I) {
  if (I.is_zero_ideal()) throw std::invalid_argument("rees presentation of the zero ideal");
  const RingPtr& R = I.ring();
  const int s = static_cast<int>(I.gens().size());
  RingPtr sy_base = make_sy(I, s);
  std::vector<Polynomial> rrels;
  for (const auto& f : R->relations()) rrels.push_back(f.transport(sy_base));
  ReesPresentation P;
  P.yring = sy_base->with_relations(std::move(rrels), false);
  P.ngens = s;
  // ring relations are already carried by yring; report the rest
  for (auto& p : eliminate_t(I, {}, P.yring)) {
    bool is_ring_rel = false;
    for (const auto& f : P.yring->relations())
      if (p == f) is_ring_rel = true;
    if (!is_ring_rel) P.relations.push_back(std::move(p));
  }
  return P;
}

FiberCone fiber_cone(const Ideal& I, const std::vector<Polynomial>& extra_relations) {
  if (I.is_zero_ideal()) throw std::invalid_argument("fiber cone of the zero ideal");
  const RingPtr& R = I.ring();
  const int s = static_cast<int>(I.gens().size());
  const int v = static_cast<int>(R->nvars());

  RingPtr sy = make_sy(I, s);
  std::vector<Polynomial> kernel = eliminate_t(I, extra_relations, sy);

  // reduce mod m: adjoin the variables and eliminate them
  RingPtr sy_elim = sy->with_order(MonomialOrder::elimination(v));
  std::vector<Polynomial> gens;
  for (auto& p : kernel) gens.push_back(p.transport(sy_elim));
  for (int i = 0; i < v; ++i) gens.push_back(Polynomial::variable(sy_elim, i));
  for (const auto& f : R->relations()) gens.push_back(f.transport(sy_elim));
  for (const auto& f : extra_relations) gens.push_back(f.transport(sy_elim));
  GroebnerBasis gb = buchberger_ideal(gens, sy_elim);

  FiberCone fc;
  std::vector<int> yweights(s, 1);
  fc.yonly = Ring::make(y_names(s), R->characteristic(), yweights,
                        MonomialOrder::grevlex());
  for (const auto& g : gb.gens) {
    const Polynomial& p = g.comp(0);
    bool has_x = false;
    for (const auto& term : p.terms())
      for (int i = 0; i < v && !has_x; ++i)
        if (term.mono.exp(i) > 0) has_x = true;
    if (!has_x && !p.is_zero()) fc.defining.push_back(p.transport(fc.yonly));
  }
  return fc;
}

int analytic_spread(const Ideal& I) {
  FiberCone fc = fiber_cone(I, {});
  return krull_dim(Ideal(fc.yonly, fc.defining));
}

int analytic_spread_on(const Ideal& I, const Submodule& N) {
  Ideal ann = annihilator(N);
  FiberCone fc = fiber_cone(I, ann.gens());
  return krull_dim(Ideal(fc.yonly, fc.defining));
}

}  // namespace hgl
