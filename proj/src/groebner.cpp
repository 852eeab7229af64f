#include "hgl/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace hgl {

namespace {

// Full remainder of v against (basis, leads): no term of the result is
// divisible by a basis lead in its component.
ModuleElement reduce_full(ModuleElement v, const std::vector<ModuleElement>& basis,
                          const std::vector<LeadTerm>& leads, const ModuleOrder& ord) {
  const RingPtr& ring = v.ring();
  ModuleElement rem(ring, v.rank());
  while (!v.is_zero()) {
    LeadTerm lt = lead_term(v, ord);
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (leads[i].comp != lt.comp) continue;
      if (!leads[i].mono.divides(lt.mono)) continue;
      Term t{lt.mono.div(leads[i].mono), lt.coef / leads[i].coef};
      v.sub_mul(t, basis[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial mono = Polynomial::term(ring, lt.mono, lt.coef);
      rem.comp(lt.comp) = rem.comp(lt.comp) + mono;
      v.comp(lt.comp) = v.comp(lt.comp) - mono;
    }
  }
  return rem;
}

using PairKey = std::tuple<long long, std::vector<int>, int, int, int>;

struct Engine {
  RingPtr ring;
  int rank;
  ModuleOrder ord;
  bool graph_run;  // tagged syzygy run: no product criterion, tags get no pairs

  std::vector<ModuleElement> basis;
  std::vector<LeadTerm> leads;
  std::set<PairKey> queue;
  std::set<std::pair<int, int>> treated;

  bool pairs_allowed(int idx) const {
    return !graph_run || leads[idx].comp < ord.ambient_rank();
  }

  void push_pairs(int idx) {
    if (!pairs_allowed(idx)) return;
    for (int k = 0; k < idx; ++k) {
      if (!pairs_allowed(k)) continue;
      if (leads[k].comp != leads[idx].comp) continue;
      Monomial l = Monomial::lcm(leads[k].mono, leads[idx].mono, ring->weights());
      queue.insert({l.degree(), l.exps(), leads[idx].comp, k, idx});
    }
  }

  void add(ModuleElement h) {
    LeadTerm lt = lead_term(h, ord);
    h = h.scaled(lt.coef.inverse());
    lt.coef = Scalar::one(ring->characteristic());
    basis.push_back(std::move(h));
    leads.push_back(std::move(lt));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  bool chain_skip(int i, int j, const Monomial& l) const {
    for (size_t k = 0; k < basis.size(); ++k) {
      int ki = static_cast<int>(k);
      if (ki == i || ki == j) continue;
      if (leads[k].comp != leads[i].comp) continue;
      if (!leads[k].mono.divides(l)) continue;
      auto p1 = std::minmax(i, ki);
      auto p2 = std::minmax(j, ki);
      if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
        return true;
    }
    return false;
  }

  void run() {
    const Scalar one = Scalar::one(ring->characteristic());
    while (!queue.empty()) {
      auto it = queue.begin();
      auto [deg, exps, comp, i, j] = *it;
      queue.erase(it);
      Monomial l = ring->monomial(exps);
      if (chain_skip(i, j, l)) {
        treated.insert({i, j});
        continue;
      }
      // coprime-lead criterion: valid for polynomials only, so never in
      // tagged runs where the tail carries the syzygy being collected
      if (!graph_run && rank == 1 && leads[i].mono.coprime_with(leads[j].mono)) {
        treated.insert({i, j});
        continue;
      }
      Term ti{l.div(leads[i].mono), one};
      Term tj{l.div(leads[j].mono), one};
      ModuleElement s = basis[i].term_mul(ti) - basis[j].term_mul(tj);
      s = reduce_full(std::move(s), basis, leads, ord);
      if (!s.is_zero()) add(std::move(s));
      treated.insert({i, j});
    }
  }
};

void append_relation_columns(std::vector<ModuleElement>& elems, const RingPtr& ring,
                             int total_rank, int ambient_rank) {
  for (const auto& f : ring->relations()) {
    Polynomial g = f.transport(ring);
    for (int c = 0; c < ambient_rank; ++c)
      elems.push_back(ModuleElement::single(ring, total_rank, c, g));
  }
}

std::vector<ModuleElement> run_engine(std::vector<ModuleElement> gens,
                                      const RingPtr& ring, int rank,
                                      const ModuleOrder& ord, bool graph_run) {
  Engine e{ring, rank, ord, graph_run, {}, {}, {}, {}};
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    ModuleElement h = reduce_full(std::move(g), e.basis, e.leads, ord);
    if (!h.is_zero()) e.add(std::move(h));
  }
  e.run();
  return std::move(e.basis);
}

// drop elements whose lead is divisible by another kept element's lead,
// then tail-reduce and sort: the canonical reduced basis
std::vector<ModuleElement> interreduce(std::vector<ModuleElement> basis,
                                       const RingPtr& ring, const ModuleOrder& ord) {
  std::vector<LeadTerm> leads;
  leads.reserve(basis.size());
  for (const auto& b : basis) leads.push_back(lead_term(b, ord));

  std::vector<bool> keep(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (leads[j].comp != leads[i].comp) continue;
      if (!leads[j].mono.divides(leads[i].mono)) continue;
      if (leads[j].mono == leads[i].mono && j > i) continue;  // drop the later one
      keep[i] = false;
      break;
    }
  }

  std::vector<ModuleElement> kept;
  std::vector<LeadTerm> kept_leads;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) {
      kept.push_back(basis[i]);
      kept_leads.push_back(leads[i]);
    }

  std::vector<ModuleElement> out;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<ModuleElement> others;
    std::vector<LeadTerm> other_leads;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) {
        others.push_back(kept[j]);
        other_leads.push_back(kept_leads[j]);
      }
    out.push_back(reduce_full(kept[i], others, other_leads, ord));
  }

  const Ring& R = *ring;
  std::sort(out.begin(), out.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    LeadTerm la = lead_term(a, ord), lb = lead_term(b, ord);
    return ord.compare(R, la.mono, la.comp, lb.mono, lb.comp) > 0;
  });
  return out;
}

}  // namespace

bool GroebnerBasis::contains_unit_in(int comp) const {
  for (const auto& g : gens) {
    LeadTerm lt = lead_term(g, order);
    if (lt.comp == comp && lt.mono.is_one()) return true;
  }
  return false;
}

GroebnerBasis buchberger(std::vector<ModuleElement> gens, const RingPtr& ring,
                         int rank, ModuleOrder order) {
  for (const auto& g : gens)
    if (!g.is_zero() && g.rank() != rank)
      throw std::invalid_argument("generator rank mismatch");
  append_relation_columns(gens, ring, rank, rank);
  auto basis = run_engine(std::move(gens), ring, rank, order, false);
  basis = interreduce(std::move(basis), ring, order);
  return GroebnerBasis{ring, rank, order, std::move(basis), true};
}

GroebnerBasis buchberger_ideal(const std::vector<Polynomial>& gens,
                               const RingPtr& ring) {
  std::vector<ModuleElement> elems;
  elems.reserve(gens.size());
  for (const auto& g : gens) elems.push_back(ModuleElement::from_poly(g.transport(ring)));
  return buchberger(std::move(elems), ring, 1);
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb) {
  if (v.rank() != gb.rank) throw std::invalid_argument("rank mismatch in normal form");
  std::vector<LeadTerm> leads;
  leads.reserve(gb.gens.size());
  for (const auto& g : gb.gens) leads.push_back(lead_term(g, gb.order));
  return reduce_full(v, gb.gens, leads, gb.order);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(ModuleElement::from_poly(p.transport(gb.ring)), gb).comp(0);
}

std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens,
                                    const RingPtr& ring, int rank) {
  const int m = static_cast<int>(gens.size());
  ModuleOrder ambient = ModuleOrder::top();
  std::vector<LeadTerm> images;
  images.reserve(m);
  for (const auto& g : gens) {
    if (g.is_zero()) {
      images.push_back({0, Monomial::one(ring->nvars()),
                        Scalar::one(ring->characteristic())});
    } else {
      if (g.rank() != rank) throw std::invalid_argument("generator rank mismatch");
      images.push_back(lead_term(g, ambient));
    }
  }
  ModuleOrder ord = ModuleOrder::graph(ModuleOrder::Kind::TermOverPosition, rank,
                                       std::move(images));

  std::vector<ModuleElement> graph;
  graph.reserve(m + 4);
  for (int i = 0; i < m; ++i) {
    ModuleElement v(ring, rank + m);
    for (int c = 0; c < rank && !gens[i].is_zero(); ++c) v.comp(c) = gens[i].comp(c);
    v.comp(rank + i) = Polynomial::of_int(ring, 1);
    graph.push_back(std::move(v));
  }
  append_relation_columns(graph, ring, rank + m, rank);

  auto basis = run_engine(std::move(graph), ring, rank + m, ord, true);

  std::vector<ModuleElement> out;
  for (const auto& b : basis) {
    bool ambient_zero = true;
    for (int c = 0; c < rank; ++c)
      if (!b.comp(c).is_zero()) {
        ambient_zero = false;
        break;
      }
    if (!ambient_zero) continue;
    ModuleElement s(ring, m);
    for (int i = 0; i < m; ++i) s.comp(i) = b.comp(rank + i);
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  ModuleOrder plain = ModuleOrder::top();
  const Ring& R = *ring;
  std::sort(out.begin(), out.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    LeadTerm la = lead_term(a, plain), lb = lead_term(b, plain);
    return plain.compare(R, la.mono, la.comp, lb.mono, lb.comp) > 0;
  });
  return out;
}

bool buchberger_criterion_holds(const GroebnerBasis& gb) {
  std::vector<LeadTerm> leads;
  for (const auto& g : gb.gens) leads.push_back(lead_term(g, gb.order));
  const Scalar one = Scalar::one(gb.ring->characteristic());
  for (size_t i = 0; i < gb.gens.size(); ++i) {
    for (size_t j = i + 1; j < gb.gens.size(); ++j) {
      if (leads[i].comp != leads[j].comp) continue;
      Monomial l = Monomial::lcm(leads[i].mono, leads[j].mono, gb.ring->weights());
      Term ti{l.div(leads[i].mono), one / leads[i].coef};
      Term tj{l.div(leads[j].mono), one / leads[j].coef};
      ModuleElement s = gb.gens[i].term_mul(ti) - gb.gens[j].term_mul(tj);
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace hgl
