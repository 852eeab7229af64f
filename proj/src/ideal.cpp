#include "hgl/ideal.hpp"

#include <algorithm>

#include "hgl/submodule.hpp"

namespace hgl {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    gens_.push_back(g.transport(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  std::vector<Polynomial> one{Polynomial::of_int(ring, 1)};
  return Ideal(std::move(ring), std::move(one));
}

Ideal Ideal::irrelevant(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (size_t i = 0; i < ring->nvars(); ++i)
    vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

const GroebnerBasis& Ideal::groebner() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb)
    cache_->gb = std::make_shared<const GroebnerBasis>(buchberger_ideal(gens_, ring_));
  return *cache_->gb;
}

bool Ideal::contains(const Polynomial& p) const {
  return normal_form(p, groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  return contains(other) && other.contains(*this);
}

bool Ideal::is_unit() const { return contains(Polynomial::of_int(ring_, 1)); }

Ideal ideal_power(const Ideal& I, long long n) {
  const RingPtr& R = I.ring();
  if (n < 0) throw std::invalid_argument("negative ideal power");
  if (n == 0) return Ideal::unit(R);
  if (n == 1) return I;

  // enumerate degree-n products of the generators (multisets), keeping a
  // product only when it is not already in the ideal of those kept so far
  const auto& gens = I.gens();
  const int s = static_cast<int>(gens.size());
  std::vector<Polynomial> kept;
  std::vector<int> idx(n, 0);
  while (true) {
    Polynomial prod = Polynomial::of_int(R, 1);
    for (long long k = 0; k < n; ++k) prod = prod * gens[idx[k]];
    bool redundant = false;
    if (!kept.empty()) {
      Ideal partial(R, kept);
      redundant = partial.contains(prod);
    }
    if (!redundant) kept.push_back(std::move(prod));
    // next nondecreasing index tuple
    long long pos = n - 1;
    while (pos >= 0 && idx[pos] == s - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (long long k = pos + 1; k < n; ++k) idx[k] = idx[pos];
  }
  return Ideal(R, std::move(kept));
}

Ideal colon(const Ideal& J, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  const RingPtr& R = J.ring();
  std::vector<ModuleElement> cols;
  cols.push_back(ModuleElement::from_poly(g.transport(R)));
  for (const auto& a : J.gens()) cols.push_back(ModuleElement::from_poly(a));
  auto Z = syzygies(cols, R, 1);
  std::vector<Polynomial> out;
  for (const auto& z : Z)
    if (!z.comp(0).is_zero()) out.push_back(z.comp(0));
  return Ideal(R, std::move(out));
}

Ideal colon(const Ideal& J, const Ideal& K) {
  if (K.is_zero_ideal()) throw std::invalid_argument("colon by the zero ideal");
  bool first = true;
  Ideal acc;
  for (const auto& g : K.gens()) {
    Ideal c = colon(J, g);
    if (first) {
      acc = std::move(c);
      first = false;
    } else {
      acc = intersect(acc, c);
    }
  }
  return acc;
}

std::pair<Ideal, int> saturate(const Ideal& J, const Ideal& K) {
  Ideal cur = J;
  for (int step = 0; step < 200; ++step) {
    Ideal next = colon(cur, K);
    if (cur.contains(next)) return {cur, step};
    cur = std::move(next);
  }
  throw std::runtime_error("saturation did not stabilize");
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& R = a.ring();
  if (!same_ring(R, b.ring()))
    throw std::invalid_argument("intersection across different rings");

  std::vector<std::string> vars{"@t"};
  for (const auto& v : R->vars()) vars.push_back(v);
  std::vector<int> weights{1};
  for (int w : R->weights()) weights.push_back(w);
  RingPtr base = Ring::make(vars, R->characteristic(), weights,
                            MonomialOrder::elimination(1));
  std::vector<Polynomial> rels;
  for (const auto& f : R->relations()) rels.push_back(f.transport(base));
  RingPtr E = base->with_relations(std::move(rels), false);

  Polynomial t = Polynomial::variable(E, 0);
  Polynomial one_minus_t = Polynomial::of_int(E, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.gens()) gens.push_back(t * g.transport(E));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * g.transport(E));

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
    if (!has_t && !p.is_zero()) out.push_back(p.transport(R));
  }
  return Ideal(R, std::move(out));
}

int krull_dim(const Ideal& J) {
  const GroebnerBasis& gb = J.groebner();
  if (gb.contains_unit_in(0)) return -1;
  const size_t v = J.ring()->nvars();
  if (v > 24) throw std::runtime_error("too many variables for dimension search");
  std::vector<std::vector<int>> supports;
  for (const auto& g : gb.gens) {
    LeadTerm lt = lead_term(g, gb.order);
    std::vector<int> sup;
    for (size_t i = 0; i < v; ++i)
      if (lt.mono.exp(i) > 0) sup.push_back(static_cast<int>(i));
    supports.push_back(std::move(sup));
  }
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << v); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& sup : supports) {
      bool inside = true;
      for (int i : sup)
        if (!(mask >> i & 1)) {
          inside = false;
          break;
        }
      if (inside) {  // some leading monomial lives inside the subset
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::optional<long long> quotient_length(const Ideal& J) {
  return standard_monomial_count(J.groebner());
}

long long quotient_hilbert(const Ideal& J, long long d) {
  for (const auto& g : J.gens())
    if (!g.is_homogeneous())
      throw std::invalid_argument("inhomogeneous ideal in hilbert function");
  return standard_monomial_count_degree(J.groebner(), {0}, d);
}

}  // namespace hgl
