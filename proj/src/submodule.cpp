#include "hgl/submodule.hpp"

#include <algorithm>
#include <functional>

namespace hgl {

Submodule Submodule::span(RingPtr ring, int rank, std::vector<ModuleElement> gens) {
  Submodule m;
  m.ring_ = std::move(ring);
  m.rank_ = rank;
  for (auto& g : gens)
    if (!g.is_zero()) m.gens_.push_back(std::move(g));
  return m;
}

Submodule Submodule::cokernel(RingPtr ring, int rank, std::vector<ModuleElement> rels) {
  Submodule m;
  m.ring_ = ring;
  m.rank_ = rank;
  for (int j = 0; j < rank; ++j)
    m.gens_.push_back(ModuleElement::basis_vector(ring, rank, j));
  for (auto& r : rels)
    if (!r.is_zero()) m.rels_.push_back(std::move(r));
  return m;
}

Submodule Submodule::subquotient(RingPtr ring, int rank, std::vector<ModuleElement> gens,
                                 std::vector<ModuleElement> rels) {
  Submodule m;
  m.ring_ = std::move(ring);
  m.rank_ = rank;
  for (auto& g : gens)
    if (!g.is_zero()) m.gens_.push_back(std::move(g));
  for (auto& r : rels)
    if (!r.is_zero()) m.rels_.push_back(std::move(r));
  return m;
}

Submodule Submodule::free_module(RingPtr ring, int rank) {
  return cokernel(std::move(ring), rank, {});
}

Submodule Submodule::quotient_by_ideal(const Ideal& J) {
  std::vector<ModuleElement> rels;
  for (const auto& g : J.gens()) rels.push_back(ModuleElement::from_poly(g));
  return cokernel(J.ring(), 1, std::move(rels));
}

Submodule Submodule::ideal_as_module(const Ideal& J) {
  std::vector<ModuleElement> gens;
  for (const auto& g : J.gens()) gens.push_back(ModuleElement::from_poly(g));
  return span(J.ring(), 1, std::move(gens));
}

bool Submodule::is_cokernel_form() const {
  if (static_cast<int>(gens_.size()) != rank_) return false;
  for (int j = 0; j < rank_; ++j)
    if (!(gens_[j] == ModuleElement::basis_vector(ring_, rank_, j))) return false;
  return true;
}

const GroebnerBasis& Submodule::span_groebner() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb)
    cache_->gb = std::make_shared<const GroebnerBasis>(
        buchberger(gens_, ring_, rank_));
  return *cache_->gb;
}

Submodule CokernelPresentation::as_submodule() const {
  return Submodule::cokernel(ring, rank, relations);
}

CokernelPresentation present_subquotient(const Submodule& M) {
  CokernelPresentation P;
  P.ring = M.ring();
  P.rank = static_cast<int>(M.gens().size());

  // generator degrees give the twist of the presenting free module
  P.shifts_valid = true;
  std::vector<long long> ambient_shifts(M.rank(), 0);
  for (const auto& g : M.gens()) {
    auto d = g.homogeneous_degree(ambient_shifts);
    if (!d) {
      P.shifts_valid = false;
      break;
    }
    P.shifts.push_back(*d);
  }
  if (!P.shifts_valid) P.shifts.assign(P.rank, 0);

  if (M.is_cokernel_form()) {
    P.relations = M.rels();
    return P;
  }

  // verify the subquotient invariant before presenting
  if (!M.rels().empty()) {
    const GroebnerBasis& gb = M.span_groebner();
    for (const auto& r : M.rels())
      if (!normal_form(r, gb).is_zero())
        throw std::invalid_argument("subquotient relation outside the span of the generators");
  }

  std::vector<ModuleElement> combined = M.gens();
  for (const auto& r : M.rels()) combined.push_back(r);
  auto Z = syzygies(combined, M.ring(), M.rank());
  const int g = P.rank;
  for (const auto& z : Z) {
    ModuleElement c(M.ring(), g);
    for (int i = 0; i < g; ++i) c.comp(i) = z.comp(i);
    if (!c.is_zero()) P.relations.push_back(std::move(c));
  }
  return P;
}

// ---------------------------------------------------------------------------
// standard monomial counting

namespace {

struct ComponentLeads {
  std::vector<Monomial> monos;
  bool has_unit = false;
};

std::vector<ComponentLeads> leads_by_component(const GroebnerBasis& gb) {
  std::vector<ComponentLeads> out(gb.rank);
  for (const auto& g : gb.gens) {
    LeadTerm lt = lead_term(g, gb.order);
    if (lt.comp < 0) continue;
    if (lt.mono.is_one()) out[lt.comp].has_unit = true;
    out[lt.comp].monos.push_back(lt.mono);
  }
  return out;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& leads) {
  for (const auto& l : leads)
    if (l.divides(m)) return true;
  return false;
}

}  // namespace

std::optional<long long> standard_monomial_count(const GroebnerBasis& gb) {
  const size_t v = gb.ring->nvars();
  auto comps = leads_by_component(gb);
  long long total = 0;
  for (const auto& cl : comps) {
    if (cl.has_unit) continue;
    // finite iff every variable has a pure power among the leads
    std::vector<int> bound(v, -1);
    for (size_t i = 0; i < v; ++i) {
      for (const auto& m : cl.monos) {
        bool pure = m.exp(i) > 0;
        for (size_t k = 0; pure && k < v; ++k)
          if (k != i && m.exp(k) > 0) pure = false;
        if (pure && (bound[i] < 0 || m.exp(i) < bound[i])) bound[i] = m.exp(i);
      }
      if (bound[i] < 0) return std::nullopt;
    }
    std::vector<int> e(v, 0);
    std::function<void(size_t)> walk = [&](size_t i) {
      if (i == v) {
        Monomial m = gb.ring->monomial(e);
        if (!divisible_by_any(m, cl.monos)) ++total;
        return;
      }
      for (e[i] = 0; e[i] < bound[i]; ++e[i]) walk(i + 1);
      e[i] = 0;
    };
    walk(0);
  }
  return total;
}

long long standard_monomial_count_degree(const GroebnerBasis& gb,
                                         const std::vector<long long>& shifts,
                                         long long d) {
  const size_t v = gb.ring->nvars();
  const auto& w = gb.ring->weights();
  auto comps = leads_by_component(gb);
  long long total = 0;
  for (int c = 0; c < gb.rank; ++c) {
    long long target = d - shifts[c];
    if (target < 0) continue;
    std::vector<int> e(v, 0);
    std::function<void(size_t, long long)> walk = [&](size_t i, long long rem) {
      if (i == v) {
        if (rem != 0) return;
        Monomial m = gb.ring->monomial(e);
        if (!divisible_by_any(m, comps[c].monos)) ++total;
        return;
      }
      long long max_e = rem / w[i];
      for (e[i] = 0; e[i] <= max_e; ++e[i]) walk(i + 1, rem - e[i] * w[i]);
      e[i] = 0;
    };
    walk(0, target);
  }
  return total;
}

std::optional<long long> length(const Submodule& M) {
  if (M.gens().empty()) return 0;
  CokernelPresentation P = present_subquotient(M);
  GroebnerBasis gb = buchberger(P.relations, P.ring, P.rank);
  return standard_monomial_count(gb);
}

long long hilbert_function(const Submodule& M, long long d) {
  if (M.gens().empty()) return 0;
  CokernelPresentation P = present_subquotient(M);
  if (!P.shifts_valid)
    throw std::invalid_argument("inhomogeneous generators in hilbert function");
  for (const auto& r : P.relations)
    if (!r.is_homogeneous(P.shifts))
      throw std::invalid_argument("inhomogeneous relations in hilbert function");
  GroebnerBasis gb = buchberger(P.relations, P.ring, P.rank);
  return standard_monomial_count_degree(gb, P.shifts, d);
}

Submodule intersect(const Submodule& A, const Submodule& B) {
  if (A.rank() != B.rank() || !same_ring(A.ring(), B.ring()))
    throw std::invalid_argument("intersection needs a common ambient module");
  std::vector<ModuleElement> combined = A.gens();
  for (const auto& b : B.gens()) combined.push_back(b);
  auto Z = syzygies(combined, A.ring(), A.rank());
  const int ga = static_cast<int>(A.gens().size());
  std::vector<ModuleElement> out;
  for (const auto& z : Z) {
    ModuleElement x(A.ring(), A.rank());
    for (int i = 0; i < ga; ++i) {
      if (z.comp(i).is_zero()) continue;
      for (int c = 0; c < A.rank(); ++c)
        x.comp(c) = x.comp(c) + A.gens()[i].comp(c) * z.comp(i);
    }
    if (!x.is_zero()) out.push_back(std::move(x));
  }
  return Submodule::span(A.ring(), A.rank(), std::move(out));
}

Submodule multiply(const Ideal& I, const Submodule& M) {
  std::vector<ModuleElement> out;
  for (const auto& p : I.gens())
    for (const auto& g : M.gens()) out.push_back(g.poly_mul(p));
  return Submodule::span(M.ring(), M.rank(), std::move(out));
}

Ideal annihilator(const Submodule& M) {
  const RingPtr& R = M.ring();
  if (M.gens().empty()) return Ideal::unit(R);
  bool first = true;
  Ideal acc;
  for (const auto& g : M.gens()) {
    // { r : r g in span(rels) } via syzygies of [g | rels]
    std::vector<ModuleElement> cols;
    cols.push_back(g);
    for (const auto& r : M.rels()) cols.push_back(r);
    auto Z = syzygies(cols, R, M.rank());
    std::vector<Polynomial> coefs;
    for (const auto& z : Z)
      if (!z.comp(0).is_zero()) coefs.push_back(z.comp(0));
    Ideal c(R, std::move(coefs));
    if (first) {
      acc = std::move(c);
      first = false;
    } else {
      acc = intersect(acc, c);
    }
  }
  return acc;
}

bool span_contains(const Submodule& A, const ModuleElement& v) {
  return normal_form(v, A.span_groebner()).is_zero();
}

bool span_equal(const Submodule& A, const Submodule& B) {
  for (const auto& g : B.gens())
    if (!span_contains(A, g)) return false;
  for (const auto& g : A.gens())
    if (!span_contains(B, g)) return false;
  return true;
}

ArtinReesResult artin_rees_index(const Submodule& M, const Submodule& N,
                                 const Ideal& I, int window_max) {
  if (M.rank() != N.rank() || !same_ring(M.ring(), N.ring()))
    throw std::invalid_argument("artin-rees needs a common ambient module");
  ArtinReesResult res;
  res.window_max = window_max;

  std::vector<Ideal> powers(window_max + 1);
  powers[0] = Ideal::unit(I.ring());
  for (int n = 1; n <= window_max; ++n) powers[n] = ideal_power(I, n);

  std::vector<Submodule> lhs(window_max + 1);  // I^n M ∩ N
  for (int n = 0; n <= window_max; ++n)
    lhs[n] = intersect(multiply(powers[n], M), N);

  for (int k = 0; k <= window_max; ++k) {
    const Submodule& C = lhs[k];
    bool ok = true;
    std::vector<long long> checked;
    for (int n = k; n <= window_max; ++n) {
      Submodule rhs = multiply(powers[n - k], C);
      if (!span_equal(lhs[n], rhs)) {
        ok = false;
        break;
      }
      checked.push_back(n);
    }
    if (ok) {
      res.certified = true;
      res.index = k;
      res.checked_n = std::move(checked);
      return res;
    }
  }
  return res;
}

}  // namespace hgl
