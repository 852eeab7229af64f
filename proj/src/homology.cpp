#include "hgl/homology.hpp"

#include <future>

namespace hgl {

namespace {

// dense differential grid used while pruning
struct Grid {
  int rows = 0, cols = 0;
  std::vector<std::vector<Polynomial>> e;  // e[r][c]

  static Grid from_columns(const std::vector<ModuleElement>& cols, int rows,
                           const RingPtr& ring) {
    Grid g;
    g.rows = rows;
    g.cols = static_cast<int>(cols.size());
    g.e.assign(rows, std::vector<Polynomial>(g.cols, Polynomial::zero(ring)));
    for (int c = 0; c < g.cols; ++c)
      for (int r = 0; r < rows; ++r) g.e[r][c] = cols[c].comp(r);
    return g;
  }

  std::vector<ModuleElement> to_columns(const RingPtr& ring) const {
    std::vector<ModuleElement> out;
    out.reserve(cols);
    for (int c = 0; c < cols; ++c) {
      ModuleElement v(ring, rows);
      for (int r = 0; r < rows; ++r) v.comp(r) = e[r][c];
      out.push_back(std::move(v));
    }
    return out;
  }

  void drop_row(int r) {
    e.erase(e.begin() + r);
    --rows;
  }
  void drop_col(int c) {
    for (auto& row : e) row.erase(row.begin() + c);
    --cols;
  }
};

void nf_grid(Grid& g, const GroebnerBasis& rel_gb) {
  if (rel_gb.gens.empty()) return;
  for (auto& row : g.e)
    for (auto& p : row) p = normal_form(p, rel_gb);
}

// remove split summands: a unit entry lets one generator and one relation
// slot cancel, with the neighbouring differentials adjusted to match
void prune_complex(std::vector<Grid>& d, const GroebnerBasis& rel_gb) {
  bool found = true;
  while (found) {
    found = false;
    for (size_t step = 0; step < d.size() && !found; ++step) {
      Grid& g = d[step];
      for (int r = 0; r < g.rows && !found; ++r) {
        for (int c = 0; c < g.cols && !found; ++c) {
          if (!g.e[r][c].is_unit_constant()) continue;
          found = true;
          Scalar u = g.e[r][c].leading().coef;
          const RingPtr& ring = g.e[r][c].ring();
          // clear row r across other columns; compensate in d_(step+2)
          for (int c2 = 0; c2 < g.cols; ++c2) {
            if (c2 == c || g.e[r][c2].is_zero()) continue;
            Polynomial q = g.e[r][c2].scaled(u.inverse());
            for (int r2 = 0; r2 < g.rows; ++r2)
              g.e[r2][c2] = g.e[r2][c2] - q * g.e[r2][c];
            if (step + 1 < d.size()) {
              Grid& nx = d[step + 1];
              for (int c3 = 0; c3 < nx.cols; ++c3)
                nx.e[c][c3] = nx.e[c][c3] + q * nx.e[c2][c3];
            }
          }
          // clear column c across other rows; compensate in d_step
          for (int r2 = 0; r2 < g.rows; ++r2) {
            if (r2 == r || g.e[r2][c].is_zero()) continue;
            Polynomial q = g.e[r2][c].scaled(u.inverse());
            for (int c2 = 0; c2 < g.cols; ++c2)
              g.e[r2][c2] = g.e[r2][c2] - q * g.e[r][c2];
            if (step > 0) {
              Grid& pv = d[step - 1];
              for (int r3 = 0; r3 < pv.rows; ++r3)
                pv.e[r3][r] = pv.e[r3][r] + q * pv.e[r3][r2];
            }
          }
          nf_grid(g, rel_gb);
          if (step + 1 < d.size()) nf_grid(d[step + 1], rel_gb);
          if (step > 0) nf_grid(d[step - 1], rel_gb);
          // the cancelling pair splits off
          g.drop_row(r);
          g.drop_col(c);
          if (step + 1 < d.size()) d[step + 1].drop_row(c);
          if (step > 0) d[step - 1].drop_col(r);
        }
      }
    }
  }
}

GroebnerBasis relations_gb(const RingPtr& ring) {
  return buchberger_ideal({}, ring);  // basis of the relation ideal
}

}  // namespace

bool resolution_is_complex(const FreeResolution& F) {
  GroebnerBasis rel = relations_gb(F.ring);
  for (int k = 0; k + 1 < F.length(); ++k) {
    // composite d_(k+1) o d_(k+2), one column of d_(k+2) at a time
    for (const auto& col : F.diff[k + 1]) {
      ModuleElement image(F.ring, F.ranks[k]);
      for (int s = 0; s < F.ranks[k + 1]; ++s) {
        if (col.comp(s).is_zero()) continue;
        for (int r = 0; r < F.ranks[k]; ++r)
          image.comp(r) = image.comp(r) + F.entry(k, r, s) * col.comp(s);
      }
      for (int r = 0; r < F.ranks[k]; ++r)
        if (!normal_form(image.comp(r), rel).is_zero()) return false;
    }
  }
  return true;
}

FreeResolution free_resolution(const Submodule& M, int len) {
  if (len < 0) throw std::invalid_argument("resolution length must be nonnegative");
  FreeResolution F;
  F.ring = M.ring();

  CokernelPresentation P = present_subquotient(M);
  F.ranks.push_back(P.rank);
  std::vector<ModuleElement> cols = P.relations;

  for (int step = 0; step < len && !cols.empty(); ++step) {
    F.diff.push_back(cols);
    F.ranks.push_back(static_cast<int>(cols.size()));
    if (step + 1 < len)
      cols = syzygies(F.diff.back(), F.ring, F.ranks[F.ranks.size() - 2]);
  }

  // prune constant entries across the whole partial complex
  GroebnerBasis rel = relations_gb(F.ring);
  std::vector<Grid> grids;
  for (int k = 0; k < F.length(); ++k)
    grids.push_back(Grid::from_columns(F.diff[k], F.ranks[k], F.ring));
  for (auto& g : grids) nf_grid(g, rel);
  prune_complex(grids, rel);
  F.diff.clear();
  F.ranks.assign(1, grids.empty() ? F.ranks[0] : grids[0].rows);
  for (const auto& g : grids) {
    F.diff.push_back(g.to_columns(F.ring));
    F.ranks.push_back(g.cols);
  }

  if (!resolution_is_complex(F))
    throw std::logic_error("internal error: resolution differentials do not compose to zero");
  return F;
}

// ---------------------------------------------------------------------------
// Hom(F_s, B) and F_s ⊗ B blocks: ambient rank b * slots, slot-major

namespace {

struct Block {
  int slots = 0;
  int b = 0;  // ambient rank of B
  std::vector<ModuleElement> gens;
  std::vector<ModuleElement> rels;
};

ModuleElement place_in_slot(const ModuleElement& v, int slot, int slots, int b,
                            const RingPtr& ring) {
  ModuleElement out(ring, slots * b);
  for (int beta = 0; beta < b; ++beta) out.comp(slot * b + beta) = v.comp(beta);
  return out;
}

Block make_block(const Submodule& B, int slots, const RingPtr& ring) {
  Block blk;
  blk.slots = slots;
  blk.b = B.rank();
  for (int s = 0; s < slots; ++s) {
    for (const auto& g : B.gens()) blk.gens.push_back(place_in_slot(g, s, slots, blk.b, ring));
    for (const auto& r : B.rels()) blk.rels.push_back(place_in_slot(r, s, slots, blk.b, ring));
  }
  return blk;
}

using EntryFn = std::function<Polynomial(int to, int from)>;

ModuleElement apply_block_map(const ModuleElement& x, int b, int slots_to,
                              int slots_from, const EntryFn& entry,
                              const RingPtr& ring) {
  ModuleElement out(ring, slots_to * b);
  for (int s = 0; s < slots_from; ++s) {
    bool nonzero = false;
    for (int beta = 0; beta < b && !nonzero; ++beta)
      nonzero = !x.comp(s * b + beta).is_zero();
    if (!nonzero) continue;
    for (int t = 0; t < slots_to; ++t) {
      Polynomial c = entry(t, s);
      if (c.is_zero()) continue;
      for (int beta = 0; beta < b; ++beta) {
        if (x.comp(s * b + beta).is_zero()) continue;
        out.comp(t * b + beta) = out.comp(t * b + beta) + c * x.comp(s * b + beta);
      }
    }
  }
  return out;
}

// generators of { x in span(Mgens) : phi(x) in span(target_rels) }
std::vector<ModuleElement> kernel_generators(const std::vector<ModuleElement>& Mgens,
                                             const std::vector<ModuleElement>& target_rels,
                                             const std::function<ModuleElement(const ModuleElement&)>& phi,
                                             const RingPtr& ring, int target_rank) {
  std::vector<ModuleElement> cols;
  cols.reserve(Mgens.size() + target_rels.size());
  for (const auto& g : Mgens) cols.push_back(phi(g));
  for (const auto& r : target_rels) cols.push_back(r);
  auto Z = syzygies(cols, ring, target_rank);
  const int m = static_cast<int>(Mgens.size());
  std::vector<ModuleElement> out;
  for (const auto& z : Z) {
    ModuleElement x;
    bool started = false;
    for (int i = 0; i < m; ++i) {
      if (z.comp(i).is_zero()) continue;
      ModuleElement part = Mgens[i].poly_mul(z.comp(i));
      x = started ? x + part : part;
      started = true;
    }
    if (started && !x.is_zero()) out.push_back(std::move(x));
  }
  return out;
}

Homology finish(Submodule pres, int index) {
  Homology h;
  h.len = length(pres);
  h.pres = std::move(pres);
  h.index = index;
  return h;
}

Homology zero_homology(const RingPtr& ring, int index) {
  Homology h;
  h.pres = Submodule::span(ring, 1, {});
  h.index = index;
  h.len = 0;
  return h;
}

}  // namespace

Homology ext_module(int i, const FreeResolution& RA, const Submodule& B) {
  if (i < 0) throw std::invalid_argument("negative cohomological index");
  const RingPtr& ring = RA.ring;
  if (i > RA.length()) return zero_homology(ring, i);

  const int ri = RA.ranks[i];
  Block M = make_block(B, ri, ring);
  const int b = B.rank();

  std::vector<ModuleElement> kernel;
  if (i < RA.length()) {
    // phi = d_(i+1)^T ⊗ 1 : slots r_i -> slots r_(i+1)
    const int rn = RA.ranks[i + 1];
    Block N = make_block(B, rn, ring);
    auto phi = [&](const ModuleElement& x) {
      return apply_block_map(
          x, b, rn, ri, [&](int to, int from) { return RA.entry(i, from, to); }, ring);
    };
    kernel = kernel_generators(M.gens, N.rels, phi, ring, rn * b);
  } else {
    kernel = M.gens;  // the dualized complex ends here; everything is a cocycle
  }
  for (const auto& r : M.rels) kernel.push_back(r);

  std::vector<ModuleElement> image = M.rels;
  if (i >= 1) {
    const int rp = RA.ranks[i - 1];
    Block P = make_block(B, rp, ring);
    for (const auto& g : P.gens)
      image.push_back(apply_block_map(
          g, b, ri, rp, [&](int to, int from) { return RA.entry(i - 1, from, to); },
          ring));
  }
  return finish(Submodule::subquotient(ring, ri * b, std::move(kernel), std::move(image)), i);
}

Homology ext_module(int i, const Submodule& A, const Submodule& B) {
  FreeResolution RA = free_resolution(A, i + 1);
  return ext_module(i, RA, B);
}

Homology tor_module(int i, const FreeResolution& RA, const Submodule& B) {
  if (i < 0) throw std::invalid_argument("negative homological index");
  const RingPtr& ring = RA.ring;
  if (i > RA.length()) return zero_homology(ring, i);

  const int ri = RA.ranks[i];
  Block M = make_block(B, ri, ring);
  const int b = B.rank();

  std::vector<ModuleElement> kernel;
  if (i == 0) {
    kernel = M.gens;
  } else {
    // psi_i = d_i ⊗ 1 : slots r_i -> slots r_(i-1)
    const int rp = RA.ranks[i - 1];
    Block N = make_block(B, rp, ring);
    auto psi = [&](const ModuleElement& x) {
      return apply_block_map(
          x, b, rp, ri, [&](int to, int from) { return RA.entry(i - 1, to, from); },
          ring);
    };
    kernel = kernel_generators(M.gens, N.rels, psi, ring, rp * b);
  }
  for (const auto& r : M.rels) kernel.push_back(r);

  std::vector<ModuleElement> image = M.rels;
  if (i < RA.length()) {
    const int rn = RA.ranks[i + 1];
    Block Q = make_block(B, rn, ring);
    for (const auto& g : Q.gens)
      image.push_back(apply_block_map(
          g, b, ri, rn, [&](int to, int from) { return RA.entry(i, to, from); }, ring));
  }
  return finish(Submodule::subquotient(ring, ri * b, std::move(kernel), std::move(image)), i);
}

Homology tor_module(int i, const Submodule& A, const Submodule& B) {
  FreeResolution RA = free_resolution(A, i + 1);
  return tor_module(i, RA, B);
}

Homology local_cohomology_h0(const Ideal& J, const Ideal& m) {
  auto [sat, idx] = saturate(J, m);
  (void)idx;
  std::vector<ModuleElement> gens;
  for (const auto& g : sat.gens()) gens.push_back(ModuleElement::from_poly(g));
  std::vector<ModuleElement> rels;
  for (const auto& g : J.gens()) rels.push_back(ModuleElement::from_poly(g));
  return finish(Submodule::subquotient(J.ring(), 1, std::move(gens), std::move(rels)), 0);
}

Ideal symbolic_power(const Ideal& P, long long n) {
  return saturate(ideal_power(P, n), Ideal::irrelevant(P.ring())).first;
}

Homology composed_functor(int j, FunctorKind kind, const Submodule& L,
                          const Homology& inner) {
  FreeResolution RL = free_resolution(L, j + 1);
  return composed_functor(j, kind, RL, inner);
}

Homology composed_functor(int j, FunctorKind kind, const FreeResolution& RL,
                          const Homology& inner) {
  Homology h = kind == FunctorKind::Tor ? tor_module(j, RL, inner.pres)
                                        : ext_module(j, RL, inner.pres);
  h.index = j;
  return h;
}

Submodule power_quotient(const Submodule& N, const Ideal& I, long long n) {
  if (!N.is_cokernel_form())
    throw std::invalid_argument("power quotient needs a cokernel presentation");
  Ideal In = ideal_power(I, n);
  std::vector<ModuleElement> rels = N.rels();
  for (const auto& p : In.gens())
    for (int j = 0; j < N.rank(); ++j)
      rels.push_back(ModuleElement::single(N.ring(), N.rank(), j, p));
  return Submodule::cokernel(N.ring(), N.rank(), std::move(rels));
}

LengthSequence map_lengths(long long n0, long long n1,
                           const std::function<std::optional<long long>(long long)>& eval,
                           bool parallel, std::string provenance) {
  if (n1 < n0) throw std::invalid_argument("empty range");
  LengthSequence seq;
  seq.n0 = n0;
  seq.provenance = std::move(provenance);
  const long long count = n1 - n0 + 1;
  seq.values.resize(count);
  if (parallel && count > 1) {
    std::vector<std::future<std::optional<long long>>> futs;
    futs.reserve(count);
    for (long long k = 0; k < count; ++k)
      futs.push_back(std::async(std::launch::async, eval, n0 + k));
    for (long long k = 0; k < count; ++k) seq.values[k] = futs[k].get();
  } else {
    for (long long k = 0; k < count; ++k) seq.values[k] = eval(n0 + k);
  }
  return seq;
}

LengthSequence length_sequence(const LengthFunctorSpec& spec, long long n0,
                               long long n1, bool parallel) {
  if (n0 < 1) throw std::invalid_argument("power range must start at n >= 1");

  std::shared_ptr<FreeResolution> fixed_res;
  if (!spec.powered_first) {
    // the fixed argument is resolved once, the powered one varies
    fixed_res = std::make_shared<FreeResolution>(
        free_resolution(spec.other, spec.i + 1));
  }
  std::shared_ptr<FreeResolution> compose_res;
  if (spec.compose_kind)
    compose_res = std::make_shared<FreeResolution>(
        free_resolution(spec.compose_L, spec.compose_j + 1));

  auto eval = [&spec, fixed_res, compose_res](long long n) -> std::optional<long long> {
    Submodule powered = power_quotient(spec.N, spec.I, n);
    Homology h;
    if (spec.powered_first) {
      h = spec.kind == FunctorKind::Ext ? ext_module(spec.i, powered, spec.other)
                                        : tor_module(spec.i, powered, spec.other);
    } else {
      h = spec.kind == FunctorKind::Ext ? ext_module(spec.i, *fixed_res, powered)
                                        : tor_module(spec.i, *fixed_res, powered);
    }
    if (compose_res)
      h = composed_functor(spec.compose_j, *spec.compose_kind, *compose_res, h);
    return h.len;
  };
  std::string prov = (spec.kind == FunctorKind::Ext ? "ext_" : "tor_") +
                     std::to_string(spec.i);
  return map_lengths(n0, n1, eval, parallel, std::move(prov));
}

}  // namespace hgl
