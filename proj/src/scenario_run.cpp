#include <chrono>
#include <cstdlib>

#include "hgl/scenario.hpp"

namespace hgl {

namespace {

Submodule expr_module(const ExprAst& e, const ScenarioSpec& spec,
                      const ResolvedScenario& res) {
  if (e.kind == ExprAst::Kind::QuotPower)
    throw std::logic_error("power expression where a fixed module was expected");
  if (e.name == spec.ring_name) return Submodule::free_module(res.ring, 1);
  return res.modules.at(e.name);
}

Submodule powered_base(const ExprAst& e, const ScenarioSpec& spec,
                       const ResolvedScenario& res) {
  if (e.name.empty() || e.name == spec.ring_name)
    return Submodule::free_module(res.ring, 1);
  return res.modules.at(e.name);
}

}  // namespace

LengthSequence run_oracle_veronese(long long n0, long long n1) {
  if (n0 < 2) throw std::invalid_argument("the monomial oracle needs n >= 2");
  LengthSequence seq;
  seq.n0 = n0;
  seq.provenance = "veronese-oracle";
  for (long long n = n0; n <= n1; ++n) {
    long long count = 0;
    for (long long a = n; a < 2 * n; ++a)
      for (long long b = 0; b < n; ++b) {
        if ((a + b) % 2 != 0) continue;
        bool excluded = false;  // excluded iff some 0 <= j <= n has a >= 2n-j, b >= j
        long long jmin = 2 * n - a;
        if (jmin <= std::min(n, b)) excluded = true;
        if (!excluded) ++count;
      }
    seq.values.push_back(count);
  }
  return seq;
}

RunReport run_scenario(const ScenarioSpec& spec, const RunOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  ResolvedScenario res = resolve_scenario(spec);

  if (!spec.functor) throw std::runtime_error("scenario has no functor line");
  if (!spec.has_range) throw std::runtime_error("scenario has no range line");

  RunReport report;
  report.spec = spec;
  const FunctorDecl& f = *spec.functor;

  Ideal powered_ideal;  // the ideal whose powers drive the sequence
  Submodule powered_N;

  if (f.kind == "h0m") {
    powered_ideal = res.ideals.at(f.first->ideal);
    powered_N = Submodule::free_module(res.ring, 1);
    Ideal m = Ideal::irrelevant(res.ring);
    Ideal I = powered_ideal;
    auto eval = [I, m](long long n) -> std::optional<long long> {
      return local_cohomology_h0(ideal_power(I, n), m).len;
    };
    report.seq = map_lengths(spec.n0, spec.n1, eval, opts.parallel, "h0m");
  } else {
    LengthFunctorSpec ls;
    ls.kind = (f.kind == "tor") ? FunctorKind::Tor : FunctorKind::Ext;
    ls.i = f.i;
    const ExprAst& powered = f.kind == "ext-swapped" ? *f.second : *f.first;
    const ExprAst& fixed = f.kind == "ext-swapped" ? *f.first : *f.second;
    ls.powered_first = f.kind != "ext-swapped";
    ls.N = powered_base(powered, spec, res);
    ls.I = res.ideals.at(powered.ideal);
    ls.other = expr_module(fixed, spec, res);
    if (spec.compose) {
      ls.compose_kind =
          spec.compose->kind == "tor" ? FunctorKind::Tor : FunctorKind::Ext;
      ls.compose_j = spec.compose->j;
      ExprAst with;
      with.kind = ExprAst::Kind::Name;
      with.name = spec.compose->with;
      ls.compose_L = expr_module(with, spec, res);
    }
    powered_ideal = ls.I;
    powered_N = ls.N;
    report.seq = length_sequence(ls, spec.n0, spec.n1, opts.parallel);
  }

  // the finite-length hypothesis must hold before any fitting
  for (size_t k = 0; k < report.seq.values.size(); ++k) {
    if (!report.seq.values[k])
      throw std::runtime_error(
          "length at n=" + std::to_string(spec.n0 + static_cast<long long>(k)) +
          " is infinite: the finite-length hypothesis fails for this scenario");
  }

  int max_degree = krull_dim(Ideal::zero(res.ring));
  if (max_degree < 1) max_degree = 1;
  int max_period = opts.max_period_override.value_or(spec.max_period);
  report.fit_attempted = true;
  report.fit = fit_quasipolynomial(report.seq, max_period, max_degree);

  if ((spec.audit_dim || spec.audit_spread) && report.fit) {
    // dim term of the degree bound
    if (f.kind == "tor") {
      Homology h0 = tor_module(f.i, powered_N, expr_module(*f.second, spec, res));
      report.dim_value = krull_dim(annihilator(h0.pres));
    } else if (f.kind == "ext-swapped") {
      Homology h0 = ext_module(f.i, expr_module(*f.first, spec, res), powered_N);
      report.dim_value = krull_dim(annihilator(h0.pres));
    } else if (f.kind == "ext") {
      report.dim_value = krull_dim(annihilator(expr_module(*f.second, spec, res)));
    } else {  // h0m: the dual route shares the bound of the ext scenario
      report.dim_value = krull_dim(Ideal::zero(res.ring));
    }
    // analytic spread on the powered module
    bool n_is_ring = powered_N.is_cokernel_form() && powered_N.rank() == 1 &&
                     powered_N.rels().empty();
    report.spread_value = n_is_ring ? analytic_spread(powered_ideal)
                                    : analytic_spread_on(powered_ideal, powered_N);
    report.audit = audit_degree_bound(*report.fit, report.dim_value, report.spread_value);
  }

  if (spec.oracle) {
    LengthSequence oracle = run_oracle_veronese(spec.n0, spec.n1);
    OracleComparison cmp;
    for (size_t k = 0; k < oracle.values.size(); ++k) {
      long long v = *oracle.values[k];
      cmp.values.push_back(v);
      if (!report.seq.values[k] || *report.seq.values[k] != v) {
        cmp.match = false;
        cmp.mismatch_n.push_back(spec.n0 + static_cast<long long>(k));
      }
    }
    report.oracle = std::move(cmp);
  }

  auto t1 = std::chrono::steady_clock::now();
  report.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
  return report;
}

ArtinReesProbeReport run_artin_rees_probe() {
  ArtinReesProbeReport rep;
  const int window = 8;

  {  // trivial triple: N is the whole module, so k = 0
    RingPtr R = Ring::make({"x", "y"});
    Ideal I(R, {Polynomial::parse(R, "x"), Polynomial::parse(R, "y")});
    Submodule M = Submodule::free_module(R, 1);
    Submodule N = Submodule::span(R, 1, {ModuleElement::from_poly(Polynomial::of_int(R, 1))});
    rep.triples.push_back({"k[x,y]: M=R, N=R, I=(x,y)", artin_rees_index(M, N, I, window)});
  }
  {
    RingPtr R = Ring::make({"x", "y"});
    Ideal I(R, {Polynomial::parse(R, "x"), Polynomial::parse(R, "y")});
    Submodule M = Submodule::free_module(R, 1);
    Submodule N = Submodule::span(R, 1, {ModuleElement::from_poly(Polynomial::parse(R, "x"))});
    rep.triples.push_back({"k[x,y]: M=R, N=(x), I=(x,y)", artin_rees_index(M, N, I, window)});
  }
  {
    RingPtr base = Ring::make({"U", "V", "W"});
    RingPtr R = base->with_relations({Polynomial::parse(base, "V^2 - U*W")});
    Ideal I(R, {Polynomial::parse(R, "U"), Polynomial::parse(R, "V")});
    Submodule M = Submodule::free_module(R, 1);
    Submodule N = Submodule::span(R, 1, {ModuleElement::from_poly(Polynomial::parse(R, "U"))});
    rep.triples.push_back({"veronese: M=R, N=(U), I=(U,V)", artin_rees_index(M, N, I, window)});
  }
  return rep;
}

int env_max_degree(int fallback) {
  const char* s = std::getenv("HGL_MAX_DEGREE");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || v < 1 || v > 64) return fallback;
  return static_cast<int>(v);
}

}  // namespace hgl
