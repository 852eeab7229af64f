#include "hgl/growth.hpp"

#include <algorithm>

namespace hgl {

Rational eval_rat_poly(const RatPoly& coeffs, long long n) {
  Rational acc = 0;
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * n + coeffs[k];
  return acc;
}

int rat_poly_degree(const RatPoly& coeffs) {
  for (size_t k = coeffs.size(); k-- > 0;)
    if (coeffs[k] != 0) return static_cast<int>(k);
  return -1;
}

std::string rat_poly_str(const RatPoly& coeffs, const std::string& var) {
  int deg = rat_poly_degree(coeffs);
  if (deg < 0) return "0";
  std::string out;
  for (int k = deg; k >= 0; --k) {
    Rational c = coeffs[k];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string cs = c.str();
    if (k == 0) {
      out += cs;
    } else {
      if (c != 1) out += cs + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

namespace {

struct Point {
  long long n;
  long long v;
};

// Newton divided differences through the given points, expanded into
// monomial coefficients; exact rational arithmetic throughout.
RatPoly interpolate(const std::vector<Point>& pts) {
  const size_t k = pts.size();
  std::vector<Rational> dd(k);
  for (size_t i = 0; i < k; ++i) dd[i] = pts[i].v;
  for (size_t level = 1; level < k; ++level)
    for (size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(pts[i].n - pts[i - level].n);
      if (i == level) break;
    }
  RatPoly poly{dd[k - 1]};
  for (size_t i = k - 1; i-- > 0;) {
    // poly = poly * (x - x_i) + dd[i]
    RatPoly next(poly.size() + 1, Rational(0));
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * pts[i].n;
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  return poly;
}

// interpolate through the last d+1 points and certify the tail: at least
// d+2 trailing matches, and the stable tail must dominate the transient
// (otherwise a short run of coincidences could shadow a longer period)
struct ClassResult {
  ClassFit fit;
  bool matched_all = false;
};

std::optional<ClassResult> fit_class(const std::vector<Point>& pts, long long residue,
                                     int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    if (pts.size() < static_cast<size_t>(d) + 1) break;
    std::vector<Point> tail(pts.end() - (d + 1), pts.end());
    RatPoly poly = interpolate(tail);
    size_t first_match = pts.size();
    for (size_t i = pts.size(); i-- > 0;) {
      if (eval_rat_poly(poly, pts[i].n) == pts[i].v)
        first_match = i;
      else
        break;
    }
    size_t matched = pts.size() - first_match;
    if (matched >= static_cast<size_t>(d) + 2 && 2 * matched >= pts.size()) {
      ClassResult res;
      res.fit.residue = residue;
      res.fit.coeffs = std::move(poly);
      res.fit.degree = rat_poly_degree(res.fit.coeffs);
      res.fit.stable_from = pts[first_match].n;
      res.matched_all = first_match == 0;
      return res;
    }
  }
  return std::nullopt;
}

GrowthReport assemble(int period, std::vector<ClassResult> results, long long n0) {
  GrowthReport rep;
  rep.period = period;
  rep.is_true_polynomial = period == 1;
  rep.degree = -1;
  rep.stable_from = n0;
  std::vector<ClassFit> classes;
  for (auto& r : results) {
    rep.degree = std::max(rep.degree, r.fit.degree);
    // a fully matching class imposes no constraint on the overall tail
    if (!r.matched_all) rep.stable_from = std::max(rep.stable_from, r.fit.stable_from);
    classes.push_back(std::move(r.fit));
  }
  rep.normalized_leading_coefficient = 0;
  rep.nlc_is_integer = true;
  if (rep.degree >= 0) {
    for (const auto& c : classes)
      if (c.degree == rep.degree) {
        rep.normalized_leading_coefficient =
            factorial(rep.degree) * c.coeffs[rep.degree];
        break;
      }
    rep.nlc_is_integer =
        boost::multiprecision::denominator(rep.normalized_leading_coefficient) == 1;
  }
  rep.classes = std::move(classes);
  return rep;
}

std::vector<Point> finite_points(const LengthSequence& seq) {
  std::vector<Point> pts;
  pts.reserve(seq.values.size());
  for (size_t k = 0; k < seq.values.size(); ++k) {
    if (!seq.values[k])
      throw std::invalid_argument(
          "fitting refuses sequences containing INFINITE entries");
    pts.push_back({seq.n0 + static_cast<long long>(k), *seq.values[k]});
  }
  return pts;
}

}  // namespace

bool GrowthReport::matches(long long n, long long value) const {
  long long r = ((n % period) + period) % period;
  for (const auto& c : classes)
    if (c.residue == r) return eval_rat_poly(c.coeffs, n) == Rational(value);
  return false;
}

std::optional<GrowthReport> fit_polynomial(const LengthSequence& seq, int max_degree) {
  return fit_quasipolynomial(seq, 1, max_degree);
}

std::optional<GrowthReport> fit_quasipolynomial(const LengthSequence& seq,
                                                int max_period, int max_degree) {
  if (max_period < 1) throw std::invalid_argument("max_period must be positive");
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
  std::vector<Point> pts = finite_points(seq);
  if (pts.size() < 2 * (static_cast<size_t>(max_degree) + 2))
    throw std::invalid_argument("sequence too short to certify a fit");

  for (int p = 1; p <= max_period; ++p) {
    std::vector<ClassResult> results;
    bool ok = true;
    for (long long r = 0; r < p && ok; ++r) {
      std::vector<Point> cls;
      for (const auto& pt : pts)
        if (((pt.n % p) + p) % p == r) cls.push_back(pt);
      if (cls.empty()) {
        ok = false;
        break;
      }
      auto fit = fit_class(cls, r, max_degree);
      if (!fit) {
        ok = false;
        break;
      }
      results.push_back(std::move(*fit));
    }
    if (ok) return assemble(p, std::move(results), seq.n0);
  }
  return std::nullopt;
}

BoundAudit audit_degree_bound(const GrowthReport& report, int dim_value,
                              int spread_value) {
  BoundAudit a;
  a.dim_value = dim_value;
  a.spread_value = spread_value;
  a.bound = std::max(dim_value, spread_value - 1);
  a.satisfied = report.degree <= a.bound;
  a.equality_applies = dim_value >= spread_value;
  a.equality_holds = report.degree == dim_value;
  a.equality_case = !a.equality_applies || a.equality_holds;
  a.attains_bound = report.degree == a.bound;
  return a;
}

}  // namespace hgl
