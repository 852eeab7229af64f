#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgl/homology.hpp"
#include "hgl/scalar.hpp"

namespace hgl {

/// Exact polynomial in n with rational coefficients, ascending powers.
using RatPoly = std::vector<Rational>;

Rational eval_rat_poly(const RatPoly& coeffs, long long n);
int rat_poly_degree(const RatPoly& coeffs);  // -1 for the zero polynomial
std::string rat_poly_str(const RatPoly& coeffs, const std::string& var = "n");

struct ClassFit {
  long long residue = 0;     // class n ≡ residue (mod period)
  RatPoly coeffs;            // polynomial in n
  int degree = -1;           // -1 encodes the zero polynomial
  long long stable_from = 0; // first n in the class from which every value matches
};

struct BoundAudit {
  int dim_value = 0;
  int spread_value = 0;
  int bound = 0;              // max(dim, spread - 1)
  bool satisfied = false;     // degree <= bound
  bool equality_applies = false;  // dim >= spread
  bool equality_holds = false;    // degree == dim
  bool equality_case = false;     // the implication (applies => holds)
  bool attains_bound = false;     // degree == bound
};

struct GrowthReport {
  int period = 1;
  std::vector<ClassFit> classes;  // one per residue, ascending
  int degree = -1;                // max over classes
  long long stable_from = 0;      // max over classes
  Rational normalized_leading_coefficient;  // degree! * leading coefficient
  bool nlc_is_integer = true;
  bool is_true_polynomial = true;
  std::optional<BoundAudit> audit;

  bool matches(long long n, long long value) const;
};

/// Finite differences on the longest stabilizing tail; exact rational
/// reconstruction; nullopt = NO_FIT. Throws on INFINITE entries or on
/// sequences shorter than 2*(max_degree+2).
std::optional<GrowthReport> fit_polynomial(const LengthSequence& seq, int max_degree);

/// Smallest period p <= max_period whose residue classes all fit.
std::optional<GrowthReport> fit_quasipolynomial(const LengthSequence& seq,
                                                int max_period, int max_degree);

BoundAudit audit_degree_bound(const GrowthReport& report, int dim_value,
                              int spread_value);

Rational factorial(int n);

}  // namespace hgl
