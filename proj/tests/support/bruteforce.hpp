#pragma once

// Degreewise linear-algebra oracles, independent of the Groebner path:
// graded pieces are enumerated directly and ranks computed by Gaussian
// elimination over the coefficient field.

#include <functional>
#include <map>
#include <vector>

#include "hgl/element.hpp"
#include "hgl/ring.hpp"

namespace hgltest {

// all exponent vectors of the given weighted degree
inline std::vector<std::vector<int>> monomials_of_degree(const hgl::Ring& R,
                                                         long long d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(R.nvars(), 0);
  const auto& w = R.weights();
  std::function<void(size_t, long long)> walk = [&](size_t i, long long rem) {
    if (i == R.nvars()) {
      if (rem == 0) out.push_back(e);
      return;
    }
    for (e[i] = 0; e[i] * w[i] <= rem; ++e[i]) walk(i + 1, rem - e[i] * w[i]);
    e[i] = 0;
  };
  walk(0, d);
  return out;
}

// basis of the degree-d piece of a free module with component shifts
struct GradedBasis {
  std::vector<std::pair<std::vector<int>, int>> elems;  // (exponents, component)
  std::map<std::pair<std::vector<int>, int>, int> index;
};

inline GradedBasis graded_basis(const hgl::Ring& R, const std::vector<long long>& shifts,
                                long long d) {
  GradedBasis b;
  for (size_t c = 0; c < shifts.size(); ++c) {
    if (d - shifts[c] < 0) continue;
    for (auto& e : monomials_of_degree(R, d - shifts[c])) {
      b.index[{e, static_cast<int>(c)}] = static_cast<int>(b.elems.size());
      b.elems.push_back({e, static_cast<int>(c)});
    }
  }
  return b;
}

inline int gauss_rank(std::vector<std::vector<hgl::Scalar>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    hgl::Scalar inv = m[rank][c].inverse();
    for (int cc = c; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      hgl::Scalar f = m[r][c];
      for (int cc = c; cc < cols; ++cc)
        m[r][cc] = m[r][cc] - f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// kernel dimension in degree d of the map (free module on the columns,
// Schreyer-shifted) -> (free module of the given rank, with shifts),
// over the free polynomial ring
struct GradedKernelDims {
  long long domain_dim = 0;
  long long rank = 0;
  long long kernel_dim = 0;
};

inline GradedKernelDims graded_kernel_dim(const hgl::RingPtr& R,
                                          const std::vector<hgl::ModuleElement>& cols,
                                          const std::vector<long long>& target_shifts,
                                          long long d) {
  // column degrees
  std::vector<long long> col_shifts;
  for (const auto& c : cols) {
    auto deg = c.homogeneous_degree(target_shifts);
    if (!deg) throw std::invalid_argument("inhomogeneous column in graded oracle");
    col_shifts.push_back(*deg);
  }
  GradedBasis dom = graded_basis(*R, col_shifts, d);
  GradedBasis tgt = graded_basis(*R, target_shifts, d);

  std::vector<std::vector<hgl::Scalar>> m(
      dom.elems.size(),
      std::vector<hgl::Scalar>(tgt.elems.size(),
                               hgl::Scalar::zero(R->characteristic())));
  for (size_t k = 0; k < dom.elems.size(); ++k) {
    const auto& [e, cidx] = dom.elems[k];
    hgl::Monomial mono = R->monomial(e);
    // image = mono * cols[cidx]
    for (int comp = 0; comp < cols[cidx].rank(); ++comp) {
      for (const auto& t : cols[cidx].comp(comp).terms()) {
        auto key = std::make_pair(t.mono.mul(mono).exps(), comp);
        auto it = tgt.index.find(key);
        if (it == tgt.index.end())
          throw std::logic_error("graded oracle: image outside the target piece");
        m[k][it->second] = m[k][it->second] + t.coef;
      }
    }
  }
  GradedKernelDims out;
  out.domain_dim = static_cast<long long>(dom.elems.size());
  out.rank = gauss_rank(std::move(m));
  out.kernel_dim = out.domain_dim - out.rank;
  return out;
}

// dim_k of the degree-d piece of the span of the columns
inline long long graded_span_dim(const hgl::RingPtr& R,
                                 const std::vector<hgl::ModuleElement>& cols,
                                 const std::vector<long long>& target_shifts,
                                 long long d) {
  GradedKernelDims k = graded_kernel_dim(R, cols, target_shifts, d);
  return k.rank;
}

}  // namespace hgltest
