#include "hgl/order.hpp"

namespace hgl {

namespace {

// grevlex on the variable slice [lo, hi)
int grevlex_slice(const Monomial& a, const Monomial& b, size_t lo, size_t hi,
                  const std::vector<int>& weights) {
  long long da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += static_cast<long long>(a.exp(i)) * weights[i];
    db += static_cast<long long>(b.exp(i)) * weights[i];
  }
  if (da != db) return da > db ? 1 : -1;
  // reverse lexicographic tiebreak: last nonzero difference negative => greater
  for (size_t i = hi; i-- > lo;) {
    int d = a.exp(i) - b.exp(i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int lex_slice(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  for (size_t i = lo; i < hi; ++i) {
    int d = a.exp(i) - b.exp(i);
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

int cmp_slice(MonomialOrder::Kind k, const Monomial& a, const Monomial& b,
              size_t lo, size_t hi, const std::vector<int>& weights) {
  if (k == MonomialOrder::Kind::Lex) return lex_slice(a, b, lo, hi);
  return grevlex_slice(a, b, lo, hi, weights);
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b,
                           const std::vector<int>& weights) const {
  const size_t n = a.nvars();
  if (b.nvars() != n) throw std::invalid_argument("monomial length mismatch");
  switch (kind) {
    case Kind::GrevLex: {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (size_t i = n; i-- > 0;) {
        int d = a.exp(i) - b.exp(i);
        if (d != 0) return d < 0 ? 1 : -1;
      }
      return 0;
    }
    case Kind::Lex:
      return lex_slice(a, b, 0, n);
    case Kind::Block: {
      int c = cmp_slice(first_block, a, b, 0, static_cast<size_t>(split), weights);
      if (c != 0) return c;
      return cmp_slice(rest_block, a, b, static_cast<size_t>(split), n, weights);
    }
  }
  return 0;
}

}  // namespace hgl
