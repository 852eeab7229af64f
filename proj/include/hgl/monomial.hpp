#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hgl {

/// Exponent vector with its weighted degree cached at construction.
class Monomial {
 public:
  Monomial() = default;

  static Monomial one(size_t nvars) {
    Monomial m;
    m.e_.assign(nvars, 0);
    return m;
  }

  static Monomial make(std::vector<int> exps, const std::vector<int>& weights) {
    Monomial m;
    m.e_ = std::move(exps);
    if (m.e_.size() != weights.size())
      throw std::invalid_argument("monomial/weights length mismatch");
    long long d = 0;
    for (size_t i = 0; i < m.e_.size(); ++i) {
      if (m.e_[i] < 0) throw std::invalid_argument("negative exponent");
      d += static_cast<long long>(m.e_[i]) * weights[i];
    }
    m.deg_ = d;
    return m;
  }

  size_t nvars() const { return e_.size(); }
  int exp(size_t i) const { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }
  long long degree() const { return deg_; }

  bool is_one() const {
    for (int e : e_)
      if (e != 0) return false;
    return true;
  }

  bool divides(const Monomial& o) const {
    if (e_.size() != o.e_.size())
      throw std::invalid_argument("monomial length mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  Monomial mul(const Monomial& o) const {
    Monomial m;
    m.e_.resize(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    m.deg_ = deg_ + o.deg_;
    return m;
  }

  /// Exact quotient this / o; caller guarantees divisibility.
  Monomial div(const Monomial& o) const {
    Monomial m;
    m.e_.resize(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) {
      m.e_[i] = e_[i] - o.e_[i];
      if (m.e_[i] < 0) throw std::invalid_argument("monomial not divisible");
    }
    m.deg_ = deg_ - o.deg_;
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b,
                      const std::vector<int>& weights) {
    Monomial m;
    m.e_.resize(a.e_.size());
    long long d = 0;
    for (size_t i = 0; i < a.e_.size(); ++i) {
      m.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      d += static_cast<long long>(m.e_[i]) * weights[i];
    }
    m.deg_ = d;
    return m;
  }

  bool coprime_with(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<int> e_;
  long long deg_ = 0;
};

}  // namespace hgl
