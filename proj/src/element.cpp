#include "hgl/element.hpp"

namespace hgl {

ModuleElement::ModuleElement(RingPtr ring, int rank) : ring_(std::move(ring)) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  comp_.assign(rank, Polynomial::zero(ring_));
}

ModuleElement ModuleElement::basis_vector(const RingPtr& ring, int rank, int j) {
  ModuleElement v(ring, rank);
  v.comp_[j] = Polynomial::of_int(ring, 1);
  return v;
}

ModuleElement ModuleElement::single(const RingPtr& ring, int rank, int j,
                                    Polynomial p) {
  ModuleElement v(ring, rank);
  v.comp_[j] = std::move(p);
  return v;
}

ModuleElement ModuleElement::from_poly(Polynomial p) {
  ModuleElement v(p.ring(), 1);
  v.comp_[0] = std::move(p);
  return v;
}

bool ModuleElement::is_zero() const {
  for (const auto& p : comp_)
    if (!p.is_zero()) return false;
  return true;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("module rank mismatch");
  ModuleElement r = *this;
  for (int j = 0; j < rank(); ++j) r.comp_[j] = r.comp_[j] + o.comp_[j];
  return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("module rank mismatch");
  ModuleElement r = *this;
  for (int j = 0; j < rank(); ++j) r.comp_[j] = r.comp_[j] - o.comp_[j];
  return r;
}

ModuleElement ModuleElement::negated() const {
  ModuleElement r = *this;
  for (auto& p : r.comp_) p = p.negated();
  return r;
}

ModuleElement ModuleElement::scaled(const Scalar& c) const {
  ModuleElement r = *this;
  for (auto& p : r.comp_) p = p.scaled(c);
  return r;
}

ModuleElement ModuleElement::term_mul(const Term& t) const {
  ModuleElement r = *this;
  for (auto& p : r.comp_) p = p.term_mul(t);
  return r;
}

ModuleElement ModuleElement::poly_mul(const Polynomial& p) const {
  ModuleElement r = *this;
  for (auto& q : r.comp_) q = q * p;
  return r;
}

void ModuleElement::sub_mul(const Term& t, const ModuleElement& o) {
  for (int j = 0; j < rank(); ++j)
    if (!o.comp_[j].is_zero()) comp_[j].sub_mul(t, o.comp_[j]);
}

bool ModuleElement::is_homogeneous(const std::vector<long long>& shifts) const {
  return homogeneous_degree(shifts).has_value() || is_zero();
}

std::optional<long long> ModuleElement::homogeneous_degree(
    const std::vector<long long>& shifts) const {
  std::optional<long long> deg;
  for (int j = 0; j < rank(); ++j) {
    for (const auto& t : comp_[j].terms()) {
      long long d = t.mono.degree() + shifts[j];
      if (!deg)
        deg = d;
      else if (*deg != d)
        return std::nullopt;
    }
  }
  return deg;
}

std::string ModuleElement::str() const {
  std::string out = "(";
  for (int j = 0; j < rank(); ++j) {
    if (j) out += ", ";
    out += comp_[j].str();
  }
  return out + ")";
}

ModuleOrder ModuleOrder::graph(Kind base, int ambient_rank,
                               std::vector<LeadTerm> tag_images) {
  ModuleOrder o(base);
  o.ambient_rank_ = ambient_rank;
  o.tag_images_ = std::move(tag_images);
  return o;
}

int ModuleOrder::compare(const Ring& ring, const Monomial& m1, int c1,
                         const Monomial& m2, int c2) const {
  if (ambient_rank_ >= 0) {
    const bool tag1 = c1 >= ambient_rank_;
    const bool tag2 = c2 >= ambient_rank_;
    if (tag1 != tag2) return tag1 ? -1 : 1;  // ambient block dominates
    if (tag1) {
      const LeadTerm& im1 = tag_images_[c1 - ambient_rank_];
      const LeadTerm& im2 = tag_images_[c2 - ambient_rank_];
      // Schreyer: compare images m_i * lm(g_i), tie broken by tag index
      Monomial e1 = m1.mul(im1.mono);
      Monomial e2 = m2.mul(im2.mono);
      int c = ring.compare(e1, e2);
      if (c != 0) return c;
      if (im1.comp != im2.comp) return im1.comp < im2.comp ? 1 : -1;
      if (c1 != c2) return c1 < c2 ? 1 : -1;
      return 0;
    }
    // fall through: both ambient, ordinary comparison below
  }
  if (kind_ == Kind::PositionOverTerm) {
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return ring.compare(m1, m2);
  }
  int c = ring.compare(m1, m2);
  if (c != 0) return c;
  if (c1 != c2) return c1 < c2 ? 1 : -1;
  return 0;
}

LeadTerm lead_term(const ModuleElement& v, const ModuleOrder& ord) {
  LeadTerm best;
  const Ring& R = *v.ring();
  for (int j = 0; j < v.rank(); ++j) {
    if (v.comp(j).is_zero()) continue;
    const Term& t = v.comp(j).leading();
    if (best.comp < 0 || ord.compare(R, t.mono, j, best.mono, best.comp) > 0) {
      best.comp = j;
      best.mono = t.mono;
      best.coef = t.coef;
    }
  }
  return best;
}

}  // namespace hgl
