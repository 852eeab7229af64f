#include "hgl/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "hgl/ring.hpp"

namespace hgl {

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial Polynomial::of_int(RingPtr ring, long long n) {
  Scalar c = ring->scalar_of_int(n);
  return from_scalar(std::move(ring), c);
}

Polynomial Polynomial::from_scalar(RingPtr ring, Scalar c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(ring->nvars()), std::move(c)});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Scalar c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t var) {
  std::vector<int> e(ring->nvars(), 0);
  e.at(var) = 1;
  Monomial m = ring->monomial(std::move(e));
  Scalar one = Scalar::one(ring->characteristic());
  return term(std::move(ring), std::move(m), std::move(one));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Ring& R = *ring;
  std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) {
    return R.compare(a.mono, b.mono) > 0;
  });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (t.coef.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef = p.terms_.back().coef + t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_unit_constant() const {
  return terms_.size() == 1 && terms_[0].mono.is_one();
}

long long Polynomial::degree() const {
  long long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_[0].mono.degree()) return false;
  return true;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_))
    throw std::invalid_argument("mixed-ring polynomial operands");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  const Ring& R = *ring_;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = R.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coef + o.terms_[j].coef;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o.negated();
}

Polynomial Polynomial::negated() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coef.negated()});
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return zero(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coef * c});
  return r;
}

Polynomial Polynomial::term_mul(const Term& t) const {
  if (t.coef.is_zero()) return zero(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // multiplication by a fixed monomial preserves the term order
  for (const auto& s : terms_) r.terms_.push_back({s.mono.mul(t.mono), s.coef * t.coef});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      acc.push_back({a.mono.mul(b.mono), a.coef * b.coef});
  return from_terms(ring_, std::move(acc));
}

void Polynomial::sub_mul(const Term& t, const Polynomial& o) {
  Polynomial prod = o.term_mul(t);
  *this = *this - prod;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef)
      return false;
  return true;
}

Polynomial Polynomial::transport(const RingPtr& target) const {
  if (ring_ && target->same_signature(*ring_)) {
    Polynomial r = *this;
    r.ring_ = target;
    return r;
  }
  if (ring_->characteristic() != target->characteristic())
    throw std::invalid_argument("transport across different coefficient fields");
  std::vector<int> map(ring_->nvars());
  for (size_t i = 0; i < ring_->nvars(); ++i) {
    int j = target->var_index(ring_->vars()[i]);
    map[i] = j;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e(target->nvars(), 0);
    for (size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono.exp(i) == 0) continue;
      if (map[i] < 0)
        throw std::invalid_argument("variable " + ring_->vars()[i] +
                                    " absent from target ring");
      e[map[i]] = t.mono.exp(i);
    }
    out.push_back({target->monomial(std::move(e)), t.coef});
  }
  return from_terms(target, std::move(out));
}

// ---------------------------------------------------------------------------
// text syntax

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

long long parse_int(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw PolyParseError(start, "expected an integer");
  long long v = 0;
  for (size_t k = start; k < c.i; ++k) {
    v = v * 10 + (c.s[k] - '0');
    if (v > (1LL << 60)) throw PolyParseError(start, "integer literal too large");
  }
  return v;
}

std::string parse_name(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  auto ok = [&](char ch, bool first) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' ||
           (!first && std::isdigit(static_cast<unsigned char>(ch)));
  };
  while (c.i < c.s.size() && ok(c.s[c.i], c.i == start)) ++c.i;
  if (c.i == start) throw PolyParseError(start, "expected a variable name");
  return std::string(c.s.substr(start, c.i - start));
}

Polynomial parse_factor(Cursor& c, const RingPtr& ring) {
  c.skip_ws();
  if (c.i >= c.s.size()) throw PolyParseError(c.i, "unexpected end of polynomial");
  char ch = c.s[c.i];
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    long long n = parse_int(c);
    return Polynomial::of_int(ring, n);
  }
  size_t at = c.i;
  std::string name = parse_name(c);
  int v = ring->var_index(name);
  if (v < 0) throw PolyParseError(at, "unknown variable '" + name + "'");
  int e = 1;
  c.skip_ws();
  if (c.i < c.s.size() && c.s[c.i] == '^') {
    ++c.i;
    long long n = parse_int(c);
    if (n < 0 || n > 1'000'000) throw PolyParseError(c.i, "exponent out of range");
    e = static_cast<int>(n);
  }
  std::vector<int> exps(ring->nvars(), 0);
  exps[v] = e;
  return Polynomial::term(ring, ring->monomial(std::move(exps)),
                          Scalar::one(ring->characteristic()));
}

Polynomial parse_product(Cursor& c, const RingPtr& ring) {
  Polynomial p = parse_factor(c, ring);
  while (c.peek() == '*') {
    ++c.i;
    p = p * parse_factor(c, ring);
  }
  return p;
}

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, std::string_view text) {
  Cursor c{text};
  if (c.eof()) throw PolyParseError(0, "empty polynomial");
  Polynomial result = zero(ring);
  bool negative = false;
  if (c.peek() == '-') {
    negative = true;
    ++c.i;
  } else if (c.peek() == '+') {
    ++c.i;
  }
  while (true) {
    Polynomial t = parse_product(c, ring);
    result = negative ? result - t : result + t;
    if (c.eof()) break;
    char op = c.peek();
    if (op == '+') {
      negative = false;
      ++c.i;
    } else if (op == '-') {
      negative = true;
      ++c.i;
    } else {
      throw PolyParseError(c.i, std::string("unexpected character '") + op + "'");
    }
  }
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->vars();
  for (size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    Scalar c = t.coef;
    bool neg = false;
    if (ring_->characteristic() == 0 && c.rat_value() < 0) {
      neg = true;
      c = c.negated();
    }
    if (k == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (size_t i = 0; i < t.mono.nvars(); ++i) {
      int e = t.mono.exp(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace hgl
