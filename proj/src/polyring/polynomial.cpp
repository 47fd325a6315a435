#include "locgad/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace locgad {

// ---------------------------------------------------------------- Ring

Ring Ring::standard(std::size_t n) {
  static const char* kLetters[] = {"x", "y", "z", "u"};
  if (n <= 4) {
    Ring r;
    for (std::size_t i = 0; i < n; ++i) r.names.emplace_back(kLetters[i]);
    return r;
  }
  return indexed(n);
}

Ring Ring::indexed(std::size_t n, std::string_view stem) {
  Ring r;
  for (std::size_t i = 0; i < n; ++i) r.names.push_back(std::string(stem) + std::to_string(i));
  return r;
}

Ring Ring::parameters(std::size_t n) {
  Ring r;
  if (n <= 6) {
    for (std::size_t i = 0; i < n; ++i) r.names.emplace_back(1, static_cast<char>('a' + i));
  } else {
    for (std::size_t i = 0; i < n; ++i) r.names.push_back("g" + std::to_string(i + 1));
  }
  return r;
}

Ring Ring::without(std::size_t index) const {
  Ring r = *this;
  r.names.erase(r.names.begin() + static_cast<std::ptrdiff_t>(index));
  return r;
}

// ---------------------------------------------------------------- helpers

namespace {

const MonomialGreater kGreater{};

// Sorts and combines like terms, dropping zeros.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return kGreater(a.monomial, b.monomial); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) c += terms[j++].coeff;
    if (c != 0) {
      terms[out].monomial = terms[i].monomial;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// a + sign * b for sorted term lists.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].monomial, b[j].monomial, MonomialOrder::DegRevLex);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw Error("polynomials live in rings of different sizes");
}

}  // namespace

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars) {
  if (c != 0) terms_.push_back({Monomial(nvars), c});
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) : nvars_(m.nvars()) {
  if (c != 0) terms_.push_back({m, c});
}

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.monomial.nvars() != nvars_) throw Error("term does not match ring size");
  normalize(terms_);
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial[var]));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return kGreater(t.monomial, key); });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  check_same_ring(*this, o);
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = -o;
  check_same_ring(*this, o);
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  if (a.nvars_ != b.nvars_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::multiply(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(std::max(nvars_, o.nvars_));
  check_same_ring(*this, o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  Polynomial r(nvars_);
  r.terms_ = std::move(prod);
  normalize(r.terms_);
  return r;
}

Polynomial Polynomial::multiply_term(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(nvars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  Polynomial q(nvars_);
  if (is_zero()) return q;
  check_same_ring(*this, divisor);
  const Term& lead = divisor.terms_.front();
  Polynomial rem = *this;
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    const Term& t = rem.terms_.front();
    if (!lead.monomial.divides(t.monomial)) return std::nullopt;
    Monomial m = t.monomial / lead.monomial;
    Rational c = t.coeff / lead.coeff;
    rem -= divisor.multiply_term(m, c);
    qterms.push_back({m, std::move(c)});
  }
  // Quotient terms come out in descending order already.
  q.terms_ = std::move(qterms);
  return q;
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
  auto q = try_divide(divisor);
  if (!q) throw Error("polynomial division is not exact");
  return *q;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error("evaluation point has wrong length");
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned e = t.monomial[i]; e > 0; --e) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
  if (var >= nvars_) throw Error("substitution variable out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    mpq_class p = 1;
    for (unsigned e = t.monomial[var]; e > 0; --e) p *= value;
    c *= p;
    if (c != 0) out.push_back({t.monomial.drop(var), std::move(c)});
  }
  return Polynomial(nvars_ - 1, std::move(out));
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) throw Error("composition needs one image per variable");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& img : images)
    if (img.nvars() != target) throw Error("composition images live in different rings");
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(Polynomial(target, Rational(1)));
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod(target, t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = t.monomial[i];
      while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
      if (e) prod = prod * powers[i][e];
    }
    result += prod;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::remap(std::size_t nvars, std::span<const std::size_t> map) const {
  if (map.size() != nvars_) throw Error("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i]) m.set(map[i], m[map[i]] + t.monomial[i]);
    out.push_back({m, t.coeff});
  }
  return Polynomial(nvars, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  Rational inv = 1 / terms_.front().coeff;
  r *= inv;
  return r;
}

Rational Polynomial::content() const {
  if (is_zero()) return 1;
  Integer num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  if (terms_.front().coeff < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  r *= 1 / content();
  return r;
}

// ---------------------------------------------------------------- printing

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw Error("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string Polynomial::to_string(const Ring& ring) const {
  if (ring.nvars() != nvars_) throw Error("ring size does not match polynomial");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (c == 1);
    bool wrote = false;
    if (!unit || t.monomial.is_one()) {
      os << rational_to_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << ring.names[i];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

std::string Polynomial::to_string() const { return to_string(Ring::standard(nvars_)); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------- numbers

Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace locgad
