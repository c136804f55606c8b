#include "irrcert/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace irrcert {

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Polynomial Polynomial::monomial(const Integer& c, std::size_t e) {
  std::vector<Integer> v(e + 1);
  v[e] = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(r));
}

Polynomial operator*(const Integer& c, const Polynomial& f) {
  std::vector<Integer> r = f.coeffs_;
  for (auto& x : r) x *= c;
  return Polynomial(std::move(r));
}

Rational RootBound::value() const {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool RootBound::at_most(const Rational& q) const {
  // num/den <= a/b  <=>  num*b <= a*den  (den, b > 0)
  return num * q.get_den() <= q.get_num() * den;
}

Integer evaluate(const Polynomial& f, const Integer& x) {
  Integer acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial derivative(const Polynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<Integer> r(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    r[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
  }
  return Polynomial(std::move(r));
}

TaylorCoefficients taylor_shift(const Polynomial& f, const Integer& n) {
  if (f.is_zero()) throw std::invalid_argument("taylor_shift: zero polynomial");
  std::vector<Integer> s = f.coeffs();
  const std::size_t m = s.size() - 1;
  // Round r leaves s_r in place and synthetic-divides the rest by (x - n).
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = m; i-- > r;) {
      mpz_addmul(s[i].get_mpz_t(), s[i + 1].get_mpz_t(), n.get_mpz_t());
    }
  }
  return {n, std::move(s)};
}

Integer content(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("content: zero polynomial");
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool is_primitive(const Polynomial& f) { return content(f) == 1; }

Polynomial primitive_part(const Polynomial& f) {
  const Integer g = content(f);
  std::vector<Integer> r = f.coeffs();
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return Polynomial(std::move(r));
}

RootBound root_bound(const Polynomial& f) {
  if (f.degree() < 1) {
    throw std::invalid_argument("root bound needs degree >= 1");
  }
  Integer top = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Integer a = abs(c[i]);
    if (a > top) top = std::move(a);
  }
  return {top, abs(f.leading())};
}

bool admissible(const RootBound& h, const Integer& n, const Integer& d) {
  const Integer slack = n - d - 1;
  if (slack < 0) return false;
  return slack * h.den >= h.num;
}

bool admissible(const Polynomial& f, const Integer& n, const Integer& d) {
  return admissible(root_bound(f), n, d);
}

Integer smallest_admissible_n(const RootBound& h, const Integer& d) {
  // n = d + 1 + ceil(num/den)
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), h.num.get_mpz_t(), h.den.get_mpz_t());
  Integer n = d + 1 + q;
  return n < 1 ? Integer(1) : n;
}

bool divides_exactly(const Polynomial& f, const Polynomial& divisor,
                     Polynomial& quotient) {
  if (divisor.is_zero()) return false;
  if (f.is_zero()) {
    quotient = Polynomial();
    return true;
  }
  if (f.degree() < divisor.degree()) return false;
  std::vector<Integer> rem = f.coeffs();
  const auto& g = divisor.coeffs();
  const std::size_t dg = g.size() - 1;
  std::vector<Integer> q(rem.size() - dg);
  Integer t;
  for (std::size_t i = q.size(); i-- > 0;) {
    const Integer& top = rem[i + dg];
    if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), g.back().get_mpz_t());
    for (std::size_t k = 0; k <= dg; ++k) {
      mpz_submul(rem[i + k].get_mpz_t(), t.get_mpz_t(), g[k].get_mpz_t());
    }
    q[i] = t;
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (rem[i] != 0) return false;
  }
  quotient = Polynomial(std::move(q));
  return true;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += f.coeffs()[i].get_str();
  }
  return out;
}

std::string to_expression(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Integer& c = f.coeffs()[i];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const Integer a = abs(c);
    if (i == 0 || a != 1) {
      os << a;
      if (i > 0) os << '*';
    }
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace irrcert
