#include "sgp/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace sgp {

SparsePolynomial SparsePolynomial::monomial(Monomial exponents, Int coefficient) {
  SparsePolynomial p(exponents.size());
  for (Int e : exponents) {
    if (e < 0) raise(ErrorKind::InvalidInput, "negative exponent in monomial");
  }
  p.add_term(exponents, coefficient);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t num_vars, std::size_t index, Int power) {
  if (index >= num_vars) raise(ErrorKind::InvalidInput, "variable index out of range");
  Monomial m(num_vars, 0);
  m[index] = power;
  return monomial(std::move(m));
}

SparsePolynomial SparsePolynomial::constant(std::size_t num_vars, Int value) {
  return monomial(Monomial(num_vars, 0), value);
}

SparsePolynomial SparsePolynomial::binomial(const Monomial& plus, const Monomial& minus) {
  return monomial(plus) - monomial(minus);
}

Int SparsePolynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void SparsePolynomial::add_term(const Monomial& m, Int c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void SparsePolynomial::require_same_vars(const SparsePolynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    raise(ErrorKind::InvalidInput, "polynomials in " + std::to_string(num_vars_) + " and " +
                                       std::to_string(other.num_vars_) + " variables");
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  require_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  require_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, checked_sub(0, c));
  return *this;
}

SparsePolynomial SparsePolynomial::operator-() const { return SparsePolynomial(num_vars_) - *this; }

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  a.require_same_vars(b);
  SparsePolynomial out(a.num_vars_);
  Monomial m(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = checked_add(ma[i], mb[i]);
      out.add_term(m, checked_mul(ca, cb));
    }
  }
  return out;
}

SparsePolynomial operator*(Int k, const SparsePolynomial& p) {
  return SparsePolynomial::constant(p.num_vars(), k) * p;
}

std::string to_string(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest monomial first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool constant_term = std::all_of(m.begin(), m.end(), [](Int e) { return e == 0; });
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    const Int magnitude = c < 0 ? -c : c;
    if (magnitude != 1 || constant_term) os << magnitude;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << "x" << i;
      if (m[i] != 1) os << "^" << m[i];
    }
    first = false;
  }
  return os.str();
}

bool poly_identity_zero(std::span<const PolynomialTerm> terms, const SparsePolynomial& target) {
  SparsePolynomial sum = target;
  for (const auto& [multiplier, factor] : terms) sum += multiplier * factor;
  return sum.is_zero();
}

}  // namespace sgp
