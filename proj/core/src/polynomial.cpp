// Copyright 2026 The Invar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "invar/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace invar {

std::strong_ordering compare_monomials(const Monomial& lhs, const Monomial& rhs,
                                       const VarContext& context) {
  if (lhs.arity() != rhs.arity()) {
    throw std::invalid_argument("monomials of different arity");
  }
  return context.compare(lhs, rhs);
}

Polynomial::Polynomial(ContextPtr context) : context_(std::move(context)) {
  if (!context_) throw std::invalid_argument("null variable context");
}

Polynomial::Polynomial(ContextPtr context, std::vector<Term> sorted_terms)
    : context_(std::move(context)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(ContextPtr context, const Rational& value) {
  Polynomial p(std::move(context));
  if (value != 0) p.terms_.push_back({Monomial(p.context_->arity()), canonical(value)});
  return p;
}

Polynomial Polynomial::variable(ContextPtr context, std::string_view name) {
  const auto idx = context->index_of(name);
  return variable(std::move(context), idx);
}

Polynomial Polynomial::variable(ContextPtr context, std::size_t index) {
  const auto n = context->arity();
  if (index >= n) throw std::out_of_range("variable index out of range");
  return term(std::move(context), Monomial::variable(n, index), 1);
}

Polynomial Polynomial::term(ContextPtr context, Monomial monomial,
                            const Rational& coeff) {
  Polynomial p(std::move(context));
  if (monomial.arity() != p.context_->arity()) {
    throw std::invalid_argument("monomial arity does not match context");
  }
  if (coeff != 0) p.terms_.push_back({std::move(monomial), canonical(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr context, std::vector<Term> terms) {
  Polynomial p(std::move(context));
  const auto& ctx = *p.context_;
  for (auto& t : terms) {
    if (t.monomial.arity() != ctx.arity()) {
      throw std::invalid_argument("monomial arity does not match context");
    }
    t.coeff.canonicalize();
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ctx.compare(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::from_sorted_terms(ContextPtr context,
                                         std::vector<Term> terms) {
  return Polynomial(std::move(context), std::move(terms));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, int(t.monomial.degree()));
  return deg;
}

int Polynomial::degree_in(std::size_t var) const {
  int deg = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) deg = std::max(deg, int(t.monomial[var]));
  return deg;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

std::uint64_t Polynomial::support() const {
  std::uint64_t mask = 0;
  for (const auto& t : terms_) mask |= t.monomial.support();
  return mask;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

// Merges two descending term lists; `sign` is applied to rhs.
std::vector<Term> merge_terms(const std::vector<Term>& lhs,
                              const std::vector<Term>& rhs, int sign,
                              const VarContext& ctx) {
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto i = lhs.begin();
  auto j = rhs.begin();
  while (i != lhs.end() && j != rhs.end()) {
    const auto c = ctx.compare(i->monomial, j->monomial);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->monomial, sign > 0 ? j->coeff : Rational(-j->coeff)});
      ++j;
    } else {
      Rational sum = sign > 0 ? Rational(i->coeff + j->coeff)
                              : Rational(i->coeff - j->coeff);
      if (sum != 0) out.push_back({i->monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i != lhs.end(); ++i) out.push_back(*i);
  for (; j != rhs.end(); ++j) {
    out.push_back({j->monomial, sign > 0 ? j->coeff : Rational(-j->coeff)});
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_context(context_, rhs.context_);
  terms_ = merge_terms(terms_, rhs.terms_, +1, *context_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_context(context_, rhs.context_);
  terms_ = merge_terms(terms_, rhs.terms_, -1, *context_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    const Rational s = canonical(scalar);
    for (auto& t : terms_) t.coeff *= s;
  }
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  require_same_context(lhs.context_, rhs.context_);
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.context_);
  const auto& small = lhs.size() <= rhs.size() ? lhs : rhs;
  const auto& large = lhs.size() <= rhs.size() ? rhs : lhs;
  if (small.size() == 1) {
    return large.mul_term(small.terms_[0].monomial, small.terms_[0].coeff);
  }
  std::vector<Term> products;
  products.reserve(small.size() * large.size());
  for (const auto& a : small.terms_) {
    for (const auto& b : large.terms_) {
      products.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
    }
  }
  return Polynomial::from_terms(lhs.context_, std::move(products));
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.context_ != rhs.context_ && !lhs.context_->same_as(*rhs.context_)) {
    return false;
  }
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (!(lhs.terms_[i].monomial == rhs.terms_[i].monomial) ||
        lhs.terms_[i].coeff != rhs.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(context_, 1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mul_term(const Monomial& monomial,
                                const Rational& coeff) const {
  Polynomial out(context_);
  if (coeff == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of the terms.
  for (const auto& t : terms_) {
    out.terms_.push_back({t.monomial * monomial, t.coeff * coeff});
  }
  return out;
}

void Polynomial::sub_scaled(const Polynomial& other, const Monomial& monomial,
                            const Rational& coeff) {
  require_same_context(context_, other.context_);
  const auto& ctx = *context_;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  Monomial shifted;
  bool have_shifted = false;
  Rational prod;
  while (i != terms_.end() && j != other.terms_.end()) {
    if (!have_shifted) {
      shifted = j->monomial * monomial;
      have_shifted = true;
    }
    const auto c = ctx.compare(i->monomial, shifted);
    if (c > 0) {
      out.push_back(std::move(*i++));
    } else if (c < 0) {
      prod = j->coeff * coeff;
      out.push_back({shifted, -prod});
      ++j;
      have_shifted = false;
    } else {
      prod = j->coeff * coeff;
      i->coeff -= prod;
      if (i->coeff != 0) out.push_back(std::move(*i));
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != other.terms_.end(); ++j) {
    out.push_back({j->monomial * monomial, -(j->coeff * coeff)});
  }
  terms_ = std::move(out);
}

namespace {

void require_arity(std::size_t got, std::size_t want) {
  if (got != want) {
    throw std::invalid_argument("point has " + std::to_string(got) +
                                " coordinates, context has " +
                                std::to_string(want) + " variables");
  }
}

template <typename T>
std::vector<T> point_from_map(const VarContext& ctx,
                              const std::map<std::string, T>& point) {
  std::vector<T> values;
  values.reserve(ctx.arity());
  for (const auto& name : ctx.names()) {
    auto it = point.find(name);
    if (it == point.end()) {
      throw std::invalid_argument("no value assigned to variable '" + name + "'");
    }
    values.push_back(it->second);
  }
  return values;
}

}  // namespace

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  require_arity(point.size(), context_->arity());
  Rational sum = 0;
  Rational prod;
  for (const auto& t : terms_) {
    prod = t.coeff;
    for (std::size_t v = 0; v < point.size(); ++v) {
      for (unsigned e = 0; e < t.monomial[v]; ++e) prod *= point[v];
    }
    sum += prod;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  require_arity(point.size(), context_->arity());
  double sum = 0.0;
  for (const auto& t : terms_) {
    double prod = t.coeff.get_d();
    for (std::size_t v = 0; v < point.size(); ++v) {
      for (unsigned e = 0; e < t.monomial[v]; ++e) prod *= point[v];
    }
    sum += prod;
  }
  return sum;
}

double Polynomial::evaluate_abs(std::span<const double> point) const {
  require_arity(point.size(), context_->arity());
  double sum = 0.0;
  for (const auto& t : terms_) {
    double prod = std::abs(t.coeff.get_d());
    for (std::size_t v = 0; v < point.size(); ++v) {
      for (unsigned e = 0; e < t.monomial[v]; ++e) prod *= std::abs(point[v]);
    }
    sum += prod;
  }
  return sum;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  const auto values = point_from_map(*context_, point);
  return evaluate(std::span<const Rational>(values));
}

double Polynomial::evaluate(const std::map<std::string, double>& point) const {
  const auto values = point_from_map(*context_, point);
  return evaluate(std::span<const double>(values));
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images,
                                  const ContextPtr& target) const {
  std::vector<Polynomial> ordered;
  ordered.reserve(context_->arity());
  for (const auto& name : context_->names()) {
    auto it = images.find(name);
    if (it == images.end()) {
      throw std::invalid_argument("substitution map has no image for '" + name +
                                  "'");
    }
    ordered.push_back(it->second);
  }
  return substitute(ordered, target);
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images,
                                  const ContextPtr& target) const {
  if (images.size() != context_->arity()) {
    throw std::invalid_argument("substitution needs one image per variable");
  }
  for (const auto& img : images) require_same_context(img.context(), target);

  // powers[v][k] = images[v]^k, filled lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, unsigned k) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[v]);
    return cache[k];
  };

  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size() && !prod.is_zero(); ++v) {
      if (t.monomial[v]) prod *= power(v, t.monomial[v]);
    }
    for (auto& term : prod.terms_) acc.push_back(std::move(term));
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::rename_into(const ContextPtr& target) const {
  std::vector<std::size_t> map(context_->arity());
  for (std::size_t v = 0; v < context_->arity(); ++v) {
    auto idx = target->find(context_->name(v));
    if (!idx) {
      if (degree_in(v) > 0) {
        throw std::invalid_argument("variable '" + context_->name(v) +
                                    "' does not exist in the target context");
      }
      map[v] = target->arity();
    } else {
      map[v] = *idx;
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->arity());
    for (std::size_t v = 0; v < context_->arity(); ++v) {
      if (t.monomial[v]) m.set(map[v], t.monomial[v]);
    }
    terms.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(terms));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= context_->arity()) throw std::out_of_range("variable index");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    const int e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back({m, t.coeff * e});
  }
  return from_terms(context_, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  const Rational inv = 1 / leading_coeff();
  for (auto& t : out.terms_) t.coeff *= inv;
  return out;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coeff.get_den().get_mpz_t());
  }
  Integer num_gcd = 0;
  for (const auto& t : terms_) {
    Integer n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coeff() < 0) scale = -scale;
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff *= scale;
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit = c == 1;
    bool wrote = false;
    if (!unit || t.monomial.is_one()) {
      os << invar::to_string(c);
      wrote = true;
    }
    for (std::size_t v = 0; v < context_->arity(); ++v) {
      const int e = t.monomial[v];
      if (!e) continue;
      if (wrote) os << "*";
      os << context_->name(v);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace invar
