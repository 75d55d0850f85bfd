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

#include "invar/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace invar {

Ideal::Ideal(ContextPtr context, std::vector<Polynomial> generators)
    : context_(std::move(context)) {
  for (auto& g : generators) {
    require_same_context(context_, g.context());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(basis.begin(), basis.end(), [](const Polynomial& g) {
    return !g.is_zero() && g.leading_monomial().is_one();
  });
}

ResourceLimitExceeded::ResourceLimitExceeded(std::size_t budget,
                                             std::size_t processed)
    : std::runtime_error("S-pair budget of " + std::to_string(budget) +
                         " exhausted after " + std::to_string(processed) +
                         " reductions"),
      budget_(budget),
      processed_(processed) {}

namespace {

// Leading data of a divisor, cached for the divisibility scan.
struct Divisor {
  const Polynomial* poly;
  Monomial lead;
};

const Divisor* find_divisor(const std::vector<Divisor>& divisors,
                            const Monomial& m) {
  for (const auto& d : divisors) {
    if (d.lead.divides(m)) return &d;
  }
  return nullptr;
}

std::vector<Divisor> make_divisors(std::span<const Polynomial> basis,
                                   const ContextPtr& context) {
  std::vector<Divisor> divisors;
  divisors.reserve(basis.size());
  for (const auto& g : basis) {
    require_same_context(context, g.context());
    if (!g.is_zero()) divisors.push_back({&g, g.leading_monomial()});
  }
  return divisors;
}

// Full reduction. The working polynomial is kept in ascending order so that
// its leading term is at the back.
Polynomial reduce_full(const Polynomial& p, const std::vector<Divisor>& divisors) {
  const auto& ctx = *p.context();
  std::vector<Term> work(p.terms().rbegin(), p.terms().rend());
  std::vector<Term> merged;
  std::vector<Term> remainder;
  Rational factor;
  while (!work.empty()) {
    const Divisor* d = find_divisor(divisors, work.back().monomial);
    if (d == nullptr) {
      remainder.push_back(std::move(work.back()));
      work.pop_back();
      continue;
    }
    const Monomial shift = work.back().monomial / d->lead;
    factor = work.back().coeff / d->poly->leading_coeff();
    work.pop_back();

    // work -= factor * shift * (g - LT(g)), both sides ascending.
    const auto& gt = d->poly->terms();
    merged.clear();
    merged.reserve(work.size() + gt.size());
    auto i = work.begin();
    auto j = gt.rbegin();
    const auto j_end = std::prev(gt.rend());  // skip the leading term
    Monomial shifted;
    bool fresh = true;
    while (i != work.end() && j != j_end) {
      if (fresh) {
        shifted = j->monomial * shift;
        fresh = false;
      }
      const auto c = ctx.compare(i->monomial, shifted);
      if (c < 0) {
        merged.push_back(std::move(*i++));
      } else if (c > 0) {
        merged.push_back({shifted, -(j->coeff * factor)});
        ++j;
        fresh = true;
      } else {
        i->coeff -= j->coeff * factor;
        if (i->coeff != 0) merged.push_back(std::move(*i));
        ++i;
        ++j;
        fresh = true;
      }
    }
    for (; i != work.end(); ++i) merged.push_back(std::move(*i));
    for (; j != j_end; ++j) {
      merged.push_back({j->monomial * shift, -(j->coeff * factor)});
    }
    work.swap(merged);
  }
  return Polynomial::from_sorted_terms(p.context(), std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class BuchbergerRun {
 public:
  BuchbergerRun(const ContextPtr& context, const GroebnerOptions& options,
                GroebnerStats& stats)
      : context_(context), options_(options), stats_(stats) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& generators) {
    for (const auto& g : generators) {
      // Generators are first reduced against the basis built so far.
      Polynomial h = normal_form_current(g);
      if (!h.is_zero()) insert(h.monic());
    }
    while (!pairs_.empty()) {
      const auto pick = select_pair();
      Pair pair = pairs_[pick];
      pairs_[pick] = pairs_.back();
      pairs_.pop_back();

      if (stats_.pairs_reduced >= options_.pair_budget) {
        throw ResourceLimitExceeded(options_.pair_budget, stats_.pairs_reduced);
      }
      ++stats_.pairs_reduced;
      Polynomial h = normal_form_current(s_polynomial(polys_[pair.i], polys_[pair.j]));
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(h.monic());
    }
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(polys_[k]);
    }
    return out;
  }

 private:
  Polynomial normal_form_current(const Polynomial& p) {
    std::vector<Divisor> divisors;
    divisors.reserve(polys_.size());
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) divisors.push_back({&polys_[k], polys_[k].leading_monomial()});
    }
    return reduce_full(p, divisors);
  }

  // Normal strategy: smallest lcm total degree, ties by the monomial order,
  // then by creation order for determinism.
  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      const auto c = context_->compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    return best;
  }

  // Gebauer-Moeller installation of a new basis element.
  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) {
        candidates.push_back({k, hi, lcm(polys_[k].leading_monomial(), lh)});
      }
    }
    stats_.pairs_created += candidates.size();

    // Chain criterion among the new pairs. Coprime pairs survive this pass so
    // that they can still shadow pairs with a multiple lcm.
    std::vector<Pair> survivors;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& p = candidates[a];
      bool keep = polys_[p.i].leading_monomial().coprime(lh);
      if (!keep) {
        const auto divides_p = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
        keep = std::none_of(candidates.begin() + a + 1, candidates.end(), divides_p) &&
               std::none_of(survivors.begin(), survivors.end(), divides_p);
      }
      if (keep) survivors.push_back(p);
    }
    // Product criterion.
    std::vector<Pair> kept;
    for (const auto& p : survivors) {
      if (!polys_[p.i].leading_monomial().coprime(lh)) kept.push_back(p);
    }
    stats_.pairs_pruned += candidates.size() - kept.size();

    // Old pairs made redundant by the new element.
    const std::size_t old_count = pairs_.size();
    pairs_.erase(
        std::remove_if(pairs_.begin(), pairs_.end(),
                       [&](const Pair& p) {
                         if (!lh.divides(p.lcm)) return false;
                         const auto l1 = lcm(polys_[p.i].leading_monomial(), lh);
                         const auto l2 = lcm(polys_[p.j].leading_monomial(), lh);
                         return !(l1 == p.lcm) && !(l2 == p.lcm);
                       }),
        pairs_.end());
    stats_.pairs_pruned += old_count - pairs_.size();
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    // Elements whose leading monomial is now redundant leave the basis;
    // their pending pairs stay valid.
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
    }
    const auto live =
        static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
    stats_.max_basis_size = std::max(stats_.max_basis_size, live);
  }

  const ContextPtr& context_;
  const GroebnerOptions& options_;
  GroebnerStats& stats_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis) {
  return reduce_full(p, make_divisors(basis, p.context()));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_context(f.context(), g.context());
  if (f.is_zero() || g.is_zero()) return Polynomial(f.context());
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial s = f.mul_term(l / f.leading_monomial(), 1 / f.leading_coeff());
  s.sub_scaled(g, l / g.leading_monomial(), 1 / g.leading_coeff());
  return s;
}

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& options,
                         GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  st = {};
  BuchbergerRun run(ideal.context(), options, st);
  return reduce_basis(ideal.context(), run.run(ideal.generators()));
}

GroebnerBasis reduce_basis(ContextPtr context, std::vector<Polynomial> basis) {
  const auto& ctx = *context;
  std::erase_if(basis, [](const Polynomial& g) { return g.is_zero(); });
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ctx.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  // Minimal basis: drop elements whose leading monomial is divisible by the
  // leading monomial of an earlier (smaller or equal) element.
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
      return m.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  // Reduce each element against the others, smallest first so that later
  // elements see already reduced divisors.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Divisor> others;
    for (std::size_t m = 0; m < minimal.size(); ++m) {
      if (m != k) others.push_back({&minimal[m], minimal[m].leading_monomial()});
    }
    const auto& g = minimal[k];
    Polynomial tail = Polynomial::from_sorted_terms(
        context, std::vector<Term>(std::next(g.terms().begin()), g.terms().end()));
    Polynomial head = Polynomial::term(context, g.leading_monomial(), g.leading_coeff());
    minimal[k] = (head + reduce_full(tail, others)).monic();
  }
  std::reverse(minimal.begin(), minimal.end());
  return GroebnerBasis{std::move(context), std::move(minimal), true};
}

std::vector<Polynomial> elimination_ideal(const GroebnerBasis& gb,
                                          std::span<const std::string> keep) {
  const auto& ctx = *gb.context;
  std::uint64_t keep_mask = 0;
  for (const auto& name : keep) keep_mask |= std::uint64_t{1} << ctx.index_of(name);
  const std::uint64_t all_mask =
      ctx.arity() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ctx.arity()) - 1;

  if (keep_mask != all_mask) {
    if (ctx.order() != MonomialOrder::kLex) {
      throw std::invalid_argument(
          "elimination requires a lex order unless all variables are kept");
    }
    // Every eliminated variable must precede every kept one.
    std::size_t lowest_eliminated = 0;
    std::size_t highest_kept = ctx.arity();
    for (std::size_t v = 0; v < ctx.arity(); ++v) {
      if (keep_mask >> v & 1u) {
        highest_kept = std::min(highest_kept, ctx.rank(v));
      } else {
        lowest_eliminated = std::max(lowest_eliminated, ctx.rank(v));
      }
    }
    if (lowest_eliminated > highest_kept) {
      throw std::invalid_argument(
          "order is not an elimination order for the requested variables");
    }
  }
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis) {
    if ((g.support() & ~keep_mask) == 0) out.push_back(g);
  }
  return out;
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb.basis).is_zero();
}

namespace {

void search_independent(const std::vector<std::uint64_t>& leads, std::size_t n,
                        std::size_t next, std::uint64_t current, int size,
                        int& best_size, std::uint64_t& best) {
  if (size > best_size) {
    best_size = size;
    best = current;
  }
  if (size + static_cast<int>(n - next) <= best_size) return;
  for (std::size_t v = next; v < n; ++v) {
    const std::uint64_t extended = current | (std::uint64_t{1} << v);
    const bool ok = std::none_of(leads.begin(), leads.end(), [&](std::uint64_t lead) {
      return (lead & ~extended) == 0;
    });
    if (ok) search_independent(leads, n, v + 1, extended, size + 1, best_size, best);
    if (size + static_cast<int>(n - v - 1) <= best_size) return;
  }
}

}  // namespace

DimensionResult affine_dimension(const GroebnerBasis& gb) {
  const auto& ctx = *gb.context;
  if (gb.is_unit()) return {-1, {}};
  std::vector<std::uint64_t> leads;
  for (const auto& g : gb.basis) {
    if (!g.is_zero()) leads.push_back(g.leading_monomial().support());
  }
  int best_size = -1;
  std::uint64_t best = 0;
  search_independent(leads, ctx.arity(), 0, 0, 0, best_size, best);
  DimensionResult result{best_size, {}};
  for (std::size_t v = 0; v < ctx.arity(); ++v) {
    if (best >> v & 1u) result.witness.push_back(ctx.name(v));
  }
  return result;
}

bool is_independent(const GroebnerBasis& gb, std::span<const std::string> vars) {
  std::uint64_t mask = 0;
  for (const auto& name : vars) mask |= std::uint64_t{1} << gb.context->index_of(name);
  return std::none_of(gb.basis.begin(), gb.basis.end(), [&](const Polynomial& g) {
    return !g.is_zero() && (g.leading_monomial().support() & ~mask) == 0;
  });
}

std::vector<std::pair<std::string, Polynomial>> parametric_relations(
    const ContextPtr& y_context) {
  // y_k * denominator - numerator for each rational expression of y_k in the
  // parameters y1..y5. The y5^2 term of y8 enters with a minus sign; this is
  // forced by y1*y2*y8 - y1*y2*y3^2 + 2*y3*y4^2 - 2*y6*y7 + 2*y9^2 in the
  // basis after substituting y6, y7 and y9.
  static const std::pair<const char*, const char*> kRelations[] = {
      {"y6", "y2*y6 - y4^2"},
      {"y7", "y1*y7 - y4^2"},
      {"y8",
       "y1^2*y2^2*y4^2*y8 - (-2*y1^3*y2^3*y5^2 + y1^2*y2^2*y3^2*y4^2"
       " - 2*y1*y2*y3*y4^4 + 2*y4^6)"},
      {"y9", "y4*y9 - y1*y2*y5"},
      {"y10", "y1*y2*y10 - y4^3"},
      {"y11", "y1*y2^2*y11 - y4^4"},
      {"y12", "y1^2*y2*y12 - y4^4"},
  };
  std::vector<std::pair<std::string, Polynomial>> out;
  for (const auto& [name, text] : kRelations) {
    out.emplace_back(name, parse_polynomial(text, y_context));
  }
  return out;
}

Report verify_parametric_solve(const GroebnerBasis& gb) {
  Report report;
  for (const auto& [name, relation] : parametric_relations(gb.context)) {
    Stopwatch sw;
    const Polynomial rem = normal_form(relation, gb.basis);
    report.add("parametric " + name, rem.is_zero(),
               rem.is_zero() ? relation.to_string()
                             : "remainder " + rem.to_string(),
               sw.elapsed_ms());
  }
  return report;
}

}  // namespace invar
