// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#include "symwitt/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>

#include "symwitt/linalg.hpp"

namespace symwitt {

namespace {

const RingDescriptor kZ = RingDescriptor::integers();
const RingDescriptor kQ = RingDescriptor::rationals();

/// Memo table behaving as a pure cache: the lock is never held while the
/// value is computed, so recursive fills cannot deadlock; losing a race
/// just recomputes.
template <class K, class V>
class Cache {
 public:
  V get_or_compute(const K& key, const std::function<V()>& fn) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = store_.find(key);
      if (it != store_.end()) return it->second;
    }
    V value = fn();
    std::lock_guard<std::mutex> lock(mu_);
    return store_.emplace(key, std::move(value)).first->second;
  }

 private:
  mutable std::mutex mu_;
  mutable std::map<K, V> store_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Basis

char basis_letter(Basis b) {
  switch (b) {
    case Basis::monomial: return 'm';
    case Basis::elementary: return 'e';
    case Basis::power_sum: return 'p';
    case Basis::witt: return 'w';
  }
  return '?';
}

Basis basis_from_letter(char c) {
  switch (c) {
    case 'm': return Basis::monomial;
    case 'e': return Basis::elementary;
    case 'p': return Basis::power_sum;
    case 'w': return Basis::witt;
  }
  throw DescriptorError(std::string("unknown basis '") + c + "'");
}

bool is_multiplicative(Basis b) { return b != Basis::monomial; }

// ---------------------------------------------------------------------------
// SymFunc basics

SymFunc::SymFunc(Basis basis, RingDescriptor ring) : basis_(basis), ring_(std::move(ring)) {
  if (!ring_.is_integers() && !ring_.is_rationals())
    throw DescriptorError("symmetric-function coefficients live in Z or Q, not " + ring_.name());
}

SymFunc SymFunc::zero(Basis basis, RingDescriptor ring) { return SymFunc(basis, std::move(ring)); }

SymFunc SymFunc::constant(Basis basis, const Rat& c) {
  SymFunc f(basis, is_integer(c) ? kZ : kQ);
  f.add_term(Partition(), c);
  return f;
}

SymFunc SymFunc::generator(Basis basis, Partition lambda, RingDescriptor ring) {
  SymFunc f(basis, std::move(ring));
  f.add_term(std::move(lambda), Rat(1));
  return f;
}

SymFunc SymFunc::from_terms(Basis basis, RingDescriptor ring, TermMap terms) {
  SymFunc f(basis, std::move(ring));
  for (auto& [p, c] : terms) {
    if (!f.ring_.has_rationals() && !is_integer(c))
      throw IntegralityError("coefficient " + c.str() + " is not integral", p.str());
    f.add_term(p, c);
  }
  return f;
}

SymFunc SymFunc::e_n(unsigned n) { return generator(Basis::elementary, Partition({n})); }
SymFunc SymFunc::psi_n(unsigned n) { return generator(Basis::power_sum, Partition({n})); }
SymFunc SymFunc::w_n(unsigned n) { return generator(Basis::witt, Partition({n})); }
SymFunc SymFunc::plethysm_identity() { return generator(Basis::power_sum, Partition({1})); }

void SymFunc::add_term(const Partition& p, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned SymFunc::degree() const {
  unsigned d = 0;
  for (const auto& [p, c] : terms_) d = std::max(d, p.weight());
  return d;
}

bool SymFunc::is_integral() const {
  for (const auto& [p, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

Rat SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rat(0) : it->second;
}

SymFunc unify_rings(const SymFunc& a, const SymFunc& b) {
  // result skeleton carrying the unified ring tag
  RingDescriptor ring = (a.ring_.is_integers() && b.ring_.is_integers()) ? kZ : kQ;
  return SymFunc(a.basis_, ring);
}

SymFunc SymFunc::operator-() const {
  SymFunc r(basis_, ring_);
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ != b.basis_)
    throw DescriptorError("basis mismatch in +: change_basis one operand first");
  SymFunc r = unify_rings(a, b);
  r.terms_ = a.terms_;
  for (const auto& [p, c] : b.terms_) r.add_term(p, c);
  return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }

namespace {
SymFunc to_p(const SymFunc& f);
SymFunc from_p(const SymFunc& g, Basis target);
}  // namespace

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ != b.basis_)
    throw DescriptorError("basis mismatch in *: change_basis one operand first");
  if (is_multiplicative(a.basis_)) {
    SymFunc r = unify_rings(a, b);
    for (const auto& [pa, ca] : a.terms_)
      for (const auto& [pb, cb] : b.terms_) r.add_term(pa.union_with(pb), ca * cb);
    return r;
  }
  // monomial basis: route through the power sums
  SymFunc prod = from_p(to_p(a) * to_p(b), Basis::monomial);
  if (a.ring_.is_integers() && b.ring_.is_integers()) return with_coeff_ring(prod, kZ);
  return prod;
}

SymFunc SymFunc::scaled(const Rat& c) const {
  if (c == 0) return zero(basis_, ring_);
  SymFunc r(basis_, ring_.is_integers() && is_integer(c) ? kZ : kQ);
  for (const auto& [p, x] : terms_) r.terms_.emplace(p, x * c);
  return r;
}

SymFunc SymFunc::pow(unsigned e) const {
  SymFunc result = constant(basis_, Rat(1));
  if (ring_.is_rationals()) result = with_coeff_ring(result, kQ);
  SymFunc base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    if (e >>= 1) base = base * base;
  }
  return result;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  return a.basis_ == b.basis_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

SymFunc with_coeff_ring(const SymFunc& f, const RingDescriptor& ring) {
  if (ring == f.ring()) return f;
  if (ring.is_integers()) {
    for (const auto& [p, c] : f.terms())
      if (!is_integer(c))
        throw IntegralityError("coefficient " + c.str() + " is not integral", p.str());
  }
  return SymFunc::from_terms(f.basis(), ring, f.terms());
}

// ---------------------------------------------------------------------------
// Generator conversions (memoized)

namespace {

// e_n in the p-basis over Q.  Newton: n e_n = sum_{i=1..n} (-1)^{i-1} p_i e_{n-i}.
const Cache<unsigned, SymFunc>& e_in_p_cache() {
  static Cache<unsigned, SymFunc> cache;
  return cache;
}

SymFunc e_in_p(unsigned n) {
  return e_in_p_cache().get_or_compute(n, [n]() -> SymFunc {
    if (n == 0) return with_coeff_ring(SymFunc::constant(Basis::power_sum, 1), kQ);
    SymFunc acc = SymFunc::zero(Basis::power_sum, kQ);
    for (unsigned i = 1; i <= n; ++i) {
      SymFunc pi = SymFunc::generator(Basis::power_sum, Partition({i}), kQ);
      SymFunc term = pi * e_in_p(n - i);
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    return acc.scaled(Rat(1, n));
  });
}

// p_n in the e-basis (integral).
// p_n = sum_{i=1..n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n.
SymFunc p_in_e(unsigned n) {
  static Cache<unsigned, SymFunc> cache;
  return cache.get_or_compute(n, [n]() -> SymFunc {
    SymFunc acc = SymFunc::e_n(n).scaled(n % 2 == 1 ? Rat(n) : Rat(-Int(n)));
    for (unsigned i = 1; i < n; ++i) {
      SymFunc term = SymFunc::e_n(i) * p_in_e(n - i);
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
  });
}

// w_n in the p-basis over Q, by inverting psi_n = sum_{d|n} d w_d^{n/d}:
// w_n = (p_n - sum_{d|n, d<n} d w_d^{n/d}) / n.
SymFunc w_in_p(unsigned n) {
  static Cache<unsigned, SymFunc> cache;
  return cache.get_or_compute(n, [n]() -> SymFunc {
    SymFunc acc = SymFunc::generator(Basis::power_sum, Partition({n}), kQ);
    for (auto d : divisors(static_cast<std::int64_t>(n))) {
      if (d == n) continue;
      acc = acc - w_in_p(static_cast<unsigned>(d)).pow(n / static_cast<unsigned>(d)).scaled(Rat(d));
    }
    return acc.scaled(Rat(1, n));
  });
}

// p_n in the w-basis (integral): psi_n = sum_{d|n} d w_d^{n/d} directly.
SymFunc p_in_w(unsigned n) {
  static Cache<unsigned, SymFunc> cache;
  return cache.get_or_compute(n, [n]() -> SymFunc {
    SymFunc::TermMap terms;
    for (auto d : divisors(static_cast<std::int64_t>(n))) {
      std::vector<unsigned> parts(n / static_cast<unsigned>(d), static_cast<unsigned>(d));
      terms.emplace(Partition(std::move(parts)), Rat(d));
    }
    return SymFunc::from_terms(Basis::witt, kZ, std::move(terms));
  });
}

// Per-degree data for monomial-basis conversions: coefficient vectors are
// indexed by partitions_of(n); to_e maps an m-coefficient vector to the
// e-coefficient vector of the same element.
struct MonomialDegreeData {
  std::vector<Partition> parts;
  detail::RatMatrix m_to_e;  // a_e = m_to_e * a_m
};

const MonomialDegreeData& monomial_degree_data(unsigned n) {
  static Cache<unsigned, std::shared_ptr<const MonomialDegreeData>> cache;
  auto ptr = cache.get_or_compute(n, [n]() -> std::shared_ptr<const MonomialDegreeData> {
    auto data = std::make_shared<MonomialDegreeData>();
    data->parts = partitions_of(n);
    std::size_t k = data->parts.size();
    // E[i][j] = coefficient of m_{parts[j]} in e_{parts[i]}
    detail::RatMatrix e_to_m(k, std::vector<Rat>(k, Rat(0)));
    unsigned nvars = std::max(n, 1u);
    for (std::size_t i = 0; i < k; ++i) {
      SymFunc elam = SymFunc::generator(Basis::elementary, data->parts[i]);
      SymFunc in_m = from_polynomial(expand(elam, nvars), nvars);
      for (std::size_t j = 0; j < k; ++j) e_to_m[i][j] = in_m.coefficient(data->parts[j]);
    }
    // coefficient vectors transform by the transpose inverse
    detail::RatMatrix t(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) t[i][j] = e_to_m[j][i];
    data->m_to_e = detail::invert(t);
    return data;
  });
  return *ptr;
}

SymFunc monomial_to_e(const SymFunc& f) {
  SymFunc acc = SymFunc::zero(Basis::elementary, kQ);
  std::map<unsigned, SymFunc::TermMap> slices;
  for (const auto& [p, c] : f.terms()) slices[p.weight()].emplace(p, c);
  for (const auto& [n, slice] : slices) {
    const auto& data = monomial_degree_data(n);
    std::vector<Rat> am(data.parts.size(), Rat(0));
    for (std::size_t j = 0; j < data.parts.size(); ++j) {
      auto it = slice.find(data.parts[j]);
      if (it != slice.end()) am[j] = it->second;
    }
    SymFunc::TermMap out;
    for (std::size_t i = 0; i < data.parts.size(); ++i) {
      Rat v(0);
      for (std::size_t j = 0; j < data.parts.size(); ++j) v += data.m_to_e[i][j] * am[j];
      if (v != 0) out.emplace(data.parts[i], v);
    }
    acc = acc + SymFunc::from_terms(Basis::elementary, kQ, std::move(out));
  }
  return acc;
}

SymFunc to_p(const SymFunc& f) {
  switch (f.basis()) {
    case Basis::power_sum:
      return with_coeff_ring(f, kQ);
    case Basis::elementary:
    case Basis::witt: {
      SymFunc acc = SymFunc::zero(Basis::power_sum, kQ);
      for (const auto& [lambda, c] : f.terms()) {
        SymFunc prod = with_coeff_ring(SymFunc::constant(Basis::power_sum, 1), kQ);
        for (unsigned part : lambda.parts())
          prod = prod * (f.basis() == Basis::elementary ? e_in_p(part) : w_in_p(part));
        acc = acc + prod.scaled(c);
      }
      return acc;
    }
    case Basis::monomial:
      return to_p(monomial_to_e(f));
  }
  throw DescriptorError("bad basis");
}

SymFunc from_p(const SymFunc& g, Basis target) {
  if (target == Basis::power_sum) return with_coeff_ring(g, kQ);
  if (target == Basis::monomial) {
    unsigned d = std::max(g.degree(), 1u);
    return from_polynomial(expand(g, d), d);
  }
  SymFunc acc = SymFunc::zero(target, kQ);
  for (const auto& [lambda, c] : g.terms()) {
    SymFunc prod = with_coeff_ring(SymFunc::constant(target, 1), kQ);
    for (unsigned part : lambda.parts()) {
      SymFunc gen = (target == Basis::elementary) ? p_in_e(part) : p_in_w(part);
      prod = prod * with_coeff_ring(gen, kQ);
    }
    acc = acc + prod.scaled(c);
  }
  return acc;
}

}  // namespace

SymFunc change_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target)
    return target == Basis::power_sum ? with_coeff_ring(f, kQ) : f;
  SymFunc result = from_p(to_p(f), target);
  if (f.ring().is_integers() && target != Basis::power_sum)
    return with_coeff_ring(result, kZ);
  return result;
}

// ---------------------------------------------------------------------------
// Expansion into finitely many variables

namespace {

MultiPoly orbit_sum(const Partition& lambda, const std::vector<std::string>& vars,
                    const RingDescriptor& ring) {
  MultiPoly::TermMap terms;
  if (lambda.length() > vars.size()) return MultiPoly(ring);  // orbit dies
  std::vector<unsigned> exps(vars.size() - lambda.length(), 0);
  exps.insert(exps.end(), lambda.parts().rbegin(), lambda.parts().rend());
  // exps is sorted ascending; next_permutation walks every distinct arrangement
  RingElement one = RingElement::one(ring);
  do {
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (exps[i] > 0) m = m * Monomial::variable(vars[i], exps[i]);
    terms.emplace(std::move(m), one);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return MultiPoly::from_terms(ring, std::move(terms));
}

}  // namespace

MultiPoly expand(const SymFunc& f, const std::vector<std::string>& vars) {
  const RingDescriptor ring = f.ring();
  MultiPoly acc(ring);
  if (f.is_zero()) return acc;

  unsigned max_part = 0;
  for (const auto& [p, c] : f.terms())
    if (!p.empty()) max_part = std::max(max_part, p.parts().front());

  // per-generator expansions shared by all terms
  std::vector<MultiPoly> gen(max_part + 1, MultiPoly(ring));
  switch (f.basis()) {
    case Basis::monomial:
      break;
    case Basis::elementary: {
      // coefficients of prod_v (1 + v t): E[k] after processing each variable
      gen[0] = MultiPoly::constant(ring, 1);
      for (const auto& v : vars) {
        MultiPoly xv = MultiPoly::variable(ring, v);
        for (unsigned k = max_part; k >= 1; --k) {
          if (gen[k - 1].is_zero()) continue;
          gen[k] = gen[k] + gen[k - 1] * xv;
        }
      }
      break;
    }
    case Basis::power_sum:
    case Basis::witt: {
      std::vector<MultiPoly> powers(max_part + 1, MultiPoly(ring));
      for (unsigned n = 1; n <= max_part; ++n) {
        MultiPoly pn(ring);
        for (const auto& v : vars) pn = pn + MultiPoly::variable(ring, v, n);
        powers[n] = std::move(pn);
      }
      if (f.basis() == Basis::power_sum) {
        gen = std::move(powers);
      } else {
        // w_n(vars) = (p_n(vars) - sum_{d|n, d<n} d w_d(vars)^{n/d}) / n,
        // integral at every step
        gen[0] = MultiPoly::constant(ring, 1);
        for (unsigned n = 1; n <= max_part; ++n) {
          MultiPoly num = powers[n];
          for (auto d : divisors(n)) {
            if (static_cast<unsigned>(d) == n) continue;
            num = num - gen[static_cast<unsigned>(d)].pow(n / static_cast<unsigned>(d)) *
                            RingElement::from_int(ring, d);
          }
          gen[n] = num.exact_div_int(n);
        }
      }
      break;
    }
  }

  for (const auto& [lambda, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(ring, RingElement::from_rat(ring, c));
    if (f.basis() == Basis::monomial) {
      term = term * orbit_sum(lambda, vars, ring);
    } else {
      for (unsigned part : lambda.parts()) term = term * gen[part];
    }
    acc = acc + term;
  }
  return acc;
}

MultiPoly expand(const SymFunc& f, unsigned nvars, const std::string& prefix) {
  std::vector<std::string> vars;
  vars.reserve(nvars);
  for (unsigned i = 1; i <= nvars; ++i) vars.push_back(prefix + std::to_string(i));
  return expand(f, vars);
}

SymFunc from_polynomial(const MultiPoly& g, unsigned nvars, const std::string& prefix) {
  if (!g.ring().is_integers() && !g.ring().is_rationals())
    throw DescriptorError("from_polynomial expects coefficients in Z or Q");
  if (g.degree() > nvars)
    throw PrecisionError("degree " + std::to_string(g.degree()) + " exceeds " +
                         std::to_string(nvars) + " variables");
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= nvars; ++i) vars.push_back(prefix + std::to_string(i));
  for (const auto& v : g.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw SymmetryError("unexpected variable '" + v + "'");
  for (unsigned i = 0; i + 1 < nvars; ++i)
    if (g.swap_variables(vars[i], vars[i + 1]) != g)
      throw SymmetryError("not symmetric under swapping " + vars[i] + " and " + vars[i + 1]);

  SymFunc::TermMap terms;
  for (const auto& [mono, c] : g.terms()) {
    std::vector<unsigned> exps;
    exps.reserve(nvars);
    for (const auto& v : vars) exps.push_back(mono.exponent(v));
    bool descending = std::is_sorted(exps.rbegin(), exps.rend());
    if (!descending) continue;  // not the orbit representative
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    terms.emplace(Partition(std::move(exps)), c.as_rat());
  }
  return SymFunc::from_terms(Basis::monomial, g.ring(), std::move(terms));
}

// ---------------------------------------------------------------------------
// Plethysm

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  SymFunc fp = to_p(f), gp = to_p(g);
  SymFunc acc = SymFunc::zero(Basis::power_sum, kQ);
  for (const auto& [lambda, c] : fp.terms()) {
    SymFunc prod = with_coeff_ring(SymFunc::constant(Basis::power_sum, 1), kQ);
    for (unsigned part : lambda.parts()) {
      // p_n o g: scale every partition in g's p-expansion by n
      SymFunc::TermMap scaled;
      for (const auto& [mu, d] : gp.terms()) scaled.emplace(mu.scaled(part), d);
      prod = prod * SymFunc::from_terms(Basis::power_sum, kQ, std::move(scaled));
    }
    acc = acc + prod.scaled(c);
  }
  SymFunc result = from_p(acc, f.basis());
  if (f.ring().is_integers() && g.ring().is_integers() && f.basis() != Basis::power_sum)
    return with_coeff_ring(result, kZ);
  return result;
}

// ---------------------------------------------------------------------------
// Bialgebra structure at finite level

namespace {

std::vector<std::string> numbered(const std::string& prefix, unsigned n) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (unsigned i = 1; i <= n; ++i) vars.push_back(prefix + std::to_string(i));
  return vars;
}

}  // namespace

MultiPoly coaddition_image(const SymFunc& f, unsigned N) {
  if (f.degree() > N)
    throw PrecisionError("coaddition at level " + std::to_string(N) + " cannot resolve degree " +
                         std::to_string(f.degree()));
  std::vector<std::string> vars = numbered("x", N);
  for (const auto& v : numbered("y", N)) vars.push_back(v);
  return expand(f, vars);
}

MultiPoly comultiplication_image(const SymFunc& f, unsigned N) {
  if (f.degree() > N)
    throw PrecisionError("comultiplication at level " + std::to_string(N) +
                         " cannot resolve degree " + std::to_string(f.degree()));
  std::vector<std::string> aux = numbered("s", N * N);
  MultiPoly g = expand(f, aux);
  std::map<std::string, MultiPoly> bindings;
  for (unsigned i = 1; i <= N; ++i)
    for (unsigned j = 1; j <= N; ++j) {
      MultiPoly prod = MultiPoly::variable(g.ring(), "x" + std::to_string(i)) *
                       MultiPoly::variable(g.ring(), "y" + std::to_string(j));
      bindings.emplace("s" + std::to_string((i - 1) * N + j), std::move(prod));
    }
  return g.substitute(bindings);
}

Rat counit_plus(const SymFunc& f) { return f.coefficient(Partition()); }

Rat counit_times(const SymFunc& f) {
  MultiPoly image = expand(f, 1);
  std::map<std::string, RingElement> at_one{{"x1", RingElement::one(f.ring())}};
  return image.evaluate(at_one, f.ring()).as_rat();
}

bool is_additive(const SymFunc& f) {
  unsigned d = f.degree();
  if (d == 0) return f.is_zero();
  MultiPoly lhs = coaddition_image(f, d);
  MultiPoly rhs = expand(f, numbered("x", d)) + expand(f, numbered("y", d));
  return lhs == rhs;
}

SymFunc cotangent_reduce(const SymFunc& f) {
  if (f.basis() != Basis::elementary && f.basis() != Basis::witt)
    throw DescriptorError("cotangent reduction expects the e or w basis");
  if (counit_plus(f) != 0)
    throw NotAugmentedError("constant term is " + counit_plus(f).str());
  SymFunc::TermMap linear;
  for (const auto& [p, c] : f.terms())
    if (p.length() == 1) linear.emplace(p, c);
  return SymFunc::from_terms(f.basis(), f.ring(), std::move(linear));
}

// ---------------------------------------------------------------------------
// Display

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool lead = true;
  char letter = basis_letter(basis_);
  for (const auto& [p, c] : terms_) {
    std::string cs;
    if (is_integer(c))
      cs = rat_num(c).str();
    else
      cs = rat_num(c).str() + "/" + rat_den(c).str();
    bool negative = cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;

    std::string body;
    if (p.empty()) {
      body = mag;
    } else {
      std::ostringstream mono;
      if (basis_ == Basis::monomial) {
        mono << letter << p.str();
      } else {
        // ascending parts, grouped into powers: e[1]^2*e[3]
        auto mult = p.multiplicities();
        bool first = true;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
          if (!first) mono << "*";
          mono << letter << "[" << it->first << "]";
          if (it->second > 1) mono << "^" << it->second;
          first = false;
        }
      }
      body = (mag == "1") ? mono.str() : mag + "*" + mono.str();
    }
    if (lead) {
      if (negative) os << "-";
      os << body;
      lead = false;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.str(); }

}  // namespace symwitt
