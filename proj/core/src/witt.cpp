// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#include "symwitt/witt.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>

#include "symwitt/numbers.hpp"

namespace symwitt {

namespace {
const RingDescriptor kZ = RingDescriptor::integers();

std::string xvar(std::int64_t d) { return "x" + std::to_string(d); }
std::string yvar(std::int64_t d) { return "y" + std::to_string(d); }
}  // namespace

// ---------------------------------------------------------------------------
// TruncationSet

TruncationSet TruncationSet::p_typical(std::int64_t p, int len) {
  if (p < 2 || len < 1) throw DescriptorError("p-typical truncation needs p >= 2, len >= 1");
  std::vector<std::int64_t> m;
  std::int64_t q = 1;
  for (int i = 0; i < len; ++i, q *= p) m.push_back(q);
  return TruncationSet(std::move(m));
}

TruncationSet TruncationSet::full(std::int64_t n) {
  if (n < 1) throw DescriptorError("full truncation needs n >= 1");
  std::vector<std::int64_t> m(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i + 1;
  return TruncationSet(std::move(m));
}

TruncationSet::TruncationSet(std::vector<std::int64_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() < 1)
    throw DescriptorError("truncation set must contain positive integers");
  for (auto n : members_)
    for (auto d : divisors(n))
      if (!std::binary_search(members_.begin(), members_.end(), d))
        throw DescriptorError("truncation set is not divisor-closed: " + std::to_string(n) +
                              " present but not its divisor " + std::to_string(d));
}

bool TruncationSet::contains(std::int64_t n) const {
  return std::binary_search(members_.begin(), members_.end(), n);
}

std::size_t TruncationSet::index_of(std::int64_t n) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), n);
  if (it == members_.end() || *it != n)
    throw DescriptorError("index " + std::to_string(n) + " not in truncation set " + str());
  return static_cast<std::size_t>(it - members_.begin());
}

TruncationSet TruncationSet::quotient(std::int64_t n) const {
  std::vector<std::int64_t> q;
  for (auto m : members_)
    if (m % n == 0) q.push_back(m / n);
  if (q.empty()) throw DescriptorError("quotient truncation by " + std::to_string(n) + " is empty");
  return TruncationSet(std::move(q));
}

bool TruncationSet::is_full() const {
  return members_.back() == static_cast<std::int64_t>(members_.size());
}

std::string TruncationSet::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ",";
    os << members_[i];
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// WittVector / GhostVector

WittVector::WittVector(TruncationSet trunc, RingDescriptor ring,
                       std::vector<RingElement> components)
    : trunc_(std::move(trunc)), ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.size() != trunc_.size())
    throw DescriptorError("expected " + std::to_string(trunc_.size()) + " components, got " +
                          std::to_string(components_.size()));
  for (const auto& c : components_)
    if (c.ring() != ring_) throw DescriptorError("component ring mismatch");
}

WittVector WittVector::zero(const TruncationSet& trunc, const RingDescriptor& ring) {
  return WittVector(trunc, ring,
                    std::vector<RingElement>(trunc.size(), RingElement::zero(ring)));
}

const RingElement& WittVector::component(std::int64_t n) const {
  return components_[trunc_.index_of(n)];
}

WittVector WittVector::truncate(const TruncationSet& smaller) const {
  std::vector<RingElement> comps;
  comps.reserve(smaller.size());
  for (auto n : smaller.members()) comps.push_back(component(n));
  return WittVector(smaller, ring_, std::move(comps));
}

WittVector WittVector::with_ring(const RingDescriptor& target) const {
  std::vector<RingElement> comps;
  comps.reserve(components_.size());
  for (const auto& c : components_) comps.push_back(convert_element(c, target));
  return WittVector(trunc_, target, std::move(comps));
}

bool operator==(const WittVector& a, const WittVector& b) {
  return a.trunc_ == b.trunc_ && a.ring_ == b.ring_ && a.components_ == b.components_;
}

std::string WittVector::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << ",";
    os << components_[i].str();
  }
  os << "]";
  return os.str();
}

nlohmann::json WittVector::to_json() const {
  nlohmann::json j;
  j["trunc"] = trunc_.members();
  if (ring_.is_integers())
    j["mod"] = 0;
  else if (ring_.is_mod())
    j["mod"] = ring_.modulus().str();
  else
    j["ring"] = ring_.name();
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components_) comps.push_back(c.str());
  j["components"] = comps;
  return j;
}

GhostVector::GhostVector(TruncationSet trunc, RingDescriptor ring,
                         std::vector<RingElement> entries)
    : trunc_(std::move(trunc)), ring_(std::move(ring)), entries_(std::move(entries)) {
  if (entries_.size() != trunc_.size())
    throw DescriptorError("expected " + std::to_string(trunc_.size()) + " ghost entries, got " +
                          std::to_string(entries_.size()));
  for (const auto& c : entries_)
    if (c.ring() != ring_) throw DescriptorError("ghost entry ring mismatch");
}

const RingElement& GhostVector::entry(std::int64_t n) const {
  return entries_[trunc_.index_of(n)];
}

bool operator==(const GhostVector& a, const GhostVector& b) {
  return a.trunc_ == b.trunc_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
}

std::string GhostVector::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << entries_[i].str();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Ghost map and its inverse

GhostVector ghost(const WittVector& a) {
  std::vector<RingElement> entries;
  entries.reserve(a.trunc().size());
  for (auto n : a.trunc().members()) {
    RingElement g = RingElement::zero(a.ring());
    for (auto d : divisors(n))
      g = g + RingElement::from_int(a.ring(), d) *
                  a.component(d).pow(static_cast<std::uint64_t>(n / d));
    entries.push_back(std::move(g));
  }
  return GhostVector(a.trunc(), a.ring(), std::move(entries));
}

WittVector from_ghost(const GhostVector& g) {
  if (!g.ring().is_torsion_free())
    throw DescriptorError("from_ghost needs a torsion-free coefficient ring, got " +
                          g.ring().name());
  std::vector<RingElement> comps;
  comps.reserve(g.trunc().size());
  auto component_of = [&](std::int64_t d) -> const RingElement& {
    return comps[g.trunc().index_of(d)];
  };
  for (auto n : g.trunc().members()) {
    RingElement num = g.entry(n);
    for (auto d : divisors(n)) {
      if (d == n) continue;
      num = num - RingElement::from_int(g.ring(), d) *
                      component_of(d).pow(static_cast<std::uint64_t>(n / d));
    }
    try {
      comps.push_back(num.exact_div_int(n));
    } catch (const IntegralityError&) {
      throw IntegralityError("ghost vector has no preimage over " + g.ring().name() +
                                 ": component " + std::to_string(n) + " would be " + num.str() +
                                 "/" + std::to_string(n),
                             num.str());
    }
  }
  return WittVector(g.trunc(), g.ring(), std::move(comps));
}

// ---------------------------------------------------------------------------
// Structure polynomials

namespace {

MultiPoly ghost_poly(const TruncationSet& trunc, std::int64_t n, bool ys) {
  MultiPoly g(kZ);
  for (auto d : divisors(n)) {
    MultiPoly v = MultiPoly::variable(kZ, ys ? yvar(d) : xvar(d));
    g = g + v.pow(static_cast<unsigned>(n / d)) * RingElement::from_int(kZ, d);
  }
  return g;
}

/// Solve ghost_n(S) = target_n for the component polynomials S_n over Z,
/// certifying integrality at each division.
std::map<std::int64_t, MultiPoly> invert_ghost_polys(
    const TruncationSet& trunc, const std::function<MultiPoly(std::int64_t)>& target) {
  std::map<std::int64_t, MultiPoly> out;
  for (auto n : trunc.members()) {
    MultiPoly num = target(n);
    for (auto d : divisors(n)) {
      if (d == n) continue;
      num = num - out.at(d).pow(static_cast<unsigned>(n / d)) * RingElement::from_int(kZ, d);
    }
    out.emplace(n, num.exact_div_int(n));
  }
  return out;
}

}  // namespace

std::shared_ptr<const StructurePolys> structure_polys(const TruncationSet& trunc) {
  static std::mutex mu;
  static std::map<TruncationSet, std::shared_ptr<const StructurePolys>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(trunc);
    if (it != cache.end()) return it->second;
  }
  auto sp = std::make_shared<StructurePolys>(StructurePolys{
      trunc,
      invert_ghost_polys(trunc, [&](std::int64_t n) {
        return ghost_poly(trunc, n, false) + ghost_poly(trunc, n, true);
      }),
      invert_ghost_polys(trunc, [&](std::int64_t n) {
        return ghost_poly(trunc, n, false) * ghost_poly(trunc, n, true);
      }),
      invert_ghost_polys(trunc, [&](std::int64_t n) { return -ghost_poly(trunc, n, false); })});
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(trunc, std::move(sp)).first->second;
}

namespace {

void require_compatible(const WittVector& a, const WittVector& b) {
  if (a.trunc() != b.trunc())
    throw DescriptorError("truncation sets differ: " + a.trunc().str() + " vs " + b.trunc().str());
  if (a.ring() != b.ring())
    throw DescriptorError("coefficient rings differ: " + a.ring().name() + " vs " +
                          b.ring().name());
}

WittVector eval_structure(const std::map<std::int64_t, MultiPoly>& polys, const WittVector& a,
                          const WittVector* b) {
  std::map<std::string, RingElement> values;
  for (auto d : a.trunc().members()) {
    values.emplace(xvar(d), a.component(d));
    if (b) values.emplace(yvar(d), b->component(d));
  }
  std::vector<RingElement> comps;
  comps.reserve(a.trunc().size());
  for (auto n : a.trunc().members()) comps.push_back(polys.at(n).evaluate(values, a.ring()));
  return WittVector(a.trunc(), a.ring(), std::move(comps));
}

}  // namespace

WittVector witt_add(const WittVector& a, const WittVector& b) {
  require_compatible(a, b);
  return eval_structure(structure_polys(a.trunc())->sum, a, &b);
}

WittVector witt_mul(const WittVector& a, const WittVector& b) {
  require_compatible(a, b);
  return eval_structure(structure_polys(a.trunc())->product, a, &b);
}

WittVector witt_neg(const WittVector& a) {
  return eval_structure(structure_polys(a.trunc())->negation, a, nullptr);
}

WittVector witt_sub(const WittVector& a, const WittVector& b) {
  return witt_add(a, witt_neg(b));
}

WittVector witt_pow(const WittVector& a, unsigned e) {
  WittVector result = teichmuller(RingElement::one(a.ring()), a.trunc());
  WittVector base = a;
  while (e > 0) {
    if (e & 1) result = witt_mul(result, base);
    if (e >>= 1) base = witt_mul(base, base);
  }
  return result;
}

WittVector int_to_witt(const Int& k, const TruncationSet& trunc, const RingDescriptor& ring) {
  // k * [1] by binary doubling; works over every coefficient ring
  bool negative = k < 0;
  Int n = negative ? Int(-k) : k;
  WittVector acc = WittVector::zero(trunc, ring);
  WittVector base = teichmuller(RingElement::one(ring), trunc);
  while (n > 0) {
    if ((n & 1) != 0) acc = witt_add(acc, base);
    n >>= 1;
    if (n > 0) base = witt_add(base, base);
  }
  return negative ? witt_neg(acc) : acc;
}

WittVector witt_div_int(const WittVector& a, const Int& n) {
  if (n == 0) throw DescriptorError("witt_div_int: division by zero");
  if (!a.ring().is_torsion_free())
    throw DescriptorError("witt_div_int needs a torsion-free ring, got " + a.ring().name());
  RingDescriptor ff = a.ring().fraction_field();
  GhostVector g = ghost(a.with_ring(ff));
  std::vector<RingElement> scaled;
  scaled.reserve(g.entries().size());
  for (const auto& e : g.entries()) scaled.push_back(e.exact_div_int(n));
  WittVector over_ff = from_ghost(GhostVector(a.trunc(), ff, std::move(scaled)));
  return over_ff.with_ring(a.ring());
}

WittVector teichmuller(const RingElement& b, const TruncationSet& trunc) {
  std::vector<RingElement> comps(trunc.size(), RingElement::zero(b.ring()));
  comps[trunc.index_of(1)] = b;
  return WittVector(trunc, b.ring(), std::move(comps));
}

// ---------------------------------------------------------------------------
// Frobenius and Verschiebung

const std::vector<MultiPoly>& frobenius_polys(const TruncationSet& trunc, std::int64_t n) {
  static std::mutex mu;
  static std::map<std::pair<TruncationSet, std::int64_t>, std::vector<MultiPoly>> cache;
  std::pair<TruncationSet, std::int64_t> key{trunc, n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // ghost_m(F_n x) = ghost_{mn}(x): invert over the quotient truncation set
  TruncationSet target = trunc.quotient(n);
  auto polys = invert_ghost_polys(
      target, [&](std::int64_t m) { return ghost_poly(trunc, m * n, false); });
  std::vector<MultiPoly> ordered;
  ordered.reserve(target.size());
  for (auto m : target.members()) ordered.push_back(polys.at(m));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(ordered)).first->second;
}

WittVector frobenius(std::int64_t n, const WittVector& a) {
  if (n < 1) throw DescriptorError("frobenius index must be positive");
  if (!a.trunc().contains(n))
    throw DescriptorError("frobenius F_" + std::to_string(n) + " needs " + std::to_string(n) +
                          " in the truncation set " + a.trunc().str());
  TruncationSet target = a.trunc().quotient(n);
  const auto& polys = frobenius_polys(a.trunc(), n);
  std::map<std::string, RingElement> values;
  for (auto d : a.trunc().members()) values.emplace(xvar(d), a.component(d));
  std::vector<RingElement> comps;
  comps.reserve(polys.size());
  for (const auto& p : polys) comps.push_back(p.evaluate(values, a.ring()));
  return WittVector(target, a.ring(), std::move(comps));
}

WittVector verschiebung(std::int64_t n, const WittVector& a, const TruncationSet& target) {
  if (n < 1) throw DescriptorError("verschiebung index must be positive");
  std::vector<RingElement> comps;
  comps.reserve(target.size());
  for (auto m : target.members()) {
    if (m % n == 0 && a.trunc().contains(m / n))
      comps.push_back(a.component(m / n));
    else
      comps.push_back(RingElement::zero(a.ring()));
  }
  return WittVector(target, a.ring(), std::move(comps));
}

// ---------------------------------------------------------------------------
// Power-series presentation of big Witt vectors

TruncatedSeries::TruncatedSeries(RingDescriptor ring, std::vector<RingElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw SeriesFormatError("empty coefficient list");
  for (const auto& c : coeffs_)
    if (c.ring() != ring_) throw DescriptorError("series coefficient ring mismatch");
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.ring_ != b.ring_) throw DescriptorError("series rings differ");
  std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  std::vector<RingElement> c(n, RingElement::zero(a.ring_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n && j < b.coeffs_.size(); ++j)
      if (i < a.coeffs_.size()) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return TruncatedSeries(a.ring_, std::move(c));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool lead = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::string cs = coeffs_[i].str();
    bool negative = cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    bool composite = mag.find_first_of("+-", 1) != std::string::npos;
    if (composite && i > 0) {
      mag = "(" + cs + ")";
      negative = false;
    }
    std::string body;
    if (i == 0)
      body = mag;
    else {
      std::string tp = i == 1 ? "t" : "t^" + std::to_string(i);
      body = (mag == "1") ? tp : mag + "*" + tp;
    }
    if (lead) {
      if (negative) os << "-";
      os << body;
      lead = false;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
  }
  if (lead) os << "0";
  os << " + O(t^" << coeffs_.size() << ")";
  return os.str();
}

TruncatedSeries series_of(const WittVector& a) {
  if (!a.trunc().is_full())
    throw DescriptorError("series presentation needs the full truncation {1..N}, got " +
                          a.trunc().str());
  std::size_t n = a.trunc().size();
  std::vector<RingElement> c(n + 1, RingElement::zero(a.ring()));
  c[0] = RingElement::one(a.ring());
  TruncatedSeries acc(a.ring(), std::move(c));
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n); ++k) {
    std::vector<RingElement> f(n + 1, RingElement::zero(a.ring()));
    f[0] = RingElement::one(a.ring());
    f[static_cast<std::size_t>(k)] = -a.component(k);
    acc = acc * TruncatedSeries(a.ring(), std::move(f));
  }
  return acc;
}

WittVector witt_of_series(const TruncatedSeries& s) {
  if (!s.coeffs()[0].is_one())
    throw SeriesFormatError("constant term is " + s.coeffs()[0].str() + ", expected 1");
  std::size_t n = s.coeffs().size() - 1;
  if (n == 0) throw SeriesFormatError("series determines no components (order 1)");
  TruncationSet trunc = TruncationSet::full(static_cast<std::int64_t>(n));
  std::vector<RingElement> comps;
  comps.reserve(n);
  TruncatedSeries cur = s;
  for (std::size_t k = 1; k <= n; ++k) {
    RingElement ak = -cur.coeffs()[k];
    comps.push_back(ak);
    // divide by (1 - a_k t^k): multiply with sum_j a_k^j t^{kj}
    std::vector<RingElement> inv(n + 1, RingElement::zero(s.ring()));
    RingElement p = RingElement::one(s.ring());
    for (std::size_t j = 0; k * j <= n; ++j) {
      inv[k * j] = p;
      p = p * ak;
    }
    cur = cur * TruncatedSeries(s.ring(), std::move(inv));
  }
  return WittVector(trunc, s.ring(), std::move(comps));
}

// ---------------------------------------------------------------------------
// Artin-Hasse map W(R) -> W(W(R))

std::vector<WittVector> artin_hasse(const WittVector& a, std::int64_t p, int outer, int inner) {
  if (outer < 1 || inner < 1) throw DescriptorError("artin_hasse needs outer, inner >= 1");
  if (!a.ring().is_torsion_free())
    throw DescriptorError("artin_hasse needs a torsion-free ring, got " + a.ring().name());
  int len = static_cast<int>(a.trunc().size());
  if (a.trunc() != TruncationSet::p_typical(p, len))
    throw DescriptorError("artin_hasse expects a p-typical vector, got truncation " +
                          a.trunc().str());
  if (len < outer + inner)
    throw PrecisionError("artin_hasse needs length >= " + std::to_string(outer + inner) +
                         ", got " + std::to_string(len));

  RingDescriptor ff = a.ring().fraction_field();
  WittVector aq = a.with_ring(ff);
  TruncationSet inner_trunc = TruncationSet::p_typical(p, inner);

  // outer ghost targets: G_j = F_{p^j}(a) truncated to the inner length
  std::vector<WittVector> targets;
  targets.reserve(static_cast<std::size_t>(outer));
  std::int64_t q = 1;
  for (int j = 0; j < outer; ++j, q *= p)
    targets.push_back(frobenius(q, aq).truncate(inner_trunc));

  // invert the outer ghost map inside the ring W_inner(ff)
  std::vector<WittVector> delta;
  q = 1;
  for (int j = 0; j < outer; ++j, q *= p) {
    WittVector num = targets[static_cast<std::size_t>(j)];
    std::int64_t d = 1;
    for (int i = 0; i < j; ++i, d *= p) {
      WittVector term = witt_pow(delta[static_cast<std::size_t>(i)],
                                 static_cast<unsigned>(q / d));
      num = witt_sub(num, witt_mul(int_to_witt(d, inner_trunc, ff), term));
    }
    delta.push_back(witt_div_int(num, q));
  }

  // certify all components back into the original ring
  std::vector<WittVector> out;
  out.reserve(delta.size());
  for (const auto& v : delta) out.push_back(v.with_ring(a.ring()));
  return out;
}

std::ostream& operator<<(std::ostream& os, const WittVector& a) { return os << a.str(); }
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.str(); }

}  // namespace symwitt
