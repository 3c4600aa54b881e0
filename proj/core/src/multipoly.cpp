// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#include "symwitt/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace symwitt {

// ---------------------------------------------------------------------------
// Variables and monomials

bool variable_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    long long num = -1;
    if (i < s.size() && s.size() - i <= 18) num = std::stoll(s.substr(i));
    return std::pair<std::string, long long>(s.substr(0, i), num);
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na != nb) return na < nb;
  return a < b;
}

Monomial Monomial::variable(const std::string& name, unsigned exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({name, exp});
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

unsigned Monomial::exponent(const std::string& name) const {
  for (const auto& [v, e] : factors_)
    if (v == name) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < other.factors_.size()) {
    if (factors_[i].first == other.factors_[j].first) {
      r.factors_.push_back({factors_[i].first, factors_[i].second + other.factors_[j].second});
      ++i, ++j;
    } else if (variable_less(factors_[i].first, other.factors_[j].first)) {
      r.factors_.push_back(factors_[i++]);
    } else {
      r.factors_.push_back(other.factors_[j++]);
    }
  }
  while (i < factors_.size()) r.factors_.push_back(factors_[i++]);
  while (j < other.factors_.size()) r.factors_.push_back(other.factors_[j++]);
  return r;
}

Monomial Monomial::pow(unsigned e) const {
  Monomial r;
  if (e == 0) return r;
  r.factors_ = factors_;
  for (auto& [v, x] : r.factors_) x *= e;
  return r;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : factors_) {
    if (!first) os << "*";
    os << v;
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

bool MonomialDisplayLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  // lexicographic on the merged variable sequence: the monomial with the
  // larger exponent on the earliest variable comes first
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
      ++i, ++j;
    } else if (variable_less(fa[i].first, fb[j].first)) {
      return true;  // a has positive exponent on an earlier variable
    } else {
      return false;
    }
  }
  return i < fa.size();
}

// ---------------------------------------------------------------------------
// MultiPoly

void MultiPoly::add_term(const Monomial& m, const RingElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(const RingDescriptor& ring, const RingElement& c) {
  if (c.ring() != ring) throw DescriptorError("constant coefficient ring mismatch");
  MultiPoly p(ring);
  p.add_term(Monomial(), c);
  return p;
}

MultiPoly MultiPoly::constant(const RingDescriptor& ring, const Int& c) {
  return constant(ring, RingElement::from_int(ring, c));
}

MultiPoly MultiPoly::variable(const RingDescriptor& ring, const std::string& name, unsigned exp) {
  MultiPoly p(ring);
  p.add_term(Monomial::variable(name, exp), RingElement::one(ring));
  return p;
}

MultiPoly MultiPoly::from_terms(const RingDescriptor& ring, TermMap terms) {
  MultiPoly p(ring);
  for (auto& [m, c] : terms) {
    if (c.ring() != ring) throw DescriptorError("term coefficient ring mismatch");
    p.add_term(m, c);
  }
  return p;
}

unsigned MultiPoly::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::vector<std::string> MultiPoly::variables() const {
  std::vector<std::string> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), variable_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

RingElement MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RingElement::zero(ring_) : it->second;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

RingElement MultiPoly::constant_term() const { return coefficient(Monomial()); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ != b.ring_)
    throw DescriptorError("polynomial rings differ: " + a.ring_.name() + " vs " + b.ring_.name());
  MultiPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ != b.ring_)
    throw DescriptorError("polynomial rings differ: " + a.ring_.name() + " vs " + b.ring_.name());
  MultiPoly r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::operator*(const RingElement& c) const {
  if (c.ring() != ring_) throw DescriptorError("scalar ring mismatch");
  MultiPoly r(ring_);
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    if (e >>= 1) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
  for (const auto& [v, p] : bindings)
    if (p.ring() != ring_) throw DescriptorError("binding for '" + v + "' has ring " +
                                                 p.ring().name() + ", expected " + ring_.name());
  // cache powers of each binding as needed
  std::map<std::string, std::vector<MultiPoly>> powers;
  MultiPoly acc(ring_);
  for (const auto& [m, c] : terms_) {
    MultiPoly term = constant(ring_, c);
    for (const auto& [v, e] : m.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) throw SubstitutionError("unbound variable '" + v + "'");
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(constant(ring_, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * it->second);
      term = term * pw[e];
    }
    acc = acc + term;
  }
  return acc;
}

RingElement MultiPoly::evaluate(const std::map<std::string, RingElement>& values,
                                const RingDescriptor& target) const {
  for (const auto& [v, x] : values)
    if (x.ring() != target) throw DescriptorError("value for '" + v + "' not in " + target.name());
  std::map<std::string, std::vector<RingElement>> powers;
  RingElement acc = RingElement::zero(target);
  for (const auto& [m, c] : terms_) {
    RingElement term = convert_element(c, target);
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw SubstitutionError("unbound variable '" + v + "'");
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(RingElement::one(target));
      while (pw.size() <= e) pw.push_back(pw.back() * it->second);
      term = term * pw[e];
    }
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::exact_div_int(const Int& n) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    try {
      r.terms_.emplace(m, c.exact_div_int(n));
    } catch (const IntegralityError&) {
      throw IntegralityError("coefficient not divisible by " + n.str(),
                             MultiPoly::from_terms(ring_, {{m, c}}).str());
    }
  }
  return r;
}

MultiPoly MultiPoly::with_ring(const RingDescriptor& target) const {
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    try {
      r.add_term(m, convert_element(c, target));
    } catch (const IntegralityError&) {
      throw IntegralityError("coefficient does not lie in " + target.name(),
                             MultiPoly::from_terms(ring_, {{m, c}}).str());
    }
  }
  return r;
}

MultiPoly MultiPoly::swap_variables(const std::string& a, const std::string& b) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial swapped;
    for (const auto& [v, e] : m.factors()) {
      const std::string& w = (v == a) ? b : (v == b) ? a : v;
      swapped = swapped * Monomial::variable(w, e);
    }
    r.add_term(swapped, c);
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool negative = !cs.empty() && cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    bool composite = mag.find_first_of("+-", 1) != std::string::npos ||
                     (c.ring().is_poly() && !m.is_unit());
    if (composite) {
      mag = "(" + cs + ")";
      negative = false;
    }
    std::string body;
    if (m.is_unit())
      body = mag;
    else if (mag == "1")
      body = m.str();
    else
      body = mag + "*" + m.str();
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

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.factors()) exps[v] = e;
    terms.push_back({{"coeff", c.str()}, {"exps", exps}});
  }
  return terms;
}

MultiPoly MultiPoly::from_json(const RingDescriptor& ring, const nlohmann::json& j) {
  MultiPoly p(ring);
  for (const auto& t : j) {
    Monomial m;
    for (auto it = t.at("exps").begin(); it != t.at("exps").end(); ++it)
      m = m * Monomial::variable(it.key(), it.value().get<unsigned>());
    p.add_term(m, parse_element(ring, t.at("coeff").get<std::string>()));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Text parser:  expr := ['-'] term (('+'|'-') term)*
//               term := factor ('*' factor)*
//               factor := NUMBER ['/' NUMBER] | VAR ['^' NUMBER]

namespace {

struct PolyParser {
  const RingDescriptor& ring;
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw SyntaxError("expected number", pos + 1);
    return Int(std::string(text.substr(start, pos - start)));
  }

  MultiPoly factor() {
    skip_ws();
    if (pos >= text.size()) throw SyntaxError("unexpected end of input", pos + 1);
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = number();
      if (eat('/')) {
        Int den = number();
        if (den == 0) throw SyntaxError("zero denominator", pos);
        return MultiPoly::constant(ring, RingElement::from_rat(ring, Rat(num, den)));
      }
      return MultiPoly::constant(ring, num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name(text.substr(start, pos - start));
      unsigned e = 1;
      if (eat('^')) e = static_cast<unsigned>(number());
      return MultiPoly::variable(ring, name, e);
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos + 1);
  }

  MultiPoly parse() {
    MultiPoly acc(ring);
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      MultiPoly t = factor();
      while (eat('*')) t = t * factor();
      acc = neg ? acc - t : acc + t;
      skip_ws();
      if (eat('-'))
        neg = true;
      else if (eat('+'))
        neg = false;
      else
        break;
    }
    skip_ws();
    if (pos != text.size()) throw SyntaxError("trailing input", pos + 1);
    return acc;
  }
};

}  // namespace

MultiPoly parse_poly(const RingDescriptor& ring, std::string_view text) {
  PolyParser p{ring, text};
  return p.parse();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace symwitt
