// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#include "symwitt/ring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace symwitt {

// ---------------------------------------------------------------------------
// RingDescriptor

RingDescriptor RingDescriptor::rationals() {
  RingDescriptor d;
  d.kind_ = Kind::rationals;
  return d;
}

RingDescriptor RingDescriptor::mod(Int modulus) {
  if (modulus < 2) throw DescriptorError("modulus must be >= 2");
  RingDescriptor d;
  d.kind_ = Kind::mod;
  d.modulus_ = std::move(modulus);
  return d;
}

RingDescriptor RingDescriptor::poly(const RingDescriptor& base, std::string variable) {
  if (base.is_poly() && base.base().is_poly())
    throw DescriptorError("polynomial rings nest at most two levels");
  if (variable.empty()) throw DescriptorError("polynomial ring needs a variable name");
  RingDescriptor d;
  d.kind_ = Kind::poly;
  d.base_ = std::make_shared<RingDescriptor>(base);
  d.var_ = std::move(variable);
  return d;
}

const Int& RingDescriptor::modulus() const {
  if (!is_mod()) throw DescriptorError("not a Z/m ring: " + name());
  return modulus_;
}

const RingDescriptor& RingDescriptor::base() const {
  if (!is_poly()) throw DescriptorError("not a polynomial ring: " + name());
  return *base_;
}

const std::string& RingDescriptor::variable() const {
  if (!is_poly()) throw DescriptorError("not a polynomial ring: " + name());
  return var_;
}

bool RingDescriptor::is_torsion_free() const {
  switch (kind_) {
    case Kind::integers:
    case Kind::rationals:
      return true;
    case Kind::mod:
      return false;
    case Kind::poly:
      return base_->is_torsion_free();
  }
  return false;
}

bool RingDescriptor::has_rationals() const {
  switch (kind_) {
    case Kind::rationals:
      return true;
    case Kind::poly:
      return base_->has_rationals();
    default:
      return false;
  }
}

RingDescriptor RingDescriptor::fraction_field() const {
  switch (kind_) {
    case Kind::integers:
      return rationals();
    case Kind::rationals:
      return *this;
    case Kind::mod:
      throw DescriptorError("Z/m has no fraction field here");
    case Kind::poly:
      return poly(base_->fraction_field(), var_);
  }
  throw DescriptorError("bad descriptor");
}

std::string RingDescriptor::name() const {
  switch (kind_) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::mod:
      return "Z/" + modulus_.str();
    case Kind::poly:
      return base_->name() + "[" + var_ + "]";
  }
  return "?";
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case RingDescriptor::Kind::integers:
    case RingDescriptor::Kind::rationals:
      return true;
    case RingDescriptor::Kind::mod:
      return a.modulus_ == b.modulus_;
    case RingDescriptor::Kind::poly:
      return a.var_ == b.var_ && *a.base_ == *b.base_;
  }
  return false;
}

RingDescriptor parse_ring(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  auto bracket = s.find('[');
  if (bracket != std::string::npos) {
    if (s.back() != ']') throw DescriptorError("bad ring name: " + s);
    RingDescriptor base = parse_ring(s.substr(0, bracket));
    std::string var = s.substr(bracket + 1, s.size() - bracket - 2);
    return RingDescriptor::poly(base, var);
  }
  if (s == "Z") return RingDescriptor::integers();
  if (s == "Q") return RingDescriptor::rationals();
  if (s.rfind("Z/", 0) == 0) {
    Int m(s.substr(2));
    return RingDescriptor::mod(m);
  }
  throw DescriptorError("unknown ring: " + s);
}

// ---------------------------------------------------------------------------
// RingElement

namespace {

Int mod_reduce(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring())
    throw DescriptorError("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

}  // namespace

void RingElement::normalize() {
  switch (ring_.kind()) {
    case RingDescriptor::Kind::integers:
    case RingDescriptor::Kind::rationals:
      break;  // cpp_int / cpp_rational are always canonical
    case RingDescriptor::Kind::mod:
      std::get<Int>(payload_) = mod_reduce(std::get<Int>(payload_), ring_.modulus());
      break;
    case RingDescriptor::Kind::poly: {
      auto& cs = std::get<PolyCoeffs>(payload_);
      while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
      break;
    }
  }
}

RingElement RingElement::zero(const RingDescriptor& ring) { return from_int(ring, 0); }
RingElement RingElement::one(const RingDescriptor& ring) { return from_int(ring, 1); }

RingElement RingElement::from_int(const RingDescriptor& ring, const Int& value) {
  switch (ring.kind()) {
    case RingDescriptor::Kind::integers:
      return RingElement(ring, value);
    case RingDescriptor::Kind::rationals:
      return RingElement(ring, Rat(value));
    case RingDescriptor::Kind::mod:
      return RingElement(ring, mod_reduce(value, ring.modulus()));
    case RingDescriptor::Kind::poly: {
      PolyCoeffs cs;
      if (value != 0) cs.push_back(from_int(ring.base(), value));
      return RingElement(ring, std::move(cs));
    }
  }
  throw DescriptorError("bad descriptor");
}

RingElement RingElement::from_rat(const RingDescriptor& ring, const Rat& value) {
  if (is_integer(value)) return from_int(ring, rat_num(value));
  if (!ring.has_rationals())
    throw IntegralityError("value " + value.str() + " is not integral over " + ring.name());
  if (ring.is_rationals()) return RingElement(ring, value);
  // Q[x]: constant polynomial
  PolyCoeffs cs;
  cs.push_back(from_rat(ring.base(), value));
  return RingElement(ring, std::move(cs));
}

RingElement RingElement::generator(const RingDescriptor& ring) {
  if (!ring.is_poly()) throw DescriptorError("generator: not a polynomial ring");
  PolyCoeffs cs;
  cs.push_back(zero(ring.base()));
  cs.push_back(one(ring.base()));
  return RingElement(ring, std::move(cs));
}

RingElement RingElement::from_coeffs(const RingDescriptor& ring, PolyCoeffs coeffs) {
  if (!ring.is_poly()) throw DescriptorError("from_coeffs: not a polynomial ring");
  for (const auto& c : coeffs)
    if (c.ring() != ring.base()) throw DescriptorError("coefficient ring mismatch");
  RingElement e(ring, std::move(coeffs));
  e.normalize();
  return e;
}

bool RingElement::is_zero() const {
  switch (ring_.kind()) {
    case RingDescriptor::Kind::integers:
    case RingDescriptor::Kind::mod:
      return std::get<Int>(payload_) == 0;
    case RingDescriptor::Kind::rationals:
      return std::get<Rat>(payload_) == 0;
    case RingDescriptor::Kind::poly:
      return std::get<PolyCoeffs>(payload_).empty();
  }
  return false;
}

bool RingElement::is_one() const { return *this == one(ring_); }

const Int& RingElement::int_value() const {
  if (!std::holds_alternative<Int>(payload_))
    throw DescriptorError("element of " + ring_.name() + " has no integer payload");
  return std::get<Int>(payload_);
}

const Rat& RingElement::rat_value() const {
  if (!std::holds_alternative<Rat>(payload_))
    throw DescriptorError("element of " + ring_.name() + " has no rational payload");
  return std::get<Rat>(payload_);
}

const RingElement::PolyCoeffs& RingElement::coeffs() const {
  if (!std::holds_alternative<PolyCoeffs>(payload_))
    throw DescriptorError("element of " + ring_.name() + " is not a polynomial");
  return std::get<PolyCoeffs>(payload_);
}

Rat RingElement::as_rat() const {
  if (ring_.is_integers()) return Rat(int_value());
  if (ring_.is_rationals()) return rat_value();
  throw DescriptorError("as_rat: element of " + ring_.name());
}

RingElement RingElement::operator-() const {
  switch (ring_.kind()) {
    case RingDescriptor::Kind::integers:
    case RingDescriptor::Kind::mod: {
      RingElement r(ring_, Int(-std::get<Int>(payload_)));
      r.normalize();
      return r;
    }
    case RingDescriptor::Kind::rationals:
      return RingElement(ring_, Rat(-std::get<Rat>(payload_)));
    case RingDescriptor::Kind::poly: {
      PolyCoeffs cs = std::get<PolyCoeffs>(payload_);
      for (auto& c : cs) c = -c;
      return RingElement(ring_, std::move(cs));
    }
  }
  throw DescriptorError("bad descriptor");
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  switch (a.ring_.kind()) {
    case RingDescriptor::Kind::integers:
    case RingDescriptor::Kind::mod: {
      RingElement r(a.ring_, Int(std::get<Int>(a.payload_) + std::get<Int>(b.payload_)));
      r.normalize();
      return r;
    }
    case RingDescriptor::Kind::rationals:
      return RingElement(a.ring_, Rat(std::get<Rat>(a.payload_) + std::get<Rat>(b.payload_)));
    case RingDescriptor::Kind::poly: {
      const auto& ca = std::get<RingElement::PolyCoeffs>(a.payload_);
      const auto& cb = std::get<RingElement::PolyCoeffs>(b.payload_);
      RingElement::PolyCoeffs cs;
      cs.reserve(std::max(ca.size(), cb.size()));
      for (std::size_t i = 0; i < std::max(ca.size(), cb.size()); ++i) {
        if (i < ca.size() && i < cb.size())
          cs.push_back(ca[i] + cb[i]);
        else
          cs.push_back(i < ca.size() ? ca[i] : cb[i]);
      }
      RingElement r(a.ring_, std::move(cs));
      r.normalize();
      return r;
    }
  }
  throw DescriptorError("bad descriptor");
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  switch (a.ring_.kind()) {
    case RingDescriptor::Kind::integers:
    case RingDescriptor::Kind::mod: {
      RingElement r(a.ring_, Int(std::get<Int>(a.payload_) * std::get<Int>(b.payload_)));
      r.normalize();
      return r;
    }
    case RingDescriptor::Kind::rationals:
      return RingElement(a.ring_, Rat(std::get<Rat>(a.payload_) * std::get<Rat>(b.payload_)));
    case RingDescriptor::Kind::poly: {
      const auto& ca = std::get<RingElement::PolyCoeffs>(a.payload_);
      const auto& cb = std::get<RingElement::PolyCoeffs>(b.payload_);
      if (ca.empty() || cb.empty()) return RingElement::zero(a.ring_);
      RingElement::PolyCoeffs cs(ca.size() + cb.size() - 1, RingElement::zero(a.ring_.base()));
      for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j) cs[i + j] = cs[i + j] + ca[i] * cb[j];
      RingElement r(a.ring_, std::move(cs));
      r.normalize();
      return r;
    }
  }
  throw DescriptorError("bad descriptor");
}

RingElement RingElement::pow(std::uint64_t e) const {
  RingElement result = one(ring_);
  RingElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

RingElement RingElement::exact_div_int(const Int& n) const {
  if (n == 0) throw DescriptorError("exact_div_int: division by zero");
  switch (ring_.kind()) {
    case RingDescriptor::Kind::integers: {
      const Int& v = std::get<Int>(payload_);
      if (v % n != 0)
        throw IntegralityError(v.str() + " is not divisible by " + n.str(), v.str());
      return RingElement(ring_, Int(v / n));
    }
    case RingDescriptor::Kind::rationals:
      return RingElement(ring_, Rat(std::get<Rat>(payload_) / Rat(n)));
    case RingDescriptor::Kind::mod: {
      const Int& m = ring_.modulus();
      Int nn = mod_reduce(n, m);
      const Int& v = std::get<Int>(payload_);
      if (nn == 0) {
        if (v == 0) return *this;
        throw IntegralityError("no solution of " + n.str() + "*g = " + v.str() + " in " +
                                   ring_.name(),
                               v.str());
      }
      Int d = boost::multiprecision::gcd(nn, m);
      if (v % d != 0)
        throw IntegralityError("no solution of " + n.str() + "*g = " + v.str() + " in " +
                                   ring_.name(),
                               v.str());
      Int m2 = m / d, n2 = nn / d, v2 = v / d;
      // inverse of n2 mod m2 by extended Euclid
      Int t = 0, new_t = 1, r = m2, new_r = mod_reduce(n2, m2);
      while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
      }
      RingElement g(ring_, mod_reduce(t * v2, m2));
      g.normalize();
      return g;
    }
    case RingDescriptor::Kind::poly: {
      PolyCoeffs cs = std::get<PolyCoeffs>(payload_);
      for (auto& c : cs) c = c.exact_div_int(n);
      return RingElement(ring_, std::move(cs));
    }
  }
  throw DescriptorError("bad descriptor");
}

RingElement RingElement::substitute(const RingElement& value) const {
  if (!ring_.is_poly()) return *this;
  if (value.ring() != ring_) throw DescriptorError("substitute: value ring mismatch");
  const auto& cs = std::get<PolyCoeffs>(payload_);
  RingElement acc = zero(ring_);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    RingElement c = from_coeffs(ring_, {*it});
    acc = acc * value + c;
  }
  return acc;
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.ring_ != b.ring_) return false;
  return a.payload_ == b.payload_;
}

RingElement convert_element(const RingElement& value, const RingDescriptor& target) {
  const RingDescriptor& src = value.ring();
  if (src == target) return value;
  switch (src.kind()) {
    case RingDescriptor::Kind::integers:
      return RingElement::from_int(target, value.int_value());
    case RingDescriptor::Kind::rationals: {
      const Rat& v = value.rat_value();
      if (target.has_rationals() || is_integer(v)) return RingElement::from_rat(target, v);
      throw IntegralityError("cannot narrow " + v.str() + " into " + target.name(), v.str());
    }
    case RingDescriptor::Kind::mod:
      throw DescriptorError("no canonical map " + src.name() + " -> " + target.name());
    case RingDescriptor::Kind::poly: {
      if (!target.is_poly() || target.variable() != src.variable())
        throw DescriptorError("no canonical map " + src.name() + " -> " + target.name());
      RingElement::PolyCoeffs cs;
      cs.reserve(value.coeffs().size());
      for (const auto& c : value.coeffs()) cs.push_back(convert_element(c, target.base()));
      return RingElement::from_coeffs(target, std::move(cs));
    }
  }
  throw DescriptorError("bad descriptor");
}

// ---------------------------------------------------------------------------
// Text form

namespace {

// Minimal univariate polynomial / scalar parser:
//   expr  := ['-'|'+'] term (('+'|'-') term)*
//   term  := factor ('*' factor)*
//   factor:= NUMBER [ '/' NUMBER ] | VAR [ '^' NUMBER ]
struct ScalarParser {
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
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  RingElement factor() {
    skip_ws();
    if (pos >= text.size()) throw SyntaxError("unexpected end of input", pos + 1);
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = number();
      if (eat('/')) {
        Int den = number();
        if (den == 0) throw SyntaxError("zero denominator", pos);
        return RingElement::from_rat(ring, Rat(num, den));
      }
      return RingElement::from_int(ring, num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      if (!ring.is_poly() || name != ring.variable())
        throw SyntaxError("unknown variable '" + name + "' over " + ring.name(),
                          pos - name.size() + 1);
      std::uint64_t e = 1;
      if (eat('^')) e = static_cast<std::uint64_t>(number());
      return RingElement::generator(ring).pow(e);
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos + 1);
  }

  RingElement term() {
    RingElement r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  RingElement parse() {
    RingElement acc = RingElement::zero(ring);
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      RingElement t = term();
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

void print_signed_scalar(std::ostream& os, const std::string& s, bool lead) {
  if (!s.empty() && s[0] == '-') {
    os << (lead ? "-" : " - ") << s.substr(1);
  } else {
    if (!lead) os << " + ";
    os << s;
  }
}

}  // namespace

RingElement parse_element(const RingDescriptor& ring, std::string_view text) {
  ScalarParser p{ring, text};
  return p.parse();
}

std::string RingElement::str() const {
  switch (ring_.kind()) {
    case RingDescriptor::Kind::integers:
    case RingDescriptor::Kind::mod:
      return std::get<Int>(payload_).str();
    case RingDescriptor::Kind::rationals: {
      const Rat& r = std::get<Rat>(payload_);
      if (is_integer(r)) return rat_num(r).str();
      return rat_num(r).str() + "/" + rat_den(r).str();
    }
    case RingDescriptor::Kind::poly: {
      const auto& cs = std::get<PolyCoeffs>(payload_);
      if (cs.empty()) return "0";
      std::ostringstream os;
      bool lead = true;
      for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i].is_zero()) continue;
        std::string c = cs[i].str();
        bool composite = c.find_first_of("+-", 1) != std::string::npos;
        std::string mono;
        if (i == 0) {
          mono = composite ? "(" + c + ")" : c;
        } else {
          std::string xp = ring_.variable() + (i > 1 ? "^" + std::to_string(i) : "");
          if (composite)
            mono = "(" + c + ")*" + xp;
          else if (c == "1")
            mono = xp;
          else if (c == "-1")
            mono = "-" + xp;
          else
            mono = c + "*" + xp;
        }
        print_signed_scalar(os, mono, lead);
        lead = false;
      }
      return os.str();
    }
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const RingElement& e) { return os << e.str(); }

}  // namespace symwitt
