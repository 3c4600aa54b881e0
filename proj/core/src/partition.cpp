// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#include "symwitt/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace symwitt {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned p : parts_)
    if (p == 0) throw DescriptorError("partition parts must be positive");
  std::sort(parts_.rbegin(), parts_.rend());
}

unsigned Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::union_with(const Partition& other) const {
  std::vector<unsigned> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(merged), std::greater<unsigned>());
  Partition r;
  r.parts_ = std::move(merged);
  return r;
}

Partition Partition::scaled(unsigned k) const {
  Partition r = *this;
  for (auto& p : r.parts_) p *= k;
  return r;
}

std::vector<std::pair<unsigned, unsigned>> Partition::multiplicities() const {
  std::vector<std::pair<unsigned, unsigned>> mult;
  for (unsigned p : parts_) {
    if (!mult.empty() && mult.back().first == p)
      ++mult.back().second;
    else
      mult.push_back({p, 1});
  }
  return mult;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << "]";
  return os.str();
}

Partition Partition::parse(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) { throw SyntaxError(msg, i + 1); };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') fail("expected '['");
  ++i;
  std::vector<unsigned> parts;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) fail("expected part");
      parts.push_back(static_cast<unsigned>(std::stoul(std::string(text.substr(start, i - start)))));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  skip();
  if (i != text.size()) fail("trailing input");
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  // reverse-lexicographic: always choose the largest next part first
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
    if (rest == 0) {
      out.push_back(Partition(current));
      return;
    }
    for (unsigned k = std::min(rest, max_part); k >= 1; --k) {
      current.push_back(k);
      rec(rest - k, k);
      current.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

std::vector<Partition> partitions_with_parts(unsigned n, const std::vector<unsigned>& parts) {
  std::vector<unsigned> allowed = parts;
  std::sort(allowed.rbegin(), allowed.rend());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, std::size_t)> rec = [&](unsigned rest, std::size_t from) {
    if (rest == 0) {
      out.push_back(Partition(current));
      return;
    }
    for (std::size_t i = from; i < allowed.size(); ++i) {
      if (allowed[i] > rest) continue;
      current.push_back(allowed[i]);
      rec(rest - allowed[i], i);
      current.pop_back();
    }
  };
  rec(n, 0);
  return out;
}

}  // namespace symwitt
