#include "ringnc/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>

#include "ringnc/error.hpp"

namespace ringnc {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("partition needs at least one part");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  if (parts_.back() == 0) throw DomainError("partition parts must be positive");
  for (auto v : parts_) total_ += v;
}

std::string to_string(const Partition& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a.parts()[i]);
  }
  return out + ")";
}

Partition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  bool paren = pos < text.size() && text[pos] == '(';
  if (paren) ++pos;
  std::vector<unsigned> parts;
  while (true) {
    skip();
    std::size_t start = pos;
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned>(text[pos] - '0');
      if (v > 1000000) throw ParseError("part too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a part", start);
    if (v == 0) throw ParseError("parts must be positive", start);
    parts.push_back(static_cast<unsigned>(v));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (paren) {
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    skip();
  }
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  return Partition(std::move(parts));
}

namespace {

void require_range(unsigned k, unsigned limit, const char* what) {
  if (k < 1 || k > limit) {
    throw LimitError(std::string(what) + ": k must be in [1, " + std::to_string(limit) + "]");
  }
}

void generate(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(unsigned k) {
  require_range(k, kMaxEnumerateK, "enumerate_partitions");
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  generate(k, k, prefix, out);
  return out;
}

bool divides(const Partition& b, const Partition& a) {
  if (b.total() != a.total()) throw DomainError("divides: partitions of different totals");
  for (unsigned x : a.parts()) {
    bool found = false;
    for (unsigned y : b.parts()) {
      if (x % y == 0) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_maximal(const Partition& a) {
  // A divides C exactly when every part of C is a multiple of some part of A.
  // A is maximal iff no such C is shorter than A.
  const unsigned k = a.total();
  std::vector<unsigned> usable;
  for (unsigned c = 1; c <= k; ++c) {
    for (unsigned y : a.parts()) {
      if (c % y == 0) {
        usable.push_back(c);
        break;
      }
    }
  }
  constexpr unsigned kInf = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> fewest(k + 1, kInf);
  fewest[0] = 0;
  for (unsigned s = 1; s <= k; ++s) {
    for (unsigned c : usable) {
      if (c > s) break;
      if (fewest[s - c] != kInf) fewest[s] = std::min(fewest[s], fewest[s - c] + 1);
    }
  }
  return fewest[k] >= a.length();
}

bool is_maximal_full_scan(const Partition& a) {
  for (const auto& b : enumerate_partitions(a.total())) {
    if (!(b == a) && divides(a, b)) return false;
  }
  return true;
}

std::vector<Partition> maximal_partitions(unsigned k) {
  require_range(k, kMaxMaximalK, "maximal_partitions");
  std::vector<Partition> out;
  for (auto& a : enumerate_partitions(k)) {
    if (is_maximal(a)) out.push_back(std::move(a));
  }
  return out;
}

bool is_len2_maximal(unsigned k, unsigned m) {
  if (m < 1 || 2 * m > k) throw DomainError("is_len2_maximal: need 1 <= m <= k/2");
  return k % m != 0;
}

bool has_unique_maximal(unsigned k) {
  auto maximal = maximal_partitions(k);
  return maximal.size() == 1 && maximal.front().length() == 1;
}

}  // namespace ringnc
