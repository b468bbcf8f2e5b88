#include "stackseries/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "stackseries/errors.hpp"

namespace stackseries {

namespace {

bool is_rearrangement_of_prefix(const std::vector<int>& values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

// Extends a partial embedding of pattern[0..depth) ending at position `from - 1`.
bool embed(std::span<const int> perm, std::span<const int> pattern, std::vector<int>& chosen,
           std::size_t from) {
  const std::size_t depth = chosen.size();
  if (depth == pattern.size()) {
    return true;
  }
  if (perm.size() - from < pattern.size() - depth) {
    return false;
  }
  // Tightest value window implied by the entries already matched.
  int lower = 0;
  int upper = static_cast<int>(perm.size()) + 1;
  for (std::size_t t = 0; t < depth; ++t) {
    if (pattern[t] < pattern[depth]) {
      lower = std::max(lower, chosen[t]);
    } else {
      upper = std::min(upper, chosen[t]);
    }
  }
  if (upper - lower < 2) {
    return false;
  }
  const std::size_t last = perm.size() - (pattern.size() - depth);
  for (std::size_t pos = from; pos <= last; ++pos) {
    const int v = perm[pos];
    if (v > lower && v < upper) {
      chosen.push_back(v);
      if (embed(perm, pattern, chosen, pos + 1)) {
        return true;
      }
      chosen.pop_back();
    }
  }
  return false;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (!is_rearrangement_of_prefix(values_)) {
    std::ostringstream msg;
    msg << "not a permutation of 1.." << values_.size() << ':';
    for (int v : values_) msg << ' ' << v;
    throw parse_error(msg.str());
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::from_pattern_of(std::span<const int> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.values_.resize(n);
  std::iota(p.values_.begin(), p.values_.end(), 1);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool Permutation::next_lexicographic() {
  return std::next_permutation(values_.begin(), values_.end());
}

Permutation Permutation::delete_at(std::size_t position) const {
  if (position >= values_.size()) {
    throw std::out_of_range("delete_at: position out of range");
  }
  const int removed = values_[position];
  Permutation out;
  out.values_.reserve(values_.size() - 1);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i == position) continue;
    const int v = values_[i];
    out.values_.push_back(v > removed ? v - 1 : v);
  }
  return out;
}

bool ShortlexLess::operator()(const Permutation& a, const Permutation& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PatternSet::PatternSet(std::initializer_list<Permutation> patterns) {
  for (const auto& p : patterns) insert(p);
}

void PatternSet::insert(Permutation pattern) {
  auto it = std::lower_bound(patterns_.begin(), patterns_.end(), pattern, ShortlexLess{});
  if (it != patterns_.end() && *it == pattern) return;
  patterns_.insert(it, std::move(pattern));
}

bool PatternSet::is_antichain() const {
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    for (std::size_t j = 0; j < patterns_.size(); ++j) {
      if (i != j && contains_pattern(patterns_[i], patterns_[j])) return false;
    }
  }
  return true;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  const bool separated = std::any_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c) || c == ',';
  });

  if (!separated) {
    if (text.size() > 9) {
      throw parse_error("contiguous digit form only supports n <= 9; separate the entries: '" +
                        std::string(text) + "'");
    }
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw parse_error("unexpected character in permutation '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
    return Permutation(std::move(values));
  }

  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = text[i];
    if (std::isspace(c) || c == ',') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + i) {
      throw parse_error("unexpected character in permutation '" + std::string(text) + "'");
    }
    const std::size_t consumed = static_cast<std::size_t>(ptr - (text.data() + i));
    i += consumed;
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',') {
      throw parse_error("unexpected character in permutation '" + std::string(text) + "'");
    }
    values.push_back(v);
  }
  return Permutation(std::move(values));
}

std::string to_string(const Permutation& perm) {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(perm[i]);
  }
  return out;
}

std::string to_compact_string(const Permutation& perm) {
  if (perm.size() > 9) return to_string(perm);
  std::string out;
  for (int v : perm) out += static_cast<char>('0' + v);
  return out;
}

bool contains_pattern(const Permutation& perm, const Permutation& pattern) {
  if (pattern.size() > perm.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return embed(perm.values(), pattern.values(), chosen, 0);
}

bool avoids_all(const Permutation& perm, const PatternSet& patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& q) { return contains_pattern(perm, q); });
}

Permutation direct_sum(const Permutation& alpha, const Permutation& beta) {
  std::vector<int> values(alpha.begin(), alpha.end());
  const int shift = static_cast<int>(alpha.size());
  for (int v : beta) values.push_back(v + shift);
  return Permutation(std::move(values));
}

bool is_sum_decomposable(const Permutation& perm) {
  if (perm.empty()) {
    throw parse_error("sum decomposability is undefined for the empty permutation");
  }
  int running_max = 0;
  for (std::size_t k = 1; k < perm.size(); ++k) {
    running_max = std::max(running_max, perm[k - 1]);
    if (running_max == static_cast<int>(k)) return true;
  }
  return false;
}

PermutationRange all_permutations(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw limit_error("permutation enumeration limited to n <= " + std::to_string(cap) +
                      " (requested " + std::to_string(n) + ")");
  }
  return PermutationRange(n);
}

}  // namespace stackseries
