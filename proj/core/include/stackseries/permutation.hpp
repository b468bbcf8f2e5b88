#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stackseries {

/// A permutation of 1..n in one-line notation. The empty permutation is allowed.
///
/// Construction validates that the values form a rearrangement of 1..n, so every
/// Permutation in circulation is well formed.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  /// Builds the permutation with the same relative order as `values` (which must be distinct).
  static Permutation from_pattern_of(std::span<const int> values);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool is_identity() const noexcept;

  /// Steps to the lexicographic successor; returns false (leaving the identity) after the last one.
  bool next_lexicographic();

  /// Removes the entry at `position` and renormalizes the survivors to 1..n-1.
  Permutation delete_at(std::size_t position) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> values_;
};

/// Length first, then lexicographic on one-line notation.
struct ShortlexLess {
  bool operator()(const Permutation& a, const Permutation& b) const;
};

/// A collection of patterns kept in shortlex order without duplicates.
class PatternSet {
public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Permutation> patterns);

  void insert(Permutation pattern);
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  auto begin() const noexcept { return patterns_.begin(); }
  auto end() const noexcept { return patterns_.end(); }

  /// True when no member contains another member.
  bool is_antichain() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
  std::vector<Permutation> patterns_;
};

/// Accepts "2 4 5 1 3", "2,4,5,1,3", or (for n <= 9) "24513".
Permutation parse_permutation(std::string_view text);

/// Separated form: "2 4 5 1 3".
std::string to_string(const Permutation& perm);

/// Contiguous digits ("24513"); falls back to the separated form when n > 9.
std::string to_compact_string(const Permutation& perm);

bool contains_pattern(const Permutation& perm, const Permutation& pattern);
bool avoids_all(const Permutation& perm, const PatternSet& patterns);

Permutation direct_sum(const Permutation& alpha, const Permutation& beta);

/// True iff some proper nonempty prefix of length k holds exactly {1..k}.
/// Throws parse_error for the empty permutation.
bool is_sum_decomposable(const Permutation& perm);

inline constexpr std::size_t kDefaultEnumerationCap = 10;

/// Lazy lexicographic walk over all permutations of length n.
class PermutationRange {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      done_ = !current_.next_lexicographic();
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

  private:
    friend class PermutationRange;
    explicit iterator(std::size_t n) : current_(Permutation::identity(n)), done_(false) {}

    Permutation current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }
  std::size_t length() const noexcept { return n_; }

private:
  friend PermutationRange all_permutations(std::size_t, std::size_t);
  explicit PermutationRange(std::size_t n) : n_(n) {}
  std::size_t n_;
};

/// All n! permutations of length n in lexicographic order. Throws limit_error when n > cap.
PermutationRange all_permutations(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

}  // namespace stackseries
