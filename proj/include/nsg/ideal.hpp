#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// A relative ideal of H: a co-finite set E of integers with E + H inside E.
/// This is the monomial model of a fractional ideal of k[[H]].
///
/// Stored as the minimum element (offset), a membership window over
/// [offset, offset + window.size()), and an implicit tail: every integer at
/// or above offset + window.size() is a member. The window is always trimmed,
/// so entry 0 is set and the last entry (if any) is clear.
class RelativeIdeal {
 public:
  /// Smallest relative ideal containing `gens`: the union of g + H.
  static RelativeIdeal from_generators(SemigroupPtr ambient, std::span<const Int> gens);
  static RelativeIdeal from_generators(SemigroupPtr ambient, std::initializer_list<Int> gens) {
    return from_generators(std::move(ambient), std::span<const Int>(gens.begin(), gens.size()));
  }

  /// Builds the set whose members in [lo, lo + table.size()) are given by
  /// `table` and which contains every integer from lo + table.size() on.
  /// Throws std::invalid_argument when the result is not H-stable.
  static RelativeIdeal from_window(SemigroupPtr ambient, Int lo,
                                   std::span<const std::uint8_t> table);

  const SemigroupPtr& ambient() const { return ambient_; }
  Int offset() const { return offset_; }
  Int min() const { return offset_; }
  const std::vector<std::uint8_t>& window() const { return window_; }
  /// First integer of the all-members tail.
  Int tail_from() const { return offset_ + static_cast<Int>(window_.size()); }

  bool contains(Int z) const {
    if (z < offset_) return false;
    const Int i = z - offset_;
    if (i >= static_cast<Int>(window_.size())) return true;
    return window_[static_cast<std::size_t>(i)] != 0;
  }

  /// Membership relative to the offset; indices past the window are members.
  bool at(Int i) const {
    if (i < 0) return false;
    if (i >= static_cast<Int>(window_.size())) return true;
    return window_[static_cast<std::size_t>(i)] != 0;
  }

  /// Members below the tail, ascending.
  std::vector<Int> small_elements() const;

  /// Same set translated by x.
  RelativeIdeal shifted(Int x) const;
  /// Translate so that the minimum is 0.
  RelativeIdeal normalized() const { return shifted(-offset_); }

  /// Pure tail starting at offset, i.e. a translate of N.
  bool is_interval() const { return window_.empty(); }

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b);

 private:
  RelativeIdeal(SemigroupPtr ambient, Int offset, std::vector<std::uint8_t> window)
      : ambient_(std::move(ambient)), offset_(offset), window_(std::move(window)) {}

  // Trims leading non-members and trailing members of a raw table.
  static RelativeIdeal trimmed(SemigroupPtr ambient, Int lo,
                               std::vector<std::uint8_t> table);

  friend RelativeIdeal product(const RelativeIdeal&, const RelativeIdeal&);
  friend RelativeIdeal quotient(const RelativeIdeal&, const RelativeIdeal&);

  SemigroupPtr ambient_;
  Int offset_ = 0;
  std::vector<std::uint8_t> window_;
};

// Named ideals of H. All except the canonical ideal throw nothing; the
// canonical and conductor ideals throw RegularSemigroup for H = N.

/// H itself, the unit ideal.
RelativeIdeal unit_ideal(const SemigroupPtr& h);
/// N, the integral closure viewed as a relative ideal.
RelativeIdeal naturals_ideal(const SemigroupPtr& h);
/// M = H \ {0}.
RelativeIdeal maximal_ideal(const SemigroupPtr& h);
/// C = [f + 1, inf), the conductor.
RelativeIdeal conductor_ideal(const SemigroupPtr& h);
/// K = { z : f - z not in H }, normalized so min(K) = 0.
RelativeIdeal canonical_ideal(const SemigroupPtr& h);
/// K built as the union of (f - x) + H over quasi-Frobenius numbers x.
RelativeIdeal canonical_ideal_from_quasi_frobenius(const SemigroupPtr& h);

/// Setwise sum E + F.
RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f);
/// n-fold sum nE; power(E, 0) is H.
RelativeIdeal power(const RelativeIdeal& e, Int n);
/// E - F = { z : z + F inside E }.
RelativeIdeal quotient(const RelativeIdeal& e, const RelativeIdeal& f);
/// E + (H - E).
RelativeIdeal trace(const RelativeIdeal& e);
/// K - E.
RelativeIdeal dual(const RelativeIdeal& e);

bool is_subset(const RelativeIdeal& e, const RelativeIdeal& f);
/// F = x + E for some integer x.
bool is_isomorphic(const RelativeIdeal& e, const RelativeIdeal& f);
/// K + E = min(K) + E.
bool is_ulrich(const RelativeIdeal& e, const RelativeIdeal& k);

/// "{0,1,4,5,6} ∪ [8,∞)"; a pure tail prints as "[c,∞)".
std::string format_ideal(const RelativeIdeal& e);

}  // namespace nsg
