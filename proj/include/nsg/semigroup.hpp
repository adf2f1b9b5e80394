#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nsg {

using Int = std::int64_t;

inline constexpr Int kDefaultFrobeniusCap = 1'000'000;

/// Cap on the Frobenius number accepted by constructors. Reads
/// NSG_FROBENIUS_CAP once; falls back to kDefaultFrobeniusCap.
Int frobenius_cap();

/// A co-finite additive submonoid of the nonnegative integers.
///
/// Membership is stored explicitly on [0, frobenius + 1]; everything above the
/// Frobenius number is a member implicitly. Values are immutable once built.
class NumericalSemigroup {
 public:
  /// Closure of `gens` under addition. Generators are minimalized.
  /// Throws NotNumerical when gcd(gens) != 1 and FrobeniusCapExceeded when
  /// the Frobenius number would exceed `cap`.
  static NumericalSemigroup from_generators(std::span<const Int> gens,
                                            Int cap = frobenius_cap());
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  /// Builds H from its membership table on [0, n): the table must describe a
  /// submonoid whose every element >= n is a member. Trailing members are
  /// trimmed. Throws NotNumerical if the table is not closed under addition.
  static NumericalSemigroup from_membership(std::span<const std::uint8_t> table);

  /// The semigroup with the given gap set. Throws NotNumerical when the
  /// complement is not closed under addition.
  static NumericalSemigroup from_gaps(std::span<const Int> gaps);

  /// The full monoid of nonnegative integers.
  static NumericalSemigroup naturals();

  const std::vector<Int>& min_generators() const { return generators_; }
  Int frobenius() const { return frobenius_; }
  Int conductor() const { return frobenius_ + 1; }
  Int genus() const { return genus_; }
  Int multiplicity() const { return generators_.front(); }
  Int embedding_dimension() const { return static_cast<Int>(generators_.size()); }
  bool is_naturals() const { return frobenius_ < 0; }

  bool contains(Int z) const {
    if (z < 0) return false;
    if (z > frobenius_) return true;
    return membership_[static_cast<std::size_t>(z)] != 0;
  }

  /// Membership table over [0, frobenius + 1].
  const std::vector<std::uint8_t>& membership() const { return membership_; }

  /// Gaps in increasing order.
  std::vector<Int> gaps() const;

  /// Quasi-Frobenius (pseudo-Frobenius) numbers: gaps x with x + h in H for
  /// every nonzero h in H. Throws RegularSemigroup for H = N.
  std::vector<Int> quasi_frobenius() const;

  Int type() const;
  bool is_symmetric() const { return type() == 1; }

  /// Least element of H in each residue class mod m. Throws NotAMember
  /// unless m is a nonzero element of H.
  std::vector<Int> apery_set(Int m) const;

  bool has_minimal_multiplicity() const {
    return embedding_dimension() == multiplicity();
  }

  /// "<4,5,11>" style rendering of the minimal generators.
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  NumericalSemigroup() = default;
  void finish_from_membership();

  std::vector<Int> generators_;
  std::vector<std::uint8_t> membership_;
  Int frobenius_ = -1;
  Int genus_ = 0;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline SemigroupPtr share(NumericalSemigroup h) {
  return std::make_shared<const NumericalSemigroup>(std::move(h));
}

/// Throws RegularSemigroup when `h` is N; used by every operation that
/// assumes a singular ring.
void require_singular(const NumericalSemigroup& h);

}  // namespace nsg
