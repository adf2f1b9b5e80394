#pragma once

#include <vector>

#include "nsg/ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

struct BlowupResult {
  /// chain[n] = nE - nE for n = 0 .. stable_at + 1.
  std::vector<RelativeIdeal> chain;
  /// Reduction number of E; the chain is constant from here on.
  Int stable_at = 0;
  /// The stable value of the chain, as an ideal over H.
  RelativeIdeal blowup_ideal;
  /// The same set read as a numerical semigroup containing H.
  NumericalSemigroup blowup;
  /// H - B(E).
  RelativeIdeal conductor;
};

/// Least n >= 1 with (n+1)E = min(E) + nE. The search is capped at
/// frobenius + 2; hitting the cap raises ReductionCapExceeded.
Int reduction_number(const RelativeIdeal& e);

/// Full blowup chain of E. Throws RegularSemigroup over H = N.
BlowupResult blowup(const RelativeIdeal& e);

/// Reduction number of the canonical ideal under the monomial reduction
/// min(K) = 0.
Int canonical_reduction_number(const SemigroupPtr& h);

/// M - M for M = H \ {0}. Equals H together with its quasi-Frobenius numbers.
NumericalSemigroup lipman(const SemigroupPtr& h);

/// Reads a relative ideal that contains 0, lies inside N and is closed under
/// addition as a numerical semigroup.
NumericalSemigroup as_semigroup(const RelativeIdeal& e);

}  // namespace nsg
