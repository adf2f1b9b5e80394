#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

inline constexpr Int kDefaultIdealFrobeniusCap = 20;

/// Lexicographic order on gap sets; the canonical order for every stream.
bool gap_order_less(const NumericalSemigroup& a, const NumericalSemigroup& b);

/// Children in the semigroup tree: H \ {g} for each minimal generator g > f.
std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& h);

/// Every numerical semigroup of genus g, each once, in gap order.
std::vector<NumericalSemigroup> semigroups_of_genus(Int g);

/// Every numerical semigroup with Frobenius number at most fmax (H = N
/// included), in gap order.
std::vector<NumericalSemigroup> semigroups_with_frobenius_at_most(Int fmax);

/// Visits every normalized relative ideal of H (min 0) exactly once, in
/// increasing order of the gap-choice bitmask. Throws CapExceeded when
/// frobenius > cap and RegularSemigroup for N.
void for_each_relative_ideal(const SemigroupPtr& h,
                             const std::function<void(const RelativeIdeal&)>& visit,
                             Int cap = kDefaultIdealFrobeniusCap);
std::vector<RelativeIdeal> relative_ideals(const SemigroupPtr& h,
                                           Int cap = kDefaultIdealFrobeniusCap);

struct UlrichCheck {
  Int ideals = 0;
  Int ulrich = 0;
  /// Every K-Ulrich ideal is isomorphic to N.
  bool all_ulrich_are_naturals = true;
  /// A K-Ulrich ideal not isomorphic to N, when one exists.
  std::optional<RelativeIdeal> witness;
  bool mcc = false;
  bool agrees() const { return all_ulrich_are_naturals == mcc; }
};

/// Scans all normalized relative ideals for K-Ulrich ones and compares the
/// outcome with the quasi-Frobenius criterion.
UlrichCheck verify_ulrich_classification(const SemigroupPtr& h,
                                         Int cap = kDefaultIdealFrobeniusCap);

struct CensusRow {
  Int genus = 0;
  Int total = 0;
  Int gorenstein = 0;
  Int almost = 0;
  Int nearly = 0;
  Int far_flung = 0;
  Int mcc = 0;
  Int mcc_not_far_flung = 0;
  Int violations = 0;
  /// "<gens>: check: detail" per failure, sorted.
  std::vector<std::string> violation_details;

  CensusRow& operator+=(const CensusRow& other);
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Classification plus every census check for one semigroup, folded into a
/// single-semigroup row.
CensusRow census_entry(const NumericalSemigroup& h);

/// Reference census over genus 1..g_max: one layer at a time, in order.
std::vector<CensusRow> census_serial(Int g_max);

/// Same rows as census_serial; tree expansion and classification of each
/// layer run on OpenMP threads.
std::vector<CensusRow> census_parallel(Int g_max);

}  // namespace nsg
