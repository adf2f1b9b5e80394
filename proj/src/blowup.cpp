#include "nsg/blowup.hpp"

#include <algorithm>
#include <string>

#include "nsg/error.hpp"

namespace nsg {

namespace {

Int chain_cap(const NumericalSemigroup& h) { return std::max<Int>(h.frobenius() + 2, 1); }

}  // namespace

NumericalSemigroup as_semigroup(const RelativeIdeal& e) {
  if (e.min() != 0) {
    throw Error(ErrorKind::NotNumerical, "not numerical: ideal does not have minimum 0");
  }
  std::vector<std::uint8_t> table = e.window();
  table.push_back(1);
  return NumericalSemigroup::from_membership(table);
}

Int reduction_number(const RelativeIdeal& e) {
  const Int cap = chain_cap(*e.ambient());
  RelativeIdeal current = e;
  for (Int n = 1; n <= cap; ++n) {
    RelativeIdeal next = product(current, e);
    if (next == current.shifted(e.min())) return n;
    current = std::move(next);
  }
  throw Error(ErrorKind::ReductionCapExceeded,
              "reduction number search exceeded cap " + std::to_string(cap) + " over " +
                  e.ambient()->to_string());
}

BlowupResult blowup(const RelativeIdeal& e) {
  require_singular(*e.ambient());
  const Int cap = chain_cap(*e.ambient());

  std::vector<RelativeIdeal> chain;
  RelativeIdeal pow = unit_ideal(e.ambient());
  chain.push_back(quotient(pow, pow));
  Int stable_at = -1;
  for (Int n = 1; n <= cap + 1; ++n) {
    RelativeIdeal next = product(pow, e);
    chain.push_back(quotient(next, next));
    // Stable at n-1 only when both the chain plateaus and the power
    // recursion holds; a plateau alone can be premature.
    if (n >= 2 && chain[n - 1] == chain[n] && next == pow.shifted(e.min())) {
      stable_at = n - 1;
      break;
    }
    pow = std::move(next);
  }
  if (stable_at < 0) {
    throw Error(ErrorKind::ReductionCapExceeded,
                "blowup chain did not stabilize within " + std::to_string(cap) + " steps");
  }

  RelativeIdeal stable = chain[static_cast<std::size_t>(stable_at)];
  RelativeIdeal cond = quotient(unit_ideal(e.ambient()), stable);
  NumericalSemigroup b = as_semigroup(stable);
  return BlowupResult{std::move(chain), stable_at, std::move(stable), std::move(b),
                      std::move(cond)};
}

Int canonical_reduction_number(const SemigroupPtr& h) {
  return reduction_number(canonical_ideal(h));
}

NumericalSemigroup lipman(const SemigroupPtr& h) {
  require_singular(*h);
  const RelativeIdeal m = maximal_ideal(h);
  return as_semigroup(quotient(m, m));
}

}  // namespace nsg
