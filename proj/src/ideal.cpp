#include "nsg/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nsg/error.hpp"

namespace nsg {

namespace {

void require_same_ambient(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (e.ambient() == f.ambient()) return;
  if (e.ambient() && f.ambient() && *e.ambient() == *f.ambient()) return;
  throw Error(ErrorKind::AmbientMismatch,
              "ambient mismatch: ideals live over different semigroups");
}

}  // namespace

RelativeIdeal RelativeIdeal::trimmed(SemigroupPtr ambient, Int lo,
                                     std::vector<std::uint8_t> table) {
  const auto first = std::find(table.begin(), table.end(), std::uint8_t{1});
  const Int skip = first - table.begin();
  table.erase(table.begin(), first);
  const auto last_gap = std::find(table.rbegin(), table.rend(), std::uint8_t{0});
  table.resize(static_cast<std::size_t>(table.rend() - last_gap));
  return RelativeIdeal(std::move(ambient), lo + skip, std::move(table));
}

RelativeIdeal RelativeIdeal::from_generators(SemigroupPtr ambient,
                                             std::span<const Int> gens) {
  if (gens.empty()) throw std::invalid_argument("ideal generator list is empty");
  const Int lo = *std::min_element(gens.begin(), gens.end());
  const Int hi = lo + ambient->conductor();
  std::vector<std::uint8_t> table(static_cast<std::size_t>(hi - lo), 0);
  for (Int g : gens) {
    for (Int z = g; z < hi; ++z) {
      if (ambient->contains(z - g)) table[static_cast<std::size_t>(z - lo)] = 1;
    }
  }
  return trimmed(std::move(ambient), lo, std::move(table));
}

RelativeIdeal RelativeIdeal::from_window(SemigroupPtr ambient, Int lo,
                                         std::span<const std::uint8_t> table) {
  RelativeIdeal e = trimmed(std::move(ambient), lo,
                            std::vector<std::uint8_t>(table.begin(), table.end()));
  for (Int x : e.small_elements()) {
    for (Int g : e.ambient_->min_generators()) {
      if (!e.contains(x + g)) {
        throw std::invalid_argument("window is not stable under addition of H");
      }
    }
  }
  return e;
}

std::vector<Int> RelativeIdeal::small_elements() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i]) out.push_back(offset_ + static_cast<Int>(i));
  }
  return out;
}

RelativeIdeal RelativeIdeal::shifted(Int x) const {
  return RelativeIdeal(ambient_, offset_ + x, window_);
}

bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
  require_same_ambient(a, b);
  return a.offset_ == b.offset_ && a.window_ == b.window_;
}

RelativeIdeal unit_ideal(const SemigroupPtr& h) {
  return RelativeIdeal::from_generators(h, {0});
}

RelativeIdeal naturals_ideal(const SemigroupPtr& h) {
  return RelativeIdeal::from_window(h, 0, {});
}

RelativeIdeal maximal_ideal(const SemigroupPtr& h) {
  return RelativeIdeal::from_generators(h, h->min_generators());
}

RelativeIdeal conductor_ideal(const SemigroupPtr& h) {
  require_singular(*h);
  return RelativeIdeal::from_window(h, h->conductor(), {});
}

RelativeIdeal canonical_ideal(const SemigroupPtr& h) {
  require_singular(*h);
  const Int f = h->frobenius();
  std::vector<std::uint8_t> table(static_cast<std::size_t>(f + 1));
  for (Int z = 0; z <= f; ++z) table[static_cast<std::size_t>(z)] = h->contains(f - z) ? 0 : 1;
  return RelativeIdeal::from_window(h, 0, table);
}

RelativeIdeal canonical_ideal_from_quasi_frobenius(const SemigroupPtr& h) {
  std::vector<Int> gens;
  for (Int x : h->quasi_frobenius()) gens.push_back(h->frobenius() - x);
  return RelativeIdeal::from_generators(h, gens);
}

RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  // Past min(cE, cF) above the combined offset, every integer is a sum of a
  // tail element of one factor and the minimum of the other.
  const Int len = std::min(static_cast<Int>(e.window_.size()),
                           static_cast<Int>(f.window_.size()));
  std::vector<std::uint8_t> table(static_cast<std::size_t>(len), 0);
  for (Int k = 0; k < len; ++k) {
    for (Int i = 0; i <= k; ++i) {
      if (e.at(i) && f.at(k - i)) {
        table[static_cast<std::size_t>(k)] = 1;
        break;
      }
    }
  }
  return RelativeIdeal::trimmed(e.ambient_, e.offset_ + f.offset_, std::move(table));
}

RelativeIdeal power(const RelativeIdeal& e, Int n) {
  if (n < 0) throw std::invalid_argument("ideal power must be nonnegative");
  RelativeIdeal out = unit_ideal(e.ambient());
  for (Int i = 0; i < n; ++i) out = product(out, e);
  return out;
}

RelativeIdeal quotient(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  // z + min(F) >= min(E) is necessary; z + min(F) >= tail(E) is sufficient.
  const Int lo = e.offset_ - f.offset_;
  const Int hi = e.tail_from() - f.offset_;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(hi - lo), 0);
  for (Int z = lo; z < hi; ++z) {
    bool inside = true;
    for (Int y = f.offset_; z + y < e.tail_from(); ++y) {
      if (f.contains(y) && !e.contains(z + y)) {
        inside = false;
        break;
      }
    }
    table[static_cast<std::size_t>(z - lo)] = inside ? 1 : 0;
  }
  return RelativeIdeal::trimmed(e.ambient_, lo, std::move(table));
}

RelativeIdeal trace(const RelativeIdeal& e) {
  return product(e, quotient(unit_ideal(e.ambient()), e));
}

RelativeIdeal dual(const RelativeIdeal& e) {
  return quotient(canonical_ideal(e.ambient()), e);
}

bool is_subset(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  if (e.min() < f.min()) return false;
  const Int top = std::max(e.tail_from(), f.tail_from());
  for (Int z = e.min(); z < top; ++z) {
    if (e.contains(z) && !f.contains(z)) return false;
  }
  return true;
}

bool is_isomorphic(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  return e.window() == f.window();
}

bool is_ulrich(const RelativeIdeal& e, const RelativeIdeal& k) {
  return product(k, e) == e.shifted(k.min());
}

std::string format_ideal(const RelativeIdeal& e) {
  std::ostringstream os;
  if (e.is_interval()) {
    os << '[' << e.min() << ",∞)";
    return os.str();
  }
  os << '{';
  bool first = true;
  for (Int x : e.small_elements()) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << "} ∪ [" << e.tail_from() << ",∞)";
  return os.str();
}

}  // namespace nsg
