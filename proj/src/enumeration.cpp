#include "nsg/enumeration.hpp"

#include <algorithm>
#include <string>

#include "nsg/error.hpp"

namespace nsg {

bool gap_order_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  const auto ga = a.gaps();
  const auto gb = b.gaps();
  return std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(), gb.end());
}

std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& h) {
  std::vector<NumericalSemigroup> out;
  for (Int g : h.min_generators()) {
    if (g <= h.frobenius()) continue;
    std::vector<std::uint8_t> table(static_cast<std::size_t>(g + 2), 1);
    for (Int z = 0; z <= h.frobenius(); ++z) {
      table[static_cast<std::size_t>(z)] = h.contains(z) ? 1 : 0;
    }
    table[static_cast<std::size_t>(g)] = 0;
    out.push_back(NumericalSemigroup::from_membership(table));
  }
  return out;
}

namespace {

void sort_canonical(std::vector<NumericalSemigroup>& layer) {
  std::sort(layer.begin(), layer.end(), gap_order_less);
}

std::vector<NumericalSemigroup> next_layer(const std::vector<NumericalSemigroup>& layer) {
  std::vector<NumericalSemigroup> out;
  for (const auto& h : layer) {
    auto kids = tree_children(h);
    std::move(kids.begin(), kids.end(), std::back_inserter(out));
  }
  sort_canonical(out);
  return out;
}

std::vector<NumericalSemigroup> next_layer_parallel(
    const std::vector<NumericalSemigroup>& layer) {
  std::vector<std::vector<NumericalSemigroup>> kids(layer.size());
  const auto n = static_cast<std::ptrdiff_t>(layer.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    kids[static_cast<std::size_t>(i)] = tree_children(layer[static_cast<std::size_t>(i)]);
  }
  std::vector<NumericalSemigroup> out;
  for (auto& k : kids) std::move(k.begin(), k.end(), std::back_inserter(out));
  sort_canonical(out);
  return out;
}

}  // namespace

std::vector<NumericalSemigroup> semigroups_of_genus(Int g) {
  std::vector<NumericalSemigroup> layer{NumericalSemigroup::naturals()};
  for (Int i = 0; i < g; ++i) layer = next_layer(layer);
  return layer;
}

std::vector<NumericalSemigroup> semigroups_with_frobenius_at_most(Int fmax) {
  std::vector<NumericalSemigroup> out;
  std::vector<NumericalSemigroup> stack{NumericalSemigroup::naturals()};
  // Children have a strictly larger Frobenius number, so pruning is exact.
  while (!stack.empty()) {
    NumericalSemigroup h = std::move(stack.back());
    stack.pop_back();
    for (auto& kid : tree_children(h)) {
      if (kid.frobenius() <= fmax) stack.push_back(std::move(kid));
    }
    out.push_back(std::move(h));
  }
  sort_canonical(out);
  return out;
}

void for_each_relative_ideal(const SemigroupPtr& h,
                             const std::function<void(const RelativeIdeal&)>& visit,
                             Int cap) {
  require_singular(*h);
  if (h->frobenius() > cap) {
    throw Error(ErrorKind::CapExceeded, "cap exceeded: frobenius " +
                                            std::to_string(h->frobenius()) +
                                            " above relative-ideal cap " + std::to_string(cap));
  }
  const std::vector<Int> gaps = h->gaps();
  const auto width = static_cast<std::size_t>(h->frobenius() + 1);
  const std::uint64_t count = std::uint64_t{1} << gaps.size();
  std::vector<std::uint8_t> table(width);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t z = 0; z < width; ++z) table[z] = h->contains(static_cast<Int>(z));
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (mask >> i & 1U) table[static_cast<std::size_t>(gaps[i])] = 1;
    }
    auto member = [&](Int z) { return z >= static_cast<Int>(width) || table[static_cast<std::size_t>(z)]; };
    bool closed = true;
    for (Int x = 1; x < static_cast<Int>(width) && closed; ++x) {
      if (!table[static_cast<std::size_t>(x)]) continue;
      for (Int g : h->min_generators()) {
        if (!member(x + g)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) visit(RelativeIdeal::from_window(h, 0, table));
  }
}

std::vector<RelativeIdeal> relative_ideals(const SemigroupPtr& h, Int cap) {
  std::vector<RelativeIdeal> out;
  for_each_relative_ideal(h, [&](const RelativeIdeal& e) { out.push_back(e); }, cap);
  return out;
}

UlrichCheck verify_ulrich_classification(const SemigroupPtr& h, Int cap) {
  const RelativeIdeal k = canonical_ideal(h);
  const RelativeIdeal n = naturals_ideal(h);
  UlrichCheck out;
  for_each_relative_ideal(
      h,
      [&](const RelativeIdeal& e) {
        ++out.ideals;
        if (!is_ulrich(e, k)) return;
        ++out.ulrich;
        if (!is_isomorphic(e, n)) {
          out.all_ulrich_are_naturals = false;
          if (!out.witness) out.witness = e;
        }
      },
      cap);
  out.mcc = has_mcc_via_pf(h);
  return out;
}

CensusRow& CensusRow::operator+=(const CensusRow& other) {
  total += other.total;
  gorenstein += other.gorenstein;
  almost += other.almost;
  nearly += other.nearly;
  far_flung += other.far_flung;
  mcc += other.mcc;
  mcc_not_far_flung += other.mcc_not_far_flung;
  violations += other.violations;
  violation_details.insert(violation_details.end(), other.violation_details.begin(),
                           other.violation_details.end());
  std::sort(violation_details.begin(), violation_details.end());
  return *this;
}

CensusRow census_entry(const NumericalSemigroup& h) {
  CensusRow row;
  row.genus = h.genus();
  row.total = 1;
  const SemigroupPtr p = share(h);
  auto fail = [&](const std::string& check, const std::string& detail) {
    ++row.violations;
    row.violation_details.push_back(h.to_string() + ": " + check + ": " + detail);
  };
  try {
    const ClassificationReport r = check_theorem_equivalence(p);
    row.gorenstein = r.is_gorenstein;
    row.almost = r.is_almost_gorenstein;
    row.nearly = r.is_nearly_gorenstein;
    row.far_flung = r.is_far_flung;
    row.mcc = r.has_mcc;
    row.mcc_not_far_flung = r.has_mcc && !r.is_far_flung;

    if (auto c = check_chain(r); !c.holds) fail("chain", c.detail);
    if (auto c = check_ffg_proposition(r); !c.holds) fail("ffg", c.detail);
    if (auto c = check_lipman_inheritance(r); !c.holds) fail("lipman", c.detail);
    if (auto c = check_min_mult_corollary(r); !c.holds) fail("corollary", c.detail);
    if (auto c = check_almost_cross(r); !c.holds) fail("almost", c.detail);
    if (r.is_far_flung && !r.has_mcc) fail("far-flung", "far-flung but not mcc");
    if (r.power_witness && *r.power_witness > std::max<Int>(1, r.frobenius)) {
      fail("power-bound", "witness n exceeds frobenius");
    }
    if (r.multiplicity == 3 && r.has_mcc != r.is_far_flung) {
      fail("multiplicity-3", "mcc and far-flung differ");
    }
  } catch (const Error& e) {
    fail(to_string(e.kind()), e.what());
  }
  return row;
}

namespace {

CensusRow fold_layer(Int genus, const std::vector<CensusRow>& entries) {
  CensusRow row;
  row.genus = genus;
  for (const auto& e : entries) row += e;
  return row;
}

}  // namespace

std::vector<CensusRow> census_serial(Int g_max) {
  std::vector<CensusRow> rows;
  std::vector<NumericalSemigroup> layer{NumericalSemigroup::naturals()};
  for (Int g = 1; g <= g_max; ++g) {
    layer = next_layer(layer);
    std::vector<CensusRow> entries;
    entries.reserve(layer.size());
    for (const auto& h : layer) entries.push_back(census_entry(h));
    rows.push_back(fold_layer(g, entries));
  }
  return rows;
}

std::vector<CensusRow> census_parallel(Int g_max) {
  std::vector<CensusRow> rows;
  std::vector<NumericalSemigroup> layer{NumericalSemigroup::naturals()};
  for (Int g = 1; g <= g_max; ++g) {
    layer = next_layer_parallel(layer);
    std::vector<CensusRow> entries(layer.size());
    const auto n = static_cast<std::ptrdiff_t>(layer.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      entries[static_cast<std::size_t>(i)] = census_entry(layer[static_cast<std::size_t>(i)]);
    }
    rows.push_back(fold_layer(g, entries));
  }
  return rows;
}

}  // namespace nsg
