#include "nsg/semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "nsg/error.hpp"

namespace nsg {

Int frobenius_cap() {
  static const Int cap = [] {
    if (const char* env = std::getenv("NSG_FROBENIUS_CAP")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end != env && *end == '\0' && v >= 0) return static_cast<Int>(v);
    }
    return kDefaultFrobeniusCap;
  }();
  return cap;
}

void require_singular(const NumericalSemigroup& h) {
  if (h.is_naturals()) {
    throw Error(ErrorKind::RegularSemigroup,
                "regular semigroup: operation requires H != N");
  }
}

namespace {

// Shortest-path Apery set of the least generator: residue r reaches
// r + g (mod m) at cost g for every generator g.
std::vector<Int> apery_by_dijkstra(const std::vector<Int>& gens) {
  const Int m = gens.front();
  std::vector<Int> dist(static_cast<std::size_t>(m), -1);
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      const Int nd = d + gens[i];
      const auto nr = static_cast<std::size_t>(nd % m);
      if (dist[nr] < 0 || nd < dist[nr]) {
        dist[nr] = nd;
        queue.emplace(nd, static_cast<Int>(nr));
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens,
                                                       Int cap) {
  if (gens.empty()) throw std::invalid_argument("generator list is empty");
  std::vector<Int> sorted(gens.begin(), gens.end());
  for (Int g : sorted) {
    if (g < 1) throw std::invalid_argument("generators must be positive integers");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Int g = 0;
  for (Int x : sorted) g = std::gcd(g, x);
  if (g != 1) {
    throw Error(ErrorKind::NotNumerical,
                "not numerical: gcd of generators is " + std::to_string(g));
  }

  const Int m = sorted.front();
  if (m - 1 > cap) {
    throw Error(ErrorKind::FrobeniusCapExceeded,
                "frobenius number exceeds cap " + std::to_string(cap));
  }
  const std::vector<Int> apery = apery_by_dijkstra(sorted);
  const Int frobenius = *std::max_element(apery.begin(), apery.end()) - m;
  if (frobenius > cap) {
    throw Error(ErrorKind::FrobeniusCapExceeded,
                "frobenius number " + std::to_string(frobenius) +
                    " exceeds cap " + std::to_string(cap));
  }

  NumericalSemigroup h;
  h.frobenius_ = frobenius;
  h.membership_.assign(static_cast<std::size_t>(frobenius + 2), 0);
  for (Int z = 0; z <= frobenius + 1; ++z) {
    h.membership_[static_cast<std::size_t>(z)] =
        z >= apery[static_cast<std::size_t>(z % m)] ? 1 : 0;
  }
  h.finish_from_membership();
  return h;
}

NumericalSemigroup NumericalSemigroup::from_membership(
    std::span<const std::uint8_t> table) {
  if (table.empty() || table[0] == 0) {
    throw Error(ErrorKind::NotNumerical, "not numerical: 0 must be a member");
  }
  Int last_gap = -1;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) last_gap = static_cast<Int>(i);
  }
  const auto n = static_cast<std::size_t>(last_gap + 1);
  for (std::size_t a = 1; a < n; ++a) {
    if (!table[a]) continue;
    for (std::size_t b = a; a + b < n; ++b) {
      if (table[b] && !table[a + b]) {
        throw Error(ErrorKind::NotNumerical,
                    "not numerical: membership table is not closed under addition");
      }
    }
  }
  NumericalSemigroup h;
  h.frobenius_ = last_gap;
  h.membership_.assign(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(n));
  h.membership_.push_back(1);
  h.finish_from_membership();
  return h;
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const Int> gaps) {
  Int top = 0;
  for (Int g : gaps) {
    if (g <= 0) throw Error(ErrorKind::NotNumerical, "not numerical: gaps must be positive");
    top = std::max(top, g);
  }
  std::vector<std::uint8_t> table(static_cast<std::size_t>(top + 2), 1);
  for (Int g : gaps) table[static_cast<std::size_t>(g)] = 0;
  return from_membership(table);
}

NumericalSemigroup NumericalSemigroup::naturals() {
  const std::uint8_t one = 1;
  return from_membership(std::span<const std::uint8_t>(&one, 1));
}

void NumericalSemigroup::finish_from_membership() {
  genus_ = static_cast<Int>(std::count(membership_.begin(), membership_.end(), 0));
  if (frobenius_ < 0) {
    generators_ = {1};
    return;
  }
  Int m = 1;
  while (!contains(m)) ++m;

  // Minimal generators are m together with the Apery elements of m that are
  // not a sum of two nonzero Apery elements.
  std::vector<Int> apery = apery_set(m);
  generators_ = {m};
  for (std::size_t i = 1; i < apery.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < apery.size() && minimal; ++j) {
      if (j == i || apery[j] >= apery[i]) continue;
      if (contains(apery[i] - apery[j])) minimal = false;
    }
    if (minimal) generators_.push_back(apery[i]);
  }
  std::sort(generators_.begin(), generators_.end());
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int z = 1; z <= frobenius_; ++z) {
    if (!contains(z)) out.push_back(z);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::quasi_frobenius() const {
  require_singular(*this);
  std::vector<Int> out;
  for (Int x = 1; x <= frobenius_; ++x) {
    if (contains(x)) continue;
    const bool qf = std::all_of(generators_.begin(), generators_.end(),
                                [&](Int g) { return contains(x + g); });
    if (qf) out.push_back(x);
  }
  return out;
}

Int NumericalSemigroup::type() const {
  return static_cast<Int>(quasi_frobenius().size());
}

std::vector<Int> NumericalSemigroup::apery_set(Int m) const {
  if (m <= 0 || !contains(m)) {
    throw Error(ErrorKind::NotAMember,
                "not a member: " + std::to_string(m) + " is not a nonzero element of H");
  }
  std::vector<Int> out(static_cast<std::size_t>(m), -1);
  Int found = 0;
  for (Int z = 0; found < m; ++z) {
    auto& slot = out[static_cast<std::size_t>(z % m)];
    if (slot < 0 && contains(z)) {
      slot = z;
      ++found;
    }
  }
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ',';
    os << generators_[i];
  }
  os << '>';
  return os.str();
}

}  // namespace nsg
