// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All tolerances are exact; runtime bounds are enforced where stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/enumeration.hpp"
#include "nsg/error.hpp"
#include "nsg/report_json.hpp"
#include "oracles.hpp"

namespace {

using nsg::Int;
using nsg::NumericalSemigroup;
using nsg::SemigroupPtr;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 10) failures.push_back(why);
  }
};

int g_failed = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body,
               double time_limit_s = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && secs > time_limit_s) {
    std::ostringstream os;
    os << "runtime " << secs << " s exceeds " << time_limit_s << " s";
    out.fail(os.str());
  }
  std::printf("[%s] %s %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", id, title,
              out.summary.c_str(), secs);
  for (const auto& f : out.failures) std::printf("       %s\n", f.c_str());
  if (!out.pass) ++g_failed;
}

std::vector<std::vector<NumericalSemigroup>> layers_up_to(Int g_max) {
  std::vector<std::vector<NumericalSemigroup>> layers;
  for (Int g = 0; g <= g_max; ++g) layers.push_back(nsg::semigroups_of_genus(g));
  return layers;
}

template <class Fn>
Int for_each_singular(const std::vector<std::vector<NumericalSemigroup>>& layers, Int g_max,
                      Fn&& fn) {
  Int n = 0;
  for (Int g = 1; g <= g_max && g < static_cast<Int>(layers.size()); ++g) {
    for (const auto& h : layers[static_cast<std::size_t>(g)]) {
      fn(nsg::share(h));
      ++n;
    }
  }
  return n;
}

SemigroupPtr sg(std::vector<Int> gens) {
  return nsg::share(NumericalSemigroup::from_generators(gens));
}

std::string count_summary(Int n, const char* what) {
  return std::to_string(n) + " " + what;
}

}  // namespace

int main() {
  const auto layers = layers_up_to(18);

  criterion("AC1", "main theorem: four mcc deciders agree, genus <= 18", [&] {
    Outcome o;
    Int mcc = 0;
    const Int n = for_each_singular(layers, 18, [&](const SemigroupPtr& h) {
      const bool pf = nsg::has_mcc_via_pf(h);
      const bool bl = nsg::has_mcc_via_blowup(h);
      const bool co = nsg::has_mcc_via_conductor(h);
      const bool pw = nsg::has_mcc_via_power(h).holds;
      if (!(pf == bl && bl == co && co == pw)) {
        std::ostringstream os;
        os << h->to_string() << " pf=" << pf << " blowup=" << bl << " conductor=" << co
           << " power=" << pw;
        o.fail(os.str());
      }
      mcc += pf;
    });
    o.summary = count_summary(n, "semigroups") + ", " + std::to_string(mcc) + " mcc";
    return o;
  }, 120.0);

  criterion("AC2", "f-1 in QF iff b(K) = C, power witness n <= f, genus <= 18", [&] {
    Outcome o;
    Int witnesses = 0;
    const Int n = for_each_singular(layers, 18, [&](const SemigroupPtr& h) {
      if (nsg::has_mcc_via_pf(h) != nsg::has_mcc_via_conductor(h)) {
        o.fail(h->to_string() + ": pf and conductor criteria differ");
      }
      const auto p = nsg::has_mcc_via_power(h);
      if (p.n) {
        ++witnesses;
        if (*p.n > h->frobenius()) {
          o.fail(h->to_string() + ": witness n=" + std::to_string(*p.n) + " > f");
        }
      }
    });
    o.summary = count_summary(n, "semigroups") + ", " + std::to_string(witnesses) +
                " power witnesses all <= f";
    return o;
  });

  criterion("AC3", "<n,...,2n-1>, n=3..12: C = b(K) = tr(K) = M", [&] {
    Outcome o;
    for (Int n = 3; n <= 12; ++n) {
      std::vector<Int> gens;
      for (Int a = n; a <= 2 * n - 1; ++a) gens.push_back(a);
      const auto r = nsg::check_theorem_equivalence(sg(gens));
      const bool eq = r.conductor == r.blowup_conductor && r.blowup_conductor == r.trace &&
                      r.trace == r.maximal;
      const bool flags = r.is_far_flung && r.is_nearly_gorenstein && r.is_almost_gorenstein &&
                         r.has_mcc && !r.is_gorenstein;
      if (!eq || !flags) o.fail("n=" + std::to_string(n) + " " + r.semigroup->to_string());
    }
    o.summary = "10 semigroups";
    return o;
  }, 1.0);

  criterion("AC4", "<n,n+1,n^2-n-1>, n=3..10: nearly, almost iff n=3, mcc, b(K) < tr(K) iff n>3",
            [&] {
    Outcome o;
    for (Int n = 3; n <= 10; ++n) {
      const auto r = nsg::check_theorem_equivalence(sg({n, n + 1, n * n - n - 1}));
      const bool strict = r.blowup_conductor != r.trace &&
                          nsg::is_subset(r.blowup_conductor, r.trace);
      const bool ok = r.is_nearly_gorenstein && r.is_almost_gorenstein == (n == 3) &&
                      r.has_mcc && strict == (n > 3);
      if (!ok) {
        std::ostringstream os;
        os << "n=" << n << " nearly=" << r.is_nearly_gorenstein
           << " almost=" << r.is_almost_gorenstein << " mcc=" << r.has_mcc
           << " strict=" << strict;
        o.fail(os.str());
      }
    }
    o.summary = "8 semigroups";
    return o;
  }, 1.0);

  criterion("AC5", "minimal multiplicity m <= 7, f <= 30: mcc iff a_n = a_{n-1} + 1", [&] {
    Outcome o;
    // Kunz-style generation: m together with one element m*k + i per
    // nonzero residue, k >= 1, all below f + m <= 30 + m.
    std::set<std::vector<Int>> seen;
    Int checked = 0;
    Int mult_two = 0;
    for (Int m = 2; m <= 7; ++m) {
      std::vector<Int> k(static_cast<std::size_t>(m - 1), 1);
      while (true) {
        std::vector<Int> gens{m};
        for (Int i = 1; i < m; ++i) gens.push_back(m * k[static_cast<std::size_t>(i - 1)] + i);
        const auto h = NumericalSemigroup::from_generators(gens);
        if (h.has_minimal_multiplicity() && h.multiplicity() == m && h.frobenius() <= 30 &&
            seen.insert(h.min_generators()).second) {
          const auto p = nsg::share(h);
          const auto r = nsg::check_theorem_equivalence(p);
          const auto& g = h.min_generators();
          const bool consecutive = g[g.size() - 1] == g[g.size() - 2] + 1;
          if (m == 2) {
            // The generator list n < a_2 has no a_{n-1} besides n itself;
            // these are the Gorenstein rings k[[t^2, t^(2k+1)]].
            ++mult_two;
            if (!r.is_gorenstein || r.has_mcc) o.fail(h.to_string() + ": multiplicity 2 not Gorenstein/non-mcc");
          } else {
            ++checked;
            if (consecutive != r.has_mcc) o.fail(h.to_string() + ": corollary fails");
          }
        }
        std::size_t pos = 0;
        while (pos < k.size() && m * (++k[pos]) + static_cast<Int>(pos) + 1 > 30 + m) {
          k[pos] = 1;
          ++pos;
        }
        if (pos == k.size()) break;
      }
    }
    o.summary = std::to_string(checked) + " semigroups with m in 3..7; " +
                std::to_string(mult_two) + " with m = 2 confirmed Gorenstein and not mcc";
    return o;
  });

  criterion("AC6", "far-flung iff mcc and crn = 2, non-Gorenstein, genus <= 12", [&] {
    Outcome o;
    Int applicable = 0;
    for_each_singular(layers, 12, [&](const SemigroupPtr& h) {
      const auto r = nsg::check_theorem_equivalence(h);
      const auto c = nsg::check_ffg_proposition(r);
      if (!c.vacuous) ++applicable;
      if (!c.holds) o.fail(h->to_string() + ": " + c.detail);
    });
    o.summary = count_summary(applicable, "non-Gorenstein semigroups");
    return o;
  });

  criterion("AC7", "mcc passes to M - M, genus <= 15", [&] {
    Outcome o;
    Int mcc = 0;
    Int to_naturals = 0;
    for_each_singular(layers, 15, [&](const SemigroupPtr& h) {
      if (!nsg::has_mcc_via_pf(h)) return;
      ++mcc;
      const auto l = nsg::share(nsg::lipman(h));
      if (l->is_naturals()) {
        ++to_naturals;
        return;
      }
      if (!nsg::has_mcc_via_pf(l) || !nsg::has_mcc_via_conductor(l)) {
        o.fail(h->to_string() + ": lipman " + l->to_string() + " is not mcc");
      }
    });
    o.summary = std::to_string(mcc) + " mcc semigroups (" + std::to_string(to_naturals) +
                " with M - M = N)";
    return o;
  });

  criterion("AC8", "rank-1 Ulrich classification, f <= 14", [&] {
    Outcome o;
    Int semigroups = 0;
    Int ideals = 0;
    for (const auto& raw : nsg::semigroups_with_frobenius_at_most(14)) {
      if (raw.is_naturals()) continue;
      const auto u = nsg::verify_ulrich_classification(nsg::share(raw), 14);
      ++semigroups;
      ideals += u.ideals;
      if (!u.agrees()) o.fail(raw.to_string() + ": Ulrich scan disagrees with mcc");
    }
    o.summary = std::to_string(semigroups) + " semigroups, " + std::to_string(ideals) +
                " relative ideals";
    return o;
  });

  criterion("AC9", "C <= b(K) <= tr(K) <= M, or b(K) = tr(K) = H if Gorenstein, genus <= 18",
            [&] {
    Outcome o;
    Int gorenstein = 0;
    const Int n = for_each_singular(layers, 18, [&](const SemigroupPtr& h) {
      const auto r = nsg::check_theorem_equivalence(h);
      gorenstein += r.is_gorenstein;
      const auto c = nsg::check_chain(r);
      if (!c.holds) o.fail(h->to_string() + ": " + c.detail);
    });
    o.summary = count_summary(n, "semigroups") + " (" + std::to_string(gorenstein) +
                " Gorenstein)";
    return o;
  });

  criterion("AC10", "tree counts match gap-set oracle (g <= 8); serial = parallel census", [&] {
    Outcome o;
    std::string counts;
    for (Int g = 0; g <= 8; ++g) {
      const auto expected = oracle::gap_sets_of_genus(g);
      std::vector<std::vector<Int>> tree;
      for (const auto& h : layers[static_cast<std::size_t>(g)]) tree.push_back(h.gaps());
      if (tree != expected) o.fail("genus " + std::to_string(g) + " differs from oracle");
      counts += (g ? "," : "") + std::to_string(expected.size());
    }
    const std::string serial = nsg::dump(nsg::to_json(nsg::census_serial(18)));
    const std::string parallel = nsg::dump(nsg::to_json(nsg::census_parallel(18)));
    if (serial != parallel) o.fail("census JSON differs between serial and parallel runs");
    o.summary = "oracle counts " + counts + "; census 1..18 identical (" +
                std::to_string(serial.size()) + " bytes)";
    return o;
  });

  std::printf("%s: %d criteria failed\n", g_failed ? "FAILED" : "OK", g_failed);
  return g_failed ? 1 : 0;
}
