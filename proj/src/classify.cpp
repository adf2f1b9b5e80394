#include "nsg/classify.hpp"

#include <algorithm>
#include <sstream>

#include "nsg/error.hpp"

namespace nsg {

bool has_mcc_via_pf(const SemigroupPtr& h) {
  const auto qf = h->quasi_frobenius();
  return std::binary_search(qf.begin(), qf.end(), h->frobenius() - 1);
}

bool has_mcc_via_blowup(const SemigroupPtr& h) {
  return blowup(canonical_ideal(h)).blowup.is_naturals();
}

bool has_mcc_via_conductor(const SemigroupPtr& h) {
  return blowup(canonical_ideal(h)).conductor == conductor_ideal(h);
}

PowerVerdict has_mcc_via_power(const SemigroupPtr& h) {
  const RelativeIdeal k = canonical_ideal(h);
  const RelativeIdeal c = conductor_ideal(h);
  const Int bound = std::max<Int>(1, h->frobenius());
  RelativeIdeal pow = k;
  for (Int n = 1; n <= bound; ++n) {
    if (n > 1) pow = product(pow, k);
    if (is_isomorphic(pow, c)) return {true, n};
  }
  return {false, std::nullopt};
}

bool is_gorenstein(const SemigroupPtr& h) { return h->type() == 1; }

bool is_nearly_gorenstein(const SemigroupPtr& h) {
  return is_subset(maximal_ideal(h), trace(canonical_ideal(h)));
}

bool is_almost_gorenstein(const SemigroupPtr& h) {
  return is_subset(maximal_ideal(h), blowup(canonical_ideal(h)).conductor);
}

bool is_almost_gorenstein_via_symmetry(const SemigroupPtr& h) {
  const RelativeIdeal m = maximal_ideal(h);
  return is_subset(product(canonical_ideal(h), m), m);
}

bool is_far_flung(const SemigroupPtr& h) {
  return trace(canonical_ideal(h)) == conductor_ideal(h);
}

ClassificationReport check_theorem_equivalence(const SemigroupPtr& h) {
  require_singular(*h);
  const RelativeIdeal k = canonical_ideal(h);
  const RelativeIdeal m = maximal_ideal(h);
  const RelativeIdeal c = conductor_ideal(h);
  BlowupResult bk = blowup(k);
  const RelativeIdeal tr = trace(k);
  const PowerVerdict power = has_mcc_via_power(h);

  MccVotes votes{
      .pf = has_mcc_via_pf(h),
      .blowup = bk.blowup.is_naturals(),
      .conductor = bk.conductor == c,
      .power = power.holds,
  };
  if (!votes.unanimous()) {
    std::ostringstream os;
    os << "theorem violation on " << h->to_string() << ": pf=" << votes.pf
       << " blowup=" << votes.blowup << " conductor=" << votes.conductor
       << " power=" << votes.power;
    throw Error(ErrorKind::TheoremViolation, os.str());
  }

  const Int type = h->type();
  return ClassificationReport{
      .semigroup = h,
      .is_gorenstein = type == 1,
      .is_almost_gorenstein = is_subset(m, bk.conductor),
      .is_nearly_gorenstein = is_subset(m, tr),
      .is_far_flung = tr == c,
      .has_mcc = votes.pf,
      .type = type,
      .genus = h->genus(),
      .multiplicity = h->multiplicity(),
      .embedding_dimension = h->embedding_dimension(),
      .frobenius = h->frobenius(),
      .canonical_reduction_number = reduction_number(k),
      .canonical = k,
      .blowup_conductor = bk.conductor,
      .trace = tr,
      .conductor = c,
      .maximal = m,
      .blowup = std::move(bk.blowup),
      .power_witness = power.n,
      .votes = votes,
  };
}

CheckOutcome check_chain(const ClassificationReport& r) {
  const SemigroupPtr& h = r.semigroup;
  CheckOutcome out;
  if (r.is_gorenstein) {
    const RelativeIdeal unit = unit_ideal(h);
    out.holds = r.blowup_conductor == unit && r.trace == unit;
    if (!out.holds) {
      out.detail = "Gorenstein but b(K) = " + format_ideal(r.blowup_conductor) +
                   ", tr(K) = " + format_ideal(r.trace);
    }
    return out;
  }
  const bool c_in_b = is_subset(r.conductor, r.blowup_conductor);
  const bool b_in_tr = is_subset(r.blowup_conductor, r.trace);
  const bool tr_in_m = is_subset(r.trace, r.maximal);
  out.holds = c_in_b && b_in_tr && tr_in_m;
  if (!out.holds) {
    out.detail = "C = " + format_ideal(r.conductor) + ", b(K) = " +
                 format_ideal(r.blowup_conductor) + ", tr(K) = " + format_ideal(r.trace) +
                 ", M = " + format_ideal(r.maximal);
  }
  return out;
}

CheckOutcome check_ffg_proposition(const ClassificationReport& r) {
  CheckOutcome out;
  if (r.is_gorenstein) {
    out.vacuous = true;
    return out;
  }
  const bool lhs = r.has_mcc && r.canonical_reduction_number == 2;
  out.holds = lhs == r.is_far_flung;
  if (!out.holds) {
    std::ostringstream os;
    os << "mcc=" << r.has_mcc << " crn=" << r.canonical_reduction_number
       << " far_flung=" << r.is_far_flung;
    out.detail = os.str();
  }
  return out;
}

CheckOutcome check_lipman_inheritance(const ClassificationReport& r) {
  CheckOutcome out;
  if (!r.has_mcc) {
    out.vacuous = true;
    return out;
  }
  const SemigroupPtr l = share(lipman(r.semigroup));
  if (l->is_naturals()) {
    out.vacuous = true;
    return out;
  }
  out.holds = check_theorem_equivalence(l).has_mcc;
  if (!out.holds) out.detail = "lipman semigroup " + l->to_string() + " is not mcc";
  return out;
}

CheckOutcome check_min_mult_corollary(const ClassificationReport& r) {
  const NumericalSemigroup& h = *r.semigroup;
  CheckOutcome out;
  if (!h.has_minimal_multiplicity() || h.multiplicity() < 3) {
    out.vacuous = true;
    return out;
  }
  const auto& g = h.min_generators();
  const bool consecutive = g[g.size() - 1] == g[g.size() - 2] + 1;
  out.holds = consecutive == r.has_mcc;
  if (!out.holds) {
    std::ostringstream os;
    os << "mcc=" << r.has_mcc << " but last generators " << g[g.size() - 2] << ","
       << g.back();
    out.detail = os.str();
  }
  return out;
}

CheckOutcome check_almost_cross(const ClassificationReport& r) {
  CheckOutcome out;
  const bool symmetric_form = is_almost_gorenstein_via_symmetry(r.semigroup);
  out.holds = symmetric_form == r.is_almost_gorenstein;
  if (!out.holds) {
    out.detail = "b(K) = M test and K + M <= M test disagree";
  }
  return out;
}

CheckOutcome check_ffg_proposition(const SemigroupPtr& h) {
  return check_ffg_proposition(check_theorem_equivalence(h));
}

CheckOutcome check_lipman_inheritance(const SemigroupPtr& h) {
  return check_lipman_inheritance(check_theorem_equivalence(h));
}

CheckOutcome check_min_mult_corollary(const SemigroupPtr& h) {
  return check_min_mult_corollary(check_theorem_equivalence(h));
}

}  // namespace nsg
