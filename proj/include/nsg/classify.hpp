#pragma once

#include <array>
#include <optional>
#include <string>

#include "nsg/blowup.hpp"
#include "nsg/ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// The four independent deciders for minimal canonical conductor.
struct MccVotes {
  bool pf = false;         // f - 1 is quasi-Frobenius
  bool blowup = false;     // B(K) = N
  bool conductor = false;  // b(K) = C
  bool power = false;      // nK ~ C for some n <= max(1, f)

  bool unanimous() const {
    return pf == blowup && blowup == conductor && conductor == power;
  }
  friend bool operator==(const MccVotes&, const MccVotes&) = default;
};

struct ClassificationReport {
  SemigroupPtr semigroup;

  bool is_gorenstein = false;
  bool is_almost_gorenstein = false;
  bool is_nearly_gorenstein = false;
  bool is_far_flung = false;
  bool has_mcc = false;

  Int type = 0;
  Int genus = 0;
  Int multiplicity = 0;
  Int embedding_dimension = 0;
  Int frobenius = 0;
  Int canonical_reduction_number = 0;

  RelativeIdeal canonical;
  RelativeIdeal blowup_conductor;  // b(K)
  RelativeIdeal trace;             // tr(K)
  RelativeIdeal conductor;         // C
  RelativeIdeal maximal;           // M
  NumericalSemigroup blowup;       // B(K)
  std::optional<Int> power_witness;

  MccVotes votes;
};

bool has_mcc_via_pf(const SemigroupPtr& h);
bool has_mcc_via_blowup(const SemigroupPtr& h);
bool has_mcc_via_conductor(const SemigroupPtr& h);

struct PowerVerdict {
  bool holds = false;
  std::optional<Int> n;  // least n with nK isomorphic to C
};
PowerVerdict has_mcc_via_power(const SemigroupPtr& h);

bool is_gorenstein(const SemigroupPtr& h);
/// M inside tr(K); for non-Gorenstein H this is tr(K) = M.
bool is_nearly_gorenstein(const SemigroupPtr& h);
/// M inside b(K); for non-Gorenstein H this is b(K) = M.
bool is_almost_gorenstein(const SemigroupPtr& h);
/// Independent almost-symmetry test: K + M inside M.
bool is_almost_gorenstein_via_symmetry(const SemigroupPtr& h);
/// tr(K) = C.
bool is_far_flung(const SemigroupPtr& h);

/// Computes every class flag and witness, running all four mcc deciders
/// independently. Throws TheoremViolation if the deciders disagree.
ClassificationReport check_theorem_equivalence(const SemigroupPtr& h);
inline ClassificationReport classify(const SemigroupPtr& h) {
  return check_theorem_equivalence(h);
}

struct CheckOutcome {
  bool holds = true;
  bool vacuous = false;
  std::string detail;
};

/// C <= b(K) <= tr(K) <= M for non-Gorenstein H; b(K) = tr(K) = H otherwise.
CheckOutcome check_chain(const ClassificationReport& r);
/// [mcc and crn = 2] iff far-flung. Vacuous for Gorenstein H.
CheckOutcome check_ffg_proposition(const ClassificationReport& r);
/// mcc(H) implies lipman(H) = N or mcc(lipman(H)).
CheckOutcome check_lipman_inheritance(const ClassificationReport& r);
/// For minimal multiplicity m >= 3: mcc iff the last two generators are
/// consecutive. Vacuous otherwise.
CheckOutcome check_min_mult_corollary(const ClassificationReport& r);
/// The almost-Gorenstein flag agrees with the K + M <= M test.
CheckOutcome check_almost_cross(const ClassificationReport& r);

CheckOutcome check_ffg_proposition(const SemigroupPtr& h);
CheckOutcome check_lipman_inheritance(const SemigroupPtr& h);
CheckOutcome check_min_mult_corollary(const SemigroupPtr& h);

}  // namespace nsg
