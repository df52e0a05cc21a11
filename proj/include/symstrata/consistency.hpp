#pragma once

// Confronts claimed Hodge tables with point counts through the trace
// formula, produces minimal ("Occam") Hodge tables from counts, and evaluates
// the stable-cohomology conjectures for the strata w_{1^n 2 2} and
// w_{1^n 2 3} at finite n.
//
// A verdict is a statement about the two computations it compares, never a
// correction of either.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symstrata/hodge.hpp"
#include "symstrata/qpoly.hpp"

namespace symstrata {

enum class Verdict { consistent, inconsistent, inconclusive };
std::string to_string(Verdict v);

struct LedgerRow {
  std::optional<int> n;  // stratum parameter, when the check ranges over n
  int degree = 0;        // power of q for trace checks, cohomological degree otherwise
  Rational claimed = 0;
  Rational observed = 0;
  std::optional<Rational> observed_upper;  // set when only bounds are known
  bool agrees = true;
};

struct ConsistencyReport {
  std::string subject;
  Verdict verdict = Verdict::inconclusive;
  std::optional<QPoly> claimed;
  std::optional<QPoly> observed;
  std::vector<LedgerRow> ledger;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

class NonTateClass : public std::domain_error {
 public:
  explicit NonTateClass(const std::string& what) : std::domain_error(what) {}
};

/// Attached to every trace comparison.
extern const char* const kCountsCaveat;

/// Frobenius trace of a Tate table: dualize ordinary tables at dimension d,
/// then sum (-1)^degree mult q^p over the compact classes.
QPoly trace_polynomial(const HodgeTable& claim, int d);

/// Compares trace_polynomial(claim, d) with `counts` coefficientwise and
/// runs the weight-window check. Non-Tate claims are inconclusive.
ConsistencyReport trace_check(const HodgeTable& claim, int d, const QPoly& counts);

enum class OccamVariant { lowest, highest };
OccamVariant parse_occam_variant(const std::string& s);

class EmptyWeightWindow : public std::domain_error {
 public:
  explicit EmptyWeightWindow(const std::string& what) : std::domain_error(what) {}
};

/// Simplest compact table with trace `counts` on a smooth Tate d-fold: the
/// coefficient c_k of q^k becomes |c_k| classes of type (k, k) at the
/// extremal degree i of parity (even iff c_k > 0) with 2k <= i <= k + d.
/// With `affine`, Artin vanishing additionally forces i >= d.
HodgeTable occam_minimal(const QPoly& counts, int d, OccamVariant variant,
                         bool affine = false);

enum class Conjecture {
  stable_limits_one_in_degrees_0_1,  // w_{1^n 2 3}: H^0 = H^1 = Q, rest 0
  periodic_nonzero_limits_one,       // nonzero stable limits equal 1
};
std::string to_string(Conjecture c);
Conjecture parse_conjecture(const std::string& s);

/// Number of consecutive n over which a stable value must hold.
inline constexpr int kStabilityWindow = 5;

/// dim H^i(w_{1^n 2 2}) for n = i+1 .. i+window, re-derived through the
/// Serre page; the common value if they agree.
std::optional<std::int64_t> w1n22_stable_value(int i, int window = kStabilityWindow);

/// stable_limits_one_in_degrees_0_1: for each n, compares the conjectured
/// dimensions with bounds_w1n23(n) in every degree (or only `degrees`).
/// periodic_nonzero_limits_one: for i = 1 .. max(n_values) (or `degrees`),
/// compares the stable value of dim H^i(w_{1^n 2 2}) with 1.
ConsistencyReport check_conjecture(Conjecture statement, const std::vector<int>& n_values,
                                   const std::optional<std::vector<int>>& degrees = std::nullopt);

/// Re-derives H^*(w_{1^n 2 2}) from the Serre page and compares it with the
/// closed form degree by degree; also checks weights and Euler
/// characteristic 0.
ConsistencyReport check_theorem_a(int n);

/// Plain-text rendering for terminals.
std::string render_text(const ConsistencyReport& report);

}  // namespace symstrata
