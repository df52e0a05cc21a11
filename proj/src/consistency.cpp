#include "symstrata/consistency.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "symstrata/catalog.hpp"
#include "symstrata/spectral.hpp"

namespace symstrata {

const char* const kCountsCaveat =
    "point counts fix only the virtual (alternating) Hodge numbers; agreement or "
    "disagreement of traces does not by itself determine Betti numbers";

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::inconsistent: return "inconsistent";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(Conjecture c) {
  switch (c) {
    case Conjecture::stable_limits_one_in_degrees_0_1: return "stable_limits_one_in_degrees_0_1";
    case Conjecture::periodic_nonzero_limits_one: return "periodic_nonzero_limits_one";
  }
  return "?";
}

Conjecture parse_conjecture(const std::string& s) {
  if (s == "stable_limits_one_in_degrees_0_1") return Conjecture::stable_limits_one_in_degrees_0_1;
  if (s == "periodic_nonzero_limits_one") return Conjecture::periodic_nonzero_limits_one;
  throw std::invalid_argument("unknown conjecture '" + s + "'");
}

OccamVariant parse_occam_variant(const std::string& s) {
  if (s == "lowest") return OccamVariant::lowest;
  if (s == "highest") return OccamVariant::highest;
  throw std::invalid_argument("unknown Occam variant '" + s + "'");
}

// ---------------------------------------------------------------- trace

QPoly trace_polynomial(const HodgeTable& claim, int d) {
  HodgeTable compact = claim.flavor() == Flavor::ordinary ? poincare_dual(claim, d) : claim;
  QPoly out;
  for (const auto& c : compact.classes()) {
    if (!c.type.is_tate()) {
      throw NonTateClass("class of type (" + std::to_string(c.type.p) + "," +
                         std::to_string(c.type.q) + ") has no Tate trace");
    }
    out.add_term(c.type.p, Rational(c.degree % 2 == 0 ? c.mult : -c.mult));
  }
  return out;
}

ConsistencyReport trace_check(const HodgeTable& claim, int d, const QPoly& counts) {
  ConsistencyReport report;
  report.subject = "trace of claimed table (dimension " + std::to_string(d) + ") vs point counts";
  report.observed = counts;
  report.notes.emplace_back(kCountsCaveat);

  QPoly trace;
  try {
    trace = trace_polynomial(claim, d);
  } catch (const NonTateClass& e) {
    report.verdict = Verdict::inconclusive;
    report.notes.emplace_back(e.what());
    return report;
  }
  report.claimed = trace;

  std::set<int> powers;
  for (const auto& [k, c] : trace.terms()) powers.insert(k);
  for (const auto& [k, c] : counts.terms()) powers.insert(k);
  bool equal = true;
  for (auto it = powers.rbegin(); it != powers.rend(); ++it) {
    LedgerRow row;
    row.degree = *it;
    row.claimed = trace.coeff(*it);
    row.observed = counts.coeff(*it);
    row.agrees = row.claimed == row.observed;
    equal = equal && row.agrees;
    report.ledger.push_back(row);
  }

  WeightReport weights = weight_window_check(claim, d);
  for (const auto& c : weights.offending) {
    std::ostringstream os;
    os << "weight " << c.weight() << " of class in degree " << c.degree
       << " is outside the " << to_string(claim.flavor()) << " window";
    report.violations.push_back(os.str());
  }
  report.verdict =
      equal && report.violations.empty() ? Verdict::consistent : Verdict::inconsistent;
  return report;
}

// ---------------------------------------------------------------- Occam

HodgeTable occam_minimal(const QPoly& counts, int d, OccamVariant variant, bool affine) {
  if (d < 0) throw std::invalid_argument("dimension must be >= 0");
  HodgeTable out(Flavor::compact);
  for (const auto& [k, c] : counts.terms()) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw std::invalid_argument("count polynomial has non-integral coefficients");
    }
    const BigInt value = boost::multiprecision::numerator(c);
    const int parity = value > 0 ? 0 : 1;
    int lo = std::max(2 * k, 0);
    if (affine) lo = std::max(lo, d);
    const int hi = k + d;
    int degree = variant == OccamVariant::lowest ? lo : hi;
    if (((degree % 2) + 2) % 2 != parity) degree += variant == OccamVariant::lowest ? 1 : -1;
    if (degree < lo || degree > hi) {
      throw EmptyWeightWindow("no degree of the required parity for q^" + std::to_string(k) +
                              " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    BigInt mag = value < 0 ? BigInt(-value) : value;
    out.add(degree, {k, k}, static_cast<std::int64_t>(mag));
  }
  return out;
}

// ---------------------------------------------------------------- conjectures

std::optional<std::int64_t> w1n22_stable_value(int i, int window) {
  if (i < 0 || window < 1) throw std::invalid_argument("bad stability query");
  std::optional<std::int64_t> value;
  for (int n = std::max(i + 1, 1); n <= i + window; ++n) {
    auto b = betti(resolve(w1n22_serre_page(n), RankAssignment{}));
    std::int64_t dim = i < static_cast<int>(b.size()) ? b[i] : 0;
    if (value && *value != dim) return std::nullopt;
    value = dim;
  }
  return value;
}

namespace {

ConsistencyReport check_degrees_0_1(const std::vector<int>& n_values,
                                    const std::optional<std::vector<int>>& degrees) {
  ConsistencyReport report;
  report.subject = "stable cohomology of w_{1^n 2 3}(P^1) is Q in degrees 0 and 1 only";
  report.notes.emplace_back(
      "lower bounds are the S_2-invariant part, i.e. H^i(w_{1^n 2 2}); upper bounds are "
      "anti-diagonal sums of the Serre E2 page over PConf_2(P^1)");
  bool refuted = false;
  bool pinned = true;
  for (int n : n_values) {
    BettiBounds b = bounds_w1n23(n);
    for (int i = 0; i < static_cast<int>(b.lower.size()); ++i) {
      if (degrees && std::find(degrees->begin(), degrees->end(), i) == degrees->end()) continue;
      LedgerRow row;
      row.n = n;
      row.degree = i;
      row.claimed = i <= 1 ? 1 : 0;
      row.observed = b.lower[i];
      row.observed_upper = Rational(b.upper[i]);
      row.agrees = row.observed <= row.claimed && row.claimed <= *row.observed_upper;
      refuted = refuted || !row.agrees;
      pinned = pinned && b.lower[i] == b.upper[i];
      report.ledger.push_back(row);
    }
  }
  report.verdict = refuted  ? Verdict::inconsistent
                   : pinned ? Verdict::consistent
                            : Verdict::inconclusive;
  return report;
}

ConsistencyReport check_limits_one(const std::vector<int>& n_values,
                                   const std::optional<std::vector<int>>& degrees) {
  ConsistencyReport report;
  report.subject = "nonzero stable limits of dim H^i equal 1";
  report.notes.emplace_back(
      "evaluated on w_{1^n 2 2}(P^1), re-derived from its Serre page; each degree i is "
      "checked for stability over n = i+1 .. i+" + std::to_string(kStabilityWindow));
  std::vector<int> is;
  if (degrees) {
    is = *degrees;
  } else if (!n_values.empty()) {
    int top = *std::max_element(n_values.begin(), n_values.end());
    for (int i = 1; i <= top; ++i) is.push_back(i);
  }
  bool refuted = false;
  bool all_stable = true;
  for (int i : is) {
    LedgerRow row;
    row.degree = i;
    row.n = i + kStabilityWindow;
    row.claimed = 1;
    auto stable = w1n22_stable_value(i);
    if (!stable) {
      all_stable = false;
      row.agrees = false;
      report.notes.push_back("degree " + std::to_string(i) + " has not stabilized");
    } else {
      row.observed = *stable;
      row.agrees = *stable == 0 || *stable == 1;
      refuted = refuted || !row.agrees;
    }
    report.ledger.push_back(row);
  }
  report.verdict = refuted       ? Verdict::inconsistent
                   : all_stable ? Verdict::consistent
                                : Verdict::inconclusive;
  return report;
}

}  // namespace

ConsistencyReport check_conjecture(Conjecture statement, const std::vector<int>& n_values,
                                   const std::optional<std::vector<int>>& degrees) {
  switch (statement) {
    case Conjecture::stable_limits_one_in_degrees_0_1: return check_degrees_0_1(n_values, degrees);
    case Conjecture::periodic_nonzero_limits_one: return check_limits_one(n_values, degrees);
  }
  throw std::invalid_argument("unknown conjecture");
}

ConsistencyReport check_theorem_a(int n) {
  ConsistencyReport report;
  report.subject = "H^*(w_{1^n 2 2}(P^1)) at n = " + std::to_string(n);
  HodgeTable closed = w1n22_closed_form(n);
  HodgeTable derived = resolve(w1n22_serre_page(n), RankAssignment{});
  auto a = betti(closed);
  auto b = betti(derived);
  std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0);
  b.resize(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    LedgerRow row;
    row.n = n;
    row.degree = static_cast<int>(i);
    row.claimed = a[i];
    row.observed = b[i];
    row.agrees = a[i] == b[i];
    report.ledger.push_back(row);
  }
  if (!(closed == derived)) report.violations.emplace_back("Hodge types of the derivation differ");
  if (euler_characteristic(derived) != 0) {
    report.violations.push_back("Euler characteristic " +
                                std::to_string(euler_characteristic(derived)) + " != 0");
  }
  if (!weight_window_check(derived, n + 2).pass) {
    report.violations.emplace_back("derived table violates the smooth weight window");
  }
  bool ok = report.violations.empty() &&
            std::all_of(report.ledger.begin(), report.ledger.end(),
                        [](const LedgerRow& r) { return r.agrees; });
  report.verdict = ok ? Verdict::consistent : Verdict::inconsistent;
  return report;
}

std::string render_text(const ConsistencyReport& report) {
  std::ostringstream os;
  os << report.subject << "\n";
  os << "verdict: " << to_string(report.verdict) << "\n";
  if (report.claimed) os << "claimed:  " << report.claimed->to_string() << "\n";
  if (report.observed) os << "observed: " << report.observed->to_string() << "\n";
  if (!report.ledger.empty()) {
    os << "n\tdegree\tclaimed\tobserved\tupper\tagrees\n";
    for (const auto& row : report.ledger) {
      os << (row.n ? std::to_string(*row.n) : "-") << "\t" << row.degree << "\t"
         << rational_to_string(row.claimed) << "\t" << rational_to_string(row.observed) << "\t"
         << (row.observed_upper ? rational_to_string(*row.observed_upper) : "-") << "\t"
         << (row.agrees ? "yes" : "no") << "\n";
    }
  }
  for (const auto& v : report.violations) os << "violation: " << v << "\n";
  for (const auto& note : report.notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace symstrata
