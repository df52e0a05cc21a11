#pragma once

// Spectral-sequence pages of Hodge tables.
//
// Every page uses the differential d_r : E_r^{p,q} -> E_r^{p+r, q-r+1}. For
// the semi-filtration sequence this is the horizontal (+1, 0) arrow on E1;
// for a Serre sequence it is the usual (+r, 1-r). The abutment degree of
// position (p, q) is p + q regardless of the degree stored inside the table.
//
// Differentials are never guessed. admissible_differentials() bounds them by
// position and Hodge type; the caller supplies ranks in a RankAssignment.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symstrata/hodge.hpp"

namespace symstrata {

struct Position {
  int p = 0;
  int q = 0;
  auto operator<=>(const Position&) const = default;
};

class Page {
 public:
  Page(Flavor flavor, int page_index);

  Flavor flavor() const { return flavor_; }
  int page_index() const { return page_index_; }
  void set_page_index(int r);
  Position shape() const { return {page_index_, 1 - page_index_}; }

  /// Adds the table at (p, q); empty tables are dropped.
  void add(Position at, const HodgeTable& table);
  /// Empty table if absent.
  HodgeTable at(Position pos) const;
  bool contains(Position pos) const { return entries_.count(pos) != 0; }

  const std::map<Position, HodgeTable>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::int64_t dimension(Position pos) const;

 private:
  Flavor flavor_;
  int page_index_;
  std::map<Position, HodgeTable> entries_;
};

/// Ranks of the differentials leaving each position. A plain rank is split
/// across Hodge types only when that split is forced (a single common type,
/// or the rank saturates every type); otherwise use the per-type setter.
class RankAssignment {
 public:
  void set(Position source, int rank);
  void set(Position source, HodgeType type, int rank);

  const std::map<Position, int>& totals() const { return totals_; }
  const std::map<Position, std::map<HodgeType, int>>& per_type() const {
    return per_type_;
  }
  bool empty() const { return totals_.empty() && per_type_.empty(); }

 private:
  std::map<Position, int> totals_;
  std::map<Position, std::map<HodgeType, int>> per_type_;
};

struct Differential {
  Position source;
  Position target;
  std::int64_t max_rank = 0;
  bool operator==(const Differential&) const = default;
};

class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// E1 page of the semi-filtration sequence converging to H_c^*(UConf_n X):
///   E1^{p,q} = [ (+)_{i+j=p} Sym^i Hc_odd (x) Lambda^j Hc_even ]
///              (x) Hc(Sym^{n-2p} X)      restricted to degree q.
Page e1_page(const HodgeTable& hc_x, int n);

/// Serre E2 page for a fibration whose deck group has order two:
///   E2^{p,q} = base_triv^p (x) fiber_triv^q  (+)  base_sign^p (x) fiber_sign^q.
/// For a trivial monodromy action, pass empty sign parts.
Page serre_e2(const HodgeTable& base_triv, const HodgeTable& base_sign,
              const HodgeTable& fiber_triv, const HodgeTable& fiber_sign);

/// Nonzero-source, nonzero-target pairs on the page's own index with the
/// largest Hodge-type-preserving rank.
std::vector<Differential> admissible_differentials(const Page& page);

/// Applies the ranks on the page's index and returns the next page.
/// Throws ResolutionError if a rank exceeds its type-preserving bound, a
/// rank leaves a position with no admissible target, or a plain rank cannot
/// be split across types unambiguously.
Page cancel(const Page& page, const RankAssignment& ranks);

/// Sums a page along anti-diagonals, regrading each class to p + q.
HodgeTable collapse(const Page& page);

/// cancel(), then verifies that no later page admits a nonzero
/// differential, then collapse(). Throws ResolutionError listing any
/// leftover differentials.
HodgeTable resolve(const Page& page, const RankAssignment& ranks);

struct EulerLedgerRow {
  HodgeType type;
  std::int64_t page_sum = 0;
  std::int64_t target_sum = 0;
};

struct EulerReport {
  bool pass = true;
  std::vector<EulerLedgerRow> ledger;
};

/// Per-type alternating sums over the page (sign (-1)^{p+q}) against the
/// target (sign (-1)^degree).
EulerReport abutment_euler_check(const Page& page, const HodgeTable& target);

}  // namespace symstrata
