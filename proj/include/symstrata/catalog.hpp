#pragma once

// Closed-form cohomology of the spaces that appear in the stratification of
// Sym^m(P^1), plus the conic fixtures behind the Delta^* computation.
//
// All tables use standard (positive) weights: H^i(UConf_n C^x) is stored as
// type (i, i). Statements of the same results written with the opposite
// sign convention differ by a global Tate twist only.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symstrata/hodge.hpp"
#include "symstrata/qpoly.hpp"
#include "symstrata/spectral.hpp"

namespace symstrata {

enum class SpaceKind {
  P1,
  P2,
  A1,
  Gm,
  SymP1,           // Sym^k(P^1) = P^k, parameter k >= 0
  UConf2P1,        // w_{1,1}(P^1)
  PConf2P1,        // ordered pairs of distinct points; base of w_{1^n 2 3}
  UConfGm,         // UConf_n(C^x), parameter n >= 1
  W1n22,           // w_{1^n 2 2}(P^1), parameter n >= 1
  W1n23,           // w_{1^n 2 3}(P^1), parameter n >= 2
  P1MinusDeg2Point,
};

struct SpaceId {
  SpaceKind kind = SpaceKind::P1;
  int param = 0;

  /// Grammar: p1 | p2 | a1 | gm | p1-minus-deg2 | sym:p1:<k> |
  /// uconf:p1:2 | pconf:p1:2 | uconf:gm:<n> | w:<csv partition>.
  /// The w: form accepts 1 (= p1), 1,1 (= uconf:p1:2), 1^n,2,2 and 1^n,2,3.
  static SpaceId parse(const std::string& text);
  std::string to_string() const;
  bool operator==(const SpaceId&) const = default;
};

class UnsupportedSpace : public std::invalid_argument {
 public:
  explicit UnsupportedSpace(const std::string& what) : std::invalid_argument(what) {}
};

/// Complex dimension.
int dimension(const SpaceId& space);

/// Stored compactly supported table. Throws UnsupportedSpace for W1n23,
/// whose cohomology is only bracketed (see bounds_w1n23).
HodgeTable hc_table(const SpaceId& space);

/// poincare_dual(hc_table(space), dimension(space)).
HodgeTable ordinary_table(const SpaceId& space);

/// H^*(UConf_n C^x): Q in degrees 0 and n, Q^2 in between, degree i of
/// type (i, i).
HodgeTable uconf_gm_closed_form(int n);

/// Ordinary cohomology of w_{1^n 2 2}(P^1); the same table as
/// uconf_gm_closed_form(n).
HodgeTable w1n22_closed_form(int n);

/// Ranks of Delta^* on e1_page(P^1, 2): the diagonal conic pulls back the
/// unit and the hyperplane class isomorphically over Q.
RankAssignment conic_rank_assignment();

/// Serre E2 page of w_{1^n 2 2} -> UConf_2(P^1) with trivial monodromy.
Page w1n22_serre_page(int n);
/// Serre E2 page of w_{1^n 2 3} -> PConf_2(P^1) with trivial monodromy.
Page w1n23_serre_page(int n);

struct BettiBounds {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
};

/// lower[i] = dim H^i(w_{1^n 2 2}), the S_2-invariants of H^i(w_{1^n 2 3});
/// upper[i] = anti-diagonal sums of the w_{1^n 2 3} Serre E2 page. Both are
/// indexed 0..n+2.
BettiBounds bounds_w1n23(int n);

// ---------------------------------------------------------------- conic

/// Homogeneous coordinates over Q; equality is up to a nonzero scalar.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Rational> coords);
  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  bool operator==(const ProjPoint& o) const;
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// [a : b] -> [a^2 : -2ab : b^2], the divisor 2[a:b] in the coordinates
/// [a1 a2 : -(a1 b2 + a2 b1) : b1 b2] on Sym^2(P^1) = P^2.
ProjPoint diagonal_coords(const ProjPoint& pt);

/// Coordinates of the unordered pair {[a1:b1], [a2:b2]}.
ProjPoint sym2_coords(const ProjPoint& first, const ProjPoint& second);

/// y^2 - 4xz == 0, the discriminant conic of binary quadratics.
bool conic_membership(const ProjPoint& pt);

/// Line a x + b y + c z = 0 over F_p.
struct Line {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
};

/// y^2 - 4xz restricted to a parametrized line: A s^2 + B s t + C t^2.
struct BinaryQuadratic {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t p = 0;
  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  std::int64_t discriminant() const;
};

BinaryQuadratic restrict_conic_to_line(const Line& line, std::int64_t p);

/// Tangent to the conic at an F_p point of it (gradient (-4z, 2y, -4x)).
Line conic_tangent(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t p);

struct ConicLineReport {
  std::int64_t field_order = 0;
  int trials = 0;
  int degree_two = 0;     // restricted form nonzero: two points with multiplicity
  int split = 0;          // two distinct rational points
  int double_root = 0;    // tangent
  int inert = 0;          // one closed point of degree 2
  bool all_degree_two() const { return degree_two == trials; }
};

/// Samples random lines over F_p (p odd) and restricts the conic to each.
ConicLineReport conic_line_degree(std::int64_t field_order, int trials,
                                  std::uint64_t seed = 0x5eed);

}  // namespace symstrata
