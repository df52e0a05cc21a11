#include "symstrata/catalog.hpp"

#include <array>
#include <random>
#include <sstream>

#include "symstrata/arith.hpp"
#include "symstrata/plethysm.hpp"

namespace symstrata {

namespace {

int parse_positive(const std::string& text, const std::string& whole, int min_value) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed space id '" + whole + "'");
  }
  if (used != text.size() || value < min_value) {
    throw std::invalid_argument("malformed space id '" + whole + "'");
  }
  return value;
}

std::int64_t mod(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

HodgeTable tate_line(Flavor flavor, std::initializer_list<std::pair<int, int>> degree_type) {
  HodgeTable t(flavor);
  for (auto [degree, k] : degree_type) t.add(degree, {k, k}, 1);
  return t;
}

}  // namespace

// ---------------------------------------------------------------- SpaceId

SpaceId SpaceId::parse(const std::string& text) {
  if (text == "p1") return {SpaceKind::P1, 0};
  if (text == "p2") return {SpaceKind::P2, 0};
  if (text == "a1") return {SpaceKind::A1, 0};
  if (text == "gm") return {SpaceKind::Gm, 0};
  if (text == "p1-minus-deg2") return {SpaceKind::P1MinusDeg2Point, 0};
  if (text == "uconf:p1:2") return {SpaceKind::UConf2P1, 0};
  if (text == "pconf:p1:2") return {SpaceKind::PConf2P1, 0};
  if (text.rfind("sym:p1:", 0) == 0) {
    return {SpaceKind::SymP1, parse_positive(text.substr(7), text, 0)};
  }
  if (text.rfind("uconf:gm:", 0) == 0) {
    return {SpaceKind::UConfGm, parse_positive(text.substr(9), text, 1)};
  }
  if (text.rfind("w:", 0) == 0) {
    Partition lambda = Partition::parse(text.substr(2));
    auto mult = lambda.multiplicities();
    int ones = mult.count(1) ? mult.at(1) : 0;
    if (lambda == Partition({1})) return {SpaceKind::P1, 0};
    if (lambda == Partition({1, 1})) return {SpaceKind::UConf2P1, 0};
    if (ones >= 1 && lambda == Partition::w1n22(ones)) return {SpaceKind::W1n22, ones};
    if (ones >= 2 && lambda == Partition::w1n23(ones)) return {SpaceKind::W1n23, ones};
    throw UnsupportedSpace("stratum w_{" + lambda.to_string() + "} is not in the catalog");
  }
  throw std::invalid_argument("unknown space id '" + text + "'");
}

std::string SpaceId::to_string() const {
  switch (kind) {
    case SpaceKind::P1: return "p1";
    case SpaceKind::P2: return "p2";
    case SpaceKind::A1: return "a1";
    case SpaceKind::Gm: return "gm";
    case SpaceKind::SymP1: return "sym:p1:" + std::to_string(param);
    case SpaceKind::UConf2P1: return "uconf:p1:2";
    case SpaceKind::PConf2P1: return "pconf:p1:2";
    case SpaceKind::UConfGm: return "uconf:gm:" + std::to_string(param);
    case SpaceKind::W1n22: return "w:" + Partition::w1n22(param).to_string();
    case SpaceKind::W1n23: return "w:" + Partition::w1n23(param).to_string();
    case SpaceKind::P1MinusDeg2Point: return "p1-minus-deg2";
  }
  return "?";
}

int dimension(const SpaceId& space) {
  switch (space.kind) {
    case SpaceKind::P1:
    case SpaceKind::A1:
    case SpaceKind::Gm:
    case SpaceKind::P1MinusDeg2Point:
      return 1;
    case SpaceKind::P2:
    case SpaceKind::UConf2P1:
    case SpaceKind::PConf2P1:
      return 2;
    case SpaceKind::SymP1:
    case SpaceKind::UConfGm:
      return space.param;
    case SpaceKind::W1n22:
    case SpaceKind::W1n23:
      return space.param + 2;
  }
  return 0;
}

// ---------------------------------------------------------------- tables

HodgeTable uconf_gm_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("UConf_n(C^x) needs n >= 1");
  HodgeTable t(Flavor::ordinary);
  for (int i = 0; i <= n; ++i) t.add(i, {i, i}, (i == 0 || i == n) ? 1 : 2);
  return t;
}

HodgeTable w1n22_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("w_{1^n 2 2} needs n >= 1");
  return uconf_gm_closed_form(n);
}

HodgeTable hc_table(const SpaceId& space) {
  const Flavor c = Flavor::compact;
  switch (space.kind) {
    case SpaceKind::P1: return tate_line(c, {{0, 0}, {2, 1}});
    case SpaceKind::P2: return tate_line(c, {{0, 0}, {2, 1}, {4, 2}});
    case SpaceKind::A1: return tate_line(c, {{2, 1}});
    case SpaceKind::Gm:
    // Over C the two removed points are just two points; only the Frobenius
    // action (and so the point count) distinguishes it from Gm.
    case SpaceKind::P1MinusDeg2Point:
      return tate_line(c, {{1, 0}, {2, 1}});
    case SpaceKind::SymP1:
      if (space.param < 0) throw std::invalid_argument("Sym^k needs k >= 0");
      return graded_sym(hc_table({SpaceKind::P1, 0}), space.param);
    case SpaceKind::UConf2P1: return tate_line(c, {{4, 2}});
    case SpaceKind::PConf2P1: return tate_line(c, {{2, 1}, {4, 2}});
    case SpaceKind::UConfGm:
      return poincare_dual(uconf_gm_closed_form(space.param), space.param);
    case SpaceKind::W1n22:
      return poincare_dual(w1n22_closed_form(space.param), space.param + 2);
    case SpaceKind::W1n23:
      throw UnsupportedSpace("cohomology of " + space.to_string() +
                             " is only bounded; use bounds_w1n23");
  }
  throw UnsupportedSpace("unsupported space");
}

HodgeTable ordinary_table(const SpaceId& space) {
  return poincare_dual(hc_table(space), dimension(space));
}

RankAssignment conic_rank_assignment() {
  RankAssignment ranks;
  ranks.set({0, 0}, 1);
  ranks.set({0, 2}, 1);
  return ranks;
}

Page w1n22_serre_page(int n) {
  HodgeTable none(Flavor::ordinary);
  return serre_e2(ordinary_table({SpaceKind::UConf2P1, 0}), none, uconf_gm_closed_form(n), none);
}

Page w1n23_serre_page(int n) {
  HodgeTable none(Flavor::ordinary);
  return serre_e2(ordinary_table({SpaceKind::PConf2P1, 0}), none, uconf_gm_closed_form(n), none);
}

BettiBounds bounds_w1n23(int n) {
  if (n < 2) throw std::invalid_argument("bounds_w1n23 needs n >= 2");
  BettiBounds b;
  b.lower = betti(w1n22_closed_form(n));
  b.upper = betti(collapse(w1n23_serre_page(n)));
  std::size_t len = static_cast<std::size_t>(n) + 3;
  b.lower.resize(len, 0);
  b.upper.resize(len, 0);
  return b;
}

// ---------------------------------------------------------------- conic

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.size() != 2 && coords_.size() != 3) {
    throw std::invalid_argument("projective points have 2 or 3 coordinates");
  }
  bool all_zero = true;
  for (const auto& c : coords_) all_zero = all_zero && c == 0;
  if (all_zero) throw std::invalid_argument("zero vector is not a projective point");
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  if (size() != o.size()) return false;
  // Proportional iff every 2x2 minor vanishes.
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (coords_[i] * o.coords_[j] != coords_[j] * o.coords_[i]) return false;
    }
  }
  return true;
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < size(); ++i) os << (i ? ":" : "") << rational_to_string(coords_[i]);
  os << "]";
  return os.str();
}

ProjPoint sym2_coords(const ProjPoint& first, const ProjPoint& second) {
  if (first.size() != 2 || second.size() != 2) {
    throw std::invalid_argument("points of P^1 have two coordinates");
  }
  const Rational& a1 = first.coords()[0];
  const Rational& b1 = first.coords()[1];
  const Rational& a2 = second.coords()[0];
  const Rational& b2 = second.coords()[1];
  return ProjPoint({a1 * a2, -(a1 * b2 + a2 * b1), b1 * b2});
}

ProjPoint diagonal_coords(const ProjPoint& pt) { return sym2_coords(pt, pt); }

bool conic_membership(const ProjPoint& pt) {
  if (pt.size() != 3) throw std::invalid_argument("conic lives in P^2");
  const auto& c = pt.coords();
  return c[1] * c[1] - 4 * c[0] * c[2] == 0;
}

std::int64_t BinaryQuadratic::discriminant() const { return mod(b * b - 4 * a * c, p); }

BinaryQuadratic restrict_conic_to_line(const Line& line, std::int64_t p) {
  std::int64_t a = mod(line.a, p), b = mod(line.b, p), c = mod(line.c, p);
  if (a == 0 && b == 0 && c == 0) throw std::invalid_argument("degenerate line");
  auto inv = [p](std::int64_t v) {
    std::int64_t r = 1, base = v, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  // Two points spanning the line.
  std::array<std::int64_t, 3> P{}, Q{};
  if (a != 0) {
    P = {mod(-b * inv(a), p), 1, 0};
    Q = {mod(-c * inv(a), p), 0, 1};
  } else if (b != 0) {
    P = {1, 0, 0};
    Q = {0, mod(-c * inv(b), p), 1};
  } else {
    P = {1, 0, 0};
    Q = {0, 1, 0};
  }
  auto F = [p](const std::array<std::int64_t, 3>& v) {
    return mod(v[1] * v[1] - 4 * v[0] * v[2], p);
  };
  BinaryQuadratic form;
  form.p = p;
  form.a = F(P);
  form.c = F(Q);
  form.b = mod(2 * P[1] * Q[1] - 4 * (P[0] * Q[2] + Q[0] * P[2]), p);
  return form;
}

Line conic_tangent(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t p) {
  if (mod(y * y - 4 * x * z, p) != 0) throw std::invalid_argument("point is not on the conic");
  return {mod(-4 * z, p), mod(2 * y, p), mod(-4 * x, p)};
}

ConicLineReport conic_line_degree(std::int64_t field_order, int trials, std::uint64_t seed) {
  if (field_order == 2 || !is_prime(field_order)) {
    throw std::invalid_argument("conic_line_degree needs an odd prime field");
  }
  if (trials < 0) throw std::invalid_argument("negative trial count");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, field_order - 1);
  auto is_square = [field_order](std::int64_t v) {
    for (std::int64_t s = 0; s < field_order; ++s) {
      if (s * s % field_order == v) return true;
    }
    return false;
  };

  ConicLineReport report;
  report.field_order = field_order;
  report.trials = trials;
  constexpr int kMaxResamples = 64;
  for (int t = 0; t < trials; ++t) {
    Line line;
    int attempts = 0;
    do {
      if (attempts++ == kMaxResamples) {
        throw std::runtime_error("degenerate line sampling exhausted");
      }
      line = {coeff(rng), coeff(rng), coeff(rng)};
    } while (line.a == 0 && line.b == 0 && line.c == 0);

    BinaryQuadratic form = restrict_conic_to_line(line, field_order);
    if (form.is_zero()) continue;
    ++report.degree_two;
    std::int64_t disc = form.discriminant();
    if (disc == 0) {
      ++report.double_root;
    } else if (is_square(disc)) {
      ++report.split;
    } else {
      ++report.inert;
    }
  }
  return report;
}

}  // namespace symstrata
