#include "symstrata/hodge.hpp"

#include <sstream>

namespace symstrata {

std::string to_string(Flavor f) {
  return f == Flavor::compact ? "compact" : "ordinary";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "compact") return Flavor::compact;
  if (s == "ordinary") return Flavor::ordinary;
  throw std::invalid_argument("unknown flavor '" + s + "'");
}

FlavorMismatch::FlavorMismatch(Flavor a, Flavor b)
    : std::invalid_argument("flavor mismatch: " + to_string(a) + " vs " +
                            to_string(b)) {}

namespace {

void require_same_flavor(const HodgeTable& a, const HodgeTable& b) {
  if (a.flavor() != b.flavor()) throw FlavorMismatch(a.flavor(), b.flavor());
}

std::int64_t sign_of_degree(int degree) { return degree % 2 == 0 ? 1 : -1; }

}  // namespace

HodgeTable::HodgeTable(Flavor flavor, std::initializer_list<HodgeClass> classes)
    : flavor_(flavor) {
  for (const auto& c : classes) add(c);
}

HodgeTable HodgeTable::unit(Flavor flavor) {
  HodgeTable t(flavor);
  t.add(0, {0, 0}, 1);
  return t;
}

void HodgeTable::add(int degree, HodgeType type, std::int64_t mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity");
  if (mult == 0) return;
  entries_[Key{degree, type}] += mult;
}

std::int64_t HodgeTable::multiplicity(int degree, HodgeType type) const {
  auto it = entries_.find(Key{degree, type});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t HodgeTable::dimension() const {
  std::int64_t total = 0;
  for (const auto& [key, mult] : entries_) total += mult;
  return total;
}

std::vector<HodgeClass> HodgeTable::classes() const {
  std::vector<HodgeClass> out;
  out.reserve(entries_.size());
  for (const auto& [key, mult] : entries_) {
    out.push_back(HodgeClass{key.degree, key.type, mult});
  }
  return out;
}

// ---------------------------------------------------------------- EPoly

EPoly::EPoly(std::int64_t constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

EPoly EPoly::monomial(int p, int q, std::int64_t coeff) {
  EPoly e;
  e.add_term(p, q, coeff);
  return e;
}

std::int64_t EPoly::coeff(int p, int q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? 0 : it->second;
}

void EPoly::add_term(int p, int q, std::int64_t c) {
  if (c == 0) return;
  auto& slot = terms_[{p, q}];
  slot += c;
  if (slot == 0) terms_.erase({p, q});
}

bool EPoly::is_tate() const {
  for (const auto& [mono, c] : terms_) {
    if (mono.first != mono.second) return false;
  }
  return true;
}

EPoly& EPoly::operator+=(const EPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono.first, mono.second, c);
  return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono.first, mono.second, -c);
  return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
  EPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
    }
  }
  return out;
}

std::string EPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [p, q] = it->first;
    std::int64_t c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t mag = c < 0 ? -c : c;
    bool bare = (p == 0 && q == 0);
    if (mag != 1 || bare) os << mag;
    auto var = [&os](const char* name, int e) {
      if (e == 0) return;
      os << name;
      if (e != 1) os << "^" << e;
    };
    var("u", p);
    var("v", q);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- algebra

HodgeTable direct_sum(const HodgeTable& a, const HodgeTable& b) {
  require_same_flavor(a, b);
  HodgeTable out = a;
  for (const auto& [key, mult] : b) out.add(key.degree, key.type, mult);
  return out;
}

HodgeTable tensor(const HodgeTable& a, const HodgeTable& b) {
  require_same_flavor(a, b);
  HodgeTable out(a.flavor());
  for (const auto& [ka, ma] : a) {
    for (const auto& [kb, mb] : b) {
      out.add(ka.degree + kb.degree,
              {ka.type.p + kb.type.p, ka.type.q + kb.type.q}, ma * mb);
    }
  }
  return out;
}

HodgeTable subtract(const HodgeTable& a, const HodgeTable& b) {
  require_same_flavor(a, b);
  HodgeTable out(a.flavor());
  for (const auto& [key, mult] : a) {
    std::int64_t rest = mult - b.multiplicity(key.degree, key.type);
    if (rest < 0) throw std::invalid_argument("subtrahend not contained in table");
    out.add(key.degree, key.type, rest);
  }
  for (const auto& [key, mult] : b) {
    if (a.multiplicity(key.degree, key.type) == 0) {
      throw std::invalid_argument("subtrahend not contained in table");
    }
  }
  return out;
}

HodgeTable tate_twist(const HodgeTable& v, int k) {
  HodgeTable out(v.flavor());
  for (const auto& [key, mult] : v) {
    out.add(key.degree, {key.type.p - k, key.type.q - k}, mult);
  }
  return out;
}

HodgeTable poincare_dual(const HodgeTable& v, int d) {
  Flavor target =
      v.flavor() == Flavor::compact ? Flavor::ordinary : Flavor::compact;
  HodgeTable out(target);
  for (const auto& [key, mult] : v) {
    int degree = 2 * d - key.degree;
    if (degree < 0 || degree > 2 * d) {
      throw std::out_of_range("Poincare dual degree " + std::to_string(degree) +
                              " outside [0, " + std::to_string(2 * d) + "]");
    }
    out.add(degree, {d - key.type.p, d - key.type.q}, mult);
  }
  return out;
}

EPoly epoly(const HodgeTable& v) {
  if (v.flavor() != Flavor::compact) {
    throw std::invalid_argument("E-polynomial needs compactly supported cohomology");
  }
  EPoly e;
  for (const auto& [key, mult] : v) {
    e.add_term(key.type.p, key.type.q, sign_of_degree(key.degree) * mult);
  }
  return e;
}

std::vector<std::int64_t> betti(const HodgeTable& v) {
  std::vector<std::int64_t> out;
  for (const auto& [key, mult] : v) {
    if (key.degree < 0) throw std::out_of_range("negative cohomological degree");
    if (static_cast<std::size_t>(key.degree) >= out.size()) {
      out.resize(key.degree + 1, 0);
    }
    out[key.degree] += mult;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::map<HodgeType, std::int64_t> euler_by_type(const HodgeTable& v) {
  std::map<HodgeType, std::int64_t> out;
  for (const auto& [key, mult] : v) {
    out[key.type] += sign_of_degree(key.degree) * mult;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::int64_t euler_characteristic(const HodgeTable& v) {
  std::int64_t chi = 0;
  for (const auto& [key, mult] : v) chi += sign_of_degree(key.degree) * mult;
  return chi;
}

WeightReport weight_window_check(const HodgeTable& v, int d) {
  WeightReport report;
  for (const auto& c : v.classes()) {
    int w = c.weight();
    bool ok = v.flavor() == Flavor::ordinary
                  ? (c.degree <= w && w <= 2 * c.degree)
                  : (2 * c.degree - 2 * d <= w && w <= c.degree);
    if (!ok) {
      report.pass = false;
      report.offending.push_back(c);
    }
  }
  return report;
}

std::string to_string(const HodgeTable& v) {
  std::ostringstream os;
  os << to_string(v.flavor()) << " {";
  bool first = true;
  for (const auto& c : v.classes()) {
    if (!first) os << ", ";
    os << "(" << c.degree << ",(" << c.type.p << "," << c.type.q << "))x"
       << c.mult;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace symstrata
