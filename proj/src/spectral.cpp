#include "symstrata/spectral.hpp"

#include <algorithm>
#include <sstream>

#include "symstrata/plethysm.hpp"

namespace symstrata {

namespace {

std::map<HodgeType, std::int64_t> by_type(const HodgeTable& t) {
  std::map<HodgeType, std::int64_t> out;
  for (const auto& [key, mult] : t) out[key.type] += mult;
  return out;
}

std::string describe(Position a) {
  return "(" + std::to_string(a.p) + "," + std::to_string(a.q) + ")";
}

Position target_of(const Page& page, Position source) {
  Position s = page.shape();
  return {source.p + s.p, source.q + s.q};
}

std::int64_t type_preserving_bound(const HodgeTable& source,
                                   const HodgeTable& target) {
  auto src = by_type(source);
  auto tgt = by_type(target);
  std::int64_t bound = 0;
  for (const auto& [type, m] : src) {
    auto it = tgt.find(type);
    if (it != tgt.end()) bound += std::min(m, it->second);
  }
  return bound;
}

// Removes `count` classes of the given type from the table, taking them in
// degree order. Entries of a page share one abutment position, so which
// stored degree is removed first does not affect the result.
void remove_type(HodgeTable& t, HodgeType type, std::int64_t count) {
  HodgeTable taken(t.flavor());
  for (const auto& [key, mult] : t) {
    if (count == 0) break;
    if (key.type != type) continue;
    std::int64_t k = std::min(mult, count);
    taken.add(key.degree, key.type, k);
    count -= k;
  }
  if (count != 0) throw ResolutionError("not enough classes to cancel");
  t = subtract(t, taken);
}

}  // namespace

// ---------------------------------------------------------------- Page

Page::Page(Flavor flavor, int page_index) : flavor_(flavor), page_index_(page_index) {
  set_page_index(page_index);
}

void Page::set_page_index(int r) {
  if (r < 1) throw std::invalid_argument("page index must be >= 1");
  page_index_ = r;
}

void Page::add(Position at, const HodgeTable& table) {
  if (table.flavor() != flavor_) throw FlavorMismatch(flavor_, table.flavor());
  if (table.empty()) return;
  auto it = entries_.find(at);
  if (it == entries_.end()) {
    entries_.emplace(at, table);
  } else {
    it->second = direct_sum(it->second, table);
  }
}

HodgeTable Page::at(Position pos) const {
  auto it = entries_.find(pos);
  return it == entries_.end() ? HodgeTable(flavor_) : it->second;
}

std::int64_t Page::dimension(Position pos) const {
  auto it = entries_.find(pos);
  return it == entries_.end() ? 0 : it->second.dimension();
}

void RankAssignment::set(Position source, int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  totals_[source] = rank;
}

void RankAssignment::set(Position source, HodgeType type, int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  per_type_[source][type] = rank;
}

// ---------------------------------------------------------------- builders

Page e1_page(const HodgeTable& hc_x, int n) {
  if (hc_x.flavor() != Flavor::compact) {
    throw std::invalid_argument("e1_page expects compactly supported cohomology");
  }
  if (n < 1) throw std::invalid_argument("e1_page needs n >= 1");
  Page page(Flavor::compact, 1);
  HodgeTable odd = odd_part(hc_x);
  HodgeTable even = even_part(hc_x);
  for (int p = 0; 2 * p <= n; ++p) {
    HodgeTable left(Flavor::compact);
    for (int i = 0; i <= p; ++i) {
      left = direct_sum(left, tensor(sym_plain(odd, i), ext_plain(even, p - i)));
    }
    HodgeTable full = tensor(left, graded_sym(hc_x, n - 2 * p));
    for (const auto& [key, mult] : full) {
      HodgeTable cell(Flavor::compact);
      cell.add(key.degree, key.type, mult);
      page.add({p, key.degree}, cell);
    }
  }
  return page;
}

Page serre_e2(const HodgeTable& base_triv, const HodgeTable& base_sign,
              const HodgeTable& fiber_triv, const HodgeTable& fiber_sign) {
  for (const HodgeTable* t : {&base_triv, &base_sign, &fiber_triv, &fiber_sign}) {
    if (t->flavor() != Flavor::ordinary) {
      throw std::invalid_argument("serre_e2 expects ordinary cohomology");
    }
  }
  Page page(Flavor::ordinary, 2);
  auto place = [&page](const HodgeTable& base, const HodgeTable& fiber) {
    for (const auto& [kb, mb] : base) {
      for (const auto& [kf, mf] : fiber) {
        HodgeTable cell(Flavor::ordinary);
        cell.add(kb.degree + kf.degree,
                 {kb.type.p + kf.type.p, kb.type.q + kf.type.q}, mb * mf);
        page.add({kb.degree, kf.degree}, cell);
      }
    }
  };
  place(base_triv, fiber_triv);
  place(base_sign, fiber_sign);
  return page;
}

// ---------------------------------------------------------------- analysis

std::vector<Differential> admissible_differentials(const Page& page) {
  std::vector<Differential> out;
  for (const auto& [source, table] : page.entries()) {
    Position target = target_of(page, source);
    if (!page.contains(target)) continue;
    out.push_back({source, target, type_preserving_bound(table, page.at(target))});
  }
  return out;
}

Page cancel(const Page& page, const RankAssignment& ranks) {
  // Resolve every requested rank into a per-type rank first.
  std::map<Position, std::map<HodgeType, std::int64_t>> plan;
  std::vector<Position> sources;
  for (const auto& [pos, r] : ranks.totals()) sources.push_back(pos);
  for (const auto& [pos, r] : ranks.per_type()) sources.push_back(pos);
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

  for (Position source : sources) {
    Position target = target_of(page, source);
    auto src = by_type(page.at(source));
    auto tgt = by_type(page.at(target));
    std::map<HodgeType, std::int64_t> caps;
    for (const auto& [type, m] : src) {
      auto it = tgt.find(type);
      if (it != tgt.end()) caps[type] = std::min(m, it->second);
    }
    std::int64_t bound = 0;
    for (const auto& [type, c] : caps) bound += c;

    std::map<HodgeType, std::int64_t> chosen;
    auto typed = ranks.per_type().find(source);
    if (typed != ranks.per_type().end()) {
      for (const auto& [type, r] : typed->second) {
        if (r == 0) continue;
        auto cap = caps.find(type);
        if (cap == caps.end() || r > cap->second) {
          throw ResolutionError("rank " + std::to_string(r) + " at " + describe(source) +
                                " exceeds its type-preserving bound");
        }
        chosen[type] = r;
      }
    }
    auto plain = ranks.totals().find(source);
    if (plain != ranks.totals().end() && plain->second != 0) {
      if (!chosen.empty()) {
        throw ResolutionError("both plain and per-type ranks given at " + describe(source));
      }
      std::int64_t r = plain->second;
      if (r > bound) {
        throw ResolutionError("rank " + std::to_string(r) + " at " + describe(source) +
                              " exceeds bound " + std::to_string(bound));
      }
      if (r == bound) {
        chosen = caps;
      } else {
        std::vector<HodgeType> open;
        for (const auto& [type, c] : caps) {
          if (c > 0) open.push_back(type);
        }
        if (open.size() != 1) {
          throw ResolutionError("rank at " + describe(source) +
                                " is ambiguous across Hodge types; give per-type ranks");
        }
        chosen[open.front()] = r;
      }
    }
    std::erase_if(chosen, [](const auto& kv) { return kv.second == 0; });
    if (!chosen.empty()) plan[source] = std::move(chosen);
  }

  // Within a type, the image of the incoming map and the complement of the
  // kernel of the outgoing map are disjoint, so in + out <= dim.
  std::map<Position, std::map<HodgeType, std::int64_t>> removal;
  for (const auto& [source, chosen] : plan) {
    Position target = target_of(page, source);
    for (const auto& [type, r] : chosen) {
      removal[source][type] += r;
      removal[target][type] += r;
    }
  }
  Page next(page.flavor(), page.page_index() + 1);
  for (const auto& [pos, table] : page.entries()) {
    HodgeTable left = table;
    auto it = removal.find(pos);
    if (it != removal.end()) {
      auto available = by_type(table);
      for (const auto& [type, r] : it->second) {
        if (r > available[type]) {
          throw ResolutionError("incoming plus outgoing rank exceeds the dimension at " +
                                describe(pos));
        }
        remove_type(left, type, r);
      }
    }
    next.add(pos, left);
  }
  return next;
}

HodgeTable collapse(const Page& page) {
  HodgeTable out(page.flavor());
  for (const auto& [pos, table] : page.entries()) {
    for (const auto& [key, mult] : table) out.add(pos.p + pos.q, key.type, mult);
  }
  return out;
}

HodgeTable resolve(const Page& page, const RankAssignment& ranks) {
  Page next = cancel(page, ranks);
  if (next.empty()) return collapse(next);

  int min_p = next.entries().begin()->first.p;
  int max_p = min_p;
  for (const auto& [pos, t] : next.entries()) {
    min_p = std::min(min_p, pos.p);
    max_p = std::max(max_p, pos.p);
  }
  // The page the ranks were given for still counts: a source left without a
  // rank there is undetermined. d_r moves r columns, so nothing survives past
  // r = max_p - min_p.
  auto assigned = [&ranks](Position source) {
    return ranks.totals().count(source) != 0 || ranks.per_type().count(source) != 0;
  };
  std::ostringstream leftovers;
  bool any = false;
  for (int r = page.page_index(); r <= max_p - min_p; ++r) {
    Page probe = next;
    probe.set_page_index(r);
    for (const auto& d : admissible_differentials(probe)) {
      if (d.max_rank == 0) continue;
      if (r == page.page_index() && assigned(d.source)) continue;
      leftovers << (any ? ", " : "") << "d" << r << ":" << describe(d.source) << "->"
                << describe(d.target) << " (rank <= " << d.max_rank << ")";
      any = true;
    }
  }
  if (any) {
    throw ResolutionError("undetermined differentials remain: " + leftovers.str());
  }
  return collapse(next);
}

EulerReport abutment_euler_check(const Page& page, const HodgeTable& target) {
  if (page.flavor() != target.flavor()) throw FlavorMismatch(page.flavor(), target.flavor());
  std::map<HodgeType, std::pair<std::int64_t, std::int64_t>> sums;
  for (const auto& [pos, table] : page.entries()) {
    std::int64_t sign = (pos.p + pos.q) % 2 == 0 ? 1 : -1;
    for (const auto& [key, mult] : table) sums[key.type].first += sign * mult;
  }
  for (const auto& [type, value] : euler_by_type(target)) sums[type].second += value;

  EulerReport report;
  for (const auto& [type, s] : sums) {
    report.ledger.push_back({type, s.first, s.second});
    if (s.first != s.second) report.pass = false;
  }
  return report;
}

}  // namespace symstrata
