#include "symstrata/json_io.hpp"

namespace symstrata {

namespace {

Json rational_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const BigInt num = boost::multiprecision::numerator(r);
    if (num <= BigInt(INT64_MAX) && num >= BigInt(INT64_MIN)) {
      return static_cast<std::int64_t>(num);
    }
  }
  return rational_to_string(r);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a rational string");
}

}  // namespace

Json to_json(const HodgeTable& t) {
  Json classes = Json::array();
  for (const auto& c : t.classes()) {
    classes.push_back({{"degree", c.degree}, {"p", c.type.p}, {"q", c.type.q}, {"mult", c.mult}});
  }
  return {{"flavor", to_string(t.flavor())}, {"classes", classes}};
}

HodgeTable hodge_table_from_json(const Json& j) {
  HodgeTable t(parse_flavor(j.at("flavor").get<std::string>()));
  for (const auto& c : j.at("classes")) {
    std::int64_t mult = c.at("mult").get<std::int64_t>();
    if (mult < 1) throw std::invalid_argument("multiplicities must be >= 1");
    t.add(c.at("degree").get<int>(), {c.at("p").get<int>(), c.at("q").get<int>()}, mult);
  }
  return t;
}

Json to_json(const Page& page) {
  Json entries = Json::array();
  for (const auto& [pos, table] : page.entries()) {
    entries.push_back({{"p", pos.p}, {"q", pos.q}, {"table", to_json(table)}});
  }
  return {{"page_index", page.page_index()},
          {"shape", {page.shape().p, page.shape().q}},
          {"entries", entries}};
}

Page page_from_json(const Json& j) {
  std::optional<Page> page;
  int index = j.at("page_index").get<int>();
  for (const auto& e : j.at("entries")) {
    HodgeTable t = hodge_table_from_json(e.at("table"));
    if (!page) page.emplace(t.flavor(), index);
    page->add({e.at("p").get<int>(), e.at("q").get<int>()}, t);
  }
  return page ? *page : Page(Flavor::compact, index);
}

Json to_json(const EPoly& e) {
  Json out = Json::array();
  for (const auto& [mono, c] : e.terms()) {
    out.push_back({{"p", mono.first}, {"q", mono.second}, {"coeff", c}});
  }
  return out;
}

EPoly epoly_from_json(const Json& j) {
  EPoly e;
  for (const auto& t : j) {
    e.add_term(t.at("p").get<int>(), t.at("q").get<int>(), t.at("coeff").get<std::int64_t>());
  }
  return e;
}

Json to_json(const QPoly& poly) {
  Json out = Json::array();
  for (const auto& [k, c] : poly.terms()) {
    out.push_back({{"power", k}, {"coeff", rational_json(c)}});
  }
  return out;
}

QPoly qpoly_from_json(const Json& j) {
  QPoly p;
  for (const auto& t : j) p.add_term(t.at("power").get<int>(), rational_from_json(t.at("coeff")));
  return p;
}

Json to_json(const ZetaSeries& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(to_json(c));
  return {{"order", z.order()}, {"coefficients", coeffs}};
}

Json to_json(const EZetaSeries& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(to_json(c));
  return {{"order", z.order()}, {"coefficients", coeffs}};
}

Json to_json(const CountRecord& r) {
  return {{"lambda", r.lambda.parts()},
          {"q", r.q},
          {"count", r.count},
          {"method", to_string(r.method)},
          {"engine_version", kEngineVersion}};
}

CountRecord count_record_from_json(const Json& j) {
  CountRecord r;
  r.lambda = Partition(j.at("lambda").get<std::vector<int>>());
  r.q = j.at("q").get<std::int64_t>();
  r.count = j.at("count").get<std::int64_t>();
  r.method = parse_count_method(j.at("method").get<std::string>());
  return r;
}

Json to_json(const ConsistencyReport& r) {
  Json ledger = Json::array();
  for (const auto& row : r.ledger) {
    Json entry;
    entry["n"] = row.n ? Json(*row.n) : Json(nullptr);
    entry["degree"] = row.degree;
    entry["claimed"] = rational_json(row.claimed);
    entry["observed"] = rational_json(row.observed);
    entry["observed_upper"] = row.observed_upper ? rational_json(*row.observed_upper) : Json(nullptr);
    entry["agrees"] = row.agrees;
    ledger.push_back(std::move(entry));
  }
  Json out;
  out["subject"] = r.subject;
  out["verdict"] = to_string(r.verdict);
  out["evidence"] = {
      {"claimed", r.claimed ? to_json(*r.claimed) : Json(nullptr)},
      {"claimed_text", r.claimed ? Json(r.claimed->to_string()) : Json(nullptr)},
      {"observed", r.observed ? to_json(*r.observed) : Json(nullptr)},
      {"observed_text", r.observed ? Json(r.observed->to_string()) : Json(nullptr)},
      {"ledger", ledger}};
  out["violations"] = r.violations;
  out["notes"] = r.notes;
  return out;
}

Json to_json(const BettiBounds& b) { return {{"lower", b.lower}, {"upper", b.upper}}; }

}  // namespace symstrata
