#include "symstrata/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symstrata/json_io.hpp"
#include "symstrata/plethysm.hpp"

namespace symstrata {

namespace {

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Parsing of user-supplied values happens before any computation; every
// failure there is a usage error.
template <class F>
auto parse_arg(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::int64_t> parse_primes(const std::string& csv) {
  std::vector<std::int64_t> out;
  for (int v : parse_int_range(csv)) {
    if (!is_prime(v)) throw std::invalid_argument(std::to_string(v) + " is not prime");
    out.push_back(v);
  }
  return out;
}

void write_grid(std::ostream& out, const Page& page) {
  if (page.empty()) {
    out << "q\\p\n";
    return;
  }
  int min_p = 0, max_p = 0;
  int min_q = page.entries().begin()->first.q, max_q = min_q;
  for (const auto& [pos, t] : page.entries()) {
    min_p = std::min(min_p, pos.p);
    max_p = std::max(max_p, pos.p);
    min_q = std::min(min_q, pos.q);
    max_q = std::max(max_q, pos.q);
  }
  out << "q\\p";
  for (int p = min_p; p <= max_p; ++p) out << "\t" << p;
  out << "\n";
  for (int q = max_q; q >= min_q; --q) {
    out << q;
    for (int p = min_p; p <= max_p; ++p) {
      std::int64_t d = page.dimension({p, q});
      out << "\t";
      if (d == 0) {
        out << ".";
      } else {
        out << d;
      }
    }
    out << "\n";
  }
}

Json differentials_json(const Page& page) {
  Json out = Json::array();
  for (const auto& d : admissible_differentials(page)) {
    out.push_back({{"source", {d.source.p, d.source.q}},
                   {"target", {d.target.p, d.target.q}},
                   {"max_rank", d.max_rank}});
  }
  return out;
}

int emit_report(const ConsistencyReport& report, bool json, std::ostream& out) {
  if (json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << render_text(report);
  }
  return report.verdict == Verdict::inconsistent ? exit_code::inconsistent : exit_code::ok;
}

}  // namespace

// ---------------------------------------------------------------- cache

CountCache::CountCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      Json j = Json::parse(line);
      if (j.value("engine_version", std::string{}) != kEngineVersion) continue;
      CountRecord r = count_record_from_json(j);
      records_[{r.lambda, r.q, r.method}] = r;
    } catch (const std::exception&) {
      // Unreadable lines are dropped and disappear on the next save.
    }
  }
}

std::optional<CountRecord> CountCache::find(const Partition& lambda, std::int64_t q,
                                            CountMethod method) const {
  auto it = records_.find({lambda, q, method});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void CountCache::insert(const CountRecord& record) {
  records_[{record.lambda, record.q, record.method}] = record;
  save();
}

void CountCache::save() const {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    for (const auto& [key, record] : records_) out << to_json(record).dump() << "\n";
  }
  std::filesystem::rename(tmp, path_);
}

std::filesystem::path default_cache_path() {
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "symstrata" / "counts.jsonl";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "symstrata" / "counts.jsonl";
  }
  return {};
}

std::vector<int> parse_int_range(const std::string& text) {
  auto to_int = [&text](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed range '" + text + "'");
    }
    if (used != s.size()) throw std::invalid_argument("malformed range '" + text + "'");
    return v;
  };
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = to_int(text.substr(0, dots));
    int hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  if (out.empty()) throw std::invalid_argument("empty range");
  return out;
}

// ---------------------------------------------------------------- commands

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symstrata: cohomology, point counts and E-polynomials of strata of Sym^m(P^1)"};
  app.require_subcommand(1);

  std::string format = "tsv";
  std::string cache_arg;
  bool no_cache = false;
  std::uint64_t budget = kDefaultBruteBudget;
  auto* format_opt =
      app.add_option("--format", format, "tsv or json (check reports default to json)")
          ->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--cache", cache_arg, "count cache file (JSON lines)");
  app.add_flag("--no-cache", no_cache, "do not read or write the count cache");
  app.add_option("--budget", budget, "maximum divisors enumerated by brute-force counting");

  std::string space, base, fiber, action = "trivial", lambda_arg, primes_arg, method_arg = "fast",
              name_arg, n_range, degrees_arg, claim_arg, variant_arg = "lowest";
  int n = 0, order = 0, d = 0;
  std::int64_t q = 0, held_out = 0;
  bool compact = false, affine = false;

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers (ordinary unless --compact)");
  betti_cmd->add_option("--space", space)->required();
  betti_cmd->add_flag("--compact", compact);

  auto* e1_cmd = app.add_subcommand("e1", "E1 page converging to H_c(UConf_n X)");
  e1_cmd->add_option("--space", space)->required();
  e1_cmd->add_option("--n", n)->required();

  auto* serre_cmd = app.add_subcommand("serre", "Serre E2 page of a fibration");
  serre_cmd->add_option("--base", base)->required();
  serre_cmd->add_option("--fiber", fiber)->required();
  serre_cmd->add_option("--action", action, "trivial or split:<file>");

  auto* count_cmd = app.add_subcommand("count", "F_q points of a stratum w_lambda(P^1)");
  count_cmd->add_option("--lambda", lambda_arg)->required();
  count_cmd->add_option("--q", q)->required();
  count_cmd->add_option("--method", method_arg)->check(CLI::IsMember({"brute", "fast", "strata"}));

  auto* interp_cmd = app.add_subcommand("interp", "interpolate the point count in q");
  interp_cmd->add_option("--lambda", lambda_arg)->required();
  interp_cmd->add_option("--primes", primes_arg);
  interp_cmd->add_option("--held-out", held_out);

  auto* zeta_cmd = app.add_subcommand("zeta", "Kapranov zeta function of a space");
  zeta_cmd->add_option("--space", space)->required();
  zeta_cmd->add_option("--order", order)->required();

  auto* epoly_cmd = app.add_subcommand("epoly", "E-polynomial of w_lambda(P^1)");
  epoly_cmd->add_option("--lambda", lambda_arg)->required();

  auto* occam_cmd = app.add_subcommand("occam", "minimal Hodge table compatible with counts");
  occam_cmd->add_option("--lambda", lambda_arg)->required();
  occam_cmd->add_option("--d", d)->required();
  occam_cmd->add_option("--variant", variant_arg)->check(CLI::IsMember({"lowest", "highest"}));
  occam_cmd->add_flag("--affine", affine, "also impose Artin vanishing");

  auto* check_cmd = app.add_subcommand("check", "consistency checks");
  check_cmd->require_subcommand(1);
  auto* theorem_cmd = check_cmd->add_subcommand("theorem-a", "re-derive H^*(w_{1^n 2 2})");
  theorem_cmd->add_option("--n", n)->required();
  auto* trace_cmd = check_cmd->add_subcommand("trace", "trace formula vs point counts");
  trace_cmd->add_option("--lambda", lambda_arg)->required();
  trace_cmd->add_option("--claim", claim_arg)->required();
  trace_cmd->add_option("--primes", primes_arg);
  auto* conj_cmd = check_cmd->add_subcommand("conjecture", "evaluate a stability conjecture");
  conj_cmd->add_option("--name", name_arg)->required();
  conj_cmd->add_option("--n", n_range)->required();
  conj_cmd->add_option("--degrees", degrees_arg);

  for (CLI::App* sub : {betti_cmd, e1_cmd, serre_cmd, count_cmd, interp_cmd, zeta_cmd, epoly_cmd,
                        occam_cmd, check_cmd, theorem_cmd, trace_cmd, conj_cmd}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage_error;
  }

  const bool json = format == "json";
  const bool report_json = format_opt->count() == 0 || json;
  try {
    if (*betti_cmd) {
      SpaceId id = parse_arg([&] { return SpaceId::parse(space); });
      if (id.kind == SpaceKind::W1n23) {
        if (compact) throw std::runtime_error("only ordinary Betti bounds are known for " + space);
        BettiBounds b = bounds_w1n23(id.param);
        if (json) {
          out << Json{{"space", id.to_string()}, {"bounds", to_json(b)}}.dump(2) << "\n";
        } else {
          out << "degree\tlower\tupper\n";
          for (std::size_t i = 0; i < b.lower.size(); ++i) {
            out << i << "\t" << b.lower[i] << "\t" << b.upper[i] << "\n";
          }
        }
        return exit_code::ok;
      }
      HodgeTable table = compact ? hc_table(id) : ordinary_table(id);
      auto dims = betti(table);
      if (json) {
        out << Json{{"space", id.to_string()},
                    {"flavor", to_string(table.flavor())},
                    {"betti", dims},
                    {"table", to_json(table)}}
                   .dump(2)
            << "\n";
      } else {
        for (std::size_t i = 0; i < dims.size(); ++i) out << i << "\t" << dims[i] << "\n";
      }
      return exit_code::ok;
    }

    if (*e1_cmd) {
      SpaceId id = parse_arg([&] { return SpaceId::parse(space); });
      if (n < 1) throw UsageError("--n must be >= 1");
      Page page = e1_page(hc_table(id), n);
      if (json) {
        Json j = to_json(page);
        j["admissible_differentials"] = differentials_json(page);
        out << j.dump(2) << "\n";
      } else {
        write_grid(out, page);
      }
      return exit_code::ok;
    }

    if (*serre_cmd) {
      SpaceId base_id = parse_arg([&] { return SpaceId::parse(base); });
      SpaceId fiber_id = parse_arg([&] { return SpaceId::parse(fiber); });
      HodgeTable base_all = ordinary_table(base_id);
      HodgeTable fiber_all = ordinary_table(fiber_id);
      HodgeTable base_sign(Flavor::ordinary), fiber_sign(Flavor::ordinary);
      if (action.rfind("split:", 0) == 0) {
        std::ifstream in(action.substr(6));
        if (!in) throw UsageError("cannot read action file " + action.substr(6));
        Json action_json = parse_arg([&] { return Json::parse(in); });
        base_sign = parse_arg([&] { return hodge_table_from_json(action_json.at("base_sign")); });
        fiber_sign = parse_arg([&] { return hodge_table_from_json(action_json.at("fiber_sign")); });
      } else if (action != "trivial") {
        throw UsageError("--action must be trivial or split:<file>");
      }
      Page page = serre_e2(subtract(base_all, base_sign), base_sign, subtract(fiber_all, fiber_sign),
                           fiber_sign);
      if (json) {
        Json j = to_json(page);
        j["admissible_differentials"] = differentials_json(page);
        out << j.dump(2) << "\n";
      } else {
        write_grid(out, page);
      }
      return exit_code::ok;
    }

    if (*count_cmd) {
      Partition lambda = parse_arg([&] { return Partition::parse(lambda_arg); });
      CountMethod method = parse_count_method(method_arg);
      if (!is_prime(q)) throw UsageError("--q must be prime");
      int ones = 0;
      if (method == CountMethod::strata) {
        auto mult = lambda.multiplicities();
        ones = mult.count(1) ? mult.at(1) : 0;
        if (!(lambda == Partition::w1n22(ones))) {
          throw UsageError("--method strata counts only lambda = 1^n,2,2");
        }
      }
      std::optional<CountCache> cache;
      if (!no_cache) {
        std::filesystem::path path =
            cache_arg.empty() ? default_cache_path() : std::filesystem::path(cache_arg);
        if (!path.empty()) cache.emplace(path);
      }
      std::optional<CountRecord> record;
      if (cache) record = cache->find(lambda, q, method);
      if (!record) {
        switch (method) {
          case CountMethod::brute: record = count_brute(lambda, q, budget); break;
          case CountMethod::fast: record = count_fast(lambda, q); break;
          case CountMethod::strata: record = count_strata_w1n22(ones, q); break;
        }
        if (cache) cache->insert(*record);
      }
      if (json) {
        out << to_json(*record).dump(2) << "\n";
      } else {
        out << record->count << "\n";
      }
      return exit_code::ok;
    }

    if (*interp_cmd) {
      Partition lambda = parse_arg([&] { return Partition::parse(lambda_arg); });
      std::vector<std::int64_t> primes = primes_arg.empty()
                                             ? default_interpolation_primes(lambda)
                                             : parse_arg([&] { return parse_primes(primes_arg); });
      std::optional<std::int64_t> check;
      if (held_out != 0) check = held_out;
      QPoly poly = interpolate(lambda, primes, check);
      if (json) {
        out << Json{{"lambda", lambda.parts()}, {"polynomial", to_json(poly)},
                    {"text", poly.to_string()}}
                   .dump(2)
            << "\n";
      } else {
        out << poly.to_string() << "\n";
      }
      return exit_code::ok;
    }

    if (*zeta_cmd) {
      SpaceId id = parse_arg([&] { return SpaceId::parse(space); });
      if (order < 0) throw UsageError("--order must be >= 0");
      EZetaSeries z = kapranov_zeta(epoly(hc_table(id)), order);
      if (json) {
        out << Json{{"space", id.to_string()}, {"series", to_json(z)}}.dump(2) << "\n";
      } else {
        for (int k = 0; k <= z.order(); ++k) out << k << "\t" << z[k].to_string() << "\n";
      }
      return exit_code::ok;
    }

    if (*epoly_cmd) {
      Partition lambda = parse_arg([&] { return Partition::parse(lambda_arg); });
      EPoly e = e_wlambda_p1(lambda);
      if (json) {
        out << Json{{"lambda", lambda.parts()}, {"epoly", to_json(e)}, {"text", e.to_string()}}
                   .dump(2)
            << "\n";
      } else {
        out << e.to_string() << "\n";
      }
      return exit_code::ok;
    }

    if (*occam_cmd) {
      Partition lambda = parse_arg([&] { return Partition::parse(lambda_arg); });
      OccamVariant variant = parse_occam_variant(variant_arg);
      QPoly counts = interpolate(lambda, default_interpolation_primes(lambda));
      HodgeTable table = occam_minimal(counts, d, variant, affine);
      if (json) {
        out << Json{{"lambda", lambda.parts()}, {"counts", counts.to_string()},
                    {"table", to_json(table)}}
                   .dump(2)
            << "\n";
      } else {
        out << "degree\tp\tq\tmult\n";
        for (const auto& c : table.classes()) {
          out << c.degree << "\t" << c.type.p << "\t" << c.type.q << "\t" << c.mult << "\n";
        }
      }
      return exit_code::ok;
    }

    if (*theorem_cmd) {
      if (n < 1) throw UsageError("--n must be >= 1");
      return emit_report(check_theorem_a(n), report_json, out);
    }

    if (*trace_cmd) {
      Partition lambda = parse_arg([&] { return Partition::parse(lambda_arg); });
      SpaceId id = parse_arg([&] { return SpaceId::parse(claim_arg); });
      std::vector<std::int64_t> primes = primes_arg.empty()
                                             ? default_interpolation_primes(lambda)
                                             : parse_arg([&] { return parse_primes(primes_arg); });
      QPoly counts = interpolate(lambda, primes);
      ConsistencyReport report = trace_check(ordinary_table(id), dimension(id), counts);
      report.subject = "trace of " + id.to_string() + " vs counts of w_{" + lambda.to_string() + "}";
      return emit_report(report, report_json, out);
    }

    if (*conj_cmd) {
      Conjecture statement = parse_arg([&] { return parse_conjecture(name_arg); });
      std::vector<int> ns = parse_arg([&] { return parse_int_range(n_range); });
      std::optional<std::vector<int>> degrees;
      if (!degrees_arg.empty()) degrees = parse_arg([&] { return parse_int_range(degrees_arg); });
      if (statement == Conjecture::stable_limits_one_in_degrees_0_1) {
        for (int v : ns) {
          if (v < 2) throw UsageError("--n values must be >= 2");
        }
      }
      return emit_report(check_conjecture(statement, ns, degrees), report_json, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::computation_error;
  }
  err << "usage error: no command\n";
  return exit_code::usage_error;
}

}  // namespace symstrata
