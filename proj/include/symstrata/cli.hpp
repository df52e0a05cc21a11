#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "symstrata/arith.hpp"

namespace symstrata {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int computation_error = 1;
inline constexpr int usage_error = 2;
inline constexpr int inconsistent = 3;
}  // namespace exit_code

/// Environment variable naming the default cache file.
inline constexpr const char* kCacheEnvVar = "SYMSTRATA_CACHE";

/// JSON-lines store of CountRecords keyed by (lambda, q, method). Records
/// written by another engine version are ignored on load. Every insert
/// rewrites the file through a temporary and a rename.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path path);

  std::optional<CountRecord> find(const Partition& lambda, std::int64_t q,
                                  CountMethod method) const;
  void insert(const CountRecord& record);
  std::size_t size() const { return records_.size(); }

 private:
  using Key = std::tuple<Partition, std::int64_t, CountMethod>;
  void save() const;

  std::filesystem::path path_;
  std::map<Key, CountRecord> records_;
};

/// `$SYMSTRATA_CACHE`, else `$XDG_CACHE_HOME/symstrata/counts.jsonl`, else
/// `$HOME/.cache/symstrata/counts.jsonl`; empty if none is set.
std::filesystem::path default_cache_path();

/// Parses "2..6" or "2,3,5".
std::vector<int> parse_int_range(const std::string& text);

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is one of exit_code::*.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symstrata
