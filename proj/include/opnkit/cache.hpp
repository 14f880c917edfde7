// Persistent factorization cache: one line per entry,
//   n=<decimal>;f=<p1>^<e1>,<p2>^<e2>,...
// primes ascending. Entries are re-verified on load (product, primality,
// ordering); malformed or false lines are warned about and skipped, never
// trusted. The file is held under an exclusive advisory lock for the whole
// run so concurrent runs fail fast instead of interleaving appends.
#ifndef OPNKIT_CACHE_HPP
#define OPNKIT_CACHE_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "opnkit/core_arith.hpp"

namespace opnkit {

struct CacheIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CacheEntry {
  Int n;
  Factorization factorization;
};

std::string format_cache_line(const Int& n, const Factorization& f);

// Parse without verification. nullopt on any syntax error.
std::optional<CacheEntry> parse_cache_line(const std::string& line);

// Parse and verify: strictly ascending prime bases, exponents >= 1, product
// equal to n. nullopt when either step fails.
std::optional<CacheEntry> parse_verified_cache_line(const std::string& line,
                                                    const FactorConfig& cfg);

class CacheFile {
 public:
  CacheFile() = default;
  ~CacheFile();
  CacheFile(const CacheFile&) = delete;
  CacheFile& operator=(const CacheFile&) = delete;

  // Create if missing, then take LOCK_EX | LOCK_NB. Throws CacheIoError when
  // the file cannot be opened or another process holds the lock.
  void open_locked(const std::string& path);

  // Load verified entries into the in-memory cache. Returns the number of
  // accepted lines; rejected lines go to stderr as warnings.
  std::size_t load_into(FactorCache& cache, const FactorConfig& cfg);

  // Append every cache entry not seen at load time, then flush.
  std::size_t append_new(const FactorCache& cache);

  bool is_open() const { return fd_ >= 0; }
  const std::string& path() const { return path_; }

 private:
  int fd_ = -1;
  std::string path_;
  std::set<Int> known_;
};

}  // namespace opnkit

#endif
