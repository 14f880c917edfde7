#include "opnkit/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

namespace opnkit {

std::string format_cache_line(const Int& n, const Factorization& f) {
  std::ostringstream os;
  os << "n=" << n.get_str() << ";f=";
  bool first = true;
  for (const auto& [p, e] : f.factors) {
    if (!first) os << ',';
    first = false;
    os << p.get_str() << '^' << e;
  }
  return os.str();
}

namespace {

bool parse_decimal(const std::string& s, Int& out) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  out = Int(s, 10);
  return true;
}

}  // namespace

std::optional<CacheEntry> parse_cache_line(const std::string& line) {
  if (line.rfind("n=", 0) != 0) return std::nullopt;
  auto semi = line.find(";f=");
  if (semi == std::string::npos) return std::nullopt;

  CacheEntry entry;
  if (!parse_decimal(line.substr(2, semi - 2), entry.n)) return std::nullopt;

  std::string rest = line.substr(semi + 3);
  if (rest.empty()) return std::nullopt;
  std::istringstream is(rest);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    auto caret = tok.find('^');
    if (caret == std::string::npos) return std::nullopt;
    Int p;
    Int e;
    if (!parse_decimal(tok.substr(0, caret), p)) return std::nullopt;
    if (!parse_decimal(tok.substr(caret + 1), e)) return std::nullopt;
    if (e <= 0 || !e.fits_uint_p()) return std::nullopt;
    entry.factorization.factors.emplace_back(p, unsigned(e.get_ui()));
  }
  if (entry.factorization.factors.empty()) return std::nullopt;
  return entry;
}

std::optional<CacheEntry> parse_verified_cache_line(const std::string& line,
                                                    const FactorConfig& cfg) {
  auto entry = parse_cache_line(line);
  if (!entry) return std::nullopt;
  const auto& fs = entry->factorization.factors;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i > 0 && fs[i - 1].first >= fs[i].first) return std::nullopt;
    if (!is_prime(fs[i].first, cfg)) return std::nullopt;
  }
  if (entry->factorization.value() != entry->n) return std::nullopt;
  return entry;
}

CacheFile::~CacheFile() {
  if (fd_ >= 0) {
    flock(fd_, LOCK_UN);
    close(fd_);
  }
}

void CacheFile::open_locked(const std::string& path) {
  if (fd_ >= 0) throw CacheIoError("cache file already open: " + path_);
  int fd = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
  if (fd < 0) {
    throw CacheIoError("cannot open cache file " + path + ": " +
                       std::strerror(errno));
  }
  if (flock(fd, LOCK_EX | LOCK_NB) != 0) {
    int err = errno;
    close(fd);
    if (err == EWOULDBLOCK || err == EAGAIN) {
      throw CacheIoError("cache file " + path +
                         " is locked by another process");
    }
    throw CacheIoError("cannot lock cache file " + path + ": " +
                       std::strerror(err));
  }
  fd_ = fd;
  path_ = path;
}

std::size_t CacheFile::load_into(FactorCache& cache, const FactorConfig& cfg) {
  if (fd_ < 0) throw CacheIoError("cache file not open");
  std::ifstream in(path_);
  if (!in) throw CacheIoError("cannot read cache file " + path_);

  std::size_t accepted = 0;
  std::size_t lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto entry = parse_verified_cache_line(line, cfg);
    if (!entry) {
      std::cerr << "warning: " << path_ << ":" << lineno
                << ": rejected cache line\n";
      continue;
    }
    cache.insert(entry->n, entry->factorization);
    known_.insert(entry->n);
    ++accepted;
  }
  // Entries already present in memory are never re-appended either.
  for (const auto& [n, f] : cache.entries()) known_.insert(n);
  return accepted;
}

std::size_t CacheFile::append_new(const FactorCache& cache) {
  if (fd_ < 0) throw CacheIoError("cache file not open");
  std::ofstream out(path_, std::ios::app);
  if (!out) throw CacheIoError("cannot append to cache file " + path_);
  std::size_t written = 0;
  for (const auto& [n, f] : cache.entries()) {
    if (known_.count(n)) continue;
    out << format_cache_line(n, f) << '\n';
    known_.insert(n);
    ++written;
  }
  out.flush();
  if (!out) throw CacheIoError("write failure on cache file " + path_);
  return written;
}

}  // namespace opnkit
