// JSON report envelopes for the CLI: every command answers with
// { command, inputs, result, timings, cache_stats }, big integers carried
// as decimal strings. Builders live in the library so tests can assert
// byte-stable output without spawning processes.
#ifndef OPNKIT_REPORT_HPP
#define OPNKIT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "opnkit/core_arith.hpp"
#include "opnkit/density.hpp"
#include "opnkit/primeeq.hpp"
#include "opnkit/rationality.hpp"
#include "opnkit/repunit.hpp"

namespace opnkit {

using Json = nlohmann::ordered_json;

struct ReportEnvelope {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  Json timings = Json::object();      // milliseconds per phase
  Json cache_stats = Json::object();  // hits / misses / entries

  Json to_json() const;
  std::string dump() const;  // pretty, trailing newline
};

std::string int_str(const Int& v);
Json factorization_json(const Factorization& f);

Json rationality_report_json(const RationalityReport& rep);
Json divisor_records_json(const std::vector<DivisorRecord>& recs);
Json prime_eq_solutions_json(const std::vector<PrimeEqSolution>& sols);
Json eq12_solutions_json(const std::vector<Eq12Solution>& sols);
Json catalan_json(const std::vector<std::array<unsigned long, 4>>& sols);
Json square_class_json(
    const std::vector<std::pair<unsigned long, unsigned long>>& pairs);
Json density_estimate_json(const DensityEstimate& est);

void fill_cache_stats(ReportEnvelope& env, const FactorCache* cache);

}  // namespace opnkit

#endif
