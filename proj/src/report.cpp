#include "opnkit/report.hpp"

namespace opnkit {

std::string int_str(const Int& v) { return v.get_str(); }

Json ReportEnvelope::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  j["timings"] = timings;
  j["cache_stats"] = cache_stats;
  return j;
}

std::string ReportEnvelope::dump() const { return to_json().dump(2) + "\n"; }

Json factorization_json(const Factorization& f) {
  Json arr = Json::array();
  for (const auto& [p, e] : f.factors) {
    arr.push_back(Json::array({int_str(p), e}));
  }
  return arr;
}

Json rationality_report_json(const RationalityReport& rep) {
  Json j = Json::object();
  j["is_square"] = rep.is_square;
  j["product"] = int_str(rep.product);
  j["abundance"] = Json::object({
      {"num", int_str(rep.abundance.get_num())},
      {"den", int_str(rep.abundance.get_den())},
  });
  j["has_three_two_component"] = rep.has_three_two_component;
  j["kernel_available"] = rep.kernel_available;
  if (rep.product_factorization) {
    j["product_factorization"] = factorization_json(*rep.product_factorization);
  } else {
    j["product_factorization"] = nullptr;
  }
  if (rep.kernel) {
    j["kernel"] = Json::object({
        {"kappa", int_str(rep.kernel->kappa)},
        {"chi", int_str(rep.kernel->chi)},
    });
  } else {
    j["kernel"] = nullptr;
  }
  Json unmatched = Json::array();
  for (const Int& p : rep.unmatched_primes) unmatched.push_back(int_str(p));
  j["unmatched_primes"] = unmatched;
  return j;
}

Json divisor_records_json(const std::vector<DivisorRecord>& recs) {
  Json arr = Json::array();
  for (const auto& r : recs) {
    arr.push_back(Json::object({
        {"p", int_str(r.p)},
        {"rank", int_str(r.rank)},
        {"h", r.h},
        {"primitive", r.primitive},
        {"h2_class", h2_class_name(r.h2_class)},
    }));
  }
  return arr;
}

Json prime_eq_solutions_json(const std::vector<PrimeEqSolution>& sols) {
  Json arr = Json::array();
  for (const auto& s : sols) {
    arr.push_back(Json::object({
        {"q_i", int_str(s.q_i)},
        {"q_j", int_str(s.q_j)},
        {"n", s.n},
        {"p", int_str(s.p)},
        {"h", s.h},
    }));
  }
  return arr;
}

Json eq12_solutions_json(const std::vector<Eq12Solution>& sols) {
  Json arr = Json::array();
  for (const auto& s : sols) {
    arr.push_back(Json::object({
        {"x", int_str(s.x)},
        {"n", s.n},
        {"y", int_str(s.y)},
    }));
  }
  return arr;
}

Json catalan_json(const std::vector<std::array<unsigned long, 4>>& sols) {
  Json arr = Json::array();
  for (const auto& s : sols) {
    arr.push_back(Json::object(
        {{"x", s[0]}, {"u", s[1]}, {"y", s[2]}, {"v", s[3]}}));
  }
  return arr;
}

Json square_class_json(
    const std::vector<std::pair<unsigned long, unsigned long>>& pairs) {
  Json arr = Json::array();
  for (const auto& [n1, n2] : pairs) {
    arr.push_back(Json::object({{"n1", n1}, {"n2", n2}}));
  }
  return arr;
}

Json density_estimate_json(const DensityEstimate& est) {
  Json bounds = Json::array();
  for (const Int& b : est.prime_floor_bounds) bounds.push_back(int_str(b));
  return Json::object({
      {"prime_floor_bounds", bounds},
      {"factor_count", est.factor_count},
      {"value", est.value.str(20)},
      {"log10", est.value.log10()},
  });
}

void fill_cache_stats(ReportEnvelope& env, const FactorCache* cache) {
  if (cache == nullptr) {
    env.cache_stats = Json::object({{"enabled", false}});
    return;
  }
  env.cache_stats = Json::object({
      {"enabled", true},
      {"hits", cache->hits()},
      {"misses", cache->misses()},
      {"entries", cache->entries().size()},
  });
}

}  // namespace opnkit
