// opnkit: exact-arithmetic screening for odd perfect number candidates.
// Subcommands: check, classify, search, density, verify. All big integers
// cross the CLI boundary as decimal strings; exit codes are 0 (ok),
// 1 (verify found a violation), 2 (usage or validation), 3 (factoring
// budget exhausted), 4 (cache I/O).
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opnkit/cache.hpp"
#include "opnkit/density.hpp"
#include "opnkit/padic.hpp"
#include "opnkit/primeeq.hpp"
#include "opnkit/rationality.hpp"
#include "opnkit/report.hpp"
#include "opnkit/repunit.hpp"
#include "opnkit/verify.hpp"

namespace {

using opnkit::Int;
using opnkit::Json;

enum class OutputMode { Text, JsonMode, Csv };

// "13" or "13^1" or "3^2"; base validated by the caller.
std::pair<Int, unsigned long> parse_power_token(const std::string& tok) {
  const auto caret = tok.find('^');
  const std::string base = tok.substr(0, caret);
  if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad power token: " + tok);
  }
  Int b(base, 10);
  unsigned long e = 1;
  if (caret != std::string::npos) {
    const std::string exp = tok.substr(caret + 1);
    if (exp.empty() || exp.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad power token: " + tok);
    }
    e = std::stoul(exp);
  }
  return {b, e};
}

// "1000000" or "10^301".
Int parse_magnitude(const std::string& tok) {
  const auto [base, exp] = parse_power_token(tok);
  return opnkit::pow_ui(base, exp);
}

Int parse_int_arg(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument(std::string("bad ") + what + ": " + tok);
  }
  return Int(tok, 10);
}

void emit(const opnkit::ReportEnvelope& env, OutputMode mode,
          const std::string& text, const std::string& csv) {
  if (mode == OutputMode::JsonMode) {
    std::cout << env.dump();
  } else if (mode == OutputMode::Csv) {
    std::cout << csv;
  } else {
    std::cout << text;
  }
}

std::string join_ints(const std::vector<Int>& v, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i].get_str();
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "opnkit: exact arithmetic screening for odd perfect number candidates"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string cache_path;
  std::uint64_t seed = 0;
  unsigned long budget = opnkit::FactorConfig{}.rho_budget;
  bool as_json = false;
  bool as_csv = false;
  app.add_option("--cache", cache_path,
                 "factorization cache file (locked for the whole run)");
  app.add_option("--seed", seed, "seed for randomized witness rounds");
  app.add_option("--budget", budget, "iteration budget for rho factoring");
  app.add_flag("--json", as_json, "emit a JSON report envelope");
  app.add_flag("--csv", as_csv, "emit CSV rows");

  // check
  auto* cmd_check = app.add_subcommand(
      "check", "square test for an Euler-form candidate signature");
  std::string special_tok;
  std::vector<std::string> component_toks;
  cmd_check->add_option("--special", special_tok, "special prime power p^e")
      ->required();
  cmd_check->add_option("--component", component_toks,
                        "component q^a, repeatable (squared in N)");

  // classify
  auto* cmd_classify = app.add_subcommand(
      "classify", "divisor taxonomy of one repunit (q^n - 1)/(q - 1)");
  std::string classify_q;
  unsigned long classify_n = 0;
  bool allow_composite = false;
  cmd_classify->add_option("--q", classify_q, "repunit base")->required();
  cmd_classify->add_option("--n", classify_n, "repunit index")->required();
  cmd_classify->add_flag("--allow-composite-base", allow_composite,
                         "accept a base that is not an odd prime");

  // search
  auto* cmd_search = app.add_subcommand("search", "exhaustive finite scans");
  cmd_search->require_subcommand(1);
  auto* s_primeeq = cmd_search->add_subcommand(
      "prime-eq", "(q_j^n - 1)/(q_i^n - 1) = p^h over odd primes");
  unsigned long pe_qmax = 41, pe_nmax = 2, pe_hmax = 1;
  s_primeeq->add_option("--qmax", pe_qmax, "largest base prime");
  s_primeeq->add_option("--nmax", pe_nmax, "largest exponent n");
  s_primeeq->add_option("--hmax", pe_hmax, "largest prime power h");
  auto* s_eq12 = cmd_search->add_subcommand(
      "eq12", "(x^n - 1)/(x - 1) = 2 y^2, x = 1 (mod 4), n = 2 (mod 4)");
  std::string eq12_xmax = "1000";
  unsigned long eq12_nmax = 30;
  s_eq12->add_option("--xmax", eq12_xmax, "largest x");
  s_eq12->add_option("--nmax", eq12_nmax, "largest index n");
  auto* s_catalan = cmd_search->add_subcommand(
      "catalan", "consecutive perfect powers X^U = Y^V + 1");
  unsigned long cat_basemax = 100, cat_expmax = 10;
  s_catalan->add_option("--basemax", cat_basemax, "largest base");
  s_catalan->add_option("--expmax", cat_expmax, "largest exponent");
  auto* s_sqclass = cmd_search->add_subcommand(
      "square-class", "odd-index repunit pairs with square product");
  std::string sq_q = "3";
  unsigned long sq_nmax = 25;
  s_sqclass->add_option("--q", sq_q, "repunit base");
  s_sqclass->add_option("--nmax", sq_nmax, "largest odd index");

  // density
  auto* cmd_density =
      app.add_subcommand("density", "square-full counts and density bounds");
  unsigned long dens_factors = 0;
  bool dens_excl3 = false;
  std::string dens_interval = "10^301";
  std::string dens_sf;
  std::string dens_bounds;
  cmd_density->add_option("--factors", dens_factors,
                          "prime-floor count for the assembled bound");
  cmd_density->add_flag("--exclude-three", dens_excl3,
                        "drop 3 from the small prime floors");
  cmd_density->add_option("--interval-start", dens_interval,
                          "interval start, decimal or a^b");
  cmd_density->add_option("--squarefull-count", dens_sf,
                          "exact count of square-full integers <= N");
  cmd_density->add_option("--bounds", dens_bounds,
                          "comma-separated floors for the raw product density");

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "run the acceptance suite, one line per criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (as_json && as_csv) {
    std::cerr << "error: --json and --csv are mutually exclusive\n";
    return 2;
  }
  const OutputMode mode = as_json ? OutputMode::JsonMode
                          : as_csv ? OutputMode::Csv
                                   : OutputMode::Text;

  opnkit::FactorConfig cfg;
  cfg.rho_budget = budget;
  cfg.seed = seed ^ opnkit::FactorConfig{}.seed;

  opnkit::CacheFile cache_file;
  opnkit::FactorCache cache_mem;
  opnkit::FactorCache* cache = nullptr;

  const auto t_start = std::chrono::steady_clock::now();
  try {
    if (!cache_path.empty()) {
      cache_file.open_locked(cache_path);
      cache_file.load_into(cache_mem, cfg);
      cache = &cache_mem;
    }

    opnkit::ReportEnvelope env;
    std::string text;
    std::string csv;
    int rc = 0;

    if (*cmd_check) {
      opnkit::CandidateSignature sig;
      const auto [sp, se] = parse_power_token(special_tok);
      sig.special_prime = sp;
      sig.special_exponent = se;
      for (const auto& tok : component_toks) {
        const auto [q, a] = parse_power_token(tok);
        sig.components.emplace_back(q, a);
      }
      sig.validate(cfg);

      const auto rep = opnkit::rationality_check(sig, cfg, cache);
      env.command = "check";
      env.inputs = Json::object(
          {{"special", special_tok}, {"components", component_toks}});
      env.result = opnkit::rationality_report_json(rep);

      std::ostringstream ot;
      ot << "N = " << sig.value().get_str() << "\n"
         << "product 2*s*sigma(N) = " << rep.product.get_str() << "\n"
         << "perfect square: " << (rep.is_square ? "yes" : "no") << "\n"
         << "abundance sigma(N)/N = " << rep.abundance.get_num().get_str()
         << "/" << rep.abundance.get_den().get_str() << "\n";
      if (rep.kernel) {
        ot << "kernel: " << rep.kernel->kappa.get_str() << " * "
           << rep.kernel->chi.get_str() << "^2\n";
      } else {
        ot << "kernel: unavailable (factoring budget)\n";
      }
      ot << "unmatched primes: "
         << (rep.unmatched_primes.empty() ? "none"
                                          : join_ints(rep.unmatched_primes, ' '))
         << "\n";
      text = ot.str();

      std::ostringstream oc;
      oc << "is_square,product,abundance_num,abundance_den,kernel_kappa,"
            "kernel_chi,unmatched\n";
      oc << (rep.is_square ? 1 : 0) << ',' << rep.product.get_str() << ','
         << rep.abundance.get_num().get_str() << ','
         << rep.abundance.get_den().get_str() << ','
         << (rep.kernel ? rep.kernel->kappa.get_str() : "") << ','
         << (rep.kernel ? rep.kernel->chi.get_str() : "") << ','
         << join_ints(rep.unmatched_primes, '|') << "\n";
      csv = oc.str();
    } else if (*cmd_classify) {
      const Int q = parse_int_arg(classify_q, "base");
      if (classify_n < 1) throw std::invalid_argument("index must be >= 1");
      if (!allow_composite &&
          (q == 2 || q % 2 == 0 || !opnkit::is_prime(q, cfg))) {
        throw std::invalid_argument(
            "base must be an odd prime (pass --allow-composite-base to "
            "override)");
      }
      const auto recs =
          opnkit::classify_divisors({q, classify_n}, cfg, cache);
      env.command = "classify";
      env.inputs = Json::object({{"q", q.get_str()},
                                 {"n", classify_n},
                                 {"allow_composite_base", allow_composite}});
      env.result = Json::object(
          {{"value", opnkit::repunit_value(q, classify_n).get_str()},
           {"divisors", opnkit::divisor_records_json(recs)}});

      std::ostringstream ot;
      ot << "repunit(" << q.get_str() << ", " << classify_n
         << ") = " << opnkit::repunit_value(q, classify_n).get_str() << "\n";
      for (const auto& r : recs) {
        ot << "  p=" << r.p.get_str() << " rank=" << r.rank.get_str()
           << " h=" << r.h << (r.primitive ? " primitive" : " imprimitive")
           << " class=" << opnkit::h2_class_name(r.h2_class) << "\n";
      }
      text = ot.str();

      std::ostringstream oc;
      oc << "p,rank,h,primitive,h2_class\n";
      for (const auto& r : recs) {
        oc << r.p.get_str() << ',' << r.rank.get_str() << ',' << r.h << ','
           << (r.primitive ? 1 : 0) << ',' << opnkit::h2_class_name(r.h2_class)
           << "\n";
      }
      csv = oc.str();
    } else if (*cmd_search) {
      if (*s_primeeq) {
        const auto sols = opnkit::search_prime_eq(pe_qmax, pe_nmax, pe_hmax);
        env.command = "search prime-eq";
        env.inputs = Json::object(
            {{"q_max", pe_qmax}, {"n_max", pe_nmax}, {"h_max", pe_hmax}});
        env.result = Json::object(
            {{"solutions", opnkit::prime_eq_solutions_json(sols)}});
        std::ostringstream ot, oc;
        oc << "q_i,q_j,n,p,h\n";
        for (const auto& s : sols) {
          ot << "(" << s.q_i.get_str() << "^" << s.n << " family) "
             << s.q_j.get_str() << "^" << s.n << " - 1 = " << s.p.get_str()
             << "^" << s.h << " * (" << s.q_i.get_str() << "^" << s.n
             << " - 1)\n";
          oc << s.q_i.get_str() << ',' << s.q_j.get_str() << ',' << s.n << ','
             << s.p.get_str() << ',' << s.h << "\n";
        }
        ot << sols.size() << " solutions\n";
        text = ot.str();
        csv = oc.str();
      } else if (*s_eq12) {
        const auto sols = opnkit::search_eq12(parse_magnitude(eq12_xmax),
                                              eq12_nmax);
        env.command = "search eq12";
        env.inputs =
            Json::object({{"x_max", eq12_xmax}, {"n_max", eq12_nmax}});
        env.result =
            Json::object({{"solutions", opnkit::eq12_solutions_json(sols)}});
        std::ostringstream ot, oc;
        oc << "x,n,y\n";
        for (const auto& s : sols) {
          ot << "x=" << s.x.get_str() << " n=" << s.n
             << " y=" << s.y.get_str() << "\n";
          oc << s.x.get_str() << ',' << s.n << ',' << s.y.get_str() << "\n";
        }
        ot << sols.size() << " solutions\n";
        text = ot.str();
        csv = oc.str();
      } else if (*s_catalan) {
        const auto sols = opnkit::catalan_scan(cat_basemax, cat_expmax);
        env.command = "search catalan";
        env.inputs = Json::object(
            {{"base_max", cat_basemax}, {"exp_max", cat_expmax}});
        env.result = Json::object({{"solutions", opnkit::catalan_json(sols)}});
        std::ostringstream ot, oc;
        oc << "x,u,y,v\n";
        for (const auto& s : sols) {
          ot << s[0] << "^" << s[1] << " = " << s[2] << "^" << s[3]
             << " + 1\n";
          oc << s[0] << ',' << s[1] << ',' << s[2] << ',' << s[3] << "\n";
        }
        ot << sols.size() << " solutions\n";
        text = ot.str();
        csv = oc.str();
      } else {
        const Int q = parse_int_arg(sq_q, "base");
        const auto pairs = opnkit::square_class_scan(q, sq_nmax);
        env.command = "search square-class";
        env.inputs =
            Json::object({{"q", q.get_str()}, {"n_max", sq_nmax}});
        env.result =
            Json::object({{"pairs", opnkit::square_class_json(pairs)}});
        std::ostringstream ot, oc;
        oc << "n1,n2\n";
        for (const auto& [n1, n2] : pairs) {
          ot << "repunit(" << q.get_str() << "," << n1 << ") * repunit("
             << q.get_str() << "," << n2 << ") is a square\n";
          oc << n1 << ',' << n2 << "\n";
        }
        ot << pairs.size() << " pairs\n";
        text = ot.str();
        csv = oc.str();
      }
    } else if (*cmd_density) {
      const int modes = (dens_factors > 0 ? 1 : 0) +
                        (!dens_sf.empty() ? 1 : 0) +
                        (!dens_bounds.empty() ? 1 : 0);
      if (modes != 1) {
        throw std::invalid_argument(
            "pass exactly one of --factors, --squarefull-count, --bounds");
      }
      env.command = "density";
      std::ostringstream ot, oc;
      if (!dens_sf.empty()) {
        const Int lim = parse_magnitude(dens_sf);
        const Int count = opnkit::squarefull_count(lim);
        env.inputs = Json::object({{"squarefull_count", dens_sf}});
        env.result = Json::object({{"count", count.get_str()}});
        ot << "square-full integers <= " << lim.get_str() << ": "
           << count.get_str() << "\n";
        oc << "count\n" << count.get_str() << "\n";
      } else if (!dens_bounds.empty()) {
        std::vector<Int> bounds;
        std::istringstream is(dens_bounds);
        std::string tok;
        while (std::getline(is, tok, ',')) {
          bounds.push_back(parse_magnitude(tok));
        }
        const auto est = opnkit::prime_product_density(bounds);
        env.inputs = Json::object({{"bounds", dens_bounds}});
        env.result = opnkit::density_estimate_json(est);
        ot << "product density over " << est.factor_count
           << " floors: " << est.value.str(6) << "\n";
        oc << "value,log10\n"
           << est.value.str(20) << ',' << est.value.log10() << "\n";
      } else {
        const Int start = parse_magnitude(dens_interval);
        const auto est =
            opnkit::opn_density_bound(start, unsigned(dens_factors),
                                      dens_excl3);
        env.inputs = Json::object({{"factors", dens_factors},
                                   {"exclude_three", dens_excl3},
                                   {"interval_start", dens_interval}});
        env.result = opnkit::density_estimate_json(est);
        ot << "assembled bound at interval start " << dens_interval << " with "
           << est.factor_count << " factors: " << est.value.str(6) << "\n";
        oc << "value,log10\n"
           << est.value.str(20) << ',' << est.value.log10() << "\n";
      }
      text = ot.str();
      csv = oc.str();
    } else if (*cmd_verify) {
      opnkit::VerifyOptions vopt;
      vopt.seed = seed;
      vopt.factor_config = cfg;
      const auto results = opnkit::run_acceptance_suite(vopt);
      bool all = true;
      Json arr = Json::array();
      std::ostringstream ot, oc;
      oc << "id,name,pass,seconds\n";
      for (const auto& r : results) {
        all = all && r.pass;
        ot << opnkit::format_criterion_line(r) << "\n";
        oc << r.id << ',' << r.name << ',' << (r.pass ? 1 : 0) << ','
           << r.seconds << "\n";
        arr.push_back(Json::object({{"id", r.id},
                                    {"name", r.name},
                                    {"pass", r.pass},
                                    {"seconds", r.seconds},
                                    {"detail", r.detail}}));
      }
      env.command = "verify";
      env.inputs = Json::object({{"seed", seed}});
      env.result = Json::object({{"criteria", arr}, {"all_pass", all}});
      text = ot.str();
      csv = oc.str();
      rc = all ? 0 : 1;
    }

    const auto t_end = std::chrono::steady_clock::now();
    env.timings = Json::object(
        {{"total_ms",
          std::chrono::duration<double, std::milli>(t_end - t_start).count()}});
    opnkit::fill_cache_stats(env, cache);

    if (cache != nullptr) cache_file.append_new(*cache);

    emit(env, mode, text, csv);
    return rc;
  } catch (const opnkit::FactorTimeoutError& e) {
    std::cerr << "error: factoring budget exhausted: " << e.what() << "\n";
    std::cerr << "partial factors:";
    for (const auto& [p, k] : e.partial) {
      std::cerr << ' ' << p.get_str() << '^' << k;
    }
    std::cerr << "\nunfactored cofactor: " << e.unfactored.get_str() << "\n";
    return 3;
  } catch (const opnkit::CacheIoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
