#include "lctcert/certificates.hpp"
#include "lctcert/enclosure.hpp"
#include "lctcert/kstability.hpp"
#include "lctcert/lattice.hpp"
#include "lctcert/monomial.hpp"
#include "lctcert/replicate.hpp"
#include "lctcert/sigma.hpp"
#include "lctcert/sigma_cache.hpp"
#include "lctcert/surface.hpp"
#include "lctcert/thresholds.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace lctcert;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct GlobalOptions {
  bool json_output = false;
  std::string cache_path;
  unsigned long long seed = 0;
  unsigned precision = 12;
};

std::string resolve_cache_path(const GlobalOptions& opts) {
  if (!opts.cache_path.empty()) return opts.cache_path;
  if (const char* env = std::getenv(kCacheEnvVar)) return env;
  return {};
}

void emit(const GlobalOptions& opts, const ordered_json& machine, const std::string& human) {
  if (opts.json_output) std::cout << machine.dump(2) << "\n";
  else std::cout << human;
}

std::vector<BigInt> parse_int_list(const std::string& text) {
  std::vector<BigInt> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) out.emplace_back(token);
  return out;
}

DivisorClass parse_class(const std::string& text) {
  DivisorClass c;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) c.coefficients.push_back(parse_rational(token));
  return c;
}

IntersectionForm parse_gram(const std::string& text) {
  std::vector<std::vector<BigInt>> rows;
  std::string row;
  std::istringstream in(text);
  while (std::getline(in, row, ';')) rows.push_back(parse_int_list(row));
  return IntersectionForm(std::move(rows), {});
}

int run_lct_monomial(const GlobalOptions& opts, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitFail;
  }
  const MonomialIdeal ideal = parse_monomial_ideal(in);
  const BigRational mu = diagonal_entry_time(ideal);
  ordered_json j;
  j["dimension"] = ideal.dimension();
  j["generators"] = ideal.generators().size();
  j["mu"] = fraction_string(mu);
  std::ostringstream human;
  human << "dimension " << ideal.dimension() << ", " << ideal.generators().size()
        << " minimal generators\n";
  human << "diagonal entry time mu = " << compact_string(mu) << "\n";
  if (ideal.is_unit()) {
    j["lct"] = "infinite";
    human << "unit ideal: lct is infinite\n";
  } else {
    j["lct"] = fraction_string(lct_monomial(ideal));
    human << "lct = " << compact_string(lct_monomial(ideal)) << "\n";
    try {
      const SupportingNormal sn = supporting_normal(ideal);
      json arr = json::array();
      std::string txt;
      for (const auto& ai : sn.a) {
        arr.push_back(fraction_string(ai));
        txt += (txt.empty() ? "" : ", ") + compact_string(ai);
      }
      j["supporting_normal"] = arr;
      human << "supporting normal a = (" << txt << ")\n";
    } catch (const DegenerateNormalError&) {
      const SupportingNormal sn = perturbed_supporting_normal(ideal, BigRational(1, 1000));
      json arr = json::array();
      std::string txt;
      for (const auto& ai : sn.a) {
        arr.push_back(fraction_string(ai));
        txt += (txt.empty() ? "" : ", ") + compact_string(ai);
      }
      j["supporting_normal"] = arr;
      j["supporting_normal_slack"] = fraction_string(sn.slack);
      human << "degenerate normal; perturbed a = (" << txt << ") within slack 1/1000\n";
    }
  }
  const auto len = colength(ideal);
  j["colength"] = len ? json(len->str()) : json("infinite");
  human << "colength = " << (len ? len->str() : std::string("infinite")) << "\n";
  emit(opts, j, human.str());
  return kExitOk;
}

ordered_json sigma_machine(const SigmaResult& r) {
  return ordered_json(sigma_to_json(r));
}

std::string sigma_human(const SigmaResult& r) {
  std::ostringstream out;
  out << (r.strict ? "sigma" : "sigma-bar") << "(" << r.n << ", " << compact_string(r.lambda)
      << ") ";
  switch (r.exactness) {
    case Exactness::Exact: out << "= "; break;
    case Exactness::LowerBound: out << ">= "; break;
    case Exactness::UpperBound: out << "<= "; break;
  }
  out << r.value.str() << "\n";
  out << "witness a = (";
  for (std::size_t i = 0; i < r.a.size(); ++i) out << (i ? ", " : "") << compact_string(r.a[i]);
  out << ")";
  if (!r.included.empty()) {
    out << ", included";
    for (const auto& p : r.included) {
      out << " (";
      for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
      out << ")";
    }
  }
  out << "\n";
  if (r.matched_lower_bound) out << "value meets the certified lower bound\n";
  return out.str();
}

int run_sigma(const GlobalOptions& opts, int n, const std::string& lambda_text, bool strict,
              bool closed, bool exact2d, bool bounds, bool search, long long budget) {
  const BigRational lambda = parse_rational(lambda_text);
  const bool want_strict = strict || !closed;

  if (bounds) {
    ordered_json out;
    out["n"] = n;
    out["lambda"] = fraction_string(lambda);
    out["strict"] = want_strict;
    out["bounds"] = ordered_json::array();
    std::ostringstream human;
    for (const auto& [method, name] :
         std::vector<std::pair<SigmaBoundMethod, std::string>>{{SigmaBoundMethod::Pick2D, "PICK2D"},
                                                               {SigmaBoundMethod::Cube, "CUBE"},
                                                               {SigmaBoundMethod::Volume, "VOLUME"},
                                                               {SigmaBoundMethod::Block, "BLOCK"}}) {
      try {
        const SigmaBound b = sigma_lower_bound(n, lambda, want_strict, method);
        ordered_json bj;
        bj["method"] = name;
        bj["bound"] = fraction_string(b.bound);
        bj["bound_strict"] = b.bound_strict;
        bj["bounds_strict_sigma"] = b.for_strict_sigma;
        out["bounds"].push_back(bj);
        human << name << ": " << (want_strict ? "sigma" : "sigma-bar") << " "
              << (b.bound_strict ? "> " : ">= ") << compact_string(b.bound) << "\n";
      } catch (const MethodInapplicableError& e) {
        human << name << ": inapplicable (" << e.what() << ")\n";
      }
    }
    emit(opts, out, human.str());
    return kExitOk;
  }

  const std::string cache_path = resolve_cache_path(opts);
  SigmaCache cache;
  if (!cache_path.empty()) cache = SigmaCache::load(cache_path);
  if (!cache_path.empty()) {
    if (auto hit = cache.find(n, lambda, want_strict)) {
      emit(opts, sigma_machine(*hit), "cache hit (re-verified)\n" + sigma_human(*hit));
      return kExitOk;
    }
  }

  SigmaResult result;
  const bool exact_applicable = n == 2 && is_integer(lambda) && lambda >= 1 && lambda <= 12;
  if (exact2d || (!search && exact_applicable)) {
    if (!exact_applicable) {
      std::cerr << "--exact2d needs n = 2 and an integer lambda in [1, 12]\n";
      return kExitUsage;
    }
    result = sigma_exact_2d(static_cast<long long>(numerator(lambda)), want_strict);
  } else {
    result = sigma_upper_search(n, lambda, want_strict, budget, opts.seed);
  }
  if (!cache_path.empty()) {
    cache.put(result);
    cache.save(cache_path);
  }
  emit(opts, sigma_machine(result), sigma_human(result));
  return kExitOk;
}

int run_pick(const GlobalOptions& opts, const std::string& vertices_text) {
  std::vector<LatticePoint> vertices;
  std::istringstream in(vertices_text);
  std::string pair;
  while (in >> pair) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) {
      std::cerr << "vertices must be x,y pairs separated by spaces\n";
      return kExitUsage;
    }
    vertices.push_back(
        {std::stoll(pair.substr(0, comma)), std::stoll(pair.substr(comma + 1))});
  }
  const LatticePolygon polygon(vertices);
  const PickCertificate cert = pick_certificate(polygon);
  ordered_json j;
  j["area"] = fraction_string(cert.area);
  j["boundary"] = cert.boundary.str();
  j["interior"] = cert.interior.str();
  j["total"] = cert.total.str();
  std::ostringstream human;
  human << "area = " << compact_string(cert.area) << ", boundary = " << cert.boundary.str()
        << ", interior = " << cert.interior.str() << ", total = " << cert.total.str() << "\n";
  emit(opts, j, human.str());
  return kExitOk;
}

int run_threshold(const GlobalOptions& opts, const std::string& which_text, long long r,
                  long long m, const std::string& cert_text, long long limit) {
  WhichCheck which;
  if (which_text == "lct-cpi") which = WhichCheck::LctCpi;
  else if (which_text == "superrigid") which = WhichCheck::Superrigid;
  else if (which_text == "conditional") which = WhichCheck::Conditional;
  else {
    std::cerr << "--which must be lct-cpi, superrigid or conditional\n";
    return kExitUsage;
  }
  CertMethod cert;
  if (cert_text == "volume") cert = CertMethod::Volume;
  else if (cert_text == "cube") cert = CertMethod::Cube;
  else if (cert_text == "pick2d") cert = CertMethod::Pick2D;
  else if (cert_text == "block") cert = CertMethod::Block;
  else if (cert_text == "best") cert = CertMethod::Best;
  else {
    std::cerr << "--cert must be volume, cube, pick2d, block or best\n";
    return kExitUsage;
  }
  if (which == WhichCheck::Conditional) cert = CertMethod::Block;

  const ThresholdReport report = minimal_dimension(which, r, m, cert, limit);
  ordered_json j;
  j["which"] = which_check_name(report.which);
  j["r"] = report.r;
  j["m"] = report.m;
  j["cert"] = cert_method_name(report.cert);
  j["limit"] = report.limit;
  j["minimal_n"] = report.minimal_n ? ordered_json(*report.minimal_n)
                                    : ordered_json("NONE_FOUND_UP_TO(" + std::to_string(limit) + ")");
  if (report.paper_claim_n) {
    j["claim_n"] = *report.paper_claim_n;
    j["claim_verified"] = report.claim_verified;
  }
  j["monotone_tail"] = report.monotone_tail;
  j["table"] = ordered_json::array();
  for (const auto& row : report.table) {
    j["table"].push_back(
        ordered_json{{"n", row.n}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"pass", row.pass}});
  }
  std::ostringstream human;
  human << which_check_name(report.which) << " r=" << r;
  if (which == WhichCheck::Conditional) human << " m=" << m;
  else human << " cert=" << cert_method_name(report.cert);
  human << ": minimal n = "
        << (report.minimal_n ? std::to_string(*report.minimal_n)
                             : "none found up to " + std::to_string(limit));
  if (report.paper_claim_n)
    human << " (claimed " << *report.paper_claim_n
          << (report.claim_verified ? ", valid" : ", NOT reproduced") << ")";
  human << "\n";
  if (!report.monotone_tail) human << "warning: pass/fail tail is not monotone\n";
  emit(opts, j, human.str());
  return kExitOk;
}

int run_beta(const GlobalOptions& opts, const std::string& curve_path, const std::string& a_text) {
  std::ifstream in(curve_path);
  if (!in) {
    std::cerr << "cannot open " << curve_path << "\n";
    return kExitFail;
  }
  json input;
  in >> input;
  const BigRational A = parse_rational(a_text);
  VolumeCurve curve = input.contains("eta") ? volume_curve_from_profile(profile_from_json(input))
                                            : curve_from_json(input);
  const BigRational tau = pseudo_effective_threshold(curve);
  const BigRational b = beta(A, curve);
  ordered_json j;
  j["n"] = curve.dim_n;
  j["Ln"] = fraction_string(curve.Ln);
  j["tau"] = fraction_string(tau);
  j["A"] = fraction_string(A);
  j["beta"] = fraction_string(b);
  std::ostringstream human;
  human << "Ln = " << compact_string(curve.Ln) << ", tau = " << compact_string(tau)
        << ", beta(A=" << compact_string(A) << ") = " << compact_string(b) << "\n";
  emit(opts, j, human.str());
  return kExitOk;
}

int run_lemma42(const GlobalOptions& opts, const std::string& profile_path) {
  std::ifstream in(profile_path);
  if (!in) {
    std::cerr << "cannot open " << profile_path << "\n";
    return kExitFail;
  }
  json input;
  in >> input;
  const RestrictedVolumeProfile profile = profile_from_json(input);
  const BarycenterBound res = check_barycenter_bound(profile);
  const bool logc = logconcave_check(profile.V, 60);
  ordered_json j;
  j["n"] = profile.dim_n;
  j["eta"] = fraction_string(profile.eta);
  j["tau"] = fraction_string(profile.tau);
  j["b"] = fraction_string(res.b);
  j["bound"] = fraction_string(res.bound);
  j["holds"] = res.holds;
  j["equality"] = res.equality;
  j["log_concave_sampled"] = logc;
  std::ostringstream human;
  human << "b = " << compact_string(res.b) << ", bound = " << compact_string(res.bound) << ": "
        << (res.equality ? "equality" : (res.holds ? "holds strictly" : "VIOLATED")) << "\n";
  human << "log-concavity (sampled): " << (logc ? "consistent" : "violated") << "\n";
  emit(opts, j, human.str());
  return res.holds ? kExitOk : kExitFail;
}

int run_replicate(const GlobalOptions& opts, const std::string& json_out) {
  const auto checks = replicate_all(opts.precision);
  const ordered_json report = replication_report(checks);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "cannot write " << json_out << "\n";
      return kExitFail;
    }
    out << report.dump(2) << "\n";
  }
  if (opts.json_output) {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << "[" << check_status_name(c.status) << "] " << c.id << ": computed " << c.computed
                << ", expected " << c.expected << "\n";
    }
    const auto& s = report["summary"];
    std::cout << "summary: " << s["pass"] << " pass, " << s["fail"] << " fail, "
              << s["not_reproduced"] << " not reproduced\n";
  }
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return kExitFail;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic certification toolkit for lct, lattice-count and "
               "volume-curve bounds"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opts;
  app.add_flag("--json", opts.json_output, "machine-readable JSON output");
  app.add_option("--cache", opts.cache_path,
                 "sigma witness cache file (default: $" + std::string(kCacheEnvVar) + ")");
  app.add_option("--seed", opts.seed, "seed for the randomized witness search");
  app.add_option("--precision", opts.precision, "decimal digits for certified enclosures")
      ->check(CLI::Range(0, 50));

  auto* lct_cmd = app.add_subcommand("lct-monomial", "lct of a monomial ideal from a file");
  std::string ideal_path;
  lct_cmd->add_option("file", ideal_path, "ideal file: one generator per line")->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "minimal lattice-point counts and bounds");
  int sigma_n = 2;
  std::string sigma_lambda = "1";
  bool sigma_strict = false, sigma_closed = false;
  bool sigma_exact_flag = false, sigma_bounds_flag = false, sigma_search_flag = false;
  long long sigma_budget = 2000;
  sigma_cmd->add_option("--n", sigma_n, "dimension")->required();
  sigma_cmd->add_option("--lambda", sigma_lambda, "diagonal value, p/q or integer")->required();
  auto* strict_flag = sigma_cmd->add_flag("--strict", sigma_strict, "strict flavor (sigma)");
  sigma_cmd->add_flag("--closed", sigma_closed, "closed flavor (sigma-bar)")->excludes(strict_flag);
  sigma_cmd->add_flag("--exact2d", sigma_exact_flag, "exhaustive 2D computation");
  sigma_cmd->add_flag("--bounds", sigma_bounds_flag, "certified lower bounds only");
  sigma_cmd->add_flag("--search", sigma_search_flag, "budgeted witness search");
  sigma_cmd->add_option("--budget", sigma_budget, "candidate budget for --search");

  auto* pick_cmd = app.add_subcommand("pick", "Pick certificate of a lattice polygon");
  std::string vertices_text;
  pick_cmd->add_option("--vertices", vertices_text, "e.g. \"0,0 2,0 1,1 0,1\"")->required();

  auto* threshold_cmd = app.add_subcommand("threshold", "dimension-threshold reports");
  std::string which_text, cert_text = "volume";
  long long th_r = 1, th_m = 1, th_limit = 100;
  threshold_cmd->add_option("--which", which_text, "lct-cpi | superrigid | conditional")->required();
  threshold_cmd->add_option("--r", th_r, "codimension")->required();
  threshold_cmd->add_option("--m", th_m, "index weight (conditional case)");
  threshold_cmd->add_option("--cert", cert_text, "volume | cube | pick2d | block | best");
  threshold_cmd->add_option("--limit", th_limit, "largest dimension scanned");

  auto* beta_cmd = app.add_subcommand("beta", "beta invariant of a volume-curve model");
  std::string curve_path, a_text = "1";
  beta_cmd->add_option("--curve", curve_path, "curve or profile JSON file")->required();
  beta_cmd->add_option("--A", a_text, "log discrepancy A (p/q)");

  auto* lemma42_cmd = app.add_subcommand("lemma42", "barycenter bound check on a profile");
  std::string profile_path;
  lemma42_cmd->add_option("--profile", profile_path, "profile JSON file")->required();

  auto* surface_cmd = app.add_subcommand("surface", "surface lattice arithmetic");
  auto* pair_cmd = surface_cmd->add_subcommand("pair", "intersection pairing u.G.v");
  std::string gram_text, u_text, v_text;
  pair_cmd->add_option("--gram", gram_text, "rows separated by ';', e.g. \"6,1;1,-2\"")->required();
  pair_cmd->add_option("--u", u_text, "first class, e.g. \"2,-1\"")->required();
  pair_cmd->add_option("--v", v_text, "second class")->required();
  auto* maxmult_cmd = surface_cmd->add_subcommand("max-mult", "largest s with (base - s*C)^2 >= lower");
  std::string mm_gram, mm_base, mm_lower = "-2";
  int mm_curve_index = 1;
  maxmult_cmd->add_option("--gram", mm_gram)->required();
  maxmult_cmd->add_option("--base", mm_base)->required();
  maxmult_cmd->add_option("--curve-index", mm_curve_index);
  maxmult_cmd->add_option("--lower", mm_lower);
  auto* gamma_cmd = surface_cmd->add_subcommand("gamma", "d/3 + (2/3) sqrt(M2H) against 4");
  long long gamma_d = 0, gamma_m2h = 0;
  gamma_cmd->add_option("--d", gamma_d)->required();
  gamma_cmd->add_option("--m2h", gamma_m2h)->required();
  surface_cmd->require_subcommand(1);
  surface_cmd->fallthrough();

  auto* replicate_cmd = app.add_subcommand("replicate", "recompute every reference value");
  std::string replicate_out;
  replicate_cmd->add_option("--json", replicate_out, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(lct_cmd)) return run_lct_monomial(opts, ideal_path);
    if (app.got_subcommand(sigma_cmd))
      return run_sigma(opts, sigma_n, sigma_lambda, sigma_strict, sigma_closed, sigma_exact_flag,
                       sigma_bounds_flag, sigma_search_flag, sigma_budget);
    if (app.got_subcommand(pick_cmd)) return run_pick(opts, vertices_text);
    if (app.got_subcommand(threshold_cmd))
      return run_threshold(opts, which_text, th_r, th_m, cert_text, th_limit);
    if (app.got_subcommand(beta_cmd)) return run_beta(opts, curve_path, a_text);
    if (app.got_subcommand(lemma42_cmd)) return run_lemma42(opts, profile_path);
    if (app.got_subcommand(surface_cmd)) {
      if (surface_cmd->got_subcommand(pair_cmd)) {
        const BigRational p = pairing(parse_gram(gram_text), parse_class(u_text), parse_class(v_text));
        emit(opts, ordered_json{{"pairing", fraction_string(p)}},
             "pairing = " + compact_string(p) + "\n");
        return kExitOk;
      }
      if (surface_cmd->got_subcommand(maxmult_cmd)) {
        const auto smax = max_mult_from_selfint(parse_gram(mm_gram), parse_class(mm_base),
                                                mm_curve_index, parse_rational(mm_lower));
        emit(opts,
             ordered_json{{"max_s", smax ? ordered_json(*smax) : ordered_json("NO_SOLUTION")}},
             smax ? "max s = " + std::to_string(*smax) + "\n" : "no solution\n");
        return kExitOk;
      }
      const GammaBound gb = gamma_mult_bound(gamma_d, gamma_m2h);
      emit(opts,
           ordered_json{{"value", gb.value.to_string()}, {"less_than_4", gb.less_than_4}},
           gb.value.to_string() + (gb.less_than_4 ? " < 4\n" : " >= 4\n"));
      return kExitOk;
    }
    if (app.got_subcommand(replicate_cmd)) return run_replicate(opts, replicate_out);
  } catch (const InconclusivePrecisionError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
