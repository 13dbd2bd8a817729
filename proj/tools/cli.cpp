#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcert/certificate_json.hpp"
#include "qcert/family.hpp"
#include "qcert/local_certify.hpp"
#include "qcert/perm_group.hpp"

namespace qcert::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
T positive(const nlohmann::json& j, const char* key)
{
  if (!j.at(key).is_number_unsigned() || j.at(key).get<std::uint64_t>() == 0)
    throw Error(ErrorCode::invalid_argument, std::string("config key ") + key + " must be a positive integer");
  return static_cast<T>(j.at(key).get<std::uint64_t>());
}

}  // namespace

RunConfig load_config(const std::string& path, RunConfig cfg)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::invalid_argument, "cannot read config file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, "config " + path + ": " + e.what());
  }
  if (!j.is_object())
    throw Error(ErrorCode::invalid_argument, "config " + path + " is not a JSON object");
  for (auto const& [key, value] : j.items()) {
    if (key == "seed") {
      if (!value.is_number_unsigned())
        throw Error(ErrorCode::invalid_argument, "config key seed must be an unsigned integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "format") {
      cfg.format = value.get<std::string>();
    } else if (key == "output") {
      cfg.output = value.get<std::string>();
    } else if (key == "jobs") {
      cfg.jobs = positive<unsigned>(j, "jobs");
    } else if (key == "trial_bound") {
      cfg.budget.trial_bound = positive<std::uint64_t>(j, "trial_bound");
    } else if (key == "rho_iterations") {
      cfg.budget.rho_iterations = positive<std::uint64_t>(j, "rho_iterations");
    } else if (key == "wall_time_ms") {
      cfg.budget.wall_time = std::chrono::milliseconds(positive<std::uint64_t>(j, "wall_time_ms"));
    } else if (key == "witness_bound") {
      cfg.witness_bound = positive<unsigned long>(j, "witness_bound");
    } else if (key == "curve_height") {
      cfg.curve_height = positive<unsigned long>(j, "curve_height");
    } else {
      throw Error(ErrorCode::invalid_argument, "unknown config key " + key);
    }
  }
  return cfg;
}

namespace {

// Runs fn(i) for i in [0, n) on `jobs` threads; results keep input order.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, const std::function<R(std::size_t)>& fn)
{
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned k = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < k; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& th : pool)
    th.join();
  std::vector<R> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i])
      std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const char* sep)
{
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? sep : "") + xs[i];
  return s;
}

std::string tri(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "undetermined"; }

ordered_json opt_bool(const std::optional<bool>& b) { return b ? ordered_json(*b) : ordered_json(nullptr); }

class Emitter {
public:
  Emitter(std::ostream& out, const RunConfig& cfg)
  : out_(out), tsv_(cfg.format == "tsv")
  {}

  bool tsv() const { return tsv_; }
  void json(const ordered_json& j) { out_ << j.dump() << "\n"; }
  void line(const std::string& s) { out_ << s << "\n"; }

private:
  std::ostream& out_;
  bool tsv_;
};

ordered_json report_json(const WParam& w, const ConditionReport& r)
{
  std::vector<std::string> primes;
  for (auto const& p : r.kernel_primes)
    primes.push_back(to_string(p));
  return {{"w", w.to_string()},
          {"derived", {{"a", to_string(w.a())}, {"c", to_string(w.c())}}},
          {"condition_a",
           {{"ok", opt_bool(r.a_ok)},
            {"product", to_string(r.product)},
            {"kernel", r.kernel ? ordered_json(to_string(*r.kernel)) : ordered_json(nullptr)},
            {"kernel_primes", primes}}},
          {"condition_b", r.b_ok},
          {"condition_bprime", r.bprime_ok},
          {"c_positive", r.c_positive}};
}

const char* report_tsv_header = "w\ta_ok\tkernel\tb_ok\tbprime_ok\tc_positive\ta\tc";

std::string report_tsv(const WParam& w, const ConditionReport& r)
{
  return w.to_string() + "\t" + tri(r.a_ok) + "\t" + (r.kernel ? to_string(*r.kernel) : "NA") + "\t" +
         (r.b_ok ? "true" : "false") + "\t" + (r.bprime_ok ? "true" : "false") + "\t" +
         (r.c_positive ? "true" : "false") + "\t" + to_string(w.a()) + "\t" + to_string(w.c());
}

CertifyConfig certify_config(const RunConfig& cfg)
{
  CertifyConfig c;
  c.budget = cfg.budget;
  c.seed = cfg.seed;
  c.witness_bound = cfg.witness_bound;
  return c;
}

int emit_certificates(Emitter& em, const std::vector<SpecializationCertificate>& certs)
{
  if (em.tsv())
    em.line(certificate_tsv_header());
  bool all = true;
  for (auto const& c : certs) {
    em.line(em.tsv() ? certificate_tsv_row(c) : certificate_json(c));
    all = all && c.status == CertStatus::certified;
  }
  return all ? 0 : 1;
}

ordered_json scan_json(const PairScan& s)
{
  return {{"pairs", s.pairs}, {"generating", s.generating}, {"all_generate", s.all_generate()}};
}

ordered_json scan_json(const TranspositionScan& s)
{
  return {{"subsets", s.subsets}, {"transitive", s.transitive}, {"transitive_full", s.transitive_full},
          {"holds", s.holds()}};
}

int group_facts(Emitter& em)
{
  PermGroup s5 = closure(5, {Perm::parse(5, "(1,2)"), Perm::parse(5, "(1,2,3,4,5)")});
  PermGroup cent = centralizer(s5, Perm::parse(5, "(1,2)"));
  bool has6 = std::any_of(cent.elements().begin(), cent.elements().end(), [](const Perm& x) { return x.order() == 6; });
  PairScan g32 = scan_pair_generation(5, {3, 2}, {{5}, {4}});
  PairScan control = scan_pair_generation(5, {2, 2}, {{5}});
  TranspositionScan t5 = scan_transposition_generation(5);
  TranspositionScan t6 = scan_transposition_generation(6);
  bool adm1 = s6_admissible({Perm::parse(6, "(1,2)")});
  bool adm2 = s6_admissible({Perm::parse(6, "(1,2)"), Perm::parse(6, "(3,4,5)")});
  bool adm3 = s6_admissible({Perm::parse(6, "(1,2)"), Perm::parse(6, "(3,4)")});
  bool ok = s5.order() == 120 && cent.order() == 12 && has6 && looks_like_c2_x_s3(cent) &&
            g32.pairs == 1080 && g32.all_generate() && t5.holds() && t6.holds() && adm1 && adm2 && !adm3;
  if (em.tsv()) {
    em.line("fact\tvalue");
    em.line("s5_closure_order\t" + std::to_string(s5.order()));
    em.line("centralizer_transposition_order\t" + std::to_string(cent.order()));
    em.line(std::string("centralizer_has_order_6\t") + (has6 ? "true" : "false"));
    em.line("generation_32\t" + std::to_string(g32.generating) + "/" + std::to_string(g32.pairs));
    em.line("control_22_5\t" + std::to_string(control.generating) + "/" + std::to_string(control.pairs));
    em.line(std::string("transposition_generation_5\t") + (t5.holds() ? "true" : "false"));
    em.line(std::string("transposition_generation_6\t") + (t6.holds() ? "true" : "false"));
    em.line(std::string("s6_admissible\t") + (adm1 ? "true" : "false") + "," + (adm2 ? "true" : "false") + "," +
            (adm3 ? "true" : "false"));
    em.line(std::string("all_ok\t") + (ok ? "true" : "false"));
  } else {
    em.json({{"s5_closure_order", s5.order()},
             {"centralizer_transposition", {{"order", cent.order()}, {"has_order_6", has6},
                                            {"c2_x_s3_shape", looks_like_c2_x_s3(cent)}}},
             {"generation_32", scan_json(g32)},
             {"control_22_5", scan_json(control)},
             {"transposition_generation_5", scan_json(t5)},
             {"transposition_generation_6", scan_json(t6)},
             {"s6_admissible", {{"(1,2)", adm1}, {"(1,2),(3,4,5)", adm2}, {"(1,2),(3,4)", adm3}}},
             {"all_ok", ok}});
  }
  return 0;
}

void emit_points(Emitter& em, const std::string& curve, const std::string& range,
                 const std::vector<CurvePoint>& pts)
{
  if (em.tsv()) {
    em.line("W\tY");
    for (auto const& p : pts)
      em.line(to_string(p.W) + "\t" + to_string(p.Y));
    return;
  }
  ordered_json list = ordered_json::array();
  for (auto const& p : pts)
    list.push_back({{"W", to_string(p.W)}, {"Y", to_string(p.Y)}});
  em.json({{"curve", curve},
           {"range", range},
           {"count_signed", pts.size()},
           {"count_distinct_w", distinct_w_count(pts)},
           {"points", list}});
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Certifier for unramified SL2(5) premises of quintic specializations", "qcert"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string format, output, config_path;
  unsigned jobs = 1;
  std::uint64_t trial_bound = 0, rho_iterations = 0, wall_time_ms = 0;
  unsigned long witness_bound = 0;
  auto* o_seed = app.add_option("--seed", seed, "Random seed recorded in every certificate");
  auto* o_format = app.add_option("--format", format, "json-lines or tsv")
                     ->check(CLI::IsMember({"json-lines", "tsv"}));
  auto* o_output = app.add_option("--output", output, "Write to this file instead of standard output");
  auto* o_jobs = app.add_option("--jobs", jobs, "Worker threads for independent certifications")
                   ->check(CLI::PositiveNumber);
  app.add_option("--config", config_path, std::string("JSON config file (default: $") + config_env + ")");
  auto* o_trial = app.add_option("--trial-bound", trial_bound)->check(CLI::PositiveNumber);
  auto* o_rho = app.add_option("--rho-iterations", rho_iterations)->check(CLI::PositiveNumber);
  auto* o_wall = app.add_option("--wall-time-ms", wall_time_ms)->check(CLI::PositiveNumber);
  auto* o_witness = app.add_option("--witness-bound", witness_bound, "Scan bound for Frobenius witnesses")
                      ->check(CLI::PositiveNumber);

  std::string w_text, s_text;
  unsigned long height = 0;
  std::vector<std::string> u_list;
  std::string which, kernel_filter;
  unsigned max_v = 50;
  bool certify_hit = false;

  auto* c_check = app.add_subcommand("check-w", "Conditions a), b), b') for one w");
  c_check->add_option("--w", w_text, "w as p/q or a decimal")->required();

  auto* c_search = app.add_subcommand("search-w", "Enumerate w by height and keep those passing a) and b)");
  c_search->add_option("--height", height, "Bound on |numerator| and denominator")->required()->check(CLI::PositiveNumber);
  c_search->add_option("--kernel", kernel_filter, "Keep only w whose condition-a kernel equals this value");

  auto* c_cert = app.add_subcommand("certify", "Certify one specialization s0 of f_{w,s}");
  c_cert->add_option("--w", w_text)->required();
  c_cert->add_option("--s", s_text, "s0 as a rational")->required();

  auto* c_cor = app.add_subcommand("corollary", "Certify w = -2/3, t = 86 u^3 for each u");
  c_cor->add_option("--u", u_list, "Comma-separated integers coprime to 30")->required()->delimiter(',');

  auto* c_exc = app.add_subcommand("exceptional-set", "Effective exceptional primes of the family at w");
  c_exc->add_option("--w", w_text)->required();

  auto* c_group = app.add_subcommand("group-facts", "Exhaustive permutation-group verifications");

  auto* c_curve = app.add_subcommand("curve-search", "Naive rational point search");
  c_curve->add_option("--which", which, "43 or rank0")->required()->check(CLI::IsMember({"43", "rank0"}));
  auto* o_height = c_curve->add_option("--height", height, "Height bound (rank0: upper end of the X range)")
                     ->check(CLI::PositiveNumber);

  auto* c_real = app.add_subcommand("totally-real", "Scan s0 between branch points for five real roots");
  c_real->add_option("--w", w_text)->required();
  c_real->add_option("--max-v", max_v, "Largest v tried in s0 = u^3/v^2")->check(CLI::PositiveNumber);
  c_real->add_flag("--certify", certify_hit, "Also certify the first totally real sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunConfig cfg;
  std::ofstream file;
  try {
    if (config_path.empty())
      if (const char* env = std::getenv(config_env))
        config_path = env;
    if (!config_path.empty())
      cfg = load_config(config_path, cfg);
    if (o_seed->count())
      cfg.seed = seed;
    if (o_format->count())
      cfg.format = format;
    if (o_output->count())
      cfg.output = output;
    if (o_jobs->count())
      cfg.jobs = jobs;
    if (o_trial->count())
      cfg.budget.trial_bound = trial_bound;
    if (o_rho->count())
      cfg.budget.rho_iterations = rho_iterations;
    if (o_wall->count())
      cfg.budget.wall_time = std::chrono::milliseconds(wall_time_ms);
    if (o_witness->count())
      cfg.witness_bound = witness_bound;
    if (cfg.format != "json-lines" && cfg.format != "tsv")
      throw UsageError("format must be json-lines or tsv");
    cfg.budget.seed = cfg.seed;
  } catch (const std::exception& e) {
    err << "qcert: " << e.what() << "\n";
    return 2;
  }

  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "qcert: cannot open " << cfg.output << "\n";
      return 2;
    }
    sink = &file;
  }
  Emitter em(*sink, cfg);

  try {
    if (*c_check) {
      WParam w = WParam::parse(w_text);
      auto r = check_conditions(w, cfg.budget);
      if (em.tsv()) {
        em.line(report_tsv_header);
        em.line(report_tsv(w, r));
      } else {
        em.json(report_json(w, r));
      }
      return 0;
    }
    if (*c_search) {
      std::optional<BigInt> want;
      if (!kernel_filter.empty())
        want = parse_integer(kernel_filter);
      std::vector<WParam> ws;
      for (unsigned long q = 1; q <= height; ++q)
        for (long p = -static_cast<long>(height); p <= static_cast<long>(height); ++p)
          if (p != 0 && gcd(BigInt(p), BigInt(q)) == 1)
            ws.emplace_back(BigInt(p), BigInt(q));
      std::sort(ws.begin(), ws.end(), [](const WParam& a, const WParam& b) { return a.value() < b.value(); });
      auto reports = parallel_map<ConditionReport>(ws.size(), cfg.jobs,
                                                   [&](std::size_t i) { return check_conditions(ws[i], cfg.budget); });
      if (em.tsv())
        em.line(report_tsv_header);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        auto const& r = reports[i];
        if (r.a_ok != true || !r.b_ok)
          continue;
        if (want && r.kernel != want)
          continue;
        if (em.tsv())
          em.line(report_tsv(ws[i], r));
        else
          em.json(report_json(ws[i], r));
      }
      return 0;
    }
    if (*c_cert) {
      WParam w = WParam::parse(w_text);
      BigRat s0 = parse_rational(s_text);
      auto cert = certify_specialization(w, s0, certify_config(cfg));
      return emit_certificates(em, {cert});
    }
    if (*c_cor) {
      std::vector<BigInt> us;
      for (auto const& text : u_list) {
        BigInt u = parse_integer(text);
        if (gcd(u, 30) != 1)
          throw UsageError("u = " + text + " is not coprime to 30");
        us.push_back(u);
      }
      WParam w(-2, 3);
      auto ccfg = certify_config(cfg);
      auto certs = parallel_map<SpecializationCertificate>(us.size(), cfg.jobs, [&](std::size_t i) {
        BigInt t = 86 * pow(us[i], 3);
        return certify_specialization(w, s_from_t(w, BigRat(t)), ccfg);
      });
      return emit_certificates(em, certs);
    }
    if (*c_exc) {
      WParam w = WParam::parse(w_text);
      auto ex = exceptional_set(family_in_t(w), 120, cfg.budget);
      std::vector<std::string> ps;
      for (auto const& p : ex.primes)
        ps.push_back(to_string(p));
      if (em.tsv()) {
        em.line("w\tprimes\tcomplete");
        em.line(w.to_string() + "\t" + join(ps, ",") + "\t" + (ex.complete ? "true" : "false"));
      } else {
        em.json({{"w", w.to_string()},
                 {"primes", ps},
                 {"complete", ex.complete}});
      }
      return 0;
    }
    if (*c_group)
      return group_facts(em);
    if (*c_curve) {
      if (which == "43") {
        unsigned long h = o_height->count() ? height : cfg.curve_height;
        emit_points(em, "43Y^2=(-50W^2+27)(10W^2+8W+1)", "height<=" + std::to_string(h),
                    curve_search(43, condition_quartic(), h));
      } else {
        long hi = o_height->count() ? static_cast<long>(height) : 1'000'000L;
        emit_points(em, "Y^2=X(X-15)(X-24)", "integer X in [-1000," + std::to_string(hi) + "]",
                    integral_points(rank0_cubic(), -1000, hi));
      }
      return 0;
    }
    if (*c_real) {
      WParam w = WParam::parse(w_text);
      auto samples = signature_samples(w, max_v);
      if (em.tsv())
        em.line("w\ts0\treal_roots");
      std::optional<BigRat> hit;
      for (auto const& s : samples) {
        if (s.real_roots == 5 && !hit)
          hit = s.s0;
        if (em.tsv())
          em.line(w.to_string() + "\t" + to_string(s.s0) + "\t" + std::to_string(s.real_roots));
        else
          em.json({{"w", w.to_string()},
                   {"lo", s.lo_infinite ? ordered_json("-inf") : ordered_json(to_string(s.lo))},
                   {"hi", s.hi_infinite ? ordered_json("inf") : ordered_json(to_string(s.hi))},
                   {"s0", to_string(s.s0)},
                   {"real_roots", s.real_roots}});
      }
      if (!hit) {
        err << "qcert: no totally real sample for w = " << w.to_string() << "\n";
        return 0;
      }
      if (certify_hit) {
        auto cert = certify_specialization(w, *hit, certify_config(cfg));
        em.line(em.tsv() ? certificate_tsv_header() + "\n" + certificate_tsv_row(cert) : certificate_json(cert));
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "qcert: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "qcert: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qcert::cli
