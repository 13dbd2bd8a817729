#include "qcert/certificate_json.hpp"

#include <json.hpp>

namespace qcert {

using nlohmann::ordered_json;

namespace {

ordered_json coeff_list(const UniPoly& f)
{
  ordered_json a = ordered_json::array();
  for (auto const& c : f.coeffs())
    a.push_back(to_string(c));
  return a;
}

template <class T>
ordered_json opt_string(const std::optional<T>& v)
{
  return v ? ordered_json(to_string(*v)) : ordered_json(nullptr);
}

ordered_json plan_json(const ReductionPlan& plan)
{
  return {{"p", to_string(plan.p)},
          {"shift", to_string(plan.shift)},
          {"scale", to_string(plan.scale)},
          {"normalizer", to_string(plan.normalizer)},
          {"source", plan.source}};
}

ordered_json local_json(const LocalCertificate& lc)
{
  ordered_json j;
  j["p"] = to_string(lc.p);
  j["v_disc"] = lc.v_disc;
  j["inertia_class"] = to_string(lc.inertia);
  j["residual_pattern"] = lc.residual_pattern.to_string();
  j["decomposition_cyclic"] = lc.decomposition_cyclic ? ordered_json(*lc.decomposition_cyclic) : ordered_json(nullptr);
  j["obstruction_free"] = lc.obstruction_free;
  j["method"] = to_string(lc.method);
  j["tame"] = lc.tame;
  j["plan"] = lc.plan ? plan_json(*lc.plan) : ordered_json(nullptr);
  j["detail"] = lc.detail;
  return j;
}

ordered_json factor_json(const FactoredInteger& fi)
{
  ordered_json fs = ordered_json::array();
  for (auto const& [p, e] : fi.factors)
    fs.push_back({{"p", to_string(p)}, {"e", e}, {"probable", fi.probable.count(p) > 0}});
  return {{"sign", fi.sign}, {"factors", fs}, {"cofactor", to_string(fi.cofactor)}, {"complete", fi.complete}};
}

}  // namespace

std::string certificate_json(const SpecializationCertificate& c, int indent)
{
  ordered_json j;
  j["w"] = c.w.to_string();
  j["s0"] = to_string(c.s0);
  j["t0"] = to_string(c.t0);
  j["seed"] = std::to_string(c.seed);
  j["f"] = {{"text", c.f.to_string()}, {"coefficients", coeff_list(c.f)}};
  j["integral_model"] = {{"scale", to_string(c.model.scale)}, {"coefficients", coeff_list(c.model.poly)}};
  j["disc"] = to_string(c.disc);
  j["disc_factorization"] = factor_json(c.disc_factors);
  j["squarefree_kernel"] = opt_string(c.kernel);
  j["fundamental_disc"] = opt_string(c.fundamental_disc);
  j["two_ramified_in_quadratic"] =
    c.two_ramified_in_quadratic ? ordered_json(*c.two_ramified_in_quadratic) : ordered_json(nullptr);
  j["signature"] = {{"real_roots", c.real_roots}, {"complex_pairs", c.complex_pairs}};
  j["irreducibility"] = {{"method", c.irreducibility_method.empty() ? ordered_json(nullptr) : ordered_json(c.irreducibility_method)},
                         {"prime", opt_string(c.irreducible_witness)}};
  ordered_json locals = ordered_json::array();
  for (auto const& lc : c.locals)
    locals.push_back(local_json(lc));
  j["locals"] = locals;
  if (c.galois) {
    ordered_json ws = ordered_json::array();
    for (auto const& w : c.galois->witnesses)
      ws.push_back({{"p", to_string(w.p)}, {"pattern", w.pattern.to_string()}});
    j["galois"] = {{"witnesses", ws},
                   {"generation_fact", c.galois->generation_fact},
                   {"verdict", c.galois->s5 ? "S5" : "undetermined"},
                   {"method", "cycle-type witnesses + exhaustive generation"}};
  } else {
    j["galois"] = nullptr;
  }
  j["status"] = to_string(c.status);
  j["reason"] = c.reason;
  return j.dump(indent);
}

std::string certificate_tsv_header() { return "w\ts0\tdisc_kernel\tfundamental_disc\tsignature\tstatus"; }

std::string certificate_tsv_row(const SpecializationCertificate& c)
{
  auto opt = [](const std::optional<BigInt>& v) { return v ? to_string(*v) : std::string("NA"); };
  return c.w.to_string() + "\t" + to_string(c.s0) + "\t" + opt(c.kernel) + "\t" + opt(c.fundamental_disc) + "\t" +
         std::to_string(c.real_roots) + "," + std::to_string(c.complex_pairs) + "\t" + to_string(c.status);
}

}  // namespace qcert
