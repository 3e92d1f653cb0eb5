#include "qprop/models.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>

#include "qprop/cognition.hpp"
#include "qprop/propensity.hpp"
#include "qprop/qcore.hpp"
#include "qprop/random.hpp"

namespace qprop::cli {

namespace cog = qprop::cognition;
namespace prop = qprop::propensity;

namespace {

prop::EntropicScale scale_from(const Params& p) {
  if (const auto gamma = p.maybe_real("gamma")) return prop::EntropicScale::direct(*gamma);
  return prop::EntropicScale::from_oscillator(p.real("omega"), p.real("hbar"));
}

std::uint64_t require_seed(const Params& p, const char* why) {
  if (!p.has("seed")) throw UsageError(std::string("parameter 'seed' is required ") + why, "seed");
  return p.count("seed");
}

prop::PropensityCurve buyer_curve(const Params& p) {
  return prop::PropensityCurve::gaussian(std::log(p.real("buyer-price")), p.real("buyer-sigma"));
}

// Seller curve when both seller-price and seller-sigma are present.
std::optional<prop::PropensityCurve> seller_curve(const Params& p) {
  const bool price = p.has("seller-price");
  const bool sigma = p.has("seller-sigma");
  if (price != sigma) {
    throw UsageError("seller-price and seller-sigma must be given together",
                     price ? "seller-sigma" : "seller-price");
  }
  if (!price) return std::nullopt;
  return prop::PropensityCurve::gaussian(std::log(p.real("seller-price")), p.real("seller-sigma"));
}

prop::JointPropensity joint_from(const Params& p) {
  const prop::PropensityCurve buyer = buyer_curve(p);
  const auto seller = seller_curve(p);
  if (p.has("fixed-price")) {
    if (seller) throw UsageError("fixed-price excludes seller-price/seller-sigma", "fixed-price");
    return prop::fixed_price_joint(buyer, std::log(p.real("fixed-price")));
  }
  if (!seller) {
    throw UsageError("either seller-price and seller-sigma, or fixed-price, is required",
                     "seller-price");
  }
  return prop::joint_propensity(buyer, *seller);
}

Json marginals_json(double a_yes, double a_no, double b_yes, double b_no) {
  return Json{{"A_yes", json_real(a_yes)},
              {"A_no", json_real(a_no)},
              {"B_yes", json_real(b_yes)},
              {"B_no", json_real(b_no)}};
}

ModelResult order_effect(const Params& p) {
  const double theta = p.real("theta");
  const double phi = p.real("phi");
  const std::string& which = p.text("order");

  std::vector<cog::QuestionOrder> orders;
  if (which != "ba") orders.push_back(cog::QuestionOrder::AThenB);
  if (which != "ab") orders.push_back(cog::QuestionOrder::BThenA);

  // Cross-checks the circuits against the closed forms before reporting.
  cog::order_effect_summary(theta, phi);

  ModelResult r;
  r.table.columns = {"order", "A+B+", "A+B-", "A-B+", "A-B-", "A_yes", "A_no", "B_yes", "B_no"};
  Json rows = Json::array();
  for (cog::QuestionOrder order : orders) {
    const cog::EventDistribution d = cog::order_effect_circuit({theta, phi, order});
    std::vector<Cell> row{std::string(cog::to_string(order))};
    Json joint = Json::object();
    for (cog::Event e : cog::kEvents) {
      row.emplace_back(d[e]);
      joint[std::string(cog::event_label(e))] = json_real(d[e]);
    }
    for (double m : {d.a_yes(), d.a_no(), d.b_yes(), d.b_no()}) row.emplace_back(m);
    r.table.rows.push_back(std::move(row));
    rows.push_back({{"order", std::string(cog::to_string(order))},
                    {"joint", joint},
                    {"marginals", marginals_json(d.a_yes(), d.a_no(), d.b_yes(), d.b_no())}});
  }
  r.results = {{"theta", json_real(theta)},
               {"phi", json_real(phi)},
               {"order_effect", json_real(cog::order_effect_magnitude(theta, phi))},
               {"orders", rows}};
  return r;
}

ModelResult interference(const Params& p) {
  const double theta = p.real("theta");
  const double phi = p.real("phi");
  const cog::DisjunctionProtocols protocols = cog::simulate_disjunction(theta, phi);
  const double term = cog::interference_term(theta, phi);
  const double order_effect = cog::order_effect_magnitude(theta, phi);

  ModelResult r;
  r.table.columns = {"theta", "phi", "p_unmeasured", "p_measured", "interference", "order_effect"};
  std::vector<Cell> row{theta, phi, protocols.unmeasured_b_yes, protocols.measured_b_yes, term,
                        order_effect};
  r.results = {{"theta", json_real(theta)},
               {"phi", json_real(phi)},
               {"p_unmeasured", json_real(protocols.unmeasured_b_yes)},
               {"p_measured", json_real(protocols.measured_b_yes)},
               {"interference", json_real(term)},
               {"order_effect", json_real(order_effect)}};

  if (const auto trials = p.maybe_count("trials")) {
    RandomStream rng(require_seed(p, "when trials is set"));
    const cog::EventCounts counts = cog::sample_sequential_measurement(
        rotation_gate(theta), rotation_gate(-phi), *trials, rng);
    const double pm = protocols.measured_b_yes;
    const double std_error = std::sqrt(pm * (1.0 - pm) / static_cast<double>(*trials));
    for (const char* c : {"trials", "seed", "mc_p_measured", "mc_std_error"}) r.table.columns.emplace_back(c);
    row.emplace_back(*trials);
    row.emplace_back(rng.seed());
    row.emplace_back(counts.b_yes_frequency());
    row.emplace_back(std_error);
    r.results["monte_carlo"] = {{"trials", *trials},
                                {"seed", rng.seed()},
                                {"p_measured", json_real(counts.b_yes_frequency())},
                                {"std_error", json_real(std_error)}};
  }
  r.table.rows.push_back(std::move(row));
  return r;
}

ModelResult equivalence(const Params& p) {
  const std::uint64_t trials = p.count("trials");
  const std::uint64_t seed = p.count("seed");
  const double tol = p.real("tol");
  if (!(tol > 0.0)) {
    throw ModelError("tol must be positive (got " + p.text("tol") +
                     "): the equivalence check compares floating-point probabilities and does "
                     "not require exact equality; use e.g. --tol 1e-12");
  }

  RandomStream rng(seed);
  double max_deviation = 0.0;
  double max_moduli = 0.0;
  std::uint64_t failures = 0;
  const auto moduli_gap = [](const Gate& g) {
    return std::max(std::abs(std::norm(g(0, 1)) - std::norm(g(1, 0))),
                    std::abs(std::norm(g(0, 0)) - std::norm(g(1, 1))));
  };
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Gate a = random_unitary_2x2(rng);
    const Gate b = random_unitary_2x2(rng);
    const cog::EquivalenceReport report = cog::equivalence_check(a, b, tol);
    max_deviation = std::max(max_deviation, report.max_abs_deviation);
    max_moduli = std::max({max_moduli, moduli_gap(a), moduli_gap(b)});
    if (!report.passed) ++failures;
  }

  ModelResult r;
  const bool passed = failures == 0;
  r.table.columns = {"trials", "seed", "tol", "max_deviation", "max_moduli_deviation", "failures",
                     "passed"};
  r.table.rows.push_back({trials, seed, tol, max_deviation, max_moduli, failures, passed});
  r.results = {{"trials", trials},
               {"seed", seed},
               {"tol", json_real(tol)},
               {"max_deviation", json_real(max_deviation)},
               {"max_moduli_deviation", json_real(max_moduli)},
               {"failures", failures},
               {"passed", passed}};
  if (!passed) {
    r.exit_code = 1;
    r.diagnostic = std::to_string(failures) + " of " + std::to_string(trials) +
                   " unitary pairs exceeded tol; max deviation " + format_real(max_deviation);
  }
  return r;
}

ModelResult reversal(const Params& p) {
  const double x1 = p.real("x1");
  const double x2 = p.real("x2");
  const cog::ReversalDecision d = cog::preference_reversal_switch(x1, x2);
  ModelResult r;
  r.table.columns = {"x1", "x2", "ratio", "threshold", "switches"};
  r.table.rows.push_back({x1, x2, d.ratio, cog::kReversalThreshold, d.switches});
  r.results = {{"x1", json_real(x1)},
               {"x2", json_real(x2)},
               {"ratio", json_real(d.ratio)},
               {"threshold", json_real(cog::kReversalThreshold)},
               {"switches", d.switches}};
  return r;
}

ModelResult force(const Params& p) {
  const auto curve = prop::PropensityCurve::gaussian(std::log(p.real("price")), p.real("sigma"));
  const prop::EntropicScale scale = scale_from(p);
  const double x = std::log(p.real("at"));
  const double k = scale.gamma() / (curve.sigma() * curve.sigma());
  const double dens = prop::density(curve, x);
  const double f = prop::entropic_force(curve, x, scale);

  ModelResult r;
  r.table.columns = {"x", "price", "mu", "sigma", "gamma", "k", "density", "force"};
  r.table.rows.push_back({x, p.real("at"), curve.mu(), curve.sigma(), scale.gamma(), k, dens, f});
  r.results = {{"x", json_real(x)},         {"price", json_real(p.real("at"))},
               {"mu", json_real(curve.mu())}, {"sigma", json_real(curve.sigma())},
               {"gamma", json_real(scale.gamma())}, {"k", json_real(k)},
               {"density", json_real(dens)}, {"force", json_real(f)}};
  return r;
}

ModelResult oscillator(const Params& p) {
  const auto curve = prop::PropensityCurve::gaussian(0.0, p.real("sigma"));
  const prop::OscillatorParams o = prop::oscillator_from_curve(curve, p.real("omega"), p.real("hbar"));
  const prop::ReversalEnergy e = prop::reversal_energy(o.omega, o.hbar);

  ModelResult r;
  r.table.columns = {"sigma", "omega", "hbar", "mass", "k", "gamma", "reversal_energy_exact",
                     "reversal_energy_approx"};
  r.table.rows.push_back({o.sigma, o.omega, o.hbar, o.mass, o.force_constant, o.gamma, e.exact,
                          e.approximate});
  r.results = {{"sigma", json_real(o.sigma)},
               {"omega", json_real(o.omega)},
               {"hbar", json_real(o.hbar)},
               {"mass", json_real(o.mass)},
               {"k", json_real(o.force_constant)},
               {"gamma", json_real(o.gamma)},
               {"reversal_energy", {{"exact", json_real(e.exact)},
                                    {"approx", json_real(e.approximate)},
                                    {"relative_gap", json_real(e.relative_gap)}}}};
  return r;
}

ModelResult joint(const Params& p) {
  const prop::JointPropensity j = joint_from(p);
  const bool gaussian = j.joint.is_gaussian();
  const std::string kind = gaussian ? "gaussian" : "point-mass";

  ModelResult r;
  r.table.columns = {"kind", "mu", "sigma", "price", "scale"};
  r.table.rows.push_back({kind, j.joint.mu(), j.joint.sigma(), std::exp(j.joint.mu()), j.scale});
  r.results = {{"kind", kind},
               {"mu", json_real(j.joint.mu())},
               {"sigma", json_real(j.joint.sigma())},
               {"price", json_real(std::exp(j.joint.mu()))},
               {"scale", json_real(j.scale)}};
  return r;
}

ModelResult work(const Params& p) {
  const auto curve = prop::PropensityCurve::gaussian(std::log(p.real("price")), p.real("sigma"));
  const prop::EntropicScale scale = scale_from(p);
  const double x1 = std::log(p.real("from"));
  const double x2 = std::log(p.real("to"));
  const double delta = prop::work(curve, x1, x2, scale);
  const double ratio = std::exp(delta / scale.gamma());

  ModelResult r;
  r.table.columns = {"x1", "x2", "density_ratio", "gamma", "delta_e"};
  r.table.rows.push_back({x1, x2, ratio, scale.gamma(), delta});
  r.results = {{"x1", json_real(x1)},
               {"x2", json_real(x2)},
               {"density_ratio", json_real(ratio)},
               {"gamma", json_real(scale.gamma())},
               {"delta_e", json_real(delta)}};
  return r;
}

ModelResult sample(const Params& p) {
  const prop::JointPropensity j = joint_from(p);
  const std::uint64_t n = p.count("n");
  RandomStream rng(p.count("seed"));
  const std::vector<double> xs = prop::sample_prices(j, n, rng);

  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;

  ModelResult r;
  r.table.columns = {"index", "log_price", "price"};
  Json values = Json::array();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    r.table.rows.push_back({static_cast<std::uint64_t>(i), xs[i], std::exp(xs[i])});
    values.push_back(json_real(xs[i]));
  }
  r.results = {{"n", n},
               {"seed", rng.seed()},
               {"mean", json_real(mean)},
               {"std", json_real(sd)},
               {"log_prices", values}};
  return r;
}

ModelResult curves(const Params& p) {
  const prop::PropensityCurve buyer = buyer_curve(p);
  const auto seller = seller_curve(p);
  const prop::EntropicScale scale = scale_from(p);
  const std::uint64_t points = p.count("points");

  double lo = buyer.mu() - 4.0 * buyer.sigma();
  double hi = buyer.mu() + 4.0 * buyer.sigma();
  if (seller) {
    lo = std::min(lo, seller->mu() - 4.0 * seller->sigma());
    hi = std::max(hi, seller->mu() + 4.0 * seller->sigma());
  }
  if (const auto v = p.maybe_real("grid-min")) lo = std::log(*v);
  if (const auto v = p.maybe_real("grid-max")) hi = std::log(*v);
  if (!(lo < hi)) throw UsageError("grid-min must be below grid-max", "grid-min");

  std::optional<prop::JointPropensity> j;
  if (seller) j = prop::joint_propensity(buyer, *seller);

  ModelResult r;
  r.table.columns = {"x", "price", "buyer_density"};
  if (seller) {
    for (const char* c : {"seller_density", "joint_density", "buyer_force", "seller_force", "joint_force"})
      r.table.columns.emplace_back(c);
  } else {
    r.table.columns.emplace_back("buyer_force");
  }

  std::map<std::string, Json> columns;
  for (const auto& c : r.table.columns) columns[c] = Json::array();
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::uint64_t i = 0; i < points; ++i) {
    const double x = i + 1 == points ? hi : lo + step * static_cast<double>(i);
    std::vector<Cell> row{x, std::exp(x), prop::density(buyer, x)};
    if (seller) {
      row.emplace_back(prop::density(*seller, x));
      row.emplace_back(prop::density(j->joint, x));
      row.emplace_back(prop::entropic_force(buyer, x, scale));
      row.emplace_back(prop::entropic_force(*seller, x, scale));
      row.emplace_back(prop::entropic_force(j->joint, x, scale));
    } else {
      row.emplace_back(prop::entropic_force(buyer, x, scale));
    }
    for (std::size_t c = 0; c < row.size(); ++c)
      columns[r.table.columns[c]].push_back(json_real(std::get<double>(row[c])));
    r.table.rows.push_back(std::move(row));
  }

  Json data = Json::object();
  for (const auto& c : r.table.columns) data[c] = std::move(columns[c]);
  r.results = {{"points", points}, {"gamma", json_real(scale.gamma())}, {"columns", data}};
  if (j) {
    r.results["joint"] = {{"mu", json_real(j->joint.mu())},
                          {"sigma", json_real(j->joint.sigma())},
                          {"scale", json_real(j->scale)}};
  }
  return r;
}

}  // namespace

ModelResult run_model(const Params& params) {
  static const std::map<std::string, std::function<ModelResult(const Params&)>, std::less<>> table{
      {"order-effect", order_effect}, {"interference", interference}, {"equivalence", equivalence},
      {"reversal", reversal},         {"force", force},               {"oscillator", oscillator},
      {"joint", joint},               {"work", work},                 {"sample", sample},
      {"curves", curves},
  };
  const auto it = table.find(params.spec().name);
  if (it == table.end()) throw UsageError("no runner for model " + std::string(params.spec().name));
  return it->second(params);
}

}  // namespace qprop::cli
