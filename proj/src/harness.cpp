#include "equi/harness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "equi/decomp.hpp"
#include "equi/equinet.hpp"
#include "equi/errors.hpp"
#include "equi/rep.hpp"
#include "equi/rng.hpp"

namespace equi {

namespace {

constexpr double kLinearityTol = 1e-12;

std::vector<std::vector<int>> klein_table() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool is_full_symmetric_natural(const GAction& action) {
  const int n = action.group().degree();
  if (action.points() != n || n > 6) return false;
  return static_cast<long long>(action.group().order()) == factorial(n);
}

std::vector<Field> draw_samples(const GAction& action, int dim, int count, Rng& rng) {
  SampleBox box;
  box.point_count = action.points();
  box.value_dim = dim;
  box.seed = rng.next_u64();
  return sample_fields(box, count);
}

/// One random-MLP component per orbit representative (no invariance intended;
/// used to probe the bijection itself).
std::vector<ComponentMap> random_components(const OrbitDecomposition& dec, int out_dim,
                                            Rng& rng) {
  std::vector<ComponentMap> comps;
  for (std::size_t i = 0; i < dec.representatives.size(); ++i) {
    const int rep = dec.representatives[i];
    Mlp net = mlp_random({dec.action.points(), 8, out_dim}, rng.next_u64());
    comps.push_back(ComponentMap{
        [net](const Field& f) { return net.forward(f.flat()); },
        dec.action, 1, out_dim, rep, stabilizer(dec.action, rep), "random-mlp"});
  }
  return comps;
}

/// Exactly equivariant target for any coordinate-permuting action:
/// T(f)(y) = 2 f(y) + mean_x f(x).
MapBox analytic_equivariant_target(const GAction& action, int dim) {
  MapBox box;
  box.in_points = box.out_points = action.points();
  box.in_dim = box.out_dim = dim;
  box.label = "2f+mean";
  box.evaluate = [m = action.points(), dim](const Field& f) {
    std::vector<double> mean(dim, 0.0);
    for (int x = 0; x < m; ++x)
      for (int k = 0; k < dim; ++k) mean[k] += f.at(x, k);
    for (double& v : mean) v /= m;
    Field out(m, dim);
    for (int y = 0; y < m; ++y)
      for (int k = 0; k < dim; ++k) out.at(y, k) = 2.0 * f.at(y, k) + mean[k];
    return out;
  };
  return box;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

std::pair<Json, bool> suite_roundtrip(const SuiteConfig& config, Rng rng) {
  const OrbitDecomposition dec = orbit_decomposition(config.action);
  const int fields = std::min(config.sample_count, 50);
  const std::vector<Field> samples = draw_samples(config.action, 1, fields, rng);

  double roundtrip_violation = 0.0;
  double linearity_violation = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<ComponentMap> tuple = random_components(dec, 1, rng);
    const MapBox F = psi(tuple, dec);
    const MapBox F2 = psi(phi(F, dec), dec);
    const std::vector<ComponentMap> tuple2 = phi(psi(tuple, dec), dec);
    for (const Field& f : samples) {
      roundtrip_violation =
          std::max(roundtrip_violation, sup_norm(field_difference(F2.evaluate(f), F.evaluate(f))));
      for (std::size_t i = 0; i < tuple.size(); ++i)
        roundtrip_violation = std::max(
            roundtrip_violation, max_abs_diff(tuple2[i].evaluate(f), tuple[i].evaluate(f)));
    }
    // linearity of Phi on black-box combinations
    const std::vector<ComponentMap> other = random_components(dec, 1, rng);
    const MapBox G = psi(other, dec);
    for (double lambda : {-1.0, 0.5, 2.0}) {
      const auto combined = phi(mapbox_axpy(F, lambda, G), dec);
      const auto left = phi(F, dec);
      const auto right = phi(G, dec);
      for (const Field& f : samples)
        for (std::size_t i = 0; i < combined.size(); ++i) {
          const auto lv = left[i].evaluate(f);
          const auto rv = right[i].evaluate(f);
          std::vector<double> expect(lv.size());
          for (std::size_t k = 0; k < lv.size(); ++k) expect[k] = lv[k] + lambda * rv[k];
          linearity_violation =
              std::max(linearity_violation, max_abs_diff(combined[i].evaluate(f), expect));
        }
    }
  }
  Json body;
  body["roundtrip_violation"] = roundtrip_violation;
  body["linearity_violation"] = linearity_violation;
  const bool pass = roundtrip_violation == 0.0 && linearity_violation <= kLinearityTol;
  body["pass"] = pass;
  return {body, pass};
}

EquivariantNet make_equivariant_net(const GAction& action, const OrbitDecomposition& dec,
                                    InvarianceMode mode, Rng& rng) {
  std::vector<InvariantNet> comps;
  for (int rep : dec.representatives) {
    const Subgroup stab = stabilizer(action, rep);
    Mlp base = mlp_random({action.points(), 12, 1}, rng.next_u64());
    comps.push_back(mode == InvarianceMode::average
                        ? invariant_by_averaging(std::move(base), action, stab)
                        : invariant_by_sortg(std::move(base), action, stab));
  }
  return build_equivariant(std::move(comps), dec);
}

std::pair<Json, bool> suite_equivariance(const SuiteConfig& config, Rng rng) {
  const GAction& action = config.action;
  const OrbitDecomposition dec = orbit_decomposition(action);
  const std::vector<Field> samples = draw_samples(action, 1, config.sample_count, rng);

  EquivariantNet avg_net = make_equivariant_net(action, dec, InvarianceMode::average, rng);
  EquivariantNet sort_net = make_equivariant_net(action, dec, InvarianceMode::sortg, rng);

  const double avg_violation =
      check_equivariance(avg_net.as_mapbox(), action, action, samples);
  const double sortg_violation =
      check_equivariance(sort_net.as_mapbox(), action, action, samples);

  const MapBox target = analytic_equivariant_target(action, 1);
  const std::vector<Field> transfer_samples = draw_samples(action, 1, 16, rng);
  const TransferReport transfer = transfer_bound_check(target, avg_net, transfer_samples);

  std::size_t component_sum = 0;
  for (std::size_t p : transfer.component_params) component_sum += p;

  Json body;
  body["averaging_violation"] = avg_violation;
  body["sortg_violation"] = sortg_violation;
  body["transfer_sup_error"] = transfer.sup_error;
  body["transfer_component_error"] = transfer.max_component_error;
  body["transfer_bound_holds"] = transfer.bound_holds;
  body["param_total"] = transfer.net_params;
  body["param_components"] = transfer.component_params;
  const bool pass = avg_violation <= config.tolerance && sortg_violation <= config.tolerance &&
                    transfer.bound_holds && transfer.net_params == component_sum;
  body["pass"] = pass;
  return {body, pass};
}

std::pair<Json, bool> suite_sortg(const SuiteConfig& config, Rng rng) {
  const GAction& action = config.action;
  const Subgroup stab = stabilizer(action, 0);
  const SortGLayer layer = sortg_layer(subgroup_orbit_blocks(action, stab));
  const int n = action.points();

  double max_diff = 0.0;
  bool domain_ok = true;
  bool invariant = true;
  const std::vector<Field> samples = draw_samples(action, 1, config.sample_count, rng);
  for (const Field& f : samples) {
    const std::vector<double> got = layer.apply(f.flat());
    max_diff = std::max(max_diff, max_abs_diff(got, layer.reference(f.flat())));
    domain_ok = domain_ok && layer.in_fundamental_domain(got);
  }
  const int inv_fields = std::min(config.sample_count, 50);
  for (int s = 0; s < inv_fields; ++s) {
    const Field& f = samples[s];
    const std::vector<double> base = layer.apply(f.flat());
    for (int h : stab.member_indices)
      if (layer.apply(act_field(action, h, f).flat()) != base) invariant = false;
  }

  Json body;
  body["points"] = n;
  body["blocks"] = layer.blocks;
  body["max_diff_vs_reference"] = max_diff;
  body["fundamental_domain_ok"] = domain_ok;
  body["invariance_exact"] = invariant;
  const bool pass = max_diff == 0.0 && domain_ok && invariant;
  body["pass"] = pass;
  return {body, pass};
}

std::pair<Json, bool> suite_repr(const SuiteConfig& config, Rng) {
  const GAction& action = config.action;
  const Representation rep = perm_rep(action);
  const bool hom_ok = rep.check_homomorphism();

  const Subgroup stab = stabilizer(action, 0);
  const std::vector<int> transversal = right_coset_transversal(action.group(), stab);
  const Representation star = star_action_rep(action, stab, transversal, 1);
  const Representation induced = induce(restrict_rep(rep, stab), action.group(), transversal);
  const bool xi_ok = xi_check(star, induced);

  const OrbitDecomposition dec = orbit_decomposition(action);
  bool orbit_stab_ok = true;
  for (int r : dec.representatives) {
    const Subgroup s = stabilizer(action, r);
    if (dec.orbits[dec.orbit_of[r]].size() * s.order() != action.group().order())
      orbit_stab_ok = false;
  }

  Json body;
  body["homomorphism_ok"] = hom_ok;
  body["xi_ok"] = xi_ok;
  body["orbit_stabilizer_ok"] = orbit_stab_ok;
  bool deepsets_ok = true;
  if (is_full_symmetric_natural(action)) {
    const int dim = intertwiner_basis(rep, rep).dimension;
    body["deepsets_dim"] = dim;
    deepsets_ok = dim == 2;
  }
  const bool pass = hom_ok && xi_ok && orbit_stab_ok && deepsets_ok;
  body["pass"] = pass;
  return {body, pass};
}

std::pair<Json, bool> suite_appendix_c(const SuiteConfig& config, Rng) {
  int n = config.audit_n;
  if (is_full_symmetric_natural(config.action) && config.action.group().degree() >= 4)
    n = config.action.group().degree();
  const AppendixCReport report = appendix_c_audit(n, 1, 1);
  Json body = audit_report_to_json(report);
  const bool pass = report.all_pass();
  body["pass"] = pass;
  return {body, pass};
}

std::pair<Json, bool> suite_demo(const SuiteConfig& config, Rng rng) {
  const GAction action = GAction::natural(FiniteGroup::symmetric(3));
  const OrbitDecomposition dec = orbit_decomposition(action);
  EquivariantNet net = make_equivariant_net(action, dec, InvarianceMode::average, rng);
  const MapBox target = analytic_equivariant_target(action, 1);
  const std::vector<Field> train = draw_samples(action, 1, 32, rng);
  const FitResult result = fit(net, target, train, config.demo_steps, 0.05);

  const std::vector<Field> test = draw_samples(action, 1, 32, rng);
  const double equivariance = check_equivariance(net.as_mapbox(), action, action, test);

  Json body;
  body["initial_loss"] = result.loss_trace.front();
  body["final_loss"] = result.best_loss;
  body["steps"] = config.demo_steps;
  body["equivariance_violation"] = equivariance;
  const bool pass =
      result.best_loss <= result.loss_trace.front() && equivariance <= config.tolerance;
  body["pass"] = pass;
  return {body, pass};
}

std::uint64_t suite_salt(const std::string& name) {
  const auto& names = known_suites();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i + 1;
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {"roundtrip", "equivariance", "sortg",
                                                 "repr",      "appendix_c",   "demo"};
  return names;
}

std::vector<std::string> builtin_names() {
  return {"S2", "S3", "S4", "S5", "S6", "S3_pairs", "S4_pairs", "C4_grid2",
          "C4_grid3", "C4_grid4", "Z3", "Z4", "Z5", "Z6", "klein"};
}

GAction builtin_action(const std::string& name) {
  if (name.size() == 2 && name[0] == 'S' && name[1] >= '2' && name[1] <= '6')
    return GAction::natural(FiniteGroup::symmetric(name[1] - '0'));
  if (name == "S3_pairs") return GAction::diagonal_pairs(FiniteGroup::symmetric(3));
  if (name == "S4_pairs") return GAction::diagonal_pairs(FiniteGroup::symmetric(4));
  if (name == "C4_grid2") return GAction::grid_rotation(2);
  if (name == "C4_grid3") return GAction::grid_rotation(3);
  if (name == "C4_grid4") return GAction::grid_rotation(4);
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '2' && name[1] <= '9')
    return GAction::natural(FiniteGroup::cyclic_shift(name[1] - '0'));
  if (name == "klein") return GAction::natural(cayley_embed(klein_table()));
  throw ConfigError("unknown builtin group '" + name + "'");
}

std::string list_builtins() {
  std::ostringstream out;
  out << "built-in groups and actions (points and elements are 0-indexed):\n";
  out << "  S_n natural permutation action          : S2 S3 S4 S5 S6\n";
  out << "  S_n diagonal pairs (i,j)->(s(i),s(j))   : S3_pairs S4_pairs\n";
  out << "  C_4 grid rotation, 90 degrees           : C4_grid2 C4_grid3 C4_grid4\n";
  out << "  Z_n cyclic shift                        : Z3 Z4 Z5 Z6\n";
  out << "  Cayley-embedded multiplication table    : klein, or \"cayley_table\" in config\n";
  return out.str();
}

SuiteConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  SuiteConfig config;

  int sources = 0;
  if (j.contains("builtin")) ++sources;
  if (j.contains("cayley_table")) ++sources;
  if (j.contains("degree")) ++sources;
  if (j.contains("group_file")) ++sources;
  if (sources > 1)
    throw ConfigError("give exactly one of 'builtin', 'cayley_table', 'degree', 'group_file'");
  try {
    if (j.contains("builtin")) {
      config.group_name = j["builtin"].get<std::string>();
      config.action = builtin_action(config.group_name);
    } else if (j.contains("cayley_table")) {
      config.action = GAction::natural(
          cayley_embed(j["cayley_table"].get<std::vector<std::vector<int>>>()));
      config.group_name = "cayley";
    } else if (j.contains("degree")) {
      config.action = action_from_json(j);
      config.group_name = "inline";
    } else if (j.contains("group_file")) {
      const std::string path = j["group_file"].get<std::string>();
      std::ifstream in(path);
      if (!in) throw ConfigError("'group_file' cannot be opened: " + path);
      Json inner;
      in >> inner;
      config.action = action_from_json(inner);
      config.group_name = path;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("bad group spec: ") + e.what());
  }

  if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("sample_count")) {
    config.sample_count = j["sample_count"].get<int>();
    if (config.sample_count < 1) throw ConfigError("'sample_count' must be >= 1");
  }
  if (j.contains("tolerance_float")) {
    config.tolerance = j["tolerance_float"].get<double>();
    if (!(config.tolerance > 0)) throw ConfigError("'tolerance_float' must be > 0");
  }
  if (j.contains("audit_n")) config.audit_n = j["audit_n"].get<int>();
  if (j.contains("demo_steps")) {
    config.demo_steps = j["demo_steps"].get<int>();
    if (config.demo_steps < 0) throw ConfigError("'demo_steps' must be >= 0");
  }

  if (!j.contains("suites")) throw ConfigError("'suites' is required");
  config.suites = j["suites"].get<std::vector<std::string>>();
  if (config.suites.empty()) throw ConfigError("'suites' must not be empty");
  std::set<std::string> seen;
  for (const std::string& name : config.suites) {
    suite_salt(name);  // validates the name
    if (!seen.insert(name).second)
      throw ConfigError("'suites' lists '" + name + "' more than once");
  }
  return config;
}

Json Report::full() const {
  Json out = body;
  out["timing_ms"] = timing;
  return out;
}

Report run(const SuiteConfig& config) {
  if (config.suites.empty()) throw ConfigError("'suites' must not be empty");
  const Rng master(config.seed);
  Json suites_json = Json::object();
  Json timing = Json::object();
  bool all_pass = true;
  for (const std::string& name : config.suites) {
    const Rng rng = master.fork(suite_salt(name));
    const auto start = std::chrono::steady_clock::now();
    std::pair<Json, bool> outcome;
    if (name == "roundtrip") outcome = suite_roundtrip(config, rng);
    else if (name == "equivariance") outcome = suite_equivariance(config, rng);
    else if (name == "sortg") outcome = suite_sortg(config, rng);
    else if (name == "repr") outcome = suite_repr(config, rng);
    else if (name == "appendix_c") outcome = suite_appendix_c(config, rng);
    else if (name == "demo") outcome = suite_demo(config, rng);
    else throw ConfigError("unknown suite '" + name + "'");
    const auto stop = std::chrono::steady_clock::now();
    suites_json[name] = std::move(outcome.first);
    timing[name] =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    all_pass = all_pass && outcome.second;
  }
  Report report;
  report.body["group"] = config.group_name;
  report.body["seed"] = config.seed;
  report.body["suites"] = std::move(suites_json);
  report.body["all_pass"] = all_pass;
  report.timing = std::move(timing);
  report.all_pass = all_pass;
  return report;
}

}  // namespace equi
