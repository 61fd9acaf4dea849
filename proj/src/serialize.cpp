#include "equi/serialize.hpp"

#include "equi/errors.hpp"

namespace equi {

Json field_to_json(const Field& f) {
  Json rows = Json::array();
  for (int x = 0; x < f.point_count(); ++x) {
    Json row = Json::array();
    for (int k = 0; k < f.value_dim(); ++k) row.push_back(f.at(x, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Field field_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ConfigError("field must be an array of rows");
  Field f(static_cast<int>(j.size()), static_cast<int>(j[0].size()));
  for (int x = 0; x < f.point_count(); ++x) {
    if (static_cast<int>(j[x].size()) != f.value_dim())
      throw ConfigError("field rows have inconsistent lengths");
    for (int k = 0; k < f.value_dim(); ++k) f.at(x, k) = j[x][k].get<double>();
  }
  return f;
}

Json mlp_to_json(const Mlp& net) {
  Json j;
  Json dims = Json::array();
  if (!net.layers().empty()) dims.push_back(net.layers().front().in_dim);
  for (const MlpLayer& layer : net.layers()) dims.push_back(layer.out_dim);
  j["dims"] = std::move(dims);
  Json weights = Json::array(), biases = Json::array();
  for (const MlpLayer& layer : net.layers()) {
    weights.push_back(layer.weights);
    biases.push_back(layer.bias);
  }
  j["weights"] = std::move(weights);
  j["biases"] = std::move(biases);
  return j;
}

Mlp mlp_from_json(const Json& j) {
  if (!j.contains("dims") || !j.contains("weights") || !j.contains("biases"))
    throw ConfigError("network json needs dims, weights, biases");
  const std::vector<int> dims = j["dims"].get<std::vector<int>>();
  if (dims.size() < 2) throw ConfigError("network needs at least two dims");
  std::vector<MlpLayer> layers;
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    MlpLayer layer;
    layer.in_dim = dims[l];
    layer.out_dim = dims[l + 1];
    layer.weights = j["weights"][l].get<std::vector<double>>();
    layer.bias = j["biases"][l].get<std::vector<double>>();
    layers.push_back(std::move(layer));
  }
  return Mlp(std::move(layers));
}

Json invariant_net_to_json(const InvariantNet& net) {
  Json j = mlp_to_json(net.base);
  j["mode"] = net.mode == InvarianceMode::average ? "average" : "sortg";
  if (net.mode == InvarianceMode::sortg) j["blocks"] = net.sort_layer->blocks;
  return j;
}

Json audit_report_to_json(const AppendixCReport& report) {
  Json j;
  j["n"] = report.n;
  j["first_layer_dim"] = report.first_layer_dim;
  j["bias_dim"] = report.bias_dim;
  j["hidden_dim"] = report.hidden_dim;
  j["hidden_bound"] = report.hidden_bound;
  j["eq22_identity"] = report.eq22_identity;
  return j;
}

GAction action_from_json(const Json& j) {
  if (!j.contains("degree")) throw ConfigError("group json needs 'degree'");
  const int degree = j["degree"].get<int>();
  std::vector<Permutation> generators;
  if (j.contains("generators"))
    for (const Json& g : j["generators"]) {
      try {
        generators.push_back(Permutation(g.get<std::vector<int>>()));
      } catch (const InvalidPermutation& e) {
        throw ConfigError(std::string("bad entry in 'generators': ") + e.what());
      }
    }
  FiniteGroup group = FiniteGroup::from_generators(degree, generators);

  std::string kind = "natural";
  Json action_obj;
  if (j.contains("action")) {
    action_obj = j["action"];
    if (action_obj.contains("kind")) kind = action_obj["kind"].get<std::string>();
  }
  if (kind == "natural") return GAction::natural(std::move(group));
  if (kind == "grid_rotation") {
    int side = 0;
    while ((side + 1) * (side + 1) <= degree) ++side;
    if (side * side != degree)
      throw ConfigError("'grid_rotation' needs a square degree (side*side cells)");
    if (j.contains("generators") && !j["generators"].empty())
      return GAction::natural(std::move(group));
    return GAction::grid_rotation(side);
  }
  if (kind == "diagonal_pairs") return GAction::diagonal_pairs(std::move(group));
  if (kind == "table") {
    if (!action_obj.contains("points") || !action_obj.contains("table"))
      throw ConfigError("'table' action needs 'points' and 'table'");
    return GAction(std::move(group), action_obj["points"].get<int>(),
                   action_obj["table"].get<std::vector<std::vector<int>>>());
  }
  throw ConfigError("unknown action 'kind': " + kind);
}

}  // namespace equi
