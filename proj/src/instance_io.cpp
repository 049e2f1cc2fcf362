#include "resilmax/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "resilmax/errors.hpp"

namespace resilmax {

namespace {

using json = nlohmann::ordered_json;

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

double require_number(const json& j, const char* what) {
  if (!j.is_number()) {
    throw ParseError(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

std::vector<double> require_number_array(const json& j, const char* what) {
  if (!j.is_array()) {
    throw ParseError(std::string(what) + " must be an array");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(require_number(v, what));
  return out;
}

std::vector<int> require_int_array(const json& j, const char* what) {
  if (!j.is_array()) {
    throw ParseError(std::string(what) + " must be an array");
  }
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(require_int(v, what));
  return out;
}

std::string require_string(const json& j, const char* what) {
  if (!j.is_string()) {
    throw ParseError(std::string(what) + " must be a string");
  }
  return j.get<std::string>();
}

Objective::Family parse_objective(const json& j) {
  const std::string type = require_string(require_field(j, "type"), "objective.type");
  if (type == "weighted_coverage") {
    WeightedCoverage wc;
    wc.item_weights =
        require_number_array(require_field(j, "item_weights"), "item_weights");
    const json& covers = require_field(j, "covers");
    if (!covers.is_array()) throw ParseError("covers must be an array");
    for (const auto& c : covers) {
      wc.covers.push_back(require_int_array(c, "covers entry"));
    }
    return wc;
  }
  if (type == "facility_location") {
    FacilityLocation fl;
    const json& values = require_field(j, "values");
    if (!values.is_array()) throw ParseError("values must be an array");
    for (const auto& row : values) {
      fl.value_matrix.push_back(require_number_array(row, "values row"));
    }
    return fl;
  }
  if (type == "modular") {
    Modular m;
    m.weights = require_number_array(require_field(j, "weights"), "weights");
    return m;
  }
  if (type == "explicit") {
    ExplicitTable t;
    t.values = require_number_array(require_field(j, "values"), "values");
    return t;
  }
  throw ParseError("unknown objective type \"" + type + "\"");
}

Matroid::Kind parse_matroid(const json& j) {
  const std::string type = require_string(require_field(j, "type"), "matroid.type");
  if (type == "uniform") {
    return UniformMatroid{require_int(require_field(j, "rank"), "rank")};
  }
  if (type == "partition") {
    PartitionMatroid pm;
    const json& blocks = require_field(j, "blocks");
    if (!blocks.is_array()) throw ParseError("blocks must be an array");
    for (const auto& b : blocks) {
      pm.blocks.push_back(
          ElementSet::from_unsorted(require_int_array(b, "block entry")));
    }
    pm.capacities =
        require_int_array(require_field(j, "capacities"), "capacities");
    return pm;
  }
  throw ParseError("unknown matroid type \"" + type + "\"");
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");

  const int n = require_int(require_field(j, "n"), "n");

  Objective::Family family = parse_objective(require_field(j, "objective"));
  if (auto* t = std::get_if<ExplicitTable>(&family)) {
    if (n < 0 || n >= 31 ||
        t->values.size() != (std::size_t{1} << (n < 0 ? 0 : n))) {
      throw ParseError("explicit table must list 2^n values");
    }
    t->n = n;
  }

  GroundSet ground;
  ground.n = n;
  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    if (!labels.is_array()) throw ParseError("labels must be an array");
    for (const auto& l : labels) {
      ground.labels.push_back(require_string(l, "label"));
    }
  }

  Objective objective(std::move(family), /*enable_cache=*/true);
  if (objective.ground_size() != n) {
    throw ParseError("objective is sized for " +
                     std::to_string(objective.ground_size()) +
                     " elements, \"n\" says " + std::to_string(n));
  }

  Matroid matroid(parse_matroid(require_field(j, "matroid")), n);
  const int alpha = require_int(require_field(j, "alpha"), "alpha");

  Instance inst(std::move(ground), std::move(objective), std::move(matroid),
                alpha);

  if (std::holds_alternative<ExplicitTable>(inst.objective.family())) {
    if (!check_normalized(inst.objective)) {
      throw ParseError("explicit table is not normalized: f({}) != 0");
    }
    if (!check_monotone(inst.objective, inst.ground)) {
      throw ParseError("explicit table is not monotone");
    }
    if (!check_submodular(inst.objective, inst.ground)) {
      throw ParseError("explicit table is not submodular");
    }
  }
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  json j;
  j["n"] = inst.ground.n;

  json obj;
  std::visit(
      [&obj](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, WeightedCoverage>) {
          obj["type"] = "weighted_coverage";
          obj["item_weights"] = fam.item_weights;
          obj["covers"] = fam.covers;
        } else if constexpr (std::is_same_v<T, FacilityLocation>) {
          obj["type"] = "facility_location";
          obj["values"] = fam.value_matrix;
        } else if constexpr (std::is_same_v<T, Modular>) {
          obj["type"] = "modular";
          obj["weights"] = fam.weights;
        } else {
          obj["type"] = "explicit";
          obj["values"] = fam.values;
        }
      },
      inst.objective.family());
  j["objective"] = std::move(obj);

  json mat;
  std::visit(
      [&mat](const auto& kind) {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, UniformMatroid>) {
          mat["type"] = "uniform";
          mat["rank"] = kind.rank;
        } else {
          mat["type"] = "partition";
          json blocks = json::array();
          for (const ElementSet& b : kind.blocks) blocks.push_back(b.ids());
          mat["blocks"] = std::move(blocks);
          mat["capacities"] = kind.capacities;
        }
      },
      inst.matroid.kind());
  j["matroid"] = std::move(mat);

  j["alpha"] = inst.alpha;
  if (!inst.ground.labels.empty()) j["labels"] = inst.ground.labels;
  return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << instance_to_json(inst);
}

}  // namespace resilmax
