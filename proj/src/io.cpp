#include "cgt/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "cgt/common.hpp"

namespace cgt {

namespace {

u32 get_u32(const ojson& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_unsigned())
    throw InputError(std::string("field '") + field + "' must be a non-negative integer");
  u64 v = j[field].get<u64>();
  if (v > 0xFFFFFFFFull) throw InputError(std::string("field '") + field + "' is out of range");
  return (u32)v;
}

std::vector<u32> residue_row(const ojson& row, u32 p, std::size_t want) {
  if (!row.is_array() || row.size() != want)
    throw InputError("matrix row has the wrong length");
  std::vector<u32> out(want);
  for (std::size_t i = 0; i < want; ++i) {
    if (!row[i].is_number_unsigned() || row[i].get<u64>() >= p)
      throw InputError("matrix entries must be residues in [0, p)");
    out[i] = row[i].get<u32>();
  }
  return out;
}

FpMatrix parse_matrix(const ojson& payload, u32 p, std::size_t dim) {
  if (!payload.is_array() || payload.size() != dim)
    throw InputError("matrix payload must have one row per dimension");
  FpMatrix m(p, dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    std::vector<u32> row = residue_row(payload[r], p, dim);
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = row[c];
  }
  return m;
}

}  // namespace

PGroupPtr load_group_json(const ojson& j, u32 cap) {
  if (!j.is_object()) throw InputError("group document must be a JSON object");
  u32 p = get_u32(j, "p");
  if (!is_prime(p)) throw InputError("p must be prime");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw InputError("field 'kind' must be \"permutation\" or \"matrix\"");
  std::string kind = j["kind"].get<std::string>();
  if (!j.contains("generators") || !j["generators"].is_object() || j["generators"].empty())
    throw InputError("field 'generators' must be a non-empty object");

  std::vector<std::pair<std::string, GroupElement>> gens;
  if (kind == "permutation") {
    u32 degree = get_u32(j, "degree");
    if (degree == 0) throw InputError("degree must be positive");
    for (const auto& item : j["generators"].items()) {
      const ojson& payload = item.value();
      if (!payload.is_array() || payload.size() != degree)
        throw InputError("permutation payload must list one image per point");
      std::vector<u32> img(degree);
      for (u32 i = 0; i < degree; ++i) {
        if (!payload[i].is_number_unsigned() || payload[i].get<u64>() >= degree)
          throw InputError("permutation images must be 0-based points");
        img[i] = payload[i].get<u32>();
      }
      gens.emplace_back(item.key(), GroupElement::perm(std::move(img)));
    }
  } else if (kind == "matrix") {
    u32 dim = get_u32(j, "dim");
    if (dim == 0 || dim > kMaxDim) throw InputError("dim out of range");
    for (const auto& item : j["generators"].items())
      gens.emplace_back(item.key(), GroupElement::mat(parse_matrix(item.value(), p, dim)));
  } else {
    throw InputError("unknown group kind: " + kind);
  }
  return close_group(p, std::move(gens), cap);
}

ojson save_group_json(const PGroupPtr& g) {
  ojson j;
  j["p"] = g->p;
  const char backend = g->elements[0].backend();
  if (backend == 'M') {
    j["kind"] = "matrix";
    const FpMatrix& probe = g->elements[0].as_mat()->m;
    j["dim"] = probe.rows;
    ojson gens = ojson::object();
    for (const auto& gen : g->generators) {
      const FpMatrix& m = g->elements[gen.second].as_mat()->m;
      ojson rows = ojson::array();
      for (std::size_t r = 0; r < m.rows; ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
      }
      gens[gen.first] = std::move(rows);
    }
    j["generators"] = std::move(gens);
    return j;
  }

  // Permutation groups export as-is; pair groups export as the faithful
  // left-translation action on their own element list.
  j["kind"] = "permutation";
  ojson gens = ojson::object();
  if (backend == 'P') {
    j["degree"] = g->elements[0].as_perm()->img.size();
    for (const auto& gen : g->generators) {
      const auto& img = g->elements[gen.second].as_perm()->img;
      gens[gen.first] = img;
    }
  } else {
    const u32 n = g->order();
    j["degree"] = n;
    for (const auto& gen : g->generators) {
      std::vector<u32> img(n);
      for (u32 x = 0; x < n; ++x) img[x] = g->mul(gen.second, x);
      gens[gen.first] = img;
    }
  }
  j["generators"] = std::move(gens);
  return j;
}

FpGModule load_module_json(const ojson& j, const std::string& base_dir, u32 cap) {
  if (!j.is_object()) throw InputError("module document must be a JSON object");
  u32 p = get_u32(j, "p");
  u32 dim = get_u32(j, "dim");
  if (dim == 0 || dim > kMaxDim) throw InputError("dim out of range");
  if (!j.contains("group")) throw InputError("module document needs a 'group'");

  PGroupPtr g;
  if (j["group"].is_string()) {
    std::filesystem::path gp = j["group"].get<std::string>();
    if (gp.is_relative() && !base_dir.empty()) gp = std::filesystem::path(base_dir) / gp;
    g = load_group_file(gp.string(), cap);
  } else {
    g = load_group_json(j["group"], cap);
  }
  if (g->p != p) throw InputError("module p does not match the group's p");

  if (!j.contains("action") || !j["action"].is_object())
    throw InputError("field 'action' must be an object of label -> matrix");
  const ojson& action = j["action"];
  if (action.size() != g->generators.size())
    throw InputError("action must cover exactly the group's generator labels");
  std::vector<FpMatrix> mats;
  mats.reserve(g->generators.size());
  for (const auto& gen : g->generators) {
    if (!action.contains(gen.first))
      throw InputError("action is missing generator label '" + gen.first + "'");
    mats.push_back(parse_matrix(action[gen.first], p, dim));
  }
  return build_module(g, dim, mats);
}

ojson save_module_json(const FpGModule& m) {
  ojson j;
  j["p"] = m.p;
  j["dim"] = m.dim;
  j["group"] = save_group_json(m.group);
  ojson action = ojson::object();
  for (std::size_t i = 0; i < m.group->generators.size(); ++i) {
    const FpMatrix& a = m.gen_action[i];
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < a.rows; ++r) {
      ojson row = ojson::array();
      for (std::size_t c = 0; c < a.cols; ++c) row.push_back(a.at(r, c));
      rows.push_back(std::move(row));
    }
    action[m.group->generators[i].first] = std::move(rows);
  }
  j["action"] = std::move(action);
  return j;
}

PGroupPtr load_group_file(const std::string& path, u32 cap) {
  ojson j;
  try {
    j = ojson::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return load_group_json(j, cap);
}

FpGModule load_module_file(const std::string& path, u32 cap) {
  ojson j;
  try {
    j = ojson::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  std::string dir = std::filesystem::path(path).parent_path().string();
  return load_module_json(j, dir, cap);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace cgt
