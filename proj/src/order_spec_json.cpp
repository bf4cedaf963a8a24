#include <fstream>
#include <sstream>
#include <string>

#include "genuskit/errors.hpp"
#include "genuskit/order_genus.hpp"
#include "json.hpp"

namespace genuskit {

namespace {

using nlohmann::json;

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InvalidArgument("order spec: " + where + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw InvalidArgument("order spec: " + where + " is out of the 64-bit range");
  }
  return j.get<std::int64_t>();
}

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw InvalidArgument(std::string("order spec: missing field \"") + name + "\"");
  return *it;
}

}  // namespace

OrderSpec parse_order_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("order spec: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidArgument("order spec: top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "m" && key != "blocks" && key != "generators") {
      throw InvalidArgument("order spec: unknown field \"" + key + "\"");
    }
  }

  OrderSpec spec;
  spec.level = as_int(field(doc, "m"), "m");
  if (spec.level < 1) throw InvalidArgument("order spec: m must be >= 1");

  const json& blocks = field(doc, "blocks");
  if (!blocks.is_array() || blocks.empty()) {
    throw InvalidArgument("order spec: \"blocks\" must be a non-empty array");
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto r = as_int(blocks[b], "blocks[" + std::to_string(b) + "]");
    if (r < 1 || r > kMaxMatrixSize) {
      throw InvalidArgument("order spec: block sizes must lie in 1.." +
                            std::to_string(kMaxMatrixSize));
    }
    spec.blocks.push_back(static_cast<int>(r));
  }

  const json& gens = field(doc, "generators");
  if (!gens.is_array()) throw InvalidArgument("order spec: \"generators\" must be an array");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = "generators[" + std::to_string(g) + "]";
    if (!gens[g].is_array() || gens[g].size() != spec.blocks.size()) {
      throw InvalidArgument("order spec: " + where + " must hold one matrix per block");
    }
    MatTuple tuple;
    for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
      const json& mat = gens[g][b];
      const int r = spec.blocks[b];
      const std::string mwhere = where + "[" + std::to_string(b) + "]";
      if (!mat.is_array() || mat.size() != static_cast<std::size_t>(r * r)) {
        throw InvalidArgument("order spec: " + mwhere + " must be a row-major list of " +
                              std::to_string(r * r) + " integers");
      }
      std::vector<std::int64_t> entries;
      for (std::size_t t = 0; t < mat.size(); ++t) {
        entries.push_back(as_int(mat[t], mwhere + "[" + std::to_string(t) + "]"));
      }
      tuple.push_back(MatModM::from_row_major(r, spec.level, entries));
    }
    spec.generators.push_back(std::move(tuple));
  }
  return spec;
}

OrderSpec load_order_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read order spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_order_spec(buf.str());
}

std::string dump_order_spec(const OrderSpec& spec) {
  nlohmann::ordered_json doc;
  doc["m"] = spec.level;
  doc["blocks"] = spec.blocks;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& tuple : spec.generators) {
    auto t = nlohmann::ordered_json::array();
    for (const auto& mat : tuple) {
      t.push_back(std::vector<std::int64_t>(mat.entries().begin(), mat.entries().end()));
    }
    gens.push_back(std::move(t));
  }
  doc["generators"] = std::move(gens);
  return doc.dump();
}

}  // namespace genuskit
