#include "wwtpp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wwtpp/errors.hpp"

namespace wwtpp {

namespace {

using json = nlohmann::ordered_json;

void require_known_fields(const json& obj, std::initializer_list<const char*> allowed,
                          const char* where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) { known = true; break; }
    }
    if (!known)
      throw ParseError(std::string(where) + ": unknown field \"" + key + "\"");
  }
}

const json& require_field(const json& obj, const char* name, const char* where) {
  auto it = obj.find(name);
  if (it == obj.end())
    throw ParseError(std::string(where) + ": missing field \"" + name + "\"");
  return *it;
}

std::int64_t as_int(const json& value, const char* where) {
  if (!value.is_number_integer())
    throw ParseError(std::string(where) + ": integer required");
  return value.get<std::int64_t>();
}

int as_period(const json& value, const char* where) {
  const std::int64_t v = as_int(value, where);
  if (v < INT32_MIN || v > INT32_MAX)
    throw ParseError(std::string(where) + ": period out of range");
  return static_cast<int>(v);
}

json parse_document(std::string_view text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw ParseError(std::string(what) + ": malformed JSON");
  if (!doc.is_object())
    throw ParseError(std::string(what) + ": top-level object required");
  return doc;
}

}  // namespace

Instance read_instance(std::string_view text) {
  const json doc = parse_document(text, "instance");
  require_known_fields(doc, {"plant_capacity", "periods", "industries"}, "instance");

  Instance instance;
  instance.plant_capacity = as_int(require_field(doc, "plant_capacity", "instance"),
                                   "plant_capacity");
  instance.periods = as_period(require_field(doc, "periods", "instance"), "periods");

  const json& industries = require_field(doc, "industries", "instance");
  if (!industries.is_array()) throw ParseError("industries: array required");
  for (const json& ind_doc : industries) {
    if (!ind_doc.is_object()) throw ParseError("industry: object required");
    require_known_fields(ind_doc, {"id", "tank_capacity", "tank_flow", "discharges"},
                         "industry");
    Industry ind;
    const json& id = require_field(ind_doc, "id", "industry");
    if (!id.is_string()) throw ParseError("industry id: string required");
    ind.id = id.get<std::string>();
    ind.tank_capacity = as_int(require_field(ind_doc, "tank_capacity", "industry"),
                               "tank_capacity");
    ind.tank_flow = as_int(require_field(ind_doc, "tank_flow", "industry"), "tank_flow");

    const json& discharges = require_field(ind_doc, "discharges", "industry");
    if (!discharges.is_array()) throw ParseError("discharges: array required");
    for (const json& d_doc : discharges) {
      if (!d_doc.is_object()) throw ParseError("discharge: object required");
      require_known_fields(d_doc, {"start", "end", "flow"}, "discharge");
      Discharge d;
      d.start = as_period(require_field(d_doc, "start", "discharge"), "start");
      d.end = as_period(require_field(d_doc, "end", "discharge"), "end");
      d.flow = as_int(require_field(d_doc, "flow", "discharge"), "flow");
      ind.discharges.push_back(d);
    }
    instance.industries.push_back(std::move(ind));
  }

  const ValidationResult validation = validate_instance(instance);
  if (!validation.ok())
    throw ParseError("instance failed validation:\n" + validation.to_text());
  return instance;
}

std::string write_instance(const Instance& instance) {
  json doc;
  doc["plant_capacity"] = instance.plant_capacity;
  doc["periods"] = instance.periods;
  json industries = json::array();
  for (const Industry& ind : instance.industries) {
    json ind_doc;
    ind_doc["id"] = ind.id;
    ind_doc["tank_capacity"] = ind.tank_capacity;
    ind_doc["tank_flow"] = ind.tank_flow;
    json discharges = json::array();
    for (const Discharge& d : ind.discharges) {
      discharges.push_back({{"start", d.start}, {"end", d.end}, {"flow", d.flow}});
    }
    ind_doc["discharges"] = std::move(discharges);
    industries.push_back(std::move(ind_doc));
  }
  doc["industries"] = std::move(industries);
  return doc.dump(2) + "\n";
}

namespace {

IntGrid read_grid(const json& value, const char* name) {
  if (!value.is_array()) throw ParseError(std::string(name) + ": array required");
  const int rows = static_cast<int>(value.size());
  int cols = 0;
  if (rows > 0) {
    if (!value[0].is_array())
      throw ParseError(std::string(name) + ": array of arrays required");
    cols = static_cast<int>(value[0].size());
  }
  IntGrid grid(rows, cols, 0);
  for (int i = 0; i < rows; ++i) {
    const json& row = value[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(std::string(name) + ": ragged rows");
    for (int j = 0; j < cols; ++j)
      grid(i, j) = as_int(row[static_cast<std::size_t>(j)], name);
  }
  return grid;
}

json dump_grid(const IntGrid& grid) {
  json rows = json::array();
  for (int i = 0; i < grid.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < grid.cols(); ++j) row.push_back(grid(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Solution read_solution(std::string_view text) {
  const json doc = parse_document(text, "solution");
  require_known_fields(doc, {"reroute", "bout", "buf"}, "solution");

  Solution solution;
  const json& reroute = require_field(doc, "reroute", "solution");
  if (!reroute.is_array()) throw ParseError("reroute: array required");
  for (const json& flag : reroute) {
    if (!flag.is_boolean()) throw ParseError("reroute: boolean required");
    solution.reroute.push_back(flag.get<bool>());
  }
  solution.bout = read_grid(require_field(doc, "bout", "solution"), "bout");
  solution.buf = read_grid(require_field(doc, "buf", "solution"), "buf");
  return solution;
}

std::string write_solution(const Solution& solution) {
  json doc;
  json reroute = json::array();
  for (bool flag : solution.reroute) reroute.push_back(flag);
  doc["reroute"] = std::move(reroute);
  doc["bout"] = dump_grid(solution.bout);
  doc["buf"] = dump_grid(solution.buf);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Instance load_instance(const std::filesystem::path& path) {
  return read_instance(read_file(path));
}

Solution load_solution(const std::filesystem::path& path) {
  return read_solution(read_file(path));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ParseError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace wwtpp
