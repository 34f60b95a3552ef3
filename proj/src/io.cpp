#include "aplike/io.hpp"

#include <fstream>
#include <sstream>

#include "aplike/error.hpp"

namespace aplike {

  namespace {

    [[noreturn]] void bad(std::string const& field, std::string const& message) {
      throw Error(ErrorCode::InvalidInput, "field '" + field + "': " + message);
    }

    Json const& need(Json const& json, char const* key) {
      if (!json.is_object() || !json.contains(key)) {
        bad(key, "missing");
      }
      return json.at(key);
    }

    std::size_t as_count(Json const& json, std::string const& field) {
      if (!json.is_number_unsigned()) {
        bad(field, "expected a non-negative integer");
      }
      return json.get<std::size_t>();
    }

    element_id as_id(Json const& json, std::string const& field) {
      auto const value = as_count(json, field);
      if (value > std::numeric_limits<element_id>::max()) {
        bad(field, "element id too large");
      }
      return static_cast<element_id>(value);
    }

    std::string file_safe(std::string name) {
      for (auto& c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-' && c != '_') {
          c = '_';
        }
      }
      return name;
    }

  }  // namespace

  Monoid monoid_from_json(Json const& json) {
    if (!json.is_object()) {
      bad("monoid", "expected an object");
    }
    auto const& gens = need(json, "generators");
    if (!gens.is_object()) {
      bad("generators", "expected an object mapping letters to elements");
    }
    if (json.contains("points")) {
      auto const points = as_count(json.at("points"), "points");
      std::vector<std::pair<std::string, std::vector<element_id>>> maps;
      for (auto const& [letter, image] : gens.items()) {
        auto const field = "generators." + letter;
        if (!image.is_array()) {
          bad(field, "expected an array of images");
        }
        std::vector<element_id> map;
        for (auto const& x : image) {
          map.push_back(as_id(x, field));
        }
        maps.emplace_back(letter, std::move(map));
      }
      return Monoid::from_transformations(points, maps);
    }
    auto const  order = as_count(need(json, "order"), "order");
    auto const& table = need(json, "table");
    if (!table.is_array()) {
      bad("table", "expected an array of rows");
    }
    std::vector<std::vector<element_id>> rows;
    for (std::size_t r = 0; r < table.size(); ++r) {
      auto const field = "table[" + std::to_string(r) + "]";
      if (!table[r].is_array()) {
        bad(field, "expected an array");
      }
      std::vector<element_id> row;
      for (auto const& x : table[r]) {
        row.push_back(as_id(x, field));
      }
      rows.push_back(std::move(row));
    }
    auto const identity = as_id(need(json, "identity"), "identity");
    std::vector<Generator> generators;
    for (auto const& [letter, element] : gens.items()) {
      generators.push_back({letter, as_id(element, "generators." + letter)});
    }
    return Monoid::from_table(order, rows, identity, std::move(generators));
  }

  Json monoid_to_json(Monoid const& M) {
    Json json;
    json["order"]    = M.order();
    json["identity"] = M.identity();
    Json table       = Json::array();
    for (element_id a = 0; a < M.order(); ++a) {
      auto row = M.row(a);
      table.push_back(std::vector<element_id>(row.begin(), row.end()));
    }
    json["table"] = std::move(table);
    Json gens     = Json::object();
    for (auto const& g : M.generators()) {
      gens[g.letter] = g.element;
    }
    json["generators"] = std::move(gens);
    return json;
  }

  Json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::InvalidInput, "cannot read '" + path.string() + "'");
    }
    try {
      return Json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      throw Error(ErrorCode::InvalidInput, "'" + path.string() + "' is not valid JSON: " + e.what());
    }
  }

  Json parse_json_or_file(std::string const& text, std::string const& field) {
    auto const start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos
        && (text[start] == '{' || text[start] == '[' || std::isdigit(static_cast<unsigned char>(text[start])))) {
      try {
        return Json::parse(text);
      } catch (nlohmann::json::exception const& e) {
        bad(field, std::string("invalid JSON: ") + e.what());
      }
    }
    return read_json_file(text);
  }

  Monoid load_monoid(std::filesystem::path const& path) {
    return monoid_from_json(read_json_file(path));
  }

  Json to_json(PointSet const& Z) {
    return Z.elements();
  }

  PointSet point_set_from_json(Json const& json, Monoid const& M, std::string const& field) {
    if (!json.is_array()) {
      bad(field, "expected an array of element ids");
    }
    PointSet Z(M.order());
    for (auto const& x : json) {
      auto const id = as_id(x, field);
      if (id >= M.order()) {
        throw Error(ErrorCode::OutOfRange,
                    "field '" + field + "': element " + std::to_string(id)
                        + " is not below the order " + std::to_string(M.order()));
      }
      Z.insert(id);
    }
    return Z;
  }

  LabelledGraph graph_from_json(Json const& json, Monoid const& M) {
    auto const& vertices = need(json, "vertices");
    if (!vertices.is_array()) {
      bad("vertices", "expected an array");
    }
    std::vector<std::string> names;
    for (auto const& v : vertices) {
      if (v.is_string()) {
        names.push_back(v.get<std::string>());
      } else if (v.is_number_unsigned()) {
        names.push_back("v" + std::to_string(v.get<std::size_t>()));
      } else {
        bad("vertices", "expected names or numbers");
      }
    }
    auto vertex_index = [&](Json const& ref, std::string const& field) -> std::size_t {
      std::string name;
      if (ref.is_string()) {
        name = ref.get<std::string>();
      } else if (ref.is_number_unsigned()) {
        name = "v" + std::to_string(ref.get<std::size_t>());
        auto const k = ref.get<std::size_t>();
        if (std::find(names.begin(), names.end(), name) == names.end() && k < names.size()) {
          return k;
        }
      } else {
        bad(field, "expected a vertex name or index");
      }
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        bad(field, "unknown vertex '" + name + "'");
      }
      return static_cast<std::size_t>(it - names.begin());
    };
    Json const empty  = Json::object();
    auto const& labels = json.contains("labels") ? json.at("labels") : empty;
    LabelledGraph graph;
    for (auto const& name : names) {
      if (!labels.contains(name)) {
        bad("labels." + name, "missing");
      }
      graph.vertex_labels.push_back(point_set_from_json(labels.at(name), M, "labels." + name));
    }
    if (json.contains("edges")) {
      auto const& edges = json.at("edges");
      if (!edges.is_array()) {
        bad("edges", "expected an array");
      }
      for (std::size_t e = 0; e < edges.size(); ++e) {
        auto const field = "edges[" + std::to_string(e) + "]";
        auto const key   = "e" + std::to_string(e);
        if (!edges[e].is_object()) {
          bad(field, "expected an object");
        }
        graph.edges.push_back({vertex_index(need(edges[e], "src"), field + ".src"),
                               vertex_index(need(edges[e], "dst"), field + ".dst")});
        if (edges[e].contains("label")) {
          graph.edge_labels.push_back(point_set_from_json(edges[e].at("label"), M, field + ".label"));
        } else if (labels.contains(key)) {
          graph.edge_labels.push_back(point_set_from_json(labels.at(key), M, "labels." + key));
        } else {
          bad("labels." + key, "missing");
        }
      }
    }
    validate(graph, M);
    return graph;
  }

  Json graph_to_json(LabelledGraph const& graph) {
    Json json;
    Json vertices = Json::array();
    Json labels   = Json::object();
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      auto const name = "v" + std::to_string(v);
      vertices.push_back(name);
      labels[name] = to_json(graph.vertex_labels[v]);
    }
    Json edges = Json::array();
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      edges.push_back({{"src", "v" + std::to_string(graph.edges[e].src)},
                       {"dst", "v" + std::to_string(graph.edges[e].dst)}});
      labels["e" + std::to_string(e)] = to_json(graph.edge_labels[e]);
    }
    json["vertices"] = std::move(vertices);
    json["edges"]    = std::move(edges);
    json["labels"]   = std::move(labels);
    return json;
  }

  void write_library(std::filesystem::path const& dir, std::vector<LibraryMonoid> const& library) {
    std::filesystem::create_directories(dir);
    Json index = Json::array();
    for (auto const& entry : library) {
      auto const file = file_safe(entry.name) + ".json";
      std::ofstream(dir / file) << monoid_to_json(entry.monoid).dump() << '\n';
      index.push_back({{"name", entry.name},
                       {"file", file},
                       {"order", entry.monoid.order()},
                       {"aperiodic", entry.aperiodic}});
    }
    std::ofstream out(dir / "index.json");
    out << index.dump(2) << '\n';
    if (!out) {
      throw Error(ErrorCode::InvalidInput, "cannot write to '" + dir.string() + "'");
    }
  }

  std::vector<LibraryMonoid> read_library(std::filesystem::path const& dir) {
    auto const index = read_json_file(dir / "index.json");
    if (!index.is_array()) {
      bad("index", "expected an array");
    }
    std::vector<LibraryMonoid> result;
    for (auto const& entry : index) {
      auto const name = need(entry, "name").get<std::string>();
      auto const file = need(entry, "file").get<std::string>();
      result.push_back({name, load_monoid(dir / file), need(entry, "aperiodic").get<bool>()});
    }
    return result;
  }

}  // namespace aplike
