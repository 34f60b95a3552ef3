#pragma once

// JSON reading and writing for monoids, point sets, labelled graphs and
// the on-disk witness library.
//
// Monoid JSON is either a table
//   {"order": n, "identity": i, "table": [[...], ...], "generators": {"a": 3, ...}}
// or a transformation presentation
//   {"points": k, "generators": {"a": [0, 0], ...}}.
// Generator order is the order of the keys in the file.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "aplike/inevitability.hpp"
#include "aplike/library.hpp"
#include "aplike/monoid.hpp"

namespace aplike {

  using Json = nlohmann::ordered_json;

  //! Throws InvalidInput naming the offending field, or the validation
  //! errors of Monoid.
  Monoid monoid_from_json(Json const& json);
  //! Always the table form.
  Json monoid_to_json(Monoid const& M);

  //! Parses `text` as JSON, or, when it does not look like JSON, reads the
  //! file it names.
  Json parse_json_or_file(std::string const& text, std::string const& field);
  Json read_json_file(std::filesystem::path const& path);
  Monoid load_monoid(std::filesystem::path const& path);

  //! A sorted array of element ids.
  Json to_json(PointSet const& Z);
  PointSet point_set_from_json(Json const& json, Monoid const& M, std::string const& field);

  //! {"vertices": [...], "edges": [{"src": .., "dst": ..}], "labels": {"v0": [..], "e0": [..]}}
  //! Vertices are named by the strings in "vertices" (numbers n read as "v<n>");
  //! edge ends may be given by name or by position.
  LabelledGraph graph_from_json(Json const& json, Monoid const& M);
  Json          graph_to_json(LabelledGraph const& graph);

  //! One <name>.json per monoid plus index.json listing name, file, order
  //! and aperiodicity in library order.
  void write_library(std::filesystem::path const& dir, std::vector<LibraryMonoid> const& library);
  std::vector<LibraryMonoid> read_library(std::filesystem::path const& dir);

}  // namespace aplike
