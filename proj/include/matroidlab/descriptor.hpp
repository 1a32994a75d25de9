#ifndef MATROIDLAB_DESCRIPTOR_HPP
#define MATROIDLAB_DESCRIPTOR_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

/// Raised on malformed instance files; `where` is a JSON-pointer-style path
/// to the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct GraphInstance {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;
};

/// Builds a matroid from a descriptor value. Unknown types and unknown or
/// missing fields are rejected with the offending path.
Matroid matroid_from_descriptor(const json& j, const std::string& path = "$");

/// Parses `{"vertices":[...],"edges":[["id","u","v"],...]}`.
GraphInstance graph_from_json(const json& j, const std::string& path = "$");

Matroid graphic_from_instance(const GraphInstance& g);

/// Reads and validates a JSON file (throws SchemaError on parse failure).
json load_json_file(const std::string& filepath);

}  // namespace matroidlab

#endif
