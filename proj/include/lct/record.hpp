#ifndef LCT_RECORD_HPP
#define LCT_RECORD_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lct/gconfig.hpp"

namespace lct {

/// Raised when a record is syntactically fine but does not describe a valid
/// configuration; carries one message per violation.
class RecordError : public std::runtime_error {
 public:
  RecordError(const std::string& what, std::vector<std::string> violations)
      : std::runtime_error(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// JSON transport form: {"n": N, "tree_edges": [[p,c],...], "arcs":
/// [[s,t],...]}; root implicitly 1. Serialization sorts edges by child and
/// arcs by source and is byte-stable.
std::string record_serialize(const GConfiguration& config);

/// Throws ParseError on malformed JSON, RecordError on invalid content.
GConfiguration record_parse(const std::string& json_text);

/// Graphviz DOT export: tree edges undirected (dir=none), arcs directed and
/// blue, root drawn distinct.
std::string export_dot(const GConfiguration& config);

}  // namespace lct

#endif
