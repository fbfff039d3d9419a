#pragma once

#include <string>
#include <utility>

#include "hodge/forward.hpp"
#include "hodge/parameter.hpp"
#include "hodge/shape.hpp"
#include "json.hpp"

namespace cli {

// nlohmann's default map keeps object keys sorted, which the byte-stable
// output contract relies on.
using nlohmann::json;

// Matrices as row arrays of "p/q" literals.
json matrix_to_json(const hodge::MatQ& m);
hodge::MatQ matrix_from_json(const json& j);

// {"prime": int, "blocks": [{"alpha": "p/q", "length": int}...],
//  "weights": [ints strictly decreasing]}
json shape_to_json(const hodge::SemistableShape& sh);
hodge::SemistableShape shape_from_json(const json& j);

// Shape record plus {"matrix": {"i,j": "p/q"}} over strictly-upper
// entries; absent entries read as zero.
json parameter_to_json(const hodge::HodgeParameter& p);
hodge::HodgeParameter parameter_from_json(const json& j);

json bundle_to_json(const hodge::ForwardBundle& b);
hodge::ForwardBundle bundle_from_json(const json& j);

// Self-contained window file: shape record plus {"windows": {"r,q": ...}}.
json extended_to_json(const hodge::SemistableShape& sh,
                      const hodge::ExtendedBundle& b);
std::pair<hodge::SemistableShape, hodge::ExtendedBundle> extended_from_json(
    const json& j);

// Reads and parses a JSON file; all failures become ParseError.
json load_file(const std::string& path);

// dump(2) plus a trailing newline, to the file or to stdout when the path
// is empty.
void write_report(const json& j, const std::string& out_path);

}  // namespace cli
