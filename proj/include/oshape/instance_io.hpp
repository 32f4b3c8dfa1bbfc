#pragma once

#include <optional>
#include <string>

#include "oshape/shape.hpp"

namespace oshape {

// One instance per line, explicit key=value fields, e.g.
//   family=O m=5 n=3 k=3 l=1 a=1 b=1 c=1 d=1 s=[2,1] t=[4,1]
// Rectangles use family=R with m,n; L adds k,l; C adds k,l,c,d.
struct InstanceDoc {
    ShapeSpec spec;
    GridPoint s, t;
};

struct ParseError {
    std::string message;  // includes the offending field
};

// Returns the parsed document or an error; never throws on bad input.
std::optional<InstanceDoc> parse_instance_line(const std::string& line,
                                               ParseError* err = nullptr);
std::string serialize_instance(const InstanceDoc& doc);

}  // namespace oshape
