#pragma once

// Strict instance-file schema: exact field names, unknown fields rejected,
// every violation reported with a JSON-pointer location.

#include <string>

#include "zfr/jsonwriter.hpp"
#include "zfr/lfunction.hpp"

namespace zfr {

LFunctionInstance parse_instance_text(const std::string& text);
LFunctionInstance parse_instance(const std::string& path);

// Inverse of parsing: field names as in the schema; a character built from
// a Kronecker discriminant re-serializes in its kronecker form.
Json instance_to_json(const LFunctionInstance& f);

}  // namespace zfr
