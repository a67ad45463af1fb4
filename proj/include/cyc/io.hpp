#pragma once

#include <string>

#include "json.hpp"

#include "cyc/complex.hpp"

namespace cyc {

using json = nlohmann::json;

// bad input; pointer names the offending field
struct schema_error : std::invalid_argument {
    std::string pointer;
    schema_error(std::string ptr, const std::string& msg) : std::invalid_argument(msg), pointer(std::move(ptr)) {}
};

json ring_to_json(const RingPtr& R);
RingPtr ring_from_json(const json& j, const std::string& at = "/ring");
json scalar_to_json(const Ring& R, Elt a);
Elt scalar_from_json(const Ring& R, const json& j, const std::string& at);

// free complex, diff matrices with rows = target
Cx complex_from_json(const json& j);
json complex_to_json(const Cx& E);
// subquotient complex: canonical generators with their orders p^e
json sq_complex_to_json(const Cx& E);
json homology_to_json(const Cx& E);

}  // namespace cyc
