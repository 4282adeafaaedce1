#ifndef SYMMOM_FIXTURES_HPP
#define SYMMOM_FIXTURES_HPP

#include <string>
#include <vector>

#include "symmom/newform.hpp"

namespace symmom {

enum class Source { fixture, remote };

// Parse a JSON payload (array of form objects, or a single object) in the
// fixture schema:
//   {"label": str, "level": int, "weight": 2, "ap": {"2": a2, ...},
//    "p_max": int, "lpoint_half": optional}
// Eigenvalues are arithmetically normalised a_p and are divided by sqrt(p)
// on ingestion.  Ramanujan violations abort with a domain_error.
std::vector<Newform> parse_newforms(const std::string& json_text);

// Load every form of the given level.
//  - fixture: reads <location>/newforms_<level>.json (location defaults to
//    "data/fixtures").
//  - remote: GET <base>/newforms/<level>.json where <base> comes from
//    `location`, or SYMMOM_DB_BASE; the raw payload is cached verbatim in
//    SYMMOM_CACHE before normalisation.
std::vector<Newform> fetch_newforms(std::int64_t level, Source source, const std::string& location = "");

}  // namespace symmom

#endif  // SYMMOM_FIXTURES_HPP
