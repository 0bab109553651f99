#ifndef WEYL_JSON_IO_HPP
#define WEYL_JSON_IO_HPP

#include <json.hpp>

#include "weyl/rmatrix.hpp"
#include "weyl/star_semigroup.hpp"

namespace weyl {

using Json = nlohmann::ordered_json;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

Json pair_to_json(const WeylPair& p);
WeylPair pair_from_json(const Json& j);

Json matrix_to_json(const RMatrix& m);
RMatrix matrix_from_json(const Json& j);

Json report_to_json(const Report& r);

}  // namespace weyl

#endif
