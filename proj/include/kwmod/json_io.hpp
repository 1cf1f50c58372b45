#ifndef KWMOD_JSON_IO_HPP
#define KWMOD_JSON_IO_HPP

#include <json.hpp>

#include "kwmod/sweep.hpp"

namespace kwmod {

/// JSON shapes are versioned with "schema": 1 and are the machine contract
/// next to the exit codes.
nlohmann::json to_json(const SuperMatrix& x);
nlohmann::json to_json(const ExponentDim& b);
nlohmann::json to_json(const VerificationReport& rep);
nlohmann::json to_json(const SweepResult& result);

} // namespace kwmod

#endif
