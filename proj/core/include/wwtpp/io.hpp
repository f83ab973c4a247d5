#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wwtpp/model.hpp"

namespace wwtpp {

// Canonical instance format: a JSON document with exactly the fields
// plant_capacity, periods and industries; each industry has id,
// tank_capacity, tank_flow and discharges ({start, end, flow}).
// Parsing is strict: unknown fields and non-integer numbers are errors, and
// the result must pass validate_instance.
Instance read_instance(std::string_view text);
std::string write_instance(const Instance& instance);

// Solution format: reroute (array of booleans, discharge order as in
// flatten_discharges), bout and buf (k arrays of m integers each).
Solution read_solution(std::string_view text);
std::string write_solution(const Solution& solution);

Instance load_instance(const std::filesystem::path& path);
Solution load_solution(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

// Writes to a temporary sibling and renames, so interrupted runs never leave
// a truncated file behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace wwtpp
