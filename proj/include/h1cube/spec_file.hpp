#pragma once

#include <string>

#include "h1cube/group_build.hpp"

namespace h1cube {

/// Parses the key-value group spec format (see docs/formats.md). Errors cite
/// the offending line and field.
GroupSpec parse_group_spec(const std::string& text);

GroupSpec load_group_spec_file(const std::string& path);

}  // namespace h1cube
