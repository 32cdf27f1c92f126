#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tridisc/disc.hpp"

namespace tridisc {

/// ".tri" text format, version 1:
///
///     tri 1
///     t <a> <b> <c>
///     ...
///
/// One counterclockwise face per line. Blank lines and lines starting with
/// '#' are ignored on input. Output lists faces in canonical order (each
/// triple rotated to start at its smallest id, then sorted), so a disc
/// always serializes to the same bytes.
std::vector<Triangle> parse_tri(std::string_view text);
CombinatorialDisc read_tri(std::string_view text);
CombinatorialDisc read_tri_file(const std::filesystem::path& path);

std::string write_tri(const CombinatorialDisc& disc);
void write_tri_file(const CombinatorialDisc& disc, const std::filesystem::path& path);

}  // namespace tridisc
