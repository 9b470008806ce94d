#pragma once

#include <string>
#include <string_view>

#include "cspace/core.hpp"

namespace cspace {

/// On-disk encodings of a colored space.
///
/// Text (".cspace"): first line `n c`, then for i = 0..n-2 one line with the
/// colors of pairs (i, i+1) .. (i, n-1). `#` starts a comment running to the
/// end of the line; blank lines are ignored.
///
/// JSON: {"n":6,"colors":2,"pairs":[[0,1,0],...]}.
enum class Format { Text, Json };

/// Throws Error(SyntaxError) with a line number, or any validation error from
/// ColoredSpace::create.
ColoredSpace parse_space(std::string_view bytes, Format format);

std::string serialize_space(const ColoredSpace& space, Format format);

/// Guesses the encoding from the first non-blank character.
Format detect_format(std::string_view bytes);

/// Reads consecutive text records (as written by the enumerator) from one
/// stream. Lines starting with `key ` are skipped.
std::vector<ColoredSpace> parse_space_stream(std::string_view bytes);

}  // namespace cspace
