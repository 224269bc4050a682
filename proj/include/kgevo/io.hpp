#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace kgevo {

/// Read a whole file; paths ending in `.gz` are transparently decompressed.
std::string read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view data);

/// Seconds since the Unix epoch for an ISO-8601 UTC instant such as
/// `2015-04-01T12:00:00Z`. Fractional seconds are accepted and truncated.
std::int64_t parse_iso8601_utc(const std::string& text);

std::string format_iso8601_utc(std::int64_t epoch_seconds);

}  // namespace kgevo
