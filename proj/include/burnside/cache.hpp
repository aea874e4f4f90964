#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "burnside/marks.hpp"

namespace burnside {

inline constexpr std::string_view kCacheVersion = "burnside-marks-1";

/// Degree followed by the sorted generator image arrays. Two groups with the
/// same fingerprint have the same generators.
std::string fingerprint(const PermGroup& g);

std::uint64_t fnv1a(std::string_view data);

/// Directory of marks tables, one JSON file per group keyed by the FNV-1a
/// hash of its fingerprint. Entries with another version tag or fingerprint
/// are ignored, so a hash collision or a stale file only costs a recompute.
class MarksCache {
public:
  explicit MarksCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const PermGroup& g) const;

  /// nullopt on a miss, a stale entry or an unreadable file.
  std::optional<MarksTable> load(const PermGroup& g) const;
  /// Writes a temporary file and renames it into place.
  void store(const PermGroup& g, const MarksTable& t) const;

private:
  std::filesystem::path dir_;
};

/// Loads the table from `cache` when present, otherwise computes and stores
/// it, ignoring write failures. A null cache always computes.
MarksTable cached_marks(const PermGroup& g, const MarksCache* cache);

}  // namespace burnside
