#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nbnc/experiment.hpp"

namespace nbnc {

/// One manifest line: `name path expected_nodes`.
struct ManifestEntry {
  std::string name;
  std::filesystem::path path;  // resolved against the manifest's directory
  std::size_t expected_nodes = 0;
};

/// '#' starts a comment line. Relative paths resolve against base_dir.
std::vector<ManifestEntry> parse_manifest(std::istream& in,
                                          const std::filesystem::path& base_dir);
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

/// Loads every entry. A node-count mismatch appends a message to `warnings`
/// and loading continues. Parse and I/O failures are rethrown as DataError
/// prefixed with the network name.
std::vector<Network> load_networks(std::span<const ManifestEntry> entries,
                                   std::vector<std::string>& warnings);

/// Networks of the published evaluation suite with their node counts.
struct ReferenceNetwork {
  std::string_view id;
  std::string_view name;
  std::size_t nodes;
};

std::span<const ReferenceNetwork> reference_networks();

}  // namespace nbnc
