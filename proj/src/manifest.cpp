#include "nbnc/manifest.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "nbnc/error.hpp"

namespace nbnc {

std::vector<ManifestEntry> parse_manifest(std::istream& in,
                                          const std::filesystem::path& base_dir) {
  std::vector<ManifestEntry> entries;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream fields(text);
    std::string name, path, count;
    if (!(fields >> name) || name.front() == '#') continue;
    if (!(fields >> path >> count)) {
      throw ParseError(line, "expected 'name path expected_nodes'");
    }
    std::string extra;
    if (fields >> extra) throw ParseError(line, "unexpected trailing field '" + extra + "'");

    ManifestEntry e;
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), e.expected_nodes);
    if (ec != std::errc{} || ptr != count.data() + count.size()) {
      throw ParseError(line, "expected_nodes must be a nonnegative integer, got '" + count + "'");
    }
    e.name = std::move(name);
    e.path = std::filesystem::path(path).is_absolute() ? std::filesystem::path(path)
                                                       : base_dir / path;
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open manifest");
  return parse_manifest(in, path.parent_path());
}

std::vector<Network> load_networks(std::span<const ManifestEntry> entries,
                                   std::vector<std::string>& warnings) {
  std::vector<Network> networks;
  networks.reserve(entries.size());
  for (const auto& e : entries) {
    Graph g;
    try {
      g = read_edge_list(e.path, e.name);
    } catch (const Error& ex) {
      throw DataError("network '" + e.name + "': " + ex.what());
    }
    if (g.node_count() != e.expected_nodes) {
      warnings.push_back("network '" + e.name + "' has " + std::to_string(g.node_count()) +
                         " nodes, manifest expects " + std::to_string(e.expected_nodes));
    }
    networks.push_back({e.name, std::move(g)});
  }
  return networks;
}

std::span<const ReferenceNetwork> reference_networks() {
  static constexpr std::array<ReferenceNetwork, 10> kNetworks{{
      {"Net-1", "Taro Exchange Network", 22},
      {"Net-2", "Sawmill Strikers Network", 24},
      {"Net-3", "Karate Network", 34},
      {"Net-4", "Teenage Women Friends Network", 50},
      {"Net-5", "Lazega Law Firm Network", 71},
      {"Net-6", "Copperfield Network", 87},
      {"Net-7", "US Football 2000 Network", 105},
      {"Net-8", "Anna Karenina Network", 138},
      {"Net-9", "Jazz Band Network", 198},
      {"Net-10", "CKM Physicians Network", 246},
  }};
  return kNetworks;
}

}  // namespace nbnc
