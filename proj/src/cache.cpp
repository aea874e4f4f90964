#include "burnside/cache.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "burnside/error.hpp"

namespace burnside {

namespace fs = std::filesystem;

std::string fingerprint(const PermGroup& g) {
  std::vector<std::vector<int>> gens;
  for (const auto& p : g.generators()) gens.push_back(p.images());
  std::sort(gens.begin(), gens.end());
  std::ostringstream out;
  out << g.degree();
  for (const auto& images : gens) {
    out << ';';
    for (std::size_t k = 0; k < images.size(); ++k) out << (k ? "," : "") << images[k];
  }
  return out.str();
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

fs::path MarksCache::path_for(const PermGroup& g) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(fingerprint(g)) << ".json";
  return dir_ / name.str();
}

std::optional<MarksTable> MarksCache::load(const PermGroup& g) const {
  std::ifstream in(path_for(g));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("version").get<std::string>() != kCacheVersion) return std::nullopt;
    if (j.at("fingerprint").get<std::string>() != fingerprint(g)) return std::nullopt;
    auto t = marks_from_json(g, j.at("marks"));
    return MarksTable(g.name(), t.group_order(), t.classes(), t.matrix());
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void MarksCache::store(const PermGroup& g, const MarksTable& t) const {
  fs::create_directories(dir_);
  const auto target = path_for(g);
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    const nlohmann::json j{{"version", kCacheVersion},
                           {"fingerprint", fingerprint(g)},
                           {"marks", to_json(g, t)}};
    out << j.dump() << '\n';
    if (!out.flush()) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

MarksTable cached_marks(const PermGroup& g, const MarksCache* cache) {
  if (cache) {
    if (auto hit = cache->load(g)) return *hit;
  }
  auto t = table_of_marks(g);
  if (cache) {
    try {
      cache->store(g, t);
    } catch (const fs::filesystem_error&) {
    } catch (const Error&) {
    }
  }
  return t;
}

}  // namespace burnside
