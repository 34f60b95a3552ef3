#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "aplike/cli.hpp"
#include "aplike/error.hpp"

namespace aplike::cli {

  std::string_view version() noexcept {
    return APLIKE_VERSION;
  }

  std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("SHA-256 failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i) {
      hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return hex.str();
  }

  std::string monoid_hash(Monoid const& M) {
    return sha256_hex(monoid_to_json(M).dump());
  }

  std::optional<std::filesystem::path> cache_dir(std::optional<std::string> const& flag) {
    if (flag && !flag->empty()) {
      return std::filesystem::path(*flag);
    }
    if (char const* env = std::getenv("APLIKE_CACHE_DIR"); env != nullptr && *env != '\0') {
      return std::filesystem::path(env);
    }
    return std::nullopt;
  }

  Json power_monoid_to_json(PowerMonoid const& PL) {
    Json members = Json::array();
    for (std::size_t i = 0; i < PL.size(); ++i) {
      members.push_back(
          {{"set", to_json(PL.member(i))}, {"provenance", to_string(PL.provenance()[i])}});
    }
    return members;
  }

  PowerMonoid power_monoid_from_json(Monoid const& M, Json const& json) {
    if (!json.is_array()) {
      throw Error(ErrorCode::InvalidInput, "field 'members': expected an array");
    }
    std::vector<PointSet>   members;
    std::vector<Provenance> provenance;
    for (auto const& entry : json) {
      members.push_back(point_set_from_json(entry.at("set"), M, "members.set"));
      provenance.push_back(provenance_from_string(entry.at("provenance").get<std::string>()));
    }
    return PowerMonoid::from_members(M, std::move(members), std::move(provenance));
  }

  PowerMonoid cached_pointlikes(Monoid const&                                M,
                                std::optional<std::filesystem::path> const& dir,
                                std::size_t                                  cap) {
    if (!dir) {
      return henckell_closure(M, cap);
    }
    auto const hash = monoid_hash(M);
    auto const file = *dir / ("pl-" + hash + ".json");
    if (std::filesystem::exists(file)) {
      try {
        auto const json = read_json_file(file);
        if (json.at("monoid") == monoid_to_json(M)) {
          return power_monoid_from_json(M, json.at("members"));
        }
      } catch (std::exception const&) {
        // Unreadable or stale entry: fall through and overwrite it.
      }
    }
    auto PL = henckell_closure(M, cap);
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    Json entry;
    entry["monoid"]  = monoid_to_json(M);
    entry["members"] = power_monoid_to_json(PL);
    auto const tmp   = file.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << entry.dump() << '\n';
    }
    std::filesystem::rename(tmp, file, ec);
    return PL;
  }

  std::string cayley_dot(Monoid const& M) {
    std::ostringstream dot;
    dot << "digraph cayley {\n  node [shape=circle];\n";
    for (element_id a = 0; a < M.order(); ++a) {
      dot << "  n" << a << " [label=\"" << a << (a == M.identity() ? " (1)" : "") << "\"];\n";
    }
    for (element_id a = 0; a < M.order(); ++a) {
      for (auto const& g : M.generators()) {
        dot << "  n" << a << " -> n" << M.multiply(a, g.element) << " [label=\"" << g.letter
            << "\"];\n";
      }
    }
    dot << "}\n";
    return dot.str();
  }

}  // namespace aplike::cli
