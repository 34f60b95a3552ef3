#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "aplike/io.hpp"
#include "aplike/pointlikes.hpp"

namespace aplike::cli {

  enum ExitCode : int { computed = 0, input_error = 1, cap_hit = 2 };

  //! Entry point behind the `aplike` executable; args exclude argv[0].
  //! The JSON report goes to `out`, diagnostics to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  std::string_view version() noexcept;

  //! Lower-case hex SHA-256.
  std::string sha256_hex(std::string_view data);

  //! Hash of the table form of M, which does not depend on how the input
  //! file was laid out.
  std::string monoid_hash(Monoid const& M);

  //! The cache directory: `flag` when given, else $APLIKE_CACHE_DIR, else none.
  std::optional<std::filesystem::path> cache_dir(std::optional<std::string> const& flag);

  //! PL_A(M) from `dir` when a valid entry exists, otherwise computed and,
  //! if `dir` is set, stored. Entries that fail to load are recomputed.
  PowerMonoid cached_pointlikes(Monoid const&                                M,
                                std::optional<std::filesystem::path> const& dir,
                                std::size_t                                  cap);

  Json power_monoid_to_json(PowerMonoid const& PL);
  PowerMonoid power_monoid_from_json(Monoid const& M, Json const& json);

  //! Right Cayley graph in Graphviz DOT.
  std::string cayley_dot(Monoid const& M);

}  // namespace aplike::cli
