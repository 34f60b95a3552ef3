#pragma once

// Aperiodic pointlike sets. PL_A(M) is computed as the least family of
// nonempty subsets of M that contains the singletons and is closed under
//   - setwise product,
//   - Z -> Z^ω ∪ Z^ω Z ∪ Z^ω Z^2 ∪ ...   (Z^ω the idempotent power in P(M)),
//   - taking nonempty subsets.

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aplike/monoid.hpp"
#include "aplike/point_set.hpp"

namespace aplike {

  //! How a member of PL was first reached during the closure.
  enum class Provenance { singleton, product, omega_union, down_closure };

  std::string_view to_string(Provenance p) noexcept;
  Provenance       provenance_from_string(std::string_view text);

  inline constexpr std::size_t DEFAULT_FAMILY_CAP = std::size_t{1} << 16;

  //! A finite family of nonempty subsets closed under setwise product, in
  //! canonical order, together with its multiplication table.
  class PowerMonoid {
   public:
    //! Checks product closure and presence of {1}; throws InvalidInput.
    static PowerMonoid from_members(Monoid                  base,
                                    std::vector<PointSet>   members,
                                    std::vector<Provenance> provenance);

    [[nodiscard]] Monoid const& base() const noexcept {
      return _base;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _members.size();
    }
    [[nodiscard]] std::vector<PointSet> const& members() const noexcept {
      return _members;
    }
    [[nodiscard]] PointSet const& member(std::size_t i) const noexcept {
      return _members[i];
    }
    [[nodiscard]] std::vector<Provenance> const& provenance() const noexcept {
      return _provenance;
    }
    [[nodiscard]] std::optional<std::size_t> index_of(PointSet const& Z) const;
    [[nodiscard]] bool contains(PointSet const& Z) const {
      return index_of(Z).has_value();
    }
    [[nodiscard]] std::size_t identity_index() const noexcept {
      return _as_monoid.identity();
    }
    [[nodiscard]] std::size_t product(std::size_t i, std::size_t j) const noexcept {
      return _as_monoid.multiply(static_cast<element_id>(i), static_cast<element_id>(j));
    }
    //! The family as an abstract monoid on member indices.
    [[nodiscard]] Monoid const& as_monoid() const noexcept {
      return _as_monoid;
    }
    //! Union of the members indexed by `indices` (a set over member indices).
    [[nodiscard]] PointSet union_of(PointSet const& indices) const;

   private:
    PowerMonoid(Monoid base, std::vector<PointSet> members, std::vector<Provenance> provenance);

    Monoid                                                  _base;
    std::vector<PointSet>                                   _members;
    std::vector<Provenance>                                 _provenance;
    std::unordered_map<PointSet, std::size_t, PointSetHash> _index;
    Monoid                                                  _as_monoid;
  };

  //! Z^ω in the power monoid P(M).
  PointSet set_omega(Monoid const& M, PointSet const& Z);

  //! ⋃_{k>=0} Z^ω Z^k
  PointSet omega_union(Monoid const& M, PointSet const& Z);

  //! Throws SizeLimitExceeded once the family exceeds `cap` members.
  PowerMonoid henckell_closure(Monoid const& M, std::size_t cap = DEFAULT_FAMILY_CAP);

  //! Throws EmptySet on the empty set.
  bool is_pointlike(PowerMonoid const& PL, PointSet const& Z);
  bool is_pointlike(Monoid const& M, PointSet const& Z);

  //! ⊆-maximal members Z with Z Z = Z.
  std::vector<PointSet> idempotent_pointlikes(PowerMonoid const& PL);

  //! ⊆-maximal members.
  std::vector<PointSet> maximal_pointlikes(PowerMonoid const& PL);

}  // namespace aplike
