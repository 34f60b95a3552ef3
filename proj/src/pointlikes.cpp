#include "aplike/pointlikes.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "aplike/error.hpp"

namespace aplike {

  std::string_view to_string(Provenance p) noexcept {
    switch (p) {
      case Provenance::singleton: return "singleton";
      case Provenance::product: return "product";
      case Provenance::omega_union: return "omega-union";
      case Provenance::down_closure: return "down-closure";
    }
    return "unknown";
  }

  Provenance provenance_from_string(std::string_view text) {
    for (auto p : {Provenance::singleton,
                   Provenance::product,
                   Provenance::omega_union,
                   Provenance::down_closure}) {
      if (to_string(p) == text) {
        return p;
      }
    }
    throw Error(ErrorCode::InvalidInput, "unknown provenance tag '" + std::string(text) + "'");
  }

  namespace {

    Monoid table_monoid(Monoid const&                                            base,
                        std::vector<PointSet> const&                             members,
                        std::unordered_map<PointSet, std::size_t, PointSetHash> const& index) {
      std::size_t const       n = members.size();
      std::vector<element_id> table(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto product = base.multiply(members[i], members[j]);
          auto it      = index.find(product);
          if (it == index.end()) {
            throw Error(ErrorCode::InvalidInput,
                        "family is not closed under product (members " + std::to_string(i)
                            + " and " + std::to_string(j) + ")");
          }
          table[i * n + j] = static_cast<element_id>(it->second);
        }
      }
      auto it = index.find(base.singleton(base.identity()));
      if (it == index.end()) {
        throw Error(ErrorCode::InvalidInput, "family does not contain {1}");
      }
      auto identity = static_cast<element_id>(it->second);
      auto gens     = greedy_generators(n, table, identity);
      return Monoid::trusted(n, std::move(table), identity, std::move(gens));
    }

    std::unordered_map<PointSet, std::size_t, PointSetHash> index_members(
        std::vector<PointSet> const& members) {
      std::unordered_map<PointSet, std::size_t, PointSetHash> index;
      for (std::size_t i = 0; i < members.size(); ++i) {
        index.emplace(members[i], i);
      }
      return index;
    }

  }  // namespace

  PowerMonoid::PowerMonoid(Monoid                  base,
                           std::vector<PointSet>   members,
                           std::vector<Provenance> provenance)
      : _base(std::move(base)),
        _members(std::move(members)),
        _provenance(std::move(provenance)),
        _index(index_members(_members)),
        _as_monoid(table_monoid(_base, _members, _index)) {}

  PowerMonoid PowerMonoid::from_members(Monoid                  base,
                                        std::vector<PointSet>   members,
                                        std::vector<Provenance> provenance) {
    if (members.size() != provenance.size()) {
      throw Error(ErrorCode::InvalidInput, "one provenance tag per member is required");
    }
    std::vector<std::size_t> perm(members.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      perm[i] = i;
      if (members[i].universe() != base.order() || members[i].empty()) {
        throw Error(ErrorCode::InvalidInput,
                    "member " + std::to_string(i) + " is empty or over the wrong monoid");
      }
    }
    std::sort(perm.begin(), perm.end(), [&](auto a, auto b) {
      return canonical_less(members[a], members[b]);
    });
    std::vector<PointSet>   sorted;
    std::vector<Provenance> tags;
    for (auto i : perm) {
      if (!sorted.empty() && sorted.back() == members[i]) {
        throw Error(ErrorCode::InvalidInput, "duplicate member");
      }
      sorted.push_back(members[i]);
      tags.push_back(provenance[i]);
    }
    return PowerMonoid(std::move(base), std::move(sorted), std::move(tags));
  }

  std::optional<std::size_t> PowerMonoid::index_of(PointSet const& Z) const {
    auto it = _index.find(Z);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  PointSet PowerMonoid::union_of(PointSet const& indices) const {
    PointSet result(_base.order());
    indices.for_each([&](element_id i) { result |= _members[i]; });
    return result;
  }

  PointSet set_omega(Monoid const& M, PointSet const& Z) {
    // Powers Z, Z^2, ... until one repeats; the idempotent lies on the cycle.
    std::unordered_map<PointSet, std::size_t, PointSetHash> seen;
    std::vector<PointSet>                                   powers{Z};
    seen.emplace(Z, 0);
    while (true) {
      auto next = M.multiply(powers.back(), Z);
      auto it   = seen.find(next);
      if (it != seen.end()) {
        for (std::size_t i = it->second; i < powers.size(); ++i) {
          if (M.multiply(powers[i], powers[i]) == powers[i]) {
            return powers[i];
          }
        }
        // Unreachable: every finite cyclic semigroup has an idempotent.
        return powers.back();
      }
      seen.emplace(next, powers.size());
      powers.push_back(std::move(next));
    }
  }

  PointSet omega_union(Monoid const& M, PointSet const& Z) {
    auto                                          current = set_omega(M, Z);
    PointSet                                      result  = current;
    std::unordered_map<PointSet, bool, PointSetHash> seen;
    while (seen.emplace(current, true).second) {
      result |= current;
      current = M.multiply(current, Z);
    }
    return result;
  }

  PowerMonoid henckell_closure(Monoid const& M, std::size_t cap) {
    std::vector<PointSet>                                   found;
    std::vector<Provenance>                                 tags;
    std::unordered_map<PointSet, std::size_t, PointSetHash> index;
    std::set<PointSet, CanonicalLess>                       pending;
    std::vector<std::size_t>                                processed;

    auto add = [&](auto&& self, PointSet const& Z, Provenance tag) -> void {
      if (Z.empty() || index.contains(Z)) {
        return;
      }
      if (found.size() >= cap) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "pointlike family exceeds the cap of " + std::to_string(cap) + " members");
      }
      index.emplace(Z, found.size());
      found.push_back(Z);
      tags.push_back(tag);
      pending.insert(Z);
      if (Z.size() > 1) {
        Z.for_each([&](element_id z) {
          PointSet smaller = Z;
          smaller.erase(z);
          self(self, smaller, Provenance::down_closure);
        });
      }
    };

    for (element_id a = 0; a < M.order(); ++a) {
      add(add, M.singleton(a), Provenance::singleton);
    }
    while (!pending.empty()) {
      PointSet Z = *pending.begin();
      pending.erase(pending.begin());
      auto const zi = index.at(Z);
      add(add, omega_union(M, Z), Provenance::omega_union);
      processed.push_back(zi);
      for (std::size_t k = 0; k < processed.size(); ++k) {
        // `found` may reallocate inside add(); copy the operand first.
        PointSet W = found[processed[k]];
        add(add, M.multiply(Z, W), Provenance::product);
        add(add, M.multiply(W, Z), Provenance::product);
      }
    }
    return PowerMonoid::from_members(M, std::move(found), std::move(tags));
  }

  bool is_pointlike(PowerMonoid const& PL, PointSet const& Z) {
    if (Z.empty()) {
      throw Error(ErrorCode::EmptySet, "pointlike candidates must be nonempty");
    }
    return PL.contains(Z);
  }

  bool is_pointlike(Monoid const& M, PointSet const& Z) {
    return is_pointlike(henckell_closure(M), Z);
  }

  std::vector<PointSet> idempotent_pointlikes(PowerMonoid const& PL) {
    std::vector<PointSet> idempotents;
    for (std::size_t i = 0; i < PL.size(); ++i) {
      if (PL.product(i, i) == i) {
        idempotents.push_back(PL.member(i));
      }
    }
    return maximal_elements(std::move(idempotents));
  }

  std::vector<PointSet> maximal_pointlikes(PowerMonoid const& PL) {
    return maximal_elements(PL.members());
  }

}  // namespace aplike
