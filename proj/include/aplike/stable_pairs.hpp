#pragma once

// Stable pairs (Y, N) for the pseudovarieties M (all finite monoids) and A
// (aperiodic monoids).
//
//  - ({y}, N) is M-stable iff some L-chain of idempotents inside Stab(y)
//    generates a submonoid containing N.
//  - (Y, N) is A-stable iff it lies below a pair (Y', ⋃W) with Y' in
//    PL_A(M) and W a submonoid of PL_A(M) that fixes Y' on the right and
//    whose own L-classes form a chain.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aplike/monoid.hpp"
#include "aplike/pointlikes.hpp"

namespace aplike {

  enum class Variety { M, A };

  std::string to_string(Variety v);

  //! Which <=_L is used when testing that idempotents of Stab(y) form a
  //! chain: the ambient monoid's, or Stab(y)'s own. The two give the same
  //! verdicts; both are exposed so that can be checked.
  enum class ChainOrder { ambient, stabilizer };

  struct StablePairReport {
    Variety  variety = Variety::A;
    PointSet Y;
    PointSet N;
    bool     verdict = false;
    // Variety M: an L-chain of idempotents with N ⊆ <chain>, greatest first.
    std::vector<element_id> chain;
    // Variety A: a pointlike Y' ⊇ Y and W ⊆ Stab_PL(Y'), canonical order.
    std::optional<PointSet> Y_prime;
    std::vector<PointSet>   W;
  };

  struct SearchOptions {
    //! Bound on the number of submonoids of Stab_PL(Y') visited per search.
    std::size_t submonoid_cap = 2'000'000;
    unsigned    threads       = 1;
  };

  //! Throws NotASubmonoid, OutOfRange.
  StablePairReport m_stable_decide(Monoid const&   M,
                                   element_id      y,
                                   PointSet const& N,
                                   ChainOrder      order = ChainOrder::ambient);

  //! One report per maximal pair ({y}, N), ordered by y then N.
  std::vector<StablePairReport> m_stable_maximal(Monoid const& M,
                                                 ChainOrder    order = ChainOrder::ambient);

  //! Maximal L-chains of idempotents of Stab(y), one per distinct generated
  //! submonoid, as (chain, generated submonoid).
  std::vector<std::pair<PointSet, PointSet>> idempotent_chains(Monoid const& M,
                                                               element_id    y,
                                                               ChainOrder    order);

  //! {Z in PL : Y Z = Y}; throws NotAMember when Y is not in PL.
  std::vector<PointSet> stab_in_power(PowerMonoid const& PL, PointSet const& Y);

  //! Submonoids W of the given submonoid S of PL (sets of member indices)
  //! that are internal L-chains, keyed by their union ⋃W. For each distinct
  //! union the largest such W (first in enumeration order on ties) is kept.
  struct ChainCover {
    PointSet W;      // member indices
    PointSet cover;  // ⋃W as a subset of M
  };
  std::vector<ChainCover> internal_chain_covers(PowerMonoid const& PL,
                                                PointSet const&    S,
                                                std::size_t        submonoid_cap);

  //! Repeated A-stable decisions over one PL, sharing the chain covers
  //! computed for each stabilizer. Not thread-safe.
  class AStableSearch {
   public:
    explicit AStableSearch(PowerMonoid const& PL, SearchOptions options = {});
    ~AStableSearch();
    AStableSearch(AStableSearch const&)            = delete;
    AStableSearch& operator=(AStableSearch const&) = delete;

    //! Throws EmptySet, NotASubmonoid, SizeLimitExceeded.
    StablePairReport decide(PointSet const& Y, PointSet const& N);

   private:
    struct Cache;
    PowerMonoid const&     _PL;
    SearchOptions          _options;
    std::unique_ptr<Cache> _cache;
  };

  //! One-off AStableSearch::decide.
  StablePairReport a_stable_decide(PowerMonoid const&   PL,
                                   PointSet const&      Y,
                                   PointSet const&      N,
                                   SearchOptions const& options = {});

  //! Antichain of maximal A-stable pairs, ordered by Y then N canonically.
  std::vector<StablePairReport> a_stable_maximal(PowerMonoid const&   PL,
                                                 SearchOptions const& options = {});

  //! Re-derives every claim of an accepted report by direct multiplication
  //! in M. Returns an explanation of the first failure, or nullopt. For A
  //! reports, membership of Y' and W in PL is checked against `PL`.
  std::optional<std::string> certificate_error(Monoid const&           M,
                                               StablePairReport const& report,
                                               PowerMonoid const*      PL = nullptr);

}  // namespace aplike
