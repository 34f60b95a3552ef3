#include "aplike/stable_pairs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "aplike/cliques.hpp"
#include "aplike/error.hpp"
#include "aplike/parallel.hpp"
#include "aplike/structure.hpp"

namespace aplike {

  std::string to_string(Variety v) {
    return v == Variety::M ? "M" : "A";
  }

  namespace {

    void require_element(Monoid const& M, element_id y) {
      if (y >= M.order()) {
        throw Error(ErrorCode::OutOfRange,
                    "element " + std::to_string(y) + " is not below the order "
                        + std::to_string(M.order()));
      }
    }

    void require_subset(Monoid const& M, PointSet const& Z, char const* what) {
      if (Z.universe() != M.order()) {
        throw Error(ErrorCode::OutOfRange,
                    std::string(what) + " is not a subset of the monoid's elements");
      }
    }

    void require_submonoid_of(Monoid const& M, PointSet const& N) {
      require_subset(M, N, "N");
      if (!is_submonoid(M, N)) {
        throw Error(ErrorCode::NotASubmonoid, "N is not a submonoid");
      }
    }

    // Orders a chain from <=_L-greatest to least using `below(a, b)`.
    template <typename Below>
    std::vector<element_id> sorted_chain(PointSet const& chain, Below&& below) {
      auto elements = chain.elements();
      auto height   = [&](element_id a) {
        std::size_t count = 0;
        for (auto b : elements) {
          count += below(b, a) ? 1 : 0;
        }
        return count;
      };
      std::stable_sort(elements.begin(), elements.end(), [&](element_id a, element_id b) {
        return height(a) > height(b);
      });
      return elements;
    }

    bool dominated(StablePairReport const& lhs, StablePairReport const& rhs) {
      return lhs.Y.is_subset_of(rhs.Y) && lhs.N.is_subset_of(rhs.N);
    }

    std::vector<StablePairReport> antichain(std::vector<StablePairReport> pairs) {
      std::sort(pairs.begin(), pairs.end(), [](auto const& a, auto const& b) {
        if (a.Y != b.Y) {
          return canonical_less(a.Y, b.Y);
        }
        return canonical_less(a.N, b.N);
      });
      pairs.erase(std::unique(pairs.begin(),
                              pairs.end(),
                              [](auto const& a, auto const& b) { return a.Y == b.Y && a.N == b.N; }),
                  pairs.end());
      std::vector<bool> keep(pairs.size(), true);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < pairs.size() && keep[i]; ++j) {
          keep[i] = i == j || !dominated(pairs[i], pairs[j]);
        }
      }
      std::vector<StablePairReport> result;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (keep[i]) {
          result.push_back(std::move(pairs[i]));
        }
      }
      return result;
    }

  }  // namespace

  std::vector<std::pair<PointSet, PointSet>> idempotent_chains(Monoid const& M,
                                                               element_id    y,
                                                               ChainOrder    order) {
    require_element(M, y);
    auto const stab = stabilizer(M, y);
    auto const ids  = (stab & M.idempotents()).elements();

    std::vector<std::vector<bool>> below(ids.size(), std::vector<bool>(ids.size()));
    if (order == ChainOrder::ambient) {
      auto const g = green(M);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = 0; j < ids.size(); ++j) {
          below[i][j] = g.L_leq(ids[i], ids[j]);
        }
      }
    } else {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = 0; j < ids.size(); ++j) {
          bool found = false;
          stab.for_each([&](element_id m) { found = found || M.multiply(m, ids[j]) == ids[i]; });
          below[i][j] = found;
        }
      }
    }

    std::vector<PointSet> adjacent(ids.size(), PointSet(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = 0; j < ids.size(); ++j) {
        if (i != j && (below[i][j] || below[j][i])) {
          adjacent[i].insert(static_cast<element_id>(j));
        }
      }
    }

    std::vector<std::pair<PointSet, PointSet>> result;
    std::unordered_set<PointSet, PointSetHash> seen;
    for (auto const& clique : maximal_cliques(adjacent)) {
      PointSet chain(M.order());
      clique.for_each([&](element_id i) { chain.insert(ids[i]); });
      auto generated = submonoid(M, chain);
      if (seen.insert(generated).second) {
        result.emplace_back(std::move(chain), std::move(generated));
      }
    }
    return result;
  }

  namespace {

    std::vector<element_id> chain_certificate(PointSet const& chain, GreenData const& g) {
      return sorted_chain(chain, [&](element_id a, element_id b) { return g.L_leq(a, b); });
    }

  }  // namespace

  StablePairReport m_stable_decide(Monoid const&   M,
                                   element_id      y,
                                   PointSet const& N,
                                   ChainOrder      order) {
    require_element(M, y);
    require_submonoid_of(M, N);
    StablePairReport report;
    report.variety = Variety::M;
    report.Y       = M.singleton(y);
    report.N       = N;
    auto const g   = green(M);
    for (auto const& [chain, generated] : idempotent_chains(M, y, order)) {
      if (N.is_subset_of(generated)) {
        report.verdict = true;
        report.chain   = chain_certificate(chain, g);
        break;
      }
    }
    return report;
  }

  std::vector<StablePairReport> m_stable_maximal(Monoid const& M, ChainOrder order) {
    auto const                    g = green(M);
    std::vector<StablePairReport> result;
    for (element_id y = 0; y < M.order(); ++y) {
      auto const            chains = idempotent_chains(M, y, order);
      std::vector<PointSet> generated;
      for (auto const& c : chains) {
        generated.push_back(c.second);
      }
      for (auto const& N : maximal_elements(generated)) {
        StablePairReport report;
        report.variety = Variety::M;
        report.Y       = M.singleton(y);
        report.N       = N;
        report.verdict = true;
        for (auto const& [chain, gen] : chains) {
          if (gen == N) {
            report.chain = chain_certificate(chain, g);
            break;
          }
        }
        result.push_back(std::move(report));
      }
    }
    return result;
  }

  std::vector<PointSet> stab_in_power(PowerMonoid const& PL, PointSet const& Y) {
    auto const index = PL.index_of(Y);
    if (!index) {
      throw Error(ErrorCode::NotAMember, "the set is not a member of the family");
    }
    std::vector<PointSet> result;
    for (std::size_t i = 0; i < PL.size(); ++i) {
      if (PL.product(*index, i) == *index) {
        result.push_back(PL.member(i));
      }
    }
    return result;
  }

  namespace {

    PointSet stab_indices(PowerMonoid const& PL, std::size_t index) {
      PointSet result(PL.size());
      for (std::size_t i = 0; i < PL.size(); ++i) {
        if (PL.product(index, i) == index) {
          result.insert(static_cast<element_id>(i));
        }
      }
      return result;
    }

    PointSet add_and_close(Monoid const& P, PointSet const& W, element_id s) {
      auto seed = W;
      seed.insert(s);
      return submonoid(P, seed);
    }

  }  // namespace

  std::vector<ChainCover> internal_chain_covers(PowerMonoid const& PL,
                                                PointSet const&    S,
                                                std::size_t        submonoid_cap) {
    auto const& P = PL.as_monoid();
    // Breadth-first over all submonoids of S. Growing a submonoid can merge
    // its L-classes, so submonoids that fail the chain test are still
    // extended.
    auto const start = P.singleton(static_cast<element_id>(PL.identity_index()));
    std::unordered_set<PointSet, PointSetHash> visited{start};
    std::deque<PointSet>                       queue{start};
    std::map<PointSet, PointSet, CanonicalLess> best;  // cover -> W
    while (!queue.empty()) {
      auto W = std::move(queue.front());
      queue.pop_front();
      if (is_internal_L_chain(P, W)) {
        auto cover = PL.union_of(W);
        auto it    = best.find(cover);
        if (it == best.end()) {
          best.emplace(std::move(cover), W);
        } else if (W.size() > it->second.size()) {
          it->second = W;
        }
      }
      S.for_each([&](element_id s) {
        if (W.contains(s)) {
          return;
        }
        auto next = add_and_close(P, W, s);
        if (visited.insert(next).second) {
          if (visited.size() > submonoid_cap) {
            throw Error(ErrorCode::SizeLimitExceeded,
                        "more than " + std::to_string(submonoid_cap)
                            + " submonoids of a stabilizer in the pointlike family");
          }
          queue.push_back(std::move(next));
        }
      });
    }
    std::vector<ChainCover> result;
    for (auto& [cover, W] : best) {
      result.push_back({W, cover});
    }
    return result;
  }

  namespace {

    std::vector<PointSet> members_of(PowerMonoid const& PL, PointSet const& indices) {
      std::vector<PointSet> result;
      indices.for_each([&](element_id i) { result.push_back(PL.member(i)); });
      std::sort(result.begin(), result.end(), CanonicalLess{});
      return result;
    }

  }  // namespace

  struct AStableSearch::Cache {
    std::vector<PointSet> stab;  // Stab_PL of each member, as member indices
    std::unordered_map<PointSet, std::vector<ChainCover>, PointSetHash> covers;
  };

  AStableSearch::AStableSearch(PowerMonoid const& PL, SearchOptions options)
      : _PL(PL), _options(options), _cache(std::make_unique<Cache>()) {
    for (std::size_t i = 0; i < PL.size(); ++i) {
      _cache->stab.push_back(stab_indices(PL, i));
    }
  }

  AStableSearch::~AStableSearch() = default;

  StablePairReport AStableSearch::decide(PointSet const& Y, PointSet const& N) {
    auto const& M = _PL.base();
    require_subset(M, Y, "Y");
    if (Y.empty()) {
      throw Error(ErrorCode::EmptySet, "Y must be nonempty");
    }
    require_submonoid_of(M, N);
    StablePairReport report;
    report.variety = Variety::A;
    report.Y       = Y;
    report.N       = N;
    for (std::size_t i = 0; i < _PL.size() && !report.verdict; ++i) {
      if (!Y.is_subset_of(_PL.member(i))) {
        continue;
      }
      auto const& S = _cache->stab[i];
      if (!N.is_subset_of(_PL.union_of(S))) {
        continue;
      }
      auto it = _cache->covers.find(S);
      if (it == _cache->covers.end()) {
        it = _cache->covers.emplace(S, internal_chain_covers(_PL, S, _options.submonoid_cap))
                 .first;
      }
      for (auto const& c : it->second) {
        if (N.is_subset_of(c.cover)) {
          report.verdict = true;
          report.Y_prime = _PL.member(i);
          report.W       = members_of(_PL, c.W);
          break;
        }
      }
    }
    return report;
  }

  StablePairReport a_stable_decide(PowerMonoid const&   PL,
                                   PointSet const&      Y,
                                   PointSet const&      N,
                                   SearchOptions const& options) {
    return AStableSearch(PL, options).decide(Y, N);
  }

  std::vector<StablePairReport> a_stable_maximal(PowerMonoid const&   PL,
                                                 SearchOptions const& options) {
    std::vector<PointSet>                                  stabs;
    std::unordered_map<PointSet, std::size_t, PointSetHash> stab_index;
    std::vector<std::size_t>                               stab_of(PL.size());
    for (std::size_t i = 0; i < PL.size(); ++i) {
      auto S  = stab_indices(PL, i);
      auto it = stab_index.find(S);
      if (it == stab_index.end()) {
        it = stab_index.emplace(S, stabs.size()).first;
        stabs.push_back(std::move(S));
      }
      stab_of[i] = it->second;
    }

    std::vector<std::vector<ChainCover>> covers(stabs.size());
    parallel_for(stabs.size(), options.threads, [&](std::size_t k) {
      auto all = internal_chain_covers(PL, stabs[k], options.submonoid_cap);
      std::vector<PointSet> unions;
      for (auto const& c : all) {
        unions.push_back(c.cover);
      }
      auto const maximal = maximal_elements(unions);
      for (auto const& c : all) {
        if (std::find(maximal.begin(), maximal.end(), c.cover) != maximal.end()) {
          covers[k].push_back(c);
        }
      }
    });

    std::vector<StablePairReport> pairs;
    for (std::size_t i = 0; i < PL.size(); ++i) {
      for (auto const& c : covers[stab_of[i]]) {
        StablePairReport report;
        report.variety = Variety::A;
        report.Y       = PL.member(i);
        report.N       = c.cover;
        report.verdict = true;
        report.Y_prime = PL.member(i);
        report.W       = members_of(PL, c.W);
        pairs.push_back(std::move(report));
      }
    }
    return antichain(std::move(pairs));
  }

  namespace {

    std::optional<std::string> m_certificate_error(Monoid const& M, StablePairReport const& r) {
      if (r.Y.size() != 1) {
        return "Y is not a singleton";
      }
      auto const y = r.Y.first();
      PointSet   chain(M.order());
      for (auto e : r.chain) {
        if (e >= M.order()) {
          return "chain element out of range";
        }
        if (M.multiply(e, e) != e) {
          return "chain element " + std::to_string(e) + " is not idempotent";
        }
        if (M.multiply(y, e) != y) {
          return "chain element " + std::to_string(e) + " does not stabilize y";
        }
        chain.insert(e);
      }
      auto const g = green(M);
      for (auto a : r.chain) {
        for (auto b : r.chain) {
          if (!g.L_leq(a, b) && !g.L_leq(b, a)) {
            return "chain elements " + std::to_string(a) + " and " + std::to_string(b)
                   + " are not L-comparable";
          }
        }
      }
      if (!r.N.is_subset_of(submonoid(M, chain))) {
        return "the chain does not generate N";
      }
      return std::nullopt;
    }

    std::optional<std::string> a_certificate_error(Monoid const&           M,
                                                   StablePairReport const& r,
                                                   PowerMonoid const*      PL) {
      if (!r.Y_prime) {
        return "missing Y'";
      }
      auto const& Yp = *r.Y_prime;
      if (!r.Y.is_subset_of(Yp)) {
        return "Y is not contained in Y'";
      }
      std::optional<PowerMonoid> local;
      if (PL == nullptr) {
        local.emplace(henckell_closure(M));
        PL = &*local;
      }
      if (!PL->contains(Yp)) {
        return "Y' is not pointlike";
      }
      auto const one = M.singleton(M.identity());
      if (std::find(r.W.begin(), r.W.end(), one) == r.W.end()) {
        return "W lacks the identity";
      }
      PointSet cover(M.order());
      for (auto const& Z : r.W) {
        if (!PL->contains(Z)) {
          return "a member of W is not pointlike";
        }
        if (M.multiply(Yp, Z) != Yp) {
          return "a member of W does not stabilize Y'";
        }
        cover |= Z;
        for (auto const& Z2 : r.W) {
          if (std::find(r.W.begin(), r.W.end(), M.multiply(Z, Z2)) == r.W.end()) {
            return "W is not closed under products";
          }
        }
      }
      // Internal L-order of W: A <=_L B iff A = C B for some C in W.
      auto below = [&](PointSet const& A, PointSet const& B) {
        return std::any_of(r.W.begin(), r.W.end(), [&](PointSet const& C) {
          return M.multiply(C, B) == A;
        });
      };
      for (auto const& A : r.W) {
        for (auto const& B : r.W) {
          if (!below(A, B) && !below(B, A)) {
            return "W is not an L-chain";
          }
        }
      }
      if (!r.N.is_subset_of(cover)) {
        return "N is not covered by W";
      }
      return std::nullopt;
    }

  }  // namespace

  std::optional<std::string> certificate_error(Monoid const&           M,
                                               StablePairReport const& report,
                                               PowerMonoid const*      PL) {
    if (!report.verdict) {
      if (!report.chain.empty() || report.Y_prime || !report.W.empty()) {
        return "a rejected pair carries a certificate";
      }
      return std::nullopt;
    }
    return report.variety == Variety::M ? m_certificate_error(M, report)
                                        : a_certificate_error(M, report, PL);
  }

}  // namespace aplike
