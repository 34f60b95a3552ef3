#include "aplike/cliques.hpp"

#include <algorithm>

namespace aplike {

  namespace {

    void expand(std::vector<PointSet> const& adjacent,
                PointSet&                    clique,
                PointSet                     candidates,
                PointSet                     excluded,
                std::vector<PointSet>&       out) {
      if (candidates.empty() && excluded.empty()) {
        out.push_back(clique);
        return;
      }
      // Pivot maximizing |candidates & N(u)|.
      element_id  pivot = 0;
      std::size_t best  = 0;
      bool        found = false;
      (candidates | excluded).for_each([&](element_id u) {
        auto score = (candidates & adjacent[u]).size();
        if (!found || score > best) {
          pivot = u;
          best  = score;
          found = true;
        }
      });
      PointSet branch = candidates;
      adjacent[pivot].for_each([&](element_id u) { branch.erase(u); });
      branch.for_each([&](element_id v) {
        clique.insert(v);
        expand(adjacent, clique, candidates & adjacent[v], excluded & adjacent[v], out);
        clique.erase(v);
        candidates.erase(v);
        excluded.insert(v);
      });
    }

  }  // namespace

  std::vector<PointSet> maximal_cliques(std::vector<PointSet> const& adjacent) {
    std::size_t const     n = adjacent.size();
    std::vector<PointSet> out;
    if (n == 0) {
      return out;
    }
    PointSet clique(n);
    expand(adjacent, clique, PointSet::full(n), PointSet(n), out);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
  }

}  // namespace aplike
