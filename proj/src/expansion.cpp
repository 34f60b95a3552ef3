#include "aplike/expansion.hpp"

#include <algorithm>

#include "aplike/detail/closure.hpp"
#include "aplike/error.hpp"
#include "aplike/kernels/kernels.hpp"
#include "aplike/structure.hpp"

namespace aplike {

  std::vector<std::pair<element_id, element_id>> ExpansionElement::cut_pairs(
      std::size_t order) const {
    std::vector<std::pair<element_id, element_id>> result;
    result.reserve(cuts.size());
    for (auto code : cuts) {
      result.emplace_back(static_cast<element_id>(code / order),
                          static_cast<element_id>(code % order));
    }
    return result;
  }

  std::size_t ExpansionElementHash::operator()(ExpansionElement const& e) const noexcept {
    std::size_t seed = e.diag * 0x9e3779b97f4a7c15ULL ^ e.base;
    for (auto c : e.cuts) {
      seed ^= c + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }

  ExpansionElement hs_word(Monoid const& M, Word const& word) {
    ExpansionElement result;
    result.base = M.fingerprint();
    result.diag = M.evaluate(word);
    if (word.empty()) {
      return result;
    }
    std::size_t const       len = word.size();
    std::vector<element_id> suffix(len + 1);
    suffix[len] = M.identity();
    for (std::size_t i = len; i-- > 0;) {
      suffix[i] = M.multiply(M.generators()[word[i]].element, suffix[i + 1]);
    }
    element_id prefix = M.identity();
    for (std::size_t i = 0; i <= len; ++i) {
      result.cuts.push_back(std::uint64_t{prefix} * M.order() + suffix[i]);
      if (i < len) {
        prefix = M.multiply(prefix, M.generators()[word[i]].element);
      }
    }
    std::sort(result.cuts.begin(), result.cuts.end());
    result.cuts.erase(std::unique(result.cuts.begin(), result.cuts.end()), result.cuts.end());
    return result;
  }

  ExpansionElement hs_multiply(Monoid const&           M,
                               ExpansionElement const& lhs,
                               ExpansionElement const& rhs) {
    if (lhs.base != M.fingerprint() || rhs.base != M.fingerprint()) {
      throw Error(ErrorCode::BaseMismatch, "expansion elements belong to different monoids");
    }
    std::size_t const n = M.order();
    ExpansionElement  result;
    result.base = lhs.base;
    result.diag = M.multiply(lhs.diag, rhs.diag);

    // m C': left factors of rhs's cuts multiplied by lhs.diag.
    std::vector<element_id> us, vs, out;
    us.reserve(rhs.cuts.size());
    vs.reserve(rhs.cuts.size());
    for (auto code : rhs.cuts) {
      us.push_back(static_cast<element_id>(code / n));
      vs.push_back(static_cast<element_id>(code % n));
    }
    auto const& k = kernels::active();
    out.resize(us.size());
    k.multiply_left(M.table().data(), n, lhs.diag, us.data(), us.size(), out.data());
    result.cuts.reserve(lhs.cuts.size() + rhs.cuts.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      result.cuts.push_back(std::uint64_t{out[i]} * n + vs[i]);
    }

    // C m': right factors of lhs's cuts multiplied by rhs.diag.
    us.clear();
    vs.clear();
    for (auto code : lhs.cuts) {
      us.push_back(static_cast<element_id>(code / n));
      vs.push_back(static_cast<element_id>(code % n));
    }
    out.resize(vs.size());
    k.multiply_right(M.table().data(), n, vs.data(), vs.size(), rhs.diag, out.data());
    for (std::size_t i = 0; i < out.size(); ++i) {
      result.cuts.push_back(std::uint64_t{us[i]} * n + out[i]);
    }
    std::sort(result.cuts.begin(), result.cuts.end());
    result.cuts.erase(std::unique(result.cuts.begin(), result.cuts.end()), result.cuts.end());
    return result;
  }

  ExpansionMonoid expand(Monoid const& M, std::size_t cap) {
    auto const&                   letters = M.generators();
    std::vector<ExpansionElement> gens;
    for (std::size_t x = 0; x < letters.size(); ++x) {
      gens.push_back(hs_word(M, Word{x}));
    }
    auto closure = detail::right_closure<ExpansionElement, ExpansionElementHash>(
        hs_word(M, Word{}),
        letters.size(),
        [&](ExpansionElement const& e, std::size_t x) { return hs_multiply(M, e, gens[x]); },
        cap,
        "expansion");
    std::vector<Generator> new_gens;
    for (std::size_t x = 0; x < letters.size(); ++x) {
      new_gens.push_back({letters[x].letter, closure.right[x]});
    }
    auto                    table = detail::table_from_closure(closure);
    std::size_t const       order = closure.elements.size();
    std::vector<element_id> eta;
    eta.reserve(order);
    for (auto const& e : closure.elements) {
      eta.push_back(e.diag);
    }
    return {M,
            Monoid::trusted(order, std::move(table), 0, std::move(new_gens)),
            std::move(closure.elements),
            std::move(eta)};
  }

  Monoid const& ExpansionTower::top(Monoid const& M) const {
    return levels.empty() ? M : levels.back().monoid;
  }

  std::vector<element_id> ExpansionTower::eta_to_base(Monoid const& M) const {
    std::vector<element_id> map;
    auto const&             t = top(M);
    for (element_id a = 0; a < t.order(); ++a) {
      element_id x = a;
      for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
        x = level->eta[x];
      }
      map.push_back(x);
    }
    return map;
  }

  ExpansionTower expand_iterated(Monoid const& M, std::size_t depth, std::size_t cap) {
    ExpansionTower tower;
    for (std::size_t i = 0; i < depth; ++i) {
      tower.levels.push_back(expand(tower.top(M), cap));
    }
    return tower;
  }

  StabProjection stab_projection(ExpansionMonoid const& ex, Word const& word) {
    auto const& M     = ex.base;
    auto        top   = ex.monoid.evaluate(word);
    auto        image = PointSet(M.order());
    stabilizer(ex.monoid, top).for_each([&](element_id s) { image.insert(ex.eta[s]); });
    auto const stab  = stabilizer(M, ex.eta[top]);
    auto const elems = image.elements();

    auto below = [&](element_id u, element_id v) {
      bool found = false;
      stab.for_each([&](element_id s) { found = found || M.multiply(s, v) == u; });
      return found;
    };
    StabProjection result;
    result.ok = image.is_subset_of(stab);
    std::vector<std::size_t> rank(M.order(), 0);
    for (auto u : elems) {
      for (auto v : elems) {
        bool uv = below(u, v), vu = below(v, u);
        if (!uv && !vu) {
          result.ok = false;
        }
        if (uv) {
          ++rank[v];
        }
      }
    }
    result.chain = elems;
    std::stable_sort(result.chain.begin(), result.chain.end(), [&](auto a, auto b) {
      return rank[a] > rank[b];
    });
    return result;
  }

  StabProjection stab_projection(Monoid const& M, Word const& word, std::size_t cap) {
    return stab_projection(expand(M, cap), word);
  }

  std::size_t eta_fiber_violation(ExpansionMonoid const& ex) {
    auto const& E = ex.monoid;
    for (element_id s = 0; s < E.order(); ++s) {
      if (!ex.base.is_idempotent(ex.eta[s])) {
        continue;
      }
      auto e = E.omega(s);
      if (E.multiply(e, s) != e) {
        return s;
      }
    }
    return npos;
  }

}  // namespace aplike
