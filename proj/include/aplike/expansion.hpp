#pragma once

// The cut expansion: the submonoid of the triangular product M ◊ M
// generated by the matrices (x, {(1,x),(x,1)}; 0, x). Its
// elements are kept in canonical form (diagonal, sorted cut set); the full
// product M ◊ M is never built.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "aplike/monoid.hpp"

namespace aplike {

  //! (diag, cuts) where every cut (u, v) satisfies u v = diag. Cuts are
  //! stored sorted and unique, encoded u * order + v.
  struct ExpansionElement {
    std::size_t                base = 0;  // Monoid::fingerprint() of the base
    element_id                 diag = 0;
    std::vector<std::uint64_t> cuts;

    [[nodiscard]] std::vector<std::pair<element_id, element_id>> cut_pairs(
        std::size_t order) const;

    friend bool operator==(ExpansionElement const&, ExpansionElement const&) = default;
  };

  struct ExpansionElementHash {
    std::size_t operator()(ExpansionElement const& e) const noexcept;
  };

  //! [w] in the expansion computed directly from the factorizations w = uv:
  //! cuts {([u]_M, [v]_M)}; the empty word gives (1, {}).
  ExpansionElement hs_word(Monoid const& M, Word const& word);

  //! (m, C)(m', C') = (m m', m C' ∪ C m'). Throws BaseMismatch when either
  //! operand belongs to another monoid.
  ExpansionElement hs_multiply(Monoid const&           M,
                               ExpansionElement const& lhs,
                               ExpansionElement const& rhs);

  struct ExpansionMonoid {
    Monoid                        base;
    Monoid                        monoid;    // same alphabet as base
    std::vector<ExpansionElement> elements;  // elements[i] is element i of monoid
    std::vector<element_id>       eta;       // projection to the diagonal
  };

  //! Throws SizeLimitExceeded past `cap` elements.
  ExpansionMonoid expand(Monoid const& M, std::size_t cap = DEFAULT_ELEMENT_CAP);

  //! expand applied `depth` times; levels[0] expands M. eta_to_base() is the
  //! composite projection from the top level down to M.
  struct ExpansionTower {
    std::vector<ExpansionMonoid> levels;

    [[nodiscard]] Monoid const&           top(Monoid const& M) const;
    [[nodiscard]] std::vector<element_id> eta_to_base(Monoid const& M) const;
  };

  ExpansionTower expand_iterated(Monoid const& M,
                                 std::size_t   depth,
                                 std::size_t   cap = DEFAULT_ELEMENT_CAP);

  //! η(Stab([w] in the expansion)), sorted from <=_L-greatest to least in
  //! Stab([w]_M), and whether it is an L-chain there.
  struct StabProjection {
    std::vector<element_id> chain;
    bool                    ok = false;
  };

  StabProjection stab_projection(ExpansionMonoid const& ex, Word const& word);
  StabProjection stab_projection(Monoid const& M,
                                 Word const&   word,
                                 std::size_t   cap = DEFAULT_ELEMENT_CAP);

  //! First element of the expansion lying over an idempotent of the base
  //! whose cyclic subsemigroup has a non-trivial cycle; npos when every such
  //! fiber is aperiodic.
  std::size_t eta_fiber_violation(ExpansionMonoid const& ex);

}  // namespace aplike
