#pragma once

// Green's relations and the structural predicates used throughout the
// stable-pair and pointlike theory: stabilizers, L-chains, R-trivial bands,
// ER, absolute Type I.
//
// Predicates taking a PointSet W read W as a submonoid and compute Green's
// relations *inside* W (a <=_L b iff a in W b), not in the ambient monoid.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aplike/monoid.hpp"
#include "aplike/point_set.hpp"

namespace aplike {

  struct GreenData {
    std::size_t order = 0;
    // Row-major order x order preorder matrices: leq_L[a*order+b] iff a <=_L b.
    std::vector<std::uint8_t> leq_L;
    std::vector<std::uint8_t> leq_R;
    std::vector<std::uint8_t> leq_J;
    std::vector<PointSet>     L_classes;
    std::vector<PointSet>     R_classes;
    std::vector<PointSet>     J_classes;
    std::vector<PointSet>     H_classes;

    [[nodiscard]] bool L_leq(element_id a, element_id b) const noexcept {
      return leq_L[a * order + b] != 0;
    }
    [[nodiscard]] bool R_leq(element_id a, element_id b) const noexcept {
      return leq_R[a * order + b] != 0;
    }
    [[nodiscard]] bool J_leq(element_id a, element_id b) const noexcept {
      return leq_J[a * order + b] != 0;
    }
  };

  GreenData green(Monoid const& M);

  //! Every element satisfies a^n = a^(n+1) for some n.
  bool is_aperiodic(Monoid const& M);
  //! The same test over the elements of W only (W need not contain 1).
  bool is_aperiodic(Monoid const& M, PointSet const& W);

  //! {m' : m m' = m}
  PointSet stabilizer(Monoid const& M, element_id m);

  //! Least submonoid containing `seed`.
  PointSet submonoid(Monoid const& M, PointSet const& seed);

  bool is_submonoid(Monoid const& M, PointSet const& W);

  //! Members idempotent and pairwise <=_L-comparable in M. Empty is true.
  bool is_L_chain_of_idempotents(Monoid const& M, PointSet const& Y);
  //! As above with <=_L computed inside the submonoid `ambient`.
  bool is_L_chain_of_idempotents(Monoid const& M, PointSet const& Y, PointSet const& ambient);

  //! The L-classes of W (as a monoid in its own right) form a chain.
  //! Throws NotASubmonoid.
  bool is_internal_L_chain(Monoid const& M, PointSet const& W);

  //! W consists of idempotents and its internal R-relation is trivial.
  bool is_R_trivial_band(Monoid const& M, PointSet const& W);

  PointSet minimal_ideal(Monoid const& M);

  //! The idempotent-generated submonoid is R-trivial.
  bool is_ER(Monoid const& M);
  //! ER for the submonoid W read as a monoid.
  bool is_ER(Monoid const& M, PointSet const& W);

  //! W is generated by the union of a chain of its (internal) L-classes.
  bool is_absolute_type_I(Monoid const& M, PointSet const& W);

  //! Internal Green preorder of a submonoid: result[i][j] iff w_i <=_X w_j in
  //! W, where w_0 < w_1 < ... are W's elements. `left` selects L (else R).
  std::vector<PointSet> internal_order(Monoid const& M, PointSet const& W, bool left);

  //! The submonoid W as a stand-alone monoid, elements renumbered in
  //! ascending order of their ids in M; `embedding[i]` is the M-id of i.
  struct Restriction {
    Monoid                  monoid;
    std::vector<element_id> embedding;
  };
  Restriction restrict_to(Monoid const& M, PointSet const& W);

  //! Eggbox diagram in Graphviz DOT: one box per J-class, rows R-classes,
  //! columns L-classes, cells H-classes; idempotents starred.
  std::string eggbox_dot(Monoid const& M, GreenData const& g);

}  // namespace aplike
