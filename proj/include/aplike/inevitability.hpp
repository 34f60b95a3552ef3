#pragma once

// Labelled graphs over a monoid M and their inevitability with respect to
// concrete finite targets. A witness is the canonical relational morphism
// M -> N induced by sending each generator letter of M to an element of N.
// A labelling is refuted by a witness when no commuting singleton
// relabelling over N is related to it.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aplike/library.hpp"
#include "aplike/monoid.hpp"
#include "aplike/point_set.hpp"
#include "aplike/stable_pairs.hpp"

namespace aplike {

  struct LabelledGraph {
    struct Edge {
      std::size_t src = 0;
      std::size_t dst = 0;
    };
    std::vector<PointSet> vertex_labels;
    std::vector<Edge>     edges;
    std::vector<PointSet> edge_labels;

    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return vertex_labels.size();
    }
  };

  //! Throws InvalidInput for dangling edges or missing labels, EmptySet for
  //! an empty label, LabelOverWrongMonoid for labels of another size.
  void validate(LabelledGraph const& graph, Monoid const& M);

  struct WitnessMorphism {
    std::string                   name;
    std::shared_ptr<Monoid const> source;
    std::shared_ptr<Monoid const> target;
    std::vector<element_id>       genmap;    // letter index of source -> target element
    std::vector<PointSet>   image;     // image[m] = mφ, over the target
    std::vector<PointSet>   preimage;  // preimage[n] = nφ⁻¹, over the source

    [[nodiscard]] std::vector<std::pair<element_id, element_id>> relation() const;
  };

  //! The submonoid of M x N generated by (x_M, x_N), by breadth-first
  //! closure. Throws AlphabetMismatch when genmap is not total on M's
  //! letters or names elements outside N.
  WitnessMorphism pair_relation(Monoid const&                  M,
                                Monoid const&                  N,
                                std::vector<element_id> const& genmap,
                                std::string                    name = {});
  WitnessMorphism pair_relation(std::shared_ptr<Monoid const>  M,
                                std::shared_ptr<Monoid const>  N,
                                std::vector<element_id> const& genmap,
                                std::string                    name = {});

  struct LabellingResult {
    bool                    sat = false;
    std::vector<element_id> vertices;
    std::vector<element_id> edges;
  };

  //! Backtracking search for a commuting singleton labelling over the
  //! target, related to the graph's labels. Vertices are assigned before
  //! edges, each in order of increasing domain size.
  LabellingResult check_labelling(LabelledGraph const& graph, WitnessMorphism const& witness);

  LabelledGraph encode_pointlike(Monoid const& M, PointSet const& Z);
  LabelledGraph encode_stable_pair(Monoid const& M, PointSet const& Y, PointSet const& N);
  LabelledGraph encode_triple(Monoid const& M,
                              PointSet const& A,
                              PointSet const& B,
                              PointSet const& C);

  //! Some idempotent e of the target has Z ⊆ eφ⁻¹.
  bool idempotent_related(PointSet const& Z, WitnessMorphism const& witness);

  struct WitnessConfig {
    Variety     variety     = Variety::A;
    std::size_t max_order   = MAX_EXHAUSTIVE_ORDER;
    bool        curated     = true;
    std::size_t tower_depth = 0;
    std::size_t cap         = 4096;  // element cap for tower levels
    unsigned    threads     = 1;
  };

  struct Census {
    std::size_t library_monoids    = 0;
    std::size_t genmaps            = 0;
    std::size_t witnesses          = 0;
    std::size_t max_target_order   = 0;
    std::size_t max_order          = 0;
    std::size_t tower_depth        = 0;
    std::size_t tower_witnesses    = 0;
    std::size_t towers_skipped     = 0;
    std::string variety;
  };

  struct WitnessSet {
    std::vector<WitnessMorphism> witnesses;
    Census                       census;
  };

  //! Receives each witness in order; returning false stops the stream.
  using WitnessSink = std::function<bool(WitnessMorphism&&)>;

  //! Canonical relational morphisms from M into every library monoid for
  //! every assignment of M's letters, restricted to the letter-generated
  //! submonoid and deduplicated, each followed by the expansion tower of
  //! its target up to the configured depth (levels over the element cap
  //! are skipped and counted). Variety A uses aperiodic targets only (and
  //! M itself when aperiodic); variety M adds every monoid of the
  //! exhaustive range and M itself. The census covers the witnesses
  //! delivered before the sink stopped the stream.
  Census for_each_witness(Monoid const& M, WitnessConfig const& config, WitnessSink const& sink);

  WitnessSet build_witnesses(Monoid const& M, WitnessConfig const& config);

  struct SweepResult {
    bool                           refuted = false;
    std::optional<std::size_t>     witness_index;  // first refuting witness
    std::optional<WitnessMorphism> witness;
    Census                         census;
  };

  //! check_labelling against every witness; the reported witness is the
  //! first refuting one in witness order whatever the thread count.
  SweepResult witness_sweep(LabelledGraph const& graph,
                            WitnessSet const&    witnesses,
                            unsigned             threads = 1);

  //! As above over the witnesses of for_each_witness, generated and
  //! checked in batches so the whole set is never held at once. Stops
  //! after the batch holding the first refutation.
  SweepResult witness_sweep(LabelledGraph const& graph,
                            Monoid const&        M,
                            WitnessConfig const& config);

}  // namespace aplike
