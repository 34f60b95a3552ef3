#include "aplike/inevitability.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <set>

#include "aplike/detail/closure.hpp"
#include "aplike/error.hpp"
#include "aplike/expansion.hpp"
#include "aplike/parallel.hpp"
#include "aplike/structure.hpp"

namespace aplike {

  namespace {

    void check_label(PointSet const& label, Monoid const& M, std::string const& item) {
      if (label.universe() != M.order()) {
        throw Error(ErrorCode::LabelOverWrongMonoid,
                    "label of " + item + " has universe " + std::to_string(label.universe())
                        + ", the monoid has order " + std::to_string(M.order()));
      }
      if (label.empty()) {
        throw Error(ErrorCode::EmptySet, "label of " + item + " is empty");
      }
    }

  }  // namespace

  void validate(LabelledGraph const& graph, Monoid const& M) {
    if (graph.edge_labels.size() != graph.edges.size()) {
      throw Error(ErrorCode::InvalidInput, "every edge needs a label");
    }
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      check_label(graph.vertex_labels[v], M, "v" + std::to_string(v));
    }
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      auto const& edge = graph.edges[e];
      if (edge.src >= graph.vertex_count() || edge.dst >= graph.vertex_count()) {
        throw Error(ErrorCode::InvalidInput,
                    "edge e" + std::to_string(e) + " refers to a missing vertex");
      }
      check_label(graph.edge_labels[e], M, "e" + std::to_string(e));
    }
  }

  std::vector<std::pair<element_id, element_id>> WitnessMorphism::relation() const {
    std::vector<std::pair<element_id, element_id>> result;
    for (element_id m = 0; m < image.size(); ++m) {
      image[m].for_each([&](element_id n) { result.emplace_back(m, n); });
    }
    return result;
  }

  WitnessMorphism pair_relation(Monoid const&                  M,
                                Monoid const&                  N,
                                std::vector<element_id> const& genmap,
                                std::string                    name) {
    return pair_relation(
        std::make_shared<Monoid const>(M), std::make_shared<Monoid const>(N), genmap, std::move(name));
  }

  WitnessMorphism pair_relation(std::shared_ptr<Monoid const>  source,
                                std::shared_ptr<Monoid const>  target,
                                std::vector<element_id> const& genmap,
                                std::string                    name) {
    auto const& M    = *source;
    auto const& N    = *target;
    auto const& gens = M.generators();
    if (genmap.size() != gens.size()) {
      throw Error(ErrorCode::AlphabetMismatch,
                  "generator map has " + std::to_string(genmap.size()) + " entries for "
                      + std::to_string(gens.size()) + " letters");
    }
    for (std::size_t x = 0; x < genmap.size(); ++x) {
      if (genmap[x] >= N.order()) {
        throw Error(ErrorCode::AlphabetMismatch,
                    "letter '" + gens[x].letter + "' is sent to " + std::to_string(genmap[x])
                        + ", outside the target");
      }
    }
    WitnessMorphism w{std::move(name),
                      source,
                      target,
                      genmap,
                      std::vector<PointSet>(M.order(), PointSet(N.order())),
                      std::vector<PointSet>(N.order(), PointSet(M.order()))};
    std::deque<std::pair<element_id, element_id>> queue;
    auto visit = [&](element_id m, element_id n) {
      if (!w.image[m].contains(n)) {
        w.image[m].insert(n);
        w.preimage[n].insert(m);
        queue.emplace_back(m, n);
      }
    };
    visit(M.identity(), N.identity());
    while (!queue.empty()) {
      auto const [m, n] = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < gens.size(); ++x) {
        visit(M.multiply(m, gens[x].element), N.multiply(n, genmap[x]));
      }
    }
    return w;
  }

  namespace {

    PointSet domain(PointSet const& label, WitnessMorphism const& w) {
      auto result = PointSet::full(w.target->order());
      label.for_each([&](element_id m) { result &= w.image[m]; });
      return result;
    }

    std::vector<std::size_t> by_domain_size(std::vector<PointSet> const& domains) {
      std::vector<std::size_t> order(domains.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return domains[a].size() < domains[b].size();
      });
      return order;
    }

  }  // namespace

  LabellingResult check_labelling(LabelledGraph const& graph, WitnessMorphism const& witness) {
    validate(graph, *witness.source);
    auto const& N = *witness.target;

    std::vector<PointSet> vdom;
    std::vector<PointSet> edom;
    for (auto const& label : graph.vertex_labels) {
      vdom.push_back(domain(label, witness));
    }
    for (auto const& label : graph.edge_labels) {
      edom.push_back(domain(label, witness));
    }
    LabellingResult result;
    auto const empty = [](PointSet const& d) { return d.empty(); };
    if (std::any_of(vdom.begin(), vdom.end(), empty)
        || std::any_of(edom.begin(), edom.end(), empty)) {
      return result;
    }

    auto const          order = by_domain_size(vdom);
    std::vector<size_t> position(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[order[i]] = i;
    }
    // Edges checked once the later of their endpoints is assigned.
    std::vector<std::vector<std::size_t>> due(order.size());
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      auto const& edge = graph.edges[e];
      due[std::max(position[edge.src], position[edge.dst])].push_back(e);
    }

    std::vector<element_id> value(graph.vertex_count());
    std::vector<element_id> edge_value(graph.edges.size());
    auto edge_fits = [&](std::size_t e) {
      auto const& edge = graph.edges[e];
      bool        ok   = false;
      edom[e].for_each([&](element_id n) {
        if (!ok && N.multiply(value[edge.src], n) == value[edge.dst]) {
          ok            = true;
          edge_value[e] = n;
        }
      });
      return ok;
    };
    auto search = [&](auto&& self, std::size_t depth) -> bool {
      if (depth == order.size()) {
        return true;
      }
      auto const v     = order[depth];
      auto const cands = vdom[v].elements();
      for (auto n : cands) {
        value[v] = n;
        if (std::all_of(due[depth].begin(), due[depth].end(), edge_fits)
            && self(self, depth + 1)) {
          return true;
        }
      }
      return false;
    };
    if (search(search, 0)) {
      result.sat      = true;
      result.vertices = std::move(value);
      result.edges    = std::move(edge_value);
    }
    return result;
  }

  LabelledGraph encode_pointlike(Monoid const& M, PointSet const& Z) {
    check_label(Z, M, "the pointlike");
    LabelledGraph g;
    g.vertex_labels.push_back(Z);
    return g;
  }

  LabelledGraph encode_stable_pair(Monoid const& M, PointSet const& Y, PointSet const& N) {
    auto g = encode_pointlike(M, Y);
    N.for_each([&](element_id n) {
      g.edges.push_back({0, 0});
      g.edge_labels.push_back(M.singleton(n));
    });
    return g;
  }

  LabelledGraph encode_triple(Monoid const&   M,
                              PointSet const& A,
                              PointSet const& B,
                              PointSet const& C) {
    check_label(A, M, "A");
    check_label(B, M, "B");
    check_label(C, M, "C");
    LabelledGraph g;
    g.vertex_labels = {A, M.multiply(A, B)};
    g.edges         = {{0, 1}, {1, 1}};
    g.edge_labels   = {B, C};
    return g;
  }

  bool idempotent_related(PointSet const& Z, WitnessMorphism const& witness) {
    auto const& N = *witness.target;
    for (element_id e = 0; e < N.order(); ++e) {
      if (N.is_idempotent(e) && Z.is_subset_of(witness.preimage[e])) {
        return true;
      }
    }
    return false;
  }

  namespace {

    struct Stop {};

    // One expansion tower, shared by every witness whose letters land on
    // the same generating set of the same library monoid.
    struct Tower {
      std::vector<std::shared_ptr<Monoid const>> levels;
      bool                                       skipped = false;
    };

    struct Builder {
      WitnessConfig const&           config;
      std::shared_ptr<Monoid const>  source;
      WitnessSink const&             sink;
      Census                         census;
      std::set<std::pair<std::vector<element_id>, std::vector<element_id>>> seen;

      void emit(std::string name, std::shared_ptr<Monoid const> const& target,
                std::vector<element_id> const& genmap) {
        census.max_target_order = std::max(census.max_target_order, target->order());
        ++census.witnesses;
        if (!sink(pair_relation(source, target, genmap, std::move(name)))) {
          throw Stop{};
        }
      }

      // Levels 1..depth over the submonoid of L generated by `set`.
      Tower tower(Monoid const& L, std::vector<element_id> const& set) {
        Tower t;
        if (config.tower_depth == 0) {
          return t;
        }
        auto closure = detail::right_closure<element_id, std::hash<element_id>>(
            L.identity(),
            set.size(),
            [&](element_id e, std::size_t x) { return L.multiply(e, set[x]); },
            L.order() + 1,
            "generated submonoid");
        std::vector<Generator> gens;
        for (std::size_t x = 0; x < set.size(); ++x) {
          gens.push_back({"g" + std::to_string(x), closure.right[x]});
        }
        auto const n = closure.elements.size();
        Monoid level = Monoid::trusted(n, detail::table_from_closure(closure), 0, std::move(gens));
        for (std::size_t d = 1; d <= config.tower_depth; ++d) {
          try {
            level = expand(level, config.cap).monoid;
          } catch (Error const& e) {
            if (e.code() != ErrorCode::SizeLimitExceeded) {
              throw;
            }
            t.skipped = true;
            break;
          }
          if (config.variety == Variety::A && !is_aperiodic(level)) {
            break;
          }
          t.levels.push_back(std::make_shared<Monoid const>(level));
        }
        return t;
      }

      // The base witness for `images` when it is new, then its tower.
      void add(std::string const&             name,
               Monoid const&                  L,
               std::vector<element_id> const& images,
               std::vector<element_id> const& set,
               std::optional<Tower>&          tower_of_set) {
        auto const k       = images.size();
        auto       closure = detail::right_closure<element_id, std::hash<element_id>>(
            L.identity(),
            k,
            [&](element_id e, std::size_t x) { return L.multiply(e, images[x]); },
            L.order() + 1,
            "generated submonoid");
        auto                    table = detail::table_from_closure(closure);
        std::vector<element_id> gens_at(k);
        std::vector<Generator>  gens;
        for (std::size_t x = 0; x < k; ++x) {
          gens_at[x] = closure.right[x];
          gens.push_back({source->generators()[x].letter, gens_at[x]});
        }
        if (!seen.emplace(table, gens_at).second) {
          return;
        }
        auto K = std::make_shared<Monoid const>(
            Monoid::trusted(closure.elements.size(), std::move(table), 0, std::move(gens)));
        emit(name, K, gens_at);

        if (config.tower_depth == 0) {
          return;
        }
        if (!tower_of_set) {
          tower_of_set = tower(L, set);
          if (tower_of_set->skipped) {
            ++census.towers_skipped;
          }
        }
        std::vector<element_id> genmap(k);
        for (std::size_t d = 0; d < tower_of_set->levels.size(); ++d) {
          for (std::size_t x = 0; x < k; ++x) {
            auto const at = std::lower_bound(set.begin(), set.end(), images[x]) - set.begin();
            genmap[x]     = tower_of_set->levels[d]->generators()[at].element;
          }
          ++census.tower_witnesses;
          emit(name + "^" + std::to_string(d + 1), tower_of_set->levels[d], genmap);
        }
      }

      // Genmaps grouped by image set, so each tower is built once and
      // dropped before the next set.
      void library_monoid(std::string const& base_name, Monoid const& L) {
        auto const  k = source->generators().size();
        auto const  n = L.order();
        ++census.library_monoids;
        std::map<std::vector<element_id>, std::vector<std::vector<element_id>>> by_set;
        std::vector<element_id> images(k, 0);
        while (true) {
          std::vector<element_id> set(images);
          std::sort(set.begin(), set.end());
          set.erase(std::unique(set.begin(), set.end()), set.end());
          by_set[set].push_back(images);
          std::size_t x = k;
          while (x > 0 && images[x - 1] + 1 == n) {
            images[--x] = 0;
          }
          if (x == 0) {
            break;
          }
          ++images[x - 1];
        }
        for (auto const& [set, maps] : by_set) {
          std::optional<Tower> tower_of_set;
          for (auto const& map : maps) {
            ++census.genmaps;
            std::string name = base_name + "[";
            for (std::size_t x = 0; x < k; ++x) {
              name += (x == 0 ? "" : ",") + source->generators()[x].letter + "->"
                      + std::to_string(map[x]);
            }
            add(name + "]", L, map, set, tower_of_set);
          }
        }
      }

      void self() {
        std::vector<element_id> images;
        for (auto const& g : source->generators()) {
          images.push_back(g.element);
        }
        std::vector<element_id> set(images);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        std::optional<Tower> tower_of_set;
        add("self", *source, images, set, tower_of_set);
      }
    };

  }  // namespace

  Census for_each_witness(Monoid const& M, WitnessConfig const& config, WitnessSink const& sink) {
    Builder b{config, std::make_shared<Monoid const>(M), sink, {}, {}};
    b.census.max_order   = config.max_order;
    b.census.tower_depth = config.tower_depth;
    b.census.variety     = to_string(config.variety);

    std::vector<LibraryMonoid> library;
    if (config.variety == Variety::A) {
      library = aperiodic_library(config.max_order, config.curated);
    } else {
      library = full_library(config.max_order);
      if (config.curated) {
        for (auto& entry : curated_aperiodic()) {
          library.push_back(std::move(entry));
        }
      }
    }
    try {
      if (config.variety == Variety::M || is_aperiodic(M)) {
        b.self();
      }
      for (auto const& entry : library) {
        b.library_monoid(entry.name, entry.monoid);
      }
    } catch (Stop const&) {
    }
    return b.census;
  }

  WitnessSet build_witnesses(Monoid const& M, WitnessConfig const& config) {
    WitnessSet ws;
    ws.census = for_each_witness(M, config, [&](WitnessMorphism&& w) {
      ws.witnesses.push_back(std::move(w));
      return true;
    });
    return ws;
  }

  namespace {

    // Index of the first witness in `list` that refutes the graph, or
    // list.size().
    std::size_t first_refuting(LabelledGraph const&                graph,
                               std::vector<WitnessMorphism> const& list,
                               unsigned                            threads) {
      std::atomic<std::size_t> first{list.size()};
      parallel_for(list.size(), threads, [&](std::size_t i) {
        if (i > first.load()) {
          return;
        }
        if (!check_labelling(graph, list[i]).sat) {
          auto current = first.load();
          while (i < current && !first.compare_exchange_weak(current, i)) {
          }
        }
      });
      return first.load();
    }

  }  // namespace

  SweepResult witness_sweep(LabelledGraph const& graph,
                            WitnessSet const&    witnesses,
                            unsigned             threads) {
    auto const& list  = witnesses.witnesses;
    auto const  first = first_refuting(graph, list, threads);
    SweepResult result;
    result.census = witnesses.census;
    if (first < list.size()) {
      result.refuted       = true;
      result.witness_index = first;
      result.witness       = list[first];
    }
    return result;
  }

  SweepResult witness_sweep(LabelledGraph const& graph,
                            Monoid const&        M,
                            WitnessConfig const& config) {
    validate(graph, M);
    std::size_t const            batch = 256;
    std::vector<WitnessMorphism> pending;
    std::size_t                  offset = 0;
    SweepResult                  result;
    auto flush = [&] {
      auto const first = first_refuting(graph, pending, config.threads);
      if (first < pending.size()) {
        result.refuted       = true;
        result.witness_index = offset + first;
        result.witness       = std::move(pending[first]);
      }
      offset += pending.size();
      pending.clear();
      return !result.refuted;
    };
    result.census = for_each_witness(M, config, [&](WitnessMorphism&& w) {
      pending.push_back(std::move(w));
      return pending.size() < batch || flush();
    });
    if (!result.refuted && !pending.empty()) {
      flush();
    }
    return result;
  }

}  // namespace aplike
