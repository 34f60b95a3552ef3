#include "aplike/structure.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "aplike/cliques.hpp"
#include "aplike/error.hpp"

namespace aplike {

  namespace {

    std::vector<PointSet> classes_of(std::size_t n, std::vector<std::uint8_t> const& leq) {
      std::vector<PointSet> classes;
      PointSet              assigned(n);
      for (element_id a = 0; a < n; ++a) {
        if (assigned.contains(a)) {
          continue;
        }
        PointSet cls(n);
        for (element_id b = a; b < n; ++b) {
          if (leq[a * n + b] != 0 && leq[b * n + a] != 0) {
            cls.insert(b);
            assigned.insert(b);
          }
        }
        classes.push_back(std::move(cls));
      }
      return classes;
    }

    void require_submonoid(Monoid const& M, PointSet const& W) {
      if (!is_submonoid(M, W)) {
        throw Error(ErrorCode::NotASubmonoid,
                    "the given set is not closed under products or lacks the identity");
      }
    }

    bool all_comparable(std::vector<PointSet> const& order) {
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
          if (!order[i].contains(static_cast<element_id>(j))
              && !order[j].contains(static_cast<element_id>(i))) {
            return false;
          }
        }
      }
      return true;
    }

    bool antisymmetric(std::vector<PointSet> const& order) {
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
          if (order[i].contains(static_cast<element_id>(j))
              && order[j].contains(static_cast<element_id>(i))) {
            return false;
          }
        }
      }
      return true;
    }

    // a in ambient * b
    bool left_below(Monoid const& M, element_id a, element_id b, PointSet const& ambient) {
      bool found = false;
      ambient.for_each([&](element_id m) { found = found || M.multiply(m, b) == a; });
      return found;
    }

  }  // namespace

  GreenData green(Monoid const& M) {
    std::size_t const n = M.order();
    GreenData         g;
    g.order = n;
    g.leq_L.assign(n * n, 0);
    g.leq_R.assign(n * n, 0);
    g.leq_J.assign(n * n, 0);
    for (element_id b = 0; b < n; ++b) {
      for (element_id m = 0; m < n; ++m) {
        g.leq_L[M.multiply(m, b) * n + b] = 1;
        g.leq_R[M.multiply(b, m) * n + b] = 1;
      }
      for (element_id m = 0; m < n; ++m) {
        auto mb = M.multiply(m, b);
        for (element_id k = 0; k < n; ++k) {
          g.leq_J[M.multiply(mb, k) * n + b] = 1;
        }
      }
    }
    g.L_classes = classes_of(n, g.leq_L);
    g.R_classes = classes_of(n, g.leq_R);
    g.J_classes = classes_of(n, g.leq_J);
    for (auto const& l : g.L_classes) {
      for (auto const& r : g.R_classes) {
        auto h = l & r;
        if (!h.empty()) {
          g.H_classes.push_back(std::move(h));
        }
      }
    }
    std::sort(g.H_classes.begin(), g.H_classes.end(), [](auto const& x, auto const& y) {
      return x.first() < y.first();
    });
    return g;
  }

  bool is_aperiodic(Monoid const& M) {
    return is_aperiodic(M, M.all());
  }

  bool is_aperiodic(Monoid const& M, PointSet const& W) {
    bool ok = true;
    W.for_each([&](element_id a) {
      auto e = M.omega(a);
      ok     = ok && M.multiply(e, a) == e;
    });
    return ok;
  }

  PointSet stabilizer(Monoid const& M, element_id m) {
    PointSet result(M.order());
    for (element_id x = 0; x < M.order(); ++x) {
      if (M.multiply(m, x) == m) {
        result.insert(x);
      }
    }
    return result;
  }

  PointSet submonoid(Monoid const& M, PointSet const& seed) {
    auto                    gens = seed.elements();
    PointSet                reached(M.order());
    std::vector<element_id> queue{M.identity()};
    reached.insert(M.identity());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto g : gens) {
        auto next = M.multiply(queue[i], g);
        if (!reached.contains(next)) {
          reached.insert(next);
          queue.push_back(next);
        }
      }
    }
    return reached;
  }

  bool is_submonoid(Monoid const& M, PointSet const& W) {
    if (W.universe() != M.order() || !W.contains(M.identity())) {
      return false;
    }
    return M.multiply(W, W).is_subset_of(W);
  }

  bool is_L_chain_of_idempotents(Monoid const& M, PointSet const& Y) {
    return is_L_chain_of_idempotents(M, Y, M.all());
  }

  bool is_L_chain_of_idempotents(Monoid const& M, PointSet const& Y, PointSet const& ambient) {
    auto elems = Y.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!M.is_idempotent(elems[i])) {
        return false;
      }
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        if (!left_below(M, elems[i], elems[j], ambient)
            && !left_below(M, elems[j], elems[i], ambient)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<PointSet> internal_order(Monoid const& M, PointSet const& W, bool left) {
    auto const            elems = W.elements();
    std::size_t const     k     = elems.size();
    std::vector<PointSet> ideals;
    ideals.reserve(k);
    for (auto b : elems) {
      ideals.push_back(left ? M.multiply(W, M.singleton(b)) : M.multiply(M.singleton(b), W));
    }
    std::vector<PointSet> order(k, PointSet(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (ideals[j].contains(elems[i])) {
          order[i].insert(static_cast<element_id>(j));
        }
      }
    }
    return order;
  }

  bool is_internal_L_chain(Monoid const& M, PointSet const& W) {
    require_submonoid(M, W);
    return all_comparable(internal_order(M, W, true));
  }

  bool is_R_trivial_band(Monoid const& M, PointSet const& W) {
    require_submonoid(M, W);
    bool band = true;
    W.for_each([&](element_id a) { band = band && M.is_idempotent(a); });
    return band && antisymmetric(internal_order(M, W, false));
  }

  PointSet minimal_ideal(Monoid const& M) {
    // The product of all elements lies in every principal ideal, hence in
    // the minimal one, which is therefore its principal ideal.
    element_id z = M.identity();
    for (element_id a = 0; a < M.order(); ++a) {
      z = M.multiply(z, a);
    }
    auto zs = M.singleton(z);
    return M.multiply(M.multiply(M.all(), zs), M.all());
  }

  bool is_ER(Monoid const& M) {
    return is_ER(M, M.all());
  }

  bool is_ER(Monoid const& M, PointSet const& W) {
    require_submonoid(M, W);
    auto generated = submonoid(M, M.idempotents() & W);
    return antisymmetric(internal_order(M, generated, false));
  }

  bool is_absolute_type_I(Monoid const& M, PointSet const& W) {
    require_submonoid(M, W);
    auto const        elems = W.elements();
    auto const        order = internal_order(M, W, true);
    std::size_t const k     = elems.size();
    // L-classes of W, each as positions.
    std::vector<PointSet>   classes;
    std::vector<element_id> class_of(k, 0);
    PointSet                assigned(k);
    for (element_id i = 0; i < k; ++i) {
      if (assigned.contains(i)) {
        continue;
      }
      PointSet cls(M.order());
      for (element_id j = i; j < k; ++j) {
        if (order[i].contains(j) && order[j].contains(i)) {
          cls.insert(elems[j]);
          assigned.insert(j);
          class_of[j] = static_cast<element_id>(classes.size());
        }
      }
      classes.push_back(std::move(cls));
    }
    std::size_t const     c = classes.size();
    std::vector<PointSet> comparable(c, PointSet(c));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto ci = class_of[i];
        auto cj = class_of[j];
        if (ci != cj && order[i].contains(static_cast<element_id>(j))) {
          comparable[ci].insert(cj);
          comparable[cj].insert(ci);
        }
      }
    }
    // Generation is monotone, so maximal chains suffice.
    for (auto const& chain : maximal_cliques(comparable)) {
      PointSet generators(M.order());
      chain.for_each([&](element_id ci) { generators |= classes[ci]; });
      if (submonoid(M, generators) == W) {
        return true;
      }
    }
    return false;
  }

  Restriction restrict_to(Monoid const& M, PointSet const& W) {
    require_submonoid(M, W);
    auto const              elems = W.elements();
    std::size_t const       k     = elems.size();
    std::vector<element_id> index(M.order(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      index[elems[i]] = static_cast<element_id>(i);
    }
    std::vector<element_id> table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j] = index[M.multiply(elems[i], elems[j])];
      }
    }
    auto identity = index[M.identity()];
    auto gens     = greedy_generators(k, table, identity);
    return {Monoid::trusted(k, std::move(table), identity, std::move(gens)), elems};
  }

  std::string eggbox_dot(Monoid const& M, GreenData const& g) {
    std::ostringstream out;
    out << "digraph eggbox {\n  node [shape=plaintext];\n";
    for (std::size_t j = 0; j < g.J_classes.size(); ++j) {
      auto const& J = g.J_classes[j];
      out << "  J" << j << " [label=<<table border=\"1\" cellborder=\"1\" cellspacing=\"0\">";
      for (auto const& R : g.R_classes) {
        if (!R.is_subset_of(J)) {
          continue;
        }
        out << "<tr>";
        for (auto const& L : g.L_classes) {
          if (!L.is_subset_of(J)) {
            continue;
          }
          out << "<td>";
          bool first = true;
          (R & L).for_each([&](element_id a) {
            out << (first ? "" : " ") << a << (M.is_idempotent(a) ? "*" : "");
            first = false;
          });
          out << "</td>";
        }
        out << "</tr>";
      }
      out << "</table>>];\n";
    }
    // Hasse-style edges between J-classes: J_i above J_k when k <=_J i.
    for (std::size_t i = 0; i < g.J_classes.size(); ++i) {
      for (std::size_t k = 0; k < g.J_classes.size(); ++k) {
        if (i == k || !g.J_leq(g.J_classes[k].first(), g.J_classes[i].first())) {
          continue;
        }
        bool covered = true;
        for (std::size_t m = 0; m < g.J_classes.size() && covered; ++m) {
          if (m == i || m == k) {
            continue;
          }
          auto a = g.J_classes[i].first(), b = g.J_classes[k].first(),
               c = g.J_classes[m].first();
          if (g.J_leq(b, c) && g.J_leq(c, a)) {
            covered = false;
          }
        }
        if (covered) {
          out << "  J" << i << " -> J" << k << ";\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace aplike
