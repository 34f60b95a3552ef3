#include "aplike/triples.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "aplike/error.hpp"

namespace aplike {

  namespace {

    using Index = std::size_t;

    void require_nonempty(Monoid const& M, PointSet const& Z, char const* name) {
      if (Z.universe() != M.order()) {
        throw Error(ErrorCode::OutOfRange,
                    std::string(name) + " is not a subset of the monoid's elements");
      }
      if (Z.empty()) {
        throw Error(ErrorCode::EmptySet, std::string(name) + " must be nonempty");
      }
    }

    std::vector<Index> supersets(PowerMonoid const& PL, PointSet const& Z) {
      std::vector<Index> result;
      for (Index i = 0; i < PL.size(); ++i) {
        if (Z.is_subset_of(PL.member(i))) {
          result.push_back(i);
        }
      }
      return result;
    }

    // (TS)^i T for i = 1, 2, ... until the sequence repeats.
    std::vector<Index> orbit(PowerMonoid const& PL, Index S, Index T) {
      auto const         X = PL.product(T, S);
      std::vector<Index> result;
      std::vector<bool>  seen(PL.size(), false);
      for (auto B = PL.product(X, T); !seen[B]; B = PL.product(X, B)) {
        seen[B] = true;
        result.push_back(B);
      }
      return result;
    }

    struct Found {
      int   case_tag = 0;
      Index A = 0, B = 0, C = 0, S = 0, T = 0;
      std::size_t exponent = 0;
    };

    TripleReport to_report(PowerMonoid const& PL,
                           PointSet const&    A,
                           PointSet const&    B,
                           PointSet const&    C,
                           Found const&       f) {
      TripleReport r;
      r.A        = A;
      r.B        = B;
      r.C        = C;
      r.verdict  = true;
      r.case_tag = f.case_tag;
      r.A2       = PL.member(f.A);
      r.B2       = PL.member(f.B);
      r.C2       = PL.member(f.C);
      if (f.case_tag >= 2) {
        r.T = PL.member(f.T);
      }
      if (f.case_tag == 3) {
        r.S        = PL.member(f.S);
        r.exponent = f.exponent;
      }
      return r;
    }

  }  // namespace

  TripleReport a_triple_decide(PowerMonoid const& PL,
                               PointSet const&    A,
                               PointSet const&    B,
                               PointSet const&    C) {
    auto const& M = PL.base();
    require_nonempty(M, A, "A");
    require_nonempty(M, B, "B");
    require_nonempty(M, C, "C");
    TripleReport rejected;
    rejected.A = A;
    rejected.B = B;
    rejected.C = C;

    auto const SA = supersets(PL, A);
    auto const SB = supersets(PL, B);
    auto const SC = supersets(PL, C);
    if (SA.empty() || SB.empty() || SC.empty()) {
      return rejected;
    }
    auto const in_SB = [&](Index i) { return B.is_subset_of(PL.member(i)); };
    auto const in_SC = [&](Index i) { return C.is_subset_of(PL.member(i)); };

    for (auto b : SB) {
      for (auto c : SC) {
        if (PL.product(b, c) == b) {
          return to_report(PL, A, B, C, {1, SA.front(), b, c});
        }
      }
    }
    for (auto a : SA) {
      for (auto b : SB) {
        auto const ab = PL.product(a, b);
        for (Index t = 0; t < PL.size(); ++t) {
          if (PL.product(ab, t) == a && in_SC(PL.product(t, b))) {
            return to_report(PL, A, B, C, {2, a, b, PL.product(t, b), 0, t});
          }
        }
      }
    }
    for (auto a : SA) {
      for (Index t = 0; t < PL.size(); ++t) {
        auto const at = PL.product(a, t);
        for (Index s = 0; s < PL.size(); ++s) {
          if (PL.product(at, s) != a || !in_SC(PL.product(s, t))) {
            continue;
          }
          auto const powers = orbit(PL, s, t);
          for (std::size_t i = 0; i < powers.size(); ++i) {
            if (in_SB(powers[i])) {
              return to_report(PL, A, B, C, {3, a, powers[i], PL.product(s, t), s, t, i + 1});
            }
          }
        }
      }
    }
    return rejected;
  }

  std::vector<TripleReport> a_triple_maximal(PowerMonoid const& PL) {
    // Every triple satisfying a case, with the first certificate found for it.
    std::map<std::tuple<Index, Index, Index>, Found> found;
    auto record = [&](Found const& f) { found.try_emplace({f.A, f.B, f.C}, f); };

    std::vector<Index> maximal_A;
    for (auto const& Z : maximal_pointlikes(PL)) {
      maximal_A.push_back(*PL.index_of(Z));
    }
    for (Index b = 0; b < PL.size(); ++b) {
      for (Index c = 0; c < PL.size(); ++c) {
        if (PL.product(b, c) == b) {
          for (auto a : maximal_A) {
            record({1, a, b, c});
          }
        }
      }
    }
    for (Index a = 0; a < PL.size(); ++a) {
      for (Index b = 0; b < PL.size(); ++b) {
        auto const ab = PL.product(a, b);
        for (Index t = 0; t < PL.size(); ++t) {
          if (PL.product(ab, t) == a) {
            record({2, a, b, PL.product(t, b), 0, t});
          }
        }
      }
    }
    for (Index t = 0; t < PL.size(); ++t) {
      for (Index s = 0; s < PL.size(); ++s) {
        auto const ts = PL.product(t, s);
        auto const st = PL.product(s, t);
        std::vector<Index> fixed;
        for (Index a = 0; a < PL.size(); ++a) {
          if (PL.product(a, ts) == a) {
            fixed.push_back(a);
          }
        }
        if (fixed.empty()) {
          continue;
        }
        auto const powers = orbit(PL, s, t);
        for (std::size_t i = 0; i < powers.size(); ++i) {
          for (auto a : fixed) {
            record({3, a, powers[i], st, s, t, i + 1});
          }
        }
      }
    }

    // Largest first, so that every dominating triple is seen before the
    // triples it dominates.
    std::vector<Found> candidates;
    for (auto const& [key, f] : found) {
      candidates.push_back(f);
    }
    auto weight = [&](Found const& f) {
      return PL.member(f.A).size() + PL.member(f.B).size() + PL.member(f.C).size();
    };
    std::stable_sort(candidates.begin(), candidates.end(), [&](auto const& x, auto const& y) {
      return weight(x) > weight(y);
    });
    auto below = [&](Found const& x, Found const& y) {
      return PL.member(x.A).is_subset_of(PL.member(y.A))
             && PL.member(x.B).is_subset_of(PL.member(y.B))
             && PL.member(x.C).is_subset_of(PL.member(y.C));
    };
    std::vector<Found> kept;
    for (auto const& f : candidates) {
      if (std::none_of(kept.begin(), kept.end(), [&](Found const& k) { return below(f, k); })) {
        kept.push_back(f);
      }
    }
    std::sort(kept.begin(), kept.end(), [](Found const& x, Found const& y) {
      return std::tie(x.A, x.B, x.C) < std::tie(y.A, y.B, y.C);
    });
    std::vector<TripleReport> result;
    for (auto const& f : kept) {
      result.push_back(to_report(PL, PL.member(f.A), PL.member(f.B), PL.member(f.C), f));
    }
    return result;
  }

  std::optional<std::string> certificate_error(Monoid const&       M,
                                               TripleReport const& r,
                                               PowerMonoid const&  PL) {
    if (!r.verdict) {
      if (r.case_tag != 0 || r.A2 || r.B2 || r.C2 || r.S || r.T) {
        return "a rejected triple carries a certificate";
      }
      return std::nullopt;
    }
    if (!r.A2 || !r.B2 || !r.C2) {
      return "missing A', B' or C'";
    }
    auto const &A2 = *r.A2, &B2 = *r.B2, &C2 = *r.C2;
    if (!r.A.is_subset_of(A2) || !r.B.is_subset_of(B2) || !r.C.is_subset_of(C2)) {
      return "the triple is not below its certificate";
    }
    for (auto const* Z : {&A2, &B2, &C2}) {
      if (!PL.contains(*Z)) {
        return "a certificate component is not pointlike";
      }
    }
    switch (r.case_tag) {
      case 1:
        if (M.multiply(B2, C2) != B2) {
          return "B'C' != B'";
        }
        return std::nullopt;
      case 2: {
        if (!r.T || !PL.contains(*r.T)) {
          return "T missing or not pointlike";
        }
        auto const& T = *r.T;
        if (M.multiply(M.multiply(A2, B2), T) != A2) {
          return "A'B'T != A'";
        }
        if (M.multiply(T, B2) != C2) {
          return "C' != TB'";
        }
        return std::nullopt;
      }
      case 3: {
        if (!r.T || !r.S || !PL.contains(*r.T) || !PL.contains(*r.S) || r.exponent == 0) {
          return "S, T or i missing or invalid";
        }
        auto const& S  = *r.S;
        auto const& T  = *r.T;
        auto const  TS = M.multiply(T, S);
        if (M.multiply(A2, TS) != A2) {
          return "A'TS != A'";
        }
        auto power = T;
        for (std::size_t i = 0; i < r.exponent; ++i) {
          power = M.multiply(TS, power);
        }
        if (power != B2) {
          return "B' != (TS)^i T";
        }
        if (M.multiply(S, T) != C2) {
          return "C' != ST";
        }
        return std::nullopt;
      }
      default:
        return "unknown case";
    }
  }

}  // namespace aplike
