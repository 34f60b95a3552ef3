#pragma once

// A-triples (A, B, C): subsets that every relational morphism into an
// aperiodic monoid realizes by a, b, c with abc = ab. A triple is accepted
// when it lies below some (A', B', C') in PL_A(M)^3 satisfying one of
//   (1) B'C' = B'
//   (2) A'B'T = A' and C' = TB'               for some T in PL
//   (3) A' = A'TS, B' = (TS)^i T and C' = ST   for some S, T in PL, i >= 1

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aplike/pointlikes.hpp"

namespace aplike {

  struct TripleReport {
    PointSet A;
    PointSet B;
    PointSet C;
    bool     verdict  = false;
    int      case_tag = 0;  // 1, 2 or 3 when accepted
    std::optional<PointSet> A2;
    std::optional<PointSet> B2;
    std::optional<PointSet> C2;
    std::optional<PointSet> S;  // case 3
    std::optional<PointSet> T;  // cases 2 and 3
    std::size_t             exponent = 0;  // case 3
  };

  //! Lowest-numbered case first, PL members in canonical order. Throws
  //! EmptySet, OutOfRange.
  TripleReport a_triple_decide(PowerMonoid const& PL,
                               PointSet const&    A,
                               PointSet const&    B,
                               PointSet const&    C);

  //! Antichain of maximal accepted triples under componentwise inclusion,
  //! in canonical order of (A, B, C).
  std::vector<TripleReport> a_triple_maximal(PowerMonoid const& PL);

  //! Rechecks containments, membership in PL and the case equations by
  //! setwise multiplication in M.
  std::optional<std::string> certificate_error(Monoid const&       M,
                                               TripleReport const& report,
                                               PowerMonoid const&  PL);

}  // namespace aplike
