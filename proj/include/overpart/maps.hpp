#pragma once

#include <map>
#include <string>
#include <vector>

#include "overpart/partitions.hpp"
#include "overpart/qseries.hpp"

namespace overpart {

/// The unique (x, y, s) with x > 0, y >= 0, s >= 0, x + y = n and
/// s x + (s + 1) y = n'.
struct LemmaSolution {
  int x = 0;
  int y = 0;
  int s = 0;

  bool operator==(const LemmaSolution&) const = default;
};

LemmaSolution solve_system(int n, int nprime);

/// G_t -> P_t. Every part is reduced mod t (the parts with quotient s + 1
/// rotated behind the others), the quotients reappear as non-overlined t's,
/// and zero residues are deleted together with any overline they carried.
/// Throws NotInDomain unless in_Gt(pi, t).
Overpartition phi(const Overpartition& pi, int t);

/// B_t -> P_t. All t's from both components become non-overlined t's; the
/// other parts of the second component are kept.
Overpartition psi(const Bipartition& beta, int t);

/// Number of preimages of mu under either map: 2 m_t(mu), plus one when mu
/// has a part other than t.
int expected_fiber_size(const Overpartition& mu, int t);

template <class Member>
struct PreimageReport {
  Overpartition mu;
  int t = 1;
  std::vector<Member> fiber;
  int same_overlines = 0;
  int one_more_overline = 0;
  int expected_size = 0;
};

/// The full fiber of phi over mu, in increasing length, the plain member
/// before its overlined variant. Throws NotInDomain unless in_Pt(mu, t).
PreimageReport<Overpartition> phi_preimages(const Overpartition& mu, int t);

/// The full fiber of psi over mu, by increasing number of t's moved into the
/// second component, the plain member before its overlined variant.
PreimageReport<Bipartition> psi_preimages(const Overpartition& mu, int t);

enum class MapKind { phi, psi };

/// Fibers found by applying the map to every member of G_t (or B_t) of
/// weight <= max_n and grouping by image.
std::map<Overpartition, std::vector<Overpartition>> phi_fibers_by_enumeration(int t, int max_n);
std::map<Overpartition, std::vector<Bipartition>> psi_fibers_by_enumeration(int t, int max_n);

struct FiberCheckReport {
  bool pass = true;
  int checked = 0;
  std::string first_failure;  // empty when pass
};

/// Compares every constructed fiber over P_t (weight <= max_n) with the
/// brute-force fiber as sets, and checks the cardinality and overline
/// statistics of each.
FiberCheckReport check_fibers(int t, int max_n, MapKind which, Exec exec = Exec::automatic);

struct FiberIdentityReport {
  bool pass = true;
  int checked = 0;
  std::string first_failure;
  QSeries predicted = QSeries::zero(0);   // sum over mu of ((1 - delta) + (1 + z) m) z^o q^|mu|
  QSeries enumerated = QSeries::zero(0);  // gf of G_t (phi) or B_t (psi)
};

/// For each mu in P_t with weight <= max_n, confirms that the fiber's
/// overline polynomial equals ((1 - delta) + (1 + z) m(mu)) z^o(mu), then
/// checks that the aggregated series equals the enumerated generating
/// function of the domain.
FiberIdentityReport verify_fiber_identity(int t, int max_n, MapKind which, Exec exec = Exec::automatic);

/// ((1 - delta_{l,m}) + (1 + z) m) z^o for a single mu.
ZLaurentPoly fiber_weight(const Overpartition& mu, int t);

}  // namespace overpart
