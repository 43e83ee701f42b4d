#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bic/rational.hpp"

namespace bic {

/// Joint probability mass function over M finite-alphabet variables, stored
/// as a dense table in mixed-radix order (the last variable varies fastest).
/// Probabilities are doubles; an exact-rational entry path is provided for
/// inputs that must sum to one exactly.
struct JointPMF {
  std::vector<unsigned> alphabet;  // size per variable
  std::vector<double> p;           // product(alphabet) entries

  unsigned var_count() const { return static_cast<unsigned>(alphabet.size()); }
  std::size_t table_size() const;

  /// Validates shape, nonnegativity and total mass 1 within 1e-12.
  static JointPMF from_table(std::vector<unsigned> alphabet, std::vector<double> p);
  /// Exact-rational entries; the sum must be exactly one.
  static JointPMF from_rational_table(std::vector<unsigned> alphabet,
                                      const std::vector<Rational>& p);
};

/// Shannon entropy in bits of the marginal over the given variable subset.
double marginal_entropy(const JointPMF& pmf, const std::vector<unsigned>& vars);

/// Joint entropy in bits of all variables.
double joint_entropy(const JointPMF& pmf);

/// Sum over j = 1..M of H(window of w cyclically consecutive variables
/// starting at j). These windows are exactly the interference-free position
/// sets of the cyclic configuration family with M - w interfered carriers.
double window_entropy_sum(const JointPMF& pmf, unsigned w);

struct SlidingWindowResult {
  bool holds = false;
  std::vector<double> chain;  // chain[w-1] = window_entropy_sum(pmf, w) / w
};

/// The sliding-window chain (1/w) * sum_j H(window_j of size w) must be
/// non-increasing in w. `holds` uses a 1e-9 slack for float noise; a
/// violation beyond that indicates an implementation bug, not a
/// counterexample.
SlidingWindowResult sliding_window_check(const JointPMF& pmf);

/// Seeded Dirichlet(1,..,1)-style draw: normalized exponentials of uniform
/// variates. Deterministic per seed. Product alphabet capped at 10^4.
JointPMF random_pmf(const std::vector<unsigned>& alphabet, std::uint64_t seed);

/// Text form: first line "sizes a1 a2 ... aM", then one "i1 i2 ... iM prob"
/// line per nonzero entry. '#' starts a comment.
JointPMF parse_pmf_text(std::istream& in);

}  // namespace bic
