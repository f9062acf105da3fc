#pragma once

#include <optional>
#include <utility>

#include "zerograph/graphs.hpp"
#include "zerograph/table_source.hpp"

namespace zerograph {

// Exhaustive pair scan over the non-linear rows of S_n: a common zero
// exists iff the degree pair differs from {n(n-3)/2, (n-1)(n-2)/2}; for
// n >= 9 every adjacent pair must share a zero on an even class too.
// Requires n >= 8.
VerificationReport verify_theorem_a(TableSource& src, int n);

// chi^{(n-2,2)} and chi^{(n-2,1,1)} differ by 1 mod 2 on every class and
// have disjoint vanishing sets. Requires n >= 5.
VerificationReport verify_mod2_congruence(TableSource& src, int n);

// Compares the computed non-vanishing sets at the scanned columns with
// the closed-form B/C/D lists and asserts the pairwise-common-zero
// consequence outside the exceptional family. Requires n >= 10.
VerificationReport verify_nk_lists(TableSource& src, int n);

// All four graphs connected; common-zero graphs have diameter exactly 2,
// the duals diameter <= 2. Requires n >= 7.
VerificationReport verify_connectivity(TableSource& src, int n);

// Every vanishing class of S_n admits a vanishing character outside
// {chi^{(n-2,2)}, chi^{(2,2,1^{n-4})}}. Requires n >= 7.
VerificationReport verify_lemma_3_5(TableSource& src, int n);

// Van(chi^la) = Van(chi^mu) forces mu in {la, la'}.
VerificationReport verify_van_rigidity(TableSource& src, int n);

// First pair of classes of opposite sign where |chi^la| is equal and
// nonzero, in scan order; nullopt when none exists.
std::optional<std::pair<Partition, Partition>> find_signature_pair(const SnTable& t,
                                                                   const Partition& la);

// Such a pair must exist for every non-self-conjugate row; self-conjugate
// rows are reported but never asserted.
VerificationReport verify_signature_pairs(TableSource& src, int n);

// Non-linear characters with coprime degrees have incomparable vanishing
// sets (neither contains the other).
VerificationReport verify_coprime_noncontainment(const CharTable& t);

// Degree classification: the rows of degree n(n-3)/2 are exactly
// {(n-2,2),(2,2,1^{n-4})}, those of degree (n-1)(n-2)/2 exactly
// {(n-2,1,1),(3,1^{n-3})}, and every la with la_1, la'_1 <= n-3 has
// degree above (n-1)(n-2)/2. Requires n >= 9.
VerificationReport verify_min_degree(TableSource& src, int n);

// Zero-equivalence between S_n rows and their A_n constituents.
VerificationReport check_lemma_3_1(const SnTable& sn, const AnTable& an);

}  // namespace zerograph
