#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "npc/semantics.hpp"

namespace npc {

/// An n-subset of a finite carrier: one block per dimension, each a bitmask
/// over the carrier points. Blocks may overlap and need not cover.
struct NSubset {
  int carrier_size = 0;
  std::vector<std::uint64_t> blocks;

  int n() const { return static_cast<int>(blocks.size()); }
  std::uint64_t full_mask() const {
    return carrier_size == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << carrier_size) - 1);
  }
  friend bool operator==(const NSubset&, const NSubset&) = default;
};

/// Blockwise generalised if-then-else on n-subsets:
/// block j of the result is the union over i of (y0.block_i n ys[i].block_j).
NSubset q_nsubsets(const NSubset& y0, const std::vector<NSubset>& ys);

bool is_npartition(const NSubset& s);

/// An n-subset with pairwise disjoint, jointly covering blocks.
class NPartition {
 public:
  explicit NPartition(NSubset s);
  const NSubset& subset() const { return subset_; }
  /// 1-based block index of a carrier point.
  int block_of(int point) const;
  friend bool operator==(const NPartition&, const NPartition&) = default;

 private:
  NSubset subset_;
};

/// A finite algebra in the pure signature (q, e_1..e_n), with an explicit
/// (n+1)-ary operation table over integer element codes.
struct FiniteAlgebra {
  std::string name;
  int n = 2;
  int size = 0;
  std::vector<int> constants;          // constants[k-1] = code of e_k
  std::vector<int> q_table;            // length size^(n+1)
  std::vector<std::string> element_names;

  static constexpr long long kTableGuard = 20'000'000;

  long long q_index(int a, std::span<const int> bs) const;
  int q(int a, std::span<const int> bs) const;
  int q(int a, std::initializer_list<int> bs) const { return q(a, std::span<const int>(bs)); }

  /// Enforces the nCH law q(e_i, b) = b_i over the whole table.
  void validate_nch() const;
};

/// The n-element pure algebra of generalised truth values: q(e_i, b) = b_i.
FiniteAlgebra algebra_n(int n);

/// The algebra of all n-partitions of a finite carrier, with q computed by
/// the blockwise set formula. Element code = base-n word over the sorted
/// carrier (digit t = block of point t - 1). Checks at construction that
/// partitions are closed under q.
FiniteAlgebra partition_algebra(const std::vector<std::string>& carrier, int n);

/// Code <-> partition conversions for partition_algebra elements.
NPartition partition_of_code(int code, int carrier_size, int n);
int code_of_partition(const NPartition& p);

/// One identity check: pass/fail, a witness on failure, and how much of the
/// instance space was covered.
struct IdentityCheck {
  std::string name;
  bool pass = true;
  std::string witness;
  long long cases = 0;
  bool exhaustive = true;
};

struct IdentityReport {
  std::string algebra;
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Checks B1, B2, B4 and B3 (with sigma ranging over the pure signature:
/// q and the constants). Instance spaces above `sample_threshold` are
/// sampled with the seeded generator instead of enumerated.
IdentityReport check_identities(const FiniteAlgebra& a, std::uint64_t seed = 1,
                                long long sample_threshold = 100000);

/// A tuple (I_1..I_n) of disjoint subsets of the carrier, stored as sorted
/// code lists.
struct Multideal {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const Multideal&, const Multideal&) = default;
};

/// Disjointness plus the closure conditions m1-m3, checked by exhaustive
/// quantification.
bool is_multideal(const FiniteAlgebra& a, const Multideal& ideal);

/// All multideals, enumerated deterministically by assignment (each element
/// to one block or none).
std::vector<Multideal> all_multideals(const FiniteAlgebra& a);

/// The multideals whose blocks cover the whole carrier.
std::vector<Multideal> ultramultideals(const FiniteAlgebra& a);

/// True iff the componentwise intersection of all ultramultideals containing
/// the multideal equals it. False when no ultramultideal contains it.
bool intersection_property(const FiniteAlgebra& a, const Multideal& ideal);

/// Report for the isomorphism Par(X) = n^X: the blockwise-set q against the
/// pointwise power q under the map p -> (x -> block of x).
struct IsoReport {
  int carrier_size = 0;
  int n = 0;
  bool bijective = false;
  bool preserves_constants = false;
  bool preserves_q = false;
  long long q_cases = 0;
  std::string detail;
  bool pass() const { return bijective && preserves_constants && preserves_q; }
};

IsoReport iso_par_to_power(const std::vector<std::string>& carrier, int n);

/// Evaluates a formula to an n-partition under an assignment of partitions
/// to its variables.
NPartition eval_partition(const Formula& f, const std::map<std::string, NPartition>& assignment,
                          int carrier_size, int n);

/// Agreement between the blockwise reading of a sequent (intersection of
/// left i-blocks contained in the union of right i-blocks, over all
/// partition assignments) and the environment-enumeration oracle.
struct ReadingReport {
  bool oracle_valid = false;
  bool partition_valid = false;
  long long assignments = 0;
  bool agree() const { return oracle_valid == partition_valid; }
};

ReadingReport sequent_partition_reading(const Sequent& s, int carrier_size);

}  // namespace npc
