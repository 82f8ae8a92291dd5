#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfs/rootdata.hpp"

namespace mfs::lr {

// Weakly decreasing nonnegative parts; trailing zeros are stripped so that
// equality is equality of partitions.
using Partition = std::vector<long long>;

Partition normalized(Partition p);
long long part_size(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

// Littlewood-Richardson coefficient c^lambda_{mu,nu}: skew fillings of
// lambda/mu of content nu whose reverse reading word (right-to-left,
// top-to-bottom) is a lattice word.  Returns 0 when sizes do not match.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Tensor product of SL(n+1) irreducibles given as partitions with at most
// n+1 rows; LR expansion reduced modulo full columns of n+1 boxes.
std::map<Partition, long long> tensor_via_lr(int n, const Partition& a, const Partition& b);

// Multiplicity of the SL(n+1)-class of lambda inside a (x) b.
long long sl_tensor_multiplicity(int n, const Partition& a, const Partition& b,
                                 const Partition& lambda);

// Conversions between partitions (< = n+1 rows) and dominant SL(n+1) weights.
Partition partition_of_weight(const RootDatum& an, const Weight& w);
Weight weight_of_partition(const RootDatum& an, const Partition& p);

struct SkewFilling {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> rows;  // entries of outer/inner, row by row
};

// Semistandardness plus the reverse-lattice-word condition.
bool is_lr_filling(const SkewFilling& f, std::string* why = nullptr);
std::vector<long long> filling_content(const SkewFilling& f);
std::string ascii_grid(const SkewFilling& f);

// The data of the explicit tensor-product witness for a Gelfand-Tsetlin
// chain k >= ks[n-1] >= ... >= ks[0] >= 0:
//   mu_j = ks[n-1] - ks[j-2]   (ks[-1] = 0, ks read 1-based as k_1..k_n)
//   nu   = (k - k_1, k_n - k_1, k_{n-1} - k_1, ..., k_2 - k_1)
//   lam  = (k_n - k_1 + k, k_n - k_1, ..., k_n - k_1)
struct ProofTriple {
  Partition mu, nu, lam;
};
ProofTriple proof_triple(int n, long long k, const std::vector<long long>& chain);

// The filling from the tensor-product witness: the right block of the first
// row takes 1s, and each remaining column of the left block is filled top to
// bottom with 2, 3, ...; content equals nu.
SkewFilling proof_filling(int n, long long k, const std::vector<long long>& chain);

}  // namespace mfs::lr
