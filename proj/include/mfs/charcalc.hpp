#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "mfs/config.hpp"
#include "mfs/rootdata.hpp"

namespace mfs {

// Dominant-support character: fw-coordinate tuple -> multiplicity.  Full
// Weyl orbits are expanded on demand, never stored.
using DomChar = std::map<std::vector<long long>, long long>;

struct VecHash {
  std::size_t operator()(const std::vector<long long>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (long long x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Multiset of lattice points, keyed by scale()*eps coordinates.
using WeightMultiset = std::unordered_map<std::vector<long long>, long long, VecHash>;

// Exact character engine for one root datum.  Owns memo caches for
// irreducible characters and dimensions; results are identical with a fresh
// or a warmed-up cache.  Instances are not synchronized: share per worker.
class CharEngine {
 public:
  explicit CharEngine(const RootDatum& d, RunConfig cfg = {}) : d_(d), cfg_(cfg) {}

  const RootDatum& datum() const { return d_; }
  const RunConfig& config() const { return cfg_; }

  // Weight multiplicities of the irreducible module V_lambda (Freudenthal).
  const DomChar& character(const Weight& lambda);

  // Weyl dimension formula; agrees with the character total.
  long long dim(const Weight& lambda);

  // Calls fn(fw_coords, mult) for every weight of V_lambda (orbits expanded).
  template <typename Fn>
  void for_each_weight(const Weight& lambda, Fn&& fn);

  // Expanded weight list of V_lambda in deterministic order.
  std::vector<std::pair<Weight, long long>> weights_of(const Weight& lambda);

  // V_a (x) V_b as a sum of irreducibles (Brauer-Klimyk).
  std::map<Weight, long long> tensor_decompose(const Weight& a, const Weight& b);

  // (w(rho), det w) over the full Weyl group; used for coefficient extraction.
  const std::vector<std::pair<Weight, int>>& signed_rho_orbit();

  // Multiplicity of the irreducible V_mu inside a nonnegative character given
  // as a weight multiset keyed by scale()*eps.
  long long extract_multiplicity(const WeightMultiset& x, const Weight& mu);

  std::vector<long long> scaled_key(const Weight& w) const;

 private:
  const RootDatum& d_;
  RunConfig cfg_;
  std::map<std::vector<long long>, DomChar> char_cache_;
  std::map<std::vector<long long>, long long> dim_cache_;
  std::vector<std::pair<Weight, int>> rho_orbit_;

  DomChar freudenthal(const Weight& lambda);
};

// Linear map between weight lattices driving brute-force branching.  The
// matrix sends target epsilon-coordinates to source epsilon-coordinates; the
// optional twist is a root-system automorphism of the target applied first.
struct EmbeddingMap {
  const RootDatum* target = nullptr;
  const RootDatum* source = nullptr;
  std::vector<std::vector<Rat>> matrix;
  std::optional<std::vector<std::vector<Rat>>> twist;

  Weight apply(const Weight& w) const;
  // Checks matrix shape, lattice-to-lattice mapping, and that the twist
  // permutes the target root system.  Throws LatticeMismatch on failure.
  void validate() const;
};

// Branching of target-irreducibles along an embedding, plus targeted
// restriction multiplicities.
class Restriction {
 public:
  Restriction(EmbeddingMap e, CharEngine& target_engine, CharEngine& source_engine);

  const EmbeddingMap& map() const { return e_; }

  // Multiset of images of the weights of V_lambda, keyed by source-scaled eps.
  WeightMultiset pushforward(const Weight& lambda);

  // Full decomposition by greedy peeling: repeatedly remove the highest
  // residual weight (height, then fw-lex) with the full character of the
  // matching source irreducible.  Throws NegativeMultiplicity if the map is
  // not a valid branching.
  std::map<Weight, long long> branch(const Weight& lambda);

  // m^{G,H}_lambda(mu): single coefficient via alternating-sum extraction
  // from the pushforward (no peeling).  Equals branch(lambda)[mu].
  long long multiplicity(const Weight& lambda, const Weight& mu);

 private:
  EmbeddingMap e_;
  CharEngine& tgt_;
  CharEngine& src_;
};

template <typename Fn>
void CharEngine::for_each_weight(const Weight& lambda, Fn&& fn) {
  const DomChar& ch = character(lambda);
  const int rank = d_.rank();
  const auto& cartan = d_.cartan();
  for (const auto& [fw, mult] : ch) {
    // expand the Weyl orbit of this dominant weight in fw coordinates
    std::vector<long long> start(fw.begin(), fw.begin() + rank);
    std::set<std::vector<long long>> seen{start};
    std::vector<std::vector<long long>> frontier{start};
    std::vector<long long> full(fw);
    while (!frontier.empty()) {
      std::vector<std::vector<long long>> next;
      for (const auto& g : frontier) {
        for (int i = 0; i < rank; ++i) {
          if (g[i] == 0) continue;
          auto h = g;
          const long long gi = g[i];
          for (int j = 0; j < rank; ++j) h[j] -= gi * cartan[i][j];
          if (seen.insert(h).second) next.push_back(std::move(h));
        }
      }
      frontier = std::move(next);
    }
    for (const auto& g : seen) {
      std::copy(g.begin(), g.end(), full.begin());
      fn(full, mult);
    }
  }
}

}  // namespace mfs
