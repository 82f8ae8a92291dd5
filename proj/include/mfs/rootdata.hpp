#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mfs/weight.hpp"

namespace mfs {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

// A (possibly reducible) root system of classical type A/B/C/D or G2, with
// an optional central torus.  Simple roots, positive roots and fundamental
// weights follow the usual epsilon-coordinate conventions; components are
// laid out as consecutive coordinate blocks, torus coordinates last.
//
// Everything is immutable after build(), so instances can be shared freely.
class RootDatum {
 public:
  struct Component {
    Family family;
    int rank;
    int eps_off;   // first epsilon coordinate of the block
    int eps_dim;   // block width (rank, or rank+1 for type A, 3 for G2)
    int fw_off;    // first simple-root index of the block
  };

  static RootDatum build(const std::vector<std::pair<Family, int>>& spec,
                         int torus_rank = 0);

  const std::vector<Component>& components() const { return comps_; }
  int rank() const { return rank_; }              // number of simple roots
  int torus_rank() const { return torus_rank_; }
  int eps_dim() const { return eps_dim_; }
  int fw_dim() const { return rank_ + torus_rank_; }
  long long scale() const { return scale_; }      // clears all lattice denominators

  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& pos_roots() const { return pos_roots_; }
  const std::vector<Weight>& fund_weights() const { return fund_weights_; }
  const Weight& rho() const { return rho_; }
  const std::vector<std::vector<long long>>& cartan() const { return cartan_; }

  // 2|R+| + rank + torus: the dimension of the corresponding group.
  long long group_dim() const {
    return 2 * static_cast<long long>(pos_roots_.size()) + rank_ + torus_rank_;
  }

  Weight zero() const { return Weight(static_cast<std::size_t>(eps_dim_)); }

  bool in_weight_lattice(const Weight& w) const;

  // Fundamental-weight coordinates followed by the raw torus coordinates.
  // Throws LatticeMismatch on dimension mismatch or non-integral result.
  std::vector<long long> fw_coords(const Weight& w) const;
  Weight weight_fw(std::span<const long long> fw) const;

  bool is_dominant(const Weight& w) const;

  // Dominant Weyl-orbit representative; sign is the determinant of the
  // applied Weyl element.
  std::pair<Weight, int> dominant_rep(const Weight& w) const;
  // rho-shifted variant used by tensor/branching arithmetic: returns the
  // dominant representative of w under the dotted action and sign 0 when
  // w + rho lies on a wall.
  std::pair<Weight, int> dominant_rep_rho(const Weight& w) const;

  // lambda^vee = -w0(lambda); requires lambda dominant.
  Weight dual_weight(const Weight& w) const;

  // Reflection walk to the dominant chamber in fw coordinates (root part,
  // length rank()).  Returns the determinant of the applied Weyl element.
  int walk_fw(std::vector<long long>& root_fw) const;
  // Dotted-action variant: root_fw becomes the dominant representative under
  // w
  // -> w0*(w+rho)-rho; returns 0 when w+rho meets a wall.
  int walk_fw_rho(std::vector<long long>& root_fw) const;

  // Coordinates of the root-lattice part of w in the simple-root basis.
  // Torus coordinates do not contribute.
  std::vector<Rat> root_coords(const Weight& w) const;
  // <rho^vee, w> with rho^vee the sum of fundamental coweights, i.e. the sum
  // of the simple-root coordinates of w.
  Rat height(const Weight& w) const;

  // Full Weyl orbit of an arbitrary lattice weight (deterministic order).
  std::vector<Weight> weyl_orbit(const Weight& w) const;

  std::string spec_string() const;  // e.g. "B4", "A2xA2", "C3xT1"

  static RootDatum parse(const std::string& spec);  // inverse of spec_string

 private:
  std::vector<Component> comps_;
  int rank_ = 0;
  int torus_rank_ = 0;
  int eps_dim_ = 0;
  long long scale_ = 1;
  std::vector<Weight> simple_roots_, pos_roots_, fund_weights_;
  Weight rho_;
  std::vector<std::vector<long long>> cartan_;
  // per component: inverse of the transposed Cartan matrix, for root coords
  std::vector<std::vector<std::vector<Rat>>> inv_cartan_t_;
};

}  // namespace mfs
