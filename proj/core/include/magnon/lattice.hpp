#ifndef MAGNON_LATTICE_HPP
#define MAGNON_LATTICE_HPP

#include <complex>
#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "magnon/errors.hpp"

namespace magnon {

using Complex = std::complex<double>;
using VectorXc = Eigen::VectorXcd;

// Natural units throughout the core: hbar = 1, energies in J, lengths in
// the spin spacing a, times in 1/J. SI conversions live in units.hpp.

enum class Boundary { hard_wall, periodic };

struct CouplingSpec {
  double je = 1.0;  // edge (nearest-neighbour) coupling [J]
  double jd = 0.0;  // diagonal (next-nearest-neighbour) coupling [J]

  // Axis-aligned propagation sees the edge and diagonal terms as a single
  // effective coupling Je + 2 Jd.
  double effective() const { return je + 2.0 * jd; }

  void validate() const {
    if (!(je > 0.0)) throw ValidationError("CouplingSpec: je must be > 0");
    if (!(jd >= 0.0)) throw ValidationError("CouplingSpec: jd must be >= 0");
  }
};

struct LatticeSpec {
  int nx = 0;  // sites along x (transverse)
  int ny = 0;  // sites along y (longitudinal)
  double a = 1.0;
  CouplingSpec coupling{};
  Boundary boundary = Boundary::hard_wall;

  int sites() const { return nx * ny; }

  // flattened index over (i, j); i is x, j is y
  int flatten(int i, int j) const { return j * nx + i; }
  std::pair<int, int> unflatten(int idx) const { return {idx % nx, idx / nx}; }

  void validate() const {
    if (nx < 2 || ny < 2 || sites() < 4)
      throw ValidationError("LatticeSpec: need nx, ny >= 2 and nx*ny >= 4");
    if (!(a > 0.0)) throw ValidationError("LatticeSpec: a must be > 0");
    coupling.validate();
  }
};

// Normalized complex amplitude vector over the single-excitation subspace.
class SpinState {
public:
  SpinState() = default;
  SpinState(VectorXc amps, const LatticeSpec& lattice);

  const VectorXc& amps() const { return amps_; }
  VectorXc& amps() { return amps_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int size() const { return static_cast<int>(amps_.size()); }

  double norm() const { return amps_.norm(); }
  void normalize();

  Complex at(int i, int j) const { return amps_[j * nx_ + i]; }
  double prob(int i, int j) const { return std::norm(amps_[j * nx_ + i]); }

private:
  VectorXc amps_;
  int nx_ = 0;
  int ny_ = 0;
};

}  // namespace magnon

#endif
