#pragma once

#include <optional>
#include <vector>

#include "arcsim/types.hpp"

namespace arcsim {

enum class Region { LeftReservoir, System, RightReservoir };

struct ModeDescriptor {
  int id = 0;
  Region region = Region::System;
  double frequency = 0.0;                 // omega_k for reservoir modes, onsite for S diagonal
  std::optional<Region> reservoir_label;  // absent iff region == System
};

/// One lead: a 1D chain with uniform nearest-neighbor hopping, used in its eigenbasis.
struct ReservoirSpec {
  int n_modes = 0;
  double hopping = 1.0;            // omega_0
  double boundary_coupling = 1.0;  // hop between the chain end and the S contact site
  double frequency_shift = 0.0;    // rigid shift applied to every eigenfrequency
  double temperature = 0.0;
  double chemical_potential = 0.0;

  void validate() const;
};

struct SystemSpec {
  Matrix hamiltonian;   // Hermitian, N_S x N_S
  int left_contact = 0;
  int right_contact = 0;

  void validate() const;

  /// Three-site impurity: onsite omega_s on the middle site, hopping v_s.
  static SystemSpec three_site(double omega_s, double v_s);
  /// Uniform chain with zero onsite frequencies and nearest-neighbor hopping v_s.
  static SystemSpec uniform_chain(int n_sites, double v_s);
};

/// Spectrum and contact couplings of one discretized lead.
struct ReservoirModes {
  RealVector frequencies;  // ascending
  RealVector couplings;    // v_k to the contact site, all positive
};

/// Eigenfrequencies and couplings of the open chain, closed form:
/// omega_k = 2 omega_0 cos(k pi/(N+1)) + shift, v_k = vc sqrt(2/(N+1)) sin(k pi/(N+1)).
ReservoirModes discretize_reservoir(const ReservoirSpec& spec);

/// Fermi-Dirac occupation; T=0 gives the sharp step with f(mu)=1/2.
double fermi_occupation(double omega, double temperature, double mu);

struct Coupling {
  int mode = 0;  // global index of the reservoir mode
  int site = 0;  // global index of the S site
  double value = 0.0;
};

/// The assembled junction: single-particle Hamiltonian over L + S + R with
/// reservoirs in their eigenbasis. Storage order is [L modes | S sites | R modes].
struct Junction {
  Matrix hamiltonian;
  std::vector<ModeDescriptor> modes;
  std::vector<Coupling> couplings;
  int n_left = 0;
  int n_sys = 0;
  int n_right = 0;
  RealVector occupation;   // isolated-equilibrium f per mode (1/2 on S sites)
  RealVector dissipative;  // 1 on reservoir modes, 0 on S

  int dim() const { return n_left + n_sys + n_right; }
  int sys_begin() const { return n_left; }
  int right_begin() const { return n_left + n_sys; }

  /// Initial state: maximally mixed S (C_S = I/2) x isolated lead equilibria.
  Matrix initial_state() const;
  /// System block of a full correlation matrix.
  Matrix system_block(const Matrix& c) const;
};

Junction assemble(const SystemSpec& system, const ReservoirSpec& left, const ReservoirSpec& right);

struct MixedBasisOrder {
  std::vector<int> permutation;  // storage position -> mode id
  int cut_position = 0;          // bipartition index, defaults to the start of the S block
};

/// L and R modes jointly sorted by frequency (ties: L before R), S inserted as a
/// contiguous block before the first reservoir frequency >= 0.
MixedBasisOrder mixed_basis_order(const Junction& junction);

}  // namespace arcsim
