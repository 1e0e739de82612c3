#include "arcsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arcsim {

void ReservoirSpec::validate() const {
  if (n_modes < 1) throw std::invalid_argument("reservoir: n_modes must be >= 1");
  if (hopping <= 0.0) throw std::invalid_argument("reservoir: hopping must be > 0");
  if (temperature < 0.0) throw std::invalid_argument("reservoir: temperature must be >= 0");
  if (!std::isfinite(boundary_coupling))
    throw std::invalid_argument("reservoir: boundary_coupling must be finite");
}

void SystemSpec::validate() const {
  if (hamiltonian.rows() == 0 || hamiltonian.rows() != hamiltonian.cols())
    throw std::invalid_argument("system: hamiltonian must be square and non-empty");
  if (hermiticity_defect(hamiltonian) > kHermitianTol)
    throw std::invalid_argument("system: hamiltonian is not Hermitian");
  const int n = static_cast<int>(hamiltonian.rows());
  if (left_contact < 0 || left_contact >= n || right_contact < 0 || right_contact >= n)
    throw std::invalid_argument("system: contact site out of range");
}

SystemSpec SystemSpec::three_site(double omega_s, double v_s) {
  SystemSpec s;
  s.hamiltonian = Matrix::Zero(3, 3);
  s.hamiltonian(1, 1) = omega_s;
  s.hamiltonian(0, 1) = s.hamiltonian(1, 0) = v_s;
  s.hamiltonian(1, 2) = s.hamiltonian(2, 1) = v_s;
  s.left_contact = 0;
  s.right_contact = 2;
  return s;
}

SystemSpec SystemSpec::uniform_chain(int n_sites, double v_s) {
  if (n_sites < 1) throw std::invalid_argument("uniform_chain: n_sites must be >= 1");
  SystemSpec s;
  s.hamiltonian = Matrix::Zero(n_sites, n_sites);
  for (int i = 0; i + 1 < n_sites; ++i) {
    s.hamiltonian(i, i + 1) = v_s;
    s.hamiltonian(i + 1, i) = v_s;
  }
  s.left_contact = 0;
  s.right_contact = n_sites - 1;
  return s;
}

ReservoirModes discretize_reservoir(const ReservoirSpec& spec) {
  spec.validate();
  const int n = spec.n_modes;
  ReservoirModes out;
  out.frequencies.resize(n);
  out.couplings.resize(n);
  const double norm = std::sqrt(2.0 / (n + 1));
  for (int k = 1; k <= n; ++k) {
    const double theta = k * std::numbers::pi / (n + 1);
    // Stored ascending: k = n is the bottom of the band.
    out.frequencies[n - k] = 2.0 * spec.hopping * std::cos(theta) + spec.frequency_shift;
    out.couplings[n - k] = spec.boundary_coupling * norm * std::sin(theta);
  }
  return out;
}

double fermi_occupation(double omega, double temperature, double mu) {
  if (temperature < 0.0) throw std::invalid_argument("fermi_occupation: temperature must be >= 0");
  if (temperature == 0.0) {
    if (omega < mu) return 1.0;
    if (omega > mu) return 0.0;
    return 0.5;
  }
  // tanh form is overflow-safe for large |omega - mu|/T
  return 0.5 * (1.0 - std::tanh(0.5 * (omega - mu) / temperature));
}

Matrix Junction::initial_state() const {
  Matrix c = Matrix::Zero(dim(), dim());
  c.diagonal() = occupation.cast<Complex>();
  return c;
}

Matrix Junction::system_block(const Matrix& c) const {
  return c.block(sys_begin(), sys_begin(), n_sys, n_sys);
}

Junction assemble(const SystemSpec& system, const ReservoirSpec& left,
                  const ReservoirSpec& right) {
  system.validate();
  const ReservoirModes lm = discretize_reservoir(left);
  const ReservoirModes rm = discretize_reservoir(right);
  const int nl = left.n_modes;
  const int ns = static_cast<int>(system.hamiltonian.rows());
  const int nr = right.n_modes;
  const int n = nl + ns + nr;

  Junction j;
  j.n_left = nl;
  j.n_sys = ns;
  j.n_right = nr;
  j.hamiltonian = Matrix::Zero(n, n);
  j.occupation.resize(n);
  j.dissipative.resize(n);
  j.modes.reserve(n);

  for (int k = 0; k < nl; ++k) {
    j.hamiltonian(k, k) = lm.frequencies[k];
    j.occupation[k] = fermi_occupation(lm.frequencies[k], left.temperature,
                                       left.chemical_potential);
    j.dissipative[k] = 1.0;
    j.modes.push_back({k, Region::LeftReservoir, lm.frequencies[k], Region::LeftReservoir});
  }
  const int s0 = nl;
  j.hamiltonian.block(s0, s0, ns, ns) = system.hamiltonian;
  for (int i = 0; i < ns; ++i) {
    j.occupation[s0 + i] = 0.5;
    j.dissipative[s0 + i] = 0.0;
    j.modes.push_back({s0 + i, Region::System, system.hamiltonian(i, i).real(), std::nullopt});
  }
  const int r0 = nl + ns;
  for (int k = 0; k < nr; ++k) {
    j.hamiltonian(r0 + k, r0 + k) = rm.frequencies[k];
    j.occupation[r0 + k] = fermi_occupation(rm.frequencies[k], right.temperature,
                                            right.chemical_potential);
    j.dissipative[r0 + k] = 1.0;
    j.modes.push_back({r0 + k, Region::RightReservoir, rm.frequencies[k],
                       Region::RightReservoir});
  }

  const int lc = s0 + system.left_contact;
  const int rc = s0 + system.right_contact;
  for (int k = 0; k < nl; ++k) {
    j.hamiltonian(k, lc) = lm.couplings[k];
    j.hamiltonian(lc, k) = lm.couplings[k];
    j.couplings.push_back({k, lc, lm.couplings[k]});
  }
  for (int k = 0; k < nr; ++k) {
    j.hamiltonian(r0 + k, rc) = rm.couplings[k];
    j.hamiltonian(rc, r0 + k) = rm.couplings[k];
    j.couplings.push_back({r0 + k, rc, rm.couplings[k]});
  }
  return j;
}

MixedBasisOrder mixed_basis_order(const Junction& junction) {
  std::vector<int> reservoir;
  reservoir.reserve(junction.n_left + junction.n_right);
  for (int k = 0; k < junction.n_left; ++k) reservoir.push_back(k);
  for (int k = junction.right_begin(); k < junction.dim(); ++k) reservoir.push_back(k);
  // stable sort keeps L before R at equal frequency (L ids come first)
  std::stable_sort(reservoir.begin(), reservoir.end(), [&](int a, int b) {
    return junction.modes[a].frequency < junction.modes[b].frequency;
  });

  MixedBasisOrder order;
  order.permutation.reserve(junction.dim());
  std::size_t i = 0;
  for (; i < reservoir.size() && junction.modes[reservoir[i]].frequency < 0.0; ++i)
    order.permutation.push_back(reservoir[i]);
  order.cut_position = static_cast<int>(order.permutation.size());
  for (int s = junction.sys_begin(); s < junction.right_begin(); ++s)
    order.permutation.push_back(s);
  for (; i < reservoir.size(); ++i) order.permutation.push_back(reservoir[i]);
  return order;
}

}  // namespace arcsim
