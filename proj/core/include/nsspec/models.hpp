#pragma once

// Finite-dimensional test operators: Dirichlet finite-difference Laplacians
// on a box, multiplication by complex potentials, random diagonal-plus-dense
// models, and the numerical-range margin omega0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsspec/linalg.hpp"
#include "nsspec/perturbation.hpp"

namespace nsspec {

/// Uniform grid of n points per axis with spacing h on the box [-L, L]^d,
/// L = n h / 2. Points sit at cell centres -L + (i + 1/2) h.
struct GridSpec {
  int d = 1;
  int n = 2;
  double h = 1.0;

  double half_width() const { return 0.5 * n * h; }
  std::size_t size() const;
};

void validate_grid(const GridSpec& g);

/// Largest matrix dimension the builders accept.
inline constexpr std::size_t kMaxModelDim = 4096;

enum class PotentialKind { GaussianComplex, PavlovDecay, CustomTable };

/// gaussian_complex: V(x) = amplitude * exp(-|x|^2 / width^2)
/// pavlov_decay:     V(x) = amplitude * exp(-decay * |x|^exponent)
/// custom_table:     V(x_i) = table[i] in grid (row-major, last axis fastest)
struct PotentialSpec {
  PotentialKind kind = PotentialKind::GaussianComplex;
  Complex amplitude{1.0, 0.0};
  double width = 1.0;
  double decay = 1.0;
  double exponent = 1.0;
  std::vector<Complex> table;
};

std::string to_string(PotentialKind kind);
PotentialKind potential_kind_from_string(const std::string& name);

/// Coordinates of grid point `index`.
std::vector<double> grid_point(const GridSpec& g, std::size_t index);

/// V at every grid point. Throws DomainError on non-finite values.
std::vector<Complex> potential_values(const GridSpec& g, const PotentialSpec& v);

/// Dirichlet finite-difference -Laplacian: tridiagonal (2, -1)/h^2 in 1D,
/// Kronecker sums in higher dimension.
ComplexMatrix build_laplacian(const GridSpec& g);

struct Potential {
  ComplexMatrix matrix;  ///< diagonal
  double lp_norm = 0.0;  ///< (sum |V(x_i)|^p h^d)^(1/p)
};

Potential build_potential(const GridSpec& g, const PotentialSpec& v, double p);

/// Grid L^p norm (sum |V(x_i)|^p h^d)^(1/p).
double grid_lp_norm(const GridSpec& g, const std::vector<Complex>& values, double p);

struct Omega0Result {
  double omega0 = 0.0;
  Eigen::VectorXcd witness;  ///< unit vector minimizing Re<Hf, f>
};

/// omega0 = max(0, -lambda_min((H + H*)/2)).
Omega0Result compute_omega0(const ComplexMatrix& h);

/// H = H0 + M with omega0 from compute_omega0 and, unless given,
/// a^2 = 1.5 (omega0 + 1).
ModelTriple make_model(ComplexMatrix h0, ComplexMatrix m, double p,
                       std::optional<double> a = std::nullopt);

/// Deterministic in `seed`: H0 = diag(U[0, 10]), M dense with entries in the
/// unit square rescaled to operator norm `m_norm`.
ModelTriple build_abstract_model(std::uint64_t seed, int dim, double m_norm, double p = 2.0);

}  // namespace nsspec
