#pragma once

#include <array>
#include <complex>
#include <compare>
#include <stdexcept>
#include <vector>

#include "qnetsim/rng.hpp"

namespace qnetsim {

using Complex = std::complex<double>;

/// Strictly positive optical wavelength in nanometers.
struct Wavelength {
  double nm;
  constexpr explicit Wavelength(double nanometers)
      : nm(nanometers > 0.0
               ? nanometers
               : throw std::invalid_argument("Wavelength must be > 0 nm")) {}
  friend constexpr auto operator<=>(const Wavelength&,
                                    const Wavelength&) = default;
};

/// Campus wavelength plan.
namespace wavelengths {
inline constexpr Wavelength visible_575{575.0};
inline constexpr Wavelength nir_780{780.0};
inline constexpr Wavelength nir_1060{1060.0};
inline constexpr Wavelength telecom_o_1330{1330.0};
inline constexpr Wavelength telecom_c_1550{1550.0};
}  // namespace wavelengths

/// Pure polarization state of a single photon. Normalized on construction;
/// the global phase carries no meaning, so comparisons go through
/// canonical() or approx_equal().
class JonesState {
public:
  JonesState(Complex amp_h, Complex amp_v);

  Complex amp_h() const { return h_; }
  Complex amp_v() const { return v_; }

  static JonesState horizontal() { return {1.0, 0.0}; }
  static JonesState vertical() { return {0.0, 1.0}; }
  static JonesState diagonal();
  static JonesState antidiagonal();

  /// Phase-fixed representative: first amplitude above 1e-12 made
  /// real-positive. States equal up to global phase canonicalize identically.
  JonesState canonical() const;

private:
  Complex h_, v_;
};

/// <a|b>
Complex inner(const JonesState& a, const JonesState& b);
/// |<a|b>|^2
double fidelity(const JonesState& a, const JonesState& b);
/// Equality up to global phase: 1 - fidelity <= tol.
bool approx_equal(const JonesState& a, const JonesState& b, double tol = 1e-9);

/// Born probability |<basis|s>|^2, clamped to [0, 1].
double projection_probability(const JonesState& s,
                              const JonesState& basis_state);

/// 2x2 unitary acting on Jones states; models both fiber drift and
/// compensator settings. Validated to 1e-9 on construction from raw entries.
class PolarizationUnitary {
public:
  PolarizationUnitary(Complex m00, Complex m01, Complex m10, Complex m11);

  static PolarizationUnitary identity();
  /// Rotation by theta in the linear-polarization plane: H -> cos t H + sin t V.
  static PolarizationUnitary linear_rotation(double theta_rad);
  /// Rz(psi) * Ry(chi) * Rz(phi) in the SU(2) half-angle convention.
  static PolarizationUnitary from_angles(double psi, double chi, double phi);
  /// Haar-uniform element, three-angle parameterization.
  static PolarizationUnitary haar_random(RngStream& rng);
  /// Small random rotation: three angles drawn from N(0, sigma).
  static PolarizationUnitary small_random(double sigma_rad, RngStream& rng);

  Complex entry(int row, int col) const { return m_[2 * row + col]; }

  PolarizationUnitary dagger() const;
  /// Gram-Schmidt re-orthonormalization; used to stop error accumulating
  /// over long composition chains.
  PolarizationUnitary orthonormalized() const;
  JonesState apply(const JonesState& s) const;
  PolarizationUnitary operator*(const PolarizationUnitary& rhs) const;

  /// Frobenius distance to the closest phase multiple of the identity;
  /// 0 for any e^{i phi} I, up to 2*sqrt(2) for a half-wave flip.
  double deviation_from_identity() const;

private:
  struct unchecked_t {};
  PolarizationUnitary(unchecked_t, Complex m00, Complex m01, Complex m10,
                      Complex m11);
  std::array<Complex, 4> m_;
};

/// Normalized spectral density: gaussian(center, fwhm) or
/// rectangle(center, full width).
class SpectralProfile {
public:
  enum class Shape { gaussian, rectangle };

  static SpectralProfile gaussian(double center_nm, double fwhm_nm);
  static SpectralProfile rectangle(double center_nm, double width_nm);

  Shape shape() const { return shape_; }
  double center_nm() const { return center_nm_; }
  /// FWHM for gaussian, full width for rectangle.
  double width_nm() const { return width_nm_; }

  double density(double nm) const;

private:
  SpectralProfile(Shape shape, double center_nm, double width_nm);
  Shape shape_;
  double center_nm_;
  double width_nm_;
};

/// Fraction of the emission density falling inside the passband.
/// The passband must be a rectangle (a demux channel window); the
/// gaussian-emitter case evaluates in closed form via erf.
double spectral_overlap(const SpectralProfile& emission,
                        const SpectralProfile& passband);

/// One demultiplexer channel. Signed index: +k and -k are energy-matched
/// partners symmetric about the grid's degeneracy center.
struct WdmChannel {
  int index;
  SpectralProfile passband;
};

/// Uniform channel grid around a degeneracy wavelength. Channels are
/// pairwise non-overlapping by construction (width <= spacing).
class WdmGrid {
public:
  WdmGrid(Wavelength degeneracy_center, double spacing_nm,
          double passband_width_nm, int n_pairs);

  WdmChannel channel(int k) const;
  static int partner(int k) { return -k; }
  int pair_count() const { return n_pairs_; }
  Wavelength degeneracy_center() const { return center_; }
  double spacing_nm() const { return spacing_nm_; }
  double passband_width_nm() const { return width_nm_; }

  std::vector<WdmChannel> all_channels() const;

private:
  Wavelength center_;
  double spacing_nm_;
  double width_nm_;
  int n_pairs_;
};

}  // namespace qnetsim
