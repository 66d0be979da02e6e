#pragma once

#include "bivec/grid.hpp"

namespace bivec {
namespace spectral {

// Integer mode number of FFT bin i: i for i < n/2, i - n otherwise.
inline int mode_number(int i, int n) { return i < n / 2 ? i : i - n; }

// Physical wavenumber 2 pi m / (n h) of bin i.
double wavenumber(int i, int n, double h);

// In-place 3-d complex FFT of one scalar array in grid site order.
void fft_forward(std::vector<cplx>& data, int n);
void fft_inverse(std::vector<cplx>& data, int n);  // includes the 1/n^3 factor

/// Spectral first derivatives: multiplication by i k per mode. Exact for
/// band-limited fields, so div(curl .) and curl(grad .) vanish to roundoff.
ScalarGrid divergence(const FieldGrid& grid);
FieldGrid curl(const FieldGrid& grid);
FieldGrid gradient(const ScalarGrid& scalar);
FieldGrid laplacian(const FieldGrid& grid);

/// Removes the longitudinal part: psi_hat -= khat (khat . psi_hat).
FieldGrid project_transverse(const FieldGrid& grid);

}  // namespace spectral
}  // namespace bivec
