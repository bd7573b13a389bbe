#pragma once

#include <complex>
#include <span>

namespace tidfd::detail {

// Unnormalized complex DFTs of arbitrary length backed by FFTW. Plans are
// cached per (length, direction) and executed on caller-owned buffers, so
// concurrent calls are safe.
void fft_forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);
void fft_backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

}  // namespace tidfd::detail
