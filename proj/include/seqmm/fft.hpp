#pragma once

#include <span>
#include <vector>

#include "seqmm/types.hpp"

// Thin wrapper over FFTW3. Conventions match the DFT matrix with entries
// e^{-j 2 pi m n / N}: forward() applies F, backward() applies F^H, both
// unnormalized. Plans are cached per length and created with FFTW_ESTIMATE
// so results are reproducible run to run.
namespace seqmm::fft {

/// out = F in. in and out must not alias and must both have length n.
void forward(const cplx* in, cplx* out, std::size_t n);
/// out = F^H in (unnormalized inverse). No aliasing.
void backward(const cplx* in, cplx* out, std::size_t n);

std::vector<cplx> forward(std::span<const cplx> in);
std::vector<cplx> backward(std::span<const cplx> in);

}  // namespace seqmm::fft
