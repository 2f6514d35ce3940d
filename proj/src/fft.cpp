#include "seqmm/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace seqmm::fft {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

// Plan creation is not thread-safe in FFTW; execution via fftw_execute_dft is.
std::mutex g_plan_mutex;

PlanPair& plans_for(std::size_t n) {
    static std::unordered_map<std::size_t, PlanPair> cache;
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    fftw_complex* scratch_in = fftw_alloc_complex(n);
    fftw_complex* scratch_out = fftw_alloc_complex(n);
    if (scratch_in == nullptr || scratch_out == nullptr) {
        throw std::bad_alloc();
    }
    PlanPair p;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    p.fwd = fftw_plan_dft_1d(static_cast<int>(n), scratch_in, scratch_out, FFTW_FORWARD, flags);
    p.bwd = fftw_plan_dft_1d(static_cast<int>(n), scratch_in, scratch_out, FFTW_BACKWARD, flags);
    fftw_free(scratch_in);
    fftw_free(scratch_out);
    if (p.fwd == nullptr || p.bwd == nullptr) {
        throw std::runtime_error("fftw plan creation failed for length " + std::to_string(n));
    }
    return cache.emplace(n, p).first->second;
}

inline fftw_complex* fc(const cplx* p) {
    return reinterpret_cast<fftw_complex*>(const_cast<cplx*>(p));
}

}  // namespace

void forward(const cplx* in, cplx* out, std::size_t n) {
    if (n == 0) {
        return;
    }
    fftw_execute_dft(plans_for(n).fwd, fc(in), fc(out));
}

void backward(const cplx* in, cplx* out, std::size_t n) {
    if (n == 0) {
        return;
    }
    fftw_execute_dft(plans_for(n).bwd, fc(in), fc(out));
}

std::vector<cplx> forward(std::span<const cplx> in) {
    std::vector<cplx> out(in.size());
    forward(in.data(), out.data(), in.size());
    return out;
}

std::vector<cplx> backward(std::span<const cplx> in) {
    std::vector<cplx> out(in.size());
    backward(in.data(), out.data(), in.size());
    return out;
}

}  // namespace seqmm::fft
