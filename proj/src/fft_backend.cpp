#include "fft_backend.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace lctjt::detail {

namespace {

// FFTW plan creation is not thread-safe; executing a plan on new arrays is.
// Plans are created with FFTW_UNALIGNED so they run on any caller buffer.
std::mutex g_plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan> g_plans;

fftw_plan plan_for(std::size_t n, int sign, fftw_complex* buf) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    g_plans.emplace(key, p);
    return p;
}

void run(std::vector<std::complex<double>>& data, int sign) {
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan p = plan_for(data.size(), sign, buf);
    fftw_execute_dft(p, buf, buf);
}

}  // namespace

void fft(std::vector<std::complex<double>>& data) { run(data, FFTW_FORWARD); }

void ifft_unscaled(std::vector<std::complex<double>>& data) { run(data, FFTW_BACKWARD); }

void ifft(std::vector<std::complex<double>>& data) {
    run(data, FFTW_BACKWARD);
    const double s = 1.0 / static_cast<double>(data.size());
    for (auto& v : data) v *= s;
}

}  // namespace lctjt::detail
