#include "rc/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace wsar {

namespace {

// FFTW plan creation is not thread-safe; execution on distinct arrays is.
// UNALIGNED keeps plans valid for arbitrary vector storage and makes plan
// selection independent of runtime addresses.
class PlanCache {
public:
    fftw_plan get(std::int64_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(n);
        if (it != plans_.end()) {
            return it->second;
        }
        std::vector<cdouble> scratch(static_cast<std::size_t>(n));
        fftw_plan plan = fftw_plan_dft_1d(
            static_cast<int>(n), reinterpret_cast<fftw_complex*>(scratch.data()),
            reinterpret_cast<fftw_complex*>(scratch.data()), FFTW_FORWARD,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (plan == nullptr) {
            throw Error("FFT plan creation failed");
        }
        plans_.emplace(n, plan);
        return plan;
    }

    ~PlanCache() {
        for (auto& [n, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

private:
    std::mutex mutex_;
    std::map<std::int64_t, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

}  // namespace

void fft_forward(const cdouble* in, cdouble* out, std::int64_t n) {
    if (n < 1) {
        throw ContractError("FFT length must be positive");
    }
    fftw_plan plan = cache().get(n);
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(const_cast<cdouble*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace wsar
