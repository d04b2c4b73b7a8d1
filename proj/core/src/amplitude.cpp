#include "genray/amplitude.hpp"

#include <cmath>
#include <cstring>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "genray/quadrature.hpp"
#include "genray/stable_density.hpp"

namespace genray {

namespace {

// Read-transparent memo for inner mixing-density evaluations. The nested
// quadrature revisits the same (alpha, u) nodes many times when a batch of
// amplitude evaluations shares one parameter vector, so this is the main
// cost lever for gof and KS-style loops.
class MixingDensityCache {
public:
    double pdf(double u, double alpha, const QuadratureSpec& quad) {
        const Key key{u, alpha, quad.rel_tol};
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        const double value = pas_pdf(u, alpha, quad);
        std::unique_lock lock(mutex_);
        if (map_.size() >= kMaxEntries) map_.clear();
        map_.emplace(key, value);
        return value;
    }

private:
    struct Key {
        double u, alpha, rel_tol;
        bool operator==(const Key& o) const {
            return u == o.u && alpha == o.alpha && rel_tol == o.rel_tol;
        }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            auto mix = [](std::uint64_t h, double d) {
                std::uint64_t b;
                std::memcpy(&b, &d, sizeof(b));
                h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                return h;
            };
            return mix(mix(mix(0, k.u), k.alpha), k.rel_tol);
        }
    };
    static constexpr std::size_t kMaxEntries = 1u << 22;

    std::shared_mutex mutex_;
    std::unordered_map<Key, double, KeyHash> map_;
};

MixingDensityCache& mixing_cache() {
    static MixingDensityCache cache;
    return cache;
}

bool rayleigh_regime(double alpha) { return alpha >= detail::kAlphaGaussianCutoff; }

}  // namespace

double amplitude_pdf(double r, const AmplitudeParams& psi, const QuadratureSpec& quad) {
    quad.validate();
    psi.validate();
    if (!(r > 0.0)) throw std::domain_error("amplitude_pdf: r must be positive");
    const double s2 = psi.sigma * psi.sigma;
    if (rayleigh_regime(psi.alpha)) return r / (2.0 * s2) * std::exp(-r * r / (4.0 * s2));

    QuadratureSpec inner = quad;
    inner.abs_tol = quad.abs_tol / 10.0;
    inner.rel_tol = quad.rel_tol / 10.0;
    const double c = r * r / (4.0 * s2);
    auto f = [&](double u) {
        const double e = c / u;
        if (e > 700.0) return 0.0;
        return mixing_cache().pdf(u, psi.alpha, inner) / (2.0 * s2 * u) * std::exp(-e);
    };
    return r * integrate_half_line(f, quad, "amplitude_pdf");
}

double amplitude_cdf(double r, const AmplitudeParams& psi, const QuadratureSpec& quad) {
    quad.validate();
    psi.validate();
    if (!(r > 0.0)) throw std::domain_error("amplitude_cdf: r must be positive");
    const double s2 = psi.sigma * psi.sigma;
    if (rayleigh_regime(psi.alpha)) return -std::expm1(-r * r / (4.0 * s2));

    QuadratureSpec inner = quad;
    inner.abs_tol = quad.abs_tol / 10.0;
    inner.rel_tol = quad.rel_tol / 10.0;
    const double c = r * r / (4.0 * s2);
    auto f = [&](double u) {
        const double e = c / u;
        if (e > 700.0) return 0.0;
        return std::exp(-e) * mixing_cache().pdf(u, psi.alpha, inner);
    };
    const double survivor = integrate_half_line(f, quad, "amplitude_cdf");
    return std::clamp(1.0 - survivor, 0.0, 1.0);
}

double amplitude_loglik(std::span<const double> r, const AmplitudeParams& psi,
                        const QuadratureSpec& quad) {
    if (r.empty()) throw std::invalid_argument("amplitude_loglik: data must be nonempty");
    double ll = 0.0;
    for (double ri : r) ll += std::log(amplitude_pdf(ri, psi, quad));
    return ll;
}

}  // namespace genray
