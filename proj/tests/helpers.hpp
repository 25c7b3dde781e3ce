#pragma once

#include "lik/pipeline.hpp"

#include <map>
#include <memory>
#include <string>

namespace likt {

// Pipelines are pure functions of (n_max, bits); share them across test cases.
inline lik::Pipeline& shared_pipeline(long n_max, long bits) {
    static std::map<std::pair<long, long>, std::unique_ptr<lik::Pipeline>> cache;
    auto key = std::make_pair(n_max, bits);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<lik::Pipeline>(n_max, lik::PrecisionContext::with_bits(bits)))
                 .first;
    return *it->second;
}

inline lik::Real lit(const char* s, long bits = 256) { return lik::Real(s, lik::Prec{bits}); }

inline bool close_abs(const lik::Real& a, const lik::Real& b, const lik::Real& tol) {
    return lik::abs(a - b) <= tol;
}

inline bool close_rel(const lik::Real& a, const lik::Real& b, const lik::Real& tol) {
    return lik::abs(a - b) <= tol * lik::abs(b);
}

}  // namespace likt
