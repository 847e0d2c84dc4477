#pragma once
// Live confidence and temporal scoring. Three-step closed form:
//
//   C_decayed = C0 * 2^(-age_days / H)
//   C_fb      = clip(C_decayed + alpha_pos*n_pos - alpha_neg*n_neg, 0.01, 1.0)
//   C_final   = min(1.0, C_fb + beta * ln(1 + n_access))
//
// age_days is floor((now - created_at) / 86400 s), clamped at 0. Pure
// functions over immutable inputs; callable from any context.

#include "smartvector/types.hpp"

namespace smartvector {

struct ConfidenceParams {
    double half_life_days = 30.0;
    double alpha_pos = 0.03;
    double alpha_neg = 0.08;  // asymmetry alpha_neg > alpha_pos is intentional
    double beta = 0.01;
    double dormant_threshold = 0.15;
    double validity_floor = 0.05;
};

// Confidence of v at `now`, in [0.01, 1.0].
double confidence(const SmartVector& v, Timestamp now, const ConfidenceParams& params = {});

// 2^(-age_days/H) anchored at created_at while t lies inside
// [validity_start, validity_end]; validity_floor outside. A missing bound
// leaves that side open.
double temporal_score(const SmartVector& v, Timestamp t, const ConfidenceParams& params = {});

inline bool is_dormant(const SmartVector& v, Timestamp now, const ConfidenceParams& params = {}) {
    return confidence(v, now, params) < params.dormant_threshold;
}

}  // namespace smartvector
