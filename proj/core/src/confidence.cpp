#include "smartvector/confidence.hpp"

#include <cmath>

namespace smartvector {

double confidence(const SmartVector& v, Timestamp now, const ConfidenceParams& params) {
    const double h = v.half_life_days > 0 ? v.half_life_days : params.half_life_days;
    const double age = static_cast<double>(whole_days_between(v.created_at, now));
    const double decayed = v.base_confidence * std::exp2(-age / h);
    const double fb = decayed + params.alpha_pos * static_cast<double>(v.positive_feedback) -
                      params.alpha_neg * static_cast<double>(v.negative_feedback);
    const double clipped = clamp_confidence(fb);
    const double reinforced =
        clipped + params.beta * std::log(1.0 + static_cast<double>(v.access_count));
    return std::min(1.0, reinforced);
}

double temporal_score(const SmartVector& v, Timestamp t, const ConfidenceParams& params) {
    if (v.temporal_validity_start && t < *v.temporal_validity_start) return params.validity_floor;
    if (v.temporal_validity_end && t > *v.temporal_validity_end) return params.validity_floor;
    const double h = v.half_life_days > 0 ? v.half_life_days : params.half_life_days;
    const double age = static_cast<double>(whole_days_between(v.created_at, t));
    return std::exp2(-age / h);
}

}  // namespace smartvector
