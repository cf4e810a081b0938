#include "oensim/workload.hpp"

#include <stdexcept>

namespace oensim::workload {

void validate_dims(const TransformerDims& d) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("TransformerDims: ") + what);
    };
    require(d.tokens_t >= 1, "tokens_t must be >= 1");
    require(d.layers_l >= 1, "layers_l must be >= 1");
    require(d.heads_h >= 1, "heads_h must be >= 1");
    require(d.head_dim_s >= 1, "head_dim_s must be >= 1");
    require(d.embed_dim_n >= 1, "embed_dim_n must be >= 1");
    require(d.ff_dim_m >= 1, "ff_dim_m must be >= 1");
}

WorkloadPlan workload_plan(const TransformerDims& d) {
    validate_dims(d);
    const std::uint64_t sh = d.head_dim_s * d.heads_h;
    WorkloadPlan plan;
    plan.layers = d.layers_l;
    plan.layer_vmms = {
        {"w_qkv", 3 * sh, d.embed_dim_n, d.tokens_t},
        {"w_output", d.embed_dim_n, sh, d.tokens_t},
        {"w_up", d.ff_dim_m, d.embed_dim_n, d.tokens_t},
        {"w_down", d.embed_dim_n, d.ff_dim_m, d.tokens_t},
    };
    return plan;
}

u128 total_mac_ops(const TransformerDims& d) {
    validate_dims(d);
    if (!d.heads_match_embed())
        throw std::invalid_argument("total_mac_ops requires head_dim_s * heads_h == embed_dim_n");
    const u128 n = d.embed_dim_n;
    const u128 m = d.ff_dim_m;
    return u128(2) * (u128(4) * n * n + u128(2) * m * n) * u128(d.tokens_t) * u128(d.layers_l);
}

u128 plan_total_ops(const TransformerDims& d) {
    const WorkloadPlan plan = workload_plan(d);
    u128 macs = 0;
    for (const VmmShape& v : plan.layer_vmms) macs += v.mac_count();
    return u128(2) * macs * u128(plan.layers);
}

u128 attention_pattern_ops(const TransformerDims& d, AttentionConvention convention) {
    validate_dims(d);
    const u128 t = d.tokens_t;
    const u128 s = d.head_dim_s;
    const u128 hl = u128(d.heads_h) * u128(d.layers_l);
    switch (convention) {
        case AttentionConvention::kFullPattern:
            // K^T Q: T*T entries, length-S dots; V K^T Q: S*T entries, length-T dots.
            return u128(2) * (t * t * s + s * t * t) * hl;
        case AttentionConvention::kLastTokenStep:
            // One new query column: T pattern entries (length S) and S output
            // entries (length T).
            return u128(2) * (t * s + s * t) * hl;
    }
    throw std::logic_error("unknown attention convention");
}

const char* to_string(AttentionConvention c) {
    switch (c) {
        case AttentionConvention::kFullPattern: return "full_pattern";
        case AttentionConvention::kLastTokenStep: return "last_token_step";
    }
    return "?";
}

}  // namespace oensim::workload
