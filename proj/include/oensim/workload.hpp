#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oensim/common.hpp"

namespace oensim::workload {

// Transformer model shape. All matmul counting in the project derives from
// these six numbers.
struct TransformerDims {
    std::uint64_t tokens_t = 1;    // tokens processed in parallel
    std::uint64_t layers_l = 1;
    std::uint64_t heads_h = 1;
    std::uint64_t head_dim_s = 1;  // key/query/value dimension per head
    std::uint64_t embed_dim_n = 1; // word embedding / output dimension
    std::uint64_t ff_dim_m = 1;    // feedforward inner dimension

    bool heads_match_embed() const { return head_dim_s * heads_h == embed_dim_n; }
};

void validate_dims(const TransformerDims& dims);  // throws std::invalid_argument

// One vector-to-matrix multiply: `batch` input vectors of length `in_dim`
// against a weight matrix with `out_dim` rows.
struct VmmShape {
    std::string name;
    std::uint64_t out_dim = 1;
    std::uint64_t in_dim = 1;
    std::uint64_t batch = 1;

    u128 mac_count() const {
        return u128(out_dim) * u128(in_dim) * u128(batch);
    }
};

// The four weight-matrix multiplies of one transformer layer, in execution
// order: QKV projection, attention output projection, FF up, FF down. The
// plan for the whole model is this list repeated layers_l times.
struct WorkloadPlan {
    std::vector<VmmShape> layer_vmms;
    std::uint64_t layers = 1;
};

WorkloadPlan workload_plan(const TransformerDims& dims);

// Total operations (2 ops per MAC) of the four weight matmuls over all layers:
// 2 * ((3*S*H*N + N*S*H) + (M*N + N*M)) * T * L, which reduces to
// 2 * (4*N^2 + 2*M*N) * T * L when S*H = N. Requires S*H = N.
u128 total_mac_ops(const TransformerDims& dims);

// Same total from the enumerated plan (2 * out * in * batch summed over the
// per-layer VMMs, times layers). Valid for any dims.
u128 plan_total_ops(const TransformerDims& dims);

// Operation count of forming the attention pattern K^T Q and applying it as
// V K^T Q. Counted for information only; these products are never scheduled
// on the array and are excluded from the performance model.
enum class AttentionConvention {
    kFullPattern,    // full T x T pattern, both products: 2*(T*T*S + S*T*T)*H*L ops
    kLastTokenStep,  // incremental cost of one new token column: 2*(T*S + S*T)*H*L ops
};

u128 attention_pattern_ops(const TransformerDims& dims,
                           AttentionConvention convention = AttentionConvention::kFullPattern);

const char* to_string(AttentionConvention c);

}  // namespace oensim::workload
