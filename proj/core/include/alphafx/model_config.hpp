#pragma once

#include <map>
#include <string>

namespace alphafx {

/// Architecture constants of a RoBERTa-style encoder. Sequence length is a
/// per-input property and lives on DecompositionRecord, not here.
struct ModelConfig {
    int num_layers = 12;
    int num_heads = 12;
    int head_dim = 64;
    int hidden_dim = 768;
    int vocab_size = 50265;
    int max_positions = 514;
    float layernorm_epsilon = 1e-5f;
    // Index of the first real position id. RoBERTa checkpoints reserve ids
    // 0 and 1 (padding convention), so token i embeds position i + 2.
    int position_offset = 2;

    /// Constants of the published 125M-parameter code-model checkpoint.
    static ModelConfig codebert_base() { return ModelConfig{}; }

    /// Throws Error if the invariants do not hold
    /// (hidden_dim = num_heads * head_dim, all counts positive).
    void validate() const;

    /// Usable input length: positions available after the reserved offset.
    int max_sequence_length() const { return max_positions - position_offset; }

    /// Applies keys like "num_layers"/"hidden_dim" from a string map (e.g. the
    /// checkpoint archive's metadata block). Unknown keys are ignored.
    void apply_overrides(const std::map<std::string, std::string>& kv);
};

}  // namespace alphafx
