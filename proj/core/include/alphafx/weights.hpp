#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "alphafx/model_config.hpp"
#include "alphafx/types.hpp"

namespace alphafx {

/// One named tensor in a safetensors-style archive: little-endian F32 data,
/// row-major, addressed by a JSON header of {name -> dtype, shape, offsets}.
struct NamedTensor {
    std::string name;
    std::vector<long> shape;
    std::vector<float> data;
};

class TensorArchive {
  public:
    static TensorArchive open(const std::filesystem::path& path);

    bool contains(const std::string& name) const;
    /// Throws MissingTensor / ShapeMismatch on lookup or rank problems.
    Mat matrix(const std::string& name) const;
    Vec vector(const std::string& name) const;

    const std::map<std::string, std::string>& metadata() const { return metadata_; }
    std::vector<std::string> names() const;

  private:
    struct Entry {
        std::vector<long> shape;
        uint64_t begin = 0;  // into data_
        uint64_t end = 0;
    };
    std::map<std::string, Entry> entries_;
    std::map<std::string, std::string> metadata_;
    std::vector<char> data_;
};

/// Writes the same layout TensorArchive reads (F32 only).
void save_archive(const std::filesystem::path& path, const std::vector<NamedTensor>& tensors,
                  const std::map<std::string, std::string>& metadata = {});

/// Attention and feed-forward parameters of one encoder layer, already in the
/// x*W + b orientation (kernels transposed from the checkpoint's [out, in]).
struct LayerWeights {
    Mat w_q, w_k, w_v;  // hidden x hidden
    Vec b_q, b_k, b_v;  // hidden
    Mat w_o;            // hidden x hidden; rows h*d'..(h+1)*d' belong to head h
    Vec b_o;
    Vec attn_ln_scale, attn_ln_shift;
    Mat ff_w1;  // hidden x intermediate
    Vec ff_b1;
    Mat ff_w2;  // intermediate x hidden
    Vec ff_b2;
    Vec ff_ln_scale, ff_ln_shift;
};

/// All parameters of a loaded checkpoint. Immutable after load_weights and
/// safe to share across worker threads.
struct WeightStore {
    ModelConfig config;
    Mat token_embeddings;     // vocab x hidden
    Mat position_embeddings;  // max_positions x hidden
    Mat segment_embeddings;   // type_count x hidden
    Vec emb_ln_scale, emb_ln_shift;
    std::vector<LayerWeights> layers;
    int intermediate_dim = 0;  // inferred from ff_w1 at load

    /// Columns of W_V owned by head h (the f(x) input slice).
    auto value_slice(int layer, int head) const {
        const auto& lw = layers[layer];
        return lw.w_v.middleCols(static_cast<Index>(head) * config.head_dim, config.head_dim);
    }
    /// Rows of W_O owned by head h (the f(x) output slice).
    auto output_slice(int layer, int head) const {
        const auto& lw = layers[layer];
        return lw.w_o.middleRows(static_cast<Index>(head) * config.head_dim, config.head_dim);
    }
};

/// Loads and shape-validates a checkpoint archive against the config and the
/// versioned tensor-name manifest. An optional uniform "roberta." prefix on
/// the stored names is detected automatically.
/// Throws MissingTensor, ShapeMismatch, NonFiniteWeight.
WeightStore load_weights(const std::filesystem::path& archive_path, const ModelConfig& config);

/// The embedded copy of data/tensor_manifest.txt: expanded tensor names for a
/// given layer count (comments stripped, {layer} substituted).
std::vector<std::string> manifest_tensor_names(int num_layers);

}  // namespace alphafx
