#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace alphafx {

// Activations and weights are row-major: row index = token position, so head
// slices and per-token rows are contiguous views.
using Mat = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::VectorXf;
using Index = Eigen::Index;

// Half-open byte range into the exact source string analyzed.
struct ByteSpan {
    uint32_t begin = 0;
    uint32_t end = 0;

    uint32_t size() const { return end - begin; }
    bool empty() const { return begin == end; }
    bool contains(const ByteSpan& other) const {
        return begin <= other.begin && other.end <= end;
    }
    bool overlaps(const ByteSpan& other) const {
        return begin < other.end && other.begin < end;
    }
    friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

enum class Language { Java, Python };

const char* language_name(Language lang);
Language language_from_name(const std::string& name);

}  // namespace alphafx
