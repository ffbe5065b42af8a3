#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fastmel/error.hpp"

namespace fastmel {

// Dense row-major float32 tensor. The last dimension is contiguous; feature
// maps are stored channels x time. Immutable by convention once built.
struct Tensor {
    std::vector<int64_t> shape;
    std::vector<float> data;

    Tensor() = default;
    Tensor(std::vector<int64_t> shape_, std::vector<float> data_)
        : shape(std::move(shape_)), data(std::move(data_)) {
        check_data(numel_of(shape) == static_cast<int64_t>(data.size()),
                   "tensor shape/data size mismatch");
    }

    static Tensor zeros(std::vector<int64_t> shape_) {
        int64_t n = numel_of(shape_);
        return Tensor(std::move(shape_), std::vector<float>(static_cast<size_t>(n), 0.0f));
    }

    static int64_t numel_of(const std::vector<int64_t>& s) {
        int64_t n = 1;
        for (int64_t d : s) {
            check_data(d >= 1, "tensor dims must be >= 1");
            n *= d;
        }
        return n;
    }

    int64_t numel() const { return static_cast<int64_t>(data.size()); }
    int rank() const { return static_cast<int>(shape.size()); }

    int64_t dim(int i) const { return shape[static_cast<size_t>(i)]; }

    float& at(int64_t i) { return data[static_cast<size_t>(i)]; }
    float at(int64_t i) const { return data[static_cast<size_t>(i)]; }

    float& at(int64_t i, int64_t j) { return data[static_cast<size_t>(i * shape[1] + j)]; }
    float at(int64_t i, int64_t j) const { return data[static_cast<size_t>(i * shape[1] + j)]; }

    float& at(int64_t i, int64_t j, int64_t k) {
        return data[static_cast<size_t>((i * shape[1] + j) * shape[2] + k)];
    }
    float at(int64_t i, int64_t j, int64_t k) const {
        return data[static_cast<size_t>((i * shape[1] + j) * shape[2] + k)];
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    std::string shape_str() const {
        std::string s = "[";
        for (size_t i = 0; i < shape.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(shape[i]);
        }
        return s + "]";
    }
};

// Order-dependent 64-bit digest over the raw float bit patterns (FNV-1a).
// Used for self-golden regression fixtures and deterministic output checks.
inline uint64_t tensor_digest(const Tensor& t) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    for (int64_t d : t.shape) mix(static_cast<uint64_t>(d));
    for (float f : t.data) {
        uint32_t bits;
        static_assert(sizeof(bits) == sizeof(f));
        __builtin_memcpy(&bits, &f, 4);
        mix(bits);
    }
    return h;
}

} // namespace fastmel
