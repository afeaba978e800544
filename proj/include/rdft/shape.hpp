// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "rdft/errors.hpp"

namespace rdft {

/// Dimension list of a tensor. Rank 0 (no dims) is the scalar case and has
/// element count 1; dims of size 0 are legal and make the tensor empty.
class Shape {
public:
    Shape() = default;

    explicit Shape(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
        for (std::int64_t d : dims_) {
            if (d < 0) throw ShapeMismatchError("shape dimensions must be non-negative");
        }
    }

    Shape(std::initializer_list<std::int64_t> dims)
        : Shape(std::vector<std::int64_t>(dims)) {}

    std::size_t rank() const { return dims_.size(); }

    const std::vector<std::int64_t>& dims() const { return dims_; }

    std::int64_t dim(std::size_t axis) const { return dims_[axis]; }

    /// Product of all dims; 1 for rank 0. Saturation is not a concern here:
    /// tensors cap their element count at construction.
    std::int64_t element_count() const {
        std::int64_t n = 1;
        for (std::int64_t d : dims_) {
            if (d == 0) return 0;
            if (n > (std::int64_t{1} << 62) / d) {
                throw ShapeMismatchError("shape element count overflows");
            }
            n *= d;
        }
        return n;
    }

    bool operator==(const Shape& other) const = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(dims_[i]);
        }
        return s + "]";
    }

private:
    std::vector<std::int64_t> dims_;
};

}  // namespace rdft
